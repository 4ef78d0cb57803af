// Copyright 2026 The Bentkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bentkit/cyclo.h"

#include <random>
#include <vector>

#include "bentkit/error.h"
#include "gtest/gtest.h"

namespace bentkit {
namespace {

CycInt random_cyc(std::uint32_t p, std::mt19937_64& rng) {
  std::vector<Integer> c(p);
  for (auto& v : c) v = static_cast<int>(rng() % 41) - 20;
  return CycInt::from_coeffs(p, std::move(c));
}

TEST(CycInt, CyclotomicRelation) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    CycInt s(p);
    for (std::uint32_t j = 0; j < p; ++j) s += CycInt::root(p, j);
    EXPECT_TRUE(s.is_zero()) << p;
  }
}

TEST(CycInt, RootLaw) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int a = -3; a < 2 * static_cast<int>(p); ++a) {
      for (int b = 0; b < static_cast<int>(p); ++b) {
        EXPECT_EQ(CycInt::root(p, a) * CycInt::root(p, b),
                  CycInt::root(p, a + b));
      }
    }
  }
}

TEST(CycInt, CanonicalTopCoefficientIsZero) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int i = 0; i < 50; ++i) {
      auto z = random_cyc(p, rng) * random_cyc(p, rng);
      EXPECT_EQ(z.coeff(p - 1), 0);
    }
  }
}

TEST(CycInt, ThreeFactorsOfThree) {
  const CycInt one(3, 1);
  CycInt a = one - CycInt::root(3, 1);
  CycInt b = one - CycInt::root(3, 2);
  EXPECT_EQ(a * b, CycInt(3, 3));
}

TEST(CycInt, RingAxioms) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int i = 0; i < 100; ++i) {
      auto x = random_cyc(p, rng), y = random_cyc(p, rng),
           z = random_cyc(p, rng);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x - x, CycInt(p));
      EXPECT_EQ(x * Integer(3), x + x + x);
      auto w = x;
      w.add_product(y, z);
      EXPECT_EQ(w, x + y * z);
      EXPECT_EQ(x.times_root(2), x * CycInt::root(p, 2));
    }
  }
}

TEST(CycInt, MismatchedPrimeRejected) {
  EXPECT_THROW(CycInt(3, 1) + CycInt(5, 1), InvalidArgument);
  EXPECT_THROW(CycInt(4), InvalidArgument);
}

TEST(CycInt, Conjugation) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    EXPECT_EQ(CycInt(p, 9).conj(), CycInt(p, 9));
    EXPECT_EQ(CycInt::root(p, 1).conj(), CycInt::root(p, p - 1));
    for (int i = 0; i < 50; ++i) {
      auto z = random_cyc(p, rng);
      EXPECT_EQ(z.conj().conj(), z);
    }
  }
}

TEST(CycInt, NormSquared) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t j = 0; j < p; ++j) {
      EXPECT_EQ(std::get<Integer>(norm_sq(CycInt::root(p, j))), 1);
    }
    EXPECT_EQ(std::get<Integer>(norm_sq(CycInt(p))), 0);
  }
  auto n = norm_sq(CycInt(3, 1) - CycInt::root(3, 1));
  EXPECT_EQ(std::get<Integer>(n), 3);
  // 1 + 2w over p = 5 has a norm outside Z.
  auto z = CycInt(5, 1) + CycInt::root(5, 1) * Integer(2);
  EXPECT_TRUE(std::holds_alternative<CycInt>(norm_sq(z)));
}

TEST(CycInt, NormIsMultiplicative) {
  std::mt19937_64 rng(9);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int i = 0; i < 200; ++i) {
      // Products of roots, integers and Gauss sums have rational norm.
      CycInt z = CycInt::root(p, rng() % p) *
                 Integer(static_cast<int>(rng() % 9) - 4);
      CycInt w = gauss_sum(p).times_root(rng() % p);
      auto nz = norm_sq(z), nw = norm_sq(w), nzw = norm_sq(z * w);
      ASSERT_TRUE(std::holds_alternative<Integer>(nzw));
      EXPECT_EQ(std::get<Integer>(nzw),
                std::get<Integer>(nz) * std::get<Integer>(nw));
    }
    for (int i = 0; i < 200; ++i) {
      auto z = random_cyc(p, rng), w = random_cyc(p, rng);
      auto nz = norm_sq(z), nw = norm_sq(w);
      if (std::holds_alternative<Integer>(nz) &&
          std::holds_alternative<Integer>(nw)) {
        EXPECT_EQ(std::get<Integer>(norm_sq(z * w)),
                  std::get<Integer>(nz) * std::get<Integer>(nw));
      }
    }
  }
}

TEST(GaussSum, ThreeIsOnePlusTwoOmega) {
  CycInt g = gauss_sum(3);
  EXPECT_EQ(g, CycInt(3, 1) + CycInt::root(3, 1) * Integer(2));
  EXPECT_EQ(g * g, CycInt(3, -3));
}

TEST(GaussSum, SquareIsSignedPrime) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    CycInt g = gauss_sum(p);
    const int sign = p % 4 == 1 ? 1 : -1;
    EXPECT_EQ(g * g, CycInt(p, sign * static_cast<int>(p))) << p;
    EXPECT_EQ(g * g, CycInt(p, eta(p, p - 1) * static_cast<int>(p)));
  }
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    EXPECT_EQ(gauss_sum(p).conj() * gauss_sum(p), CycInt(p, p));
  }
  EXPECT_EQ(gauss_sum(5) * gauss_sum(5), CycInt(5, 5));
  EXPECT_THROW(gauss_sum(2), InvalidArgument);
}

TEST(QuadraticCharacter, Values) {
  EXPECT_EQ(eta(7, 1), 1);
  EXPECT_EQ(eta(3, 2), -1);
  EXPECT_EQ(eta(5, 4), 1);
  EXPECT_EQ(eta(5, 0), 0);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    QuadChar chi(p);
    for (std::uint32_t x = 0; x < p; ++x) {
      EXPECT_EQ(chi(x), eta(p, x));
      for (std::uint32_t y = 1; y < p; ++y) {
        if (x != 0) {
          EXPECT_EQ(chi(x * y % p), chi(x) * chi(y));
        }
      }
    }
  }
  EXPECT_THROW(QuadChar(2), InvalidArgument);
}

TEST(CycInt, ExactDivision) {
  CycInt z = CycInt::root(5, 2) * Integer(6);
  EXPECT_EQ(z.div_exact(3), CycInt::root(5, 2) * Integer(2));
  EXPECT_THROW(z.div_exact(4), InvalidArgument);
}

TEST(CycInt, Rendering) {
  EXPECT_EQ(gauss_sum(3).to_string(), "1 + 2*w (p=3)");
  EXPECT_EQ(CycInt(5, 7).to_string(), "7 + 0*w + 0*w^2 + 0*w^3 (p=5)");
  EXPECT_NEAR(gauss_sum(5).approx().real(), std::sqrt(5.0), 1e-9);
}

}  // namespace
}  // namespace bentkit
