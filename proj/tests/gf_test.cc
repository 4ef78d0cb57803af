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

#include "bentkit/gf.h"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "bentkit/error.h"
#include "gtest/gtest.h"

namespace bentkit {
namespace {

// Schoolbook product of two elements given as coefficient vectors, reduced
// by the context's modulus. Independent of the log tables.
ElemIndex slow_mul(const FieldCtx& f, ElemIndex a, ElemIndex b) {
  const std::uint32_t p = f.p();
  const std::uint32_t n = f.n();
  auto ca = f.coords(a);
  auto cb = f.coords(b);
  std::vector<std::uint64_t> r(2 * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) r[i + j] += ca[i] * cb[j];
  }
  const auto& m = f.modulus();
  for (std::uint32_t d = 2 * n - 1; d >= n; --d) {
    std::uint64_t lead = r[d] % p;
    r[d] = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      r[d - n + i] += (p - m[i]) * lead;
    }
  }
  std::vector<Fp> c(n);
  for (std::uint32_t i = 0; i < n; ++i) c[i] = r[i] % p;
  return f.from_coords(c);
}

ElemIndex slow_pow(const FieldCtx& f, ElemIndex a, std::uint64_t e) {
  ElemIndex r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = slow_mul(f, r, a);
  return r;
}

TEST(FieldBuild, PrimeFieldOfTwo) {
  auto f = FieldCtx::build(2, 1);
  EXPECT_EQ(f->size(), 2u);
  EXPECT_EQ(f->primitive(), 1u);
  EXPECT_EQ(f->modulus_source(), ModulusSource::kConway);
}

TEST(FieldBuild, F81PrimitiveHasFullOrder) {
  auto f = FieldCtx::build(3, 4);
  ASSERT_EQ(f->size(), 81u);
  ElemIndex y = 1;
  for (int k = 1; k < 80; ++k) {
    y = slow_mul(*f, y, f->primitive());
    EXPECT_NE(y, 1u) << "k=" << k;
  }
  EXPECT_EQ(slow_mul(*f, y, f->primitive()), 1u);
  EXPECT_EQ(f->pow(f->primitive(), 80), 1u);
}

TEST(FieldBuild, F64UsesConwayModulus) {
  auto f = FieldCtx::build(2, 6);
  EXPECT_EQ(f->modulus_string(), "x^6 + x^4 + x^3 + x + 1");
  EXPECT_EQ(f->primitive(), 2u);  // residue of x
  EXPECT_EQ(f->modulus_source(), ModulusSource::kConway);
}

TEST(FieldBuild, TableArithmeticMatchesSchoolbook) {
  for (auto [p, n] : {std::pair{2u, 6u}, {3u, 4u}, {5u, 2u}, {7u, 2u},
                      {3u, 3u}}) {
    auto f = FieldCtx::build(p, n);
    for (ElemIndex a = 0; a < f->size(); ++a) {
      for (ElemIndex b = 0; b < f->size(); ++b) {
        ASSERT_EQ(f->mul(a, b), slow_mul(*f, a, b)) << p << "^" << n;
      }
    }
  }
}

// Every bundled modulus must be irreducible (checked when the context is
// built), have x primitive, and satisfy the compatibility condition: for
// d | n the norm xi^((p^n-1)/(p^d-1)) is a root of the degree-d entry.
TEST(FieldBuild, BundledModuliAreConsistent) {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> maxima = {
      {2, 20}, {3, 12}, {5, 8}, {7, 7}, {11, 5}, {13, 5}};
  for (auto [p, nmax] : maxima) {
    for (std::uint32_t n = 1; n <= nmax; ++n) {
      SCOPED_TRACE(std::to_string(p) + "^" + std::to_string(n));
      ASSERT_TRUE(conway_polynomial(p, n).has_value());
      auto f = FieldCtx::build(p, n);
      EXPECT_EQ(f->modulus(), *conway_polynomial(p, n));
      const ElemIndex x = n == 1 ? f->prime_field().neg(f->modulus()[0]) : p;
      EXPECT_EQ(f->primitive(), x);
      if (f->size() > 100000) continue;
      for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::uint64_t pd = 1;
        for (std::uint32_t i = 0; i < d; ++i) pd *= p;
        const ElemIndex r = f->pow(f->primitive(), (f->size() - 1) / (pd - 1));
        const auto small = *conway_polynomial(p, d);
        ElemIndex acc = 0;
        for (std::size_t i = small.size(); i-- > 0;) {
          acc = f->add(f->mul(acc, r), small[i]);
        }
        EXPECT_EQ(acc, 0u) << "d=" << d;
      }
    }
  }
}

TEST(FieldBuild, FallbackModulusIsSmallestIrreducible) {
  auto f = FieldCtx::build(17, 2);
  EXPECT_EQ(f->modulus_source(), ModulusSource::kSmallestIrreducible);
  const auto& m = f->modulus();
  auto has_root = [](std::uint32_t c0, std::uint32_t c1) {
    for (std::uint32_t r = 0; r < 17; ++r) {
      if ((r * r + c1 * r + c0) % 17 == 0) return true;
    }
    return false;
  };
  EXPECT_FALSE(has_root(m[0], m[1]));
  const std::uint32_t chosen = m[0] + 17 * m[1];
  for (std::uint32_t idx = 0; idx < chosen; ++idx) {
    EXPECT_TRUE(has_root(idx % 17, idx / 17)) << idx;
  }
  // The primitive element really generates.
  std::set<ElemIndex> seen;
  ElemIndex y = 1;
  for (std::uint32_t k = 0; k + 1 < f->size(); ++k) {
    seen.insert(y);
    y = slow_mul(*f, y, f->primitive());
  }
  EXPECT_EQ(seen.size(), f->size() - 1);
}

TEST(FieldBuild, RejectsBadParameters) {
  EXPECT_THROW(FieldCtx::build(4, 2), InvalidArgument);
  EXPECT_THROW(FieldCtx::build(2, 0), InvalidArgument);
  EXPECT_THROW(FieldCtx::build(2, 21), InvalidArgument);
  EXPECT_THROW(FieldCtx::build(2, std::vector<Fp>{1, 0, 1}), InvalidArgument);
  EXPECT_THROW(FieldCtx::build(3, std::vector<Fp>{1, 0, 2}), InvalidArgument);
}

TEST(FieldBuild, ExplicitModulusAndGenerator) {
  // x^2 + 1 is irreducible over F_3 but x has order 4, so the generator
  // falls back to the smallest primitive index.
  auto f = FieldCtx::build(3, std::vector<Fp>{1, 0, 1});
  EXPECT_EQ(f->modulus_source(), ModulusSource::kExplicit);
  EXPECT_NE(f->primitive(), 3u);
  EXPECT_EQ(f->pow(f->primitive(), 4) == 1, false);
  EXPECT_THROW(FieldCtx::build(3, std::vector<Fp>{1, 0, 1}, 3),
               InvalidArgument);
}

TEST(FieldArith, Laws) {
  auto f = FieldCtx::build(3, 4);
  const ElemIndex q = f->size();
  for (ElemIndex x = 0; x < q; ++x) {
    EXPECT_EQ(f->add(x, f->neg(x)), 0u);
    if (x != 0) {
      EXPECT_EQ(f->mul(x, f->inv(x)), 1u);
    }
  }
  EXPECT_EQ(f->mul(f->primitive(), f->pow(f->primitive(), q - 2)), 1u);
  EXPECT_EQ(slow_pow(*f, f->primitive(), 80), 1u);
  EXPECT_THROW(f->inv(0), InvalidArgument);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    ElemIndex a = rng() % q, b = rng() % q, c = rng() % q;
    EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    EXPECT_EQ(f->add(a, f->add(b, c)), f->add(f->add(a, b), c));
    EXPECT_EQ(f->sub(a, b), f->add(a, f->neg(b)));
    std::int64_t e = static_cast<std::int64_t>(rng() % 300) - 150;
    if (a != 0) {
      EXPECT_EQ(f->pow(a, e), f->exp(f->log(a) * e));
    }
  }
}

TEST(FieldArith, BoundElements) {
  auto f = FieldCtx::build(2, 6);
  auto g = FieldCtx::build(2, 6);
  FieldElem a = f->xi(5);
  FieldElem b = f->xi(60);
  EXPECT_EQ((a * b), f->xi(65 % 63));
  EXPECT_EQ((a / a), f->one());
  EXPECT_EQ((a - a), f->zero());
  EXPECT_EQ(a.pow(-5) * a.pow(5), f->one());
  EXPECT_EQ(a.pow(-1), a.inv());
  EXPECT_THROW(a + g->xi(5), ContextMismatch);
  EXPECT_THROW(f->zero().inv(), InvalidArgument);
}

TEST(Trace, LinearFrobeniusInvariantAndBalanced) {
  for (auto [p, n] : {std::pair{2u, 6u}, {3u, 4u}, {5u, 2u}, {2u, 8u},
                      {3u, 5u}}) {
    auto f = FieldCtx::build(p, n);
    std::vector<int> hist(p, 0);
    for (ElemIndex x = 0; x < f->size(); ++x) {
      ++hist[f->trace(x)];
      EXPECT_EQ(f->trace(f->frobenius(x, 1)), f->trace(x));
      // Direct definition.
      ElemIndex s = 0, y = x;
      for (std::uint32_t i = 0; i < n; ++i) {
        s = f->add(s, y);
        y = slow_pow(*f, y, p);
      }
      EXPECT_EQ(s, f->trace(x));
      for (ElemIndex z = 0; z < f->size(); z += 7) {
        EXPECT_EQ(f->trace(f->add(x, z)),
                  f->prime_field().add(f->trace(x), f->trace(z)));
      }
    }
    for (auto h : hist) EXPECT_EQ(h, static_cast<int>(f->size() / p));
  }
}

TEST(Trace, BinarySignSumVanishes) {
  auto f = FieldCtx::build(2, 6);
  int s = 0;
  for (ElemIndex x = 0; x < 64; ++x) s += f->trace(x) ? -1 : 1;
  EXPECT_EQ(s, 0);
}

TEST(Trace, SubfieldAndTransitivity) {
  for (auto [p, n] : {std::pair{2u, 6u}, {3u, 4u}, {2u, 8u}, {2u, 12u}}) {
    auto f = FieldCtx::build(p, n);
    for (std::uint32_t k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      for (ElemIndex x = 0; x < f->size(); ++x) {
        ElemIndex t = f->trace_to(x, k);
        EXPECT_TRUE(f->in_subfield(t, k));
        // Tr_1^n = Tr_1^k o Tr_k^n, with Tr_1^k computed inside the field.
        ElemIndex s = 0, y = t;
        for (std::uint32_t i = 0; i < k; ++i) {
          s = f->add(s, y);
          y = f->frobenius(y, 1);
        }
        ASSERT_EQ(s, f->trace(x));
      }
    }
    EXPECT_THROW(f->trace_to(1, n + 1), InvalidArgument);
  }
  auto f = FieldCtx::build(3, 4);
  for (ElemIndex x = 0; x < f->size(); ++x) {
    ElemIndex y = f->trace_to(x, 2);
    EXPECT_EQ(slow_pow(*f, y, 9), y);
  }
  EXPECT_EQ(trace_k(f->zero(), 2), f->zero());
}

TEST(Subfield, EmbeddingIsHomomorphism) {
  auto big = FieldCtx::build(3, 4);
  auto small = FieldCtx::build(3, 2);
  SubfieldMap m(*big, small);
  for (ElemIndex a = 0; a < 9; ++a) {
    EXPECT_TRUE(big->in_subfield(m.embed(a), 2));
    EXPECT_EQ(m.coerce(m.embed(a)), a);
    for (ElemIndex b = 0; b < 9; ++b) {
      EXPECT_EQ(m.embed(small->add(a, b)), big->add(m.embed(a), m.embed(b)));
      EXPECT_EQ(m.embed(small->mul(a, b)), big->mul(m.embed(a), m.embed(b)));
    }
  }
  EXPECT_THROW(m.coerce(big->primitive()), InvalidArgument);
  // Prime-field constants embed as themselves.
  for (ElemIndex c = 0; c < 3; ++c) EXPECT_EQ(m.embed(c), c);
}

TEST(Linearized, SolutionsSatisfyEquation) {
  for (auto [p, n] : {std::pair{3u, 4u}, {2u, 6u}, {2u, 8u}, {5u, 2u}}) {
    auto f = FieldCtx::build(p, n);
    for (std::uint32_t k = 1; k < n; ++k) {
      for (ElemIndex a = 1; a < f->size(); a += 5) {
        auto kernel = solve_linearized(*f, a, k, 0);
        ASSERT_FALSE(kernel.empty());
        EXPECT_EQ(kernel.front(), 0u);
        // Size is a power of p.
        std::size_t s = kernel.size();
        while (s % p == 0) s /= p;
        EXPECT_EQ(s, 1u);
        // Brute force agrees.
        std::vector<ElemIndex> brute;
        const ElemIndex ak = f->frobenius(a, k);
        for (ElemIndex x = 0; x < f->size(); ++x) {
          if (f->add(f->mul(ak, f->frobenius(x, 2 * k)), f->mul(a, x)) == 0) {
            brute.push_back(x);
          }
        }
        EXPECT_EQ(kernel, brute);
        for (ElemIndex rhs = 0; rhs < f->size(); rhs += 11) {
          for (ElemIndex x : solve_linearized(*f, a, k, rhs)) {
            EXPECT_EQ(f->add(f->mul(ak, f->frobenius(x, 2 * k)), f->mul(a, x)),
                      rhs);
          }
        }
      }
    }
    EXPECT_THROW(solve_linearized(*f, 0, 1, 0), InvalidArgument);
  }
}

TEST(Linearized, HomogeneousSolutionsWithEighthPowerMinusOne) {
  // In F_81 with a = 1, k = 1: every c with c^8 = -1 solves
  // c^9 + c = 0.
  auto f = FieldCtx::build(3, 4);
  auto sols = solve_linearized(*f, 1, 1, 0);
  int found = 0;
  for (ElemIndex c = 1; c < 81; ++c) {
    if (f->pow(c, 8) == f->neg(1)) {
      ++found;
      EXPECT_TRUE(std::binary_search(sols.begin(), sols.end(), c));
    }
  }
  EXPECT_EQ(found, 8);
  EXPECT_EQ(sols.size(), 9u);
}

TEST(LinearAlgebra, RankAndSpan) {
  auto f = FieldCtx::build(2, 6);
  std::vector<ElemIndex> indep = {1, 2, 4};
  EXPECT_EQ(span_rank(*f, indep), 3u);
  std::vector<ElemIndex> dep = {1, 2, 3};
  EXPECT_EQ(span_rank(*f, dep), 2u);
}

TEST(FieldSpec, Parses) {
  auto f = parse_field_spec("3^4");
  EXPECT_EQ(f->name(), "3^4");
  auto g = parse_field_spec("2^6/1,0,1,1,0,1,1");
  EXPECT_EQ(g->modulus(), FieldCtx::build(2, 6)->modulus());
  EXPECT_EQ(g->modulus_source(), ModulusSource::kExplicit);
  EXPECT_EQ(parse_field_spec("7")->size(), 7u);
  EXPECT_THROW(parse_field_spec("4^2"), ParseError);
  EXPECT_THROW(parse_field_spec("2^6/1,0,1"), ParseError);
  EXPECT_THROW(parse_field_spec("2^6/1,0,0,0,0,0,1"), ParseError);
  EXPECT_THROW(parse_field_spec("x^2"), ParseError);
  EXPECT_THROW(parse_field_spec("2^30"), ParseError);
}

}  // namespace
}  // namespace bentkit
