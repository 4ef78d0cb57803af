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

#include <cmath>
#include <numbers>
#include <sstream>

#include "bentkit/error.h"
#include "bentkit/gf.h"

namespace bentkit {
namespace {

std::uint32_t mod_index(std::int64_t j, std::uint32_t p) {
  std::int64_t r = j % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace

CycInt::CycInt(std::uint32_t p) : p_(p), c_(p) {
  if (!is_prime(p)) {
    throw InvalidArgument("cyclotomic ring needs a prime, got " +
                          std::to_string(p));
  }
}

CycInt::CycInt(std::uint32_t p, const Integer& value) : CycInt(p) {
  c_[0] = value;
}

CycInt CycInt::root(std::uint32_t p, std::int64_t j) {
  CycInt r(p);
  r.c_[mod_index(j, p)] = 1;
  r.canonicalize();
  return r;
}

CycInt CycInt::from_counts(std::uint32_t p,
                           std::span<const std::int64_t> counts) {
  CycInt r(p);
  if (counts.size() != p) throw InvalidArgument("count vector length != p");
  const std::int64_t top = counts[p - 1];
  for (std::uint32_t j = 0; j < p; ++j) r.c_[j] = counts[j] - top;
  return r;
}

CycInt CycInt::from_coeffs(std::uint32_t p, std::vector<Integer> coeffs) {
  CycInt r(p);
  if (coeffs.size() != p) throw InvalidArgument("coefficient vector length");
  r.c_ = std::move(coeffs);
  r.canonicalize();
  return r;
}

void CycInt::canonicalize() {
  if (c_[p_ - 1] == 0) return;
  const Integer top = c_[p_ - 1];
  for (auto& v : c_) v -= top;
}

void CycInt::check(const CycInt& o) const {
  if (p_ != o.p_) {
    throw InvalidArgument("cyclotomic integers over different primes (" +
                          std::to_string(p_) + " vs " + std::to_string(o.p_) +
                          ")");
  }
}

bool CycInt::is_zero() const {
  for (const auto& v : c_) {
    if (v != 0) return false;
  }
  return true;
}

bool CycInt::is_integer() const {
  for (std::uint32_t j = 1; j < p_; ++j) {
    if (c_[j] != 0) return false;
  }
  return true;
}

const Integer& CycInt::integer_value() const {
  if (!is_integer()) {
    throw InvalidArgument("not a rational integer: " + to_string());
  }
  return c_[0];
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check(o);
  for (std::uint32_t j = 0; j < p_; ++j) c_[j] += o.c_[j];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check(o);
  for (std::uint32_t j = 0; j < p_; ++j) c_[j] -= o.c_[j];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  *this = *this * o;
  return *this;
}

CycInt& CycInt::operator*=(const Integer& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  CycInt r(a.p_);
  r.add_product(a, b);
  return r;
}

void CycInt::add_product(const CycInt& a, const CycInt& b) {
  check(a);
  check(b);
  for (std::uint32_t i = 0; i < p_; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < p_; ++j) {
      if (b.c_[j] == 0) continue;
      std::uint32_t k = i + j;
      if (k >= p_) k -= p_;
      c_[k] += a.c_[i] * b.c_[j];
    }
  }
  canonicalize();
}

CycInt CycInt::times_root(std::int64_t j) const {
  const std::uint32_t s = mod_index(j, p_);
  CycInt r(p_);
  for (std::uint32_t i = 0; i < p_; ++i) r.c_[(i + s) % p_] = c_[i];
  r.canonicalize();
  return r;
}

CycInt CycInt::conj() const {
  CycInt r(p_);
  for (std::uint32_t i = 0; i < p_; ++i) r.c_[(p_ - i) % p_] = c_[i];
  r.canonicalize();
  return r;
}

CycInt CycInt::div_exact(const Integer& d) const {
  if (d == 0) throw InvalidArgument("division by zero");
  CycInt r(*this);
  for (auto& v : r.c_) {
    if (v % d != 0) {
      throw InvalidArgument(to_string() + " is not divisible by " +
                            d.str());
    }
    v /= d;
  }
  return r;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  os << c_[0];
  for (std::uint32_t j = 1; j + 1 < p_; ++j) {
    os << " + " << c_[j] << "*w";
    if (j > 1) os << "^" << j;
  }
  os << " (p=" << p_ << ")";
  return os.str();
}

std::complex<double> CycInt::approx() const {
  std::complex<double> s = 0;
  for (std::uint32_t j = 0; j < p_; ++j) {
    const double t = 2 * std::numbers::pi * j / p_;
    s += c_[j].convert_to<double>() * std::complex<double>(std::cos(t),
                                                           std::sin(t));
  }
  return s;
}

std::variant<Integer, CycInt> norm_sq(const CycInt& z) {
  CycInt r = z * z.conj();
  if (r.is_integer()) return r.integer_value();
  return r;
}

CycInt gauss_sum(std::uint32_t p) {
  if (p == 2) throw InvalidArgument("Gauss sum needs an odd prime");
  std::vector<std::int64_t> counts(p, 0);
  for (std::uint64_t x = 0; x < p; ++x) ++counts[x * x % p];
  return CycInt::from_counts(p, counts);
}

int eta(std::uint32_t p, std::uint32_t x) {
  PrimeField fp(p);
  x %= p;
  if (x == 0) return 0;
  if (p == 2) return 1;
  return fp.pow(x, (p - 1) / 2) == 1 ? 1 : -1;
}

QuadChar::QuadChar(std::uint32_t p) : p_(p), table_(p, -1) {
  if (p == 2 || !is_prime(p)) {
    throw InvalidArgument("quadratic character needs an odd prime");
  }
  table_[0] = 0;
  for (std::uint64_t x = 1; x < p; ++x) table_[x * x % p] = 1;
}

}  // namespace bentkit
