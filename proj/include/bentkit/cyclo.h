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

#ifndef BENTKIT_CYCLO_H_
#define BENTKIT_CYCLO_H_

// Exact arithmetic in Z[w], w = exp(2*pi*i/p).
//
// Values are stored as p integer coefficients of 1, w, ..., w^(p-1) and kept
// canonical: since 1 + w + ... + w^(p-1) = 0, subtracting the top coefficient
// from every slot makes it zero, and the remaining p - 1 coefficients are
// coordinates in a Z-basis. Equality is coefficient equality.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bentkit {

using Integer = boost::multiprecision::cpp_int;

class CycInt {
 public:
  // The zero element of Z[w] for p = 2.
  CycInt() : CycInt(2) {}
  // Zero. Throws InvalidArgument unless p is prime.
  explicit CycInt(std::uint32_t p);
  CycInt(std::uint32_t p, const Integer& value);

  // w^j for any integer j.
  static CycInt root(std::uint32_t p, std::int64_t j);
  // sum_j counts[j] * w^j; counts.size() must equal p.
  static CycInt from_counts(std::uint32_t p,
                            std::span<const std::int64_t> counts);
  static CycInt from_coeffs(std::uint32_t p, std::vector<Integer> coeffs);

  std::uint32_t p() const { return p_; }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& coeff(std::uint32_t j) const { return c_[j]; }

  bool is_zero() const;
  // True when the value is a rational integer (only c_0 may be nonzero).
  bool is_integer() const;
  // Requires is_integer().
  const Integer& integer_value() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& operator*=(const Integer& s);
  CycInt operator-() const;

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(CycInt a, const Integer& s) { return a *= s; }
  friend CycInt operator*(const Integer& s, CycInt a) { return a *= s; }
  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  // this * w^j.
  CycInt times_root(std::int64_t j) const;
  // Complex conjugation, w -> w^(p-1).
  CycInt conj() const;
  // this / d, throwing InvalidArgument when some coefficient is not a
  // multiple of d (the quotient would leave Z[w]).
  CycInt div_exact(const Integer& d) const;
  // this += a * b without materialising the product.
  void add_product(const CycInt& a, const CycInt& b);

  // "3 + 2*w + -1*w^2 (p=5)".
  std::string to_string() const;
  // Floating-point rendering for debugging output only.
  std::complex<double> approx() const;

 private:
  void check(const CycInt& o) const;
  void canonicalize();

  std::uint32_t p_;
  std::vector<Integer> c_;
};

// z * conj(z), returned as an Integer when it is rational (always the case
// for Walsh coefficients of bent functions) and as a CycInt otherwise.
std::variant<Integer, CycInt> norm_sq(const CycInt& z);

// The quadratic Gauss sum sum_{x in F_p} w^(x^2); G^2 = eta(-1) * p.
// Throws InvalidArgument for p = 2.
CycInt gauss_sum(std::uint32_t p);

// Quadratic character of F_p: 0 at 0, +1 on nonzero squares, -1 otherwise.
int eta(std::uint32_t p, std::uint32_t x);

class QuadChar {
 public:
  // Throws InvalidArgument unless p is an odd prime.
  explicit QuadChar(std::uint32_t p);
  int operator()(std::uint32_t x) const { return table_[x % p_]; }
  std::uint32_t p() const { return p_; }

 private:
  std::uint32_t p_;
  std::vector<int> table_;
};

}  // namespace bentkit

#endif  // BENTKIT_CYCLO_H_
