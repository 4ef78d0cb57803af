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

#ifndef BENTKIT_GF_H_
#define BENTKIT_GF_H_

// Arithmetic in F_{p^n} for desk-scale fields (p^n <= 2^20).
//
// Elements are addressed by their index: the base-p integer whose digits are
// the coefficients of the residue polynomial, least significant digit first.
// Index 0 is zero and index c < p is the prime-field constant c. Products go
// through log/antilog tables keyed by a fixed primitive element xi.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace bentkit {

using ElemIndex = std::uint32_t;
// A value of the prime field F_p, always reduced into [0, p).
using Fp = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t v);
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

// Modular arithmetic in F_p.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Fp reduce(std::int64_t v) const;
  Fp add(Fp a, Fp b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
  Fp mul(Fp a, Fp b) const {
    return static_cast<Fp>(std::uint64_t{a} * b % p_);
  }
  Fp pow(Fp a, std::uint64_t e) const;
  // Throws InvalidArgument on zero.
  Fp inv(Fp a) const;
  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

 private:
  std::uint32_t p_;
};

enum class ModulusSource { kConway, kSmallestIrreducible, kExplicit };

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// A field element bound to its context. The context must outlive it.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldCtx* ctx, ElemIndex index) : ctx_(ctx), index_(index) {}

  const FieldCtx* ctx() const { return ctx_; }
  ElemIndex index() const { return index_; }
  bool is_zero() const { return index_ == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  // Throws InvalidArgument when o is zero.
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem pow(std::int64_t e) const;
  // Throws InvalidArgument on zero.
  FieldElem inv() const;

  bool operator==(const FieldElem& o) const {
    return ctx_ == o.ctx_ && index_ == o.index_;
  }

 private:
  const FieldCtx* check(const FieldElem& o) const;

  const FieldCtx* ctx_ = nullptr;
  ElemIndex index_ = 0;
};

class FieldCtx {
  struct Token {};

 public:
  // Conway modulus when bundled, else the smallest monic irreducible.
  // Throws InvalidArgument if p is not prime, n == 0 or p^n > kMaxFieldSize.
  static FieldPtr build(std::uint32_t p, std::uint32_t n);
  // Explicit monic modulus, coefficients least significant first (n + 1 of
  // them). The generator defaults to the residue of x when it is primitive.
  static FieldPtr build(std::uint32_t p, std::vector<Fp> modulus,
                        std::optional<ElemIndex> generator = std::nullopt);

  FieldCtx(Token, std::uint32_t p, std::vector<Fp> modulus,
           ModulusSource source, std::optional<ElemIndex> generator);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t size() const { return q_; }
  const PrimeField& prime_field() const { return fp_; }
  // Least significant coefficient first; the last entry is 1.
  const std::vector<Fp>& modulus() const { return modulus_; }
  ModulusSource modulus_source() const { return source_; }
  ElemIndex primitive() const { return primitive_; }
  // "x^4 + 2*x^3 + 2".
  std::string modulus_string() const;
  // "3^4".
  std::string name() const;

  FieldElem elem(ElemIndex i) const;
  FieldElem zero() const { return elem(0); }
  FieldElem one() const { return elem(1); }
  // xi^k for any integer k.
  FieldElem xi(std::int64_t k) const { return elem(exp(k)); }
  std::vector<FieldElem> elements() const;

  // Index-level arithmetic for inner loops; arguments must be < size().
  ElemIndex add(ElemIndex a, ElemIndex b) const;
  ElemIndex sub(ElemIndex a, ElemIndex b) const { return add(a, neg_[b]); }
  ElemIndex neg(ElemIndex a) const { return neg_[a]; }
  ElemIndex mul(ElemIndex a, ElemIndex b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  ElemIndex inv(ElemIndex a) const;
  ElemIndex div(ElemIndex a, ElemIndex b) const { return mul(a, inv(b)); }
  ElemIndex pow(ElemIndex a, std::int64_t e) const;
  // a^(p^i).
  ElemIndex frobenius(ElemIndex a, std::uint32_t i) const;
  // Scalar multiple c*a for c in F_p.
  ElemIndex scale(Fp c, ElemIndex a) const { return mul(c, a); }
  ElemIndex exp(std::int64_t k) const;
  // Discrete log base xi. Throws InvalidArgument on zero.
  std::uint32_t log(ElemIndex a) const;

  // Absolute trace Tr_1^n, as a prime-field value.
  Fp trace(ElemIndex a) const { return trace_[a]; }
  // Tr_k^n(a) = sum_{i < n/k} a^(p^(ik)). Throws InvalidArgument if k does
  // not divide n.
  ElemIndex trace_to(ElemIndex a, std::uint32_t k) const;
  bool in_subfield(ElemIndex a, std::uint32_t k) const;

  std::vector<Fp> coords(ElemIndex a) const;
  ElemIndex from_coords(std::span<const Fp> c) const;
  Fp coord(ElemIndex a, std::uint32_t i) const {
    return (a / digit_weight_[i]) % p_;
  }

  void check_index(ElemIndex a) const;

 private:
  void build_tables();

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  PrimeField fp_;
  std::vector<Fp> modulus_;
  ModulusSource source_;
  ElemIndex primitive_ = 0;
  std::vector<std::uint32_t> digit_weight_;
  std::vector<ElemIndex> exp_;  // 2 * (q - 1) entries
  std::vector<std::uint32_t> log_;
  std::vector<ElemIndex> neg_;
  std::vector<Fp> trace_;
};

// Free-function spellings of the field operations on bound elements.
FieldElem trace_k(const FieldElem& x, std::uint32_t k);
Fp trace(const FieldElem& x);

// Bijection between the subfield F_{p^k} of a field and a standalone
// context for F_{p^k}, built by locating a root of the small field's modulus.
class SubfieldMap {
 public:
  SubfieldMap(const FieldCtx& big, FieldPtr small);

  const FieldCtx& small() const { return *small_; }
  ElemIndex embed(ElemIndex small_index) const { return embed_[small_index]; }
  // Throws InvalidArgument when big_index lies outside the subfield.
  ElemIndex coerce(ElemIndex big_index) const;

 private:
  const FieldCtx* big_;
  FieldPtr small_;
  std::vector<ElemIndex> embed_;
  std::unordered_map<ElemIndex, ElemIndex> inverse_;
};

// Solutions of the F_p-linear system M y = rhs (M given row-major, rows x
// cols). `particular` is empty when the system is inconsistent.
struct LinearSolution {
  std::optional<std::vector<Fp>> particular;
  std::vector<std::vector<Fp>> kernel;
};
LinearSolution solve_mod_p(const PrimeField& fp,
                           std::vector<std::vector<Fp>> matrix,
                           std::vector<Fp> rhs);
std::uint32_t rank_mod_p(const PrimeField& fp,
                         std::vector<std::vector<Fp>> rows);

// Dimension over F_p of the span of the given elements.
std::uint32_t span_rank(const FieldCtx& ctx, std::span<const ElemIndex> elems);

// All x with a^(p^k) x^(p^(2k)) + a x = rhs, sorted by index.
// Throws InvalidArgument when a is zero.
std::vector<ElemIndex> solve_linearized(const FieldCtx& ctx, ElemIndex a,
                                        std::uint32_t k, ElemIndex rhs);
std::vector<FieldElem> solve_linearized(const FieldElem& a, std::uint32_t k,
                                        const FieldElem& rhs);

// "p^n" or "p^n/c_n,...,c_0" (explicit modulus, most significant first).
FieldPtr parse_field_spec(const std::string& spec,
                          std::optional<ElemIndex> generator = std::nullopt);

// Bundled Conway polynomial for (p, n), least significant coefficient first.
std::optional<std::vector<Fp>> conway_polynomial(std::uint32_t p,
                                                 std::uint32_t n);

}  // namespace bentkit

#endif  // BENTKIT_GF_H_
