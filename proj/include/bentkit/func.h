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

#ifndef BENTKIT_FUNC_H_
#define BENTKIT_FUNC_H_

// Functions F_{p^n} -> F_p as value tables, reduced multivariate polynomials
// over F_p, composition g(x) + F(Tr(u_1 x), ..., Tr(u_tau x)) and algebraic
// degree.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bentkit/gf.h"

namespace bentkit {

// A total function F_{p^n} -> F_p, indexed by element index.
class PFunc {
 public:
  // Throws InvalidArgument on a wrong length or an entry >= p.
  PFunc(FieldPtr ctx, std::vector<Fp> values);

  static PFunc zero(FieldPtr ctx);
  static PFunc from_fn(FieldPtr ctx,
                       const std::function<Fp(ElemIndex)>& fn);

  const FieldCtx& field() const { return *ctx_; }
  const FieldPtr& field_ptr() const { return ctx_; }
  std::uint32_t p() const { return ctx_->p(); }
  std::uint32_t size() const { return ctx_->size(); }
  Fp operator()(ElemIndex x) const { return values_[x]; }
  const std::vector<Fp>& values() const { return values_; }

  PFunc operator+(const PFunc& o) const;
  PFunc operator-(const PFunc& o) const;
  PFunc operator-() const;
  PFunc scaled(Fp c) const;
  PFunc plus_constant(Fp c) const;
  bool is_constant() const;

  bool operator==(const PFunc& o) const {
    return ctx_ == o.ctx_ && values_ == o.values_;
  }

  // Throws ContextMismatch unless both functions live on the same context.
  void check_same_field(const PFunc& o) const;

 private:
  FieldPtr ctx_;
  std::vector<Fp> values_;
};

using Exponents = std::vector<std::uint32_t>;

// sum_e a(e) prod_i x_i^{e_i} with every e_i < p and no zero a(e).
class ReducedPoly {
 public:
  ReducedPoly(std::uint32_t p, std::uint32_t arity);

  // x_1 x_2 ... x_arity.
  static ReducedPoly product(std::uint32_t p, std::uint32_t arity);

  std::uint32_t p() const { return p_; }
  std::uint32_t arity() const { return arity_; }
  const std::map<Exponents, Fp>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds coeff * x^e. Throws InvalidArgument when e has the wrong length or
  // some e_i >= p.
  void add_term(const Exponents& e, std::int64_t coeff);
  Fp coefficient(const Exponents& e) const;

  Fp eval(std::span<const Fp> args) const;
  // Values on all of F_p^arity; the point (t_1, ..., t_arity) sits at index
  // t_1 + t_2 p + ... + t_arity p^(arity-1).
  std::vector<Fp> table() const;
  std::uint32_t degree() const;

  // "x1*x2 + 2*x1*x3^2"; "0" for the zero polynomial.
  std::string to_string() const;

  bool operator==(const ReducedPoly& o) const {
    return p_ == o.p_ && arity_ == o.arity_ && terms_ == o.terms_;
  }

 private:
  std::uint32_t p_;
  std::uint32_t arity_;
  PrimeField fp_;
  std::map<Exponents, Fp> terms_;
};

Fp eval_reduced(const ReducedPoly& F, std::span<const Fp> args);
std::uint32_t multivariate_degree(const ReducedPoly& F);

// f(x) = g(x) + F(Tr(u_1 x), ..., Tr(u_tau x)).
struct Form1Spec {
  PFunc g;
  ReducedPoly F;
  std::vector<ElemIndex> points;

  // Throws InvalidArgument when the arity and point count differ, a point is
  // zero or out of range, or F lives over a different prime.
  void validate() const;
};

PFunc compose_form1(const Form1Spec& spec);

// Coefficients c_0..c_{q-1} of the unique polynomial of degree < q over
// F_{p^n} agreeing with f, values lifted through the prime subfield.
std::vector<ElemIndex> interpolate(const PFunc& f);
ElemIndex eval_univariate(const FieldCtx& ctx,
                          std::span<const ElemIndex> coeffs, ElemIndex x);
// Max p-ary digit sum over the exponents of the interpolating polynomial.
std::uint32_t univariate_degree(const PFunc& f);
std::uint32_t digit_sum(std::uint64_t k, std::uint32_t p);

// Degree of F(Tr(u_1 x), ..., Tr(u_tau x)) for F_p-independent points.
// Throws InvalidArgument when the points are dependent or tau > n.
std::uint32_t degree_of_composed(const ReducedPoly& F, const FieldCtx& ctx,
                                 std::span<const ElemIndex> points);

// Tr(c x).
PFunc trace_function(FieldPtr ctx, ElemIndex c);
// Tr(a x^(p^k + 1)).
PFunc gold(FieldPtr ctx, ElemIndex a, std::uint32_t k);
// Tr(a x^2).
PFunc quadratic(FieldPtr ctx, ElemIndex a);

// One summand Tr_1^k(c x^e) of a subfield trace expression.
struct TraceTerm {
  std::uint32_t k;
  ElemIndex c;
  std::uint64_t e;
};
// Sum of Tr_1^k(c x^e) terms. Throws InvalidArgument when k does not divide
// n or some c x^e leaves F_{p^k}.
PFunc trace_terms(FieldPtr ctx, std::span<const TraceTerm> terms);

}  // namespace bentkit

#endif  // BENTKIT_FUNC_H_
