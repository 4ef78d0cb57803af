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

#include "bentkit/func.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bentkit/error.h"

namespace bentkit {

PFunc::PFunc(FieldPtr ctx, std::vector<Fp> values)
    : ctx_(std::move(ctx)), values_(std::move(values)) {
  if (!ctx_) throw InvalidArgument("function without a field");
  if (values_.size() != ctx_->size()) {
    throw InvalidArgument("value table has " + std::to_string(values_.size()) +
                          " entries, field has " +
                          std::to_string(ctx_->size()));
  }
  for (Fp v : values_) {
    if (v >= ctx_->p()) throw InvalidArgument("function value out of F_p");
  }
}

PFunc PFunc::zero(FieldPtr ctx) {
  const auto q = ctx->size();
  return PFunc(std::move(ctx), std::vector<Fp>(q, 0));
}

PFunc PFunc::from_fn(FieldPtr ctx, const std::function<Fp(ElemIndex)>& fn) {
  std::vector<Fp> v(ctx->size());
  for (ElemIndex x = 0; x < ctx->size(); ++x) v[x] = fn(x);
  return PFunc(std::move(ctx), std::move(v));
}

void PFunc::check_same_field(const PFunc& o) const {
  if (ctx_ != o.ctx_) {
    throw ContextMismatch("functions over different field contexts");
  }
}

PFunc PFunc::operator+(const PFunc& o) const {
  check_same_field(o);
  const auto& fp = ctx_->prime_field();
  std::vector<Fp> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = fp.add(values_[i], o.values_[i]);
  }
  return PFunc(ctx_, std::move(v));
}

PFunc PFunc::operator-(const PFunc& o) const { return *this + (-o); }

PFunc PFunc::operator-() const { return scaled(ctx_->p() - 1); }

PFunc PFunc::scaled(Fp c) const {
  const auto& fp = ctx_->prime_field();
  std::vector<Fp> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fp.mul(c % p(), values_[i]);
  return PFunc(ctx_, std::move(v));
}

PFunc PFunc::plus_constant(Fp c) const {
  const auto& fp = ctx_->prime_field();
  std::vector<Fp> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fp.add(values_[i], c % p());
  return PFunc(ctx_, std::move(v));
}

bool PFunc::is_constant() const {
  return std::all_of(values_.begin(), values_.end(),
                     [&](Fp v) { return v == values_[0]; });
}

// ---------------------------------------------------------------------------
// ReducedPoly

ReducedPoly::ReducedPoly(std::uint32_t p, std::uint32_t arity)
    : p_(p), arity_(arity), fp_(p) {}

ReducedPoly ReducedPoly::product(std::uint32_t p, std::uint32_t arity) {
  ReducedPoly r(p, arity);
  r.add_term(Exponents(arity, 1), 1);
  return r;
}

void ReducedPoly::add_term(const Exponents& e, std::int64_t coeff) {
  if (e.size() != arity_) {
    throw InvalidArgument("monomial has " + std::to_string(e.size()) +
                          " exponents, polynomial arity is " +
                          std::to_string(arity_));
  }
  for (auto v : e) {
    if (v >= p_) {
      throw InvalidArgument("exponent " + std::to_string(v) +
                            " is not reduced modulo x^p = x");
    }
  }
  Fp c = fp_.reduce(coeff);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = fp_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Fp ReducedPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

Fp ReducedPoly::eval(std::span<const Fp> args) const {
  if (args.size() != arity_) {
    throw InvalidArgument("expected " + std::to_string(arity_) +
                          " arguments, got " + std::to_string(args.size()));
  }
  Fp s = 0;
  for (const auto& [e, c] : terms_) {
    Fp m = c;
    for (std::uint32_t i = 0; i < arity_ && m != 0; ++i) {
      if (e[i] != 0) m = fp_.mul(m, fp_.pow(args[i] % p_, e[i]));
    }
    s = fp_.add(s, m);
  }
  return s;
}

std::vector<Fp> ReducedPoly::table() const {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < arity_; ++i) {
    count *= p_;
    if (count > kMaxFieldSize) {
      throw InvalidArgument("polynomial table too large");
    }
  }
  std::vector<Fp> out(count);
  std::vector<Fp> args(arity_, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    out[idx] = eval(args);
    for (std::uint32_t i = 0; i < arity_; ++i) {
      if (++args[i] < p_) break;
      args[i] = 0;
    }
  }
  return out;
}

std::uint32_t ReducedPoly::degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  }
  return d;
}

std::string ReducedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool any = false;
    if (c != 1) {
      os << c;
      any = true;
    }
    for (std::uint32_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (any) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      any = true;
    }
    if (!any) os << c;
  }
  return os.str();
}

Fp eval_reduced(const ReducedPoly& F, std::span<const Fp> args) {
  return F.eval(args);
}

std::uint32_t multivariate_degree(const ReducedPoly& F) { return F.degree(); }

// ---------------------------------------------------------------------------
// Composition

void Form1Spec::validate() const {
  if (F.p() != g.p()) {
    throw InvalidArgument("F is over F_" + std::to_string(F.p()) +
                          " but g maps into F_" + std::to_string(g.p()));
  }
  if (F.arity() != points.size()) {
    throw InvalidArgument("F has arity " + std::to_string(F.arity()) +
                          " but " + std::to_string(points.size()) +
                          " points were given");
  }
  for (ElemIndex u : points) {
    g.field().check_index(u);
    if (u == 0) throw InvalidArgument("points u_i must be nonzero");
  }
}

PFunc compose_form1(const Form1Spec& spec) {
  spec.validate();
  const FieldCtx& ctx = spec.g.field();
  const auto& fp = ctx.prime_field();
  const auto table = spec.F.table();
  const std::uint32_t p = ctx.p();
  std::vector<Fp> v(ctx.size());
  for (ElemIndex x = 0; x < ctx.size(); ++x) {
    std::uint64_t idx = 0;
    for (std::size_t i = spec.points.size(); i-- > 0;) {
      idx = idx * p + ctx.trace(ctx.mul(spec.points[i], x));
    }
    v[x] = fp.add(spec.g(x), table[idx]);
  }
  return PFunc(spec.g.field_ptr(), std::move(v));
}

// ---------------------------------------------------------------------------
// Univariate interpolation and degree

namespace {

// c_k of the interpolating polynomial; see interpolate().
ElemIndex lagrange_coeff(const PFunc& f, std::uint64_t k) {
  const FieldCtx& ctx = f.field();
  const std::uint64_t q = ctx.size();
  if (k == 0) return f(0);
  ElemIndex s = 0;
  if (k == q - 1) {
    for (ElemIndex x = 0; x < q; ++x) s = ctx.add(s, f(x));
    return ctx.neg(s);
  }
  // -sum_{x != 0} f(x) x^(-k), walking x = xi^i.
  const std::int64_t order = q - 1;
  for (std::int64_t i = 0; i < order; ++i) {
    ElemIndex x = ctx.exp(i);
    Fp fx = f(x);
    if (fx == 0) continue;
    s = ctx.add(s, ctx.mul(fx, ctx.exp(-(i * static_cast<std::int64_t>(k) %
                                         order))));
  }
  return ctx.neg(s);
}

}  // namespace

std::vector<ElemIndex> interpolate(const PFunc& f) {
  const std::uint64_t q = f.size();
  std::vector<ElemIndex> c(q);
  for (std::uint64_t k = 0; k < q; ++k) c[k] = lagrange_coeff(f, k);
  return c;
}

ElemIndex eval_univariate(const FieldCtx& ctx,
                          std::span<const ElemIndex> coeffs, ElemIndex x) {
  ElemIndex s = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    s = ctx.add(ctx.mul(s, x), coeffs[k]);
  }
  return s;
}

std::uint32_t digit_sum(std::uint64_t k, std::uint32_t p) {
  std::uint32_t s = 0;
  while (k > 0) {
    s += static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  return s;
}

std::uint32_t univariate_degree(const PFunc& f) {
  const std::uint64_t q = f.size();
  const std::uint32_t p = f.p();
  std::vector<std::uint64_t> ks(q - 1);
  std::iota(ks.begin(), ks.end(), 1);
  std::stable_sort(ks.begin(), ks.end(), [&](auto a, auto b) {
    return digit_sum(a, p) > digit_sum(b, p);
  });
  for (std::uint64_t k : ks) {
    if (lagrange_coeff(f, k) != 0) return digit_sum(k, p);
  }
  return 0;
}

std::uint32_t degree_of_composed(const ReducedPoly& F, const FieldCtx& ctx,
                                 std::span<const ElemIndex> points) {
  if (points.size() != F.arity()) {
    throw InvalidArgument("point count does not match the arity of F");
  }
  if (points.size() > ctx.n()) {
    throw InvalidArgument(std::to_string(points.size()) +
                          " points cannot be independent in F_" + ctx.name());
  }
  if (span_rank(ctx, points) != points.size()) {
    throw InvalidArgument("points are linearly dependent over F_" +
                          std::to_string(ctx.p()));
  }
  return F.degree();
}

// ---------------------------------------------------------------------------
// Builders

PFunc trace_function(FieldPtr ctx, ElemIndex c) {
  ctx->check_index(c);
  const FieldCtx& f = *ctx;
  return PFunc::from_fn(std::move(ctx),
                        [&](ElemIndex x) { return f.trace(f.mul(c, x)); });
}

PFunc gold(FieldPtr ctx, ElemIndex a, std::uint32_t k) {
  ctx->check_index(a);
  const FieldCtx& f = *ctx;
  return PFunc::from_fn(std::move(ctx), [&](ElemIndex x) {
    return f.trace(f.mul(a, f.mul(f.frobenius(x, k), x)));
  });
}

PFunc quadratic(FieldPtr ctx, ElemIndex a) {
  ctx->check_index(a);
  const FieldCtx& f = *ctx;
  return PFunc::from_fn(std::move(ctx), [&](ElemIndex x) {
    return f.trace(f.mul(a, f.mul(x, x)));
  });
}

PFunc trace_terms(FieldPtr ctx, std::span<const TraceTerm> terms) {
  const FieldCtx& f = *ctx;
  for (const auto& t : terms) {
    f.check_index(t.c);
    if (t.k == 0 || f.n() % t.k != 0) {
      throw InvalidArgument("Tr_1^" + std::to_string(t.k) +
                            " needs a subfield of F_" + f.name());
    }
  }
  const std::uint64_t order = f.size() - 1;
  std::vector<Fp> v(f.size(), 0);
  for (ElemIndex x = 0; x < f.size(); ++x) {
    Fp s = 0;
    for (const auto& t : terms) {
      ElemIndex xe = x == 0 ? (t.e == 0 ? 1 : 0)
                            : f.exp(static_cast<std::int64_t>(
                                  std::uint64_t{f.log(x)} * (t.e % order) %
                                  order));
      ElemIndex y = f.mul(t.c, xe);
      if (!f.in_subfield(y, t.k)) {
        throw InvalidArgument("Tr_1^" + std::to_string(t.k) +
                              " argument leaves the subfield at x = #" +
                              std::to_string(x));
      }
      ElemIndex tr = 0;
      ElemIndex z = y;
      for (std::uint32_t i = 0; i < t.k; ++i) {
        tr = f.add(tr, z);
        z = f.frobenius(z, 1);
      }
      if (tr >= f.p()) {
        throw InternalInconsistency("subfield trace left the prime field");
      }
      s = f.prime_field().add(s, tr);
    }
    v[x] = s;
  }
  return PFunc(std::move(ctx), std::move(v));
}

}  // namespace bentkit
