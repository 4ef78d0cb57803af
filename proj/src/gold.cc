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

#include "bentkit/constructions.h"

#include <numeric>

#include "bentkit/error.h"

namespace bentkit {
namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Inverse of a modulo m, gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw InvalidArgument("value is not invertible modulo m");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint32_t gcd_kn(const FieldCtx& ctx, std::uint32_t k) {
  if (k == 0) throw InvalidArgument("k must be positive");
  return std::gcd(k, ctx.n());
}

void check_nonzero(const FieldCtx& ctx, ElemIndex a, const char* name) {
  ctx.check_index(a);
  if (a == 0) throw InvalidArgument(std::string(name) + " must be nonzero");
}

// a x^(p^k + 1).
ElemIndex gold_monomial(const FieldCtx& ctx, ElemIndex a, ElemIndex x,
                        std::uint32_t k) {
  return ctx.mul(a, ctx.mul(ctx.frobenius(x, k), x));
}

std::string elem_str(ElemIndex e) { return std::to_string(e); }

}  // namespace

ElemIndex gold_root(const FieldCtx& ctx, ElemIndex a, std::uint32_t k) {
  check_nonzero(ctx, a, "a");
  const std::uint32_t d = gcd_kn(ctx, k);
  if (ctx.p() != 2 || (ctx.n() / d) % 2 == 0) {
    throw InvalidArgument("c^(2^k+1) = a is uniquely solvable only for p = 2 "
                          "and n/d odd");
  }
  const std::uint64_t order = ctx.size() - 1;
  const std::uint64_t e = inverse_mod((ipow(2, k) + 1) % order, order);
  const ElemIndex c = ctx.pow(a, static_cast<std::int64_t>(e));
  if (ctx.pow(c, static_cast<std::int64_t>(ipow(2, k) + 1)) != a) {
    throw InternalInconsistency("c^(2^k+1) != a after inversion");
  }
  return c;
}

std::optional<ElemIndex> gold_kernel_element(const FieldCtx& ctx, ElemIndex a,
                                             std::uint32_t k) {
  for (ElemIndex c : solve_linearized(ctx, a, k, 0)) {
    if (c != 0) return c;
  }
  return std::nullopt;
}

bool gold_special_branch(const FieldCtx& ctx, ElemIndex a, std::uint32_t k) {
  check_nonzero(ctx, a, "a");
  const std::uint32_t d = gcd_kn(ctx, k);
  const std::uint32_t n = ctx.n();
  if ((n / d) % 2 == 1) return false;
  const std::uint32_t m = n / 2;
  const std::uint64_t e = (ctx.size() - 1) / (ipow(ctx.p(), d) + 1);
  const ElemIndex lhs = ctx.pow(a, static_cast<std::int64_t>(e));
  const ElemIndex rhs = (m / d) % 2 == 1 ? ctx.neg(1) : 1;
  return lhs == rhs;
}

GoldValue gold_walsh_closed(const FieldCtx& ctx, ElemIndex a, std::uint32_t k,
                            ElemIndex b) {
  check_nonzero(ctx, a, "a");
  ctx.check_index(b);
  const std::uint32_t p = ctx.p();
  const std::uint32_t n = ctx.n();
  const std::uint32_t d = gcd_kn(ctx, k);
  if ((n / d) % 2 == 1) {
    if (p != 2) {
      throw InvalidArgument("no closed form for odd p with n/d odd");
    }
    const ElemIndex c = gold_root(ctx, a, k);
    if (ctx.trace_to(ctx.div(b, c), d) != 1) return GoldZero{};
    return GoldMagnitudeOnly{Integer(1) << ((n + d) / 2)};
  }
  const std::uint32_t m = n / 2;
  const ElemIndex rhs = ctx.neg(ctx.frobenius(b, k));
  Integer magnitude = Integer(ipow(p, m));
  int sign = (m / d) % 2 == 1 ? -1 : 1;
  if (gold_special_branch(ctx, a, k)) {
    const auto c = gold_kernel_element(ctx, a, k);
    if (!c) throw InternalInconsistency("special branch without a kernel");
    const ElemIndex w = ctx.mul(a, ctx.frobenius(*c, k));
    if (ctx.trace_to(ctx.div(b, w), 2 * d) != 0) return GoldZero{};
    magnitude *= Integer(ipow(p, d));
    sign = -sign;
  }
  const auto sols = solve_linearized(ctx, a, k, rhs);
  if (sols.empty()) {
    throw InternalInconsistency("linearized equation for x_0 has no root at b=" +
                                elem_str(b));
  }
  const Fp t = ctx.trace(gold_monomial(ctx, a, sols.front(), k));
  CycInt v(p, sign < 0 ? Integer(-magnitude) : magnitude);
  return v.times_root(-static_cast<std::int64_t>(t));
}

CriterionVerdict thm6_check(const FieldCtx& ctx, ElemIndex a, std::uint32_t k,
                            ElemIndex u, ElemIndex v) {
  if (ctx.p() != 2) throw InvalidArgument("thm6 needs p = 2");
  check_nonzero(ctx, a, "a");
  check_nonzero(ctx, u, "u");
  check_nonzero(ctx, v, "v");
  if (u == v) throw InvalidArgument("thm6 needs u != v");
  const std::uint32_t d = gcd_kn(ctx, k);
  if ((ctx.n() / d) % 2 == 0) {
    throw InvalidArgument("n/d is even; use thm7_check");
  }
  CriterionVerdict r;
  if (d != 2) {
    r.reason = "d = gcd(k, n) = " + std::to_string(d) + ", not 2";
    return r;
  }
  const ElemIndex c = gold_root(ctx, a, k);
  const ElemIndex tu = ctx.trace_to(ctx.div(u, c), 2);
  const ElemIndex tv = ctx.trace_to(ctx.div(v, c), 2);
  const ElemIndex tuv = ctx.trace_to(ctx.div(ctx.add(u, v), c), 2);
  r.bent = tu != 0 && tv != 0 && tuv != 0;
  r.reason = "Tr_2^n(u/c) = " + elem_str(tu) + ", Tr_2^n(v/c) = " +
             elem_str(tv) + ", Tr_2^n((u+v)/c) = " + elem_str(tuv);
  return r;
}

CriterionVerdict thm7_check(const FieldCtx& ctx, ElemIndex a, std::uint32_t k,
                            ElemIndex u, ElemIndex v) {
  check_nonzero(ctx, a, "a");
  check_nonzero(ctx, u, "u");
  check_nonzero(ctx, v, "v");
  const std::uint32_t d = gcd_kn(ctx, k);
  if ((ctx.n() / d) % 2 == 1) {
    throw InvalidArgument("n/d is odd; thm7 needs n/d even");
  }
  CriterionVerdict r;
  if (!gold_special_branch(ctx, a, k)) {
    r.applicable = false;
    r.reason = "hypothesis-not-met: a^((p^n-1)/(p^d+1)) != (-1)^(m/d)";
    return r;
  }
  const auto c = gold_kernel_element(ctx, a, k);
  if (!c) throw InternalInconsistency("special branch without a kernel");
  if (d > 1) {
    r.reason = "d = gcd(k, n) = " + std::to_string(d) + " > 1";
    return r;
  }
  const ElemIndex w = ctx.mul(a, ctx.frobenius(*c, k));
  const ElemIndex tv = ctx.trace_to(ctx.div(v, w), 2);
  const ElemIndex tu = ctx.trace_to(ctx.div(u, w), 2);
  if (tv == 0) {
    r.reason = "Tr_2^n(v/(a c^(p^k))) = 0";
    return r;
  }
  const ElemIndex ratio = ctx.div(tu, tv);
  const bool in_prime = ctx.pow(ratio, ctx.p()) == ratio;
  r.bent = !in_prime;
  r.reason = "Tr_2^n(u/w) / Tr_2^n(v/w) = " + elem_str(ratio) +
             (in_prime ? " lies in F_p" : " lies outside F_p");
  return r;
}

}  // namespace bentkit
