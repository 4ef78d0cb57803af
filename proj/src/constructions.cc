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

#include <algorithm>
#include <set>
#include <utility>

#include "bentkit/error.h"

namespace bentkit {
namespace {

CycInt signed_root(std::uint32_t p, const Integer& magnitude, int sign,
                   Fp exponent) {
  CycInt v(p, sign < 0 ? Integer(-magnitude) : magnitude);
  return v.times_root(exponent);
}

Fp fold_exponent(std::uint32_t e, std::uint32_t p) {
  return e == 0 ? 0 : (e - 1) % (p - 1) + 1;
}

std::string var(std::uint32_t i) { return "x" + std::to_string(i + 1); }

// epsilon * sign * P * w^exponent for the instance's field.
CycInt bent_value(const ConstructionInstance& inst, int sign, Fp exponent) {
  const FieldCtx& ctx = inst.field();
  CycInt P = bent_magnitude(ctx.p(), ctx.n());
  if (sign * inst.epsilon < 0) P = -P;
  return P.times_root(exponent);
}

struct PairCoeffs {
  Fp a11 = 0, a22 = 0, a12 = 0, F1 = 0, F2 = 0, F0 = 0;
};

// Reads R as a polynomial of degree <= 2 in x_t1 and x_t2 (t1 may equal t2,
// in which case only a22, F2 and F0 are filled).
std::optional<PairCoeffs> read_pair(const ReducedPoly& R, std::uint32_t t1,
                                    std::uint32_t t2) {
  PairCoeffs c;
  for (const auto& [e, coeff] : R.terms()) {
    std::uint32_t e1 = t1 == t2 ? 0 : e[t1];
    std::uint32_t e2 = e[t2];
    for (std::uint32_t i = 0; i < e.size(); ++i) {
      if (i != t1 && i != t2 && e[i] != 0) return std::nullopt;
    }
    if (e1 + e2 > 2) return std::nullopt;
    if (e1 == 2) c.a11 = coeff;
    if (e2 == 2) c.a22 = coeff;
    if (e1 == 1 && e2 == 1) c.a12 = coeff;
    if (e1 == 1 && e2 == 0) c.F1 = coeff;
    if (e1 == 0 && e2 == 1) c.F2 = coeff;
    if (e1 == 0 && e2 == 0) c.F0 = coeff;
  }
  return c;
}

// Affine coefficients of R over F_2: linear[i] and constant.
std::optional<std::pair<std::vector<Fp>, Fp>> read_affine(
    const ReducedPoly& R) {
  std::vector<Fp> linear(R.arity(), 0);
  Fp constant = 0;
  for (const auto& [e, coeff] : R.terms()) {
    std::uint32_t deg = 0;
    std::uint32_t at = 0;
    for (std::uint32_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) {
        deg += e[i];
        at = i;
      }
    }
    if (deg > 1) return std::nullopt;
    if (deg == 0) {
      constant = coeff;
    } else {
      linear[at] = coeff;
    }
  }
  return std::make_pair(std::move(linear), constant);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> off_diagonal_pairs(
    const DualExpansion& ex) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < ex.tau; ++i) {
    for (std::uint32_t j = i + 1; j < ex.tau; ++j) {
      if (ex.A[i][j] != 0) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

// Indices i with a nonzero entry in row i of A.
std::vector<std::uint32_t> a_support(const DualExpansion& ex) {
  std::vector<std::uint32_t> s;
  for (std::uint32_t i = 0; i < ex.tau; ++i) {
    for (std::uint32_t j = 0; j < ex.tau; ++j) {
      if (ex.A[i][j] != 0) {
        s.push_back(i);
        break;
      }
    }
  }
  return s;
}

NotApplicable na(std::string reason) { return NotApplicable{std::move(reason)}; }

}  // namespace

CycInt lemma3_sum(std::uint32_t p, Fp a, Fp b) {
  if (p == 2) throw InvalidArgument("lemma3_sum needs an odd prime");
  const PrimeField fp(p);
  a %= p;
  b %= p;
  if (a == 0) throw InvalidArgument("lemma3_sum needs a != 0");
  const Fp e = fp.neg(fp.div(fp.mul(b, b), fp.mul(4 % p, a)));
  CycInt G = gauss_sum(p);
  if (eta(p, a) < 0) G = -G;
  return G.times_root(e);
}

CycInt lemma4_sum(std::uint32_t p, Fp a1, Fp a2, Fp a3, Fp a4, Fp a5) {
  if (p == 2) throw InvalidArgument("lemma4_sum needs an odd prime");
  const PrimeField fp(p);
  a1 %= p;
  a2 %= p;
  a3 %= p;
  a4 %= p;
  a5 %= p;
  const Fp four = 4 % p;
  const Fp disc = fp.sub(fp.mul(a3, a3), fp.mul(four, fp.mul(a1, a2)));
  const Integer pp = p;
  if (disc != 0) {
    const Fp num = fp.sub(
        fp.add(fp.mul(a2, fp.mul(a4, a4)), fp.mul(a1, fp.mul(a5, a5))),
        fp.mul(a3, fp.mul(a4, a5)));
    return signed_root(p, pp, eta(p, disc), fp.div(num, disc));
  }
  const CycInt pG = gauss_sum(p) * pp;
  if (a1 == 0) {
    if (a2 == 0 && a4 == 0 && a5 == 0) return CycInt(p, pp * pp);
    if (a2 != 0 && a4 == 0) {
      const Fp e = fp.neg(fp.div(fp.mul(a5, a5), fp.mul(four, a2)));
      return (eta(p, a2) < 0 ? -pG : pG).times_root(e);
    }
    return CycInt(p);
  }
  if (a5 == fp.div(fp.mul(a3, a4), fp.mul(2, a1))) {
    const Fp e = fp.neg(fp.div(fp.mul(a4, a4), fp.mul(four, a1)));
    return (eta(p, a1) < 0 ? -pG : pG).times_root(e);
  }
  return CycInt(p);
}

ReducedPoly restrict_poly(const ReducedPoly& F,
                          const std::map<std::uint32_t, Fp>& fixed,
                          const std::map<std::uint32_t, AffineSub>& subs) {
  const std::uint32_t p = F.p();
  const std::uint32_t arity = F.arity();
  const PrimeField fp(p);
  for (const auto& [i, v] : fixed) {
    if (i >= arity) throw InvalidArgument(var(i) + " is out of range");
  }
  for (const auto& [t, s] : subs) {
    if (t >= arity || s.source >= arity) {
      throw InvalidArgument("substitution index out of range");
    }
    if (fixed.count(t)) {
      throw InvalidArgument(var(t) + " is both fixed and substituted");
    }
    if (fixed.count(s.source) || subs.count(s.source)) {
      throw InvalidArgument("substitution source " + var(s.source) +
                            " must be a retained variable");
    }
  }

  ReducedPoly out(p, arity);
  for (const auto& [e, coeff] : F.terms()) {
    Fp c = coeff;
    Exponents ee = e;
    for (const auto& [i, v] : fixed) {
      c = fp.mul(c, fp.pow(v % p, ee[i]));
      ee[i] = 0;
    }
    out.add_term(ee, c);
  }

  for (const auto& [t, s] : subs) {
    ReducedPoly next(p, arity);
    for (const auto& [e, coeff] : out.terms()) {
      const std::uint32_t et = e[t];
      if (et == 0) {
        next.add_term(e, coeff);
        continue;
      }
      // (scale x_s + offset)^et, binomial coefficients built row by row.
      std::vector<Fp> binom(et + 1, 0);
      binom[0] = 1;
      for (std::uint32_t r = 1; r <= et; ++r) {
        for (std::uint32_t m = r; m > 0; --m) {
          binom[m] = fp.add(binom[m], binom[m - 1]);
        }
      }
      for (std::uint32_t m = 0; m <= et; ++m) {
        Fp c = fp.mul(coeff, binom[m]);
        c = fp.mul(c, fp.pow(s.scale % p, m));
        c = fp.mul(c, fp.pow(s.offset % p, et - m));
        Exponents ee = e;
        ee[t] = 0;
        ee[s.source] = fold_exponent(ee[s.source] + m, p);
        next.add_term(ee, c);
      }
    }
    out = std::move(next);
  }
  return out;
}

ConstructionInstance make_instance(PFunc g, std::vector<ElemIndex> points,
                                   ReducedPoly F,
                                   const std::optional<std::vector<Fp>>&
                                       diagonal) {
  Form1Spec spec{g, F, points};
  spec.validate();
  RegularityReport r = classify(g);
  if (r.kind != BentKind::kWeaklyRegular && r.kind != BentKind::kRegular) {
    throw InvalidArgument("seed g is " + to_string(r.kind) +
                          "; a weakly regular bent seed is required");
  }
  return make_instance(std::move(g), *r.epsilon, *r.dual, std::move(points),
                       std::move(F), diagonal);
}

ConstructionInstance make_instance(PFunc g, int epsilon, PFunc dual,
                                   std::vector<ElemIndex> points,
                                   ReducedPoly F,
                                   const std::optional<std::vector<Fp>>&
                                       diagonal) {
  Form1Spec spec{g, F, points};
  spec.validate();
  DualExpansion ex = fit_expansion(dual, points, diagonal);
  return ConstructionInstance{std::move(g), std::move(points), std::move(F),
                              epsilon,      std::move(dual),   std::move(ex)};
}

PredictedCoeff thm2_predict(const ConstructionInstance& inst, ElemIndex b) {
  const DualExpansion& ex = inst.expansion;
  if (inst.field().p() != 2) return na("p must be 2");
  const auto pairs = off_diagonal_pairs(ex);
  std::set<std::uint32_t> gamma;
  for (auto [i, j] : pairs) {
    if (!gamma.insert(i).second || !gamma.insert(j).second) {
      return na("nonzero A_ij do not form disjoint pairs");
    }
  }
  std::map<std::uint32_t, Fp> fixed;
  for (std::uint32_t i = 0; i < ex.tau; ++i) {
    if (!gamma.count(i)) fixed[i] = ex.h(i, b);
  }
  const auto aff = read_affine(restrict_poly(inst.F, fixed));
  if (!aff) return na("restriction of F is not affine");
  const auto& [lin, F0] = *aff;
  Fp e = inst.dual(b) ^ F0;
  for (auto [i, j] : pairs) {
    const Fp hi = ex.h(i, b), hj = ex.h(j, b);
    e ^= (hi & lin[i]) ^ (hj & lin[j]) ^ (lin[i] & lin[j]);
  }
  return bent_value(inst, 1, e);
}

PredictedCoeff thm3_predict(const ConstructionInstance& inst, ElemIndex b) {
  const DualExpansion& ex = inst.expansion;
  if (inst.field().p() != 2) return na("p must be 2");
  const auto pairs = off_diagonal_pairs(ex);
  if (pairs.empty()) return na("no nonzero off-diagonal A_ij");
  std::uint32_t centre = pairs[0].first;
  if (pairs.size() > 1) {
    std::map<std::uint32_t, std::size_t> count;
    for (auto [i, j] : pairs) {
      ++count[i];
      ++count[j];
    }
    bool found = false;
    for (auto [i, c] : count) {
      if (c == pairs.size()) {
        centre = i;
        found = true;
        break;
      }
    }
    if (!found) return na("nonzero A_ij do not share a single index");
  }
  std::vector<std::uint32_t> leaves;
  for (auto [i, j] : pairs) leaves.push_back(i == centre ? j : i);
  std::sort(leaves.begin(), leaves.end());
  std::set<std::uint32_t> gamma(leaves.begin(), leaves.end());
  gamma.insert(centre);

  std::map<std::uint32_t, Fp> fixed;
  for (std::uint32_t i = 0; i < ex.tau; ++i) {
    if (!gamma.count(i)) fixed[i] = ex.h(i, b);
  }
  const std::uint32_t j1 = leaves[0];
  std::map<std::uint32_t, AffineSub> subs;
  for (std::size_t s = 1; s < leaves.size(); ++s) {
    subs[leaves[s]] =
        AffineSub{j1, 1, static_cast<Fp>(ex.h(j1, b) ^ ex.h(leaves[s], b))};
  }
  const auto aff = read_affine(restrict_poly(inst.F, fixed, subs));
  if (!aff) return na("restriction of F is not affine");
  const auto& [lin, F0] = *aff;
  const Fp hi = ex.h(centre, b), hj = ex.h(j1, b);
  const Fp e = inst.dual(b) ^ F0 ^ (hi & lin[centre]) ^ (hj & lin[j1]) ^
               (lin[centre] & lin[j1]);
  return bent_value(inst, 1, e);
}

Fp prop1_discriminant(const ConstructionInstance& inst) {
  const PrimeField& fp = inst.field().prime_field();
  const DualExpansion& ex = inst.expansion;
  if (ex.tau != 2) throw InvalidArgument("discriminant needs tau = 2");
  const Fp m = fp.sub(ex.a(0, 1), 1);
  return fp.sub(fp.mul(m, m), fp.mul(4 % fp.p(), fp.mul(ex.a(0, 0), ex.a(1, 1))));
}

PredictedCoeff prop1_predict(const ConstructionInstance& inst, ElemIndex b) {
  const std::uint32_t p = inst.field().p();
  if (p == 2) return na("p must be odd");
  if (inst.expansion.tau != 2) return na("tau must be 2");
  if (!(inst.F == ReducedPoly::product(p, 2))) return na("F must be x1*x2");
  const PrimeField& fp = inst.field().prime_field();
  const DualExpansion& ex = inst.expansion;
  const Fp disc = prop1_discriminant(inst);
  if (disc == 0) {
    return na("discriminant (A12-1)^2 - 4*A11*A22 is zero: not bent");
  }
  const Fp g1 = ex.g[0](b), g2 = ex.g[1](b);
  const Fp num = fp.sub(
      fp.add(fp.mul(ex.a(1, 1), fp.mul(g1, g1)),
             fp.mul(ex.a(0, 0), fp.mul(g2, g2))),
      fp.mul(fp.sub(ex.a(0, 1), 1), fp.mul(g1, g2)));
  const Fp e = fp.add(inst.dual(b), fp.div(num, disc));
  return bent_value(inst, eta(p, disc), e);
}

std::optional<Thm4Shape> detect_thm4(const ConstructionInstance& inst) {
  const DualExpansion& ex = inst.expansion;
  const PrimeField& fp = inst.field().prime_field();
  const auto s = a_support(ex);
  if (s.empty()) return Thm4Shape{Thm4Case::k1, 0, 0};
  if (s.size() == 1) return Thm4Shape{Thm4Case::k2, s[0], s[0]};
  if (s.size() > 2) return std::nullopt;
  const std::uint32_t r = s[0], t = s[1];
  const Fp delta = fp.sub(fp.mul(ex.a(r, t), ex.a(r, t)),
                          fp.mul(4 % fp.p(), fp.mul(ex.a(r, r), ex.a(t, t))));
  if (delta != 0) return Thm4Shape{Thm4Case::k4, r, t};
  return Thm4Shape{Thm4Case::k3, r, t};
}

Thm4Result thm4_quantities(
    const ConstructionInstance& inst, Thm4Case which, ElemIndex b,
    std::optional<std::pair<std::uint32_t, std::uint32_t>> taus) {
  const FieldCtx& ctx = inst.field();
  const std::uint32_t p = ctx.p();
  const PrimeField& fp = ctx.prime_field();
  const DualExpansion& ex = inst.expansion;
  const std::uint32_t tau = ex.tau;
  if (p == 2) return na("p must be odd");
  if (tau < 2) return na("tau must be at least 2");
  const Fp four = 4 % p;
  const auto support = a_support(ex);

  Thm4Quantities q;
  q.shape.which = which;
  auto outside_zero = [&](std::uint32_t t1, std::uint32_t t2) {
    for (std::uint32_t i = 0; i < tau; ++i) {
      for (std::uint32_t j = 0; j < tau; ++j) {
        const bool in = (i == t1 || i == t2) && (j == t1 || j == t2);
        if (!in && ex.A[i][j] != 0) return false;
      }
    }
    return true;
  };
  std::map<std::uint32_t, Fp> fixed;
  auto fix_except = [&](std::uint32_t t1, std::uint32_t t2) {
    fixed.clear();
    for (std::uint32_t i = 0; i < tau; ++i) {
      if (i != t1 && i != t2) fixed[i] = ex.g[i](b);
    }
  };
  const Fp dual_b = inst.dual(b);

  if (which == Thm4Case::k1) {
    if (!support.empty()) return na("case 1 needs every A_ij = 0");
    std::vector<Fp> args(tau);
    for (std::uint32_t i = 0; i < tau; ++i) args[i] = ex.g[i](b);
    q.F0 = inst.F.eval(args);
    q.exponent = fp.add(dual_b, q.F0);
    return q;
  }

  if (which == Thm4Case::k2) {
    std::uint32_t t2 = 0;
    if (taus) {
      t2 = taus->second;
    } else {
      if (support.size() != 1) {
        return na("case 2 needs a single nonzero A_ii");
      }
      t2 = support[0];
    }
    if (t2 >= tau) return na("tau2 out of range");
    q.shape.tau1 = q.shape.tau2 = t2;
    const Fp A = ex.a(t2, t2);
    if (A == 0 || !outside_zero(t2, t2)) {
      return na("case 2 needs A_{t2,t2} != 0 and every other A_ij = 0");
    }
    fix_except(t2, t2);
    const auto c = read_pair(restrict_poly(inst.F, fixed), t2, t2);
    if (!c) return na("restriction of F is not quadratic in " + var(t2));
    q.a22 = c->a22;
    q.F2 = c->F2;
    q.F0 = c->F0;
    const Fp s = fp.sub(1, fp.mul(four, fp.mul(q.a22, A)));
    if (s == 0) return na("a2 - 1/(4A) = 0");
    const Fp g2 = ex.g[t2](b);
    const Fp inner = fp.add(q.F2, fp.div(g2, fp.mul(2, A)));
    q.sign = eta(p, s);
    q.exponent = fp.add(
        fp.add(dual_b, fp.mul(fp.div(A, s), fp.mul(inner, inner))),
        fp.sub(q.F0, fp.div(fp.mul(g2, g2), fp.mul(four, A))));
    return q;
  }

  std::uint32_t t1 = 0, t2 = 0;
  if (taus) {
    t1 = taus->first;
    t2 = taus->second;
  } else if (support.size() == 2) {
    t1 = support[0];
    t2 = support[1];
    if (which == Thm4Case::k3 && ex.a(t1, t1) == 0) std::swap(t1, t2);
  } else if (support.size() == 1 && which == Thm4Case::k3) {
    t1 = support[0];
    t2 = t1 == 0 ? 1 : 0;
  } else {
    return na("A pattern does not single out a pair of indices");
  }
  if (t1 >= tau || t2 >= tau || t1 == t2) return na("invalid index pair");
  q.shape.tau1 = t1;
  q.shape.tau2 = t2;
  if (!outside_zero(t1, t2)) {
    return na("nonzero A_ij outside {" + var(t1) + ", " + var(t2) + "}");
  }
  const Fp A11 = ex.a(t1, t1), A22 = ex.a(t2, t2), A12 = ex.a(t1, t2);
  const Fp delta =
      fp.sub(fp.mul(A12, A12), fp.mul(four, fp.mul(A11, A22)));
  q.delta = delta;
  if (which == Thm4Case::k3 && (A11 == 0 || delta != 0)) {
    return na("case 3 needs A_{t1,t1} != 0 and A12^2 = 4*A11*A22");
  }
  if (which == Thm4Case::k4 && delta == 0) {
    return na("case 4 needs A12^2 - 4*A11*A22 != 0");
  }
  fix_except(t1, t2);
  const auto c = read_pair(restrict_poly(inst.F, fixed), t1, t2);
  if (!c) {
    return na("restriction of F is not quadratic in " + var(t1) + ", " +
              var(t2));
  }
  q.a11 = c->a11;
  q.a22 = c->a22;
  q.a12 = c->a12;
  q.F1 = c->F1;
  q.F2 = c->F2;
  q.F0 = c->F0;
  const Fp g1 = ex.g[t1](b), g2 = ex.g[t2](b);

  if (which == Thm4Case::k3) {
    const Fp ratio = fp.div(A12, fp.mul(2, A11));
    q.phi = fp.sub(g2, fp.mul(ratio, g1));
    q.alpha[0] = fp.add(
        fp.add(q.a11, fp.mul(fp.mul(ratio, ratio), q.a22)),
        fp.div(fp.sub(fp.mul(2, fp.mul(A12, q.a12)), 1), fp.mul(four, A11)));
    q.alpha[1] = fp.add(
        fp.add(fp.mul(fp.add(fp.mul(fp.div(A12, A11), q.a22), q.a12), q.phi),
               q.F1),
        fp.div(fp.add(fp.mul(A12, q.F2), g1), fp.mul(2, A11)));
    q.alpha[2] = fp.sub(
        fp.add(fp.add(fp.mul(q.a22, fp.mul(q.phi, q.phi)),
                      fp.mul(q.F2, q.phi)),
               q.F0),
        fp.div(fp.mul(g1, g1), fp.mul(four, A11)));
    if (q.alpha[0] == 0) return na("alpha1 = 0");
    q.sign = eta(p, fp.neg(fp.mul(A11, q.alpha[0])));
    q.exponent = fp.add(
        fp.add(dual_b, q.alpha[2]),
        fp.neg(fp.div(fp.mul(q.alpha[1], q.alpha[1]),
                      fp.mul(four, q.alpha[0]))));
    return q;
  }

  q.B[0] = fp.add(q.a11, fp.div(A22, delta));
  q.B[1] = fp.add(q.a22, fp.div(A11, delta));
  q.B[2] = fp.sub(q.a12, fp.div(A12, delta));
  q.beta[0] = fp.add(
      q.F1, fp.div(fp.sub(fp.mul(A12, g2), fp.mul(2, fp.mul(A22, g1))), delta));
  q.beta[1] = fp.add(
      q.F2, fp.div(fp.sub(fp.mul(A12, g1), fp.mul(2, fp.mul(A11, g2))), delta));
  q.beta[2] = fp.add(
      q.F0,
      fp.div(fp.sub(fp.add(fp.mul(A22, fp.mul(g1, g1)),
                           fp.mul(A11, fp.mul(g2, g2))),
                    fp.mul(A12, fp.mul(g1, g2))),
             delta));
  const auto& B = q.B;
  const auto& be = q.beta;
  const Fp D = fp.sub(fp.mul(B[2], B[2]), fp.mul(four, fp.mul(B[0], B[1])));
  if (D == 0) return na("B3^2 - 4*B1*B2 = 0");
  const Fp num = fp.sub(
      fp.add(fp.mul(B[0], fp.mul(be[1], be[1])),
             fp.mul(B[1], fp.mul(be[0], be[0]))),
      fp.mul(B[2], fp.mul(be[0], be[1])));
  q.sign = eta(p, delta) * eta(p, D);
  q.exponent = fp.add(fp.add(dual_b, fp.div(num, D)), be[2]);
  return q;
}

PredictedCoeff thm4_predict(
    const ConstructionInstance& inst, Thm4Case which, ElemIndex b,
    std::optional<std::pair<std::uint32_t, std::uint32_t>> taus) {
  Thm4Result r = thm4_quantities(inst, which, b, taus);
  if (auto* n = std::get_if<NotApplicable>(&r)) return *n;
  const auto& q = std::get<Thm4Quantities>(r);
  return bent_value(inst, q.sign, q.exponent);
}

Thm5Result thm5_quantities(const ConstructionInstance& inst, ElemIndex b) {
  const FieldCtx& ctx = inst.field();
  const std::uint32_t p = ctx.p();
  const PrimeField& fp = ctx.prime_field();
  const DualExpansion& ex = inst.expansion;
  const std::uint32_t tau = ex.tau;
  if (p == 2) return na("p must be odd");
  if (tau < 2) return na("tau must be at least 2");
  if (!ex.off_diagonal_zero()) return na("off-diagonal A_ij must vanish");
  for (std::uint32_t i = 0; i < tau; ++i) {
    if (ex.a(i, i) == 0) {
      return na("A_ii = 0 for i = " + std::to_string(i + 1) +
                "; the sum reduces to the remaining points");
    }
  }
  if (inst.F.is_zero()) return na("all a_ij are zero");
  // Upper-triangular a_ij from the quadratic form F.
  std::vector<std::vector<Fp>> a(tau, std::vector<Fp>(tau, 0));
  for (const auto& [e, coeff] : inst.F.terms()) {
    std::vector<std::uint32_t> vars;
    std::uint32_t deg = 0;
    for (std::uint32_t i = 0; i < tau; ++i) {
      deg += e[i];
      for (std::uint32_t r = 0; r < e[i]; ++r) vars.push_back(i);
    }
    if (deg != 2) return na("F is not a quadratic form");
    a[vars[0]][vars[1]] = coeff;
  }
  const Fp four = 4 % p;
  std::vector<Fp> gam(tau), rho(tau);
  std::vector<std::vector<Fp>> cross(tau, std::vector<Fp>(tau, 0));
  for (std::uint32_t i = 0; i < tau; ++i) {
    const Fp A = ex.a(i, i);
    gam[i] = fp.sub(a[i][i], fp.inv(fp.mul(four, A)));
    rho[i] = fp.div(ex.g[i](b), fp.mul(2, A));
    for (std::uint32_t j = i + 1; j < tau; ++j) cross[i][j] = a[i][j];
  }
  Thm5Quantities q;
  int sign = tau % 2 == 1 ? eta(p, p - 1) : 1;
  Fp exponent = inst.dual(b);
  for (std::uint32_t k = 0; k < tau; ++k) {
    const Fp piv = gam[k];
    if (piv == 0) {
      return na("pivot-degenerate: gamma_" + std::to_string(k + 1) + "^(" +
                std::to_string(k + 1) + ") = 0");
    }
    q.pivots.push_back(piv);
    q.rho.push_back(rho[k]);
    const Fp two_piv = fp.mul(2, piv);
    for (std::uint32_t i = k + 1; i < tau; ++i) {
      const Fp cki = cross[k][i];
      gam[i] = fp.sub(gam[i], fp.div(fp.mul(cki, cki), fp.mul(four, piv)));
      rho[i] = fp.sub(rho[i], fp.div(fp.mul(cki, rho[k]), two_piv));
      for (std::uint32_t j = i + 1; j < tau; ++j) {
        cross[i][j] =
            fp.sub(cross[i][j], fp.div(fp.mul(cki, cross[k][j]), two_piv));
      }
    }
    const Fp A = ex.a(k, k);
    const Fp gk = ex.g[k](b);
    sign *= eta(p, fp.mul(A, piv));
    exponent = fp.sub(exponent, fp.div(fp.mul(gk, gk), fp.mul(four, A)));
    exponent =
        fp.sub(exponent, fp.div(fp.mul(rho[k], rho[k]), fp.mul(four, piv)));
  }
  q.sign = sign;
  q.exponent = exponent;
  return q;
}

PredictedCoeff thm5_predict(const ConstructionInstance& inst, ElemIndex b) {
  Thm5Result r = thm5_quantities(inst, b);
  if (auto* n = std::get_if<NotApplicable>(&r)) return *n;
  const auto& q = std::get<Thm5Quantities>(r);
  return bent_value(inst, q.sign, q.exponent);
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::kThm2:
      return "2";
    case Theorem::kThm3:
      return "3";
    case Theorem::kProp1:
      return "prop1";
    case Theorem::kThm4Case1:
      return "4.1";
    case Theorem::kThm4Case2:
      return "4.2";
    case Theorem::kThm4Case3:
      return "4.3";
    case Theorem::kThm4Case4:
      return "4.4";
    case Theorem::kThm5:
      return "5";
  }
  return "?";
}

PredictedCoeff predict(const ConstructionInstance& inst, Theorem t,
                       ElemIndex b) {
  switch (t) {
    case Theorem::kThm2:
      return thm2_predict(inst, b);
    case Theorem::kThm3:
      return thm3_predict(inst, b);
    case Theorem::kProp1:
      return prop1_predict(inst, b);
    case Theorem::kThm4Case1:
      return thm4_predict(inst, Thm4Case::k1, b);
    case Theorem::kThm4Case2:
      return thm4_predict(inst, Thm4Case::k2, b);
    case Theorem::kThm4Case3:
      return thm4_predict(inst, Thm4Case::k3, b);
    case Theorem::kThm4Case4:
      return thm4_predict(inst, Thm4Case::k4, b);
    case Theorem::kThm5:
      return thm5_predict(inst, b);
  }
  return na("unknown theorem");
}

PredictionRun run_predictor(const ConstructionInstance& inst, Theorem t) {
  PredictionRun run;
  run.theorem = t;
  const PFunc f = inst.f();
  run.oracle = walsh_full(f);
  run.oracle_bent = classify(f, run.oracle).is_bent;

  if (t == Theorem::kProp1 && inst.field().p() != 2 &&
      inst.expansion.tau == 2 &&
      inst.F == ReducedPoly::product(inst.field().p(), 2) &&
      prop1_discriminant(inst) == 0) {
    run.applicable = true;
    run.predicted_bent = false;
    run.reason = "discriminant is zero";
    return run;
  }

  WalshSpectrum predicted{inst.g.field_ptr(), {}};
  predicted.values.reserve(inst.field().size());
  for (ElemIndex b = 0; b < inst.field().size(); ++b) {
    PredictedCoeff c = predict(inst, t, b);
    if (auto* n = std::get_if<NotApplicable>(&c)) {
      run.applicable = false;
      run.reason = "b=" + std::to_string(b) + ": " + n->reason;
      return run;
    }
    predicted.values.push_back(std::get<CycInt>(std::move(c)));
  }
  run.applicable = true;
  run.predicted_bent = true;
  for (ElemIndex b = 0; b < predicted.size(); ++b) {
    if (!(predicted[b] == run.oracle[b])) {
      run.mismatch = b;
      break;
    }
  }
  run.predicted = std::move(predicted);
  return run;
}

}  // namespace bentkit
