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

#ifndef BENTKIT_CONSTRUCTIONS_H_
#define BENTKIT_CONSTRUCTIONS_H_

// Closed-form character sums and Walsh-spectrum predictors for
//
//   f(x) = g(x) + F(Tr(u_1 x), ..., Tr(u_tau x))
//
// with g weakly regular bent and a dual admitting a shift expansion, plus
// bentness criteria for f(x) = Tr(a x^(p^k + 1)) + Tr(u x) Tr(v x).
//
// Predictors work one b at a time and return either the exact value of
// f^(b) or NotApplicable naming the failed hypothesis. Variables are
// 0-based throughout; reports print them 1-based.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bentkit/cyclo.h"
#include "bentkit/dualshift.h"
#include "bentkit/func.h"
#include "bentkit/gf.h"
#include "bentkit/walsh.h"

namespace bentkit {

// sum_{x in F_p} w^(a x^2 + b x) = eta(a) G w^(-b^2 / 4a). Throws
// InvalidArgument for even p or a = 0.
CycInt lemma3_sum(std::uint32_t p, Fp a, Fp b);

// sum_{x, y in F_p} w^(a1 x^2 + a2 y^2 + a3 x y + a4 x + a5 y), evaluated by
// the closed-form case split. Throws InvalidArgument for even p.
CycInt lemma4_sum(std::uint32_t p, Fp a1, Fp a2, Fp a3, Fp a4, Fp a5);

// x_target := scale * x_source + offset.
struct AffineSub {
  std::uint32_t source = 0;
  Fp scale = 1;
  Fp offset = 0;
};

// Fixes the variables in `fixed`, then applies `subs` in ascending target
// order, re-expanding and folding powers through x^p = x. The result keeps
// the arity of F; fixed and substituted variables no longer occur. Throws
// InvalidArgument when an index is out of range, a variable is both fixed
// and substituted, or a substitution source is itself fixed or substituted.
ReducedPoly restrict_poly(const ReducedPoly& F,
                          const std::map<std::uint32_t, Fp>& fixed,
                          const std::map<std::uint32_t, AffineSub>& subs = {});

// A bent seed g, its points, the outer polynomial F and the fitted expansion
// of the dual of g.
struct ConstructionInstance {
  PFunc g;
  std::vector<ElemIndex> points;
  ReducedPoly F;
  // g^(b) = epsilon * P * w^dual(b).
  int epsilon = 1;
  PFunc dual;
  DualExpansion expansion;

  const FieldCtx& field() const { return g.field(); }
  Form1Spec spec() const { return {g, F, points}; }
  PFunc f() const { return compose_form1(spec()); }
};

// Classifies g, fits the dual expansion over `points` and packages the
// result. Throws InvalidArgument when g is not weakly regular bent, and
// NotExpansionForm when the dual has no shift expansion over the points.
ConstructionInstance make_instance(
    PFunc g, std::vector<ElemIndex> points, ReducedPoly F,
    const std::optional<std::vector<Fp>>& diagonal = std::nullopt);
// Same, with the classification of g already known.
ConstructionInstance make_instance(
    PFunc g, int epsilon, PFunc dual, std::vector<ElemIndex> points,
    ReducedPoly F,
    const std::optional<std::vector<Fp>>& diagonal = std::nullopt);

struct NotApplicable {
  std::string reason;
};
using PredictedCoeff = std::variant<CycInt, NotApplicable>;

// p = 2. The nonzero off-diagonal A_ij form disjoint pairs and F restricted
// at x_i = h_i(b) (i outside the pairs) is affine.
PredictedCoeff thm2_predict(const ConstructionInstance& inst, ElemIndex b);

// p = 2. The nonzero off-diagonal A_ij form a star around one centre; F
// restricted at x_i = h_i(b) off the star, with every leaf tied to the
// first one, is affine.
PredictedCoeff thm3_predict(const ConstructionInstance& inst, ElemIndex b);

// Odd p, tau = 2, F = x1 x2. Bent iff the discriminant
// (A_12 - 1)^2 - 4 A_11 A_22 is nonzero.
Fp prop1_discriminant(const ConstructionInstance& inst);
PredictedCoeff prop1_predict(const ConstructionInstance& inst, ElemIndex b);

enum class Thm4Case { k1 = 1, k2 = 2, k3 = 3, k4 = 4 };

// The case and index pair selected by the A pattern; nullopt when more than
// two indices carry nonzero A entries.
struct Thm4Shape {
  Thm4Case which = Thm4Case::k1;
  std::uint32_t tau1 = 0;
  std::uint32_t tau2 = 0;
};
std::optional<Thm4Shape> detect_thm4(const ConstructionInstance& inst);

// Per-b quantities of the four cases. Unused entries stay zero.
struct Thm4Quantities {
  Thm4Shape shape;
  // Coefficients of the restriction in x_tau1, x_tau2 (case 2 uses a22, F2
  // and F0 only).
  Fp a11 = 0, a22 = 0, a12 = 0, F1 = 0, F2 = 0, F0 = 0;
  Fp phi = 0;
  std::array<Fp, 3> alpha{};
  Fp delta = 0;
  std::array<Fp, 3> B{};
  std::array<Fp, 3> beta{};
  int sign = 1;
  Fp exponent = 0;
};
using Thm4Result = std::variant<Thm4Quantities, NotApplicable>;

// Evaluates the requested case at b. With no explicit pair the pair comes
// from the A pattern; case 3 with a single nonzero A_rr pairs r with the
// first other index.
Thm4Result thm4_quantities(
    const ConstructionInstance& inst, Thm4Case which, ElemIndex b,
    std::optional<std::pair<std::uint32_t, std::uint32_t>> taus =
        std::nullopt);
PredictedCoeff thm4_predict(
    const ConstructionInstance& inst, Thm4Case which, ElemIndex b,
    std::optional<std::pair<std::uint32_t, std::uint32_t>> taus =
        std::nullopt);

// Odd p, F = sum_{i<=j} a_ij x_i x_j, off-diagonal A zero and every A_ii
// nonzero. The elimination pivots gamma_i^(i) do not depend on b.
struct Thm5Quantities {
  std::vector<Fp> pivots;
  std::vector<Fp> rho;
  int sign = 1;
  Fp exponent = 0;
};
using Thm5Result = std::variant<Thm5Quantities, NotApplicable>;
Thm5Result thm5_quantities(const ConstructionInstance& inst, ElemIndex b);
PredictedCoeff thm5_predict(const ConstructionInstance& inst, ElemIndex b);

enum class Theorem {
  kThm2,
  kThm3,
  kProp1,
  kThm4Case1,
  kThm4Case2,
  kThm4Case3,
  kThm4Case4,
  kThm5,
};
std::string to_string(Theorem t);

PredictedCoeff predict(const ConstructionInstance& inst, Theorem t,
                       ElemIndex b);

// Full-spectrum run of one predictor against walsh_full(f).
struct PredictionRun {
  Theorem theorem = Theorem::kThm2;
  bool applicable = false;
  // First failed hypothesis, prefixed with the b where it failed.
  std::string reason;
  // The verdict of the theorem; only the discriminant test of kProp1 can
  // predict "not bent".
  bool predicted_bent = false;
  std::optional<WalshSpectrum> predicted;
  WalshSpectrum oracle;
  bool oracle_bent = false;
  // First b with predicted != oracle.
  std::optional<ElemIndex> mismatch;

  bool agrees() const {
    return applicable && !mismatch.has_value() &&
           predicted_bent == oracle_bent;
  }
};
PredictionRun run_predictor(const ConstructionInstance& inst, Theorem t);

// Walsh values of g(x) = Tr(a x^(p^k + 1)).
struct GoldZero {};
struct GoldMagnitudeOnly {
  Integer magnitude;
};
using GoldValue = std::variant<GoldZero, GoldMagnitudeOnly, CycInt>;

// For p = 2 and n/d odd: zero or +-2^((n+d)/2), sign not determined. For
// n/d even: the exact value. Throws InvalidArgument when a = 0, or for odd
// p with n/d odd.
GoldValue gold_walsh_closed(const FieldCtx& ctx, ElemIndex a, std::uint32_t k,
                            ElemIndex b);

// The unique c with c^(2^k + 1) = a (p = 2, n/d odd).
ElemIndex gold_root(const FieldCtx& ctx, ElemIndex a, std::uint32_t k);
// Smallest nonzero c with a^(p^k) c^(p^(2k)) + a c = 0, if any.
std::optional<ElemIndex> gold_kernel_element(const FieldCtx& ctx, ElemIndex a,
                                             std::uint32_t k);
// n/d even and a^((p^n - 1)/(p^d + 1)) = (-1)^(m/d), n = 2m.
bool gold_special_branch(const FieldCtx& ctx, ElemIndex a, std::uint32_t k);

struct CriterionVerdict {
  bool applicable = true;
  bool bent = false;
  std::string reason;
};

// p = 2, n/d odd, u != v, both nonzero; throws InvalidArgument otherwise.
CriterionVerdict thm6_check(const FieldCtx& ctx, ElemIndex a, std::uint32_t k,
                            ElemIndex u, ElemIndex v);
// n/d even, a, u, v nonzero; throws InvalidArgument otherwise. Reports
// applicable = false when a is off the special branch.
CriterionVerdict thm7_check(const FieldCtx& ctx, ElemIndex a, std::uint32_t k,
                            ElemIndex u, ElemIndex v);

}  // namespace bentkit

#endif  // BENTKIT_CONSTRUCTIONS_H_
