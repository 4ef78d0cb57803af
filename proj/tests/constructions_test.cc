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

#include <random>
#include <vector>

#include "bentkit/error.h"
#include "bentkit/instances.h"
#include "gtest/gtest.h"

namespace bentkit {
namespace {

CycInt brute_sum(std::uint32_t p, const std::vector<Fp>& exponents) {
  std::vector<std::int64_t> counts(p, 0);
  for (Fp e : exponents) ++counts[e];
  return CycInt::from_counts(p, counts);
}

TEST(Lemma3, ExhaustiveSmallPrimes) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const PrimeField fp(p);
    for (Fp a = 1; a < p; ++a) {
      for (Fp b = 0; b < p; ++b) {
        std::vector<Fp> ex;
        for (Fp x = 0; x < p; ++x) {
          ex.push_back(fp.add(fp.mul(a, fp.mul(x, x)), fp.mul(b, x)));
        }
        EXPECT_EQ(lemma3_sum(p, a, b), brute_sum(p, ex))
            << "p=" << p << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(Lemma3, RejectsBadInput) {
  EXPECT_THROW(lemma3_sum(2, 1, 0), InvalidArgument);
  EXPECT_THROW(lemma3_sum(5, 0, 1), InvalidArgument);
}

TEST(Lemma4, ExhaustiveSmallPrimes) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeField fp(p);
    std::vector<Fp> ex(p * p);
    for (Fp a1 = 0; a1 < p; ++a1) {
      for (Fp a2 = 0; a2 < p; ++a2) {
        for (Fp a3 = 0; a3 < p; ++a3) {
          for (Fp a4 = 0; a4 < p; ++a4) {
            for (Fp a5 = 0; a5 < p; ++a5) {
              for (Fp x = 0; x < p; ++x) {
                for (Fp y = 0; y < p; ++y) {
                  Fp e = fp.mul(a1, fp.mul(x, x));
                  e = fp.add(e, fp.mul(a2, fp.mul(y, y)));
                  e = fp.add(e, fp.mul(a3, fp.mul(x, y)));
                  e = fp.add(e, fp.add(fp.mul(a4, x), fp.mul(a5, y)));
                  ex[x * p + y] = e;
                }
              }
              ASSERT_EQ(lemma4_sum(p, a1, a2, a3, a4, a5), brute_sum(p, ex))
                  << "p=" << p << " a=(" << a1 << "," << a2 << "," << a3
                  << "," << a4 << "," << a5 << ")";
            }
          }
        }
      }
    }
  }
}

TEST(RestrictPoly, FixAndSubstitute) {
  ReducedPoly F(2, 4);
  F.add_term({1, 1, 0, 0}, 1);
  F.add_term({1, 0, 1, 1}, 1);
  ReducedPoly want(2, 4);
  want.add_term({0, 1, 0, 0}, 1);
  want.add_term({0, 0, 1, 0}, 1);
  EXPECT_EQ(restrict_poly(F, {{0, 1}, {3, 1}}), want);
  EXPECT_TRUE(restrict_poly(F, {{0, 0}}).is_zero());

  // x1 x2 with x2 := x1 + 1 folds to x1 + x1 = 0 over F_2.
  ReducedPoly G(2, 2);
  G.add_term({1, 1}, 1);
  EXPECT_TRUE(restrict_poly(G, {}, {{1, AffineSub{0, 1, 1}}}).is_zero());

  // Over F_3: x1 x2^2 with x2 := 2 x1 + 1 is x1 (4 x1^2 + 4 x1 + 1)
  // = x1^3 + x1^2 + x1 = x1^2 + 2 x1.
  ReducedPoly H(3, 2);
  H.add_term({1, 2}, 1);
  ReducedPoly want_h(3, 2);
  want_h.add_term({2, 0}, 1);
  want_h.add_term({1, 0}, 2);
  EXPECT_EQ(restrict_poly(H, {}, {{1, AffineSub{0, 2, 1}}}), want_h);
}

TEST(RestrictPoly, RejectsConflicts) {
  ReducedPoly F = ReducedPoly::product(2, 3);
  EXPECT_THROW(restrict_poly(F, {{5, 1}}), InvalidArgument);
  EXPECT_THROW(restrict_poly(F, {{1, 1}}, {{1, AffineSub{0, 1, 0}}}),
               InvalidArgument);
  EXPECT_THROW(restrict_poly(F, {{0, 1}}, {{1, AffineSub{0, 1, 0}}}),
               InvalidArgument);
}

TEST(Predictors, AgreeOnReferenceCases) {
  for (const ReferenceCase& rc : reference_cases()) {
    const PredictionRun run = run_predictor(rc.instance, rc.theorem);
    EXPECT_TRUE(run.agrees()) << rc.label << ": " << run.reason;
    EXPECT_TRUE(run.oracle_bent) << rc.label;
    ASSERT_TRUE(run.predicted.has_value()) << rc.label;
    EXPECT_EQ(run.predicted->values, rc.displayed.values) << rc.label;
  }
}

struct SampleCell {
  Theorem theorem;
  std::uint32_t p;
  std::uint32_t n;
};

class RandomInstances : public ::testing::TestWithParam<SampleCell> {};

TEST_P(RandomInstances, PredictorMatchesOracle) {
  const SampleCell cell = GetParam();
  auto f = FieldCtx::build(cell.p, cell.n);
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(cell.theorem) * 31 +
                      cell.p * 7 + cell.n);
  int sampled = 0;
  for (int i = 0; i < 50; ++i) {
    auto inst = sample_admissible(cell.theorem, f, rng);
    ASSERT_TRUE(inst.has_value()) << "no admissible instance found";
    ++sampled;
    const PredictionRun run = run_predictor(*inst, cell.theorem);
    ASSERT_TRUE(run.agrees())
        << "theorem " << to_string(cell.theorem) << " F=" << inst->F.to_string()
        << " reason=" << run.reason << " mismatch="
        << (run.mismatch ? static_cast<long>(*run.mismatch) : -1L);
  }
  EXPECT_EQ(sampled, 50);
}

INSTANTIATE_TEST_SUITE_P(
    AllTheorems, RandomInstances,
    ::testing::Values(SampleCell{Theorem::kThm2, 2, 6},
                      SampleCell{Theorem::kThm2, 2, 8},
                      SampleCell{Theorem::kThm3, 2, 6},
                      SampleCell{Theorem::kThm3, 2, 8},
                      SampleCell{Theorem::kProp1, 3, 4},
                      SampleCell{Theorem::kProp1, 5, 2},
                      SampleCell{Theorem::kThm4Case1, 3, 4},
                      SampleCell{Theorem::kThm4Case2, 3, 4},
                      SampleCell{Theorem::kThm4Case3, 3, 4},
                      SampleCell{Theorem::kThm4Case4, 3, 4},
                      SampleCell{Theorem::kThm4Case2, 3, 5},
                      SampleCell{Theorem::kThm4Case4, 5, 2},
                      SampleCell{Theorem::kThm5, 3, 4},
                      SampleCell{Theorem::kThm5, 5, 2}));

TEST(Predictors, StarWithOneLeafMatchesPairs) {
  auto f = FieldCtx::build(2, 6);
  std::mt19937_64 rng(17);
  int compared = 0;
  for (int i = 0; i < 400 && compared < 50; ++i) {
    auto inst = sample_admissible(Theorem::kThm2, f, rng);
    ASSERT_TRUE(inst.has_value());
    int off = 0;
    for (std::uint32_t a = 0; a < inst->expansion.tau; ++a) {
      for (std::uint32_t b = a + 1; b < inst->expansion.tau; ++b) {
        off += inst->expansion.A[a][b] != 0;
      }
    }
    if (off != 1) continue;
    ++compared;
    for (ElemIndex b = 0; b < f->size(); ++b) {
      const PredictedCoeff x = thm2_predict(*inst, b);
      const PredictedCoeff y = thm3_predict(*inst, b);
      ASSERT_TRUE(std::holds_alternative<CycInt>(x));
      ASSERT_TRUE(std::holds_alternative<CycInt>(y));
      ASSERT_EQ(std::get<CycInt>(x), std::get<CycInt>(y)) << "b=" << b;
    }
  }
  EXPECT_GE(compared, 10);
}

TEST(Predictors, DiagonalEliminationMatchesDiscriminant) {
  auto f = FieldCtx::build(5, 2);
  int compared = 0;
  for (ElemIndex a = 1; a < f->size(); ++a) {
    for (ElemIndex u1 = 1; u1 < f->size(); u1 += 3) {
      for (ElemIndex u2 = 1; u2 < f->size(); u2 += 2) {
        ConstructionInstance inst = example3_instance(a, u1, u2);
        const DualExpansion& ex = inst.expansion;
        if (ex.A[0][1] != 0 || ex.A[0][0] == 0 || ex.A[1][1] == 0) continue;
        if (prop1_discriminant(inst) == 0) {
          EXPECT_TRUE(
              std::holds_alternative<NotApplicable>(thm5_predict(inst, 0)));
          continue;
        }
        ++compared;
        for (ElemIndex b = 0; b < f->size(); ++b) {
          const PredictedCoeff x = prop1_predict(inst, b);
          const PredictedCoeff y = thm5_predict(inst, b);
          ASSERT_TRUE(std::holds_alternative<CycInt>(x))
              << std::get<NotApplicable>(x).reason;
          ASSERT_TRUE(std::holds_alternative<CycInt>(y))
              << std::get<NotApplicable>(y).reason;
          ASSERT_EQ(std::get<CycInt>(x), std::get<CycInt>(y));
        }
      }
    }
  }
  EXPECT_GT(compared, 0);
}

TEST(Predictors, ReportFailedHypotheses) {
  // Reference instance 4(1) has all A zero, which is not a Theorem 5 instance.
  const ReferenceCase rc = reference_case("4(1)");
  const PredictionRun run = run_predictor(rc.instance, Theorem::kThm5);
  EXPECT_FALSE(run.applicable);
  EXPECT_FALSE(run.reason.empty());
  EXPECT_FALSE(run.agrees());
}

TEST(Predictors, ZeroDiscriminantPredictsNotBent) {
  auto f = FieldCtx::build(5, 2);
  int seen = 0;
  for (ElemIndex a = 1; a < f->size() && seen < 20; ++a) {
    for (ElemIndex u1 = 1; u1 < f->size() && seen < 20; ++u1) {
      for (ElemIndex u2 = 1; u2 < f->size() && seen < 20; ++u2) {
        ConstructionInstance inst = example3_instance(a, u1, u2);
        if (prop1_discriminant(inst) != 0) continue;
        ++seen;
        const PredictionRun run = run_predictor(inst, Theorem::kProp1);
        EXPECT_TRUE(run.applicable);
        EXPECT_FALSE(run.predicted_bent);
        EXPECT_FALSE(run.oracle_bent);
        EXPECT_TRUE(run.agrees());
      }
    }
  }
  EXPECT_EQ(seen, 20);
}

struct GoldCell {
  std::uint32_t p;
  std::uint32_t n;
  std::uint32_t k;
};

class GoldClosedForm : public ::testing::TestWithParam<GoldCell> {};

TEST_P(GoldClosedForm, MatchesOracle) {
  const GoldCell cell = GetParam();
  auto f = FieldCtx::build(cell.p, cell.n);
  std::mt19937_64 rng(cell.p * 1000 + cell.n * 10 + cell.k);
  for (int i = 0; i < 10; ++i) {
    const ElemIndex a = 1 + rng() % (f->size() - 1);
    const WalshSpectrum oracle = walsh_full(gold(f, a, cell.k));
    for (ElemIndex b = 0; b < f->size(); ++b) {
      const GoldValue v = gold_walsh_closed(*f, a, cell.k, b);
      const CycInt& w = oracle[b];
      if (std::holds_alternative<GoldZero>(v)) {
        ASSERT_TRUE(w.is_zero()) << "a=" << a << " b=" << b;
      } else if (const auto* m = std::get_if<GoldMagnitudeOnly>(&v)) {
        ASSERT_TRUE(w.is_integer()) << "a=" << a << " b=" << b;
        const Integer x = w.integer_value();
        ASSERT_TRUE(x == m->magnitude || x == -m->magnitude)
            << "a=" << a << " b=" << b;
      } else {
        ASSERT_EQ(std::get<CycInt>(v), w) << "a=" << a << " b=" << b;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Grid, GoldClosedForm,
                         ::testing::Values(GoldCell{2, 6, 1}, GoldCell{2, 6, 2},
                                           GoldCell{2, 6, 3}, GoldCell{2, 8, 2},
                                           GoldCell{3, 4, 1}, GoldCell{3, 4, 2},
                                           GoldCell{5, 2, 1}));

TEST(GoldClosedForm, RejectsBadInput) {
  auto f = FieldCtx::build(3, 3);
  EXPECT_THROW(gold_walsh_closed(*f, 1, 1, 0), InvalidArgument);
  auto g = FieldCtx::build(2, 6);
  EXPECT_THROW(gold_walsh_closed(*g, 0, 2, 0), InvalidArgument);
}

TEST(GoldRoot, IsARoot) {
  auto f = FieldCtx::build(2, 6);
  for (ElemIndex a = 1; a < f->size(); ++a) {
    const ElemIndex c = gold_root(*f, a, 2);
    EXPECT_EQ(f->pow(c, 5), a);
  }
}

TEST(GoldKernel, SolvesTheEquation) {
  auto f = FieldCtx::build(3, 4);
  for (ElemIndex a = 1; a < f->size(); ++a) {
    const auto c = gold_kernel_element(*f, a, 1);
    if (!c) continue;
    EXPECT_NE(*c, 0u);
    const ElemIndex lhs = f->add(f->mul(f->frobenius(a, 1), f->frobenius(*c, 2)),
                                 f->mul(a, *c));
    EXPECT_EQ(lhs, 0u);
  }
}

TEST(GoldCriteria, Thm6IffOnF64) {
  auto f = FieldCtx::build(2, 6);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 3; ++i) {
    const ElemIndex a = 1 + rng() % (f->size() - 1);
    const GoldSweepRow row = gold_sweep(f, a, 2, true);
    EXPECT_EQ(row.criterion, "thm6");
    EXPECT_EQ(row.discrepancies, 0u) << "a=" << a;
  }
}

TEST(GoldCriteria, Thm7IffOnF81) {
  auto f = FieldCtx::build(3, 4);
  int covered = 0;
  for (ElemIndex a = 1; a < f->size() && covered < 3; ++a) {
    if (!gold_special_branch(*f, a, 1)) continue;
    ++covered;
    const GoldSweepRow row = gold_sweep(f, a, 1, false);
    EXPECT_EQ(row.criterion, "thm7");
    EXPECT_EQ(row.discrepancies, 0u) << "a=" << a;
  }
  EXPECT_EQ(covered, 3);
}

TEST(GoldCriteria, Thm7OffBranchIsNotApplicable) {
  auto f = FieldCtx::build(3, 4);
  const CriterionVerdict v = thm7_check(*f, 1, 2, 1, 2);
  EXPECT_FALSE(v.applicable);
  EXPECT_EQ(v.reason.rfind("hypothesis-not-met", 0), 0u) << v.reason;
}

TEST(GoldCriteria, RejectHypothesisViolations) {
  auto f = FieldCtx::build(2, 6);
  EXPECT_THROW(thm6_check(*f, 1, 2, 3, 3), InvalidArgument);
  EXPECT_THROW(thm6_check(*f, 1, 1, 3, 4), InvalidArgument);
  EXPECT_THROW(thm7_check(*f, 1, 2, 3, 4), InvalidArgument);
}

}  // namespace
}  // namespace bentkit
