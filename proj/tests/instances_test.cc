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

#include "bentkit/instances.h"

#include <random>

#include "bentkit/error.h"
#include "gtest/gtest.h"

namespace bentkit {
namespace {

class ReproduceInstance : public ::testing::TestWithParam<int> {};

TEST_P(ReproduceInstance, AllChecksPass) {
  const ExampleReport r = reproduce_example(GetParam());
  EXPECT_EQ(r.example, GetParam());
  ASSERT_FALSE(r.checks.empty());
  for (const CheckLine& c : r.checks) {
    EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  }
  EXPECT_TRUE(r.pass());
}

INSTANTIATE_TEST_SUITE_P(AllInstances, ReproduceInstance, ::testing::Range(1, 8));

TEST(ReproduceInstance, RejectsUnknownNumbers) {
  EXPECT_THROW(reproduce_example(0), InvalidArgument);
  EXPECT_THROW(reproduce_example(8), InvalidArgument);
}

TEST(ReferenceCases, LookupByLabel) {
  const auto all = reference_cases();
  EXPECT_EQ(all.size(), 7u);
  for (const auto& rc : all) {
    EXPECT_EQ(reference_case(rc.label).label, rc.label);
  }
  EXPECT_THROW(reference_case("9"), InvalidArgument);
}

TEST(SubfieldTrace, LandsInSubfield) {
  auto f = FieldCtx::build(2, 6);
  for (ElemIndex y = 0; y < f->size(); ++y) {
    const ElemIndex t = subfield_trace(*f, y, 6);
    EXPECT_EQ(t, f->trace(y));
    const ElemIndex t2 = f->trace_to(y, 2);
    EXPECT_EQ(f->pow(t2, 4), t2);
  }
}

TEST(ReferenceInstance3, DisplayedSpectrumMatchesOracleOnBentInstances) {
  auto f = FieldCtx::build(5, 2);
  int bent = 0;
  for (ElemIndex a = 1; a < f->size(); a += 5) {
    for (ElemIndex u1 = 1; u1 < f->size(); u1 += 4) {
      for (ElemIndex u2 = 2; u2 < f->size(); u2 += 3) {
        if (example3_discriminant(*f, a, u1, u2) == 0) {
          EXPECT_THROW(example3_displayed(f, a, u1, u2), InvalidArgument);
          continue;
        }
        ++bent;
        const ConstructionInstance inst = example3_instance(a, u1, u2);
        EXPECT_EQ(example3_displayed(f, a, u1, u2).values,
                  walsh_full(inst.f()).values);
      }
    }
  }
  EXPECT_GT(bent, 0);
}

TEST(SampleAdmissible, RespectsCharacteristic) {
  std::mt19937_64 rng(3);
  auto odd = FieldCtx::build(3, 4);
  auto even = FieldCtx::build(2, 6);
  EXPECT_FALSE(sample_admissible(Theorem::kThm2, odd, rng).has_value());
  EXPECT_FALSE(sample_admissible(Theorem::kThm5, even, rng).has_value());
}

TEST(GoldSweep, CountsPairs) {
  auto f = FieldCtx::build(2, 4);
  const GoldSweepRow distinct = gold_sweep(f, 1, 1, true);
  const GoldSweepRow all = gold_sweep(f, 1, 1, false);
  EXPECT_EQ(distinct.pairs, 15u * 14u);
  EXPECT_EQ(all.pairs, 15u * 15u);
  EXPECT_EQ(distinct.d, 1u);
}

}  // namespace
}  // namespace bentkit
