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

#ifndef BENTKIT_INSTANCES_H_
#define BENTKIT_INSTANCES_H_

// Reference instances with their displayed Walsh spectra, exhaustive Gold
// sweeps, seeded samplers of admissible random instances, and the
// reproduction driver behind `bentkit reproduce`.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bentkit/constructions.h"

namespace bentkit {

// Sum of y^(p^i) for i < k; the absolute trace of y in F_{p^k} when y lies
// in that subfield.
ElemIndex subfield_trace(const FieldCtx& ctx, ElemIndex y, std::uint32_t k);

struct ReferenceCase {
  // "1", "2", "4(1)" .. "4(4)", "5".
  std::string label;
  Theorem theorem = Theorem::kThm2;
  ConstructionInstance instance;
  // f^(b) as written out in closed form for this instance.
  WalshSpectrum displayed;
};

// Reference instances 1, 2, 4 (four cases) and 5, in that order.
std::vector<ReferenceCase> reference_cases();
ReferenceCase reference_case(const std::string& label);

// Tr(a x^2) + Tr(u1 x) Tr(u2 x) over F_{5^2}, with the discriminant written
// directly in traces.
ConstructionInstance example3_instance(ElemIndex a, ElemIndex u1,
                                       ElemIndex u2);
Fp example3_discriminant(const FieldCtx& ctx, ElemIndex a, ElemIndex u1,
                         ElemIndex u2);
// Displayed spectrum for a nonzero discriminant.
WalshSpectrum example3_displayed(const FieldPtr& ctx, ElemIndex a,
                                 ElemIndex u1, ElemIndex u2);

// One (a, k) cell of an exhaustive sweep over (u, v) for
// f = Tr(a x^(p^k+1)) + Tr(u x) Tr(v x).
struct GoldSweepRow {
  std::uint32_t k = 0;
  std::uint32_t d = 0;
  ElemIndex a = 0;
  // "thm6", "thm7", "thm7:hypothesis-not-met" or "none".
  std::string criterion;
  std::size_t pairs = 0;
  std::size_t oracle_bent = 0;
  std::size_t criterion_bent = 0;
  std::size_t discrepancies = 0;
  std::optional<std::pair<ElemIndex, ElemIndex>> first_discrepancy;
  // True when a criterion applies, i.e. discrepancies are meaningful.
  bool covered = false;
  // Pairs (u, v) where the oracle says bent, in scan order.
  std::vector<std::pair<ElemIndex, ElemIndex>> hits;
};
// Scans u, v over F^* (u != v when `distinct`), u outer.
GoldSweepRow gold_sweep(const FieldPtr& ctx, ElemIndex a, std::uint32_t k,
                        bool distinct, bool keep_hits = false);

// Seeded sampling of instances whose guards pass at every b. Fields with
// p = 2 serve kThm2/kThm3; odd p serve the rest. Returns nullopt when no
// admissible instance turned up within `tries` draws.
std::optional<ConstructionInstance> sample_admissible(Theorem t,
                                                      const FieldPtr& ctx,
                                                      std::mt19937_64& rng,
                                                      int tries = 4000);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct ExampleReport {
  int example = 0;
  std::vector<CheckLine> checks;
  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return !checks.empty();
  }
};
// Throws InvalidArgument outside 1..7.
ExampleReport reproduce_example(int example);

}  // namespace bentkit

#endif  // BENTKIT_INSTANCES_H_
