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

// Acceptance gate: runs every criterion and prints one PASS/FAIL line each.
// Exit status 0 iff all criteria pass.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bentkit/constructions.h"
#include "bentkit/func.h"
#include "bentkit/instances.h"
#include "bentkit/walsh.h"

namespace bentkit {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

PFunc random_func(const FieldPtr& f, std::mt19937_64& rng) {
  std::vector<Fp> v(f->size());
  for (auto& x : v) x = static_cast<Fp>(rng() % f->p());
  return PFunc(f, std::move(v));
}

ReducedPoly random_reduced(std::uint32_t p, std::uint32_t arity,
                           std::mt19937_64& rng) {
  ReducedPoly F(p, arity);
  const int terms = 1 + static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    Exponents e(arity);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % p);
    F.add_term(e, static_cast<std::int64_t>(rng() % p));
  }
  return F;
}

std::vector<ElemIndex> random_points(const FieldCtx& c, std::uint32_t tau,
                                     std::mt19937_64& rng) {
  std::vector<ElemIndex> u(tau);
  for (auto& x : u) x = static_cast<ElemIndex>(1 + rng() % (c.size() - 1));
  return u;
}

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

// Bent instances gathered by criterion 3 for the degree checks.
std::vector<ConstructionInstance>& bent_pool() {
  static std::vector<ConstructionInstance> pool;
  return pool;
}

Outcome reference_instances() {
  Outcome o;
  std::size_t checks = 0;
  for (int e = 1; e <= 7; ++e) {
    const ExampleReport r = reproduce_example(e);
    for (const CheckLine& c : r.checks) {
      ++checks;
      if (!c.pass) fail(o, "reference instance " + std::to_string(e) + ": " + c.name);
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks over reference instances 1-7";
  return o;
}

Outcome closed_forms() {
  Outcome o;
  std::size_t evals = 0;
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const PrimeField fp(p);
    for (Fp a = 1; a < p; ++a) {
      for (Fp b = 0; b < p; ++b) {
        std::vector<std::int64_t> counts(p, 0);
        for (Fp x = 0; x < p; ++x) {
          ++counts[fp.add(fp.mul(a, fp.mul(x, x)), fp.mul(b, x))];
        }
        ++evals;
        if (!(lemma3_sum(p, a, b) == CycInt::from_counts(p, counts))) {
          fail(o, "lemma 3 sum p=" + std::to_string(p));
        }
      }
    }
  }
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeField fp(p);
    std::vector<Fp> a(5, 0);
    const std::uint64_t total = static_cast<std::uint64_t>(p) * p * p * p * p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t r = idx;
      for (auto& x : a) {
        x = static_cast<Fp>(r % p);
        r /= p;
      }
      std::vector<std::int64_t> counts(p, 0);
      for (Fp x = 0; x < p; ++x) {
        for (Fp y = 0; y < p; ++y) {
          Fp e = fp.add(fp.mul(a[0], fp.mul(x, x)), fp.mul(a[1], fp.mul(y, y)));
          e = fp.add(e, fp.mul(a[2], fp.mul(x, y)));
          e = fp.add(e, fp.add(fp.mul(a[3], x), fp.mul(a[4], y)));
          ++counts[e];
        }
      }
      ++evals;
      if (!(lemma4_sum(p, a[0], a[1], a[2], a[3], a[4]) ==
            CycInt::from_counts(p, counts))) {
        fail(o, "lemma 4 sum p=" + std::to_string(p));
      }
    }
  }
  struct Cell {
    std::uint32_t p, n, k;
  };
  std::size_t gold_values = 0;
  for (const Cell cell : {Cell{2, 6, 1}, Cell{2, 6, 2}, Cell{2, 6, 3},
                          Cell{2, 8, 2}, Cell{3, 4, 1}, Cell{3, 4, 2},
                          Cell{5, 2, 1}}) {
    auto f = FieldCtx::build(cell.p, cell.n);
    std::mt19937_64 rng(1000 * cell.p + 10 * cell.n + cell.k);
    for (int i = 0; i < 10; ++i) {
      const ElemIndex a = static_cast<ElemIndex>(1 + rng() % (f->size() - 1));
      const WalshSpectrum direct = walsh_direct(gold(f, a, cell.k));
      for (ElemIndex b = 0; b < f->size(); ++b) {
        ++gold_values;
        const GoldValue v = gold_walsh_closed(*f, a, cell.k, b);
        bool ok = false;
        if (std::holds_alternative<GoldZero>(v)) {
          ok = direct[b].is_zero();
        } else if (const auto* m = std::get_if<GoldMagnitudeOnly>(&v)) {
          ok = direct[b].is_integer() &&
               abs(direct[b].integer_value()) == m->magnitude;
        } else {
          ok = std::get<CycInt>(v) == direct[b];
        }
        if (!ok) {
          fail(o, "gold closed form (" + std::to_string(cell.p) + "," +
                      std::to_string(cell.n) + "," + std::to_string(cell.k) +
                      ") a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(evals) + " character sums, " +
               std::to_string(gold_values) + " gold values";
  }
  return o;
}

Outcome theorems() {
  Outcome o;
  auto& pool = bent_pool();
  std::size_t runs = 0;
  for (const ReferenceCase& rc : reference_cases()) {
    const PredictionRun run = run_predictor(rc.instance, rc.theorem);
    ++runs;
    if (!run.agrees() || !(run.oracle == rc.displayed)) {
      fail(o, "reference instance " + rc.label);
    }
    if (run.oracle_bent) pool.push_back(rc.instance);
  }
  {
    auto f = FieldCtx::build(5, 2);
    for (ElemIndex a = 1; a < f->size(); ++a) {
      for (ElemIndex u1 = 1; u1 < f->size(); u1 += 2) {
        for (ElemIndex u2 = 2; u2 < f->size(); u2 += 3) {
          const ConstructionInstance inst = example3_instance(a, u1, u2);
          const PredictionRun run = run_predictor(inst, Theorem::kProp1);
          ++runs;
          if (!run.agrees()) fail(o, "reference instance 3");
          if (run.oracle_bent && pool.size() < 4000) pool.push_back(inst);
        }
      }
    }
  }
  struct Cell {
    Theorem t;
    std::uint32_t p, n;
    int count;
  };
  const std::vector<Cell> cells = {
      {Theorem::kThm2, 2, 6, 30},      {Theorem::kThm2, 2, 8, 30},
      {Theorem::kThm3, 2, 6, 30},      {Theorem::kThm3, 2, 8, 30},
      {Theorem::kProp1, 3, 4, 30},     {Theorem::kProp1, 5, 2, 30},
      {Theorem::kThm4Case1, 3, 4, 30}, {Theorem::kThm4Case1, 3, 5, 30},
      {Theorem::kThm4Case2, 3, 4, 30}, {Theorem::kThm4Case2, 3, 5, 30},
      {Theorem::kThm4Case3, 3, 4, 30}, {Theorem::kThm4Case3, 5, 2, 30},
      {Theorem::kThm4Case4, 3, 4, 30}, {Theorem::kThm4Case4, 5, 2, 30},
      {Theorem::kThm5, 3, 4, 30},      {Theorem::kThm5, 5, 2, 30}};
  std::map<std::string, int> per_theorem;
  for (const Cell& cell : cells) {
    auto f = FieldCtx::build(cell.p, cell.n);
    std::mt19937_64 rng(0xacce0000u + static_cast<unsigned>(cell.t) * 97 +
                        cell.p * 13 + cell.n);
    for (int i = 0; i < cell.count; ++i) {
      const auto inst = sample_admissible(cell.t, f, rng);
      const std::string tag = to_string(cell.t) + " on " +
                              std::to_string(cell.p) + "^" +
                              std::to_string(cell.n);
      if (!inst) {
        fail(o, "no admissible instance for theorem " + tag);
        break;
      }
      const PredictionRun run = run_predictor(*inst, cell.t);
      ++runs;
      ++per_theorem[to_string(cell.t)];
      if (!run.agrees()) fail(o, "theorem " + tag + ": " + run.reason);
      if (run.oracle_bent) pool.push_back(*inst);
    }
  }
  for (const auto& [t, n] : per_theorem) {
    if (n < 50) fail(o, "theorem " + t + " has only " + std::to_string(n));
  }
  if (o.pass) {
    o.detail = std::to_string(runs) + " full-spectrum comparisons, " +
               std::to_string(per_theorem.size()) +
               " theorems with >= 50 random instances each";
  }
  return o;
}

Outcome transforms() {
  Outcome o;
  std::size_t funcs = 0;
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 6}, {2, 8}, {3, 4}, {3, 5}, {5, 2}}) {
    auto f = FieldCtx::build(p, n);
    const Integer q = f->size();
    std::mt19937_64 rng(4000 + p * 10 + n);
    for (int i = 0; i < 100; ++i) {
      const PFunc g = random_func(f, rng);
      const WalshSpectrum s = walsh_full(g);
      ++funcs;
      if (!(s == walsh_direct(g))) fail(o, "fast != direct");
      CycInt parseval(p);
      for (const CycInt& v : s.values) parseval.add_product(v, v.conj());
      if (!(parseval == CycInt(p, q * q))) fail(o, "Parseval");
      // Univariate inversion at a random x.
      const ElemIndex x = static_cast<ElemIndex>(rng() % f->size());
      CycInt inv(p);
      for (ElemIndex b = 0; b < f->size(); ++b) {
        inv += s[b].times_root(f->trace(f->mul(b, x)));
      }
      if (!(inv == CycInt(p, q).times_root(g(x)))) fail(o, "inversion");
      // The multivariate inverse identity.
      const std::uint32_t arity = 1 + static_cast<std::uint32_t>(rng() % 3);
      const ReducedPoly F = random_reduced(p, arity, rng);
      const auto back = inverse_walsh_multivariate(walsh_multivariate(F));
      const auto table = F.table();
      for (std::size_t t = 0; t < table.size(); ++t) {
        if (!(back[t] == CycInt::root(p, table[t]))) {
          fail(o, "multivariate inverse identity");
          break;
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(funcs) + " random functions";
  return o;
}

Outcome theorem1() {
  Outcome o;
  std::size_t specs = 0;
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 6}, {3, 4}, {5, 2}}) {
    auto f = FieldCtx::build(p, n);
    std::mt19937_64 rng(5000 + p * 10 + n);
    for (int i = 0; i < 100; ++i) {
      const std::uint32_t tau = 2 + (i % 2);
      const Form1Spec spec{random_func(f, rng), random_reduced(p, tau, rng),
                           random_points(*f, tau, rng)};
      ++specs;
      if (!(walsh_via_theorem1(spec) == walsh_full(compose_form1(spec)))) {
        fail(o, "decomposition differs on " + std::to_string(p) + "^" +
                    std::to_string(n));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(specs) + " specs with random g";
  return o;
}

Outcome degrees() {
  Outcome o;
  std::size_t lemma1 = 0, lemma2 = 0, prop2 = 0;
  for (const ConstructionInstance& inst : bent_pool()) {
    const FieldCtx& c = inst.field();
    const PFunc fx = inst.f();
    const std::uint32_t deg = univariate_degree(fx);
    const std::uint32_t bound = (c.p() - 1) * c.n() / 2;
    ++lemma2;
    if (deg > bound) fail(o, "lemma 2 bound exceeded");
    if (span_rank(c, inst.points) != inst.points.size()) continue;
    const PFunc composed =
        compose_form1({PFunc::zero(inst.g.field_ptr()), inst.F, inst.points});
    ++lemma1;
    if (univariate_degree(composed) != inst.F.degree()) {
      fail(o, "lemma 1 degree differs");
    }
    if (c.p() != 2 && inst.points.size() < c.n()) {
      const auto shape = detect_thm4(inst);
      if (shape) {
        ++prop2;
        const std::uint32_t want =
            std::max(inst.F.degree(), univariate_degree(inst.g));
        if (deg != want) fail(o, "proposition 2 degree differs");
      }
    }
  }
  // Maximal degree (p - 1) n / 2 from a product F over independent points
  // with all A zero.
  auto f = FieldCtx::build(3, 4);
  bool found = false;
  for (ElemIndex a = 1; a < f->size() && !found; ++a) {
    const PFunc g = quadratic(f, a);
    const RegularityReport r = classify(g);
    for (ElemIndex u1 = 1; u1 < f->size() && !found; ++u1) {
      for (ElemIndex u2 = u1 + 1; u2 < f->size() && !found; ++u2) {
        const std::vector<ElemIndex> u = {u1, u2};
        if (span_rank(*f, u) != 2) continue;
        ReducedPoly F(3, 2);
        F.add_term({2, 2}, 1);
        ConstructionInstance inst =
            make_instance(g, *r.epsilon, *r.dual, u, F);
        const auto shape = detect_thm4(inst);
        if (!shape || shape->which != Thm4Case::k1) continue;
        found = true;
        const PredictionRun run = run_predictor(inst, Theorem::kThm4Case1);
        if (!run.agrees() || !run.oracle_bent) fail(o, "max-degree instance");
        if (univariate_degree(inst.f()) != 4) {
          fail(o, "max degree not reached");
        }
      }
    }
  }
  if (!found) fail(o, "no isotropic pair for the max-degree instance");
  if (o.pass) {
    o.detail = std::to_string(lemma2) + " bent instances, " +
               std::to_string(lemma1) + " with independent points, " +
               std::to_string(prop2) + " theorem-4 shapes, max degree 4 on 3^4";
  }
  return o;
}

Outcome gold_iff() {
  Outcome o;
  std::size_t pairs = 0, rows = 0;
  {
    auto f = FieldCtx::build(2, 6);
    for (ElemIndex a = 1; a < f->size(); ++a) {
      const GoldSweepRow row = gold_sweep(f, a, 2, true);
      ++rows;
      pairs += row.pairs;
      if (!row.covered || row.discrepancies != 0) {
        fail(o, "(2,6,2) a=" + std::to_string(a));
      }
    }
  }
  {
    auto f = FieldCtx::build(3, 4);
    std::size_t covered = 0;
    for (ElemIndex a = 1; a < f->size(); ++a) {
      if (!gold_special_branch(*f, a, 1)) continue;
      ++covered;
      const GoldSweepRow row = gold_sweep(f, a, 1, true);
      ++rows;
      pairs += row.pairs;
      if (row.discrepancies != 0) fail(o, "(3,4,1) a=" + std::to_string(a));
    }
    if (covered == 0) fail(o, "no special-branch a on (3,4,1)");
  }
  if (o.pass) {
    o.detail = std::to_string(rows) + " coefficient sweeps, " +
               std::to_string(pairs) + " (u, v) pairs, 0 discrepancies";
  }
  return o;
}

}  // namespace
}  // namespace bentkit

int main() {
  using bentkit::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "reference instance reproduction", 120, bentkit::reference_instances},
      {2, "closed-form oracle equivalence", 60, bentkit::closed_forms},
      {3, "theorem predictions vs oracle", 300, bentkit::theorems},
      {4, "transform identities", 60, bentkit::transforms},
      {5, "decomposition on non-bent g", 60, bentkit::theorem1},
      {6, "degree properties", 120, bentkit::degrees},
      {7, "iff completeness of the gold criteria", 180, bentkit::gold_iff},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bentkit::Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (secs > c.limit_s) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    all = all && o.pass;
    std::ostringstream t;
    t << std::fixed << std::setprecision(1) << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " ("
              << c.title << "): " << o.detail << " [" << t.str() << "s]"
              << std::endl;
  }
  return all ? 0 : 1;
}
