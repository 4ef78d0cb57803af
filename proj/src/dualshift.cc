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

#include "bentkit/dualshift.h"

#include <set>

namespace bentkit {
namespace {

std::vector<Fp> unit_t(std::uint32_t tau, std::uint32_t i, Fp c,
                       std::optional<std::uint32_t> j = std::nullopt) {
  std::vector<Fp> t(tau, 0);
  t[i] = c;
  if (j) t[*j] = 1;
  return t;
}

}  // namespace

Fp DualExpansion::h(std::uint32_t i, ElemIndex b) const {
  const std::uint32_t p = g[i].p();
  return (g[i](b) + A[i][i]) % p;
}

std::vector<std::uint32_t> DualExpansion::gamma() const {
  std::set<std::uint32_t> s;
  for (std::uint32_t i = 0; i < tau; ++i) {
    for (std::uint32_t j = i + 1; j < tau; ++j) {
      if (A[i][j] != 0) {
        s.insert(i);
        s.insert(j);
      }
    }
  }
  return {s.begin(), s.end()};
}

bool DualExpansion::off_diagonal_zero() const { return gamma().empty(); }

std::vector<std::uint32_t> gamma_set(const DualExpansion& expansion) {
  return expansion.gamma();
}

DualExpansion fit_expansion(const PFunc& dual,
                            std::span<const ElemIndex> points,
                            const std::optional<std::vector<Fp>>& diagonal) {
  const FieldCtx& ctx = dual.field();
  const PrimeField& fp = ctx.prime_field();
  const std::uint32_t p = ctx.p();
  const std::uint32_t tau = static_cast<std::uint32_t>(points.size());
  const ElemIndex q = ctx.size();
  for (ElemIndex u : points) {
    ctx.check_index(u);
    if (u == 0) throw InvalidArgument("points u_i must be nonzero");
  }
  if (diagonal) {
    if (p != 2) {
      throw InvalidArgument("diagonal override is only meaningful for p = 2");
    }
    if (diagonal->size() != tau) {
      throw InvalidArgument("diagonal override needs one value per point");
    }
  }
  // D(x, s) = d(x - s) - d(x).
  auto diff = [&](ElemIndex x, ElemIndex s) {
    return fp.sub(dual(ctx.sub(x, s)), dual(x));
  };

  DualExpansion e;
  e.tau = tau;
  e.A.assign(tau, std::vector<Fp>(tau, 0));
  std::vector<std::vector<Fp>> d1(tau, std::vector<Fp>(q));
  for (std::uint32_t i = 0; i < tau; ++i) {
    for (ElemIndex x = 0; x < q; ++x) d1[i][x] = diff(x, points[i]);
    Fp aii = 0;
    if (p == 2) {
      if (diagonal) aii = (*diagonal)[i] % 2;
    } else {
      const ElemIndex two_u = ctx.add(points[i], points[i]);
      const Fp half = fp.inv(2);
      for (ElemIndex x = 0; x < q; ++x) {
        const Fp d2 = diff(x, two_u);
        const Fp v = fp.mul(half, fp.sub(d2, fp.add(d1[i][x], d1[i][x])));
        if (x == 0) {
          aii = v;
        } else if (v != aii) {
          throw NotExpansionForm(
              "second difference along u_" + std::to_string(i + 1) +
                  " is not constant",
              {x, unit_t(tau, i, 2)});
        }
      }
    }
    e.A[i][i] = aii;
    std::vector<Fp> gi(q);
    for (ElemIndex x = 0; x < q; ++x) gi[x] = fp.sub(d1[i][x], aii);
    e.g.emplace_back(dual.field_ptr(), std::move(gi));
  }
  for (std::uint32_t i = 0; i < tau; ++i) {
    for (std::uint32_t j = i + 1; j < tau; ++j) {
      const ElemIndex s = ctx.add(points[i], points[j]);
      Fp aij = 0;
      for (ElemIndex x = 0; x < q; ++x) {
        const Fp v = fp.sub(diff(x, s), fp.add(d1[i][x], d1[j][x]));
        if (x == 0) {
          aij = v;
        } else if (v != aij) {
          throw NotExpansionForm("mixed difference along u_" +
                                     std::to_string(i + 1) + ", u_" +
                                     std::to_string(j + 1) +
                                     " is not constant",
                                 {x, unit_t(tau, i, 1, j)});
        }
      }
      e.A[i][j] = e.A[j][i] = aij;
    }
  }
  if (auto w = verify_expansion(dual, points, e)) {
    throw NotExpansionForm("shift identity fails", *w);
  }
  return e;
}

std::optional<ExpansionWitness> verify_expansion(
    const PFunc& dual, std::span<const ElemIndex> points,
    const DualExpansion& e) {
  const FieldCtx& ctx = dual.field();
  const PrimeField& fp = ctx.prime_field();
  const std::uint32_t p = ctx.p();
  const std::uint32_t tau = static_cast<std::uint32_t>(points.size());
  if (e.tau != tau || e.A.size() != tau || e.g.size() != tau) {
    throw InvalidArgument("expansion shape does not match the points");
  }
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < tau; ++i) count *= p;
  std::vector<Fp> t(tau, 0);
  for (std::uint64_t ti = 0; ti < count; ++ti) {
    std::uint64_t v = ti;
    for (std::uint32_t i = 0; i < tau; ++i) {
      t[i] = static_cast<Fp>(v % p);
      v /= p;
    }
    ElemIndex shift = 0;
    Fp quad = 0;
    for (std::uint32_t i = 0; i < tau; ++i) {
      shift = ctx.add(shift, ctx.mul(t[i], points[i]));
      for (std::uint32_t j = i; j < tau; ++j) {
        quad = fp.add(quad, fp.mul(e.A[i][j], fp.mul(t[i], t[j])));
      }
    }
    for (ElemIndex x = 0; x < ctx.size(); ++x) {
      Fp rhs = fp.add(dual(x), quad);
      for (std::uint32_t i = 0; i < tau; ++i) {
        rhs = fp.add(rhs, fp.mul(e.g[i](x), t[i]));
      }
      if (dual(ctx.sub(x, shift)) != rhs) return ExpansionWitness{x, t};
    }
  }
  return std::nullopt;
}

}  // namespace bentkit
