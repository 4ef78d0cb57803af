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

#ifndef BENTKIT_DUALSHIFT_H_
#define BENTKIT_DUALSHIFT_H_

// Shift expansions of a dual function. For points u_1..u_tau we look for
// constants A_ij (i <= j) and functions g_i with
//
//   d(x - sum_i t_i u_i) = d(x) + sum_{i<=j} A_ij t_i t_j + sum_i g_i(x) t_i
//
// for every x in F_{p^n} and t in F_p^tau.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bentkit/error.h"
#include "bentkit/func.h"
#include "bentkit/gf.h"

namespace bentkit {

struct ExpansionWitness {
  ElemIndex x = 0;
  std::vector<Fp> t;
};

class NotExpansionForm : public Error {
 public:
  NotExpansionForm(const std::string& what, ExpansionWitness witness)
      : Error(what), witness_(std::move(witness)) {}
  const ExpansionWitness& witness() const { return witness_; }

 private:
  ExpansionWitness witness_;
};

struct DualExpansion {
  std::uint32_t tau = 0;
  // Symmetric tau x tau; entry [i][j] = [j][i] = A_ij (0-based).
  std::vector<std::vector<Fp>> A;
  std::vector<PFunc> g;

  Fp a(std::uint32_t i, std::uint32_t j) const { return A[i][j]; }
  // h_i(b) = g_i(b) + A_ii.
  Fp h(std::uint32_t i, ElemIndex b) const;
  // Indices (0-based, ascending) that occur in a nonzero off-diagonal A_ij.
  std::vector<std::uint32_t> gamma() const;
  // All off-diagonal A_ij vanish.
  bool off_diagonal_zero() const;
};

// Fits A and g_i from the differences d(x - u_i) - d(x), d(x - 2u_i) - d(x)
// and d(x - u_i - u_j) - d(x), then checks the identity exhaustively.
// For p = 2 the split of A_ii t_i + g_i(x) t_i is not identifiable, so A_ii
// defaults to 0 and `diagonal` may supply other values; h_i is the same
// either way. Throws NotExpansionForm with a witness on failure, and
// InvalidArgument for a zero point or a diagonal override with odd p.
DualExpansion fit_expansion(
    const PFunc& dual, std::span<const ElemIndex> points,
    const std::optional<std::vector<Fp>>& diagonal = std::nullopt);

// First (x, t), scanning t (by index) in the outer loop and x in the inner, where the identity
// fails; nullopt when it holds everywhere.
std::optional<ExpansionWitness> verify_expansion(
    const PFunc& dual, std::span<const ElemIndex> points,
    const DualExpansion& expansion);

std::vector<std::uint32_t> gamma_set(const DualExpansion& expansion);

}  // namespace bentkit

#endif  // BENTKIT_DUALSHIFT_H_
