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

#ifndef BENTKIT_WALSH_H_
#define BENTKIT_WALSH_H_

// Exact Walsh transforms, the decomposition of the transform of
// g(x) + F(Tr(u_1 x), ..., Tr(u_tau x)) through those of g and F, and
// bentness / weak-regularity classification.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bentkit/cyclo.h"
#include "bentkit/func.h"
#include "bentkit/gf.h"

namespace bentkit {

// f^(b) = sum_x w^(f(x) - Tr(bx)) for every b, indexed by element index.
struct WalshSpectrum {
  FieldPtr ctx;
  std::vector<CycInt> values;

  const CycInt& operator[](ElemIndex b) const { return values[b]; }
  std::size_t size() const { return values.size(); }
  bool operator==(const WalshSpectrum& o) const {
    return ctx == o.ctx && values == o.values;
  }
};

// Radix-p transform on character-value counts (a butterfly on +-1 values
// for p = 2). Exact.
WalshSpectrum walsh_full(const PFunc& f);
// The defining double sum, O(p^{2n}). Kept as an independent reference.
WalshSpectrum walsh_direct(const PFunc& f);
WalshSpectrum walsh_direct(const PFunc& f, ElemIndex b_only);

// Character-value counts of the transform: entry [b * p + j] is
// #{x : f(x) - Tr(bx) = j}. The spectrum is sum_j counts[b*p + j] w^j.
std::vector<std::int64_t> walsh_counts(const PFunc& f);

// Bentness decided on the integer counts without building CycInt values;
// intended for exhaustive sweeps.
bool is_bent(const PFunc& f);

// Transform of a multivariate function over F_p^arity; the point
// (b_1, ..., b_arity) sits at index b_1 + b_2 p + ... (as ReducedPoly::table).
struct MultiSpectrum {
  std::uint32_t p;
  std::uint32_t arity;
  std::vector<CycInt> values;
};
MultiSpectrum walsh_multivariate(const ReducedPoly& F);
// (1/p^arity) sum_b F^(b) w^(<b, x>) for every x; equals w^F(x) for a
// spectrum produced by walsh_multivariate.
std::vector<CycInt> inverse_walsh_multivariate(const MultiSpectrum& s);

// f^(b) = p^-tau sum_t F^(t) g^(b - sum_i t_i u_i).
WalshSpectrum walsh_via_theorem1(const Form1Spec& spec);
WalshSpectrum walsh_via_theorem1(const Form1Spec& spec,
                                 const WalshSpectrum& g_hat);
// Specialisation for F = x_1 ... x_tau: the sum over t_tau collapses, leaving
// p^-(tau-1) sum_{t', x'} w^(-<x', t'>) g^(b - sum t_i u_i - (prod x_i) u_tau).
// Throws InvalidArgument when F is not that product.
WalshSpectrum walsh_via_theorem1_product(const Form1Spec& spec,
                                         const WalshSpectrum& g_hat);

enum class BentKind {
  kNotBent,
  kBentNotWeaklyRegular,
  kWeaklyRegular,
  kRegular,
};
std::string to_string(BentKind kind);

// Magnitude realisation P: p^{n/2} for even n, p^{(n-1)/2} G for odd n,
// G the quadratic Gauss sum. Throws InvalidArgument for p = 2 and odd n.
CycInt bent_magnitude(std::uint32_t p, std::uint32_t n);

struct RegularityReport {
  bool is_bent = false;
  BentKind kind = BentKind::kNotBent;
  // Present iff weakly regular: f^(b) = epsilon * P * w^dual(b) for all b.
  // mu is recorded as the rational unit epsilon relative to P; see README.
  std::optional<CycInt> mu;
  std::optional<int> epsilon;
  std::optional<PFunc> dual;
  // For bent functions with odd p: per-b sign and exponent.
  std::vector<int> signs;
  std::vector<Fp> exponents;
};

// Throws InternalInconsistency (naming b) when a bent coefficient is not of
// the form +-P w^j.
RegularityReport classify(const PFunc& f);
RegularityReport classify(const PFunc& f, const WalshSpectrum& spectrum);

// Throws InvalidArgument when f is not weakly regular bent.
PFunc dual_of(const PFunc& f);

// 64-bit FNV-1a over the canonical text of every coefficient, in b order.
std::uint64_t spectrum_digest(const WalshSpectrum& s);

}  // namespace bentkit

#endif  // BENTKIT_WALSH_H_
