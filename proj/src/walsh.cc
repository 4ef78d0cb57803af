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

#include "bentkit/walsh.h"

#include <algorithm>

#include "bentkit/error.h"

namespace bentkit {
namespace {

std::vector<ElemIndex> dual_basis_index(const FieldCtx& ctx) {
  // For each b, the index of the coordinate vector c(b) with
  // c(b)_j = Tr(b x^j), so that Tr(bx) = <c(b), coords(x)>.
  const std::uint32_t p = ctx.p();
  const std::uint32_t n = ctx.n();
  std::vector<ElemIndex> basis(n);
  ElemIndex w = 1;
  for (std::uint32_t j = 0; j < n; ++j) {
    basis[j] = w;
    w *= p;
  }
  std::vector<ElemIndex> out(ctx.size());
  for (ElemIndex b = 0; b < ctx.size(); ++b) {
    ElemIndex idx = 0;
    for (std::uint32_t j = n; j-- > 0;) {
      idx = idx * p + ctx.trace(ctx.mul(b, basis[j]));
    }
    out[b] = idx;
  }
  return out;
}

// Sylvester-ordered Hadamard transform of (-1)^f, in place.
std::vector<std::int64_t> hadamard(const PFunc& f) {
  const std::size_t q = f.size();
  std::vector<std::int64_t> v(q);
  for (std::size_t x = 0; x < q; ++x) v[x] = f(x) ? -1 : 1;
  for (std::size_t h = 1; h < q; h <<= 1) {
    for (std::size_t i = 0; i < q; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = v[j];
        const std::int64_t b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
  return v;
}

// Radix-p transform of the count vectors e_{f(x)}: afterwards slot c holds
// counts of sum_x w^(f(x) - <c, x>).
std::vector<std::int64_t> radix_p_counts(const PFunc& f) {
  const FieldCtx& ctx = f.field();
  const std::uint32_t p = ctx.p();
  const std::uint32_t n = ctx.n();
  const std::size_t q = ctx.size();
  std::vector<std::int64_t> a(q * p, 0);
  for (std::size_t x = 0; x < q; ++x) a[x * p + f(static_cast<ElemIndex>(x))] = 1;
  std::vector<std::int64_t> in(p * p);
  std::size_t stride = 1;
  for (std::uint32_t j = 0; j < n; ++j, stride *= p) {
    for (std::size_t base = 0; base < q; ++base) {
      if ((base / stride) % p != 0) continue;
      for (std::uint32_t d = 0; d < p; ++d) {
        std::copy_n(&a[(base + d * stride) * p], p, &in[d * p]);
      }
      for (std::uint32_t c = 0; c < p; ++c) {
        std::int64_t* out = &a[(base + c * stride) * p];
        std::fill_n(out, p, 0);
        for (std::uint32_t d = 0; d < p; ++d) {
          // Multiply by w^(-c d): slot k moves to k - c d.
          const std::uint32_t shift = (p - (c * d) % p) % p;
          const std::int64_t* src = &in[d * p];
          for (std::uint32_t k = 0; k < p; ++k) {
            std::uint32_t t = k + shift;
            if (t >= p) t -= p;
            out[t] += src[k];
          }
        }
      }
    }
  }
  return a;
}

}  // namespace

std::vector<std::int64_t> walsh_counts(const PFunc& f) {
  const FieldCtx& ctx = f.field();
  const std::uint32_t p = ctx.p();
  const std::size_t q = ctx.size();
  const auto cb = dual_basis_index(ctx);
  std::vector<std::int64_t> out(q * p);
  if (p == 2) {
    const auto h = hadamard(f);
    const auto qi = static_cast<std::int64_t>(q);
    for (std::size_t b = 0; b < q; ++b) {
      out[2 * b] = (qi + h[cb[b]]) / 2;
      out[2 * b + 1] = (qi - h[cb[b]]) / 2;
    }
    return out;
  }
  const auto a = radix_p_counts(f);
  for (std::size_t b = 0; b < q; ++b) {
    std::copy_n(&a[cb[b] * p], p, &out[b * p]);
  }
  return out;
}

WalshSpectrum walsh_full(const PFunc& f) {
  const std::uint32_t p = f.p();
  const std::size_t q = f.size();
  WalshSpectrum s{f.field_ptr(), {}};
  s.values.reserve(q);
  if (p == 2) {
    const auto h = hadamard(f);
    const auto cb = dual_basis_index(f.field());
    for (std::size_t b = 0; b < q; ++b) s.values.emplace_back(2, h[cb[b]]);
    return s;
  }
  const auto counts = walsh_counts(f);
  for (std::size_t b = 0; b < q; ++b) {
    s.values.push_back(CycInt::from_counts(
        p, std::span<const std::int64_t>(&counts[b * p], p)));
  }
  return s;
}

WalshSpectrum walsh_direct(const PFunc& f, ElemIndex b) {
  const FieldCtx& ctx = f.field();
  const std::uint32_t p = ctx.p();
  ctx.check_index(b);
  std::vector<std::int64_t> counts(p, 0);
  for (ElemIndex x = 0; x < ctx.size(); ++x) {
    ++counts[ctx.prime_field().sub(f(x), ctx.trace(ctx.mul(b, x)))];
  }
  return {f.field_ptr(), {CycInt::from_counts(p, counts)}};
}

WalshSpectrum walsh_direct(const PFunc& f) {
  WalshSpectrum s{f.field_ptr(), {}};
  for (ElemIndex b = 0; b < f.size(); ++b) {
    s.values.push_back(std::move(walsh_direct(f, b).values[0]));
  }
  return s;
}

bool is_bent(const PFunc& f) {
  const FieldCtx& ctx = f.field();
  const std::uint32_t p = ctx.p();
  const std::int64_t q = ctx.size();
  if (p == 2) {
    if (ctx.n() % 2 != 0) return false;
    const std::int64_t m = std::int64_t{1} << (ctx.n() / 2);
    const auto h = hadamard(f);
    return std::all_of(h.begin(), h.end(),
                       [&](std::int64_t v) { return v == m || v == -m; });
  }
  const auto a = radix_p_counts(f);
  // |sum c_j w^j|^2 = sum_d N_d w^d with N_d = sum_j c_j c_{j+d}; it is the
  // integer N_0 - N_1 exactly when N_1 = ... = N_{p-1}.
  for (std::int64_t y = 0; y < q; ++y) {
    const std::int64_t* c = &a[y * p];
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
    for (std::uint32_t j = 0; j < p; ++j) {
      n0 += c[j] * c[j];
      n1 += c[j] * c[(j + 1) % p];
    }
    if (n0 - n1 != q) return false;
    for (std::uint32_t d = 2; d < p; ++d) {
      std::int64_t nd = 0;
      for (std::uint32_t j = 0; j < p; ++j) nd += c[j] * c[(j + d) % p];
      if (nd != n1) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Multivariate transform

namespace {

std::uint64_t checked_power(std::uint32_t p, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    r *= p;
    if (r > kMaxFieldSize) throw InvalidArgument("F_p^tau too large");
  }
  return r;
}

std::vector<Fp> digits(std::uint64_t idx, std::uint32_t p,
                       std::uint32_t count) {
  std::vector<Fp> d(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    d[i] = static_cast<Fp>(idx % p);
    idx /= p;
  }
  return d;
}

Fp dot(const std::vector<Fp>& a, const std::vector<Fp>& b, std::uint32_t p) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::uint64_t{a[i]} * b[i];
  return static_cast<Fp>(s % p);
}

}  // namespace

MultiSpectrum walsh_multivariate(const ReducedPoly& F) {
  const std::uint32_t p = F.p();
  const std::uint32_t tau = F.arity();
  const std::uint64_t count = checked_power(p, tau);
  const auto table = F.table();
  std::vector<std::vector<Fp>> pts(count);
  for (std::uint64_t i = 0; i < count; ++i) pts[i] = digits(i, p, tau);
  MultiSpectrum s{p, tau, {}};
  s.values.reserve(count);
  std::vector<std::int64_t> counts(p);
  for (std::uint64_t b = 0; b < count; ++b) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint64_t x = 0; x < count; ++x) {
      ++counts[(table[x] + p - dot(pts[b], pts[x], p)) % p];
    }
    s.values.push_back(CycInt::from_counts(p, counts));
  }
  return s;
}

std::vector<CycInt> inverse_walsh_multivariate(const MultiSpectrum& s) {
  const std::uint32_t p = s.p;
  const std::uint64_t count = checked_power(p, s.arity);
  if (s.values.size() != count) {
    throw InvalidArgument("spectrum size does not match arity");
  }
  std::vector<std::vector<Fp>> pts(count);
  for (std::uint64_t i = 0; i < count; ++i) pts[i] = digits(i, p, s.arity);
  std::vector<CycInt> out;
  out.reserve(count);
  for (std::uint64_t x = 0; x < count; ++x) {
    CycInt acc(p);
    for (std::uint64_t b = 0; b < count; ++b) {
      acc += s.values[b].times_root(dot(pts[b], pts[x], p));
    }
    out.push_back(acc.div_exact(Integer(count)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition

WalshSpectrum walsh_via_theorem1(const Form1Spec& spec) {
  spec.validate();
  return walsh_via_theorem1(spec, walsh_full(spec.g));
}

WalshSpectrum walsh_via_theorem1(const Form1Spec& spec,
                                 const WalshSpectrum& g_hat) {
  spec.validate();
  const FieldCtx& ctx = spec.g.field();
  if (g_hat.ctx != spec.g.field_ptr()) {
    throw ContextMismatch("spectrum and function over different fields");
  }
  const std::uint32_t p = ctx.p();
  const std::uint32_t tau = spec.F.arity();
  const auto F_hat = walsh_multivariate(spec.F);
  const std::uint64_t count = F_hat.values.size();
  std::vector<ElemIndex> shift(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    auto d = digits(t, p, tau);
    ElemIndex s = 0;
    for (std::uint32_t i = 0; i < tau; ++i) {
      s = ctx.add(s, ctx.mul(d[i], spec.points[i]));
    }
    shift[t] = s;
  }
  const Integer scale = Integer(count);
  WalshSpectrum out{spec.g.field_ptr(), {}};
  out.values.reserve(ctx.size());
  for (ElemIndex b = 0; b < ctx.size(); ++b) {
    CycInt acc(p);
    for (std::uint64_t t = 0; t < count; ++t) {
      if (F_hat.values[t].is_zero()) continue;
      acc.add_product(F_hat.values[t], g_hat[ctx.sub(b, shift[t])]);
    }
    out.values.push_back(acc.div_exact(scale));
  }
  return out;
}

WalshSpectrum walsh_via_theorem1_product(const Form1Spec& spec,
                                         const WalshSpectrum& g_hat) {
  spec.validate();
  const FieldCtx& ctx = spec.g.field();
  const std::uint32_t p = ctx.p();
  const std::uint32_t tau = spec.F.arity();
  if (tau == 0 || !(spec.F == ReducedPoly::product(p, tau))) {
    throw InvalidArgument("product form needs F = x_1 ... x_tau");
  }
  if (g_hat.ctx != spec.g.field_ptr()) {
    throw ContextMismatch("spectrum and function over different fields");
  }
  const std::uint32_t m = tau - 1;
  const std::uint64_t count = checked_power(p, m);
  const ElemIndex u_last = spec.points[m];
  // Per (t', x'): the offset sum t_i u_i + (prod x_i) u_tau and the phase
  // -<x', t'>.
  struct Term {
    ElemIndex offset;
    Fp phase;
  };
  std::vector<Term> terms;
  terms.reserve(count * count);
  for (std::uint64_t ti = 0; ti < count; ++ti) {
    const auto t = digits(ti, p, m);
    ElemIndex base = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      base = ctx.add(base, ctx.mul(t[i], spec.points[i]));
    }
    for (std::uint64_t xi = 0; xi < count; ++xi) {
      const auto x = digits(xi, p, m);
      Fp prod = 1 % p;
      for (Fp v : x) prod = ctx.prime_field().mul(prod, v);
      terms.push_back({ctx.add(base, ctx.mul(prod, u_last)),
                       ctx.prime_field().neg(dot(x, t, p))});
    }
  }
  const Integer scale = Integer(count);
  WalshSpectrum out{spec.g.field_ptr(), {}};
  out.values.reserve(ctx.size());
  for (ElemIndex b = 0; b < ctx.size(); ++b) {
    CycInt acc(p);
    for (const auto& term : terms) {
      acc += g_hat[ctx.sub(b, term.offset)].times_root(term.phase);
    }
    out.values.push_back(acc.div_exact(scale));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

std::string to_string(BentKind kind) {
  switch (kind) {
    case BentKind::kNotBent:
      return "not-bent";
    case BentKind::kBentNotWeaklyRegular:
      return "bent-not-weakly-regular";
    case BentKind::kWeaklyRegular:
      return "weakly-regular";
    case BentKind::kRegular:
      return "regular";
  }
  return "unknown";
}

CycInt bent_magnitude(std::uint32_t p, std::uint32_t n) {
  if (n % 2 == 0) {
    Integer v = 1;
    for (std::uint32_t i = 0; i < n / 2; ++i) v *= p;
    return CycInt(p, v);
  }
  if (p == 2) {
    throw InvalidArgument("2^{n/2} is irrational for odd n");
  }
  Integer v = 1;
  for (std::uint32_t i = 0; i < (n - 1) / 2; ++i) v *= p;
  return gauss_sum(p) * v;
}

RegularityReport classify(const PFunc& f) {
  return classify(f, walsh_full(f));
}

RegularityReport classify(const PFunc& f, const WalshSpectrum& spectrum) {
  const FieldCtx& ctx = f.field();
  if (spectrum.ctx != f.field_ptr() || spectrum.size() != ctx.size()) {
    throw ContextMismatch("spectrum does not belong to this function");
  }
  const std::uint32_t p = ctx.p();
  const std::uint32_t n = ctx.n();
  Integer q = 1;
  for (std::uint32_t i = 0; i < n; ++i) q *= p;
  RegularityReport r;
  for (const auto& v : spectrum.values) {
    auto ns = norm_sq(v);
    const Integer* iv = std::get_if<Integer>(&ns);
    if (iv == nullptr || *iv != q) return r;
  }
  r.is_bent = true;
  const std::size_t size = ctx.size();
  r.signs.resize(size);
  r.exponents.resize(size);
  if (p == 2) {
    for (std::size_t b = 0; b < size; ++b) {
      const bool neg = spectrum.values[b].integer_value() < 0;
      r.signs[b] = 1;
      r.exponents[b] = neg ? 1 : 0;
    }
  } else {
    const CycInt P = bent_magnitude(p, n);
    const CycInt minus_P = -P;
    for (std::size_t b = 0; b < size; ++b) {
      int found = 0;
      for (std::uint32_t j = 0; j < p; ++j) {
        const CycInt v = spectrum.values[b].times_root(-std::int64_t{j});
        int sign = 0;
        if (v == P) sign = 1;
        if (v == minus_P) sign = -1;
        if (sign == 0) continue;
        ++found;
        r.signs[b] = sign;
        r.exponents[b] = j;
      }
      if (found != 1) {
        throw InternalInconsistency(
            "bent Walsh coefficient at b = #" + std::to_string(b) +
            " is not of the form +-P w^j (" + std::to_string(found) +
            " matches): " + spectrum.values[b].to_string());
      }
    }
  }
  const int eps = r.signs[0];
  const bool weakly = std::all_of(r.signs.begin(), r.signs.end(),
                                  [&](int s) { return s == eps; });
  if (!weakly) {
    r.kind = BentKind::kBentNotWeaklyRegular;
    return r;
  }
  r.epsilon = eps;
  r.mu = CycInt(p, Integer(eps));
  r.dual = PFunc(f.field_ptr(), r.exponents);
  // With P = p^{(n-1)/2} G and G = i sqrt(p) for p = 3 mod 4, mu is not real
  // for odd n; only then is a positive epsilon short of regular.
  const bool real_P = p == 2 || n % 2 == 0 || p % 4 == 1;
  r.kind = eps == 1 && real_P ? BentKind::kRegular : BentKind::kWeaklyRegular;
  return r;
}

PFunc dual_of(const PFunc& f) {
  auto r = classify(f);
  if (!r.dual) {
    throw InvalidArgument("function is " + to_string(r.kind) +
                          "; the dual is defined for weakly regular bent "
                          "functions only");
  }
  return *r.dual;
}

std::uint64_t spectrum_digest(const WalshSpectrum& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& v : s.values) {
    for (char ch : v.to_string() + "\n") {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace bentkit
