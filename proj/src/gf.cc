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

#include "bentkit/gf.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "bentkit/error.h"

namespace bentkit {
namespace {

using Poly = std::vector<Fp>;  // least significant coefficient first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, const PrimeField& fp) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    Fp lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = fp.sub(a[shift + i], fp.mul(lead, m[i]));
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m,
                 const PrimeField& fp) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = fp.add(r[i + j], fp.mul(a[i], b[j]));
    }
  }
  return poly_mod(std::move(r), m, fp);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m,
                 const PrimeField& fp) {
  Poly r{1};
  base = poly_mod(std::move(base), m, fp);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, fp);
    base = poly_mulmod(base, base, m, fp);
    e >>= 1;
  }
  trim(r);
  return r;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& m, const PrimeField& fp) {
  const std::uint32_t p = fp.p();
  const std::size_t n = m.size() - 1;
  if (n <= 1) return n == 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    Poly div(d + 1, 0);
    div[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<Fp>(v % p);
        v /= p;
      }
      if (poly_mod(m, div, fp).empty()) return false;
    }
  }
  return true;
}

Poly index_to_poly(std::uint64_t idx, std::uint32_t p, std::uint32_t n) {
  Poly r(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    r[i] = static_cast<Fp>(idx % p);
    idx /= p;
  }
  trim(r);
  return r;
}

std::uint64_t poly_to_index(const Poly& a, std::uint32_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * p + a[i];
  return r;
}

bool is_primitive_poly_elem(const Poly& g, const Poly& m, const PrimeField& fp,
                            std::uint64_t order,
                            const std::vector<std::uint64_t>& factors) {
  if (g.empty()) return false;
  if (poly_powmod(g, order, m, fp) != Poly{1}) return false;
  for (std::uint64_t r : factors) {
    if (poly_powmod(g, order / r, m, fp) == Poly{1}) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw InvalidArgument("not a prime: " + std::to_string(p));
  }
}

Fp PrimeField::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Fp>(r);
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
  Fp r = 1 % p_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fp PrimeField::inv(Fp a) const {
  if (a % p_ == 0) throw InvalidArgument("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

// ---------------------------------------------------------------------------
// FieldCtx

namespace {

void check_size(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw InvalidArgument("not a prime: " + std::to_string(p));
  if (n == 0) throw InvalidArgument("extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw InvalidArgument("field " + std::to_string(p) + "^" +
                            std::to_string(n) + " exceeds the size bound 2^20");
    }
  }
}

std::uint32_t least_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  PrimeField fp(p);
  auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto r : factors) {
      if (fp.pow(g, (p - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalInconsistency("no primitive root mod " + std::to_string(p));
}

}  // namespace

FieldPtr FieldCtx::build(std::uint32_t p, std::uint32_t n) {
  check_size(p, n);
  if (auto conway = conway_polynomial(p, n)) {
    return std::make_shared<const FieldCtx>(Token{}, p, std::move(*conway),
                                            ModulusSource::kConway,
                                            std::nullopt);
  }
  PrimeField fp(p);
  if (n == 1) {
    Poly m{fp.neg(least_primitive_root(p)), 1};
    return std::make_shared<const FieldCtx>(Token{}, p, std::move(m),
                                            ModulusSource::kConway,
                                            std::nullopt);
  }
  const std::uint64_t tails = ipow(p, n);
  for (std::uint64_t idx = 1; idx < tails; ++idx) {
    if (idx % p == 0) continue;  // constant term zero means x divides it
    Poly m(n + 1, 0);
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < n; ++i) {
      m[i] = static_cast<Fp>(v % p);
      v /= p;
    }
    m[n] = 1;
    if (is_irreducible(m, fp)) {
      return std::make_shared<const FieldCtx>(
          Token{}, p, std::move(m), ModulusSource::kSmallestIrreducible,
          std::nullopt);
    }
  }
  throw InternalInconsistency("no irreducible polynomial of degree " +
                              std::to_string(n) + " over F_" +
                              std::to_string(p));
}

FieldPtr FieldCtx::build(std::uint32_t p, std::vector<Fp> modulus,
                         std::optional<ElemIndex> generator) {
  if (modulus.size() < 2) {
    throw InvalidArgument("modulus must have degree at least 1");
  }
  check_size(p, static_cast<std::uint32_t>(modulus.size() - 1));
  for (Fp c : modulus) {
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  }
  if (modulus.back() != 1) throw InvalidArgument("modulus must be monic");
  return std::make_shared<const FieldCtx>(Token{}, p, std::move(modulus),
                                          ModulusSource::kExplicit, generator);
}

FieldCtx::FieldCtx(Token, std::uint32_t p, std::vector<Fp> modulus,
                   ModulusSource source, std::optional<ElemIndex> generator)
    : p_(p),
      n_(static_cast<std::uint32_t>(modulus.size() - 1)),
      q_(static_cast<std::uint32_t>(ipow(p, n_))),
      fp_(p),
      modulus_(std::move(modulus)),
      source_(source) {
  if (!is_irreducible(modulus_, fp_)) {
    if (source == ModulusSource::kExplicit) {
      throw InvalidArgument("modulus " + modulus_string() +
                            " is reducible over F_" + std::to_string(p_));
    }
    throw InternalInconsistency("bundled modulus is reducible: " +
                                modulus_string());
  }
  digit_weight_.resize(n_ + 1);
  digit_weight_[0] = 1;
  for (std::uint32_t i = 1; i <= n_; ++i) {
    digit_weight_[i] = digit_weight_[i - 1] * p_;
  }
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto primitive_index = [&](std::uint64_t idx) {
    return is_primitive_poly_elem(index_to_poly(idx, p_, n_), modulus_, fp_,
                                  order, factors);
  };
  if (generator) {
    if (*generator >= q_ || !primitive_index(*generator)) {
      throw InvalidArgument("generator #" + std::to_string(*generator) +
                            " is not a primitive element");
    }
    primitive_ = *generator;
  } else {
    // Residue of x: index p for n > 1; for n = 1 it is the root -m_0.
    ElemIndex x = n_ == 1 ? fp_.neg(modulus_[0]) : p_;
    if (primitive_index(x)) {
      primitive_ = x;
    } else {
      primitive_ = 0;
      for (ElemIndex idx = 1; idx < q_; ++idx) {
        if (primitive_index(idx)) {
          primitive_ = idx;
          break;
        }
      }
      if (primitive_ == 0) {
        throw InternalInconsistency("no primitive element found");
      }
    }
  }
  build_tables();
}

void FieldCtx::build_tables() {
  const std::uint32_t order = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  log_.assign(q_, 0);
  const Poly g = index_to_poly(primitive_, p_, n_);
  const bool g_is_x = n_ > 1 && primitive_ == p_;
  Poly cur{1};
  for (std::uint32_t k = 0; k < order; ++k) {
    ElemIndex idx = static_cast<ElemIndex>(poly_to_index(cur, p_));
    if (k > 0 && idx == 1) {
      throw InternalInconsistency("primitive element has short order");
    }
    exp_[k] = idx;
    exp_[k + order] = idx;
    log_[idx] = k;
    if (g_is_x) {
      cur.insert(cur.begin(), 0);
      cur = poly_mod(std::move(cur), modulus_, fp_);
    } else {
      cur = poly_mulmod(cur, g, modulus_, fp_);
    }
  }
  neg_.resize(q_);
  for (ElemIndex a = 0; a < q_; ++a) {
    ElemIndex r = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      r += fp_.neg(coord(a, i)) * digit_weight_[i];
    }
    neg_[a] = r;
  }
  // Tr is F_p-linear, so the traces of the basis monomials determine it.
  std::vector<Fp> basis_trace(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    ElemIndex x = digit_weight_[i];
    ElemIndex s = 0;
    ElemIndex y = x;
    for (std::uint32_t j = 0; j < n_; ++j) {
      s = add(s, y);
      y = pow(y, p_);
    }
    if (s >= p_) throw InternalInconsistency("trace left the prime field");
    basis_trace[i] = s;
  }
  trace_.resize(q_);
  for (ElemIndex a = 0; a < q_; ++a) {
    std::uint64_t s = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      s += std::uint64_t{coord(a, i)} * basis_trace[i];
    }
    trace_[a] = static_cast<Fp>(s % p_);
  }
}

std::string FieldCtx::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    Fp c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string FieldCtx::name() const {
  return std::to_string(p_) + "^" + std::to_string(n_);
}

void FieldCtx::check_index(ElemIndex a) const {
  if (a >= q_) {
    throw InvalidArgument("element index " + std::to_string(a) +
                          " out of range for F_" + name());
  }
}

FieldElem FieldCtx::elem(ElemIndex i) const {
  check_index(i);
  return FieldElem(this, i);
}

std::vector<FieldElem> FieldCtx::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (ElemIndex i = 0; i < q_; ++i) out.emplace_back(this, i);
  return out;
}

ElemIndex FieldCtx::add(ElemIndex a, ElemIndex b) const {
  if (p_ == 2) return a ^ b;
  ElemIndex r = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    Fp d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * digit_weight_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

ElemIndex FieldCtx::inv(ElemIndex a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in F_" + name());
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

ElemIndex FieldCtx::exp(std::int64_t k) const {
  const std::int64_t order = q_ - 1;
  std::int64_t r = k % order;
  if (r < 0) r += order;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t FieldCtx::log(ElemIndex a) const {
  if (a == 0) throw InvalidArgument("logarithm of zero");
  return log_[a];
}

ElemIndex FieldCtx::pow(ElemIndex a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw InvalidArgument("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t order = q_ - 1;
  std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % order)) % order;
  if (r < 0) r += order;
  return exp_[static_cast<std::size_t>(r)];
}

ElemIndex FieldCtx::frobenius(ElemIndex a, std::uint32_t i) const {
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  std::uint64_t e = 1;
  for (std::uint32_t j = 0; j < i % n_; ++j) e = e * p_ % order;
  return exp_[log_[a] * e % order];
}

ElemIndex FieldCtx::trace_to(ElemIndex a, std::uint32_t k) const {
  if (k == 0 || n_ % k != 0) {
    throw InvalidArgument("trace to F_{" + std::to_string(p_) + "^" +
                          std::to_string(k) + "} requires k | " +
                          std::to_string(n_));
  }
  ElemIndex s = 0;
  ElemIndex y = a;
  for (std::uint32_t i = 0; i < n_ / k; ++i) {
    s = add(s, y);
    y = frobenius(y, k);
  }
  return s;
}

bool FieldCtx::in_subfield(ElemIndex a, std::uint32_t k) const {
  if (k == 0 || n_ % k != 0) {
    throw InvalidArgument("F_{p^k} is a subfield only when k | n");
  }
  return frobenius(a, k) == a;
}

std::vector<Fp> FieldCtx::coords(ElemIndex a) const {
  std::vector<Fp> c(n_);
  for (std::uint32_t i = 0; i < n_; ++i) c[i] = coord(a, i);
  return c;
}

ElemIndex FieldCtx::from_coords(std::span<const Fp> c) const {
  if (c.size() != n_) throw InvalidArgument("coordinate vector length");
  ElemIndex r = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (c[i] >= p_) throw InvalidArgument("coordinate out of range");
    r += c[i] * digit_weight_[i];
  }
  return r;
}

// ---------------------------------------------------------------------------
// FieldElem

const FieldCtx* FieldElem::check(const FieldElem& o) const {
  if (ctx_ == nullptr || ctx_ != o.ctx_) {
    throw ContextMismatch("field elements from different contexts");
  }
  return ctx_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  return {check(o), check(o)->add(index_, o.index_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  return {check(o), check(o)->sub(index_, o.index_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  return {check(o), check(o)->mul(index_, o.index_)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
  return {check(o), check(o)->div(index_, o.index_)};
}
FieldElem FieldElem::operator-() const {
  return {check(*this), ctx_->neg(index_)};
}
FieldElem FieldElem::pow(std::int64_t e) const {
  return {check(*this), ctx_->pow(index_, e)};
}
FieldElem FieldElem::inv() const { return {check(*this), ctx_->inv(index_)}; }

FieldElem trace_k(const FieldElem& x, std::uint32_t k) {
  if (x.ctx() == nullptr) throw InvalidArgument("unbound field element");
  return {x.ctx(), x.ctx()->trace_to(x.index(), k)};
}

Fp trace(const FieldElem& x) {
  if (x.ctx() == nullptr) throw InvalidArgument("unbound field element");
  return x.ctx()->trace(x.index());
}

// ---------------------------------------------------------------------------
// SubfieldMap

SubfieldMap::SubfieldMap(const FieldCtx& big, FieldPtr small)
    : big_(&big), small_(std::move(small)) {
  const std::uint32_t k = small_->n();
  if (small_->p() != big.p() || big.n() % k != 0) {
    throw InvalidArgument("F_" + small_->name() + " is not a subfield of F_" +
                          big.name());
  }
  const auto& m = small_->modulus();
  ElemIndex root = 0;
  bool found = false;
  for (ElemIndex r = 0; r < big.size() && !found; ++r) {
    if (!big.in_subfield(r, k)) continue;
    ElemIndex acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
      acc = big.add(big.mul(acc, r), m[i]);
    }
    if (acc == 0) {
      root = r;
      found = true;
    }
  }
  if (!found) throw InternalInconsistency("subfield modulus has no root");
  embed_.resize(small_->size());
  for (ElemIndex s = 0; s < small_->size(); ++s) {
    ElemIndex acc = 0;
    ElemIndex pw = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      acc = big.add(acc, big.mul(small_->coord(s, i), pw));
      pw = big.mul(pw, root);
    }
    embed_[s] = acc;
    inverse_.emplace(acc, s);
  }
}

ElemIndex SubfieldMap::coerce(ElemIndex big_index) const {
  big_->check_index(big_index);
  auto it = inverse_.find(big_index);
  if (it == inverse_.end()) {
    throw InvalidArgument("element #" + std::to_string(big_index) +
                          " is not in the subfield F_" + small_->name());
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Linear algebra over F_p

LinearSolution solve_mod_p(const PrimeField& fp,
                           std::vector<std::vector<Fp>> matrix,
                           std::vector<Fp> rhs) {
  const std::size_t rows = matrix.size();
  if (rhs.size() != rows) throw InvalidArgument("rhs length mismatch");
  const std::size_t cols = rows == 0 ? 0 : matrix[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && matrix[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(matrix[piv], matrix[r]);
    std::swap(rhs[piv], rhs[r]);
    Fp s = fp.inv(matrix[r][c]);
    for (auto& v : matrix[r]) v = fp.mul(v, s);
    rhs[r] = fp.mul(rhs[r], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || matrix[i][c] == 0) continue;
      Fp f = matrix[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        matrix[i][j] = fp.sub(matrix[i][j], fp.mul(f, matrix[r][j]));
      }
      rhs[i] = fp.sub(rhs[i], fp.mul(f, rhs[r]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolution out;
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) return out;
  }
  std::vector<Fp> part(cols, 0);
  for (std::size_t i = 0; i < r; ++i) part[pivot_col[i]] = rhs[i];
  out.particular = std::move(part);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fp> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r; ++i) {
      v[pivot_col[i]] = fp.neg(matrix[i][free]);
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::uint32_t rank_mod_p(const PrimeField& fp,
                         std::vector<std::vector<Fp>> rows) {
  if (rows.empty()) return 0;
  std::vector<Fp> zero(rows.size(), 0);
  // rank(M) = cols - dim ker(M) with M having the given rows.
  const std::size_t cols = rows[0].size();
  auto sol = solve_mod_p(fp, std::move(rows), std::move(zero));
  return static_cast<std::uint32_t>(cols - sol.kernel.size());
}

std::uint32_t span_rank(const FieldCtx& ctx,
                        std::span<const ElemIndex> elems) {
  std::vector<std::vector<Fp>> rows;
  for (ElemIndex e : elems) rows.push_back(ctx.coords(e));
  return rank_mod_p(ctx.prime_field(), std::move(rows));
}

std::vector<ElemIndex> solve_linearized(const FieldCtx& ctx, ElemIndex a,
                                        std::uint32_t k, ElemIndex rhs) {
  ctx.check_index(a);
  ctx.check_index(rhs);
  if (a == 0) throw InvalidArgument("linearized equation needs a != 0");
  const std::uint32_t n = ctx.n();
  const ElemIndex ak = ctx.frobenius(a, k);
  auto apply = [&](ElemIndex x) {
    return ctx.add(ctx.mul(ak, ctx.frobenius(x, 2 * k)), ctx.mul(a, x));
  };
  // Column j holds the coordinates of L(basis_j).
  std::vector<std::vector<Fp>> m(n, std::vector<Fp>(n, 0));
  ElemIndex basis = 1;
  for (std::uint32_t j = 0; j < n; ++j) {
    auto col = ctx.coords(apply(basis));
    for (std::uint32_t i = 0; i < n; ++i) m[i][j] = col[i];
    basis *= ctx.p();
  }
  auto sol = solve_mod_p(ctx.prime_field(), std::move(m), ctx.coords(rhs));
  std::vector<ElemIndex> out;
  if (!sol.particular) return out;
  const ElemIndex x0 = ctx.from_coords(*sol.particular);
  std::vector<ElemIndex> kernel;
  for (auto& v : sol.kernel) kernel.push_back(ctx.from_coords(v));
  out.push_back(x0);
  for (ElemIndex kv : kernel) {
    const std::size_t sz = out.size();
    for (Fp c = 1; c < ctx.p(); ++c) {
      ElemIndex step = ctx.mul(c, kv);
      for (std::size_t i = 0; i < sz; ++i) out.push_back(ctx.add(out[i], step));
    }
  }
  std::sort(out.begin(), out.end());
  for (ElemIndex x : out) {
    if (apply(x) != rhs) {
      throw InternalInconsistency("linearized solution failed substitution");
    }
  }
  return out;
}

std::vector<FieldElem> solve_linearized(const FieldElem& a, std::uint32_t k,
                                        const FieldElem& rhs) {
  if (a.ctx() == nullptr || a.ctx() != rhs.ctx()) {
    throw ContextMismatch("field elements from different contexts");
  }
  std::vector<FieldElem> out;
  for (ElemIndex x : solve_linearized(*a.ctx(), a.index(), k, rhs.index())) {
    out.emplace_back(a.ctx(), x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Field spec strings

namespace {

std::uint32_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) ||
      s.size() > 9) {
    throw ParseError("bad " + what + " '" + s + "' in field spec");
  }
  return static_cast<std::uint32_t>(std::stoul(s));
}

}  // namespace

FieldPtr parse_field_spec(const std::string& spec,
                          std::optional<ElemIndex> generator) {
  std::string head = spec;
  std::string tail;
  bool explicit_modulus = false;
  if (auto slash = spec.find('/'); slash != std::string::npos) {
    head = spec.substr(0, slash);
    tail = spec.substr(slash + 1);
    explicit_modulus = true;
  }
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  if (auto caret = head.find('^'); caret != std::string::npos) {
    p = parse_uint(head.substr(0, caret), "characteristic");
    n = parse_uint(head.substr(caret + 1), "degree");
  } else {
    p = parse_uint(head, "characteristic");
  }
  try {
    if (!explicit_modulus) {
      if (generator) {
        auto base = FieldCtx::build(p, n);
        return FieldCtx::build(p, base->modulus(), generator);
      }
      return FieldCtx::build(p, n);
    }
    std::vector<Fp> coeffs;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) {
      coeffs.push_back(parse_uint(item, "modulus coefficient"));
    }
    if (coeffs.size() != n + 1) {
      throw ParseError("field spec " + spec + ": expected " +
                       std::to_string(n + 1) + " modulus coefficients");
    }
    std::reverse(coeffs.begin(), coeffs.end());
    return FieldCtx::build(p, std::move(coeffs), generator);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError("field spec " + spec + ": " + e.what());
  }
}

}  // namespace bentkit
