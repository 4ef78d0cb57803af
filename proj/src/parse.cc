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

#include "bentkit/parse.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <string>

#include "bentkit/error.h"

namespace bentkit {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

[[noreturn]] void fail(std::string_view what, std::string_view text) {
  throw ParseError(std::string(what) + ": '" + std::string(text) + "'");
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    fail("expected an integer", context);
  }
  return v;
}

std::uint32_t parse_uint(std::string_view s, std::string_view context) {
  const std::int64_t v = parse_int(s, context);
  if (v < 0 || v > UINT32_MAX) fail("expected a non-negative integer", context);
  return static_cast<std::uint32_t>(v);
}

Fp to_fp(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<Fp>(r < 0 ? r + p : r);
}

// [c*]xi[^k], or a raw index.
ElemIndex parse_elem_term(const FieldCtx& ctx, std::string_view term,
                          std::string_view whole) {
  if (term.empty()) fail("empty element term", whole);
  Fp coeff = 1;
  const std::size_t star = term.find('*');
  if (star != std::string_view::npos) {
    coeff = to_fp(parse_int(term.substr(0, star), whole), ctx.p());
    term = trim(term.substr(star + 1));
  }
  if (term.rfind("xi", 0) == 0) {
    std::int64_t k = 1;
    std::string_view rest = trim(term.substr(2));
    if (!rest.empty()) {
      if (rest.front() != '^') fail("expected xi^k", whole);
      k = parse_int(rest.substr(1), whole);
    }
    return ctx.mul(coeff, ctx.exp(k));
  }
  if (star != std::string_view::npos) fail("expected c*xi^k", whole);
  const std::int64_t idx = parse_int(term, whole);
  if (idx < 0 || static_cast<std::uint64_t>(idx) >= ctx.size()) {
    fail("element index out of range", whole);
  }
  return static_cast<ElemIndex>(idx);
}

std::vector<Fp> read_table(std::uint32_t p, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table file '" + path + "'");
  std::vector<Fp> values;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    const std::int64_t v = parse_int(t, path);
    if (v < 0 || v >= static_cast<std::int64_t>(p)) {
      fail("table entry outside F_p", t);
    }
    values.push_back(static_cast<Fp>(v));
  }
  return values;
}

}  // namespace

ElemIndex parse_element(const FieldCtx& ctx, std::string_view text) {
  ElemIndex sum = 0;
  for (std::string_view term : split(trim(text), '+')) {
    sum = ctx.add(sum, parse_elem_term(ctx, term, text));
  }
  return sum;
}

std::vector<ElemIndex> parse_elements(const FieldCtx& ctx,
                                      std::string_view text) {
  std::vector<ElemIndex> out;
  if (trim(text).empty()) return out;
  for (std::string_view item : split(text, ',')) {
    out.push_back(parse_element(ctx, item));
  }
  return out;
}

std::vector<Fp> parse_fp_list(std::uint32_t p, std::string_view text) {
  std::vector<Fp> out;
  if (trim(text).empty()) return out;
  for (std::string_view item : split(text, ',')) {
    out.push_back(to_fp(parse_int(item, text), p));
  }
  return out;
}

ReducedPoly parse_poly(std::uint32_t p, std::string_view text,
                       std::optional<std::uint32_t> arity) {
  struct Term {
    std::int64_t coeff = 1;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> powers;
  };
  std::vector<Term> terms;
  std::uint32_t max_var = 0;
  const std::string_view body = trim(text);
  if (body.empty()) fail("empty polynomial", text);
  if (body != "0") {
    for (std::string_view t : split(body, '+')) {
      if (t.empty()) fail("empty term", text);
      Term term;
      bool have_coeff = false;
      for (std::string_view factor : split(t, '*')) {
        if (factor.empty()) fail("empty factor", text);
        if (factor.front() == 'x') {
          const std::size_t caret = factor.find('^');
          const std::uint32_t var =
              parse_uint(factor.substr(1, caret == std::string_view::npos
                                              ? std::string_view::npos
                                              : caret - 1),
                         text);
          const std::uint32_t e =
              caret == std::string_view::npos
                  ? 1
                  : parse_uint(factor.substr(caret + 1), text);
          if (var == 0) fail("variables are numbered from x1", text);
          max_var = std::max(max_var, var);
          term.powers.emplace_back(var, e);
        } else {
          if (have_coeff) fail("two coefficients in one term", text);
          term.coeff = parse_int(factor, text);
          have_coeff = true;
        }
      }
      terms.push_back(term);
    }
  }
  const std::uint32_t n = arity.value_or(max_var);
  if (max_var > n) fail("variable index exceeds the arity", text);
  if (n == 0) fail("cannot infer the arity", text);
  ReducedPoly F(p, n);
  for (const Term& term : terms) {
    Exponents e(n, 0);
    for (auto [var, pow] : term.powers) e[var - 1] += pow;
    if (std::any_of(e.begin(), e.end(), [&](std::uint32_t x) {
          return x >= p;
        })) {
      fail("exponent must stay below p", text);
    }
    F.add_term(e, static_cast<std::int64_t>(to_fp(term.coeff, p)));
  }
  return F;
}

PFunc parse_function(const FieldPtr& ctx, std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "zero" || t == "0") return PFunc::zero(ctx);
  const std::size_t colon = t.find(':');
  if (colon == std::string_view::npos) fail("unknown function", text);
  const std::string_view kind = t.substr(0, colon);
  const std::string_view arg = trim(t.substr(colon + 1));
  if (kind == "gold") {
    const auto parts = split(arg, ',');
    if (parts.size() != 2) fail("expected gold:a,k", text);
    return gold(ctx, parse_element(*ctx, parts[0]),
                parse_uint(parts[1], text));
  }
  if (kind == "quad") return quadratic(ctx, parse_element(*ctx, arg));
  if (kind == "linear") return trace_function(ctx, parse_element(*ctx, arg));
  if (kind == "table") {
    return PFunc(ctx, read_table(ctx->p(), std::string(arg)));
  }
  if (kind.rfind("tr", 0) == 0) {
    const std::uint32_t k =
        kind.size() == 2 ? ctx->n() : parse_uint(kind.substr(2), text);
    std::vector<TraceTerm> terms;
    for (std::string_view term : split(arg, '+')) {
      ElemIndex c = 1;
      std::string_view mono = term;
      const std::size_t star = term.rfind('*');
      if (star != std::string_view::npos) {
        c = parse_element(*ctx, term.substr(0, star));
        mono = trim(term.substr(star + 1));
      }
      if (mono.empty() || mono.front() != 'x' || mono.rfind("xi", 0) == 0) {
        fail("expected [c*]x^e", text);
      }
      std::string_view e = mono.substr(1);
      if (!e.empty() && e.front() == '^') e.remove_prefix(1);
      const std::uint64_t exponent = e.empty() ? 1 : parse_uint(e, text);
      terms.push_back({k, c, exponent});
    }
    return trace_terms(ctx, terms);
  }
  fail("unknown function kind", text);
}

}  // namespace bentkit
