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

#ifndef BENTKIT_PARSE_H_
#define BENTKIT_PARSE_H_

// Text syntax shared by the command-line tool.
//
// Elements: terms joined by '+', each either a raw base-10 index or
// [c*]xi[^k] with c in F_p and xi the field generator ("xi^79+xi^159",
// "2*xi^3", "0"). Polynomials: "c*x1^e1*x2 + x3", coefficient and exponents
// base-10, exponent 1 omitted. Functions: "zero", "gold:a,k", "quad:a",
// "linear:c", "trK:[c*]x^e+..." for Tr_1^K sums such as "tr3:x^9" or
// "tr4:xi^17*x^17", and "table:path" (one F_p digit per line).

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bentkit/func.h"
#include "bentkit/gf.h"

namespace bentkit {

// All parsers throw ParseError on malformed text.
ElemIndex parse_element(const FieldCtx& ctx, std::string_view text);
// Comma-separated elements.
std::vector<ElemIndex> parse_elements(const FieldCtx& ctx,
                                      std::string_view text);
// Comma-separated F_p values.
std::vector<Fp> parse_fp_list(std::uint32_t p, std::string_view text);

// Arity defaults to the largest variable index that occurs.
ReducedPoly parse_poly(std::uint32_t p, std::string_view text,
                       std::optional<std::uint32_t> arity = std::nullopt);

PFunc parse_function(const FieldPtr& ctx, std::string_view text);

}  // namespace bentkit

#endif  // BENTKIT_PARSE_H_
