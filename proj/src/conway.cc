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

// Conway polynomials for the fields the toolkit is most often run on.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bentkit/gf.h"

namespace bentkit {
namespace {

// Coefficients most significant first.
using Entry = std::vector<int>;

const std::map<std::pair<std::uint32_t, std::uint32_t>, Entry>& table() {
  static const auto* t = new std::map<std::pair<std::uint32_t, std::uint32_t>,
                                      Entry>{
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 0, 1, 1}},
      {{2, 4}, {1, 0, 0, 1, 1}},
      {{2, 5}, {1, 0, 0, 1, 0, 1}},
      {{2, 6}, {1, 0, 1, 1, 0, 1, 1}},
      {{2, 7}, {1, 0, 0, 0, 0, 0, 1, 1}},
      {{2, 8}, {1, 0, 0, 0, 1, 1, 1, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
      {{2, 10}, {1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1}},
      {{2, 11}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1}},
      {{2, 12}, {1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1}},
      {{2, 13}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1}},
      {{2, 14}, {1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1}},
      {{2, 15}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1}},
      {{2, 16}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1}},
      {{2, 17}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
      {{2, 18}, {1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
      {{2, 19}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1}},
      {{2, 20}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {1, 2, 2}},
      {{3, 3}, {1, 0, 2, 1}},
      {{3, 4}, {1, 2, 0, 0, 2}},
      {{3, 5}, {1, 0, 0, 0, 2, 1}},
      {{3, 6}, {1, 0, 2, 0, 1, 2, 2}},
      {{3, 7}, {1, 0, 0, 0, 0, 2, 0, 1}},
      {{3, 8}, {1, 0, 0, 2, 1, 0, 2, 2, 2}},
      {{3, 9}, {1, 0, 0, 0, 0, 0, 2, 2, 1, 1}},
      {{3, 10}, {1, 0, 0, 0, 2, 2, 2, 0, 0, 1, 2}},
      {{3, 11}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1}},
      {{3, 12}, {1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 2}},
      {{5, 1}, {1, 3}},
      {{5, 2}, {1, 4, 2}},
      {{5, 3}, {1, 0, 3, 3}},
      {{5, 4}, {1, 0, 4, 4, 2}},
      {{5, 5}, {1, 0, 0, 0, 4, 3}},
      {{5, 6}, {1, 0, 1, 4, 1, 0, 2}},
      {{5, 7}, {1, 0, 0, 0, 0, 0, 3, 3}},
      {{5, 8}, {1, 0, 0, 0, 1, 0, 3, 4, 2}},
      {{7, 1}, {1, 4}},
      {{7, 2}, {1, 6, 3}},
      {{7, 3}, {1, 6, 0, 4}},
      {{7, 4}, {1, 0, 5, 4, 3}},
      {{7, 5}, {1, 0, 0, 0, 1, 4}},
      {{7, 6}, {1, 0, 1, 5, 4, 6, 3}},
      {{7, 7}, {1, 0, 0, 0, 0, 0, 6, 4}},
      {{11, 1}, {1, 9}},
      {{11, 2}, {1, 7, 2}},
      {{11, 3}, {1, 0, 2, 9}},
      {{11, 4}, {1, 0, 8, 10, 2}},
      {{11, 5}, {1, 0, 0, 10, 0, 9}},
      {{13, 1}, {1, 11}},
      {{13, 2}, {1, 12, 2}},
      {{13, 3}, {1, 0, 2, 11}},
      {{13, 4}, {1, 0, 3, 12, 2}},
      {{13, 5}, {1, 0, 0, 0, 4, 11}},
  };
  return *t;
}

}  // namespace

std::optional<std::vector<Fp>> conway_polynomial(std::uint32_t p,
                                                 std::uint32_t n) {
  auto it = table().find({p, n});
  if (it == table().end()) return std::nullopt;
  std::vector<Fp> low_first(it->second.rbegin(), it->second.rend());
  return low_first;
}

}  // namespace bentkit
