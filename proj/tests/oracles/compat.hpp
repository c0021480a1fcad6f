// Copyright 2026 The splitord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Definitional compatibility of a subset of a finite X ⋊ B, checked on the
// multiplication table alone.

#ifndef SPLITORD_TESTS_ORACLES_COMPAT_HPP_
#define SPLITORD_TESTS_ORACLES_COMPAT_HPP_

#include <cstddef>
#include <vector>

#include "oracles/brute.hpp"

namespace oracle {

struct ExtTable {
  Table carrier;
  std::vector<Element> xs;
  std::vector<Element> bs;
  std::vector<bool> px;
  std::vector<bool> pb;
  /// carrier index of (x_i, 0) and (0, b_j), and the B-index of each element.
  std::vector<std::size_t> k;
  std::vector<std::size_t> s;
  std::vector<std::size_t> f;

  ExtTable(const Group& g, const std::vector<bool>& px_mask, const std::vector<bool>& pb_mask)
      : carrier(g), xs(g.kernel().elements()), bs(g.base().elements()), px(px_mask), pb(pb_mask) {
    for (const auto& x : xs) k.push_back(carrier.idx.at(g.pair(x, g.base().zero())));
    for (const auto& b : bs) s.push_back(carrier.idx.at(g.pair(g.kernel().zero(), b)));
    for (const auto& a : carrier.els) {
      const Element b = g.base_part(a);
      std::size_t j = 0;
      while (bs[j] != b) ++j;
      f.push_back(j);
    }
  }

  /// Cone axioms, k and s monotone, f monotone, and k reflecting the order.
  bool compatible(const std::vector<bool>& p) const {
    if (!is_cone(carrier, p)) return false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (px[i] != p[k[i]]) return false;
    }
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (pb[j] && !p[s[j]]) return false;
    }
    for (std::size_t a = 0; a < carrier.size(); ++a) {
      if (p[a] && !pb[f[a]]) return false;
    }
    return true;
  }
};

}  // namespace oracle

#endif  // SPLITORD_TESTS_ORACLES_COMPAT_HPP_
