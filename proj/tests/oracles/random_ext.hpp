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

// Random finite groups, actions and cones for property tests.

#ifndef SPLITORD_TESTS_ORACLES_RANDOM_EXT_HPP_
#define SPLITORD_TESTS_ORACLES_RANDOM_EXT_HPP_

#include <deque>
#include <optional>
#include <random>
#include <vector>

#include "splitord/cones/cones.hpp"
#include "splitord/kernel/kernel.hpp"

namespace oracle {

using splitord::Action;
using splitord::Cone;
using splitord::Element;
using splitord::Group;

inline std::vector<Group> small_groups() {
  return {Group::cyclic(1), Group::cyclic(2), Group::cyclic(3), Group::cyclic(4),
          Group::product({Group::cyclic(2), Group::cyclic(2)}), Group::symmetric(3)};
}

inline Group random_group(std::mt19937& rng, std::size_t max_order) {
  std::vector<Group> pool;
  for (auto& g : small_groups()) {
    if (g.order() <= max_order) pool.push_back(g);
  }
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

/// Random action of b on x: random automorphism images for b's generators,
/// kept only when they extend to a homomorphism b -> Aut(x).
inline Action random_action(std::mt19937& rng, const Group& b, const Group& x) {
  const auto auts = splitord::enumerate_automorphisms(x);
  const auto& bv = b.finite_view();
  const auto& xv = x.finite_view();
  std::vector<std::vector<std::size_t>> perm(auts.size());
  for (std::size_t a = 0; a < auts.size(); ++a) {
    for (std::size_t i = 0; i < xv.size(); ++i) perm[a].push_back(xv.index(auts[a](xv.element(i))));
  }
  auto compose = [&](const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
    std::vector<std::size_t> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  std::vector<std::size_t> ident(xv.size());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<std::vector<std::size_t>> gen_images;
    for (std::size_t k = 0; k < bv.generators().size(); ++k) gen_images.push_back(perm[pick(rng)]);
    std::vector<std::optional<std::vector<std::size_t>>> table(bv.size());
    table[bv.zero()] = ident;
    std::deque<std::size_t> queue{bv.zero()};
    bool ok = true;
    while (!queue.empty() && ok) {
      const std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < bv.generators().size() && ok; ++k) {
        const std::size_t n = bv.add(e, bv.generators()[k]);
        auto cand = compose(*table[e], gen_images[k]);
        if (table[n]) {
          ok = *table[n] == cand;
        } else {
          table[n] = cand;
          queue.push_back(n);
        }
      }
    }
    if (!ok) continue;
    std::vector<std::vector<std::size_t>> perms;
    for (auto& t : table) perms.push_back(*t);
    return Action::finite_table(b, x, perms);
  }
  return Action::trivial(b, x);
}

/// A random cone on a finite group: the normal subgroup generated by a few
/// random elements, or the trivial or full cone.
inline Cone random_cone(std::mt19937& rng, const Group& g) {
  const int mode = std::uniform_int_distribution<int>(0, 3)(rng);
  if (mode == 0) return Cone::trivial(g);
  if (mode == 1) return Cone::full(g);
  const auto els = g.elements();
  std::vector<Element> seeds;
  const int n = std::uniform_int_distribution<int>(1, 2)(rng);
  for (int i = 0; i < n; ++i) seeds.push_back(els[std::uniform_int_distribution<std::size_t>(0, els.size() - 1)(rng)]);
  return splitord::generated_cone(g, seeds);
}

}  // namespace oracle

#endif  // SPLITORD_TESTS_ORACLES_RANDOM_EXT_HPP_
