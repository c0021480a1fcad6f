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

#include "splitord/kernel/finite.hpp"

#include <algorithm>
#include <deque>

#include "splitord/kernel/errors.hpp"
#include "splitord/kernel/group.hpp"

namespace splitord {

FiniteView::FiniteView(const Group& g) {
  const auto& coords = g.coordinates();
  std::vector<std::size_t> radix;
  for (const auto& c : coords) {
    if (c.kind != CoordKind::kResidue && c.kind != CoordKind::kCayleyIndex) {
      throw UnsupportedError(g.describe() + " has an infinite coordinate");
    }
    radix.push_back(c.modulus);
  }
  std::size_t total = 1;
  for (std::size_t r : radix) total *= r;
  elements_.reserve(total);
  for (std::size_t t = 0; t < total; ++t) {
    std::vector<Rational> c(coords.size());
    std::size_t rest = t;
    for (std::size_t i = coords.size(); i-- > 0;) {
      c[i] = Rational(static_cast<long>(rest % radix[i]));
      rest /= radix[i];
    }
    elements_.emplace_back(std::move(c));
  }
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  const std::size_t n = elements_.size();
  zero_ = index_.at(g.zero());
  add_.resize(n * n);
  neg_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg_[a] = index_.at(g.neg(elements_[a]));
    for (std::size_t b = 0; b < n; ++b) add_[a * n + b] = index_.at(g.add(elements_[a], elements_[b]));
  }

  // Greedy generating set and shortest words by breadth-first search.
  std::vector<bool> reached(n, false);
  reached[zero_] = true;
  std::size_t reached_count = 1;
  for (std::size_t cand = 0; cand < n && reached_count < n; ++cand) {
    if (reached[cand]) continue;
    generators_.push_back(cand);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
      if (reached[i]) queue.push_back(i);
    }
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t gen : generators_) {
        const std::size_t next = add(a, gen);
        if (!reached[next]) {
          reached[next] = true;
          ++reached_count;
          queue.push_back(next);
        }
      }
    }
  }
  words_.assign(n, {});
  std::vector<bool> seen(n, false);
  seen[zero_] = true;
  std::deque<std::size_t> queue{zero_};
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t gen : generators_) {
      const std::size_t next = add(a, gen);
      if (!seen[next]) {
        seen[next] = true;
        words_[next] = words_[a];
        words_[next].push_back(gen);
        queue.push_back(next);
      }
    }
  }
}

std::size_t FiniteView::index(const Element& a) const {
  const auto it = index_.find(a);
  if (it == index_.end()) throw StructuralError("element " + a.debug_string() + " is not in the finite group");
  return it->second;
}

std::size_t FiniteView::element_order(std::size_t a) const {
  std::size_t k = 1;
  std::size_t cur = a;
  while (cur != zero_) {
    cur = add(cur, a);
    ++k;
  }
  return k;
}

Subset finite_closure(const FiniteView& view, const Subset& seeds) {
  const std::size_t n = view.size();
  Subset out(n, false);
  std::deque<std::size_t> queue;
  auto insert = [&](std::size_t a) {
    if (!out[a]) {
      out[a] = true;
      queue.push_back(a);
    }
  };
  insert(view.zero());
  for (std::size_t s = 0; s < n; ++s) {
    if (!seeds[s]) continue;
    for (std::size_t g = 0; g < n; ++g) insert(view.conjugate(g, s));
  }
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t b = 0; b < n; ++b) {
      if (!out[b]) continue;
      insert(view.add(a, b));
      insert(view.add(b, a));
    }
  }
  return out;
}

bool finite_is_cone(const FiniteView& view, const Subset& s) {
  const std::size_t n = view.size();
  if (!s[view.zero()]) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (!s[a]) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (s[b] && !s[view.add(a, b)]) return false;
      if (!s[view.conjugate(b, a)]) return false;
    }
  }
  return true;
}

}  // namespace splitord
