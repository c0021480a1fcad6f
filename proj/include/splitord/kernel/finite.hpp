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

#ifndef SPLITORD_KERNEL_FINITE_HPP_
#define SPLITORD_KERNEL_FINITE_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "splitord/kernel/element.hpp"

namespace splitord {

class Group;

/// Indexed view of a finite group: elements in ascending Element order and
/// precomputed addition and negation tables.
class FiniteView {
 public:
  explicit FiniteView(const Group& g);

  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t index(const Element& a) const;
  std::size_t zero() const { return zero_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size() + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t conjugate(std::size_t g, std::size_t x) const {
    return add(add(g, x), neg(g));
  }
  std::size_t element_order(std::size_t a) const;
  /// A generating set found greedily in index order.
  const std::vector<std::size_t>& generators() const { return generators_; }
  /// For each element, a shortest word over generators() summing to it.
  const std::vector<std::vector<std::size_t>>& words() const { return words_; }

 private:
  std::vector<Element> elements_;
  std::map<Element, std::size_t> index_;
  std::vector<std::size_t> add_;
  std::vector<std::size_t> neg_;
  std::size_t zero_ = 0;
  std::vector<std::size_t> generators_;
  std::vector<std::vector<std::size_t>> words_;
};

/// Subset of a finite group as a membership mask over FiniteView indices.
using Subset = std::vector<bool>;

/// Least subset containing seeds and 0, closed under addition and
/// conjugation (in a finite group this is the normal subgroup they
/// generate).
Subset finite_closure(const FiniteView& view, const Subset& seeds);
bool finite_is_cone(const FiniteView& view, const Subset& s);

}  // namespace splitord

#endif  // SPLITORD_KERNEL_FINITE_HPP_
