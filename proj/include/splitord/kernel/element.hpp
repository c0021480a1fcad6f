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

#ifndef SPLITORD_KERNEL_ELEMENT_HPP_
#define SPLITORD_KERNEL_ELEMENT_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "splitord/kernel/number.hpp"

namespace splitord {

/// Immutable coordinate tuple. Every coordinate is stored as an exact
/// rational; the owning Group decides whether a coordinate is an integer, a
/// rational, a residue index or a positive rational, and validates it.
/// Composite groups flatten their factors left to right, so an element of
/// a semidirect product X ⋊ B is the X coordinates followed by the B ones.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Element(std::initializer_list<long> coords);

  static Element concat(const Element& a, const Element& b);
  static Element zeros(std::size_t n);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  const std::vector<Rational>& vector() const { return coords_; }

  Element slice(std::size_t offset, std::size_t length) const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.coords_ == b.coords_;
  }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

  /// Plain "(c0, c1, ...)" rendering; use Group::format for typed literals.
  std::string debug_string() const;

 private:
  std::vector<Rational> coords_;
};

}  // namespace splitord

#endif  // SPLITORD_KERNEL_ELEMENT_HPP_
