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

#include "splitord/kernel/element.hpp"

#include <algorithm>

namespace splitord {

Element::Element(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

Element Element::concat(const Element& a, const Element& b) {
  std::vector<Rational> out = a.coords_;
  out.insert(out.end(), b.coords_.begin(), b.coords_.end());
  return Element(std::move(out));
}

Element Element::zeros(std::size_t n) { return Element(std::vector<Rational>(n, Rational(0))); }

Element Element::slice(std::size_t offset, std::size_t length) const {
  return Element(std::vector<Rational>(coords_.begin() + static_cast<std::ptrdiff_t>(offset),
                                       coords_.begin() + static_cast<std::ptrdiff_t>(offset + length)));
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
    if (b.coords_[i] < a.coords_[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string Element::debug_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0) out += ", ";
    out += format_rational(coords_[i]);
  }
  return out + ")";
}

}  // namespace splitord
