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

#ifndef SPLITORD_KERNEL_HOMOMORPHISM_HPP_
#define SPLITORD_KERNEL_HOMOMORPHISM_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "splitord/kernel/element.hpp"
#include "splitord/kernel/group.hpp"
#include "splitord/kernel/number.hpp"

namespace splitord {

enum class HomKind {
  /// Images of source generators; evaluation through Group::decompose.
  kGeneratorImages,
  /// Rational matrix on coordinates (Z^k, Q^k and their products).
  kLinear,
  /// Full element map on a finite source, by FiniteView index.
  kFiniteTable,
  /// Named evaluation function (compositions, projections, injections).
  kFunction,
};

class Homomorphism {
 public:
  using Fn = std::function<Element(const Element&)>;

  static Homomorphism generator_images(Group source, Group target,
                                       std::vector<Element> images);
  static Homomorphism linear(Group source, Group target, Matrix m);
  static Homomorphism finite_table(Group source, Group target,
                                   std::vector<Element> images);
  /// generator_determined: the function is known to be additive and fixed
  /// by its values on source generators (e.g. a composite of such maps).
  static Homomorphism function(Group source, Group target, std::string name, Fn fn,
                               bool generator_determined = false);

  static Homomorphism identity(const Group& g);
  static Homomorphism zero(const Group& source, const Group& target);
  /// Multiplication by an integer c on an abelian group.
  static Homomorphism scalar(const Group& g, const Integer& c);
  /// outer ∘ inner.
  static Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

  Element operator()(const Element& a) const;

  HomKind kind() const;
  const Group& source() const;
  const Group& target() const;
  const std::string& name() const;
  bool generator_determined() const;
  std::optional<Matrix> matrix() const;

  /// Inverse for bijective linear maps (exact) and finite tables.
  std::optional<Homomorphism> inverse() const;

  struct Node;

 private:
  explicit Homomorphism(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace splitord

#endif  // SPLITORD_KERNEL_HOMOMORPHISM_HPP_
