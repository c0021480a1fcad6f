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

#ifndef SPLITORD_KERNEL_ACTION_HPP_
#define SPLITORD_KERNEL_ACTION_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "splitord/kernel/element.hpp"
#include "splitord/kernel/group.hpp"
#include "splitord/kernel/number.hpp"

namespace splitord {

class Homomorphism;

enum class ActionKind {
  kTrivial,
  /// phi_b(x) = (-1)^b x for B = Z or Z_2 acting on an abelian group.
  kSign,
  /// phi_n(x) = q^n x for B = Z acting on Q^k.
  kScaling,
  /// Generator images in GL(k) for B = Z^m (commuting) or Z_n.
  kMatrix,
  /// One matrix per element of a finite B.
  kMatrixTable,
  /// One permutation of X's element indices per element of a finite B.
  kFiniteTable,
  /// psi_c = phi_{g(c)}.
  kPrecomposed,
  /// Componentwise action of B1 x ... x Bn on X1 x ... x Xn.
  kProduct,
  /// phi_q(x) = q x for the positive rationals acting on Q^k.
  kDilation,
  /// Arbitrary evaluation function, e.g. conjugation in a normalized split
  /// extension. Laws are only window-verified.
  kInduced,
};

/// Action of B (acting) on X (acted) by automorphisms.
class Action {
 public:
  using Fn = std::function<Element(const Element& b, const Element& x)>;

  static Action trivial(Group acting, Group acted);
  static Action sign(Group acting, Group acted);
  static Action scaling(Group acting, Group acted, Rational q);
  static Action matrix(Group acting, Group acted, std::vector<Matrix> generator_images);
  static Action matrix_table(Group acting, Group acted, std::vector<Matrix> per_element);
  static Action finite_table(Group acting, Group acted,
                            std::vector<std::vector<std::size_t>> permutations);
  static Action precomposed(Action base, Homomorphism along);
  static Action product(std::vector<Action> parts);
  static Action dilation(Group acted);
  static Action induced(Group acting, Group acted, std::string name, Fn fn);

  ActionKind kind() const;
  const Group& acting() const;
  const Group& acted() const;
  std::string describe() const;

  Element apply(const Element& b, const Element& x) const;

  /// phi_b as a rational matrix on X's coordinates, when X has only integer
  /// or rational coordinates and the action is linear there.
  std::optional<Matrix> matrix_at(const Element& b) const;

  /// phi_g == id on every pair of generators of B and X. For additive
  /// actions this decides triviality exactly.
  bool is_trivial() const;

  const Rational& scaling_factor() const;
  const Action& precomposed_base() const;
  const Homomorphism& precomposed_along() const;
  const std::vector<Action>& parts() const;
  const std::vector<std::vector<std::size_t>>& permutation_table() const;
  const std::vector<Matrix>& matrices() const;

  bool same_as(const Action& other) const;

  struct Node;

 private:
  explicit Action(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace splitord

#endif  // SPLITORD_KERNEL_ACTION_HPP_
