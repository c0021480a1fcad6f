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

#ifndef SPLITORD_CLASSIFIERS_CLASSIFIERS_HPP_
#define SPLITORD_CLASSIFIERS_CLASSIFIERS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "splitord/points/points.hpp"

namespace splitord {

enum class AutKind {
  kFiniteComputed,
  /// Aut(Z, N) = {id}.
  kSymbolicIntN,
  /// Aut(Q, >=0) = positive rational scalings.
  kSymbolicRatScalings,
  /// Aut(Z^k, N^k) = coordinate permutations, k >= 2.
  kSymbolicOrthantPerms,
};

const char* to_string(AutKind k);

/// {α : α(P_X) = P_X}, carried by a group that acts on X by evaluation:
/// action.apply(α, x) = α(x).
struct MonotoneAutGroup {
  AutKind kind;
  PreorderedGroup base;
  Group group;
  Action action;

  bool is_finite() const { return group.is_finite(); }
  /// The automorphism x -> α(x).
  Homomorphism automorphism(const Element& alpha) const;
  /// The element acting as fn on X, or nullopt if fn is not in the group.
  std::optional<Element> locate(const std::function<Element(const Element&)>& fn) const;
  /// Elements of the group agreeing with fn on X (all of them on finite X,
  /// generator images otherwise). Used for uniqueness arguments.
  std::size_t count_matching(const std::function<Element(const Element&)>& fn) const;
  std::string describe() const;
};

/// Throws UnsupportedError outside finite X and the symbolic catalog.
MonotoneAutGroup monotone_aut(const PreorderedGroup& x);

enum class AutConeKind { kTilde, kPlus, kMinus, kExtensional, kTrivial, kFull };

const char* to_string(AutConeKind k);

struct AutOrder {
  MonotoneAutGroup aut;
  AutConeKind which;
  Cone cone;

  PreorderedGroup preordered() const { return PreorderedGroup(aut.group, cone); }
  std::string describe() const;
};

/// P̃ = {α : α(x) ~ x for all x}, P⁺ = {α : α(x) >= x for x >= 0},
/// P⁻ = {α : α(x) >= x for x <= 0}.
AutOrder aut_cone(const MonotoneAutGroup& a, AutConeKind which, const SaturationBudget& budget = {});
/// An explicit cone on the automorphism group (trivial, full, extensional).
AutOrder aut_order(const MonotoneAutGroup& a, AutConeKind which, Cone cone);

/// Every unit α of the order satisfies α(x) ~ x for all x.
Verdict admissible_check(const AutOrder& o, const SaturationBudget& budget = {});

struct Classifier {
  AutOrder order;
  /// X -> X ⋊ Aut(X) with the product order for P̃ and the lex order otherwise.
  Point point;
};

/// Throws PreconditionError when the order is not admissible.
Classifier build_classifier(const PreorderedGroup& x, const AutOrder& o, const SaturationBudget& budget = {});

struct ClassifyResult {
  /// (id, 1 × φ̄, φ̄).
  PointMorphism morphism;
  Homomorphism phi_bar;
  Verdict phi_bar_monotone;
  Verdict total_monotone;
  /// Squares and monotonicity together.
  Verdict is_morphism;
  /// Any morphism fixing X is forced to be this one.
  Verdict uniqueness;
};

/// Throws PreconditionError with the offending generator when some φ_b is
/// not a monotone automorphism.
ClassifyResult classify_into(const Point& pt, const Classifier& cls, const SaturationBudget& budget = {});

struct SClassMembership {
  /// φ_b ∈ P for every b >= 0.
  Verdict positive_images;
  /// x >= 0 whenever (x, b) >= 0 for some b >= 0 with φ_b ~ id.
  Verdict kernel_reflection;
  Verdict verdict;
};

SClassMembership sclass_membership(const Point& pt, const AutOrder& o, const SaturationBudget& budget = {});

struct NoClassifierWitness {
  Element alpha;
  Element x;
  std::string describe;
};

/// An α ∈ P⁺ with α(x) not equivalent to x. Throws PreconditionError when X
/// is not total on the window.
std::optional<NoClassifierWitness> no_classifier_witness(const PreorderedGroup& x,
                                                         const SaturationBudget& budget = {});

}  // namespace splitord

#endif  // SPLITORD_CLASSIFIERS_CLASSIFIERS_HPP_
