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

#ifndef SPLITORD_CONES_CONE_HPP_
#define SPLITORD_CONES_CONE_HPP_

#include <any>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "splitord/kernel/kernel.hpp"

namespace splitord {

/// Bounds for every search that can fail to terminate on an infinite
/// carrier. Doubling any bound can only turn Unknown into Yes or No.
struct SaturationBudget {
  /// Word length over the group's generators (and their negatives) used to
  /// form conjugators.
  std::size_t max_conjugators = 2;
  /// Number of conjugates summed in one decomposition.
  std::size_t max_summands = 3;
  Window window;

  SaturationBudget doubled() const;
  friend bool operator==(const SaturationBudget&, const SaturationBudget&) = default;
};

enum class ConeKind {
  kExtensional,
  kTrivial,
  kFull,
  kNaturalOrthant,
  kProduct,
  kLex,
  kGenerated,
  kFamily,
  kIntersection,
  kPredicate,
};

const char* to_string(ConeKind k);

/// A ray is an element d; rational rays stand for every q·d with q > 0
/// rational, integer rays for the element itself.
struct Ray {
  Element element;
  bool rational = false;
};

/// A finite description R of a cone P with R ⊆ P and P ⊆ closure(R), where
/// the closure is the additive monoid generated by the rays (conic = false)
/// or the cone they generate, conjugates included (conic = true). Either
/// way, P ⊆ Q for a cone Q iff every ray lies in Q.
struct ConeGenerators {
  std::vector<Ray> rays;
  bool conic = false;
};

/// Data for a generated cone ⟨A⟩.
struct GeneratedSpec {
  /// A ⊆ monoid(rays) and every ray lies in A, so ⟨A⟩ = ⟨rays⟩.
  std::vector<Ray> rays;
  /// Exact membership test for a set between A and ⟨A⟩ (usually A itself).
  std::function<Verdict(const Element&, const SaturationBudget&)> base;
  /// Cone known to contain ⟨A⟩; a No there is a No for ⟨A⟩.
  std::function<Verdict(const Element&, const SaturationBudget&)> envelope;
  std::string name;
  /// False when the rays only span part of A (e.g. window samples of a cone
  /// without generators). Exclusion certificates are then skipped.
  bool rays_complete = true;
};

class Cone;

/// Hooks for predicate and family cones.
struct PredicateSpec {
  std::string name;
  std::function<Verdict(const Element&, const SaturationBudget&)> contains;
  /// q·d ∈ P for every rational q > 0; defaults to Unknown unless
  /// contains(d) is No.
  std::function<Verdict(const Element&, const SaturationBudget&)> contains_ray;
  std::optional<ConeGenerators> generators;
  /// The predicate is known to define a cone (closed under + and
  /// conjugation), so inclusions into it may be checked on generators.
  bool closed = false;
  /// Arbitrary attached data (e.g. the family a cone was built from).
  std::any payload;
};

/// Positive cone on a group: a submonoid closed under conjugation. The
/// cone axioms are guaranteed by construction only for the built-in
/// variants; check_cone_axioms verifies them for the rest.
class Cone {
 public:
  static Cone extensional(Group g, std::vector<Element> members);
  static Cone trivial(Group g);
  static Cone full(Group g);
  /// N^k in Z^k, the nonnegative orthant in Q^k, {q >= 1} in the positive
  /// rationals.
  static Cone natural_orthant(Group g);
  /// Componentwise cone on a direct product (one part per factor) or on a
  /// semidirect product (parts = {P_X, P_B}).
  static Cone product(Group carrier, std::vector<Cone> parts);
  /// {(x,b) : b > 0, or b ~ 0 and x >= 0} on a semidirect or two-factor
  /// direct product.
  static Cone lex(Group carrier, Cone x_cone, Cone b_cone);
  /// Cone generated by finitely many elements.
  static Cone generated(Group g, std::vector<Element> seeds);
  static Cone generated(Group g, GeneratedSpec spec);
  static Cone family(Group carrier, PredicateSpec spec);
  static Cone intersection(std::vector<Cone> parts);
  static Cone predicate(Group g, PredicateSpec spec);

  ConeKind kind() const;
  const Group& group() const;
  std::string describe() const;
  const std::string& name() const;
  Cone named(std::string name) const;
  /// Same cone, marked as known to be closed under + and conjugation.
  Cone certified() const;
  /// Closed by construction or by certificate. Generator reductions of
  /// inclusions into this cone are only sound when this holds.
  bool known_cone() const;

  Verdict contains(const Element& x, const SaturationBudget& budget = {}) const;
  /// q·d ∈ P for every rational q > 0.
  Verdict contains_ray(const Element& d, const SaturationBudget& budget = {}) const;

  std::optional<ConeGenerators> generators() const;
  const std::vector<Cone>& parts() const;
  /// Sorted members of an extensional cone.
  const std::vector<Element>& members() const;
  const std::any& payload() const;
  const GeneratedSpec& generated_spec() const;

  /// Exact membership mask over the finite view of a finite carrier, or
  /// nullopt if some membership query was not decided.
  std::optional<Subset> finite_members(const SaturationBudget& budget = {}) const;

  bool same_as(const Cone& other) const;

  struct Node;

 private:
  explicit Cone(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace splitord

#endif  // SPLITORD_CONES_CONE_HPP_
