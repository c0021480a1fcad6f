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

#ifndef SPLITORD_CONES_PREORDER_HPP_
#define SPLITORD_CONES_PREORDER_HPP_

#include <string>
#include <vector>

#include "splitord/cones/cone.hpp"

namespace splitord {

struct PreorderedGroup {
  Group group;
  Cone cone;

  PreorderedGroup(Group g, Cone c);
  std::string describe() const;
};

/// x <= y iff -x + y lies in the cone.
Verdict leq(const PreorderedGroup& p, const Element& x, const Element& y,
            const SaturationBudget& budget = {});
Verdict sim(const PreorderedGroup& p, const Element& x, const Element& y,
            const SaturationBudget& budget = {});
/// 0 <= b and not b <= 0.
Verdict strictly_positive(const PreorderedGroup& p, const Element& b,
                          const SaturationBudget& budget = {});

/// ⟨A⟩: extensional on finite groups, trivial for empty A, else generated.
Cone generated_cone(const Group& g, const std::vector<Element>& seeds);

/// P ∩ (-P).
struct UnitsSubgroup {
  enum class Shape { kTrivial, kWhole, kListed };
  Shape shape = Shape::kListed;
  /// kListed: the units found (all of them when exact).
  std::vector<Element> elements;
  bool exact = true;
  std::string note;

  /// A generating set of the units subgroup (exact results only).
  std::vector<Element> generators(const Group& g) const;
};

UnitsSubgroup units_subgroup(const PreorderedGroup& p, const SaturationBudget& budget = {});

/// h(P_src) ⊆ P_dst.
Verdict is_monotone(const Homomorphism& h, const PreorderedGroup& src, const PreorderedGroup& dst,
                    const SaturationBudget& budget = {});

/// 0 ∈ P, P + P ⊆ P and conjugation closure: exhaustive on finite carriers,
/// on window elements otherwise.
Verdict check_cone_axioms(const Cone& c, const SaturationBudget& budget = {});

/// a ⊆ b. Exact on finite carriers and when a has generators; otherwise a
/// search for a member of a outside b over the window.
Verdict cone_subset(const Cone& a, const Cone& b, const SaturationBudget& budget = {});
Verdict cone_equal(const Cone& a, const Cone& b, const SaturationBudget& budget = {});

/// Window elements (all elements for finite groups) in window order.
std::vector<Element> test_elements(const Group& g, const SaturationBudget& budget);
/// Window elements decided to be in the cone.
std::vector<Element> window_members(const Cone& c, const SaturationBudget& budget);

}  // namespace splitord

#endif  // SPLITORD_CONES_PREORDER_HPP_
