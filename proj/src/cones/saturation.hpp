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

#ifndef SPLITORD_SRC_CONES_SATURATION_HPP_
#define SPLITORD_SRC_CONES_SATURATION_HPP_

#include <optional>

#include "splitord/cones/cone.hpp"

namespace splitord::detail {

/// Membership in ⟨A⟩ on an infinite carrier: certificates for No, a
/// budgeted search over sums of conjugates for Yes.
Verdict saturate(const Group& g, const GeneratedSpec& spec, const Element& t,
                 const SaturationBudget& budget);

/// t = q·d for some rational q > 0, with d supported on rational
/// coordinates (so that coordinate scaling is the group multiple).
bool is_positive_multiple(const Group& g, const Element& t, const Element& d);

/// Does x ↦ c·x mod m define a homomorphism g -> Z_m? m == 0 means the
/// real-valued functional.
bool functional_is_homomorphism(const Group& g, const std::vector<Integer>& c, const Integer& m);

}  // namespace splitord::detail

#endif  // SPLITORD_SRC_CONES_SATURATION_HPP_
