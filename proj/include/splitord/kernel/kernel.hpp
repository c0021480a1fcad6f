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

#ifndef SPLITORD_KERNEL_KERNEL_HPP_
#define SPLITORD_KERNEL_KERNEL_HPP_

#include <vector>

#include "splitord/kernel/action.hpp"
#include "splitord/kernel/element.hpp"
#include "splitord/kernel/errors.hpp"
#include "splitord/kernel/finite.hpp"
#include "splitord/kernel/group.hpp"
#include "splitord/kernel/homomorphism.hpp"
#include "splitord/kernel/number.hpp"
#include "splitord/kernel/verdict.hpp"

namespace splitord {

Element eval_add(const Group& g, const Element& a, const Element& b);
Element eval_neg(const Group& g, const Element& a);
Element conjugate(const Group& g, const Element& by, const Element& x);

/// All automorphisms of a finite group, the identity first and the rest in
/// ascending order of their image tables.
std::vector<Homomorphism> enumerate_automorphisms(const Group& g);

/// All homomorphisms source -> target. The source must be finite or free
/// abelian; when the target is infinite, generator images are drawn from
/// target.window(window).
std::vector<Homomorphism> enumerate_homomorphisms(const Group& source,
                                                  const Group& target,
                                                  const Window& window = {});

/// Additivity check. Exhaustive on finite sources, structural for maps fixed
/// by generator images, otherwise window pairs (Unknown when they all pass).
Verdict check_homomorphism(const Homomorphism& h, const Window& window = {});

/// phi_0 = id, phi_b additive, phi_{b+b'} = phi_b ∘ phi_{b'}. Exhaustive on
/// finite data, window-checked otherwise.
Verdict check_action_laws(const Action& action, const Window& window = {});

}  // namespace splitord

#endif  // SPLITORD_KERNEL_KERNEL_HPP_
