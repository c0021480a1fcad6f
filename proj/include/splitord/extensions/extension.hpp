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

#ifndef SPLITORD_EXTENSIONS_EXTENSION_HPP_
#define SPLITORD_EXTENSIONS_EXTENSION_HPP_

#include <optional>
#include <string>

#include "splitord/cones/cones.hpp"

namespace splitord {

/// X ⋊_φ B checked against the action laws. Throws PreconditionError naming
/// the violated law and its witness.
Group semidirect(const Group& x, const Group& b, const Action& action, const Window& window = {});

/// The data (X, P_X) -> X ⋊_φ B <-> (B, P_B) without a cone on the middle.
struct Extension {
  PreorderedGroup x;
  PreorderedGroup b;
  Action action;
  Group carrier;

  static Extension make(PreorderedGroup x, PreorderedGroup b, Action action,
                        const Window& window = {});

  /// ⟨1,0⟩, π_B and ⟨0,1⟩.
  Homomorphism kernel_inclusion() const;
  Homomorphism projection() const;
  Homomorphism section() const;
  /// φ_b as an endomorphism of X.
  Homomorphism phi(const Element& b) const;
  std::string describe() const;
};

/// A point: an extension together with a cone P on the carrier.
struct SplitExtension {
  Extension ext;
  Cone cone;

  SplitExtension(Extension e, Cone c);
  PreorderedGroup total() const { return PreorderedGroup(ext.carrier, cone); }
  std::string describe() const;
};
using Point = SplitExtension;

struct Normalized {
  Action action;
  /// θ(a) = (a - s f a, f a) from A to X ⋊_φ B, with X the source of k.
  Homomorphism theta;
  Group carrier;
  Verdict verified;
};

/// Recover the action φ_b(x) = k⁻¹(s(b) + k(x) - s(b)) and the comparison
/// isomorphism θ from a split extension X -k-> A -f-> B with section s.
Normalized normalize(const Group& a, const Homomorphism& f, const Homomorphism& s,
                     const Homomorphism& k, const Window& window = {});

Cone product_cone(const Extension& e);
Cone lex_cone(const Extension& e);

enum class CompatMode { kInterval, kDefinitional, kBoth };

/// kBoth runs both modes and throws std::logic_error if one says Yes and
/// the other No.
Verdict is_compatible(const Cone& p, const Extension& e, CompatMode mode = CompatMode::kBoth,
                      const SaturationBudget& budget = {});

struct CompatibleExistence {
  Verdict verdict;
  /// The lex cone when the verdict is Yes.
  std::optional<Cone> certificate;
};

CompatibleExistence compatible_exists(const Extension& e, const SaturationBudget& budget = {});

/// ⟨P_X × P_B⟩. Throws PreconditionError when no compatible cone exists.
Cone minimal_cone(const Extension& e, const SaturationBudget& budget = {});

/// φ_b ∼ id pointwise for every b in P_B.
Verdict is_minimal_equal_product(const Extension& e, const SaturationBudget& budget = {});

/// x ∼ φ(x) for all x in X, reduced to generators when X is abelian and
/// finitely generated.
Verdict pointwise_equivalent_to_identity(const PreorderedGroup& x, const Homomorphism& phi,
                                          const SaturationBudget& budget = {});

}  // namespace splitord

#endif  // SPLITORD_EXTENSIONS_EXTENSION_HPP_
