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

#ifndef SPLITORD_EXTENSIONS_FAMILY_HPP_
#define SPLITORD_EXTENSIONS_FAMILY_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "splitord/extensions/extension.hpp"

namespace splitord {

/// N ∪ {∞} with ∞ + n = ∞.
class ExtNat {
 public:
  ExtNat() = default;
  ExtNat(long long n);  // NOLINT(google-explicit-constructor)
  explicit ExtNat(Integer n);
  static ExtNat infinity();

  bool is_infinite() const { return infinite_; }
  const Integer& value() const { return value_; }
  std::string to_string() const;
  static ExtNat parse(const std::string& text);

  friend ExtNat operator+(const ExtNat& a, const ExtNat& b);
  friend bool operator==(const ExtNat& a, const ExtNat& b);
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);

 private:
  bool infinite_ = false;
  Integer value_ = 0;
};

enum class FamilyKind {
  /// Z-indexed up-sets X_j = ↑(-x_j) of Z for 0 <= j <= N, X_j = ∅ for
  /// j < 0 and x_j = tail for j > N (tail is 0 or ∞).
  kUpSetSequence,
  /// One subset of X per element of a finite B (indexed by finite views).
  kExplicit,
  /// Membership read off a cone on the carrier.
  kFromCone,
};

/// (X_b)_{b ∈ B}, stored for every b with X_b = ∅ off P_B.
struct ConeFamily {
  FamilyKind kind = FamilyKind::kExplicit;
  PreorderedGroup base;
  PreorderedGroup fiber;
  std::vector<ExtNat> sequence;
  ExtNat tail = ExtNat::infinity();
  std::vector<Subset> sets;
  std::function<Verdict(const Element& x, const Element& b, const SaturationBudget&)> from_cone;
  std::string name;

  static ConeFamily up_sets(PreorderedGroup base, PreorderedGroup fiber, std::vector<ExtNat> x,
                            ExtNat tail = ExtNat::infinity());
  static ConeFamily explicit_sets(PreorderedGroup base, PreorderedGroup fiber, std::vector<Subset> sets);

  /// x ∈ X_b.
  Verdict member(const Element& x, const Element& b, const SaturationBudget& budget = {}) const;
  std::string describe() const;
};

struct FamilyValidation {
  Verdict verdict;
  /// In order: 0 ∈ X_b iff b ∈ P_B (and X_b = ∅ otherwise); X_0 = P_X;
  /// X_b + φ_b(X_b') ⊆ X_{b+b'}; x + φ_a(X_b) - φ_{a+b-a}(x) ⊆ X_{a+b-a}.
  std::array<Verdict, 4> conditions;
  /// φ_a(X_b) = X_{a+b-a}; implied by the four conditions, reported separately.
  Verdict conjugation_invariance;
};

FamilyValidation validate_family(const ConeFamily& fam, const Action& action,
                                 const SaturationBudget& budget = {});

/// P = {(x, b) : x ∈ X_b}.
Cone family_to_cone(const ConeFamily& fam, const Extension& e);
/// X_b = {x : (x, b) ∈ P}. Up-set sequences are read off on the window for
/// Z over Z (x_j = ∞ when the whole window column lies in P).
ConeFamily cone_to_family(const Cone& p, const Extension& e, const Window& window = {});

struct LatticeScope {
  enum class Kind { kExhaustiveFinite, kSuperadditiveWindow };
  Kind kind = Kind::kExhaustiveFinite;
  std::size_t n = 0;
  std::size_t m = 0;

  static LatticeScope exhaustive() { return {}; }
  static LatticeScope superadditive(std::size_t n, std::size_t m) {
    return {Kind::kSuperadditiveWindow, n, m};
  }
  std::string describe() const;
};

struct LatticeEntry {
  Cone cone;
  /// x_0 .. x_N for superadditive scopes.
  std::vector<ExtNat> sequence;
  /// Sorted member indices for finite scopes.
  std::vector<std::size_t> members;
  std::size_t window_size = 0;
  Verdict compatible;
};

struct LatticeReport {
  Extension ext;
  LatticeScope scope;
  std::vector<LatticeEntry> cones;
  std::size_t candidates = 0;
  bool meet_closed = true;
  /// Joins that fall inside the scope are listed; joins leaving the window
  /// are counted separately.
  bool join_closed = true;
  std::size_t joins_outside_scope = 0;

  std::size_t count() const { return cones.size(); }
};

LatticeReport enumerate_compatible_cones(const Extension& e, const LatticeScope& scope,
                                         const SaturationBudget& budget = {});

/// First pair (n, m), n <= m, with x_{n+m} < x_n + x_m, where x_j = tail
/// beyond the listed terms.
std::optional<std::pair<std::size_t, std::size_t>> superadditivity_failure(
    const std::vector<ExtNat>& x, const ExtNat& tail = ExtNat::infinity());

}  // namespace splitord

#endif  // SPLITORD_EXTENSIONS_FAMILY_HPP_
