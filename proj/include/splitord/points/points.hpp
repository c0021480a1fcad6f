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

#ifndef SPLITORD_POINTS_POINTS_HPP_
#define SPLITORD_POINTS_POINTS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "splitord/extensions/extensions.hpp"

namespace splitord {

/// Window routes in this module inspect at most this many elements.
inline constexpr std::size_t kPointWindow = 400;

/// g <= h: g(x) <= h(x) for every positive x of src.
Verdict hom_leq(const Homomorphism& g, const Homomorphism& h, const PreorderedGroup& src,
                const PreorderedGroup& dst, const SaturationBudget& budget = {});

struct RaliResult {
  Verdict verdict;
  /// P = P_prod.
  Verdict cone_route;
  /// f∘s = id and s∘f <= id.
  Verdict adjoint_route;
};

/// Both routes are computed; std::logic_error if one says Yes and the other No.
RaliResult is_rali(const Point& pt, const SaturationBudget& budget = {});

/// P = ⟨P_prod⟩.
Verdict is_strong(const Point& pt, const SaturationBudget& budget = {});

/// Pullback along a monotone g: C -> B. The cone is
/// {(x, a) : a >= 0 and (x, g(a)) >= 0} and the action is φ ∘ g.
/// Throws PreconditionError when g is not monotone.
Point pullback(const Point& pt, const PreorderedGroup& c, const Homomorphism& g,
               const SaturationBudget& budget = {});

struct CatalogMorphism {
  std::string name;
  PreorderedGroup source;
  Homomorphism map;
};

/// For base Z: n -> c n with |c| <= 4 (negative c from Z with the reversed
/// order) and the zero map from (Z_2, full). For other bases: the identity
/// and the zero map from (Z, N).
std::vector<CatalogMorphism> default_catalog(const PreorderedGroup& base);

struct StablyStrongReport {
  /// Yes means strong after every pullback in this catalog, nothing more.
  Verdict verdict;
  std::vector<std::pair<std::string, Verdict>> per_morphism;
  std::string scope_note;
};

StablyStrongReport stably_strong_over(const Point& pt, const std::vector<CatalogMorphism>& catalog,
                                      const SaturationBudget& budget = {});

struct PointClassification {
  Verdict rali;
  Verdict strong;
  StablyStrongReport stably_strong;
};

PointClassification classify_point(const Point& pt, const std::vector<CatalogMorphism>& catalog,
                                   const SaturationBudget& budget = {});

/// Componentwise product over B1 × B2, with carrier (X1 × X2) ⋊ (B1 × B2).
Point point_product(const Point& p1, const Point& p2);

/// (a, b, c) from src to dst: k'a = bk, f'b = cf, s'c = bs.
struct PointMorphism {
  Homomorphism a;
  Homomorphism b;
  Homomorphism c;
};

PointMorphism identity_morphism(const Point& pt);

/// Commutation of the three squares and monotonicity of a, b, c. A failing
/// square gives No with the offending element.
Verdict check_point_morphism(const PointMorphism& m, const Point& src, const Point& dst,
                             const SaturationBudget& budget = {});

struct SsflResult {
  /// a and c are order-isomorphisms and both rows are strong.
  Verdict hypotheses;
  Verdict morphism;
  /// b is a group isomorphism.
  Verdict b_iso;
  Verdict b_inverse_monotone;
  /// b is an isomorphism of preordered groups; the headline verdict.
  Verdict verdict;
};

SsflResult ssfl_check(const PointMorphism& m, const Point& src, const Point& dst,
                      const SaturationBudget& budget = {});

/// h is bijective with monotone inverse, for a, c in ssfl_check.
Verdict is_order_isomorphism(const Homomorphism& h, const PreorderedGroup& src, const PreorderedGroup& dst,
                             const SaturationBudget& budget = {});

}  // namespace splitord

#endif  // SPLITORD_POINTS_POINTS_HPP_
