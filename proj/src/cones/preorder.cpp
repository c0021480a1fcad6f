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

#include "splitord/cones/preorder.hpp"

#include <algorithm>

#include "saturation.hpp"

namespace splitord {

namespace {

// Caps for pair and conjugation checks on infinite carriers.
constexpr std::size_t kAxiomMembers = 40;
constexpr std::size_t kAxiomConjugators = 16;

}  // namespace

PreorderedGroup::PreorderedGroup(Group g, Cone c) : group(std::move(g)), cone(std::move(c)) {
  if (!cone.group().same_as(group)) {
    throw StructuralError("cone lives on " + cone.group().describe() + ", not on " + group.describe());
  }
}

std::string PreorderedGroup::describe() const { return "(" + group.describe() + ", " + cone.describe() + ")"; }

Verdict leq(const PreorderedGroup& p, const Element& x, const Element& y, const SaturationBudget& budget) {
  return p.cone.contains(p.group.add(p.group.neg(x), y), budget);
}

Verdict sim(const PreorderedGroup& p, const Element& x, const Element& y, const SaturationBudget& budget) {
  return leq(p, x, y, budget) && leq(p, y, x, budget);
}

Verdict strictly_positive(const PreorderedGroup& p, const Element& b, const SaturationBudget& budget) {
  const Verdict pos = p.cone.contains(b, budget);
  if (pos.is_no()) return pos;
  return pos && !p.cone.contains(p.group.neg(b), budget);
}

Cone generated_cone(const Group& g, const std::vector<Element>& seeds) {
  for (const auto& s : seeds) g.check(s);
  bool all_zero = std::all_of(seeds.begin(), seeds.end(), [&](const Element& s) { return g.is_zero(s); });
  if (all_zero) return Cone::trivial(g);
  if (g.is_finite()) {
    const auto& view = g.finite_view();
    Subset mask(view.size(), false);
    for (const auto& s : seeds) mask[view.index(s)] = true;
    const Subset closed = finite_closure(view, mask);
    std::vector<Element> members;
    for (std::size_t i = 0; i < view.size(); ++i) {
      if (closed[i]) members.push_back(view.element(i));
    }
    return Cone::extensional(g, std::move(members));
  }
  return Cone::generated(g, seeds);
}

std::vector<Element> UnitsSubgroup::generators(const Group& g) const {
  switch (shape) {
    case Shape::kTrivial:
      return {};
    case Shape::kWhole:
      return g.generators();
    case Shape::kListed:
      return elements;
  }
  return {};
}

namespace {

UnitsSubgroup trivial_units(std::string note) {
  UnitsSubgroup u;
  u.shape = UnitsSubgroup::Shape::kTrivial;
  u.note = std::move(note);
  return u;
}

UnitsSubgroup whole_units(std::string note) {
  UnitsSubgroup u;
  u.shape = UnitsSubgroup::Shape::kWhole;
  u.note = std::move(note);
  return u;
}

UnitsSubgroup listed_units(const PreorderedGroup& p, const SaturationBudget& budget, bool exact,
                           std::string note) {
  UnitsSubgroup u;
  u.shape = UnitsSubgroup::Shape::kListed;
  u.exact = exact;
  u.note = std::move(note);
  for (const auto& x : test_elements(p.group, budget)) {
    const Verdict a = p.cone.contains(x, budget);
    if (!a.is_yes()) continue;
    if (p.cone.contains(p.group.neg(x), budget).is_yes()) u.elements.push_back(x);
  }
  return u;
}

// Some integer functional is positive on every ray, so no nonzero element
// of the monoid they generate has its negative there.
bool pointed(const Group& g, const std::vector<Ray>& rays) {
  if (!g.is_abelian() || g.arity() > 6) return false;
  if (rays.empty()) return true;
  std::vector<Integer> c(g.arity(), -2);
  while (true) {
    bool ok = detail::functional_is_homomorphism(g, c, 0);
    for (const auto& r : rays) {
      if (!ok) break;
      Rational s = 0;
      for (std::size_t i = 0; i < c.size(); ++i) s += Rational(c[i]) * r.element[i];
      ok = s > 0;
    }
    if (ok) return true;
    std::size_t k = 0;
    while (k < c.size() && c[k] == 2) c[k++] = -2;
    if (k == c.size()) return false;
    ++c[k];
  }
}

}  // namespace

UnitsSubgroup units_subgroup(const PreorderedGroup& p, const SaturationBudget& budget) {
  const Cone& c = p.cone;
  if (p.group.is_finite()) {
    UnitsSubgroup u = listed_units(p, budget, true, "exhaustive");
    if (u.elements.size() == 1) return trivial_units("exhaustive");
    if (u.elements.size() == p.group.order()) return whole_units("exhaustive");
    return u;
  }
  switch (c.kind()) {
    case ConeKind::kTrivial:
    case ConeKind::kNaturalOrthant:
      return trivial_units("closed form");
    case ConeKind::kFull:
      return whole_units("closed form");
    case ConeKind::kExtensional:
      return listed_units(p, budget, true, "finite cone");
    case ConeKind::kProduct:
    case ConeKind::kLex: {
      bool all_trivial = true;
      bool all_whole = c.kind() == ConeKind::kProduct;
      std::vector<UnitsSubgroup> parts;
      for (std::size_t i = 0; i < c.parts().size(); ++i) {
        const UnitsSubgroup part = units_subgroup(PreorderedGroup(p.group.factors()[i], c.parts()[i]), budget);
        all_trivial = all_trivial && part.exact && part.shape == UnitsSubgroup::Shape::kTrivial;
        all_whole = all_whole && part.exact && part.shape == UnitsSubgroup::Shape::kWhole;
      }
      if (all_trivial) return trivial_units("componentwise");
      if (all_whole) return whole_units("componentwise");
      break;
    }
    case ConeKind::kGenerated:
      if (c.generated_spec().rays_complete && pointed(p.group, c.generated_spec().rays)) return trivial_units("pointed generators");
      break;
    default:
      break;
  }
  return listed_units(p, budget, false, "window search");
}

namespace {

Verdict window_monotone(const Homomorphism& h, const PreorderedGroup& src, const PreorderedGroup& dst,
                        const SaturationBudget& budget, bool had_unknown) {
  bool unknown = had_unknown;
  std::size_t seen = 0;
  for (const auto& x : test_elements(src.group, budget)) {
    const Verdict in = src.cone.contains(x, budget);
    if (!in.is_yes()) continue;
    ++seen;
    const Verdict out = dst.cone.contains(h(x), budget);
    if (out.is_no()) return Verdict::no("a positive element is sent outside the target cone").with("x", src.group, x);
    unknown = unknown || out.is_unknown();
  }
  Verdict v = unknown ? Verdict::unknown("no counterexample on the window") : Verdict::yes(Scope::kWindow);
  v.used.window_elements = seen;
  return v;
}

}  // namespace

Verdict is_monotone(const Homomorphism& h, const PreorderedGroup& src, const PreorderedGroup& dst,
                    const SaturationBudget& budget) {
  if (!h.source().same_as(src.group) || !h.target().same_as(dst.group)) {
    throw StructuralError("homomorphism " + h.name() + " does not map " + src.group.describe() + " to " +
                          dst.group.describe());
  }
  if (src.group.is_finite()) {
    if (auto mask = src.cone.finite_members(budget)) {
      const auto& view = src.group.finite_view();
      ForAll all;
      for (std::size_t i = 0; i < view.size(); ++i) {
        if (!(*mask)[i]) continue;
        Verdict v = dst.cone.contains(h(view.element(i)), budget);
        if (v.is_no()) {
          return Verdict::no("a positive element is sent outside the target cone").with("x", src.group, view.element(i));
        }
        all.add(v);
      }
      return all.result();
    }
  }
  if (auto gens = src.cone.generators()) {
    ForAll all;
    for (const auto& r : gens->rays) {
      const Element y = h(r.element);
      Verdict v = r.rational ? dst.cone.contains_ray(y, budget) : dst.cone.contains(y, budget);
      if (v.is_no()) {
        return Verdict::no("a generator of the source cone is sent outside the target cone")
            .with("x", src.group, r.element);
      }
      all.add(v);
    }
    Verdict v = all.result();
    if (v.is_yes() && !dst.cone.known_cone()) return window_monotone(h, src, dst, budget, false);
    if (!v.is_unknown()) return v.because("checked on generators of the source cone");
    return window_monotone(h, src, dst, budget, true);
  }
  return window_monotone(h, src, dst, budget, false);
}

Verdict check_cone_axioms(const Cone& c, const SaturationBudget& budget) {
  const Group& g = c.group();
  if (g.is_finite()) {
    const auto mask = c.finite_members(budget);
    if (!mask) return Verdict::unknown("membership undecided on a finite carrier");
    const auto& view = g.finite_view();
    if (!(*mask)[view.zero()]) return Verdict::no("0 is not in the cone");
    for (std::size_t a = 0; a < view.size(); ++a) {
      if (!(*mask)[a]) continue;
      for (std::size_t b = 0; b < view.size(); ++b) {
        if ((*mask)[b] && !(*mask)[view.add(a, b)]) {
          return Verdict::no("not closed under addition").with("a", g, view.element(a)).with("b", g, view.element(b));
        }
        if (!(*mask)[view.conjugate(b, a)]) {
          return Verdict::no("not closed under conjugation").with("g", g, view.element(b)).with("a", g, view.element(a));
        }
      }
    }
    return Verdict::yes(Scope::kExact, "exhaustive");
  }
  if (c.known_cone()) return Verdict::yes(Scope::kExact, "by construction");
  const Verdict zero = c.contains(g.zero(), budget);
  if (zero.is_no()) return Verdict::no("0 is not in the cone");
  bool unknown = zero.is_unknown();
  auto members = window_members(c, budget);
  if (members.size() > kAxiomMembers) members.resize(kAxiomMembers);
  for (const auto& a : members) {
    for (const auto& b : members) {
      const Verdict v = c.contains(g.add(a, b), budget);
      if (v.is_no()) return Verdict::no("not closed under addition").with("a", g, a).with("b", g, b);
      unknown = unknown || v.is_unknown();
    }
  }
  auto conjugators = test_elements(g, budget);
  if (conjugators.size() > kAxiomConjugators) conjugators.resize(kAxiomConjugators);
  if (!g.is_abelian()) {
    for (const auto& a : members) {
      for (const auto& w : conjugators) {
        const Verdict v = c.contains(g.conjugate(w, a), budget);
        if (v.is_no()) return Verdict::no("not closed under conjugation").with("g", g, w).with("a", g, a);
        unknown = unknown || v.is_unknown();
      }
    }
  }
  if (c.kind() == ConeKind::kExtensional) {
    // Sums of members were all members, and conjugation is the only
    // remaining condition.
    if (!unknown && g.is_abelian()) return Verdict::yes(Scope::kExact, "finite set closed under addition");
  }
  Verdict v = unknown ? Verdict::unknown("window checks passed with undecided memberships")
                      : Verdict::yes(Scope::kWindow);
  v.used.window_elements = members.size();
  return v;
}

Verdict cone_subset(const Cone& a, const Cone& b, const SaturationBudget& budget) {
  const Group& g = a.group();
  if (!b.group().same_as(g)) throw StructuralError("cones live on different groups");
  if (g.is_finite()) {
    const auto ma = a.finite_members(budget);
    const auto mb = b.finite_members(budget);
    if (ma && mb) {
      const auto& view = g.finite_view();
      for (std::size_t i = 0; i < view.size(); ++i) {
        if ((*ma)[i] && !(*mb)[i]) return Verdict::no("element outside the second cone").with("x", g, view.element(i));
      }
      return Verdict::yes(Scope::kExact, "exhaustive");
    }
  }
  bool unknown = false;
  if (auto gens = a.generators()) {
    ForAll all;
    for (const auto& r : gens->rays) {
      const Verdict v = r.rational ? b.contains_ray(r.element, budget) : b.contains(r.element, budget);
      if (v.is_no()) {
        return Verdict::no("generator outside the second cone").with("x", g, r.element).because(v.note);
      }
      all.add(v);
    }
    Verdict v = all.result();
    if (v.is_yes() && !b.known_cone()) {
      // Generators inside a set not known to be a cone prove nothing more.
    } else if (!v.is_unknown()) {
      return v.because("checked on generators");
    } else {
      unknown = true;
    }
  }
  std::size_t seen = 0;
  for (const auto& x : test_elements(g, budget)) {
    if (!a.contains(x, budget).is_yes()) continue;
    ++seen;
    const Verdict v = b.contains(x, budget);
    if (v.is_no()) {
      Verdict out = Verdict::no("element outside the second cone").with("x", g, x);
      out.note += v.note.empty() ? "" : " (" + v.note + ")";
      return out;
    }
    unknown = unknown || v.is_unknown();
  }
  Verdict v = unknown ? Verdict::unknown("no counterexample on the window") : Verdict::yes(Scope::kWindow);
  v.used.window_elements = seen;
  return v;
}

Verdict cone_equal(const Cone& a, const Cone& b, const SaturationBudget& budget) {
  return cone_subset(a, b, budget) && cone_subset(b, a, budget);
}

std::vector<Element> test_elements(const Group& g, const SaturationBudget& budget) {
  return g.is_finite() ? g.elements() : g.window(budget.window);
}

std::vector<Element> window_members(const Cone& c, const SaturationBudget& budget) {
  std::vector<Element> out;
  for (const auto& x : test_elements(c.group(), budget)) {
    if (c.contains(x, budget).is_yes()) out.push_back(x);
  }
  return out;
}

}  // namespace splitord
