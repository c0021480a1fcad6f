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

#include "splitord/cones/cone.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "saturation.hpp"

namespace splitord {

SaturationBudget SaturationBudget::doubled() const {
  SaturationBudget b = *this;
  b.max_conjugators *= 2;
  b.max_summands *= 2;
  b.window = window.doubled();
  return b;
}

const char* to_string(ConeKind k) {
  switch (k) {
    case ConeKind::kExtensional:
      return "extensional";
    case ConeKind::kTrivial:
      return "trivial";
    case ConeKind::kFull:
      return "full";
    case ConeKind::kNaturalOrthant:
      return "natural";
    case ConeKind::kProduct:
      return "product";
    case ConeKind::kLex:
      return "lex";
    case ConeKind::kGenerated:
      return "generated";
    case ConeKind::kFamily:
      return "family";
    case ConeKind::kIntersection:
      return "intersection";
    case ConeKind::kPredicate:
      return "predicate";
  }
  return "?";
}

namespace {

using CacheKey = std::tuple<Element, std::size_t, std::size_t, std::int64_t, std::int64_t, std::int64_t, std::size_t>;

CacheKey cache_key(const Element& x, const SaturationBudget& b) {
  return {x, b.max_conjugators, b.max_summands, b.window.integer_bound, b.window.numerator_bound,
          b.window.denominator_bound, b.window.max_elements};
}

bool rational_only(const Group& g, const Element& e) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0 && g.coordinates()[i].kind != CoordKind::kRational) return false;
  }
  return true;
}

Verdict ray_fallback(const Verdict& at_one) {
  if (at_one.is_no()) return at_one;
  return Verdict::unknown("membership of every positive multiple is not decided");
}

}  // namespace

struct Cone::Node {
  ConeKind kind = ConeKind::kTrivial;
  std::optional<Group> group;
  std::string name;
  std::vector<Element> members;
  std::optional<Subset> mask;
  std::vector<Cone> parts;
  GeneratedSpec gen;
  PredicateSpec pred;
  bool certified = false;

  mutable std::mutex mu;
  mutable std::map<CacheKey, Verdict> cache;
  mutable std::optional<Subset> closure;

  std::shared_ptr<Node> clone() const {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->group = group;
    n->name = name;
    n->members = members;
    n->mask = mask;
    n->parts = parts;
    n->gen = gen;
    n->pred = pred;
    n->certified = certified;
    return n;
  }
};

Cone Cone::extensional(Group g, std::vector<Element> members) {
  for (const auto& m : members) g.check(m);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto node = std::make_shared<Node>();
  node->kind = ConeKind::kExtensional;
  if (g.is_finite()) {
    const auto& view = g.finite_view();
    Subset mask(view.size(), false);
    for (const auto& m : members) mask[view.index(m)] = true;
    node->mask = std::move(mask);
  }
  node->group = std::move(g);
  node->members = std::move(members);
  return Cone(node);
}

Cone Cone::trivial(Group g) {
  auto node = std::make_shared<Node>();
  node->kind = ConeKind::kTrivial;
  node->group = std::move(g);
  return Cone(node);
}

Cone Cone::full(Group g) {
  auto node = std::make_shared<Node>();
  node->kind = ConeKind::kFull;
  node->group = std::move(g);
  return Cone(node);
}

Cone Cone::natural_orthant(Group g) {
  if (g.kind() != GroupKind::kFreeAbelian && g.kind() != GroupKind::kRationalVector &&
      g.kind() != GroupKind::kPositiveRationals) {
    throw StructuralError("the natural cone needs Z^k, Q^k or the positive rationals, not " + g.describe());
  }
  auto node = std::make_shared<Node>();
  node->kind = ConeKind::kNaturalOrthant;
  node->group = std::move(g);
  return Cone(node);
}

Cone Cone::product(Group carrier, std::vector<Cone> parts) {
  if (carrier.kind() != GroupKind::kDirectProduct && carrier.kind() != GroupKind::kSemidirect) {
    throw StructuralError("product cones need a direct or semidirect product carrier");
  }
  const auto& factors = carrier.factors();
  if (parts.size() != factors.size()) throw StructuralError("product cone needs one cone per factor");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].group().same_as(factors[i])) {
      throw StructuralError("product cone part " + std::to_string(i) + " lives on " +
                            parts[i].group().describe() + ", expected " + factors[i].describe());
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = ConeKind::kProduct;
  node->group = std::move(carrier);
  node->parts = std::move(parts);
  return Cone(node);
}

Cone Cone::lex(Group carrier, Cone x_cone, Cone b_cone) {
  if (carrier.factors().size() != 2 ||
      (carrier.kind() != GroupKind::kDirectProduct && carrier.kind() != GroupKind::kSemidirect)) {
    throw StructuralError("lex cones need a two-factor carrier");
  }
  if (!x_cone.group().same_as(carrier.factors()[0]) || !b_cone.group().same_as(carrier.factors()[1])) {
    throw StructuralError("lex cone parts do not match the carrier factors");
  }
  auto node = std::make_shared<Node>();
  node->kind = ConeKind::kLex;
  node->group = std::move(carrier);
  node->parts = {std::move(x_cone), std::move(b_cone)};
  return Cone(node);
}

Cone Cone::generated(Group g, std::vector<Element> seeds) {
  GeneratedSpec spec;
  for (auto& s : seeds) {
    g.check(s);
    spec.rays.push_back(Ray{std::move(s), false});
  }
  return generated(std::move(g), std::move(spec));
}

Cone Cone::generated(Group g, GeneratedSpec spec) {
  for (const auto& r : spec.rays) g.check(r.element);
  auto node = std::make_shared<Node>();
  node->kind = ConeKind::kGenerated;
  node->group = std::move(g);
  node->name = spec.name;
  node->gen = std::move(spec);
  return Cone(node);
}

Cone Cone::family(Group carrier, PredicateSpec spec) {
  auto node = std::make_shared<Node>();
  node->kind = ConeKind::kFamily;
  node->group = std::move(carrier);
  node->name = spec.name;
  node->pred = std::move(spec);
  return Cone(node);
}

Cone Cone::intersection(std::vector<Cone> parts) {
  if (parts.empty()) throw StructuralError("intersection of no cones");
  for (const auto& p : parts) {
    if (!p.group().same_as(parts[0].group())) throw StructuralError("intersected cones live on different groups");
  }
  auto node = std::make_shared<Node>();
  node->kind = ConeKind::kIntersection;
  node->group = parts[0].group();
  node->parts = std::move(parts);
  return Cone(node);
}

Cone Cone::predicate(Group g, PredicateSpec spec) {
  if (!spec.contains) throw StructuralError("predicate cone without a membership test");
  auto node = std::make_shared<Node>();
  node->kind = ConeKind::kPredicate;
  node->group = std::move(g);
  node->name = spec.name;
  node->pred = std::move(spec);
  return Cone(node);
}

ConeKind Cone::kind() const { return node_->kind; }
const Group& Cone::group() const { return *node_->group; }
const std::string& Cone::name() const { return node_->name; }
const std::vector<Cone>& Cone::parts() const { return node_->parts; }
const std::vector<Element>& Cone::members() const { return node_->members; }
const std::any& Cone::payload() const { return node_->pred.payload; }
const GeneratedSpec& Cone::generated_spec() const { return node_->gen; }

Cone Cone::named(std::string name) const {
  auto n = node_->clone();
  n->name = std::move(name);
  return Cone(n);
}

Cone Cone::certified() const {
  auto n = node_->clone();
  n->certified = true;
  return Cone(n);
}

bool Cone::known_cone() const {
  if (node_->certified) return true;
  const Group& g = group();
  auto parts_known = [&] {
    return std::all_of(node_->parts.begin(), node_->parts.end(), [](const Cone& c) { return c.known_cone(); });
  };
  auto untwisted = [&] {
    return g.kind() == GroupKind::kDirectProduct || (g.kind() == GroupKind::kSemidirect && g.action().is_trivial());
  };
  switch (kind()) {
    case ConeKind::kTrivial:
    case ConeKind::kFull:
    case ConeKind::kNaturalOrthant:
    case ConeKind::kGenerated:
      return true;
    case ConeKind::kExtensional:
      if (g.is_finite()) return finite_is_cone(g.finite_view(), *node_->mask);
      return node_->members.size() == 1;
    case ConeKind::kProduct:
    case ConeKind::kLex:
      return parts_known() && untwisted();
    case ConeKind::kIntersection:
      return parts_known();
    case ConeKind::kFamily:
    case ConeKind::kPredicate:
      return node_->pred.closed;
  }
  return false;
}

std::string Cone::describe() const {
  if (!node_->name.empty()) return node_->name;
  switch (kind()) {
    case ConeKind::kExtensional:
      return "{" + std::to_string(node_->members.size()) + " elements}";
    case ConeKind::kTrivial:
      return "trivial";
    case ConeKind::kFull:
      return "full";
    case ConeKind::kNaturalOrthant:
      return "natural";
    case ConeKind::kProduct:
    case ConeKind::kLex:
    case ConeKind::kIntersection: {
      std::string out = std::string(to_string(kind())) + "(";
      for (std::size_t i = 0; i < node_->parts.size(); ++i) {
        if (i) out += ", ";
        out += node_->parts[i].describe();
      }
      return out + ")";
    }
    case ConeKind::kGenerated: {
      std::string out = "⟨";
      for (std::size_t i = 0; i < node_->gen.rays.size(); ++i) {
        if (i) out += ", ";
        out += group().to_string(node_->gen.rays[i].element);
        if (node_->gen.rays[i].rational) out += "·Q+";
      }
      return out + "⟩";
    }
    case ConeKind::kFamily:
      return "family";
    case ConeKind::kPredicate:
      return "predicate";
  }
  return "?";
}

Verdict Cone::contains(const Element& x, const SaturationBudget& budget) const {
  const Group& g = group();
  g.check(x);
  switch (kind()) {
    case ConeKind::kExtensional:
      if (node_->mask) return Verdict::from_bool((*node_->mask)[g.finite_view().index(x)]);
      return Verdict::from_bool(std::binary_search(node_->members.begin(), node_->members.end(), x));
    case ConeKind::kTrivial:
      return Verdict::from_bool(g.is_zero(x));
    case ConeKind::kFull:
      return Verdict::yes();
    case ConeKind::kNaturalOrthant: {
      if (g.kind() == GroupKind::kPositiveRationals) return Verdict::from_bool(x[0] >= 1);
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0) return Verdict::no();
      }
      return Verdict::yes();
    }
    case ConeKind::kProduct: {
      ForAll all;
      for (std::size_t i = 0; i < node_->parts.size(); ++i) {
        if (!all.add(node_->parts[i].contains(g.factor_part(x, i), budget))) break;
      }
      return all.result();
    }
    case ConeKind::kLex: {
      const Cone& xc = node_->parts[0];
      const Cone& bc = node_->parts[1];
      const Group& bg = bc.group();
      const Element b = g.factor_part(x, 1);
      const Verdict pos = bc.contains(b, budget);
      if (pos.is_no()) return pos;
      const Verdict neg = bc.contains(bg.neg(b), budget);
      if (pos.is_yes() && neg.is_no()) {
        Verdict v = pos;
        v.scope = std::max(pos.scope, neg.scope);
        return v;
      }
      const Verdict xv = xc.contains(g.factor_part(x, 0), budget);
      // b >= 0 and (b not <= 0 or x >= 0) covers both clauses.
      if (pos.is_yes() && xv.is_yes()) return pos && xv;
      if (neg.is_yes() && xv.is_no()) return xv;
      if (neg.is_unknown() || pos.is_unknown()) return Verdict::unknown("order on the base undecided");
      return xv;
    }
    case ConeKind::kGenerated: {
      if (g.is_finite()) {
        std::lock_guard<std::mutex> lock(node_->mu);
        if (!node_->closure) {
          const auto& view = g.finite_view();
          Subset seeds(view.size(), false);
          for (const auto& r : node_->gen.rays) seeds[view.index(r.element)] = true;
          if (node_->gen.base) {
            for (std::size_t i = 0; i < view.size(); ++i) {
              if (node_->gen.base(view.element(i), budget).is_yes()) seeds[i] = true;
            }
          }
          node_->closure = finite_closure(view, seeds);
        }
        return Verdict::from_bool((*node_->closure)[g.finite_view().index(x)]);
      }
      const CacheKey key = cache_key(x, budget);
      {
        std::lock_guard<std::mutex> lock(node_->mu);
        if (auto it = node_->cache.find(key); it != node_->cache.end()) return it->second;
      }
      Verdict v = detail::saturate(g, node_->gen, x, budget);
      std::lock_guard<std::mutex> lock(node_->mu);
      return node_->cache.emplace(key, std::move(v)).first->second;
    }
    case ConeKind::kFamily:
    case ConeKind::kPredicate:
      return node_->pred.contains(x, budget);
    case ConeKind::kIntersection: {
      ForAll all;
      for (const auto& p : node_->parts) {
        if (!all.add(p.contains(x, budget))) break;
      }
      return all.result();
    }
  }
  throw StructuralError("unreachable cone kind");
}

Verdict Cone::contains_ray(const Element& d, const SaturationBudget& budget) const {
  const Group& g = group();
  g.check(d);
  if (g.is_zero(d)) return Verdict::yes();
  if (g.is_finite() || !rational_only(g, d)) return contains(d, budget);
  switch (kind()) {
    case ConeKind::kExtensional:
    case ConeKind::kTrivial:
      return Verdict::no();
    case ConeKind::kFull:
      return Verdict::yes();
    case ConeKind::kNaturalOrthant:
      return contains(d, budget);
    case ConeKind::kProduct: {
      ForAll all;
      for (std::size_t i = 0; i < node_->parts.size(); ++i) {
        if (!all.add(node_->parts[i].contains_ray(g.factor_part(d, i), budget))) break;
      }
      return all.result();
    }
    case ConeKind::kLex: {
      const Element b = g.factor_part(d, 1);
      const Cone& bc = node_->parts[1];
      if (bc.group().is_zero(b)) {
        // b = 0 is a unit, so only the fibre over 0 matters.
        return node_->parts[0].contains_ray(g.factor_part(d, 0), budget);
      }
      return ray_fallback(contains(d, budget));
    }
    case ConeKind::kGenerated: {
      for (const auto& r : node_->gen.rays) {
        if (r.rational && (r.element == d || detail::is_positive_multiple(g, d, r.element))) return Verdict::yes();
      }
      if (node_->gen.envelope) {
        if (auto e = node_->gen.envelope(d, budget); e.is_no()) return e;
      }
      return ray_fallback(contains(d, budget));
    }
    case ConeKind::kFamily:
    case ConeKind::kPredicate:
      if (node_->pred.contains_ray) return node_->pred.contains_ray(d, budget);
      return ray_fallback(contains(d, budget));
    case ConeKind::kIntersection: {
      ForAll all;
      for (const auto& p : node_->parts) {
        if (!all.add(p.contains_ray(d, budget))) break;
      }
      return all.result();
    }
  }
  return ray_fallback(contains(d, budget));
}

std::optional<ConeGenerators> Cone::generators() const {
  const Group& g = group();
  auto full_rays = [](const Group& grp) -> std::optional<ConeGenerators> {
    ConeGenerators out;
    if (grp.is_finite()) {
      for (const auto& e : grp.elements()) out.rays.push_back(Ray{e, false});
      return out;
    }
    for (const auto& c : grp.coordinates()) {
      if (c.kind == CoordKind::kPositiveRational) return std::nullopt;
    }
    for (const auto& gen : grp.generators()) {
      const bool rational = rational_only(grp, gen);
      out.rays.push_back(Ray{gen, rational});
      out.rays.push_back(Ray{grp.neg(gen), rational});
    }
    return out;
  };
  switch (kind()) {
    case ConeKind::kExtensional: {
      ConeGenerators out;
      for (const auto& m : node_->members) out.rays.push_back(Ray{m, false});
      return out;
    }
    case ConeKind::kTrivial:
      return ConeGenerators{};
    case ConeKind::kFull:
      return full_rays(g);
    case ConeKind::kNaturalOrthant: {
      if (g.kind() == GroupKind::kPositiveRationals) return std::nullopt;
      ConeGenerators out;
      for (const auto& gen : g.generators()) out.rays.push_back(Ray{gen, g.kind() == GroupKind::kRationalVector});
      return out;
    }
    case ConeKind::kProduct: {
      ConeGenerators out;
      for (std::size_t i = 0; i < node_->parts.size(); ++i) {
        auto part = node_->parts[i].generators();
        if (!part) return std::nullopt;
        out.conic = out.conic || part->conic;
        for (auto& r : part->rays) out.rays.push_back(Ray{g.inject(i, r.element), r.rational});
      }
      return out;
    }
    case ConeKind::kLex: {
      const Cone& bc = node_->parts[1];
      if (bc.kind() != ConeKind::kTrivial && bc.kind() != ConeKind::kFull) return std::nullopt;
      auto xs = node_->parts[0].generators();
      auto bs = bc.generators();
      if (!xs || !bs) return std::nullopt;
      ConeGenerators out;
      out.conic = xs->conic || bs->conic;
      for (auto& r : xs->rays) out.rays.push_back(Ray{g.inject(0, r.element), r.rational});
      for (auto& r : bs->rays) out.rays.push_back(Ray{g.inject(1, r.element), r.rational});
      return out;
    }
    case ConeKind::kGenerated:
      if (!node_->gen.rays_complete) return std::nullopt;
      return ConeGenerators{node_->gen.rays, true};
    case ConeKind::kFamily:
    case ConeKind::kPredicate:
      return node_->pred.generators;
    case ConeKind::kIntersection:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Subset> Cone::finite_members(const SaturationBudget& budget) const {
  const Group& g = group();
  if (!g.is_finite()) return std::nullopt;
  if (node_->mask) return node_->mask;
  const auto& view = g.finite_view();
  Subset out(view.size(), false);
  for (std::size_t i = 0; i < view.size(); ++i) {
    const Verdict v = contains(view.element(i), budget);
    if (v.is_unknown()) return std::nullopt;
    out[i] = v.is_yes();
  }
  return out;
}

bool Cone::same_as(const Cone& other) const { return node_ == other.node_; }

}  // namespace splitord
