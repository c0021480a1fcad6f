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

#include "splitord/points/points.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitord {

namespace {

SaturationBudget capped(const SaturationBudget& budget) {
  SaturationBudget b = budget;
  b.window.max_elements = std::min(b.window.max_elements, kPointWindow);
  return b;
}

std::vector<Element> probe(const Group& g, const SaturationBudget& budget) {
  return g.is_finite() ? g.elements() : g.window(capped(budget).window);
}

/// Generators decide equalities of additive maps unless the source is the
/// (not finitely generated) group of positive rationals.
bool generators_decide(const Group& g) {
  for (const auto& c : g.coordinates()) {
    if (c.kind == CoordKind::kPositiveRational) return false;
  }
  return true;
}

Verdict agree(const Group& src, const Group& dst, const std::function<Element(const Element&)>& lhs,
              const std::function<Element(const Element&)>& rhs, const std::string& what,
              const SaturationBudget& budget) {
  auto points = src.generators();
  for (auto& e : probe(src, budget)) points.push_back(std::move(e));
  for (const auto& e : points) {
    if (lhs(e) != rhs(e)) {
      return Verdict::no(what + " fails").with("at", src, e).with("lhs", dst, lhs(e)).with("rhs", dst, rhs(e));
    }
  }
  const bool exact = src.is_finite() || generators_decide(src);
  return Verdict::yes(exact ? Scope::kExact : Scope::kWindow, what + " holds");
}

std::string render(const Verdict& v) {
  std::string out = v.note;
  for (const auto& w : v.witnesses) out += " " + w.label + "=" + w.group.to_string(w.value);
  return out;
}

}  // namespace

Verdict hom_leq(const Homomorphism& g, const Homomorphism& h, const PreorderedGroup& src,
                const PreorderedGroup& dst, const SaturationBudget& budget) {
  if (!g.source().same_as(src.group) || !h.source().same_as(src.group) || !g.target().same_as(dst.group) ||
      !h.target().same_as(dst.group)) {
    throw StructuralError("hom_leq needs a parallel pair " + src.group.describe() + " -> " + dst.group.describe());
  }
  const Group& t = dst.group;
  auto diff = [&](const Element& x) { return t.add(t.neg(g(x)), h(x)); };
  auto fail = [&](const Element& x) {
    return Verdict::no("g(x) <= h(x) fails for a positive x").with("x", src.group, x);
  };
  if (src.group.is_finite()) {
    if (auto mask = src.cone.finite_members(budget)) {
      const auto& view = src.group.finite_view();
      ForAll all;
      for (std::size_t i = 0; i < view.size(); ++i) {
        if (!(*mask)[i]) continue;
        const Verdict v = dst.cone.contains(diff(view.element(i)), budget);
        if (v.is_no()) return fail(view.element(i));
        all.add(v);
      }
      return all.result();
    }
  }
  // -g + h is additive into an abelian group and kills conjugation, so the
  // generators of the source cone decide.
  const auto gens = src.cone.generators();
  if (gens && t.is_abelian() && dst.cone.known_cone()) {
    ForAll all;
    for (const auto& r : gens->rays) {
      const Element d = diff(r.element);
      const Verdict v = r.rational ? dst.cone.contains_ray(d, budget) : dst.cone.contains(d, budget);
      if (v.is_no()) return fail(r.element);
      all.add(v);
    }
    Verdict v = all.result();
    if (!v.is_unknown()) return v.because("checked on generators of the source cone");
  }
  ForAll all(Scope::kWindow);
  for (const auto& x : probe(src.group, budget)) {
    if (!src.cone.contains(x, budget).is_yes()) continue;
    all.count_element();
    const Verdict v = dst.cone.contains(diff(x), budget);
    if (v.is_no()) return fail(x);
    if (v.is_unknown()) {
      all.add(Verdict::unknown("g(x) <= h(x) undecided"));
    } else {
      all.add(Verdict::yes(Scope::kWindow));
    }
  }
  return all.result();
}

RaliResult is_rali(const Point& pt, const SaturationBudget& budget) {
  const SaturationBudget b = capped(budget);
  const Extension& e = pt.ext;
  RaliResult out;
  out.cone_route = cone_equal(pt.cone, product_cone(e), b);
  if (out.cone_route.is_yes()) out.cone_route.because("P = P_prod");

  const Homomorphism f = e.projection();
  const Homomorphism s = e.section();
  const Verdict fs = agree(
      e.b.group, e.b.group, [&](const Element& y) { return f(s(y)); }, [](const Element& y) { return y; },
      "f∘s = id", b);
  const Homomorphism sf = Homomorphism::compose(s, f);
  const PreorderedGroup total = pt.total();
  Verdict leq = hom_leq(sf, Homomorphism::identity(e.carrier), total, total, b);
  if (leq.is_no()) leq.because("s∘f <= id fails at a positive element");
  out.adjoint_route = fs && leq;

  const Verdict& c = out.cone_route;
  const Verdict& a = out.adjoint_route;
  if ((c.is_yes() && a.is_no()) || (c.is_no() && a.is_yes())) {
    throw std::logic_error("rali routes disagree on " + pt.describe());
  }
  out.verdict = c.is_unknown() ? a : c;
  return out;
}

Verdict is_strong(const Point& pt, const SaturationBudget& budget) {
  const SaturationBudget b = capped(budget);
  const CompatibleExistence ce = compatible_exists(pt.ext, b);
  if (ce.verdict.is_no()) return Verdict::no("no compatible cone exists: " + ce.verdict.note);
  const Cone minimal = minimal_cone(pt.ext, b);
  Verdict lower = cone_subset(minimal, pt.cone, b);
  if (lower.is_no()) lower.because("<P_prod> is not contained in P");
  Verdict upper = cone_subset(pt.cone, minimal, b);
  if (upper.is_no()) upper.because("an element of P is not in <P_prod>");
  Verdict v = upper && lower;
  if (v.is_yes()) v.because("P = <P_prod>");
  return v;
}

Point pullback(const Point& pt, const PreorderedGroup& c, const Homomorphism& g, const SaturationBudget& budget) {
  const Extension& e = pt.ext;
  if (!g.source().same_as(c.group) || !g.target().same_as(e.b.group)) {
    throw StructuralError("pullback map must go from " + c.group.describe() + " to " + e.b.group.describe());
  }
  const Verdict mono = is_monotone(g, c, e.b, capped(budget));
  if (mono.is_no()) throw PreconditionError("pullback along a map that is not monotone: " + render(mono));
  Extension down = Extension::make(e.x, c, Action::precomposed(e.action, g));
  const Group up = e.carrier;
  const Group carrier = down.carrier;
  const Cone p = pt.cone;
  const Cone pc = c.cone;
  PredicateSpec spec;
  spec.name = "pullback of " + p.describe() + " along " + g.name();
  auto spec_contains = [=](const Element& t, const SaturationBudget& bud) {
    const Element a = carrier.base_part(t);
    const Verdict in_c = pc.contains(a, bud);
    if (in_c.is_no()) return in_c;
    return in_c && p.contains(up.pair(carrier.kernel_part(t), g(a)), bud);
  };
  spec.contains = spec_contains;
  spec.contains_ray = [=](const Element& d, const SaturationBudget& bud) {
    const Element a = carrier.base_part(d);
    if (carrier.base().is_zero(a)) return p.contains_ray(up.pair(carrier.kernel_part(d), g(a)), bud);
    return spec_contains(d, bud);
  };
  spec.closed = p.known_cone() && pc.known_cone();
  return Point(std::move(down), Cone::predicate(carrier, std::move(spec)));
}

std::vector<CatalogMorphism> default_catalog(const PreorderedGroup& base) {
  std::vector<CatalogMorphism> out;
  const Group& b = base.group;
  if (b.kind() == GroupKind::kFreeAbelian && b.rank() == 1) {
    std::optional<Cone> negated;
    switch (base.cone.kind()) {
      case ConeKind::kNaturalOrthant:
        negated = Cone::generated(b, std::vector<Element>{{-1}}).named("-N");
        break;
      case ConeKind::kTrivial:
      case ConeKind::kFull:
        negated = base.cone;
        break;
      default:
        break;
    }
    for (long k = -4; k <= 4; ++k) {
      if (k < 0 && !negated) continue;
      PreorderedGroup src(b, k < 0 ? *negated : base.cone);
      out.push_back({"n->" + std::to_string(k) + "n", src, Homomorphism::scalar(b, k)});
    }
    const Group z2 = Group::cyclic(2);
    out.push_back({"zero Z_2->Z", PreorderedGroup(z2, Cone::full(z2)), Homomorphism::zero(z2, b)});
    return out;
  }
  out.push_back({"id", base, Homomorphism::identity(b)});
  const Group z = Group::free_abelian(1);
  out.push_back({"zero Z->B", PreorderedGroup(z, Cone::natural_orthant(z)), Homomorphism::zero(z, b)});
  return out;
}

StablyStrongReport stably_strong_over(const Point& pt, const std::vector<CatalogMorphism>& catalog,
                                      const SaturationBudget& budget) {
  StablyStrongReport report;
  ForAll all;
  for (const auto& m : catalog) {
    Verdict v;
    try {
      v = is_strong(pullback(pt, m.source, m.map, budget), budget);
    } catch (const PreconditionError& err) {
      v = Verdict::unknown(std::string("skipped: ") + err.what());
    }
    if (v.is_no()) v.because("pullback along " + m.name + " is not strong: " + v.note);
    report.per_morphism.emplace_back(m.name, v);
    all.add(v);
  }
  report.verdict = all.result();
  report.scope_note = "strong after pullback along each of the " + std::to_string(catalog.size()) +
                      " catalog morphisms; not a proof of stable strength";
  if (report.verdict.is_yes()) report.verdict.because(report.scope_note);
  return report;
}

PointClassification classify_point(const Point& pt, const std::vector<CatalogMorphism>& catalog,
                                   const SaturationBudget& budget) {
  PointClassification out{is_rali(pt, budget).verdict, is_strong(pt, budget), stably_strong_over(pt, catalog, budget)};
  if (out.rali.is_yes() && out.strong.is_no()) throw std::logic_error("a rali point must be strong");
  return out;
}

Point point_product(const Point& p1, const Point& p2) {
  const Extension& e1 = p1.ext;
  const Extension& e2 = p2.ext;
  const Group x = Group::product({e1.x.group, e2.x.group});
  const Group b = Group::product({e1.b.group, e2.b.group});
  PreorderedGroup px(x, Cone::product(x, {e1.x.cone, e2.x.cone}));
  PreorderedGroup pb(b, Cone::product(b, {e1.b.cone, e2.b.cone}));
  Extension e = Extension::make(std::move(px), std::move(pb), Action::product({e1.action, e2.action}));
  const Group carrier = e.carrier;
  const Group c1 = e1.carrier;
  const Group c2 = e2.carrier;
  auto split = [=](const Element& t) {
    const Element xs = carrier.kernel_part(t);
    const Element bs = carrier.base_part(t);
    return std::make_pair(c1.pair(x.factor_part(xs, 0), b.factor_part(bs, 0)),
                          c2.pair(x.factor_part(xs, 1), b.factor_part(bs, 1)));
  };
  auto join = [=](const Element& t1, const Element& t2) {
    return carrier.pair(Element::concat(c1.kernel_part(t1), c2.kernel_part(t2)),
                        Element::concat(c1.base_part(t1), c2.base_part(t2)));
  };
  const Cone q1 = p1.cone;
  const Cone q2 = p2.cone;
  PredicateSpec spec;
  spec.name = "(" + q1.describe() + ") x (" + q2.describe() + ")";
  spec.contains = [=](const Element& t, const SaturationBudget& bud) {
    const auto [t1, t2] = split(t);
    const Verdict a = q1.contains(t1, bud);
    if (a.is_no()) return a;
    return a && q2.contains(t2, bud);
  };
  spec.contains_ray = [=](const Element& d, const SaturationBudget& bud) {
    const auto [d1, d2] = split(d);
    auto ray = [&](const Cone& q, const Group& g, const Element& v) {
      return g.is_zero(v) ? Verdict::yes() : q.contains_ray(v, bud);
    };
    const Verdict a = ray(q1, c1, d1);
    if (a.is_no()) return a;
    return a && ray(q2, c2, d2);
  };
  spec.closed = q1.known_cone() && q2.known_cone();
  const auto g1 = q1.generators();
  const auto g2 = q2.generators();
  if (g1 && g2) {
    ConeGenerators gens;
    gens.conic = g1->conic || g2->conic;
    for (const auto& r : g1->rays) gens.rays.push_back(Ray{join(r.element, c2.zero()), r.rational});
    for (const auto& r : g2->rays) gens.rays.push_back(Ray{join(c1.zero(), r.element), r.rational});
    spec.generators = std::move(gens);
  }
  return Point(std::move(e), Cone::predicate(carrier, std::move(spec)));
}

PointMorphism identity_morphism(const Point& pt) {
  return PointMorphism{Homomorphism::identity(pt.ext.x.group), Homomorphism::identity(pt.ext.carrier),
                       Homomorphism::identity(pt.ext.b.group)};
}

Verdict check_point_morphism(const PointMorphism& m, const Point& src, const Point& dst,
                             const SaturationBudget& budget) {
  const Extension& s = src.ext;
  const Extension& d = dst.ext;
  if (!m.a.source().same_as(s.x.group) || !m.a.target().same_as(d.x.group) ||
      !m.b.source().same_as(s.carrier) || !m.b.target().same_as(d.carrier) ||
      !m.c.source().same_as(s.b.group) || !m.c.target().same_as(d.b.group)) {
    throw StructuralError("point morphism components do not match the points");
  }
  const SaturationBudget b = capped(budget);
  const Homomorphism k = s.kernel_inclusion(), k2 = d.kernel_inclusion();
  const Homomorphism f = s.projection(), f2 = d.projection();
  const Homomorphism sec = s.section(), sec2 = d.section();
  Verdict sq1 = agree(
      s.x.group, d.carrier, [&](const Element& x) { return k2(m.a(x)); }, [&](const Element& x) { return m.b(k(x)); },
      "k'a = bk", b);
  Verdict sq2 = agree(
      s.carrier, d.b.group, [&](const Element& t) { return f2(m.b(t)); }, [&](const Element& t) { return m.c(f(t)); },
      "f'b = cf", b);
  Verdict sq3 = agree(
      s.b.group, d.carrier, [&](const Element& y) { return sec2(m.c(y)); },
      [&](const Element& y) { return m.b(sec(y)); }, "s'c = bs", b);
  Verdict squares = sq1 && sq2 && sq3;
  if (squares.is_no()) return squares.because("commutation failure: " + squares.note);
  Verdict ma = is_monotone(m.a, s.x, d.x, b);
  if (ma.is_no()) ma.because("a is not monotone");
  Verdict mb = is_monotone(m.b, src.total(), dst.total(), b);
  if (mb.is_no()) mb.because("b is not monotone");
  Verdict mc = is_monotone(m.c, s.b, d.b, b);
  if (mc.is_no()) mc.because("c is not monotone");
  Verdict v = squares && ma && mb && mc;
  if (v.is_yes()) v.because("a morphism of points");
  return v;
}

Verdict is_order_isomorphism(const Homomorphism& h, const PreorderedGroup& src, const PreorderedGroup& dst,
                             const SaturationBudget& budget) {
  const auto inv = h.inverse();
  if (!inv) return Verdict::unknown("no inverse available for " + h.name());
  const SaturationBudget b = capped(budget);
  Verdict left = agree(
      src.group, src.group, [&](const Element& x) { return (*inv)(h(x)); }, [](const Element& x) { return x; },
      "h^-1 h = id", b);
  Verdict right = agree(
      dst.group, dst.group, [&](const Element& y) { return h((*inv)(y)); }, [](const Element& y) { return y; },
      "h h^-1 = id", b);
  Verdict mono = is_monotone(h, src, dst, b);
  if (mono.is_no()) mono.because(h.name() + " is not monotone");
  Verdict back = is_monotone(*inv, dst, src, b);
  if (back.is_no()) back.because("the inverse of " + h.name() + " is not monotone");
  return left && right && mono && back;
}

SsflResult ssfl_check(const PointMorphism& m, const Point& src, const Point& dst, const SaturationBudget& budget) {
  const SaturationBudget b = capped(budget);
  SsflResult out;
  out.morphism = check_point_morphism(m, src, dst, b);
  out.hypotheses = is_order_isomorphism(m.a, src.ext.x, dst.ext.x, b) &&
                   is_order_isomorphism(m.c, src.ext.b, dst.ext.b, b) && is_strong(src, b) && is_strong(dst, b);
  const auto ainv = m.a.inverse();
  const auto cinv = m.c.inverse();
  if (!ainv || !cinv) {
    out.b_iso = Verdict::unknown("a or c has no computable inverse");
    out.b_inverse_monotone = out.b_iso;
    out.verdict = out.morphism && out.b_iso;
    return out;
  }
  const Extension& s = src.ext;
  const Extension& d = dst.ext;
  const Homomorphism k = s.kernel_inclusion();
  const Homomorphism sec = s.section();
  const Homomorphism a_inv = *ainv;
  const Homomorphism c_inv = *cinv;
  const Group dc = d.carrier;
  const Group sc = s.carrier;
  // b(k x + s y) = k' a x + s' c y forces this inverse.
  const Homomorphism b_inv = Homomorphism::function(
      d.carrier, s.carrier, "b^-1", [=](const Element& t) {
        return sc.add(k(a_inv(dc.kernel_part(t))), sec(c_inv(dc.base_part(t))));
      });
  ForAll iso(sc.is_finite() && dc.is_finite() ? Scope::kExact : Scope::kWindow);
  for (const auto& t : probe(sc, b)) {
    if (b_inv(m.b(t)) != t) {
      iso.add(Verdict::no("b is not injective").with("t", sc, t));
      break;
    }
  }
  for (const auto& t : probe(dc, b)) {
    if (m.b(b_inv(t)) != t) {
      iso.add(Verdict::no("b is not surjective").with("t", dc, t));
      break;
    }
  }
  out.b_iso = iso.result();
  if (out.b_iso.is_yes()) out.b_iso.because("b is bijective with inverse k a^-1 + s c^-1");
  out.b_inverse_monotone = is_monotone(b_inv, dst.total(), src.total(), b);
  if (out.b_inverse_monotone.is_no()) out.b_inverse_monotone.because("b^-1 is not monotone");
  out.verdict = out.morphism && out.b_iso && out.b_inverse_monotone;
  if (out.verdict.is_yes()) out.verdict.because("b is an isomorphism of preordered groups");
  return out;
}

}  // namespace splitord
