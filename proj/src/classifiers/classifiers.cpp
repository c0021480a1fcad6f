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

#include "splitord/classifiers/classifiers.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitord {

namespace {

SaturationBudget capped(const SaturationBudget& budget) {
  SaturationBudget b = budget;
  b.window.max_elements = std::min(b.window.max_elements, kPointWindow);
  return b;
}

Element cayley(std::size_t i) { return Element(std::vector<Rational>{Rational(static_cast<long long>(i))}); }

std::size_t cayley_index(const Element& e) { return static_cast<std::size_t>(numerator(e[0]).convert_to<long long>()); }

/// Elements on which additive maps of X are compared: all of X when finite,
/// otherwise the generators (enough for additive maps).
std::vector<Element> probe_points(const Group& x) { return x.is_finite() ? x.elements() : x.generators(); }

bool is_orthant(const PreorderedGroup& x) { return x.cone.kind() == ConeKind::kNaturalOrthant; }

MonotoneAutGroup finite_aut(const PreorderedGroup& x) {
  const Group& g = x.group;
  const auto mask = x.cone.finite_members();
  if (!mask) throw UnsupportedError("cone membership on " + g.describe() + " is undecided");
  const FiniteView& view = g.finite_view();
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& h : enumerate_automorphisms(g)) {
    std::vector<std::size_t> p(view.size());
    bool monotone = true;
    std::size_t image_size = 0;
    for (std::size_t i = 0; i < view.size(); ++i) {
      p[i] = view.index(h(view.element(i)));
      if ((*mask)[i]) {
        ++image_size;
        monotone = monotone && (*mask)[p[i]];
      }
    }
    if (!monotone) continue;
    // A monotone bijection of a finite set maps P onto P, so the inverse is monotone too.
    if (image_size != static_cast<std::size_t>(std::count(mask->begin(), mask->end(), true))) {
      throw std::logic_error("monotone automorphism does not preserve the cone setwise");
    }
    perms.push_back(std::move(p));
  }
  const std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> c(view.size());
      for (std::size_t k = 0; k < view.size(); ++k) c[k] = perms[i][perms[j][k]];
      table[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  Group a = Group::cayley(std::move(table), 0, "Aut" + x.describe());
  const FiniteView& av = a.finite_view();
  std::vector<std::vector<std::size_t>> by_view(n);
  for (std::size_t i = 0; i < n; ++i) by_view[av.index(cayley(i))] = perms[i];
  Action act = Action::finite_table(a, g, std::move(by_view));
  return MonotoneAutGroup{AutKind::kFiniteComputed, x, std::move(a), std::move(act)};
}

MonotoneAutGroup orthant_perms(const PreorderedGroup& x) {
  const std::size_t k = x.group.rank();
  Group s = Group::symmetric(k);
  const auto perms = Group::permutations(k);
  const FiniteView& view = s.finite_view();
  std::vector<Matrix> mats(view.size());
  for (std::size_t v = 0; v < view.size(); ++v) {
    const auto& p = perms[cayley_index(view.element(v))];
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(p[i], i) = Rational(1);
    mats[v] = std::move(m);
  }
  Action act = Action::matrix_table(s, x.group, std::move(mats));
  return MonotoneAutGroup{AutKind::kSymbolicOrthantPerms, x, std::move(s), std::move(act)};
}

/// The defining condition of P̃, P⁺ or P⁻ for a single automorphism. Exact
/// on finite X; on Z^k and Q with the orthant it is checked on generators,
/// which suffices because α - id is additive.
Verdict order_condition(const MonotoneAutGroup& a, AutConeKind which, const Element& alpha,
                        const SaturationBudget& budget) {
  const PreorderedGroup& x = a.base;
  const Group& g = x.group;
  ForAll all;
  for (const Element& p : probe_points(g)) {
    const Element img = a.action.apply(alpha, p);
    switch (which) {
      case AutConeKind::kTilde: {
        Verdict v = sim(x, img, p, budget);
        if (v.is_no()) return v.with("x", g, p).because("alpha(x) is not equivalent to x");
        all.add(v);
        break;
      }
      case AutConeKind::kPlus:
      case AutConeKind::kMinus: {
        const bool plus = which == AutConeKind::kPlus;
        // On infinite X the probes are generators of the orthant.
        const Element q = g.is_finite() ? p : (plus ? p : g.neg(p));
        if (g.is_finite()) {
          const Verdict side = plus ? x.cone.contains(q, budget) : x.cone.contains(g.neg(q), budget);
          if (!side.is_yes()) break;
        }
        const Element qi = g.is_finite() ? img : a.action.apply(alpha, q);
        Verdict v = leq(x, q, qi, budget);
        if (v.is_no()) return v.with("x", g, q).because("alpha(x) >= x fails");
        all.add(v);
        break;
      }
      default:
        throw std::invalid_argument("order_condition needs tilde, plus or minus");
    }
  }
  return all.result();
}

Verdict units_pointwise(const MonotoneAutGroup& a, const Element& alpha, const SaturationBudget& budget) {
  return order_condition(a, AutConeKind::kTilde, alpha, budget);
}

}  // namespace

const char* to_string(AutKind k) {
  switch (k) {
    case AutKind::kFiniteComputed:
      return "finite";
    case AutKind::kSymbolicIntN:
      return "Aut(Z,N)";
    case AutKind::kSymbolicRatScalings:
      return "rational scalings";
    case AutKind::kSymbolicOrthantPerms:
      return "coordinate permutations";
  }
  return "?";
}

const char* to_string(AutConeKind k) {
  switch (k) {
    case AutConeKind::kTilde:
      return "tilde";
    case AutConeKind::kPlus:
      return "plus";
    case AutConeKind::kMinus:
      return "minus";
    case AutConeKind::kExtensional:
      return "extensional";
    case AutConeKind::kTrivial:
      return "trivial";
    case AutConeKind::kFull:
      return "full";
  }
  return "?";
}

Homomorphism MonotoneAutGroup::automorphism(const Element& alpha) const {
  group.check(alpha);
  const Action act = action;
  return Homomorphism::function(
      base.group, base.group, "alpha=" + group.to_string(alpha),
      [act, alpha](const Element& x) { return act.apply(alpha, x); }, true);
}

std::optional<Element> MonotoneAutGroup::locate(const std::function<Element(const Element&)>& fn) const {
  const Group& x = base.group;
  if (kind == AutKind::kSymbolicRatScalings) {
    const Element one{1};
    const Rational q = fn(one)[0];
    if (q <= 0) return std::nullopt;
    const Element half(std::vector<Rational>{Rational(-1, 2)});
    if (fn(half) != x.multiple(half, q)) return std::nullopt;
    return Element(std::vector<Rational>{q});
  }
  const auto points = probe_points(x);
  for (const auto& alpha : group.elements()) {
    bool same = true;
    for (const auto& p : points) {
      if (action.apply(alpha, p) != fn(p)) {
        same = false;
        break;
      }
    }
    if (same) return alpha;
  }
  return std::nullopt;
}

std::size_t MonotoneAutGroup::count_matching(const std::function<Element(const Element&)>& fn) const {
  // A positive scaling is determined by the image of 1.
  if (kind == AutKind::kSymbolicRatScalings) return locate(fn) ? 1 : 0;
  const auto points = probe_points(base.group);
  std::size_t n = 0;
  for (const auto& alpha : group.elements()) {
    bool same = true;
    for (const auto& p : points) same = same && action.apply(alpha, p) == fn(p);
    n += same ? 1 : 0;
  }
  return n;
}

std::string MonotoneAutGroup::describe() const {
  std::string out = "Aut" + base.describe() + " [" + to_string(kind) + "]";
  if (group.is_finite()) out += " of order " + std::to_string(group.order());
  return out;
}

MonotoneAutGroup monotone_aut(const PreorderedGroup& x) {
  const Group& g = x.group;
  if (g.is_finite()) return finite_aut(x);
  if (is_orthant(x) && g.kind() == GroupKind::kFreeAbelian) {
    if (g.rank() == 1) {
      const Group one = Group::cyclic(1);
      return MonotoneAutGroup{AutKind::kSymbolicIntN, x, one, Action::trivial(one, g)};
    }
    return orthant_perms(x);
  }
  if (is_orthant(x) && g.kind() == GroupKind::kRationalVector && g.rank() == 1) {
    return MonotoneAutGroup{AutKind::kSymbolicRatScalings, x, Group::positive_rationals(), Action::dilation(g)};
  }
  throw UnsupportedError("no monotone automorphism group available for " + x.describe());
}

std::string AutOrder::describe() const {
  return aut.describe() + " with the " + std::string(to_string(which)) + " order";
}

AutOrder aut_order(const MonotoneAutGroup& a, AutConeKind which, Cone cone) {
  if (!cone.group().same_as(a.group)) throw StructuralError("cone does not live on " + a.group.describe());
  return AutOrder{a, which, std::move(cone)};
}

AutOrder aut_cone(const MonotoneAutGroup& a, AutConeKind which, const SaturationBudget& budget) {
  const Group& g = a.group;
  switch (which) {
    case AutConeKind::kTrivial:
      return aut_order(a, which, Cone::trivial(g));
    case AutConeKind::kFull:
      return aut_order(a, which, Cone::full(g));
    case AutConeKind::kExtensional:
      throw std::invalid_argument("extensional orders are given through aut_order");
    default:
      break;
  }
  if (a.kind == AutKind::kSymbolicRatScalings) {
    // α = q·id: q ~ 1 forces q = 1, q x >= x on x >= 0 means q >= 1, on x <= 0 q <= 1.
    switch (which) {
      case AutConeKind::kTilde:
        return aut_order(a, which, Cone::trivial(g).named("P~"));
      case AutConeKind::kPlus:
        return aut_order(a, which, Cone::natural_orthant(g).named("P+"));
      default: {
        PredicateSpec spec;
        spec.name = "P-";
        spec.contains = [](const Element& q, const SaturationBudget&) { return Verdict::from_bool(q[0] <= 1); };
        spec.closed = true;
        return aut_order(a, which, Cone::predicate(g, std::move(spec)));
      }
    }
  }
  std::vector<Element> members;
  for (const auto& alpha : g.elements()) {
    const Verdict v = order_condition(a, which, alpha, budget);
    if (v.is_unknown()) throw UnsupportedError("order condition undecided for " + g.to_string(alpha));
    if (v.is_yes()) members.push_back(alpha);
  }
  const std::string name = which == AutConeKind::kTilde ? "P~" : which == AutConeKind::kPlus ? "P+" : "P-";
  return aut_order(a, which, Cone::extensional(g, std::move(members)).named(name));
}

Verdict admissible_check(const AutOrder& o, const SaturationBudget& budget) {
  const MonotoneAutGroup& a = o.aut;
  const Group& g = a.group;
  auto unit_fails = [&](const Element& found) -> std::optional<Verdict> {
    // α and its inverse fail together; report the larger one for stable output.
    const Element alpha = std::max(found, g.neg(found));
    Verdict v = units_pointwise(a, alpha, budget);
    if (v.is_no()) {
      Verdict out = Verdict::no("a unit of the order is not pointwise equivalent to id").with("alpha", g, alpha);
      for (const auto& w : v.witnesses) out.witnesses.push_back(w);
      return out;
    }
    return std::nullopt;
  };
  if (g.is_finite()) {
    const auto mask = o.cone.finite_members(budget);
    if (!mask) return Verdict::unknown("order membership undecided");
    const FiniteView& view = g.finite_view();
    for (std::size_t i = 0; i < view.size(); ++i) {
      if (!(*mask)[i] || !(*mask)[view.neg(i)]) continue;
      if (auto f = unit_fails(view.element(i))) return *f;
    }
    return Verdict::yes(Scope::kExact, "units are pointwise equivalent to id");
  }
  switch (o.which) {
    case AutConeKind::kTilde:
    case AutConeKind::kPlus:
    case AutConeKind::kMinus:
    case AutConeKind::kTrivial:
      if (a.kind == AutKind::kSymbolicRatScalings) return Verdict::yes(Scope::kExact, "the only unit is 1");
      break;
    default:
      break;
  }
  ForAll all(Scope::kWindow);
  std::vector<Element> probes = o.cone.kind() == ConeKind::kExtensional ? o.cone.members() : g.window(capped(budget).window);
  for (const auto& alpha : probes) {
    const Verdict in = o.cone.contains(alpha, budget) && o.cone.contains(g.neg(alpha), budget);
    if (in.is_unknown()) {
      all.add(Verdict::unknown("unit membership undecided"));
      continue;
    }
    if (!in.is_yes()) continue;
    if (auto f = unit_fails(alpha)) return *f;
  }
  Verdict v = all.result();
  if (v.is_yes()) v.because("units on the window are pointwise equivalent to id");
  return v;
}

Classifier build_classifier(const PreorderedGroup& x, const AutOrder& o, const SaturationBudget& budget) {
  if (!x.group.same_as(o.aut.base.group)) throw StructuralError("order is on the automorphisms of another group");
  const Verdict adm = admissible_check(o, budget);
  if (!adm.is_yes()) throw PreconditionError("order is not admissible: " + adm.note);
  Extension e = Extension::make(x, o.preordered(), o.aut.action);
  Cone cone = o.which == AutConeKind::kTilde ? product_cone(e) : lex_cone(e);
  return Classifier{o, Point(std::move(e), std::move(cone))};
}

namespace {

Homomorphism make_phi_bar(const Extension& e, const MonotoneAutGroup& aut) {
  const Action act = e.action;
  for (const auto& b : e.b.group.generators()) {
    if (!aut.locate([&](const Element& x) { return act.apply(b, x); })) {
      throw PreconditionError("phi_b is not a monotone automorphism of " + aut.base.describe() + " at b=" +
                              e.b.group.to_string(b));
    }
  }
  const Group bg = e.b.group;
  return Homomorphism::function(
      bg, aut.group, "phi-bar",
      [act, aut, bg](const Element& b) {
        auto r = aut.locate([&](const Element& x) { return act.apply(b, x); });
        if (!r) throw PreconditionError("phi_b is not a monotone automorphism at b=" + bg.to_string(b));
        return *r;
      },
      true);
}

}  // namespace

ClassifyResult classify_into(const Point& pt, const Classifier& cls, const SaturationBudget& budget) {
  const SaturationBudget bud = capped(budget);
  const MonotoneAutGroup& aut = cls.order.aut;
  if (!pt.ext.x.group.same_as(aut.base.group)) throw StructuralError("point and classifier have different kernels");
  const Homomorphism phi_bar = make_phi_bar(pt.ext, aut);
  const Group src = pt.ext.carrier;
  const Group dst = cls.point.ext.carrier;
  const Homomorphism b = Homomorphism::function(
      src, dst, "1 x phi-bar",
      [src, dst, phi_bar](const Element& t) { return dst.pair(src.kernel_part(t), phi_bar(src.base_part(t))); },
      true);
  PointMorphism m{Homomorphism::identity(pt.ext.x.group), b, phi_bar};
  Verdict pm = is_monotone(phi_bar, pt.ext.b, cls.order.preordered(), bud);
  if (pm.is_no()) pm.because("phi-bar is not monotone");
  Verdict tm = is_monotone(b, pt.total(), cls.point.total(), bud);
  if (tm.is_no()) tm.because("1 x phi-bar is not monotone");
  Verdict ism = check_point_morphism(m, pt, cls.point, bud);

  // A morphism fixing X sends (0,y) to (0,c(y)) and must intertwine the
  // conjugation actions, so c(y) acts on X as phi_y does.
  ForAll uniq;
  const Action act = pt.ext.action;
  for (const auto& y : pt.ext.b.group.generators()) {
    const std::size_t n = aut.count_matching([&](const Element& x) { return act.apply(y, x); });
    if (n != 1) {
      uniq.add(Verdict::no("phi_y is realised by " + std::to_string(n) + " automorphisms").with("y", pt.ext.b.group, y));
      break;
    }
  }
  Verdict u = uniq.result();
  if (u.is_yes()) u.because("c is fixed on generators of B by the action equation");
  return ClassifyResult{m, phi_bar, pm, tm, ism, u};
}

SClassMembership sclass_membership(const Point& pt, const AutOrder& o, const SaturationBudget& budget) {
  const SaturationBudget bud = capped(budget);
  const MonotoneAutGroup& aut = o.aut;
  if (!pt.ext.x.group.same_as(aut.base.group)) throw StructuralError("point and order have different kernels");
  const Homomorphism phi_bar = make_phi_bar(pt.ext, aut);
  const PreorderedGroup& pb = pt.ext.b;
  SClassMembership out;
  out.positive_images = is_monotone(phi_bar, pb, o.preordered(), bud);
  if (out.positive_images.is_no()) out.positive_images.because("phi_b is not in the order for some b >= 0");

  const Group& c = pt.ext.carrier;
  const Group& ag = aut.group;
  ForAll all(c.is_finite() ? Scope::kExact : Scope::kWindow);
  const auto probes = c.is_finite() ? c.elements() : c.window(bud.window);
  for (const auto& t : probes) {
    const Element b = c.base_part(t);
    if (!pb.cone.contains(b, bud).is_yes() || !pt.cone.contains(t, bud).is_yes()) continue;
    const Element alpha = phi_bar(b);
    const Verdict unit = o.cone.contains(alpha, bud) && o.cone.contains(ag.neg(alpha), bud);
    if (!unit.is_yes()) continue;
    const Verdict v = pt.ext.x.cone.contains(c.kernel_part(t), bud);
    if (v.is_no()) {
      all.add(Verdict::no("(x,b) >= 0 with phi_b ~ id but x is not positive").with("(x,b)", c, t));
      break;
    }
    all.add(v);
  }
  out.kernel_reflection = all.result();
  out.verdict = out.positive_images && out.kernel_reflection;
  return out;
}

std::optional<NoClassifierWitness> no_classifier_witness(const PreorderedGroup& x, const SaturationBudget& budget) {
  const SaturationBudget bud = capped(budget);
  const Group& g = x.group;
  for (const auto& e : test_elements(g, bud)) {
    if (!(x.cone.contains(e, bud) || x.cone.contains(g.neg(e), bud)).is_yes()) {
      throw PreconditionError("order is not total: " + g.to_string(e) + " is neither positive nor negative");
    }
  }
  const MonotoneAutGroup a = monotone_aut(x);
  const AutOrder plus = aut_cone(a, AutConeKind::kPlus, bud);
  const auto alphas = a.group.is_finite() ? a.group.elements() : a.group.window(bud.window);
  for (const auto& alpha : alphas) {
    if (!plus.cone.contains(alpha, bud).is_yes()) continue;
    for (const auto& p : probe_points(g)) {
      if (sim(x, a.action.apply(alpha, p), p, bud).is_no()) {
        return NoClassifierWitness{alpha, p,
                                   "alpha=" + a.group.to_string(alpha) + " lies in P+ but alpha(" + g.to_string(p) +
                                       ")=" + g.to_string(a.action.apply(alpha, p)) + " is not equivalent to it"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace splitord
