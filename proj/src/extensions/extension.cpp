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

#include "splitord/extensions/extension.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace splitord {

namespace {

std::string render_witnesses(const Verdict& v) {
  std::string out;
  for (const auto& w : v.witnesses) {
    out += (out.empty() ? "" : ", ") + w.label + "=" + w.group.to_string(w.value);
  }
  return out;
}

bool has_divisible_coords(const Group& g) {
  for (const auto& c : g.coordinates()) {
    if (c.kind == CoordKind::kRational || c.kind == CoordKind::kPositiveRational) return true;
  }
  return false;
}

bool touches_rational(const Group& g, const Element& a) {
  const auto& coords = g.coordinates();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].kind == CoordKind::kRational && a[i] != 0) return true;
  }
  return false;
}

/// The units of P are a Q-subspace, so checks on a Q-basis extend to all of X.
bool units_divisible(const PreorderedGroup& p) {
  if (!has_divisible_coords(p.group)) return true;
  auto gens = p.cone.generators();
  if (!gens) return false;
  for (const auto& r : gens->rays) {
    if (!r.rational && touches_rational(p.group, r.element)) return false;
  }
  return true;
}

// Left inverse of an injective linear map: solve K^T K y = K^T a, then check.
std::optional<Element> linear_preimage(const Matrix& k, const Group& x, const Element& a) {
  const std::size_t m = k.rows();
  const std::size_t n = k.cols();
  Matrix kt(n, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) kt(j, i) = k(i, j);
  }
  const auto y = (kt * k).solve(kt.apply(a.vector()));
  if (!y) return std::nullopt;
  if (k.apply(*y) != a.vector()) return std::nullopt;
  Element out(*y);
  if (!x.accepts(out)) return std::nullopt;
  return out;
}

}  // namespace

Group semidirect(const Group& x, const Group& b, const Action& action, const Window& window) {
  if (!action.acting().same_as(b) || !action.acted().same_as(x)) {
    throw StructuralError("action " + action.describe() + " is not an action of " + b.describe() + " on " +
                          x.describe());
  }
  const Verdict laws = check_action_laws(action, window);
  if (laws.is_no()) {
    throw PreconditionError("action laws fail for " + action.describe() + ": " + laws.note + " (" +
                            render_witnesses(laws) + ")");
  }
  return Group::semidirect(x, b, action);
}

Extension Extension::make(PreorderedGroup x, PreorderedGroup b, Action action, const Window& window) {
  Group carrier = semidirect(x.group, b.group, action, window);
  return Extension{std::move(x), std::move(b), std::move(action), std::move(carrier)};
}

Homomorphism Extension::kernel_inclusion() const {
  const Group c = carrier;
  const Element zero = b.group.zero();
  return Homomorphism::function(
      x.group, carrier, "<1,0>", [c, zero](const Element& v) { return c.pair(v, zero); }, true);
}

Homomorphism Extension::projection() const {
  const Group c = carrier;
  return Homomorphism::function(
      carrier, b.group, "pi_B", [c](const Element& v) { return c.base_part(v); }, true);
}

Homomorphism Extension::section() const {
  const Group c = carrier;
  const Element zero = x.group.zero();
  return Homomorphism::function(
      b.group, carrier, "<0,1>", [c, zero](const Element& v) { return c.pair(zero, v); }, true);
}

Homomorphism Extension::phi(const Element& at) const {
  const Action a = action;
  return Homomorphism::function(
      x.group, x.group, "phi_" + b.group.to_string(at), [a, at](const Element& v) { return a.apply(at, v); },
      true);
}

std::string Extension::describe() const {
  return x.describe() + " -> " + carrier.describe() + " <-> " + b.describe();
}

SplitExtension::SplitExtension(Extension e, Cone c) : ext(std::move(e)), cone(std::move(c)) {
  if (!cone.group().same_as(ext.carrier)) {
    throw StructuralError("cone " + cone.describe() + " does not live on " + ext.carrier.describe());
  }
}

std::string SplitExtension::describe() const { return ext.describe() + " with " + cone.describe(); }

Normalized normalize(const Group& a, const Homomorphism& f, const Homomorphism& s, const Homomorphism& k,
                     const Window& window) {
  const Group& b = f.target();
  const Group& x = k.source();
  if (!f.source().same_as(a) || !s.source().same_as(b) || !s.target().same_as(a) || !k.target().same_as(a)) {
    throw StructuralError("normalize: f, s, k do not form a split extension diagram over " + a.describe());
  }
  const auto b_elems = b.is_finite() ? b.elements() : b.window(window);
  for (const auto& e : b_elems) {
    if (f(s(e)) != e) {
      throw PreconditionError("f∘s differs from the identity at b=" + b.to_string(e));
    }
  }
  const auto x_elems = x.is_finite() ? x.elements() : x.window(window);
  for (const auto& e : x_elems) {
    if (!b.is_zero(f(k(e)))) throw PreconditionError("kernel mismatch: f(k(x)) != 0 at x=" + x.to_string(e));
  }

  // k⁻¹ on the image of k.
  std::function<std::optional<Element>(const Element&)> k_inv;
  if (a.is_finite()) {
    if (!x.is_finite()) throw StructuralError("normalize: infinite kernel in a finite group");
    auto table = std::make_shared<std::map<Element, Element>>();
    for (const auto& e : x.elements()) {
      if (!table->emplace(k(e), e).second) {
        throw PreconditionError("kernel mismatch: k is not injective at x=" + x.to_string(e));
      }
    }
    std::size_t kernel_size = 0;
    for (const auto& e : a.elements()) kernel_size += b.is_zero(f(e)) ? 1 : 0;
    if (kernel_size != table->size()) throw PreconditionError("kernel mismatch: the image of k is not ker f");
    k_inv = [table](const Element& e) -> std::optional<Element> {
      auto it = table->find(e);
      if (it == table->end()) return std::nullopt;
      return it->second;
    };
  } else {
    auto m = k.matrix();
    if (!m) throw UnsupportedError("normalize on an infinite group needs a linear kernel map");
    const Matrix km = *m;
    const Group xg = x;
    k_inv = [km, xg](const Element& e) { return linear_preimage(km, xg, e); };
  }
  auto strict_inv = [k_inv, a](const Element& e) {
    auto r = k_inv(e);
    if (!r) throw PreconditionError("kernel mismatch: " + a.to_string(e) + " is not in the image of k");
    return *r;
  };
  for (const auto& e : a.is_finite() ? a.elements() : a.window(window)) {
    strict_inv(a.sub(e, s(f(e))));
  }

  auto conj = [a, s, k, strict_inv](const Element& bb, const Element& xx) {
    return strict_inv(a.conjugate(s(bb), k(xx)));
  };
  Action action = [&]() {
    if (x.is_finite() && b.is_finite()) {
      const auto& xv = x.finite_view();
      const auto& bv = b.finite_view();
      std::vector<std::vector<std::size_t>> perms(bv.size(), std::vector<std::size_t>(xv.size()));
      for (std::size_t i = 0; i < bv.size(); ++i) {
        for (std::size_t j = 0; j < xv.size(); ++j) perms[i][j] = xv.index(conj(bv.element(i), xv.element(j)));
      }
      return Action::finite_table(b, x, std::move(perms));
    }
    return Action::induced(b, x, "conjugation in " + a.describe(), conj);
  }();
  Group carrier = semidirect(x, b, action, window);
  Homomorphism theta = Homomorphism::function(
      a, carrier, "theta", [carrier, f, s, a, strict_inv](const Element& e) {
        const Element fe = f(e);
        return carrier.pair(strict_inv(a.sub(e, s(fe))), fe);
      });

  ForAll all(a.is_finite() ? Scope::kExact : Scope::kWindow);
  Verdict additive = check_homomorphism(theta, window);
  // Unknown here means every window pair passed.
  if (additive.is_unknown()) additive = Verdict::yes(Scope::kWindow);
  all.add(additive);
  for (const auto& e : a.is_finite() ? a.elements() : a.window(window)) {
    const Element t = theta(e);
    const Element back = a.add(k(carrier.kernel_part(t)), s(carrier.base_part(t)));
    if (back != e) all.add(Verdict::no("theta is not invertible").with("a", a, e));
    all.count_element();
  }
  for (const auto& e : x_elems) {
    if (theta(k(e)) != carrier.pair(e, b.zero())) all.add(Verdict::no("theta∘k != <1,0>").with("x", x, e));
  }
  for (const auto& e : b_elems) {
    if (theta(s(e)) != carrier.pair(x.zero(), e)) all.add(Verdict::no("theta∘s != <0,1>").with("b", b, e));
  }
  if (a.is_finite() && a.order() != carrier.order()) all.add(Verdict::no("orders differ"));
  Verdict verified = all.result();
  if (verified.is_yes()) {
    verified.within(a.is_finite() ? Scope::kExact : Scope::kWindow).because("theta is an isomorphism of split extensions");
  }
  return Normalized{std::move(action), std::move(theta), std::move(carrier), std::move(verified)};
}

namespace {

Cone raw_product(const Extension& e) { return Cone::product(e.carrier, {e.x.cone, e.b.cone}).named("P_prod"); }
Cone raw_lex(const Extension& e) { return Cone::lex(e.carrier, e.x.cone, e.b.cone).named("P_lex"); }

}  // namespace

Cone product_cone(const Extension& e) {
  Cone c = raw_product(e);
  if (c.known_cone() || e.carrier.is_finite()) return c;
  const CompatibleExistence ce = compatible_exists(e);
  if (ce.verdict.is_yes() && is_minimal_equal_product(e).is_yes()) return c.certified();
  return c;
}

Cone lex_cone(const Extension& e) {
  Cone c = raw_lex(e);
  if (c.known_cone() || e.carrier.is_finite()) return c;
  const CompatibleExistence ce = compatible_exists(e);
  return ce.certificate ? *ce.certificate : c;
}

namespace {

Verdict interval_mode(const Cone& p, const Extension& e, const SaturationBudget& budget) {
  Verdict axioms = check_cone_axioms(p, budget);
  if (axioms.is_no()) return axioms.because("not a positive cone: " + axioms.note);
  Verdict lower = cone_subset(raw_product(e), p, budget);
  if (lower.is_no()) lower.because("P_prod is not contained in P: " + lower.note);
  Verdict upper = cone_subset(p, lex_cone(e), budget);
  if (upper.is_no()) upper.because("P is not contained in P_lex: " + upper.note);
  return axioms && lower && upper;
}

Verdict definitional_mode(const Cone& p, const Extension& e, const SaturationBudget& budget) {
  const PreorderedGroup total(e.carrier, p);
  Verdict axioms = check_cone_axioms(p, budget);
  if (axioms.is_no()) return axioms.because("not a positive cone: " + axioms.note);
  Verdict k = is_monotone(e.kernel_inclusion(), e.x, total, budget);
  if (k.is_no()) k.because("<1,0> is not monotone");
  Verdict f = is_monotone(e.projection(), total, e.b, budget);
  if (f.is_no()) f.because("pi_B is not monotone");
  Verdict s = is_monotone(e.section(), e.b, total, budget);
  if (s.is_no()) s.because("<0,1> is not monotone");
  const Homomorphism inc = e.kernel_inclusion();
  PredicateSpec restricted;
  restricted.name = "k^-1(P)";
  restricted.contains = [p, inc](const Element& x, const SaturationBudget& bud) { return p.contains(inc(x), bud); };
  Verdict reflect = cone_subset(Cone::predicate(e.x.group, restricted), e.x.cone, budget);
  if (reflect.is_no()) reflect.because("the order of X is not inherited from P");
  return axioms && k && f && s && reflect;
}

}  // namespace

Verdict is_compatible(const Cone& p, const Extension& e, CompatMode mode, const SaturationBudget& budget) {
  if (!p.group().same_as(e.carrier)) {
    throw StructuralError("cone " + p.describe() + " does not live on " + e.carrier.describe());
  }
  switch (mode) {
    case CompatMode::kInterval:
      return interval_mode(p, e, budget);
    case CompatMode::kDefinitional:
      return definitional_mode(p, e, budget);
    case CompatMode::kBoth:
      break;
  }
  const Verdict a = interval_mode(p, e, budget);
  const Verdict b = definitional_mode(p, e, budget);
  if ((a.is_yes() && b.is_no()) || (a.is_no() && b.is_yes())) {
    throw std::logic_error("interval and definitional compatibility disagree on " + p.describe());
  }
  return a.is_unknown() ? b : a;
}

Verdict pointwise_equivalent_to_identity(const PreorderedGroup& x, const Homomorphism& phi,
                                          const SaturationBudget& budget) {
  const Group& g = x.group;
  std::vector<Element> probes;
  Scope scope = Scope::kExact;
  if (g.is_finite()) {
    probes = g.elements();
  } else if (g.is_abelian() && units_divisible(x)) {
    probes = g.generators();
  } else {
    probes = g.window(budget.window);
    scope = Scope::kWindow;
  }
  ForAll all(scope);
  for (const auto& v : probes) {
    Verdict s = sim(x, v, phi(v), budget);
    if (s.is_no()) {
      s.because(phi.name() + "(x) is not equivalent to x").with("x", g, v);
      s.witnesses.erase(s.witnesses.begin(), s.witnesses.end() - 1);
    }
    all.count_element();
    if (!all.add(s)) break;
  }
  return all.result();
}

CompatibleExistence compatible_exists(const Extension& e, const SaturationBudget& budget) {
  const Group& bg = e.b.group;
  ForAll mono;
  auto check_phi = [&](const Element& at) {
    Verdict v = is_monotone(e.phi(at), e.x, e.x, budget);
    if (v.is_no()) {
      const Element x = v.witnesses.empty() ? e.x.group.zero() : v.witnesses.front().value;
      v = Verdict::no("phi_b is not monotone");
      v.with("b", bg, at).with("x", e.x.group, x);
    }
    return mono.add(v);
  };
  bool dilation_exact = false;
  if (e.action.kind() == ActionKind::kDilation) {
    // q·x for q > 0 preserves any cone spanned by rational rays.
    if (auto gens = e.x.cone.generators()) {
      dilation_exact = true;
      for (const auto& r : gens->rays) dilation_exact = dilation_exact && r.rational;
    }
  }
  if (!dilation_exact) {
    for (const auto& g : bg.generators()) {
      if (!check_phi(g) || !check_phi(bg.neg(g))) break;
    }
    if (has_divisible_coords(bg) && !mono.failed()) {
      auto window = bg.window(budget.window);
      if (window.size() > 64) window.resize(64);
      for (const auto& b : window) {
        if (!check_phi(b)) break;
      }
      mono.add(Verdict::yes(Scope::kWindow));
    }
  }
  Verdict v = mono.result();
  if (v.is_yes()) v.because("phi_b monotone for all b");
  if (!v.is_no()) {
    const UnitsSubgroup units = units_subgroup(e.b, budget);
    ForAll unit_check;
    for (const auto& u : units.generators(bg)) {
      Verdict w = pointwise_equivalent_to_identity(e.x, e.phi(u), budget);
      if (w.is_no()) {
        Verdict out = Verdict::no("a unit u of B has phi_u not equivalent to id");
        out.with("u", bg, u);
        for (const auto& wit : w.witnesses) out.witnesses.push_back(wit);
        w = out;
      }
      if (!unit_check.add(w)) break;
    }
    Verdict uv = unit_check.result();
    if (uv.is_yes() && !units.exact) {
      uv = Verdict::unknown("units of B only known on the window: " + units.note);
    }
    v = v && uv;
  }
  CompatibleExistence out{v, std::nullopt};
  if (v.is_yes()) out.certificate = raw_lex(e).certified();
  return out;
}

Cone minimal_cone(const Extension& e, const SaturationBudget& budget) {
  const CompatibleExistence ce = compatible_exists(e, budget);
  if (ce.verdict.is_no()) {
    throw PreconditionError("no compatible cone on " + e.describe() + ": " + ce.verdict.note + " (" +
                            render_witnesses(ce.verdict) + ")");
  }
  const Cone prod = raw_product(e);
  GeneratedSpec spec;
  spec.name = "<P_prod>";
  if (auto gens = prod.generators()) {
    spec.rays = gens->rays;
  } else {
    for (auto& m : window_members(prod, budget)) spec.rays.push_back(Ray{std::move(m), false});
    spec.rays_complete = false;
  }
  spec.base = [prod](const Element& t, const SaturationBudget& b) { return prod.contains(t, b); };
  if (ce.verdict.is_yes()) {
    const Cone lex = *ce.certificate;
    spec.envelope = [lex](const Element& t, const SaturationBudget& b) { return lex.contains(t, b); };
  }
  return Cone::generated(e.carrier, std::move(spec));
}

Verdict is_minimal_equal_product(const Extension& e, const SaturationBudget& budget) {
  const CompatibleExistence ce = compatible_exists(e, budget);
  if (ce.verdict.is_no()) throw PreconditionError("no compatible cone on " + e.describe());
  std::vector<Element> probes;
  Scope scope = Scope::kExact;
  if (auto gens = e.b.cone.generators()) {
    for (const auto& r : gens->rays) {
      probes.push_back(r.element);
      if (r.rational) scope = Scope::kWindow;
    }
  } else {
    probes = window_members(e.b.cone, budget);
    scope = Scope::kWindow;
  }
  ForAll all(scope);
  for (const auto& b : probes) {
    Verdict w = pointwise_equivalent_to_identity(e.x, e.phi(b), budget);
    if (w.is_no()) {
      Verdict out = Verdict::no("phi_b is not equivalent to id for a positive b");
      out.with("b", e.b.group, b);
      for (const auto& wit : w.witnesses) out.witnesses.push_back(wit);
      w = out;
    }
    if (!all.add(w)) break;
  }
  Verdict v = all.result();
  if (v.is_yes()) v.because("phi_b ~ id for every positive b");
  return v;
}

}  // namespace splitord
