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

#include "splitord/extensions/family.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace splitord {

ExtNat::ExtNat(long long n) : value_(n) {}
ExtNat::ExtNat(Integer n) : value_(std::move(n)) {}

ExtNat ExtNat::infinity() {
  ExtNat e;
  e.infinite_ = true;
  return e;
}

std::string ExtNat::to_string() const { return infinite_ ? "inf" : value_.str(); }

ExtNat ExtNat::parse(const std::string& text) {
  if (text == "inf" || text == "∞" || text == "infinity") return infinity();
  try {
    return ExtNat(Integer(text));
  } catch (const std::exception&) {
    throw ParseError("not an extended natural: '" + text + "'");
  }
}

ExtNat operator+(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return ExtNat::infinity();
  return ExtNat(a.value_ + b.value_);
}

bool operator==(const ExtNat& a, const ExtNat& b) {
  return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
}

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<std::pair<std::size_t, std::size_t>> superadditivity_failure(const std::vector<ExtNat>& x,
                                                                           const ExtNat& tail) {
  const std::size_t n = x.size();
  auto at = [&](std::size_t j) -> const ExtNat& { return j < n ? x[j] : tail; };
  // Indices past n + 1 behave like n, so n + 1 stands in for the tail.
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = a; b <= n; ++b) {
      if (at(a + b) < at(a) + at(b)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

namespace {

bool is_integer_line(const Group& g) { return g.kind() == GroupKind::kFreeAbelian && g.rank() == 1; }

}  // namespace

ConeFamily ConeFamily::up_sets(PreorderedGroup base, PreorderedGroup fiber, std::vector<ExtNat> x, ExtNat tail) {
  if (!is_integer_line(base.group) || !is_integer_line(fiber.group)) {
    throw StructuralError("up-set families need Z over Z");
  }
  if (x.empty()) throw StructuralError("up-set family needs at least x_0");
  if (tail != ExtNat(0) && !tail.is_infinite()) throw StructuralError("up-set family tail must be 0 or inf");
  ConeFamily f{FamilyKind::kUpSetSequence, std::move(base), std::move(fiber), std::move(x), tail, {}, {}, {}};
  f.name = "upsets(";
  for (std::size_t i = 0; i < f.sequence.size(); ++i) f.name += (i ? "," : "") + f.sequence[i].to_string();
  f.name += ";" + tail.to_string() + ")";
  return f;
}

ConeFamily ConeFamily::explicit_sets(PreorderedGroup base, PreorderedGroup fiber, std::vector<Subset> sets) {
  if (!base.group.is_finite() || !fiber.group.is_finite()) {
    throw StructuralError("explicit families need finite groups");
  }
  if (sets.size() != base.group.order()) throw StructuralError("explicit family needs one set per element of B");
  for (const auto& s : sets) {
    if (s.size() != fiber.group.order()) throw StructuralError("explicit family set has the wrong size");
  }
  ConeFamily f{FamilyKind::kExplicit, std::move(base), std::move(fiber), {}, ExtNat::infinity(), std::move(sets),
               {}, "explicit"};
  return f;
}

Verdict ConeFamily::member(const Element& x, const Element& b, const SaturationBudget& budget) const {
  switch (kind) {
    case FamilyKind::kUpSetSequence: {
      const Rational& j = b[0];
      if (j < 0) return Verdict::no("X_j is empty for j < 0");
      const auto idx = to_int64(j);
      const ExtNat& bound = (idx && static_cast<std::size_t>(*idx) < sequence.size())
                                ? sequence[static_cast<std::size_t>(*idx)]
                                : tail;
      if (bound.is_infinite()) return Verdict::yes();
      return Verdict::from_bool(x[0] >= Rational(-bound.value()));
    }
    case FamilyKind::kExplicit:
      return Verdict::from_bool(sets[base.group.finite_view().index(b)][fiber.group.finite_view().index(x)]);
    case FamilyKind::kFromCone:
      return from_cone(x, b, budget);
  }
  return Verdict::unknown();
}

std::string ConeFamily::describe() const { return name; }

namespace {


struct Lists {
  std::vector<Element> xs;
  std::vector<Element> bs;
  Scope scope;
};

Lists probe_lists(const ConeFamily& fam, const SaturationBudget& budget) {
  constexpr std::size_t kCap = 25;
  Lists l{test_elements(fam.fiber.group, budget), test_elements(fam.base.group, budget), Scope::kExact};
  if (!fam.fiber.group.is_finite() || !fam.base.group.is_finite()) l.scope = Scope::kWindow;
  if (l.xs.size() > kCap) l.xs.resize(kCap);
  if (l.bs.size() > kCap) l.bs.resize(kCap);
  return l;
}

// Conditions checked element by element on complete lists (finite) or on
// window samples.
FamilyValidation generic_validation(const ConeFamily& fam, const Action& action, const SaturationBudget& budget) {
  const Group& xg = fam.fiber.group;
  const Group& bg = fam.base.group;
  const Lists l = probe_lists(fam, budget);
  auto mem = [&](const Element& x, const Element& b) { return fam.member(x, b, budget); };

  std::vector<Element> pos_b;
  ForAll c1(l.scope);
  for (const auto& b : l.bs) {
    const Verdict in_p = fam.base.cone.contains(b, budget);
    const Verdict zero_in = mem(xg.zero(), b);
    if (in_p.is_yes()) pos_b.push_back(b);
    if ((in_p.is_yes() && zero_in.is_no()) || (in_p.is_no() && zero_in.is_yes())) {
      c1.add(Verdict::no("0 ∈ X_b differs from b ∈ P_B").with("b", bg, b));
      break;
    }
    c1.add(in_p.is_unknown() ? in_p : zero_in.is_unknown() ? zero_in : Verdict::yes(l.scope));
    if (in_p.is_no()) {
      for (const auto& x : l.xs) {
        const Verdict v = mem(x, b);
        if (v.is_yes()) {
          c1.add(Verdict::no("X_b is nonempty for b outside P_B").with("b", bg, b).with("x", xg, x));
          break;
        }
        c1.add(v.is_unknown() ? v : Verdict::yes(l.scope));
      }
    }
  }

  ForAll c2(l.scope);
  for (const auto& x : l.xs) {
    const Verdict a = mem(x, bg.zero());
    const Verdict p = fam.fiber.cone.contains(x, budget);
    if ((a.is_yes() && p.is_no()) || (a.is_no() && p.is_yes())) {
      c2.add(Verdict::no("X_0 differs from P_X").with("x", xg, x));
      break;
    }
    c2.add(a.is_unknown() ? a : p.is_unknown() ? p : Verdict::yes(l.scope));
  }

  // Members of X_b on the probe list.
  std::map<Element, std::vector<Element>> fibers;
  for (const auto& b : l.bs) {
    auto& out = fibers[b];
    for (const auto& x : l.xs) {
      if (mem(x, b).is_yes()) out.push_back(x);
    }
  }

  ForAll c3(l.scope);
  for (const auto& b : pos_b) {
    for (const auto& b2 : pos_b) {
      for (const auto& x : fibers[b]) {
        for (const auto& x2 : fibers[b2]) {
          const Verdict v = mem(xg.add(x, action.apply(b, x2)), bg.add(b, b2));
          if (v.is_no()) {
            c3.add(Verdict::no("X_b + phi_b(X_b') is not inside X_{b+b'}")
                       .with("b", bg, b).with("b'", bg, b2).with("x", xg, x).with("x'", xg, x2));
            goto c3_done;
          }
          c3.add(v);
        }
      }
    }
  }
c3_done:

  ForAll c4(l.scope);
  ForAll inv(l.scope);
  for (const auto& a : l.bs) {
    for (const auto& b : pos_b) {
      const Element c = bg.conjugate(a, b);
      for (const auto& y : fibers[b]) {
        if (!c4.failed()) {
          for (const auto& x : l.xs) {
            const Element t = xg.sub(xg.add(x, action.apply(a, y)), action.apply(c, x));
            const Verdict v = mem(t, c);
            if (v.is_no()) {
              c4.add(Verdict::no("x + phi_a(X_b) is not inside X_{a+b-a} + phi_{a+b-a}(x)")
                         .with("a", bg, a).with("b", bg, b).with("x", xg, x).with("y", xg, y));
              break;
            }
            c4.add(v);
          }
        }
        if (!inv.failed()) {
          const Verdict v = mem(action.apply(a, y), c);
          if (v.is_no()) {
            inv.add(Verdict::no("phi_a(X_b) is not inside X_{a+b-a}").with("a", bg, a).with("b", bg, b).with("y", xg, y));
          } else {
            inv.add(v);
          }
        }
      }
      if (!inv.failed()) {
        const Element na = bg.neg(a);
        for (const auto& z : l.xs) {
          const Verdict in_c = mem(z, c);
          if (!in_c.is_yes()) continue;
          const Verdict v = mem(action.apply(na, z), b);
          if (v.is_no()) {
            inv.add(Verdict::no("X_{a+b-a} is not inside phi_a(X_b)").with("a", bg, a).with("b", bg, b).with("z", xg, z));
            break;
          }
          inv.add(v);
        }
      }
    }
  }

  FamilyValidation out;
  out.conditions = {c1.result(), c2.result(), c3.result(), c4.result()};
  out.conjugation_invariance = inv.result();
  return out;
}

FamilyValidation upset_validation(const ConeFamily& fam) {
  const Group& bg = fam.base.group;
  const Group& xg = fam.fiber.group;
  FamilyValidation out;
  out.conditions[0] = Verdict::yes(Scope::kExact, "X_j = ↑(-x_j) for j >= 0 and ∅ otherwise");
  for (std::size_t j = 0; j < fam.sequence.size(); ++j) {
    if (fam.sequence[j] < ExtNat(0)) {
      out.conditions[0] = Verdict::no("0 is not in X_j").with("b", bg, Element{static_cast<long>(j)});
      break;
    }
  }
  const ExtNat& x0 = fam.sequence.front();
  switch (fam.fiber.cone.kind()) {
    case ConeKind::kNaturalOrthant:
      out.conditions[1] = x0 == ExtNat(0) ? Verdict::yes() : Verdict::no("X_0 differs from P_X");
      break;
    case ConeKind::kFull:
      out.conditions[1] = x0.is_infinite() ? Verdict::yes() : Verdict::no("X_0 differs from P_X");
      break;
    case ConeKind::kTrivial:
      out.conditions[1] = Verdict::no("X_0 is an up-set, P_X is {0}");
      break;
    default:
      out.conditions[1] = Verdict::unknown("X_0 compared on the window only");
      break;
  }
  if (out.conditions[1].is_no()) {
    const Element w = x0.is_infinite() ? Element{-1} : (x0 > ExtNat(0) ? Element{-1} : Element{0});
    out.conditions[1].with("x", xg, w);
  }
  if (auto fail = superadditivity_failure(fam.sequence, fam.tail)) {
    out.conditions[2] = Verdict::no("x_{b+b'} < x_b + x_b'")
                            .with("b", bg, Element{static_cast<long>(fail->first)})
                            .with("b'", bg, Element{static_cast<long>(fail->second)});
  } else {
    out.conditions[2] = Verdict::yes(Scope::kExact, "superadditive");
  }
  out.conditions[3] = Verdict::yes(Scope::kExact, "trivial action on an abelian group");
  out.conjugation_invariance = Verdict::yes(Scope::kExact, "trivial action on an abelian group");
  return out;
}

}  // namespace

FamilyValidation validate_family(const ConeFamily& fam, const Action& action, const SaturationBudget& budget) {
  if (!action.acting().same_as(fam.base.group) || !action.acted().same_as(fam.fiber.group)) {
    throw StructuralError("action " + action.describe() + " does not act on the family's fiber by its base");
  }
  FamilyValidation out;
  const bool fast = fam.kind == FamilyKind::kUpSetSequence && action.is_trivial() &&
                    fam.base.cone.kind() == ConeKind::kNaturalOrthant;
  if (fast) {
    out = upset_validation(fam);
    if (out.conditions[1].is_unknown()) out.conditions[1] = generic_validation(fam, action, budget).conditions[1];
  } else {
    out = generic_validation(fam, action, budget);
  }
  out.verdict = out.conditions[0] && out.conditions[1] && out.conditions[2] && out.conditions[3];
  if (out.verdict.is_yes()) out.verdict.because("fiber, base, additivity and conjugation conditions hold");
  return out;
}

Cone family_to_cone(const ConeFamily& fam, const Extension& e) {
  if (!fam.base.group.same_as(e.b.group) || !fam.fiber.group.same_as(e.x.group)) {
    throw StructuralError("family " + fam.describe() + " does not match " + e.describe());
  }
  const Group carrier = e.carrier;
  PredicateSpec spec;
  spec.name = "family " + fam.describe();
  spec.contains = [fam, carrier](const Element& t, const SaturationBudget& budget) {
    return fam.member(carrier.kernel_part(t), carrier.base_part(t), budget);
  };
  spec.payload = fam;
  return Cone::family(e.carrier, std::move(spec));
}

ConeFamily cone_to_family(const Cone& p, const Extension& e, const Window& window) {
  if (!p.group().same_as(e.carrier)) throw StructuralError("cone does not live on " + e.carrier.describe());
  const Group carrier = e.carrier;
  SaturationBudget budget;
  budget.window = window;
  if (carrier.is_finite()) {
    const auto mask = p.finite_members(budget);
    if (!mask) throw PreconditionError("cone membership undecided on a finite carrier");
    const auto& view = carrier.finite_view();
    const auto& xv = e.x.group.finite_view();
    const auto& bv = e.b.group.finite_view();
    std::vector<Subset> sets(bv.size(), Subset(xv.size(), false));
    for (std::size_t i = 0; i < view.size(); ++i) {
      if (!(*mask)[i]) continue;
      const Element& t = view.element(i);
      sets[bv.index(carrier.base_part(t))][xv.index(carrier.kernel_part(t))] = true;
    }
    return ConeFamily::explicit_sets(e.b, e.x, std::move(sets));
  }
  if (is_integer_line(e.x.group) && is_integer_line(e.b.group)) {
    const long m = static_cast<long>(window.integer_bound);
    std::vector<ExtNat> seq;
    bool shaped = true;
    bool all_zero = true;
    for (long j = 0; j <= m && shaped; ++j) {
      // Members of the window column must be exactly n >= -x_j.
      std::optional<long> lowest;
      bool gap = false;
      for (long n = -m; n <= m; ++n) {
        const Verdict v = p.contains(carrier.pair(Element{n}, Element{j}), budget);
        if (v.is_unknown()) {
          shaped = false;
          break;
        }
        if (v.is_yes() && !lowest) lowest = n;
        if (v.is_no() && lowest) gap = true;
      }
      if (!shaped || gap || !lowest || *lowest > 0) {
        shaped = false;
        break;
      }
      seq.push_back(*lowest == -m ? ExtNat::infinity() : ExtNat(static_cast<long long>(-*lowest)));
      all_zero = all_zero && seq.back() == ExtNat(0);
    }
    for (long j = -m; j < 0 && shaped; ++j) {
      for (long n = -m; n <= m; ++n) {
        if (!p.contains(carrier.pair(Element{n}, Element{j}), budget).is_no()) {
          shaped = false;
          break;
        }
      }
    }
    if (shaped) return ConeFamily::up_sets(e.b, e.x, std::move(seq), all_zero ? ExtNat(0) : ExtNat::infinity());
  }
  ConeFamily f{FamilyKind::kFromCone, e.b, e.x, {}, ExtNat::infinity(), {}, {}, "fibers of " + p.describe()};
  f.from_cone = [p, carrier](const Element& x, const Element& b, const SaturationBudget& bud) {
    return p.contains(carrier.pair(x, b), bud);
  };
  return f;
}

std::string LatticeScope::describe() const {
  if (kind == Kind::kExhaustiveFinite) return "exhaustive";
  return "superadditive(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

namespace {

LatticeReport finite_lattice(const Extension& e, const SaturationBudget& budget) {
  const Group& g = e.carrier;
  if (!g.is_finite()) throw UnsupportedError("exhaustive enumeration needs a finite carrier");
  const auto& view = g.finite_view();
  const auto lower = product_cone(e).finite_members(budget);
  const auto upper = lex_cone(e).finite_members(budget);
  if (!lower || !upper) throw PreconditionError("product or lex membership undecided");
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < view.size(); ++i) {
    if ((*upper)[i] && !(*lower)[i]) free.push_back(i);
  }
  if (free.size() > 20) throw UnsupportedError("too many candidate cones between P_prod and P_lex");
  LatticeReport report{e, LatticeScope::exhaustive(), {}, 0, true, true, 0};
  std::set<Subset> found;
  for (std::size_t bits = 0; bits < (std::size_t{1} << free.size()); ++bits) {
    Subset s = *lower;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if ((bits >> k) & 1U) s[free[k]] = true;
    }
    ++report.candidates;
    if (!finite_is_cone(view, s)) continue;
    found.insert(s);
  }
  for (const auto& s : found) {
    LatticeEntry entry{Cone::extensional(g, {}), {}, {}, 0, Verdict::unknown()};
    std::vector<Element> members;
    for (std::size_t i = 0; i < view.size(); ++i) {
      if (s[i]) {
        entry.members.push_back(i);
        members.push_back(view.element(i));
      }
    }
    entry.window_size = members.size();
    entry.cone = Cone::extensional(g, std::move(members));
    entry.compatible = is_compatible(entry.cone, e, CompatMode::kBoth, budget);
    report.cones.push_back(std::move(entry));
  }
  std::sort(report.cones.begin(), report.cones.end(), [](const LatticeEntry& a, const LatticeEntry& b) {
    return std::tie(a.window_size, a.members) < std::tie(b.window_size, b.members);
  });
  for (const auto& a : found) {
    for (const auto& b : found) {
      Subset meet(a.size()), join(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        meet[i] = a[i] && b[i];
        join[i] = a[i] || b[i];
      }
      report.meet_closed = report.meet_closed && found.count(meet) > 0;
      report.join_closed = report.join_closed && found.count(finite_closure(view, join)) > 0;
    }
  }
  return report;
}

std::size_t sequence_window_size(const std::vector<ExtNat>& x, std::size_t w) {
  std::size_t total = 0;
  for (std::size_t j = 0; j <= w; ++j) {
    const ExtNat& v = j < x.size() ? x[j] : ExtNat::infinity();
    const std::size_t depth = v.is_infinite() || v.value() > w ? w : static_cast<std::size_t>(v.value());
    total += depth + w + 1;
  }
  return total;
}

LatticeReport superadditive_lattice(const Extension& e, const LatticeScope& scope, const SaturationBudget& budget) {
  if (!is_integer_line(e.x.group) || !is_integer_line(e.b.group) || !e.action.is_trivial() ||
      e.x.cone.kind() != ConeKind::kNaturalOrthant || e.b.cone.kind() != ConeKind::kNaturalOrthant) {
    throw UnsupportedError("superadditive window needs (Z,N) x (Z,N) with the trivial action");
  }
  const std::size_t n = scope.n;
  const std::size_t m = scope.m;
  std::vector<ExtNat> values;
  for (std::size_t v = 0; v <= m; ++v) values.emplace_back(static_cast<long long>(v));
  values.push_back(ExtNat::infinity());

  LatticeReport report{e, scope, {}, 0, true, true, 0};
  std::set<std::vector<ExtNat>> found;
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    std::vector<ExtNat> x{ExtNat(0)};
    for (std::size_t d : digits) x.push_back(values[d]);
    ++report.candidates;
    if (!superadditivity_failure(x)) found.insert(x);
    std::size_t k = 0;
    while (k < n && ++digits[k] == values.size()) digits[k++] = 0;
    if (k == n) break;
  }
  const std::size_t w = std::max(n, m) + 1;
  for (const auto& x : found) {
    ConeFamily fam = ConeFamily::up_sets(e.b, e.x, x);
    LatticeEntry entry{family_to_cone(fam, e), x, {}, sequence_window_size(x, w), Verdict::unknown()};
    entry.compatible = validate_family(fam, e.action, budget).verdict;
    report.cones.push_back(std::move(entry));
  }
  std::sort(report.cones.begin(), report.cones.end(), [](const LatticeEntry& a, const LatticeEntry& b) {
    return std::tie(a.window_size, a.sequence) < std::tie(b.window_size, b.sequence);
  });
  for (const auto& a : found) {
    for (const auto& b : found) {
      std::vector<ExtNat> meet(n + 1), join(n + 1);
      bool outside = false;
      for (std::size_t j = 0; j <= n; ++j) {
        meet[j] = std::min(a[j], b[j]);
        ExtNat best(0);
        for (std::size_t i = 0; i <= j; ++i) best = std::max(best, a[i] + b[j - i]);
        join[j] = best;
        outside = outside || (!best.is_infinite() && best > ExtNat(static_cast<long long>(m)));
      }
      report.meet_closed = report.meet_closed && found.count(meet) > 0;
      if (outside) {
        ++report.joins_outside_scope;
      } else {
        report.join_closed = report.join_closed && found.count(join) > 0;
      }
    }
  }
  return report;
}

}  // namespace

LatticeReport enumerate_compatible_cones(const Extension& e, const LatticeScope& scope,
                                         const SaturationBudget& budget) {
  if (scope.kind == LatticeScope::Kind::kExhaustiveFinite) return finite_lattice(e, budget);
  return superadditive_lattice(e, scope, budget);
}

}  // namespace splitord
