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

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "splitord/classifiers/classifiers.hpp"

using namespace splitord;

namespace {

const Group kZ = Group::free_abelian(1);
const Group kQ = Group::rational_vector(1);
const Group kQp = Group::positive_rationals();

Element q(long n, long d = 1) { return Element(std::vector<Rational>{Rational(n, d)}); }

PreorderedGroup zn() { return PreorderedGroup(kZ, Cone::natural_orthant(kZ)); }
PreorderedGroup qpos() { return PreorderedGroup(kQ, Cone::natural_orthant(kQ)); }

/// Brute-force count of additive bijections of a finite group that map the
/// cone onto itself.
std::size_t brute_monotone_auts(const PreorderedGroup& x) {
  const FiniteView& v = x.group.finite_view();
  const auto mask = *x.cone.finite_members();
  std::vector<std::size_t> p(v.size());
  std::iota(p.begin(), p.end(), 0);
  std::size_t n = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < v.size(); ++i) {
      ok = mask[p[i]] == mask[i];
      for (std::size_t j = 0; ok && j < v.size(); ++j) ok = p[v.add(i, j)] == v.add(p[i], p[j]);
    }
    n += ok ? 1 : 0;
  } while (std::next_permutation(p.begin(), p.end()));
  return n;
}

bool has_value(const Verdict& v, const Element& value) {
  for (const auto& w : v.witnesses) {
    if (w.value == value) return true;
  }
  return false;
}

Point minimal_point(const Extension& e) { return Point(e, minimal_cone(e)); }

}  // namespace

TEST_CASE("monotone automorphism groups") {
  const MonotoneAutGroup zi = monotone_aut(zn());
  CHECK(zi.kind == AutKind::kSymbolicIntN);
  CHECK(zi.group.order() == 1);

  const Group v4 = Group::product({Group::cyclic(2), Group::cyclic(2)});
  const PreorderedGroup v4t(v4, Cone::trivial(v4));
  CHECK(monotone_aut(v4t).group.order() == 6);
  CHECK(brute_monotone_auts(v4t) == 6);

  const Group z4 = Group::cyclic(4);
  const PreorderedGroup z4c(z4, Cone::extensional(z4, {{0}, {2}}));
  CHECK(monotone_aut(z4c).group.order() == brute_monotone_auts(z4c));
  const PreorderedGroup v4c(v4, Cone::extensional(v4, {{0, 0}, {1, 0}}));
  CHECK(monotone_aut(v4c).group.order() == brute_monotone_auts(v4c));
  CHECK(monotone_aut(v4c).group.order() == 2);

  const MonotoneAutGroup qs = monotone_aut(qpos());
  CHECK(qs.kind == AutKind::kSymbolicRatScalings);
  CHECK(qs.automorphism(q(3))(q(1, 2)) == q(3, 2));

  const Group z2 = Group::free_abelian(2);
  const MonotoneAutGroup perms = monotone_aut(PreorderedGroup(z2, Cone::natural_orthant(z2)));
  CHECK(perms.kind == AutKind::kSymbolicOrthantPerms);
  CHECK(perms.group.order() == 2);

  CHECK_THROWS_AS(monotone_aut(PreorderedGroup(kZ, Cone::full(kZ))), UnsupportedError);
}

TEST_CASE("orders on automorphism groups") {
  const MonotoneAutGroup qs = monotone_aut(qpos());
  const AutOrder plus = aut_cone(qs, AutConeKind::kPlus);
  const AutOrder tilde = aut_cone(qs, AutConeKind::kTilde);
  const AutOrder minus = aut_cone(qs, AutConeKind::kMinus);
  CHECK(plus.cone.contains(q(2)).is_yes());
  CHECK(tilde.cone.contains(q(2)).is_no());
  CHECK(tilde.cone.contains(q(1)).is_yes());
  CHECK(minus.cone.contains(q(1, 2)).is_yes());
  CHECK(minus.cone.contains(q(2)).is_no());
  Window w;
  w.max_elements = 200;
  for (const auto& a : kQp.window(w)) {
    CHECK(plus.cone.contains(a).truth == minus.cone.contains(kQp.neg(a)).truth);
  }

  const Group v4 = Group::product({Group::cyclic(2), Group::cyclic(2)});
  const MonotoneAutGroup fv = monotone_aut(PreorderedGroup(v4, Cone::extensional(v4, {{0, 0}, {1, 0}})));
  const AutOrder fp = aut_cone(fv, AutConeKind::kPlus);
  const AutOrder fm = aut_cone(fv, AutConeKind::kMinus);
  for (const auto& a : fv.group.elements()) {
    CHECK(fp.cone.contains(a).truth == fm.cone.contains(fv.group.neg(a)).truth);
  }
  CHECK(aut_cone(fv, AutConeKind::kTilde).cone.contains(fv.group.zero()).is_yes());
}

TEST_CASE("admissible orders") {
  const MonotoneAutGroup qs = monotone_aut(qpos());
  CHECK(admissible_check(aut_cone(qs, AutConeKind::kTilde)).is_yes());
  CHECK(admissible_check(aut_cone(qs, AutConeKind::kPlus)).is_yes());
  CHECK(admissible_check(aut_cone(qs, AutConeKind::kMinus)).is_yes());
  const Verdict full = admissible_check(aut_cone(qs, AutConeKind::kFull));
  REQUIRE(full.is_no());
  CHECK(has_value(full, q(2)));

  const Group v4 = Group::product({Group::cyclic(2), Group::cyclic(2)});
  for (const Cone& c : {Cone::trivial(v4), Cone::full(v4), Cone::extensional(v4, {{0, 0}, {1, 0}})}) {
    const MonotoneAutGroup a = monotone_aut(PreorderedGroup(v4, c));
    CHECK(admissible_check(aut_cone(a, AutConeKind::kTilde)).is_yes());
  }
  const MonotoneAutGroup vt = monotone_aut(PreorderedGroup(v4, Cone::trivial(v4)));
  CHECK(admissible_check(aut_cone(vt, AutConeKind::kFull)).is_no());
  CHECK(admissible_check(aut_cone(monotone_aut(zn()), AutConeKind::kTilde)).is_yes());
}

TEST_CASE("classifier construction") {
  const MonotoneAutGroup zi = monotone_aut(zn());
  const Classifier cz = build_classifier(zn(), aut_cone(zi, AutConeKind::kTilde));
  CHECK(cz.point.ext.b.group.order() == 1);
  CHECK(cz.point.cone.contains({3, 0}).is_yes());
  CHECK(cz.point.cone.contains({-3, 0}).is_no());
  CHECK(is_rali(cz.point).verdict.is_yes());

  const Group v4 = Group::product({Group::cyclic(2), Group::cyclic(2)});
  const PreorderedGroup v4t(v4, Cone::trivial(v4));
  const Classifier cv = build_classifier(v4t, aut_cone(monotone_aut(v4t), AutConeKind::kTilde));
  CHECK(cv.point.ext.carrier.order() == 24);
  CHECK(is_rali(cv.point).verdict.is_yes());

  const MonotoneAutGroup qs = monotone_aut(qpos());
  const Classifier cq = build_classifier(qpos(), aut_cone(qs, AutConeKind::kTilde));
  CHECK(is_rali(cq.point).verdict.is_yes());
  CHECK_THROWS_AS(build_classifier(qpos(), aut_cone(qs, AutConeKind::kFull)), PreconditionError);
}

TEST_CASE("classifying points") {
  const MonotoneAutGroup qs = monotone_aut(qpos());
  const Classifier tilde = build_classifier(qpos(), aut_cone(qs, AutConeKind::kTilde));
  const Classifier plus = build_classifier(qpos(), aut_cone(qs, AutConeKind::kPlus));

  const Point rali = minimal_point(Extension::make(qpos(), zn(), Action::trivial(kZ, kQ)));
  const ClassifyResult r = classify_into(rali, tilde);
  CHECK(r.phi_bar({5}) == q(1));
  CHECK(r.phi_bar_monotone.is_yes());
  CHECK(r.total_monotone.is_yes());
  CHECK(r.is_morphism.is_yes());
  CHECK(r.uniqueness.is_yes());

  const Point scaling = minimal_point(Extension::make(qpos(), zn(), Action::scaling(kZ, kQ, 2)));
  const ClassifyResult s = classify_into(scaling, tilde);
  CHECK(s.phi_bar({1}) == q(2));
  CHECK(s.phi_bar_monotone.is_no());
  const ClassifyResult sp = classify_into(scaling, plus);
  CHECK(sp.phi_bar_monotone.is_yes());
  CHECK(sp.total_monotone.is_yes());
  CHECK(sp.uniqueness.is_yes());

  const Extension ne = Extension::make(qpos(), PreorderedGroup(kZ, Cone::trivial(kZ)), Action::sign(kZ, kQ));
  CHECK_THROWS_AS(classify_into(Point(ne, Cone::trivial(ne.carrier)), tilde), PreconditionError);
  const Point integral = minimal_point(Extension::make(zn(), zn(), Action::trivial(kZ, kZ)));
  CHECK_THROWS_AS(classify_into(integral, tilde), StructuralError);
}

TEST_CASE("membership in the classified class") {
  const MonotoneAutGroup qs = monotone_aut(qpos());
  const AutOrder tilde = aut_cone(qs, AutConeKind::kTilde);
  const AutOrder plus = aut_cone(qs, AutConeKind::kPlus);
  const Extension triv = Extension::make(qpos(), zn(), Action::trivial(kZ, kQ));
  CHECK(sclass_membership(minimal_point(triv), tilde).verdict.is_yes());
  const SClassMembership lex = sclass_membership(Point(triv, lex_cone(triv)), plus);
  CHECK(lex.positive_images.is_yes());
  REQUIRE(lex.kernel_reflection.is_no());
  CHECK(has_value(lex.kernel_reflection, Element{-1, 1}));
  const Point scaling = minimal_point(Extension::make(qpos(), zn(), Action::scaling(kZ, kQ, 2)));
  CHECK(sclass_membership(scaling, plus).verdict.is_yes());
  CHECK(sclass_membership(scaling, tilde).positive_images.is_no());
}

TEST_CASE("terminality over finite kernels") {
  // (Z_3, full) with Z acting by negation, and (Z_2 x Z_2, trivial) with the trivial action.
  const Group z3 = Group::cyclic(3);
  const PreorderedGroup z3f(z3, Cone::full(z3));
  const Extension neg = Extension::make(z3f, zn(), Action::sign(kZ, z3));
  const Group v4 = Group::product({Group::cyclic(2), Group::cyclic(2)});
  const PreorderedGroup v4t(v4, Cone::trivial(v4));
  const Extension triv = Extension::make(v4t, zn(), Action::trivial(kZ, v4));
  for (const Extension& e : {neg, triv}) {
    const Point p(e, product_cone(e));
    REQUIRE(is_rali(p).verdict.is_yes());
    const Classifier cls = build_classifier(e.x, aut_cone(monotone_aut(e.x), AutConeKind::kTilde));
    const ClassifyResult r = classify_into(p, cls);
    CHECK(r.phi_bar_monotone.is_yes());
    CHECK(r.total_monotone.is_yes());
    CHECK(r.is_morphism.is_yes());
    CHECK(r.uniqueness.is_yes());
  }
}

TEST_CASE("no classifier witness") {
  const auto w = no_classifier_witness(qpos());
  REQUIRE(w.has_value());
  CHECK(w->alpha == q(2));
  CHECK(w->x == q(1));
  CHECK_FALSE(no_classifier_witness(zn()).has_value());
  const Group z3 = Group::cyclic(3);
  CHECK_FALSE(no_classifier_witness(PreorderedGroup(z3, Cone::full(z3))).has_value());
  const Group z2 = Group::free_abelian(2);
  CHECK_THROWS_AS(no_classifier_witness(PreorderedGroup(z2, Cone::natural_orthant(z2))), PreconditionError);
}
