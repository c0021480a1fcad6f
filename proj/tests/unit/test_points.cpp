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

#include "doctest.h"
#include "splitord/points/points.hpp"

using namespace splitord;

namespace {

const Group kZ = Group::free_abelian(1);
const Group kQ = Group::rational_vector(1);

Element pair_q(Rational x, long b) { return Element(std::vector<Rational>{x, Rational(b)}); }

PreorderedGroup zn() { return PreorderedGroup(kZ, Cone::natural_orthant(kZ)); }
PreorderedGroup ztriv() { return PreorderedGroup(kZ, Cone::trivial(kZ)); }
PreorderedGroup qpos() { return PreorderedGroup(kQ, Cone::natural_orthant(kQ)); }

Point minimal_point(const Extension& e) { return Point(e, minimal_cone(e)); }
Point trivial_point() { return minimal_point(Extension::make(zn(), zn(), Action::trivial(kZ, kZ))); }
Point sign_point() { return minimal_point(Extension::make(ztriv(), zn(), Action::sign(kZ, kZ))); }
Point scaling_point() { return minimal_point(Extension::make(qpos(), zn(), Action::scaling(kZ, kQ, 2))); }
Point lex_point() {
  const Extension e = Extension::make(zn(), zn(), Action::trivial(kZ, kZ));
  return Point(e, lex_cone(e));
}

bool has_value(const Verdict& v, const Element& value) {
  for (const auto& w : v.witnesses) {
    if (w.value == value) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("pointwise order on homomorphisms") {
  const auto id = Homomorphism::identity(kZ);
  const auto twice = Homomorphism::scalar(kZ, 2);
  CHECK(hom_leq(id, twice, zn(), zn()).is_yes());
  const Verdict v = hom_leq(twice, id, zn(), zn());
  REQUIRE(v.is_no());
  CHECK(has_value(v, Element{1}));
  CHECK(hom_leq(twice, id, ztriv(), zn()).is_yes());
  const Group z4 = Group::cyclic(4);
  const PreorderedGroup z4full(z4, Cone::full(z4));
  CHECK(hom_leq(Homomorphism::zero(z4, z4), Homomorphism::identity(z4), z4full, z4full).is_yes());
}

TEST_CASE("rali points") {
  const RaliResult t = is_rali(trivial_point());
  CHECK(t.verdict.is_yes());
  CHECK(t.cone_route.is_yes());
  CHECK(t.adjoint_route.is_yes());
  const RaliResult q = is_rali(scaling_point());
  CHECK(q.verdict.is_no());
  CHECK(q.adjoint_route.is_no());
  CHECK(has_value(q.adjoint_route, pair_q(-1, 1)));
  CHECK(is_rali(lex_point()).verdict.is_no());
}

TEST_CASE("strong points") {
  CHECK(is_strong(sign_point()).is_yes());
  CHECK(is_strong(trivial_point()).is_yes());
  CHECK(is_strong(scaling_point()).is_yes());
  const Verdict lex = is_strong(lex_point());
  REQUIRE(lex.is_no());
  CHECK(has_value(lex, Element{-1, 1}));
  // No compatible cone at all.
  const Extension bad = Extension::make(zn(), PreorderedGroup(kZ, Cone::full(kZ)), Action::sign(kZ, kZ));
  CHECK(is_strong(Point(bad, Cone::trivial(bad.carrier))).is_no());
}

TEST_CASE("pullbacks") {
  const Point s = sign_point();
  SUBCASE("along the identity") {
    const Point p = pullback(s, zn(), Homomorphism::identity(kZ));
    Window w;
    w.max_elements = 200;
    for (const auto& e : s.ext.carrier.window(w)) CHECK(p.cone.contains(e).truth == s.cone.contains(e).truth);
    CHECK(is_strong(p).is_yes());
  }
  SUBCASE("sign point along n -> 2n") {
    const Point p = pullback(s, zn(), Homomorphism::scalar(kZ, 2));
    CHECK(p.ext.action.is_trivial());
    CHECK(p.cone.contains({-2, 1}).is_yes());
    CHECK(p.cone.contains({-1, 1}).is_no());
    // Upstairs (-2, 2) is the sum (-1,0)+(0,1)+(1,0)+(0,1) of conjugates.
    CHECK(s.cone.contains({-2, 2}).is_yes());
    const Verdict v = is_strong(p);
    REQUIRE(v.is_no());
    CHECK((has_value(v, Element{-2, 1}) || has_value(v, Element{2, 1})));
  }
  SUBCASE("non-monotone maps are refused") {
    CHECK_THROWS_AS(pullback(s, zn(), Homomorphism::scalar(kZ, -1)), PreconditionError);
  }
  SUBCASE("scaling point along the catalog") {
    const Point q = scaling_point();
    for (const auto& m : default_catalog(q.ext.b)) {
      INFO(m.name);
      CHECK(is_strong(pullback(q, m.source, m.map)).is_yes());
    }
  }
}

TEST_CASE("stably strong over a catalog") {
  const Point s = sign_point();
  const StablyStrongReport rs = stably_strong_over(s, default_catalog(s.ext.b));
  CHECK(rs.verdict.is_no());
  const Point q = scaling_point();
  const StablyStrongReport rq = stably_strong_over(q, default_catalog(q.ext.b));
  CHECK(rq.verdict.is_yes());
  CHECK(rq.per_morphism.size() == 10);
  const Point t = trivial_point();
  CHECK(stably_strong_over(t, default_catalog(t.ext.b)).verdict.is_yes());
}

TEST_CASE("rali implies strong on the catalog points") {
  for (const Point& p : {trivial_point(), sign_point(), scaling_point(), lex_point()}) {
    INFO(p.describe());
    const PointClassification c = classify_point(p, default_catalog(p.ext.b));
    if (c.rali.is_yes()) {
      CHECK(c.strong.is_yes());
      CHECK(c.stably_strong.verdict.is_yes());
    }
    const RaliResult r = is_rali(p);
    CHECK(r.cone_route.truth == r.adjoint_route.truth);
  }
}

TEST_CASE("products of points") {
  const Point t = trivial_point();
  const Point tt = point_product(t, t);
  CHECK(is_rali(tt).verdict.is_yes());
  const Point q = scaling_point();
  const Point qq = point_product(q, q);
  CHECK(is_strong(qq).is_yes());
  CHECK(is_rali(qq).verdict.is_no());

  // The terminal point has X = 0 and B = 0.
  const Group zero = Group::cyclic(1);
  const PreorderedGroup z0(zero, Cone::full(zero));
  const Point terminal = minimal_point(Extension::make(z0, z0, Action::trivial(zero, zero)));
  const Point st = point_product(sign_point(), terminal);
  const Group& c = st.ext.carrier;
  Window w;
  w.max_elements = 200;
  const Point s = sign_point();
  for (const auto& e : s.ext.carrier.window(w)) {
    const Element lifted = c.pair(Element::concat(s.ext.carrier.kernel_part(e), Element{0}),
                                  Element::concat(s.ext.carrier.base_part(e), Element{0}));
    CHECK(st.cone.contains(lifted).truth == s.cone.contains(e).truth);
  }
}

TEST_CASE("point morphisms and the short five lemma") {
  const Point q = scaling_point();
  const PointMorphism id = identity_morphism(q);
  CHECK(check_point_morphism(id, q, q).is_yes());
  const SsflResult r = ssfl_check(id, q, q);
  CHECK(r.hypotheses.is_yes());
  CHECK(r.verdict.is_yes());

  // Identity from the minimal point to the lex point of the same extension:
  // a, c are isomorphisms, b is bijective but its inverse is not monotone.
  const Extension e = Extension::make(zn(), zn(), Action::trivial(kZ, kZ));
  const Point lo(e, minimal_cone(e));
  const Point hi(e, lex_cone(e));
  const PointMorphism m = identity_morphism(lo);
  CHECK(check_point_morphism(m, lo, hi).is_yes());
  const SsflResult c = ssfl_check(m, lo, hi);
  CHECK(c.hypotheses.is_no());
  CHECK(c.b_iso.is_yes());
  REQUIRE(c.verdict.is_no());
  CHECK(has_value(c.verdict, Element{-1, 1}));

  // A square that fails to commute.
  const PointMorphism twisted{Homomorphism::scalar(kZ, 2), Homomorphism::identity(e.carrier),
                              Homomorphism::identity(kZ)};
  const Point t = trivial_point();
  CHECK(check_point_morphism(twisted, t, t).is_no());
}
