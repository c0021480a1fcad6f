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

#include <random>
#include <set>
#include <thread>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "splitord/kernel/kernel.hpp"

using namespace splitord;

namespace {

Group sign_zz() {
  const Group z = Group::free_abelian(1);
  return Group::semidirect(z, z, Action::sign(z, z));
}

}  // namespace

TEST_CASE("addition") {
  const Group z2 = Group::free_abelian(2);
  CHECK(eval_add(z2, {1, 2}, {3, -1}) == Element{4, 1});
  CHECK(eval_add(sign_zz(), {1, 1}, {1, 0}) == Element{0, 1});
  const Group c6 = Group::cyclic(6);
  CHECK(eval_add(c6, {4}, {5}) == Element{3});
  CHECK_THROWS_AS(eval_add(z2, {1}, {1, 2}), StructuralError);
}

TEST_CASE("negation") {
  const Group z2 = Group::free_abelian(2);
  CHECK(eval_neg(z2, {1, -2}) == Element{-1, 2});
  const Group s = sign_zz();
  CHECK(eval_neg(s, {1, 1}) == Element{1, -1});
  CHECK(eval_add(s, {1, 1}, {1, -1}) == s.zero());
  CHECK(eval_neg(Group::cyclic(6), {4}) == Element{2});
}

TEST_CASE("conjugation") {
  const Group z2 = Group::free_abelian(2);
  CHECK(conjugate(z2, {3, 4}, {1, -1}) == Element{1, -1});
  const Group s = sign_zz();
  for (long y = -3; y <= 3; ++y) {
    for (long x = -3; x <= 3; ++x) CHECK(conjugate(s, {y, 1}, {x, 0}) == Element{-x, 0});
  }
  // In S3 the transpositions are the elements of order 2; a 3-cycle
  // conjugates one transposition to a different one.
  const Group s3 = Group::symmetric(3);
  const auto& view = s3.finite_view();
  std::vector<std::size_t> transpositions;
  std::vector<std::size_t> three_cycles;
  for (std::size_t i = 0; i < view.size(); ++i) {
    if (view.element_order(i) == 2) transpositions.push_back(i);
    if (view.element_order(i) == 3) three_cycles.push_back(i);
  }
  REQUIRE(transpositions.size() == 3);
  REQUIRE(three_cycles.size() == 2);
  const Element t = view.element(transpositions[0]);
  const Element c = view.element(three_cycles[0]);
  const Element r = conjugate(s3, c, t);
  CHECK(view.element_order(view.index(r)) == 2);
  CHECK_FALSE(r == t);
}

TEST_CASE("group laws on windows and finite groups") {
  std::vector<Group> groups = {Group::cyclic(6), Group::symmetric(3), Group::free_abelian(2),
                               Group::rational_vector(1), sign_zz(), Group::positive_rationals(),
                               Group::product({Group::cyclic(2), Group::free_abelian(1)})};
  const Group q = Group::rational_vector(1);
  groups.push_back(Group::semidirect(q, Group::free_abelian(1),
                                     Action::scaling(Group::free_abelian(1), q, 2)));
  Window w;
  w.integer_bound = 2;
  w.numerator_bound = 2;
  w.denominator_bound = 2;
  w.max_elements = 14;
  for (const auto& g : groups) {
    CAPTURE(g.describe());
    const auto els = g.is_finite() ? g.elements() : g.window(w);
    REQUIRE_FALSE(els.empty());
    for (const auto& a : els) {
      CHECK(g.add(g.zero(), a) == a);
      CHECK(g.add(a, g.zero()) == a);
      CHECK(g.is_zero(g.add(a, g.neg(a))));
      CHECK(g.parse(g.format(a)) == a);
      for (const auto& b : els) {
        for (const auto& c : els) {
          CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
          CHECK(g.conjugate(a, g.add(b, c)) == g.add(g.conjugate(a, b), g.conjugate(a, c)));
        }
      }
    }
  }
}

TEST_CASE("semidirect law and closed-form inverse") {
  const Group q = Group::rational_vector(1);
  const Group z = Group::free_abelian(1);
  const Action phi = Action::scaling(z, q, 2);
  const Group g = Group::semidirect(q, z, phi);
  CHECK(g.add({1, 1}, {1, 0}) == Element{3, 1});
  for (const auto& a : g.window(Window{}.with_max_elements(30))) {
    for (const auto& b : g.window(Window{}.with_max_elements(30))) {
      const Element x = q.add(g.kernel_part(a), phi.apply(g.base_part(a), g.kernel_part(b)));
      const Element y = z.add(g.base_part(a), g.base_part(b));
      CHECK(g.add(a, b) == g.pair(x, y));
    }
  }
  // Conjugation formula (y,a)+(x,b)-(y,a) = (y + phi_a(x) - phi_{a+b-a}(y), a+b-a).
  const Group s = sign_zz();
  for (const auto& ya : s.window(Window{}.with_integer_bound(2))) {
    for (const auto& xb : s.window(Window{}.with_integer_bound(2))) {
      const Element y = s.kernel_part(ya), a = s.base_part(ya);
      const Element x = s.kernel_part(xb), b = s.base_part(xb);
      const Element c = z.conjugate(a, b);
      const Action& act = s.action();
      const Element kx = z.sub(z.add(y, act.apply(a, x)), act.apply(c, y));
      CHECK(s.conjugate(ya, xb) == s.pair(kx, c));
    }
  }
}

TEST_CASE("literals") {
  const Group q = Group::rational_vector(1);
  CHECK(q.parse({"2/4"}) == Element(std::vector<Rational>{Rational(1, 2)}));
  CHECK(q.parse({"−1/2"}) == Element(std::vector<Rational>{Rational(-1, 2)}));
  CHECK_THROWS_AS(q.parse({"1/0"}), ParseError);
  const Group c6 = Group::cyclic(6);
  CHECK(c6.format({4}) == std::vector<std::string>{"r4"});
  CHECK(c6.parse({"r4"}) == Element{4});
  CHECK_THROWS(c6.parse({"r6"}));
  const Group z = Group::free_abelian(1);
  CHECK_THROWS(z.parse({"1/2"}));
}

TEST_CASE("cayley validation") {
  CHECK_THROWS_AS(Group::cayley({{0, 1}, {1, 1}}, 0), StructuralError);
  CHECK_THROWS_AS(Group::cayley({{0, 1}, {0, 1}}, 0), StructuralError);
  CHECK_NOTHROW(Group::cayley({{0, 1}, {1, 0}}, 0));
}

TEST_CASE("automorphism enumeration") {
  CHECK(enumerate_automorphisms(Group::cyclic(1)).size() == 1);
  const std::vector<Group> groups = {Group::cyclic(6), Group::product({Group::cyclic(2), Group::cyclic(2)}),
                                     Group::symmetric(3), Group::cyclic(8), Group::cyclic(5)};
  for (const auto& g : groups) {
    CAPTURE(g.describe());
    const auto auts = enumerate_automorphisms(g);
    CHECK(auts.size() == oracle::count_automorphisms(g));
    // Identity first, closed under composition and inverse.
    for (const auto& a : g.elements()) CHECK(auts[0](a) == a);
    std::set<std::vector<Element>> tables;
    for (const auto& h : auts) {
      std::vector<Element> t;
      for (const auto& a : g.elements()) t.push_back(h(a));
      tables.insert(t);
    }
    CHECK(tables.size() == auts.size());
    for (const auto& h1 : auts) {
      const auto inv = h1.inverse();
      REQUIRE(inv.has_value());
      std::vector<Element> ti;
      for (const auto& a : g.elements()) ti.push_back((*inv)(a));
      CHECK(tables.count(ti) == 1);
      for (const auto& h2 : auts) {
        std::vector<Element> t;
        for (const auto& a : g.elements()) t.push_back(h1(h2(a)));
        CHECK(tables.count(t) == 1);
      }
    }
  }
  CHECK(enumerate_automorphisms(Group::cyclic(6)).size() == 2);
  CHECK(enumerate_automorphisms(Group::product({Group::cyclic(2), Group::cyclic(2)})).size() == 6);
  CHECK_THROWS_AS(enumerate_automorphisms(Group::free_abelian(1)), UnsupportedError);
}

TEST_CASE("homomorphism enumeration") {
  const Group z = Group::free_abelian(1);
  const auto zz = enumerate_homomorphisms(z, z, Window{}.with_integer_bound(3));
  REQUIRE(zz.size() == 7);
  std::set<Rational> slopes;
  for (const auto& h : zz) slopes.insert(h({1})[0]);
  CHECK(slopes == std::set<Rational>{-3, -2, -1, 0, 1, 2, 3});
  const auto z2z = enumerate_homomorphisms(Group::cyclic(2), z);
  REQUIRE(z2z.size() == 1);
  CHECK(z2z[0]({1}) == Element{0});
  const Group v4 = Group::product({Group::cyclic(2), Group::cyclic(2)});
  CHECK(enumerate_homomorphisms(Group::cyclic(2), v4).size() == 4);
  const std::vector<std::pair<Group, Group>> pairs = {{Group::cyclic(2), v4},
                                                      {Group::cyclic(6), Group::cyclic(4)},
                                                      {Group::symmetric(3), Group::cyclic(2)},
                                                      {v4, Group::symmetric(3)}};
  for (const auto& [a, b] : pairs) {
    CHECK(enumerate_homomorphisms(a, b).size() == oracle::count_homomorphisms(a, b));
  }
}

TEST_CASE("homomorphism checks") {
  const Group z2 = Group::free_abelian(2);
  const auto lin = Homomorphism::linear(z2, z2, Matrix(2, 2, {1, 2, 3, 4}));
  CHECK(check_homomorphism(lin).is_yes());
  const auto bad = Homomorphism::finite_table(Group::cyclic(2), Group::cyclic(3), {Element{0}, Element{1}});
  const Verdict v = check_homomorphism(bad);
  REQUIRE(v.is_no());
  REQUIRE(v.witnesses.size() == 2);
  CHECK(v.witnesses[0].value == Element{1});
  CHECK(v.witnesses[1].value == Element{1});
  const auto half = Homomorphism::generator_images(Group::free_abelian(1), Group::rational_vector(1),
                                                   {Element(std::vector<Rational>{Rational(1, 2)})});
  CHECK(check_homomorphism(half).is_yes());
  CHECK(half({3}) == Element(std::vector<Rational>{Rational(3, 2)}));
  const auto square = Homomorphism::function(Group::free_abelian(1), Group::free_abelian(1), "sq",
                                             [](const Element& a) { return Element({a[0] * a[0]}); });
  CHECK(check_homomorphism(square).is_no());
}

TEST_CASE("action laws") {
  const Group z3 = Group::cyclic(3);
  const Group c2 = Group::cyclic(2);
  const Action inversion = Action::finite_table(c2, z3, {{0, 1, 2}, {0, 2, 1}});
  CHECK(check_action_laws(inversion).is_yes());
  CHECK(check_action_laws(inversion).scope == Scope::kExact);
  // A permutation that moves 0 is accepted structurally but breaks additivity.
  CHECK(check_action_laws(Action::finite_table(c2, z3, {{0, 1, 2}, {1, 0, 2}})).is_no());
  const Group z = Group::free_abelian(1);
  const Group z2 = Group::free_abelian(2);
  const Action shear = Action::matrix(z, z2, {Matrix(2, 2, {1, 1, 0, 1})});
  CHECK(check_action_laws(shear, Window{}.with_integer_bound(2)).is_yes());
  CHECK(shear.apply({2}, {0, 1}) == Element{2, 1});
  CHECK_THROWS_AS(Action::matrix(z, z2, {Matrix(2, 2, {2, 0, 0, 1})}), StructuralError);
  // A table that is not a homomorphism from B.
  const Group c3 = Group::cyclic(3);
  const Action broken = Action::finite_table(c2, c3, {{0, 2, 1}, {0, 2, 1}});
  CHECK(check_action_laws(broken).is_no());
}

TEST_CASE("positive rationals") {
  const Group p = Group::positive_rationals();
  const Element two(std::vector<Rational>{2});
  const Element half(std::vector<Rational>{Rational(1, 2)});
  CHECK(p.zero() == Element(std::vector<Rational>{1}));
  CHECK(p.neg(two) == half);
  CHECK(p.add(two, half) == p.zero());
  CHECK_THROWS(p.check(Element(std::vector<Rational>{-1})));
}

TEST_CASE("kernel values are shareable across threads") {
  const Group g = Group::symmetric(4);
  std::vector<std::thread> pool;
  std::vector<std::size_t> sizes(4);
  for (std::size_t i = 0; i < 4; ++i) {
    pool.emplace_back([&, i] { sizes[i] = g.finite_view().size(); });
  }
  for (auto& t : pool) t.join();
  for (auto s : sizes) CHECK(s == 24);
}
