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

#include "doctest.h"
#include "oracles/brute.hpp"
#include "oracles/compat.hpp"
#include "oracles/random_ext.hpp"
#include "splitord/extensions/extensions.hpp"

using namespace splitord;

namespace {

const Group kZ = Group::free_abelian(1);
const Group kQ = Group::rational_vector(1);

Element rq(long n, long d = 1) { return Element(std::vector<Rational>{Rational(n, d)}); }
Element pair_q(Rational x, long b) { return Element(std::vector<Rational>{x, Rational(b)}); }

PreorderedGroup zn() { return PreorderedGroup(kZ, Cone::natural_orthant(kZ)); }
PreorderedGroup zfull() { return PreorderedGroup(kZ, Cone::full(kZ)); }
PreorderedGroup ztriv() { return PreorderedGroup(kZ, Cone::trivial(kZ)); }
PreorderedGroup qpos() { return PreorderedGroup(kQ, Cone::natural_orthant(kQ)); }

Extension trivial_zz() { return Extension::make(zn(), zn(), Action::trivial(kZ, kZ)); }
Extension sign_over(PreorderedGroup x, PreorderedGroup b) {
  return Extension::make(std::move(x), std::move(b), Action::sign(kZ, kZ));
}
Extension scaling2() { return Extension::make(qpos(), zn(), Action::scaling(kZ, kQ, 2)); }

bool has_witness(const Verdict& v, const std::string& label, const Element& value) {
  for (const auto& w : v.witnesses) {
    if (w.label == label && w.value == value) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("semidirect products") {
  const Extension s = sign_over(zn(), zfull());
  CHECK(s.carrier.add({1, 1}, {1, 1}) == Element{0, 2});
  const Extension q = scaling2();
  CHECK(q.carrier.add(pair_q(1, 1), pair_q(1, 0)) == pair_q(3, 1));
  const Extension t = trivial_zz();
  CHECK(t.carrier.is_abelian());
  CHECK(t.carrier.add({2, -1}, {3, 4}) == Element{5, 3});
  // A permutation of Z_3 that is not an automorphism.
  const Group z2 = Group::cyclic(2);
  const Group z3 = Group::cyclic(3);
  const Action bad = Action::finite_table(z2, z3, {{0, 1, 2}, {1, 0, 2}});
  CHECK_THROWS_AS(semidirect(z3, z2, bad), PreconditionError);
  CHECK_THROWS_AS(semidirect(z2, z3, Action::trivial(z2, z3)), StructuralError);
}

TEST_CASE("normalize recovers the action") {
  SUBCASE("direct product") {
    const Group a = Group::free_abelian(2);
    Matrix fm(1, 2, {Rational(0), Rational(1)});
    Matrix sm(2, 1, {Rational(0), Rational(1)});
    Matrix km(2, 1, {Rational(1), Rational(0)});
    const auto f = Homomorphism::linear(a, kZ, fm);
    const auto s = Homomorphism::linear(kZ, a, sm);
    const auto k = Homomorphism::linear(kZ, a, km);
    const Normalized n = normalize(a, f, s, k);
    CHECK(n.action.is_trivial());
    CHECK(n.verified.is_yes());
    for (long b = -3; b <= 3; ++b) CHECK(n.theta(s({b})) == Element{0, b});
    CHECK(n.theta({4, -2}) == Element{4, -2});
    const auto not_section = Homomorphism::linear(kZ, a, Matrix(2, 1, {Rational(0), Rational(2)}));
    CHECK_THROWS_AS(normalize(a, f, not_section, k), PreconditionError);
  }
  SUBCASE("S3 over Z2") {
    const Group s3 = Group::symmetric(3);
    const Group z2 = Group::cyclic(2);
    const Group z3 = Group::cyclic(3);
    const auto perms = Group::permutations(3);
    // Parity of each permutation, by counting inversions.
    std::vector<Element> parity;
    for (const auto& p : perms) {
      long inv = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j] ? 1 : 0;
      }
      parity.push_back(Element{inv % 2});
    }
    std::vector<Element> f_images;
    for (const auto& e : s3.elements()) f_images.push_back(parity[static_cast<std::size_t>(e[0])]);
    const auto f = Homomorphism::finite_table(s3, z2, f_images);
    // Index 1 is the transposition (0 2 1), index 3 the 3-cycle (1 2 0).
    const auto s = Homomorphism::generator_images(z2, s3, {Element{1}});
    const auto k = Homomorphism::generator_images(z3, s3, {Element{3}});
    REQUIRE(check_homomorphism(f).is_yes());
    REQUIRE(check_homomorphism(k).is_yes());
    const Normalized n = normalize(s3, f, s, k);
    CHECK(n.verified.is_yes());
    CHECK(n.action.kind() == ActionKind::kFiniteTable);
    for (const auto& x : z3.elements()) {
      CHECK(n.action.apply(Element{1}, x) == z3.neg(x));
      CHECK(n.action.apply(Element{0}, x) == x);
    }
    for (const auto& b : z2.elements()) CHECK(n.theta(s(b)) == n.carrier.pair(Element{0}, b));
  }
}

TEST_CASE("product and lex cones") {
  const Extension t = trivial_zz();
  CHECK(lex_cone(t).contains({-5, 1}).is_yes());
  CHECK(product_cone(t).contains({-5, 1}).is_no());
  CHECK(lex_cone(t).contains({-5, 0}).is_no());
  CHECK(lex_cone(t).contains({5, 0}).is_yes());
  CHECK(lex_cone(t).contains({5, -1}).is_no());
  const Extension f = Extension::make(zn(), zfull(), Action::trivial(kZ, kZ));
  for (long x = -3; x <= 3; ++x) {
    for (long b = -3; b <= 3; ++b) CHECK(lex_cone(f).contains({x, b}).is_yes() == (x >= 0));
  }
}

TEST_CASE("is_compatible") {
  const Extension t = trivial_zz();
  CHECK(is_compatible(product_cone(t), t).is_yes());
  CHECK(is_compatible(lex_cone(t), t).is_yes());
  CHECK(is_compatible(Cone::full(t.carrier), t, CompatMode::kInterval).is_no());
  const Verdict full_def = is_compatible(Cone::full(t.carrier), t, CompatMode::kDefinitional);
  CHECK(full_def.is_no());
  CHECK((has_witness(full_def, "x", Element{0, -1}) || !full_def.witnesses.empty()));

  const Extension s = sign_over(zn(), zfull());
  for (auto mode : {CompatMode::kInterval, CompatMode::kDefinitional, CompatMode::kBoth}) {
    const Verdict v = is_compatible(lex_cone(s), s, mode);
    CHECK(v.is_no());
    CHECK(v.witnesses.size() >= 1);
  }
  // The witness pair really leaves the lex cone.
  const Verdict v = is_compatible(lex_cone(s), s, CompatMode::kInterval);
  REQUIRE(v.witnesses.size() == 2);
  const Cone lex = lex_cone(s);
  CHECK(lex.contains(v.witnesses[0].value).is_yes());
  CHECK(lex.contains(v.witnesses[1].value).is_yes());
  const Element sum = v.note.find("conjugation") != std::string::npos
                          ? s.carrier.conjugate(v.witnesses[0].value, v.witnesses[1].value)
                          : s.carrier.add(v.witnesses[0].value, v.witnesses[1].value);
  CHECK(lex.contains(sum).is_no());

  const Extension q = scaling2();
  CHECK(is_compatible(minimal_cone(q), q).is_yes());
  CHECK(is_compatible(lex_cone(q), q).is_yes());
  CHECK_THROWS_AS(is_compatible(Cone::full(kZ), t), StructuralError);
}

TEST_CASE("compatible_exists") {
  const CompatibleExistence sign = compatible_exists(sign_over(zn(), zfull()));
  CHECK(sign.verdict.is_no());
  CHECK(sign.verdict.scope == Scope::kExact);
  CHECK(has_witness(sign.verdict, "b", Element{1}));
  CHECK_FALSE(sign.certificate.has_value());

  const CompatibleExistence scal = compatible_exists(scaling2());
  CHECK(scal.verdict.is_yes());
  CHECK(scal.verdict.scope == Scope::kExact);
  REQUIRE(scal.certificate.has_value());
  CHECK(scal.certificate->contains(pair_q(-7, 1)).is_yes());

  CHECK(compatible_exists(trivial_zz()).verdict.is_yes());
  CHECK(compatible_exists(Extension::make(qpos(), zfull(), Action::trivial(kZ, kQ))).verdict.is_yes());
  // A unit of B acting non-trivially up to equivalence.
  const Verdict unit = compatible_exists(Extension::make(qpos(), zfull(), Action::scaling(kZ, kQ, 2))).verdict;
  CHECK(unit.is_no());
  CHECK(has_witness(unit, "u", Element{1}));
  // Negation is monotone for the full and trivial cones.
  CHECK(compatible_exists(sign_over(zfull(), zfull())).verdict.is_yes());
  CHECK(compatible_exists(sign_over(ztriv(), zn())).verdict.is_yes());
}

TEST_CASE("lex compatibility cross-checked on generators and windows") {
  // Monotonicity of phi_b on +-generators agrees with a direct window check.
  const SaturationBudget budget;
  for (const Extension& e : {trivial_zz(), sign_over(zn(), zfull()), sign_over(zfull(), zn()), scaling2()}) {
    const bool gen = !compatible_exists(e, budget).verdict.is_no();
    bool window_mono = true;
    for (const auto& b : e.b.group.window(Window{}.with_integer_bound(4))) {
      window_mono = window_mono && !is_monotone(e.phi(b), e.x, e.x, budget).is_no();
    }
    bool units_ok = true;
    for (const auto& u : window_members(e.b.cone, budget)) {
      if (!e.b.cone.contains(e.b.group.neg(u)).is_yes()) continue;
      for (const auto& x : e.x.group.window(Window{}.with_integer_bound(4).with_max_elements(40))) {
        units_ok = units_ok && !sim(e.x, x, e.action.apply(u, x)).is_no();
      }
    }
    CHECK(gen == (window_mono && units_ok));
    CHECK(gen == is_compatible(lex_cone(e), e).is_yes());
  }
}

TEST_CASE("minimal cone") {
  const Extension q = scaling2();
  const Cone m = minimal_cone(q);
  const Verdict v = m.contains(pair_q(-1, 1));
  CHECK(v.is_yes());
  CHECK(m.contains(pair_q(Rational(-5, 3), 1)).is_yes());
  CHECK(m.contains(pair_q(-1, 0)).is_no());
  // r = x / (1 - 2^b) conjugates (0, b) to (x, b).
  for (long b = 1; b <= 3; ++b) {
    const Rational x(-3, 2);
    const Rational r = x / (1 - power(Rational(2), b));
    CHECK(q.carrier.conjugate(pair_q(r, 0), pair_q(0, b)) == pair_q(x, b));
  }

  const Extension t = trivial_zz();
  const Cone mt = minimal_cone(t);
  const Cone pt = product_cone(t);
  for (long x = -3; x <= 3; ++x) {
    for (long b = -3; b <= 3; ++b) CHECK(mt.contains({x, b}).is_yes() == pt.contains({x, b}).is_yes());
  }

  const Extension s = sign_over(ztriv(), zn());
  const Cone ms = minimal_cone(s);
  CHECK(ms.contains({2, 1}).is_yes());
  const Verdict odd = ms.contains({1, 1});
  CHECK_FALSE(odd.is_yes());
  CHECK(odd.is_no());
  CHECK(ms.contains({0, -1}).is_no());
  CHECK_THROWS_AS(minimal_cone(sign_over(zn(), zfull())), PreconditionError);
}

TEST_CASE("minimal cone lies inside other compatible cones") {
  const SaturationBudget budget;
  for (const Extension& e : {trivial_zz(), sign_over(ztriv(), zn()), scaling2()}) {
    const Cone m = minimal_cone(e);
    const Cone lex = lex_cone(e);
    for (const auto& a : e.carrier.window(Window{}.with_integer_bound(3).with_max_elements(200))) {
      if (m.contains(a, budget).is_yes()) CHECK(lex.contains(a, budget).is_yes());
      if (product_cone(e).contains(a, budget).is_yes()) CHECK(m.contains(a, budget).is_yes());
    }
  }
}

TEST_CASE("is_minimal_equal_product") {
  CHECK(is_minimal_equal_product(trivial_zz()).is_yes());
  const Verdict q = is_minimal_equal_product(scaling2());
  CHECK(q.is_no());
  CHECK(has_witness(q, "b", Element{1}));
  CHECK(has_witness(q, "x", rq(1)));
  CHECK(is_minimal_equal_product(sign_over(zfull(), ztriv())).is_yes());
  CHECK_FALSE(is_minimal_equal_product(sign_over(ztriv(), zn())).is_yes());
}

TEST_CASE("family validation") {
  const Action triv = Action::trivial(kZ, kZ);
  const auto doubling = ConeFamily::up_sets(zn(), zn(), {0, 1, 2, 4});
  const FamilyValidation ok = validate_family(doubling, triv);
  CHECK(ok.verdict.is_yes());
  CHECK(ok.verdict.scope == Scope::kExact);
  CHECK(ok.conjugation_invariance.is_yes());

  const auto flat = ConeFamily::up_sets(zn(), zn(), {0, 1, 1});
  const FamilyValidation bad = validate_family(flat, triv);
  CHECK(bad.verdict.is_no());
  CHECK(bad.conditions[2].is_no());
  CHECK(has_witness(bad.conditions[2], "b", Element{1}));
  CHECK(has_witness(bad.conditions[2], "b'", Element{1}));

  const auto shifted = ConeFamily::up_sets(zn(), zn(), {1, 2});
  const FamilyValidation x0 = validate_family(shifted, triv);
  CHECK(x0.conditions[1].is_no());
  CHECK(x0.verdict.is_no());

  const auto tail0 = ConeFamily::up_sets(zn(), zn(), {0, 1}, ExtNat(0));
  CHECK(validate_family(tail0, triv).conditions[2].is_no());
  CHECK(validate_family(ConeFamily::up_sets(zn(), zn(), {0, 0}, ExtNat(0)), triv).verdict.is_yes());
}

TEST_CASE("fast family validation agrees with the element-wise check") {
  std::mt19937 rng(7);
  const Action triv = Action::trivial(kZ, kZ);
  const Extension e = trivial_zz();
  SaturationBudget budget;
  budget.window = Window{}.with_integer_bound(6);
  std::uniform_int_distribution<int> digit(0, 4);
  for (int round = 0; round < 40; ++round) {
    std::vector<ExtNat> x{ExtNat(0)};
    for (int j = 0; j < 3; ++j) {
      const int d = digit(rng);
      x.push_back(d == 4 ? ExtNat::infinity() : ExtNat(d));
    }
    const auto fam = ConeFamily::up_sets(zn(), zn(), x);
    ConeFamily generic = cone_to_family(family_to_cone(fam, e), e, budget.window);
    // Force the element-wise path.
    generic.kind = FamilyKind::kFromCone;
    generic.from_cone = [fam](const Element& a, const Element& b, const SaturationBudget& bud) {
      return fam.member(a, b, bud);
    };
    const FamilyValidation fast = validate_family(fam, triv, budget);
    const FamilyValidation slow = validate_family(generic, triv, budget);
    CHECK(fast.verdict.is_yes() == slow.verdict.is_yes());
    CHECK(fast.verdict.is_yes() == !superadditivity_failure(x).has_value());
    if (fast.verdict.is_yes()) CHECK(slow.conjugation_invariance.is_yes());
  }
}

TEST_CASE("explicit families on finite carriers") {
  std::mt19937 rng(11);
  int compatible_seen = 0;
  for (int round = 0; round < 30; ++round) {
    const Group x = oracle::random_group(rng, 4);
    const Group b = oracle::random_group(rng, 4);
    const Action a = oracle::random_action(rng, b, x);
    const Extension e = Extension::make(PreorderedGroup(x, oracle::random_cone(rng, x)),
                                        PreorderedGroup(b, oracle::random_cone(rng, b)), a);
    const Cone p = product_cone(e);
    const bool compat = is_compatible(p, e).is_yes();
    const ConeFamily fam = cone_to_family(p, e);
    CHECK(fam.kind == FamilyKind::kExplicit);
    const FamilyValidation v = validate_family(fam, a);
    CHECK(v.verdict.is_yes() == compat);
    if (compat) {
      ++compatible_seen;
      CHECK(v.conjugation_invariance.is_yes());
      const Cone back = family_to_cone(fam, e);
      for (const auto& el : e.carrier.elements()) CHECK(back.contains(el).is_yes() == p.contains(el).is_yes());
    }
    // Interval characterisation on the whole carrier versus the oracle.
    const auto px = *e.x.cone.finite_members();
    const auto pb = *e.b.cone.finite_members();
    const oracle::ExtTable table(e.carrier, px, pb);
    std::vector<bool> mask;
    for (const auto& el : table.carrier.els) mask.push_back(p.contains(el).is_yes());
    CHECK(table.compatible(mask) == compat);
  }
  CHECK(compatible_seen > 0);
}

TEST_CASE("family and cone round trips") {
  const Extension t = trivial_zz();
  const ConeFamily prod = cone_to_family(product_cone(t), t);
  REQUIRE(prod.kind == FamilyKind::kUpSetSequence);
  for (const auto& v : prod.sequence) CHECK(v == ExtNat(0));
  CHECK(prod.tail == ExtNat(0));
  const ConeFamily lex = cone_to_family(lex_cone(t), t);
  REQUIRE(lex.kind == FamilyKind::kUpSetSequence);
  CHECK(lex.sequence[0] == ExtNat(0));
  for (std::size_t j = 1; j < lex.sequence.size(); ++j) CHECK(lex.sequence[j].is_infinite());

  const auto linear = ConeFamily::up_sets(zn(), zn(), {0, 1, 2, 3});
  const Cone c = family_to_cone(linear, t);
  CHECK(c.contains({-1, 1}).is_yes());
  CHECK(c.contains({-2, 1}).is_no());
  CHECK(c.contains({-3, 2}).is_no());
  CHECK(c.contains({-2, 2}).is_yes());
  CHECK(c.contains({0, -1}).is_no());
  const ConeFamily back = cone_to_family(c, t, Window{}.with_integer_bound(4));
  REQUIRE(back.kind == FamilyKind::kUpSetSequence);
  REQUIRE(back.sequence.size() == 5);
  for (std::size_t j = 0; j < 4; ++j) CHECK(back.sequence[j] == linear.sequence[j]);
  CHECK(back.sequence[4].is_infinite());
  CHECK(is_compatible(c, t, CompatMode::kInterval).is_yes());
}

TEST_CASE("compatible cone lattices") {
  // Independent count: all (x1..xN) in {0..M, inf}^N with x_{i+j} >= x_i + x_j.
  auto brute = [](std::size_t n, long m) {
    const long inf = 1000000;
    std::size_t count = 0;
    std::vector<long> x(n + 1, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i > n) {
        for (std::size_t a = 0; a <= n; ++a) {
          for (std::size_t b = 0; a + b <= n; ++b) {
            const long lhs = x[a + b];
            const long rhs = (x[a] >= inf || x[b] >= inf) ? inf : x[a] + x[b];
            if (lhs < rhs) return;
          }
        }
        ++count;
        return;
      }
      for (long v = 0; v <= m + 1; ++v) {
        x[i] = v == m + 1 ? inf : v;
        rec(i + 1);
      }
    };
    rec(1);
    return count;
  };
  CHECK(brute(2, 2) == 8);
  CHECK(brute(3, 4) == 33);
  const Extension t = trivial_zz();
  const LatticeReport r22 = enumerate_compatible_cones(t, LatticeScope::superadditive(2, 2));
  const LatticeReport r34 = enumerate_compatible_cones(t, LatticeScope::superadditive(3, 4));
  CHECK(r22.count() == brute(2, 2));
  CHECK(r34.count() == brute(3, 4));
  CHECK(r34.count() > r22.count());
  CHECK(r22.candidates == 16);
  CHECK(r34.meet_closed);
  CHECK(r34.join_closed);
  for (const auto& entry : r34.cones) CHECK(entry.compatible.is_yes());
  for (std::size_t i = 1; i < r34.cones.size(); ++i) CHECK(r34.cones[i - 1].window_size <= r34.cones[i].window_size);
  CHECK_THROWS_AS(enumerate_compatible_cones(scaling2(), LatticeScope::superadditive(2, 2)), UnsupportedError);

  std::mt19937 rng(5);
  for (int round = 0; round < 20; ++round) {
    const Group x = oracle::random_group(rng, 4);
    const Group b = oracle::random_group(rng, 3);
    const Extension e = Extension::make(PreorderedGroup(x, oracle::random_cone(rng, x)),
                                        PreorderedGroup(b, oracle::random_cone(rng, b)),
                                        oracle::random_action(rng, b, x));
    const LatticeReport r = enumerate_compatible_cones(e, LatticeScope::exhaustive());
    const bool exists = compatible_exists(e).verdict.is_yes();
    CHECK(r.count() == (exists ? 1U : 0U));
    if (exists) {
      for (const auto& el : e.carrier.elements()) {
        CHECK(r.cones[0].cone.contains(el).is_yes() == product_cone(e).contains(el).is_yes());
      }
    }
  }
}
