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

#include "splitord/kernel/group.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>

#include "splitord/kernel/action.hpp"
#include "splitord/kernel/errors.hpp"
#include "splitord/kernel/finite.hpp"

namespace splitord {

struct Group::Node {
  GroupKind kind = GroupKind::kFreeAbelian;
  std::string name;
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::vector<Group> factors;
  std::optional<Action> action;
  std::vector<CoordInfo> coords;
  std::vector<std::size_t> offsets;
  bool finite = false;

  mutable std::once_flag view_once;
  mutable std::unique_ptr<FiniteView> view;
};

namespace {

constexpr std::size_t kPrimes[] = {2, 3, 5, 7, 11, 13};

std::size_t residue(const Rational& q) { return static_cast<std::size_t>(*to_int64(q)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw StructuralError(what);
}

}  // namespace

Window Window::doubled() const {
  Window w = *this;
  w.integer_bound *= 2;
  w.numerator_bound *= 2;
  w.denominator_bound *= 2;
  w.max_elements *= 2;
  return w;
}

Group Group::cyclic(std::size_t n) {
  require(n >= 1, "cyclic group order must be positive");
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::kFiniteCyclic;
  node->n = n;
  node->finite = true;
  node->coords = {CoordInfo{CoordKind::kResidue, n}};
  node->name = "Z_" + std::to_string(n);
  return Group(node);
}

Group Group::cayley(std::vector<std::vector<std::size_t>> table, std::size_t identity,
                    std::string name) {
  const std::size_t n = table.size();
  require(n >= 1, "Cayley table must be non-empty");
  require(identity < n, "Cayley identity index out of range");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    require(table[i].size() == n, "Cayley table must be square");
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t v = table[i][j];
      require(v < n, "Cayley table entry out of range");
      require(!seen[v], "Cayley table row " + std::to_string(i) + " is not a permutation");
      seen[v] = true;
      if (v == identity) inverse[i] = j;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      require(!seen[table[i][j]],
              "Cayley table column " + std::to_string(j) + " is not a permutation");
      seen[table[i][j]] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    require(table[identity][i] == i && table[i][identity] == i,
            "Cayley identity does not act neutrally on " + std::to_string(i));
    require(inverse[i] < n && table[inverse[i]][i] == identity,
            "Cayley element " + std::to_string(i) + " has no two-sided inverse");
  }
  if (n <= 128) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          require(table[table[a][b]][c] == table[a][table[b][c]],
                  "Cayley table is not associative at (" + std::to_string(a) + ", " +
                      std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::kFiniteCayley;
  node->n = n;
  node->table = std::move(table);
  node->identity = identity;
  node->inverse = std::move(inverse);
  node->finite = true;
  node->coords = {CoordInfo{CoordKind::kCayleyIndex, n}};
  node->name = name.empty() ? "Cayley(" + std::to_string(n) + ")" : std::move(name);
  return Group(node);
}

Group Group::free_abelian(std::size_t rank) {
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::kFreeAbelian;
  node->n = rank;
  node->coords.assign(rank, CoordInfo{CoordKind::kInteger, 0});
  node->finite = rank == 0;
  node->name = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  return Group(node);
}

Group Group::rational_vector(std::size_t rank) {
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::kRationalVector;
  node->n = rank;
  node->coords.assign(rank, CoordInfo{CoordKind::kRational, 0});
  node->finite = rank == 0;
  node->name = rank == 1 ? "Q" : "Q^" + std::to_string(rank);
  return Group(node);
}

Group Group::positive_rationals() {
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::kPositiveRationals;
  node->n = 1;
  node->coords = {CoordInfo{CoordKind::kPositiveRational, 0}};
  node->name = "Q>0";
  return Group(node);
}

Group Group::product(std::vector<Group> factors) {
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::kDirectProduct;
  node->finite = true;
  std::size_t offset = 0;
  std::string name = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    node->offsets.push_back(offset);
    offset += factors[i].arity();
    const auto& c = factors[i].coordinates();
    node->coords.insert(node->coords.end(), c.begin(), c.end());
    node->finite = node->finite && factors[i].is_finite();
    if (i != 0) name += " x ";
    name += factors[i].describe();
  }
  node->name = name + ")";
  node->factors = std::move(factors);
  return Group(node);
}

Group Group::semidirect(Group kernel, Group base, Action action) {
  require(action.acted().same_as(kernel), "action does not act on the kernel " + kernel.describe());
  require(action.acting().same_as(base), "action is not by the base " + base.describe());
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::kSemidirect;
  node->offsets = {0, kernel.arity()};
  node->coords = kernel.coordinates();
  node->coords.insert(node->coords.end(), base.coordinates().begin(), base.coordinates().end());
  node->finite = kernel.is_finite() && base.is_finite();
  node->name = "(" + kernel.describe() + " ⋊ " + base.describe() + ")";
  node->factors = {std::move(kernel), std::move(base)};
  node->action = std::move(action);
  return Group(node);
}

std::vector<std::vector<std::size_t>> Group::permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Group Group::symmetric(std::size_t n) {
  const auto perms = permutations(n);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> table(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<std::size_t> c(n);
      for (std::size_t k = 0; k < n; ++k) c[k] = perms[i][perms[j][k]];
      table[i][j] = index.at(c);
    }
  }
  return cayley(std::move(table), 0, "S" + std::to_string(n));
}

GroupKind Group::kind() const { return node_->kind; }
std::size_t Group::arity() const { return node_->coords.size(); }
const std::vector<CoordInfo>& Group::coordinates() const { return node_->coords; }
bool Group::is_finite() const { return node_->finite; }
const std::string& Group::name() const { return node_->name; }
std::string Group::describe() const { return node_->name; }

std::size_t Group::order() const {
  if (!is_finite()) throw UnsupportedError("order of infinite group " + describe());
  switch (kind()) {
    case GroupKind::kFiniteCayley:
    case GroupKind::kFiniteCyclic:
      return node_->n;
    case GroupKind::kFreeAbelian:
    case GroupKind::kRationalVector:
      return 1;
    default: {
      std::size_t total = 1;
      for (const auto& f : node_->factors) total *= f.order();
      return total;
    }
  }
}

bool Group::is_abelian() const {
  switch (kind()) {
    case GroupKind::kFiniteCayley:
      for (std::size_t i = 0; i < node_->n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (node_->table[i][j] != node_->table[j][i]) return false;
        }
      }
      return true;
    case GroupKind::kDirectProduct:
      return std::all_of(node_->factors.begin(), node_->factors.end(),
                         [](const Group& f) { return f.is_abelian(); });
    case GroupKind::kSemidirect:
      return kernel().is_abelian() && base().is_abelian() && action().is_trivial();
    default:
      return true;
  }
}

std::size_t Group::rank() const { return node_->n; }
std::size_t Group::modulus() const { return node_->n; }
const std::vector<std::vector<std::size_t>>& Group::table() const { return node_->table; }
std::size_t Group::identity_index() const { return node_->identity; }
const std::vector<Group>& Group::factors() const { return node_->factors; }

const Group& Group::kernel() const {
  if (kind() != GroupKind::kSemidirect) throw StructuralError(describe() + " is not a semidirect product");
  return node_->factors[0];
}
const Group& Group::base() const {
  if (kind() != GroupKind::kSemidirect) throw StructuralError(describe() + " is not a semidirect product");
  return node_->factors[1];
}
const Action& Group::action() const {
  if (kind() != GroupKind::kSemidirect) throw StructuralError(describe() + " is not a semidirect product");
  return *node_->action;
}

Element Group::zero() const {
  switch (kind()) {
    case GroupKind::kFiniteCayley:
      return Element(std::vector<Rational>{Rational(static_cast<long>(node_->identity))});
    case GroupKind::kPositiveRationals:
      return Element(std::vector<Rational>{Rational(1)});
    case GroupKind::kDirectProduct:
    case GroupKind::kSemidirect: {
      std::vector<Rational> out;
      for (const auto& f : node_->factors) {
        const Element z = f.zero();
        out.insert(out.end(), z.vector().begin(), z.vector().end());
      }
      return Element(std::move(out));
    }
    default:
      return Element::zeros(arity());
  }
}

Element Group::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  switch (kind()) {
    case GroupKind::kFiniteCayley:
      return Element(std::vector<Rational>{
          Rational(static_cast<long>(node_->table[residue(a[0])][residue(b[0])]))});
    case GroupKind::kFiniteCyclic:
      return Element(std::vector<Rational>{
          Rational(static_cast<long>((residue(a[0]) + residue(b[0])) % node_->n))});
    case GroupKind::kFreeAbelian:
    case GroupKind::kRationalVector: {
      std::vector<Rational> out(arity());
      for (std::size_t i = 0; i < arity(); ++i) out[i] = a[i] + b[i];
      return Element(std::move(out));
    }
    case GroupKind::kPositiveRationals:
      return Element(std::vector<Rational>{a[0] * b[0]});
    case GroupKind::kDirectProduct: {
      std::vector<Rational> out;
      out.reserve(arity());
      for (std::size_t i = 0; i < node_->factors.size(); ++i) {
        const Element s = node_->factors[i].add(factor_part(a, i), factor_part(b, i));
        out.insert(out.end(), s.vector().begin(), s.vector().end());
      }
      return Element(std::move(out));
    }
    case GroupKind::kSemidirect: {
      const Group& x = kernel();
      const Group& bg = base();
      const Element xa = kernel_part(a);
      const Element ba = base_part(a);
      const Element xs = x.add(xa, action().apply(ba, kernel_part(b)));
      return Element::concat(xs, bg.add(ba, base_part(b)));
    }
  }
  throw StructuralError("unreachable group kind");
}

Element Group::neg(const Element& a) const {
  check(a);
  switch (kind()) {
    case GroupKind::kFiniteCayley:
      return Element(std::vector<Rational>{Rational(static_cast<long>(node_->inverse[residue(a[0])]))});
    case GroupKind::kFiniteCyclic:
      return Element(std::vector<Rational>{
          Rational(static_cast<long>((node_->n - residue(a[0])) % node_->n))});
    case GroupKind::kFreeAbelian:
    case GroupKind::kRationalVector: {
      std::vector<Rational> out(arity());
      for (std::size_t i = 0; i < arity(); ++i) out[i] = -a[i];
      return Element(std::move(out));
    }
    case GroupKind::kPositiveRationals:
      return Element(std::vector<Rational>{Rational(1) / a[0]});
    case GroupKind::kDirectProduct: {
      std::vector<Rational> out;
      for (std::size_t i = 0; i < node_->factors.size(); ++i) {
        const Element s = node_->factors[i].neg(factor_part(a, i));
        out.insert(out.end(), s.vector().begin(), s.vector().end());
      }
      return Element(std::move(out));
    }
    case GroupKind::kSemidirect: {
      // -(x,b) = (-phi_{-b}(x), -b)
      const Element nb = base().neg(base_part(a));
      return Element::concat(kernel().neg(action().apply(nb, kernel_part(a))), nb);
    }
  }
  throw StructuralError("unreachable group kind");
}

Element Group::conjugate(const Element& g, const Element& x) const {
  return add(add(g, x), neg(g));
}

Element Group::multiple(const Element& a, const Integer& n) const {
  check(a);
  switch (kind()) {
    case GroupKind::kFiniteCyclic: {
      const Integer m = static_cast<long>(node_->n);
      Integer r = (Integer(static_cast<long>(residue(a[0]))) * n) % m;
      if (r < 0) r += m;
      return Element(std::vector<Rational>{Rational(r)});
    }
    case GroupKind::kFreeAbelian:
    case GroupKind::kRationalVector: {
      std::vector<Rational> out(arity());
      for (std::size_t i = 0; i < arity(); ++i) out[i] = a[i] * Rational(n);
      return Element(std::move(out));
    }
    case GroupKind::kPositiveRationals: {
      if (n > 1 << 20 || n < -(1 << 20)) throw UnsupportedError("exponent too large");
      return Element(std::vector<Rational>{power(a[0], static_cast<std::int64_t>(n))});
    }
    default: {
      Element base = n < 0 ? neg(a) : a;
      Integer e = n < 0 ? Integer(-n) : n;
      Element result = zero();
      while (e != 0) {
        if ((e & 1) != 0) result = add(result, base);
        e >>= 1;
        if (e != 0) base = add(base, base);
      }
      return result;
    }
  }
}

Element Group::multiple(const Element& a, const Rational& q) const {
  if (is_integral(q)) return multiple(a, numerator_of(q));
  check(a);
  switch (kind()) {
    case GroupKind::kRationalVector: {
      std::vector<Rational> out(arity());
      for (std::size_t i = 0; i < arity(); ++i) out[i] = a[i] * q;
      return Element(std::move(out));
    }
    case GroupKind::kDirectProduct: {
      std::vector<Rational> out;
      for (std::size_t i = 0; i < node_->factors.size(); ++i) {
        const Element s = node_->factors[i].multiple(factor_part(a, i), q);
        out.insert(out.end(), s.vector().begin(), s.vector().end());
      }
      return Element(std::move(out));
    }
    default:
      throw UnsupportedError("rational multiples are not defined in " + describe());
  }
}

std::vector<Element> Group::generators() const {
  switch (kind()) {
    case GroupKind::kFiniteCayley: {
      std::vector<Element> out;
      for (std::size_t i : finite_view().generators()) out.push_back(finite_view().element(i));
      return out;
    }
    case GroupKind::kFiniteCyclic:
      if (node_->n == 1) return {};
      return {Element(std::vector<Rational>{Rational(1)})};
    case GroupKind::kFreeAbelian:
    case GroupKind::kRationalVector: {
      std::vector<Element> out;
      for (std::size_t i = 0; i < arity(); ++i) {
        std::vector<Rational> e(arity(), Rational(0));
        e[i] = 1;
        out.emplace_back(std::move(e));
      }
      return out;
    }
    case GroupKind::kPositiveRationals: {
      std::vector<Element> out;
      for (std::size_t p : kPrimes) out.emplace_back(std::vector<Rational>{Rational(static_cast<long>(p))});
      return out;
    }
    case GroupKind::kDirectProduct:
    case GroupKind::kSemidirect: {
      std::vector<Element> out;
      for (std::size_t i = 0; i < node_->factors.size(); ++i) {
        for (const auto& g : node_->factors[i].generators()) out.push_back(inject(i, g));
      }
      return out;
    }
  }
  return {};
}

std::vector<std::pair<std::size_t, Rational>> Group::decompose(const Element& a) const {
  check(a);
  std::vector<std::pair<std::size_t, Rational>> word;
  switch (kind()) {
    case GroupKind::kFiniteCayley:
      for (std::size_t g : finite_view().words()[finite_view().index(a)]) {
        const auto& gens = finite_view().generators();
        const auto pos = static_cast<std::size_t>(std::find(gens.begin(), gens.end(), g) - gens.begin());
        word.emplace_back(pos, Rational(1));
      }
      return word;
    case GroupKind::kFiniteCyclic:
      if (a[0] != 0) word.emplace_back(0, a[0]);
      return word;
    case GroupKind::kFreeAbelian:
    case GroupKind::kRationalVector:
      for (std::size_t i = 0; i < arity(); ++i) {
        if (a[i] != 0) word.emplace_back(i, a[i]);
      }
      return word;
    case GroupKind::kPositiveRationals: {
      Integer num = numerator_of(a[0]);
      Integer den = denominator_of(a[0]);
      for (std::size_t i = 0; i < std::size(kPrimes); ++i) {
        long e = 0;
        const Integer p = static_cast<long>(kPrimes[i]);
        while (num % p == 0) {
          num /= p;
          ++e;
        }
        while (den % p == 0) {
          den /= p;
          --e;
        }
        if (e != 0) word.emplace_back(i, Rational(e));
      }
      if (num != 1 || den != 1) {
        throw UnsupportedError("positive rational " + format_rational(a[0]) +
                               " has a prime factor above 13");
      }
      return word;
    }
    case GroupKind::kDirectProduct:
    case GroupKind::kSemidirect: {
      std::size_t gen_offset = 0;
      for (std::size_t i = 0; i < node_->factors.size(); ++i) {
        for (const auto& [g, m] : node_->factors[i].decompose(factor_part(a, i))) {
          word.emplace_back(gen_offset + g, m);
        }
        gen_offset += node_->factors[i].generators().size();
      }
      return word;
    }
  }
  return word;
}

bool Group::accepts(const Element& a) const {
  if (a.size() != arity()) return false;
  for (std::size_t i = 0; i < arity(); ++i) {
    const CoordInfo& c = node_->coords[i];
    switch (c.kind) {
      case CoordKind::kInteger:
        if (!is_integral(a[i])) return false;
        break;
      case CoordKind::kRational:
        break;
      case CoordKind::kResidue:
      case CoordKind::kCayleyIndex:
        if (!is_integral(a[i]) || a[i] < 0 || a[i] >= Rational(static_cast<long>(c.modulus))) {
          return false;
        }
        break;
      case CoordKind::kPositiveRational:
        if (a[i] <= 0) return false;
        break;
    }
  }
  return true;
}

void Group::check(const Element& a) const {
  if (!accepts(a)) {
    throw StructuralError("element " + a.debug_string() + " does not belong to " + describe());
  }
}

std::vector<std::string> Group::format(const Element& a) const {
  check(a);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arity(); ++i) {
    const CoordKind k = node_->coords[i].kind;
    if (k == CoordKind::kResidue || k == CoordKind::kCayleyIndex) {
      out.push_back("r" + format_rational(a[i]));
    } else {
      out.push_back(format_rational(a[i]));
    }
  }
  return out;
}

std::string Group::to_string(const Element& a) const {
  const auto parts = format(a);
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ",";
    out += parts[i];
  }
  return out + ")";
}

Element Group::parse(const std::vector<std::string>& literal) const {
  if (literal.size() != arity()) {
    throw ParseError("element literal has " + std::to_string(literal.size()) +
                     " coordinates, " + describe() + " needs " + std::to_string(arity()));
  }
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < arity(); ++i) {
    std::string_view s = literal[i];
    const CoordKind k = node_->coords[i].kind;
    if (k == CoordKind::kResidue || k == CoordKind::kCayleyIndex) {
      if (!s.empty() && s.front() == 'r') s.remove_prefix(1);
    } else if (!s.empty() && s.front() == 'r') {
      throw ParseError("residue literal '" + literal[i] + "' in a non-finite coordinate of " +
                       describe());
    }
    coords.push_back(parse_rational(s));
  }
  Element e(std::move(coords));
  if (!accepts(e)) {
    throw ParseError("element literal " + e.debug_string() + " is not in " + describe());
  }
  return e;
}

std::size_t coordinate_height(const CoordInfo& info, const Rational& q) {
  switch (info.kind) {
    case CoordKind::kResidue:
    case CoordKind::kCayleyIndex:
      return 0;
    case CoordKind::kPositiveRational: {
      const Integer m = std::max(numerator_of(q), denominator_of(q));
      return static_cast<std::size_t>(m) - 1;
    }
    default: {
      const Integer num = abs(numerator_of(q));
      const Integer den = denominator_of(q);
      if (den == 1) return static_cast<std::size_t>(num);
      return static_cast<std::size_t>(std::max(num, den));
    }
  }
}

std::size_t element_height(const Group& g, const Element& a) {
  std::size_t h = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    h = std::max(h, coordinate_height(g.coordinates()[i], a[i]));
  }
  return h;
}

namespace {

std::vector<Rational> coordinate_candidates(const CoordInfo& info, const Window& w) {
  std::set<Rational> values;
  switch (info.kind) {
    case CoordKind::kResidue:
    case CoordKind::kCayleyIndex:
      for (std::size_t r = 0; r < info.modulus; ++r) values.insert(Rational(static_cast<long>(r)));
      break;
    case CoordKind::kInteger:
      for (std::int64_t z = -w.integer_bound; z <= w.integer_bound; ++z) values.insert(Rational(z));
      break;
    case CoordKind::kRational:
      for (std::int64_t d = 1; d <= w.denominator_bound; ++d) {
        for (std::int64_t p = -w.numerator_bound; p <= w.numerator_bound; ++p) {
          values.insert(Rational(p, d));
        }
      }
      break;
    case CoordKind::kPositiveRational:
      for (std::int64_t d = 1; d <= w.denominator_bound; ++d) {
        for (std::int64_t p = 1; p <= w.numerator_bound; ++p) values.insert(Rational(p, d));
      }
      break;
  }
  std::vector<Rational> out(values.begin(), values.end());
  std::stable_sort(out.begin(), out.end(), [&](const Rational& a, const Rational& b) {
    return coordinate_height(info, a) < coordinate_height(info, b);
  });
  return out;
}

}  // namespace

std::vector<Element> Group::window(const Window& w) const {
  if (is_finite()) {
    std::vector<Element> all = elements();
    if (all.size() > w.max_elements) all.resize(w.max_elements);
    return all;
  }
  const std::size_t k = arity();
  std::vector<std::vector<Rational>> cands(k);
  std::vector<std::vector<std::size_t>> heights(k);
  std::size_t max_height = 0;
  for (std::size_t i = 0; i < k; ++i) {
    cands[i] = coordinate_candidates(node_->coords[i], w);
    for (const auto& q : cands[i]) {
      heights[i].push_back(coordinate_height(node_->coords[i], q));
      max_height = std::max(max_height, heights[i].back());
    }
  }
  std::vector<Element> out;
  for (std::size_t h = 0; h <= max_height && out.size() < w.max_elements; ++h) {
    std::vector<std::size_t> limit(k);
    bool empty = false;
    for (std::size_t i = 0; i < k; ++i) {
      limit[i] = static_cast<std::size_t>(
          std::upper_bound(heights[i].begin(), heights[i].end(), h) - heights[i].begin());
      if (limit[i] == 0) empty = true;
    }
    if (empty) continue;
    std::vector<Element> level;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::size_t top = 0;
      for (std::size_t i = 0; i < k; ++i) top = std::max(top, heights[i][idx[i]]);
      if (top == h) {
        std::vector<Rational> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = cands[i][idx[i]];
        level.emplace_back(std::move(c));
      }
      std::size_t pos = 0;
      while (pos < k) {
        if (++idx[pos] < limit[pos]) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
    std::sort(level.begin(), level.end());
    for (auto& e : level) {
      if (out.size() >= w.max_elements) break;
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<Element> Group::elements() const {
  if (!is_finite()) throw UnsupportedError("cannot list the elements of infinite group " + describe());
  return finite_view().elements();
}

const FiniteView& Group::finite_view() const {
  if (!is_finite()) throw UnsupportedError(describe() + " is infinite");
  std::call_once(node_->view_once, [this] { node_->view = std::make_unique<FiniteView>(*this); });
  return *node_->view;
}

Element Group::pair(const Element& x, const Element& b) const {
  kernel().check(x);
  base().check(b);
  return Element::concat(x, b);
}

Element Group::kernel_part(const Element& a) const { return factor_part(a, 0); }
Element Group::base_part(const Element& a) const { return factor_part(a, 1); }

std::size_t Group::factor_offset(std::size_t i) const { return node_->offsets.at(i); }

Element Group::factor_part(const Element& a, std::size_t i) const {
  if (kind() != GroupKind::kDirectProduct && kind() != GroupKind::kSemidirect) {
    throw StructuralError(describe() + " has no factors");
  }
  return a.slice(node_->offsets.at(i), node_->factors.at(i).arity());
}

Element Group::inject(std::size_t i, const Element& part) const {
  node_->factors.at(i).check(part);
  std::vector<Rational> out;
  for (std::size_t j = 0; j < node_->factors.size(); ++j) {
    const Element piece = j == i ? part : node_->factors[j].zero();
    out.insert(out.end(), piece.vector().begin(), piece.vector().end());
  }
  return Element(std::move(out));
}

bool Group::same_as(const Group& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case GroupKind::kFiniteCayley:
      return node_->table == other.node_->table && node_->identity == other.node_->identity;
    case GroupKind::kFiniteCyclic:
    case GroupKind::kFreeAbelian:
    case GroupKind::kRationalVector:
      return node_->n == other.node_->n;
    case GroupKind::kPositiveRationals:
      return true;
    case GroupKind::kDirectProduct:
      if (node_->factors.size() != other.node_->factors.size()) return false;
      for (std::size_t i = 0; i < node_->factors.size(); ++i) {
        if (!node_->factors[i].same_as(other.node_->factors[i])) return false;
      }
      return true;
    case GroupKind::kSemidirect:
      return kernel().same_as(other.kernel()) && base().same_as(other.base()) &&
             action().same_as(other.action());
  }
  return false;
}

}  // namespace splitord
