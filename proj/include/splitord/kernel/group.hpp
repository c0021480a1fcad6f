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

#ifndef SPLITORD_KERNEL_GROUP_HPP_
#define SPLITORD_KERNEL_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "splitord/kernel/element.hpp"
#include "splitord/kernel/number.hpp"

namespace splitord {

class Action;
class FiniteView;

/// Finite test universe for infinite groups: integer coordinates satisfy
/// |z| <= integer_bound, rational ones |num| <= numerator_bound and
/// 0 < den <= denominator_bound. Finite coordinates are always enumerated
/// in full. Enumeration is by increasing height and stops after
/// max_elements.
struct Window {
  std::int64_t integer_bound = 8;
  std::int64_t numerator_bound = 16;
  std::int64_t denominator_bound = 8;
  std::size_t max_elements = 4096;

  Window with_integer_bound(std::int64_t m) const {
    Window w = *this;
    w.integer_bound = m;
    return w;
  }
  Window with_max_elements(std::size_t n) const {
    Window w = *this;
    w.max_elements = n;
    return w;
  }
  Window doubled() const;
  friend bool operator==(const Window&, const Window&) = default;
};

enum class GroupKind {
  kFiniteCayley,
  kFiniteCyclic,
  kFreeAbelian,
  kRationalVector,
  /// Positive rationals under multiplication, written additively: the
  /// identity is 1 and "negation" is the reciprocal. Used as the carrier of
  /// the monotone automorphism group of (Q, >=0).
  kPositiveRationals,
  kDirectProduct,
  kSemidirect,
};

enum class CoordKind { kInteger, kRational, kResidue, kCayleyIndex, kPositiveRational };

struct CoordInfo {
  CoordKind kind;
  std::size_t modulus = 0;  // residue and Cayley coordinates
};

/// Immutable description of a group. Copies share structure.
class Group {
 public:
  static Group cyclic(std::size_t n);
  /// table[i][j] is the index of i + j. Validated as a group table.
  static Group cayley(std::vector<std::vector<std::size_t>> table,
                      std::size_t identity, std::string name = {});
  static Group free_abelian(std::size_t rank);
  static Group rational_vector(std::size_t rank);
  static Group positive_rationals();
  static Group product(std::vector<Group> factors);
  /// X ⋊_action B with (x,b)+(x',b') = (x + action(b,x'), b + b').
  static Group semidirect(Group kernel, Group base, Action action);

  /// Symmetric group on n letters as a Cayley table, permutations listed
  /// in lexicographic order; element i composes as (p + q)(k) = p(q(k)).
  static Group symmetric(std::size_t n);
  static std::vector<std::vector<std::size_t>> permutations(std::size_t n);

  GroupKind kind() const;
  std::size_t arity() const;
  const std::vector<CoordInfo>& coordinates() const;
  bool is_finite() const;
  /// Number of elements; throws UnsupportedError for infinite groups.
  std::size_t order() const;
  /// Structural commutativity: Cayley tables are checked directly and a
  /// semidirect product counts as abelian only when both factors are and
  /// the action is trivial on generators.
  bool is_abelian() const;
  std::string describe() const;
  const std::string& name() const;

  std::size_t rank() const;
  std::size_t modulus() const;
  const std::vector<std::vector<std::size_t>>& table() const;
  std::size_t identity_index() const;
  const std::vector<Group>& factors() const;
  const Group& kernel() const;
  const Group& base() const;
  const Action& action() const;

  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  /// g + x - g.
  Element conjugate(const Element& g, const Element& x) const;
  Element multiple(const Element& a, const Integer& n) const;
  /// q·a for rational q; only in uniquely divisible groups (Q^k).
  Element multiple(const Element& a, const Rational& q) const;
  bool is_zero(const Element& a) const { return a == zero(); }

  /// Finite generating set: standard basis for Z^k and Q^k (as a vector
  /// space in the rational case), a generator for cyclic groups, a small
  /// generating set for Cayley tables, factor generators for composites.
  std::vector<Element> generators() const;
  /// Ordered word (generator index, multiplicity) whose sum is a. Rational
  /// multiplicities occur only for rational coordinates.
  std::vector<std::pair<std::size_t, Rational>> decompose(const Element& a) const;

  void check(const Element& a) const;
  bool accepts(const Element& a) const;
  std::vector<std::string> format(const Element& a) const;
  std::string to_string(const Element& a) const;
  Element parse(const std::vector<std::string>& literal) const;

  std::vector<Element> window(const Window& w) const;
  std::vector<Element> elements() const;
  const FiniteView& finite_view() const;

  Element pair(const Element& x, const Element& b) const;
  Element kernel_part(const Element& a) const;
  Element base_part(const Element& a) const;
  std::size_t factor_offset(std::size_t i) const;
  Element factor_part(const Element& a, std::size_t i) const;
  Element inject(std::size_t i, const Element& part) const;

  bool same_as(const Group& other) const;
  friend bool operator==(const Group& a, const Group& b) { return a.same_as(b); }

  struct Node;

 private:
  explicit Group(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Height used to order window enumerations: max over coordinates.
std::size_t coordinate_height(const CoordInfo& info, const Rational& q);
std::size_t element_height(const Group& g, const Element& a);

}  // namespace splitord

#endif  // SPLITORD_KERNEL_GROUP_HPP_
