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

#include "splitord/kernel/action.hpp"

#include <optional>

#include "splitord/kernel/errors.hpp"
#include "splitord/kernel/finite.hpp"
#include "splitord/kernel/homomorphism.hpp"

namespace splitord {

struct Action::Node {
  ActionKind kind = ActionKind::kTrivial;
  std::optional<Group> acting;
  std::optional<Group> acted;
  Rational q = 1;
  std::vector<Matrix> matrices;
  std::vector<std::vector<std::size_t>> perms;
  std::optional<Action> base;
  std::optional<Homomorphism> along;
  std::vector<Action> parts;
  Fn fn;
  std::string name;
};

namespace {

bool linear_coordinates(const Group& g) {
  for (const auto& c : g.coordinates()) {
    if (c.kind != CoordKind::kInteger && c.kind != CoordKind::kRational) return false;
  }
  return true;
}

bool integer_coordinates(const Group& g) {
  for (const auto& c : g.coordinates()) {
    if (c.kind != CoordKind::kInteger) return false;
  }
  return true;
}

void check_square(const Matrix& m, const Group& acted) {
  if (m.rows() != acted.arity() || m.cols() != acted.arity()) {
    throw StructuralError("action matrix must be " + std::to_string(acted.arity()) + "x" +
                          std::to_string(acted.arity()));
  }
  const Rational det = m.determinant();
  if (det == 0) throw StructuralError("action matrix is singular");
  if (integer_coordinates(acted) && (!m.is_integral() || (det != 1 && det != -1))) {
    throw StructuralError("action matrix is not invertible over the integers");
  }
}

bool odd_exponent(const Group& acting, const Element& b) {
  const Integer n = numerator_of(b[0]);
  (void)acting;
  return (n % 2) != 0;
}

Element apply_matrix(const Group& acted, const Matrix& m, const Element& x) {
  Element out(m.apply(x.vector()));
  acted.check(out);
  return out;
}

}  // namespace

Action Action::trivial(Group acting, Group acted) {
  auto node = std::make_shared<Node>();
  node->kind = ActionKind::kTrivial;
  node->acting = std::move(acting);
  node->acted = std::move(acted);
  return Action(node);
}

Action Action::sign(Group acting, Group acted) {
  const bool ok_acting =
      (acting.kind() == GroupKind::kFreeAbelian && acting.rank() == 1) ||
      (acting.kind() == GroupKind::kFiniteCyclic && acting.modulus() % 2 == 0);
  if (!ok_acting) throw StructuralError("sign action needs B = Z or a cyclic group of even order");
  if (!acted.is_abelian()) throw StructuralError("sign action needs an abelian X");
  auto node = std::make_shared<Node>();
  node->kind = ActionKind::kSign;
  node->acting = std::move(acting);
  node->acted = std::move(acted);
  return Action(node);
}

Action Action::scaling(Group acting, Group acted, Rational q) {
  if (acting.kind() != GroupKind::kFreeAbelian || acting.rank() != 1) {
    throw StructuralError("scaling action needs B = Z");
  }
  if (acted.kind() != GroupKind::kRationalVector) throw StructuralError("scaling action needs X = Q^k");
  if (q <= 0) throw StructuralError("scaling factor must be a positive rational");
  auto node = std::make_shared<Node>();
  node->kind = ActionKind::kScaling;
  node->acting = std::move(acting);
  node->acted = std::move(acted);
  node->q = std::move(q);
  return Action(node);
}

Action Action::matrix(Group acting, Group acted, std::vector<Matrix> generator_images) {
  if (!linear_coordinates(acted)) throw StructuralError("matrix action needs X with Z or Q coordinates");
  for (const auto& m : generator_images) check_square(m, acted);
  if (acting.kind() == GroupKind::kFreeAbelian) {
    if (generator_images.size() != acting.rank()) {
      throw StructuralError("matrix action needs one matrix per generator of " + acting.describe());
    }
    for (std::size_t i = 0; i < generator_images.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!(generator_images[i] * generator_images[j] == generator_images[j] * generator_images[i])) {
          throw StructuralError("matrix action generator images do not commute");
        }
      }
    }
  } else if (acting.kind() == GroupKind::kFiniteCyclic) {
    if (generator_images.size() != 1) throw StructuralError("matrix action on Z_n needs one matrix");
    if (!generator_images[0].power(static_cast<std::int64_t>(acting.modulus())).is_identity()) {
      throw StructuralError("matrix action: M^n is not the identity");
    }
  } else {
    throw StructuralError("matrix action needs B = Z^m or Z_n; use matrix_table for finite B");
  }
  auto node = std::make_shared<Node>();
  node->kind = ActionKind::kMatrix;
  node->acting = std::move(acting);
  node->acted = std::move(acted);
  node->matrices = std::move(generator_images);
  return Action(node);
}

Action Action::matrix_table(Group acting, Group acted, std::vector<Matrix> per_element) {
  if (!acting.is_finite()) throw StructuralError("matrix_table needs a finite acting group");
  if (!linear_coordinates(acted)) throw StructuralError("matrix_table needs X with Z or Q coordinates");
  if (per_element.size() != acting.order()) throw StructuralError("matrix_table needs one matrix per element");
  for (const auto& m : per_element) check_square(m, acted);
  auto node = std::make_shared<Node>();
  node->kind = ActionKind::kMatrixTable;
  node->acting = std::move(acting);
  node->acted = std::move(acted);
  node->matrices = std::move(per_element);
  return Action(node);
}

Action Action::finite_table(Group acting, Group acted,
                            std::vector<std::vector<std::size_t>> permutations) {
  if (!acting.is_finite() || !acted.is_finite()) throw StructuralError("finite_table needs finite groups");
  if (permutations.size() != acting.order()) {
    throw StructuralError("finite_table needs one permutation per element of " + acting.describe());
  }
  const std::size_t n = acted.order();
  for (const auto& p : permutations) {
    if (p.size() != n) throw StructuralError("finite_table permutation has the wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t v : p) {
      if (v >= n || seen[v]) throw StructuralError("finite_table entry is not a permutation");
      seen[v] = true;
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = ActionKind::kFiniteTable;
  node->acting = std::move(acting);
  node->acted = std::move(acted);
  node->perms = std::move(permutations);
  return Action(node);
}

Action Action::precomposed(Action base, Homomorphism along) {
  if (!along.target().same_as(base.acting())) {
    throw StructuralError("precomposition map does not land in the acting group");
  }
  auto node = std::make_shared<Node>();
  node->kind = ActionKind::kPrecomposed;
  node->acting = along.source();
  node->acted = base.acted();
  node->base = std::move(base);
  node->along = std::move(along);
  return Action(node);
}

Action Action::product(std::vector<Action> parts) {
  std::vector<Group> actings;
  std::vector<Group> acteds;
  for (const auto& p : parts) {
    actings.push_back(p.acting());
    acteds.push_back(p.acted());
  }
  auto node = std::make_shared<Node>();
  node->kind = ActionKind::kProduct;
  node->acting = Group::product(std::move(actings));
  node->acted = Group::product(std::move(acteds));
  node->parts = std::move(parts);
  return Action(node);
}

Action Action::dilation(Group acted) {
  if (acted.kind() != GroupKind::kRationalVector) throw StructuralError("dilation needs X = Q^k");
  auto node = std::make_shared<Node>();
  node->kind = ActionKind::kDilation;
  node->acting = Group::positive_rationals();
  node->acted = std::move(acted);
  return Action(node);
}

Action Action::induced(Group acting, Group acted, std::string name, Fn fn) {
  auto node = std::make_shared<Node>();
  node->kind = ActionKind::kInduced;
  node->acting = std::move(acting);
  node->acted = std::move(acted);
  node->name = std::move(name);
  node->fn = std::move(fn);
  return Action(node);
}

ActionKind Action::kind() const { return node_->kind; }
const Group& Action::acting() const { return *node_->acting; }
const Group& Action::acted() const { return *node_->acted; }
const Rational& Action::scaling_factor() const { return node_->q; }
const Action& Action::precomposed_base() const { return *node_->base; }
const Homomorphism& Action::precomposed_along() const { return *node_->along; }
const std::vector<Action>& Action::parts() const { return node_->parts; }
const std::vector<std::vector<std::size_t>>& Action::permutation_table() const { return node_->perms; }
const std::vector<Matrix>& Action::matrices() const { return node_->matrices; }

std::string Action::describe() const {
  switch (kind()) {
    case ActionKind::kTrivial:
      return "trivial";
    case ActionKind::kSign:
      return "sign";
    case ActionKind::kScaling:
      return "scaling(" + format_rational(node_->q) + ")";
    case ActionKind::kMatrix:
      return "matrix";
    case ActionKind::kMatrixTable:
      return "matrix_table";
    case ActionKind::kFiniteTable:
      return "finite_table";
    case ActionKind::kPrecomposed:
      return node_->base->describe() + " ∘ " + node_->along->name();
    case ActionKind::kProduct: {
      std::string out = "product(";
      for (std::size_t i = 0; i < node_->parts.size(); ++i) {
        if (i != 0) out += ", ";
        out += node_->parts[i].describe();
      }
      return out + ")";
    }
    case ActionKind::kDilation:
      return "dilation";
    case ActionKind::kInduced:
      return node_->name;
  }
  return "?";
}

Element Action::apply(const Element& b, const Element& x) const {
  const Group& bg = acting();
  const Group& xg = acted();
  bg.check(b);
  xg.check(x);
  switch (kind()) {
    case ActionKind::kTrivial:
      return x;
    case ActionKind::kSign:
      return odd_exponent(bg, b) ? xg.neg(x) : x;
    case ActionKind::kScaling: {
      const auto n = to_int64(b[0]);
      if (!n) throw UnsupportedError("scaling exponent out of range");
      const Rational f = power(node_->q, *n);
      std::vector<Rational> out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * f;
      return Element(std::move(out));
    }
    case ActionKind::kMatrix:
    case ActionKind::kMatrixTable:
      return apply_matrix(xg, *matrix_at(b), x);
    case ActionKind::kFiniteTable: {
      const auto& bv = bg.finite_view();
      const auto& xv = xg.finite_view();
      return xv.element(node_->perms[bv.index(b)][xv.index(x)]);
    }
    case ActionKind::kPrecomposed:
      return node_->base->apply((*node_->along)(b), x);
    case ActionKind::kProduct: {
      std::vector<Rational> out;
      for (std::size_t i = 0; i < node_->parts.size(); ++i) {
        const Element part = node_->parts[i].apply(bg.factor_part(b, i), xg.factor_part(x, i));
        out.insert(out.end(), part.vector().begin(), part.vector().end());
      }
      return Element(std::move(out));
    }
    case ActionKind::kDilation: {
      std::vector<Rational> out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * b[0];
      return Element(std::move(out));
    }
    case ActionKind::kInduced: {
      Element out = node_->fn(b, x);
      xg.check(out);
      return out;
    }
  }
  throw StructuralError("unreachable action kind");
}

std::optional<Matrix> Action::matrix_at(const Element& b) const {
  const Group& xg = acted();
  if (!linear_coordinates(xg)) return std::nullopt;
  const std::size_t k = xg.arity();
  switch (kind()) {
    case ActionKind::kTrivial:
      return Matrix::identity(k);
    case ActionKind::kSign: {
      Matrix m = Matrix::identity(k);
      if (odd_exponent(acting(), b)) {
        for (std::size_t i = 0; i < k; ++i) m(i, i) = -1;
      }
      return m;
    }
    case ActionKind::kScaling: {
      const auto n = to_int64(b[0]);
      if (!n) return std::nullopt;
      return Matrix::diagonal(std::vector<Rational>(k, power(node_->q, *n)));
    }
    case ActionKind::kMatrix: {
      const Group& bg = acting();
      if (bg.kind() == GroupKind::kFiniteCyclic) {
        return node_->matrices[0].power(*to_int64(b[0]));
      }
      Matrix m = Matrix::identity(k);
      for (std::size_t i = 0; i < node_->matrices.size(); ++i) {
        const auto e = to_int64(b[i]);
        if (!e) return std::nullopt;
        m = m * node_->matrices[i].power(*e);
      }
      return m;
    }
    case ActionKind::kMatrixTable:
      return node_->matrices[acting().finite_view().index(b)];
    case ActionKind::kPrecomposed:
      return node_->base->matrix_at((*node_->along)(b));
    case ActionKind::kProduct: {
      Matrix m(k, k);
      std::size_t offset = 0;
      for (std::size_t i = 0; i < node_->parts.size(); ++i) {
        const auto part = node_->parts[i].matrix_at(acting().factor_part(b, i));
        if (!part) return std::nullopt;
        for (std::size_t r = 0; r < part->rows(); ++r) {
          for (std::size_t c = 0; c < part->cols(); ++c) m(offset + r, offset + c) = (*part)(r, c);
        }
        offset += part->rows();
      }
      return m;
    }
    case ActionKind::kDilation:
      return Matrix::diagonal(std::vector<Rational>(k, b[0]));
    case ActionKind::kFiniteTable:
    case ActionKind::kInduced:
      return std::nullopt;
  }
  return std::nullopt;
}

bool Action::is_trivial() const {
  if (kind() == ActionKind::kTrivial) return true;
  if (kind() == ActionKind::kDilation) return acted().arity() == 0;
  for (const auto& b : acting().generators()) {
    for (const auto& x : acted().generators()) {
      if (!(apply(b, x) == x)) return false;
    }
  }
  return true;
}

bool Action::same_as(const Action& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  if (!acting().same_as(other.acting()) || !acted().same_as(other.acted())) return false;
  switch (kind()) {
    case ActionKind::kTrivial:
    case ActionKind::kSign:
    case ActionKind::kDilation:
      return true;
    case ActionKind::kScaling:
      return node_->q == other.node_->q;
    case ActionKind::kMatrix:
    case ActionKind::kMatrixTable:
      return node_->matrices == other.node_->matrices;
    case ActionKind::kFiniteTable:
      return node_->perms == other.node_->perms;
    case ActionKind::kProduct:
      if (node_->parts.size() != other.node_->parts.size()) return false;
      for (std::size_t i = 0; i < node_->parts.size(); ++i) {
        if (!node_->parts[i].same_as(other.node_->parts[i])) return false;
      }
      return true;
    case ActionKind::kPrecomposed:
    case ActionKind::kInduced:
      return false;
  }
  return false;
}

}  // namespace splitord
