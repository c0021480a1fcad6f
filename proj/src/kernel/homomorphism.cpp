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

#include "splitord/kernel/homomorphism.hpp"

#include "splitord/kernel/errors.hpp"
#include "splitord/kernel/finite.hpp"

namespace splitord {

struct Homomorphism::Node {
  HomKind kind = HomKind::kFunction;
  std::optional<Group> source;
  std::optional<Group> target;
  std::vector<Element> images;
  std::optional<Matrix> matrix;
  Fn fn;
  std::string name;
  bool generator_determined = false;
};

namespace {

bool linear_coordinates(const Group& g) {
  for (const auto& c : g.coordinates()) {
    if (c.kind != CoordKind::kInteger && c.kind != CoordKind::kRational) return false;
  }
  return true;
}

}  // namespace

Homomorphism Homomorphism::generator_images(Group source, Group target, std::vector<Element> images) {
  if (images.size() != source.generators().size()) {
    throw StructuralError("expected " + std::to_string(source.generators().size()) +
                          " generator images for " + source.describe());
  }
  for (const auto& e : images) target.check(e);
  auto node = std::make_shared<Node>();
  node->kind = HomKind::kGeneratorImages;
  node->name = "hom";
  node->source = std::move(source);
  node->target = std::move(target);
  node->images = std::move(images);
  return Homomorphism(node);
}

Homomorphism Homomorphism::linear(Group source, Group target, Matrix m) {
  if (!linear_coordinates(source) || !linear_coordinates(target)) {
    throw StructuralError("linear maps need Z or Q coordinates on both sides");
  }
  if (m.rows() != target.arity() || m.cols() != source.arity()) {
    throw StructuralError("linear map has the wrong shape");
  }
  auto node = std::make_shared<Node>();
  node->kind = HomKind::kLinear;
  node->name = "linear";
  node->source = std::move(source);
  node->target = std::move(target);
  node->matrix = std::move(m);
  return Homomorphism(node);
}

Homomorphism Homomorphism::finite_table(Group source, Group target, std::vector<Element> images) {
  if (!source.is_finite()) throw StructuralError("finite_table needs a finite source");
  if (images.size() != source.order()) throw StructuralError("finite_table needs one image per element");
  for (const auto& e : images) target.check(e);
  auto node = std::make_shared<Node>();
  node->kind = HomKind::kFiniteTable;
  node->name = "table";
  node->source = std::move(source);
  node->target = std::move(target);
  node->images = std::move(images);
  return Homomorphism(node);
}

Homomorphism Homomorphism::function(Group source, Group target, std::string name, Fn fn,
                                    bool generator_determined) {
  auto node = std::make_shared<Node>();
  node->kind = HomKind::kFunction;
  node->source = std::move(source);
  node->target = std::move(target);
  node->name = std::move(name);
  node->fn = std::move(fn);
  node->generator_determined = generator_determined;
  return Homomorphism(node);
}

Homomorphism Homomorphism::identity(const Group& g) {
  auto node = std::make_shared<Node>();
  node->kind = HomKind::kFunction;
  node->source = g;
  node->target = g;
  node->name = "id";
  node->fn = [](const Element& a) { return a; };
  node->generator_determined = true;
  if (linear_coordinates(g)) node->matrix = Matrix::identity(g.arity());
  return Homomorphism(node);
}

Homomorphism Homomorphism::zero(const Group& source, const Group& target) {
  auto node = std::make_shared<Node>();
  node->kind = HomKind::kFunction;
  node->source = source;
  node->target = target;
  node->name = "0";
  const Element z = target.zero();
  node->fn = [z](const Element&) { return z; };
  node->generator_determined = true;
  if (linear_coordinates(source) && linear_coordinates(target)) {
    node->matrix = Matrix(target.arity(), source.arity());
  }
  return Homomorphism(node);
}

Homomorphism Homomorphism::scalar(const Group& g, const Integer& c) {
  if (!g.is_abelian()) throw StructuralError("scalar maps need an abelian group");
  auto node = std::make_shared<Node>();
  node->kind = HomKind::kFunction;
  node->source = g;
  node->target = g;
  node->name = c.str() + "·";
  node->fn = [g, c](const Element& a) { return g.multiple(a, c); };
  node->generator_determined = true;
  if (linear_coordinates(g)) {
    node->matrix = Matrix::diagonal(std::vector<Rational>(g.arity(), Rational(c)));
  }
  return Homomorphism(node);
}

Homomorphism Homomorphism::compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (!inner.target().same_as(outer.source())) {
    throw StructuralError("cannot compose " + outer.name() + " after " + inner.name());
  }
  auto node = std::make_shared<Node>();
  node->kind = HomKind::kFunction;
  node->source = inner.source();
  node->target = outer.target();
  node->name = outer.name() + "∘" + inner.name();
  node->fn = [outer, inner](const Element& a) { return outer(inner(a)); };
  node->generator_determined = outer.generator_determined() && inner.generator_determined();
  const auto mo = outer.matrix();
  const auto mi = inner.matrix();
  if (mo && mi) node->matrix = *mo * *mi;
  return Homomorphism(node);
}

Element Homomorphism::operator()(const Element& a) const {
  const Group& src = source();
  const Group& dst = target();
  src.check(a);
  switch (node_->kind) {
    case HomKind::kGeneratorImages: {
      Element out = dst.zero();
      for (const auto& [gen, mult] : src.decompose(a)) {
        const Element& img = node_->images[gen];
        if (is_integral(mult)) {
          out = dst.add(out, dst.multiple(img, numerator_of(mult)));
        } else {
          out = dst.add(out, dst.multiple(img, mult));
        }
      }
      return out;
    }
    case HomKind::kLinear: {
      // Integer target coordinates must receive integers.
      Element out(node_->matrix->apply(a.vector()));
      dst.check(out);
      return out;
    }
    case HomKind::kFiniteTable:
      return node_->images[src.finite_view().index(a)];
    case HomKind::kFunction: {
      Element out = node_->fn(a);
      dst.check(out);
      return out;
    }
  }
  throw StructuralError("unreachable homomorphism kind");
}

HomKind Homomorphism::kind() const { return node_->kind; }
const Group& Homomorphism::source() const { return *node_->source; }
const Group& Homomorphism::target() const { return *node_->target; }
const std::string& Homomorphism::name() const { return node_->name; }

bool Homomorphism::generator_determined() const {
  return node_->kind == HomKind::kLinear || node_->generator_determined;
}

std::optional<Matrix> Homomorphism::matrix() const {
  if (node_->matrix) return node_->matrix;
  if (node_->kind == HomKind::kGeneratorImages && linear_coordinates(source()) &&
      linear_coordinates(target()) &&
      (source().kind() == GroupKind::kFreeAbelian || source().kind() == GroupKind::kRationalVector)) {
    Matrix m(target().arity(), source().arity());
    for (std::size_t c = 0; c < source().arity(); ++c) {
      for (std::size_t r = 0; r < target().arity(); ++r) m(r, c) = node_->images[c][r];
    }
    return m;
  }
  return std::nullopt;
}

std::optional<Homomorphism> Homomorphism::inverse() const {
  if (node_->kind == HomKind::kFiniteTable || (source().is_finite() && target().is_finite())) {
    if (!source().is_finite() || !target().is_finite() || source().order() != target().order()) {
      return std::nullopt;
    }
    const auto& sv = source().finite_view();
    const auto& tv = target().finite_view();
    std::vector<std::optional<Element>> inv(tv.size());
    for (std::size_t i = 0; i < sv.size(); ++i) {
      const std::size_t j = tv.index((*this)(sv.element(i)));
      if (inv[j]) return std::nullopt;
      inv[j] = sv.element(i);
    }
    std::vector<Element> images;
    images.reserve(inv.size());
    for (auto& e : inv) images.push_back(*e);
    auto out = finite_table(target(), source(), std::move(images));
    return out;
  }
  if (node_->name == "id") return *this;
  const auto m = matrix();
  if (!m || !m->is_square()) return std::nullopt;
  const auto inv = m->inverse();
  if (!inv) return std::nullopt;
  for (std::size_t r = 0; r < inv->rows(); ++r) {
    if (source().coordinates()[r].kind != CoordKind::kInteger) continue;
    for (std::size_t c = 0; c < inv->cols(); ++c) {
      if (!is_integral((*inv)(r, c))) return std::nullopt;
    }
  }
  return linear(target(), source(), *inv);
}

}  // namespace splitord
