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

#include "splitord/kernel/kernel.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>

namespace splitord {

namespace {

// Cap on window elements used in pair and triple checks.
constexpr std::size_t kPairCap = 40;

// Extends generator images along BFS words of the source and checks that
// every product a + g agrees. Returns the full image table, or nullopt when
// the assignment is not a homomorphism.
template <typename Img, typename Add, typename Eq>
std::optional<std::vector<Img>> extend_images(const FiniteView& src, const std::vector<Img>& gen_images,
                                              const Img& zero, Add add, Eq eq) {
  const auto& gens = src.generators();
  std::vector<std::optional<Img>> img(src.size());
  img[src.zero()] = zero;
  std::deque<std::size_t> queue{src.zero()};
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t next = src.add(a, gens[k]);
      Img cand = add(*img[a], gen_images[k]);
      if (img[next]) {
        if (!eq(*img[next], cand)) return std::nullopt;
      } else {
        img[next] = std::move(cand);
        queue.push_back(next);
      }
    }
  }
  std::vector<Img> out;
  out.reserve(img.size());
  for (auto& e : img) out.push_back(std::move(*e));
  return out;
}

// Backtracking over generator image tuples.
template <typename Cand, typename Visit>
void for_each_tuple(const std::vector<std::vector<Cand>>& options, Visit visit) {
  std::vector<std::size_t> pick(options.size(), 0);
  for (const auto& o : options) {
    if (o.empty()) return;
  }
  std::vector<Cand> current(options.size());
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == options.size()) {
      visit(current);
      return;
    }
    for (const auto& c : options[depth]) {
      current[depth] = c;
      rec(depth + 1);
    }
  };
  rec(0);
}

}  // namespace

Element eval_add(const Group& g, const Element& a, const Element& b) { return g.add(a, b); }
Element eval_neg(const Group& g, const Element& a) { return g.neg(a); }
Element conjugate(const Group& g, const Element& by, const Element& x) { return g.conjugate(by, x); }

std::vector<Homomorphism> enumerate_automorphisms(const Group& g) {
  if (!g.is_finite()) throw UnsupportedError("automorphisms are enumerated only for finite groups");
  const auto& view = g.finite_view();
  const auto& gens = view.generators();
  std::vector<std::vector<std::size_t>> options(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::size_t ord = view.element_order(gens[k]);
    for (std::size_t e = 0; e < view.size(); ++e) {
      if (view.element_order(e) == ord) options[k].push_back(e);
    }
  }
  std::vector<std::vector<std::size_t>> tables;
  for_each_tuple(options, [&](const std::vector<std::size_t>& images) {
    auto table = extend_images<std::size_t>(
        view, images, view.zero(), [&](std::size_t a, std::size_t b) { return view.add(a, b); },
        [](std::size_t a, std::size_t b) { return a == b; });
    if (!table) return;
    std::vector<bool> hit(view.size(), false);
    for (std::size_t v : *table) {
      if (hit[v]) return;
      hit[v] = true;
    }
    tables.push_back(std::move(*table));
  });
  std::sort(tables.begin(), tables.end());
  std::vector<std::size_t> ident(view.size());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  auto it = std::find(tables.begin(), tables.end(), ident);
  if (it != tables.end()) std::rotate(tables.begin(), it, it + 1);
  std::vector<Homomorphism> out;
  out.reserve(tables.size());
  for (const auto& t : tables) {
    std::vector<Element> images;
    images.reserve(t.size());
    for (std::size_t v : t) images.push_back(view.element(v));
    out.push_back(Homomorphism::finite_table(g, g, std::move(images)));
  }
  return out;
}

std::vector<Homomorphism> enumerate_homomorphisms(const Group& source, const Group& target,
                                                  const Window& window) {
  const std::vector<Element> pool = target.is_finite() ? target.elements() : target.window(window);
  std::vector<Homomorphism> out;
  if (source.is_finite()) {
    const auto& view = source.finite_view();
    const auto& gens = view.generators();
    std::vector<std::vector<Element>> options(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Integer ord = view.element_order(gens[k]);
      for (const auto& e : pool) {
        if (target.is_zero(target.multiple(e, ord))) options[k].push_back(e);
      }
    }
    std::vector<std::vector<Element>> tables;
    for_each_tuple(options, [&](const std::vector<Element>& images) {
      auto table = extend_images<Element>(
          view, images, target.zero(),
          [&](const Element& a, const Element& b) { return target.add(a, b); },
          [](const Element& a, const Element& b) { return a == b; });
      if (table) tables.push_back(std::move(*table));
    });
    std::sort(tables.begin(), tables.end());
    for (auto& t : tables) out.push_back(Homomorphism::finite_table(source, target, std::move(t)));
    return out;
  }
  if (source.kind() != GroupKind::kFreeAbelian) {
    throw UnsupportedError("homomorphisms are enumerated only from finite or free abelian groups");
  }
  std::vector<std::vector<Element>> options(source.rank(), pool);
  for_each_tuple(options, [&](const std::vector<Element>& images) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!(target.add(images[i], images[j]) == target.add(images[j], images[i]))) return;
      }
    }
    out.push_back(Homomorphism::generator_images(source, target, images));
  });
  return out;
}

Verdict check_homomorphism(const Homomorphism& h, const Window& window) {
  const Group& src = h.source();
  const Group& dst = h.target();
  if (!dst.is_zero(h(src.zero()))) {
    return Verdict::no("does not send 0 to 0").with("a", src, src.zero());
  }
  if (src.is_finite()) {
    const auto& els = src.elements();
    for (const auto& a : els) {
      const Element ha = h(a);
      for (const auto& b : els) {
        if (!(h(src.add(a, b)) == dst.add(ha, h(b)))) {
          return Verdict::no("h(a + b) != h(a) + h(b)").with("a", src, a).with("b", src, b);
        }
      }
    }
    Verdict v = Verdict::yes(Scope::kExact, "exhaustive");
    v.used.window_elements = els.size();
    return v;
  }
  if (h.kind() == HomKind::kLinear) {
    // Linear maps are additive; it remains to check that integer rows are
    // integral on integer columns and vanish on rational ones.
    const Matrix m = *h.matrix();
    const auto gens = src.generators();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (dst.coordinates()[r].kind != CoordKind::kInteger) continue;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const bool rational_col = src.coordinates()[c].kind == CoordKind::kRational;
        if ((rational_col && m(r, c) != 0) || !is_integral(m(r, c))) {
          return Verdict::no("image leaves the integer lattice").with("a", src, gens[c]);
        }
      }
    }
    return Verdict::yes(Scope::kExact, "linear");
  }
  if (h.kind() == HomKind::kGeneratorImages) {
    const auto gens = src.generators();
    std::vector<Element> images;
    for (const auto& g : gens) images.push_back(h(g));
    if (src.kind() == GroupKind::kFreeAbelian || src.kind() == GroupKind::kRationalVector) {
      for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (!(dst.add(images[i], images[j]) == dst.add(images[j], images[i]))) {
            return Verdict::no("generator images do not commute")
                .with("a", src, gens[i])
                .with("b", src, gens[j]);
          }
        }
      }
      return Verdict::yes(Scope::kExact, "free on generators");
    }
  }
  if (h.generator_determined()) return Verdict::yes(Scope::kExact, "additive by construction");
  auto els = src.window(window);
  if (els.size() > kPairCap) els.resize(kPairCap);
  for (const auto& a : els) {
    for (const auto& b : els) {
      if (!(h(src.add(a, b)) == dst.add(h(a), h(b)))) {
        return Verdict::no("h(a + b) != h(a) + h(b)").with("a", src, a).with("b", src, b);
      }
    }
  }
  Verdict v = Verdict::unknown("additive on every window pair");
  v.used.window_elements = els.size();
  return v;
}

Verdict check_action_laws(const Action& action, const Window& window) {
  const Group& bg = action.acting();
  const Group& xg = action.acted();
  switch (action.kind()) {
    case ActionKind::kTrivial:
    case ActionKind::kSign:
    case ActionKind::kScaling:
    case ActionKind::kDilation:
      return Verdict::yes(Scope::kExact, "by construction");
    default:
      break;
  }
  const bool finite = bg.is_finite() && xg.is_finite();
  std::vector<Element> bs = bg.is_finite() ? bg.elements() : bg.window(window);
  std::vector<Element> xs = xg.is_finite() ? xg.elements() : xg.window(window);
  if (!finite) {
    if (bs.size() > kPairCap) bs.resize(kPairCap);
    if (xs.size() > kPairCap) xs.resize(kPairCap);
  }
  for (const auto& x : xs) {
    if (!(action.apply(bg.zero(), x) == x)) return Verdict::no("phi_0 != id").with("x", xg, x);
  }
  for (const auto& b : bs) {
    for (const auto& x : xs) {
      const Element px = action.apply(b, x);
      for (const auto& y : xs) {
        if (!(action.apply(b, xg.add(x, y)) == xg.add(px, action.apply(b, y)))) {
          return Verdict::no("phi_b is not additive").with("b", bg, b).with("x", xg, x).with("y", xg, y);
        }
      }
    }
  }
  for (const auto& b : bs) {
    for (const auto& c : bs) {
      const Element bc = bg.add(b, c);
      for (const auto& x : xs) {
        if (!(action.apply(bc, x) == action.apply(b, action.apply(c, x)))) {
          return Verdict::no("phi_{b+c} != phi_b ∘ phi_c").with("b", bg, b).with("c", bg, c).with("x", xg, x);
        }
      }
    }
  }
  Verdict v = Verdict::yes(finite ? Scope::kExact : Scope::kWindow);
  v.used.window_elements = bs.size() * xs.size();
  return v;
}

}  // namespace splitord
