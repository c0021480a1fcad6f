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

#include "saturation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace splitord::detail {

namespace {

constexpr std::size_t kNodesPerUnit = 1500;
constexpr std::int64_t kFunctionalBound = 2;
constexpr std::size_t kFunctionalMaxDim = 6;
constexpr std::int64_t kMaxModulus = 6;

bool is_additive_coord(const CoordInfo& c) {
  return c.kind == CoordKind::kInteger || c.kind == CoordKind::kRational;
}

Rational dot(const std::vector<Integer>& c, const Element& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) s += Rational(c[i]) * x[i];
  }
  return s;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// Calls visit on every vector in [lo, hi]^n restricted to the allowed
// coordinates (others stay 0). Stops when visit returns true.
template <typename Visit>
bool for_each_vector(const std::vector<bool>& allowed, std::int64_t lo, std::int64_t hi, Visit visit) {
  const std::size_t n = allowed.size();
  std::vector<Integer> c(n, 0);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    if (allowed[i]) {
      free.push_back(i);
      c[i] = lo;
    }
  }
  if (free.empty()) return false;
  while (true) {
    if (visit(c)) return true;
    std::size_t k = 0;
    while (k < free.size()) {
      if (c[free[k]] < hi) {
        ++c[free[k]];
        break;
      }
      c[free[k]] = lo;
      ++k;
    }
    if (k == free.size()) return false;
  }
}

bool chi_hom_rec(const Group& g, const std::vector<Integer>& c, std::size_t offset, const Integer& m) {
  auto coeff = [&](std::size_t i) { return c[offset + i]; };
  switch (g.kind()) {
    case GroupKind::kFreeAbelian:
      return true;
    case GroupKind::kRationalVector:
      for (std::size_t i = 0; i < g.arity(); ++i) {
        if (m != 0 && coeff(i) != 0) return false;
      }
      return true;
    case GroupKind::kFiniteCyclic:
      if (coeff(0) == 0) return true;
      // r ↦ c·r mod m is well defined on Z_n iff m | n·c; real functionals
      // vanish on torsion.
      return m != 0 && mod(Integer(static_cast<long>(g.modulus())) * coeff(0), m) == 0;
    case GroupKind::kFiniteCayley:
    case GroupKind::kPositiveRationals:
      for (std::size_t i = 0; i < g.arity(); ++i) {
        if (coeff(i) != 0) return false;
      }
      return true;
    case GroupKind::kDirectProduct:
      for (std::size_t i = 0; i < g.factors().size(); ++i) {
        if (!chi_hom_rec(g.factors()[i], c, offset + g.factor_offset(i), m)) return false;
      }
      return true;
    case GroupKind::kSemidirect: {
      const Group& x = g.kernel();
      const Group& b = g.base();
      if (!chi_hom_rec(x, c, offset, m) || !chi_hom_rec(b, c, offset + x.arity(), m)) return false;
      // Invariance of the kernel part under the action, on generators.
      const std::vector<Integer> cx(c.begin() + static_cast<std::ptrdiff_t>(offset),
                                    c.begin() + static_cast<std::ptrdiff_t>(offset + x.arity()));
      if (std::all_of(cx.begin(), cx.end(), [](const Integer& v) { return v == 0; })) return true;
      for (const auto& beta : b.generators()) {
        for (const auto& xi : x.generators()) {
          const Rational d = dot(cx, g.action().apply(beta, xi)) - dot(cx, xi);
          if (m == 0) {
            if (d != 0) return false;
          } else {
            if (!is_integral(d) || mod(numerator_of(d), m) != 0) return false;
          }
        }
      }
      return true;
    }
  }
  return false;
}

std::string vector_string(const std::vector<Integer>& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += c[i].str();
  }
  return out + ")";
}

std::optional<Verdict> functional_certificate(const Group& g, const GeneratedSpec& spec, const Element& t) {
  if (!g.is_abelian() || g.arity() > kFunctionalMaxDim) return std::nullopt;
  std::vector<bool> allowed(g.arity());
  for (std::size_t i = 0; i < g.arity(); ++i) allowed[i] = is_additive_coord(g.coordinates()[i]);
  std::optional<std::vector<Integer>> found;
  std::string reason;
  for_each_vector(allowed, -kFunctionalBound, kFunctionalBound, [&](const std::vector<Integer>& c) {
    const Rational ct = dot(c, t);
    if (ct > 0) return false;
    std::vector<Ray> level;
    for (const auto& r : spec.rays) {
      const Rational cr = dot(c, r.element);
      if (cr < 0) return false;
      if (cr == 0) level.push_back(r);
    }
    if (ct == 0 && level.size() == spec.rays.size()) return false;
    if (!functional_is_homomorphism(g, c, 0)) return false;
    if (ct < 0) {
      reason = ": c is nonnegative on every generator and negative here";
    } else if (level.empty()) {
      reason = ": c is positive on every generator and zero on this nonzero element";
    } else {
      // Summands of an element on the hyperplane c = 0 all lie on it.
      GeneratedSpec face;
      face.rays = std::move(level);
      if (!functional_certificate(g, face, t)) return false;
      reason = ": c is nonnegative on the generators and the face c = 0 excludes this element";
    }
    found = c;
    return true;
  });
  if (!found) return std::nullopt;
  return Verdict::no("separating functional c=" + vector_string(*found) + reason);
}

std::optional<Verdict> modular_certificate(const Group& g, const GeneratedSpec& spec, const Element& t) {
  if (g.arity() > kFunctionalMaxDim) return std::nullopt;
  for (std::int64_t m = 2; m <= kMaxModulus; ++m) {
    const Integer mm = m;
    std::vector<bool> allowed(g.arity());
    bool any = false;
    for (std::size_t i = 0; i < g.arity(); ++i) {
      const auto& ci = g.coordinates()[i];
      allowed[i] = ci.kind == CoordKind::kInteger ||
                   (ci.kind == CoordKind::kResidue && ci.modulus % static_cast<std::size_t>(m) == 0);
      any = any || allowed[i];
    }
    if (!any) return std::nullopt;
    std::optional<std::vector<Integer>> found;
    for_each_vector(allowed, 0, m - 1, [&](const std::vector<Integer>& c) {
      const Rational ct = dot(c, t);
      if (!is_integral(ct)) return false;
      Integer d = mm;
      for (const auto& r : spec.rays) {
        const Rational cr = dot(c, r.element);
        if (!is_integral(cr)) return false;
        d = boost::multiprecision::gcd(d, mod(numerator_of(cr), mm));
      }
      if (mod(numerator_of(ct), d) == 0) return false;
      if (!functional_is_homomorphism(g, c, mm)) return false;
      found = c;
      return true;
    });
    if (found) {
      const std::string kind = m == 2 ? "parity" : "modular";
      return Verdict::no(kind + " certificate: x ↦ c·x mod " + std::to_string(m) + " with c=" +
                         vector_string(*found) +
                         " is a homomorphism whose values on generators span a subgroup missing this element");
    }
  }
  return std::nullopt;
}

struct PoolEntry {
  Element element;
  bool rational = false;
  std::size_t conjugator_length = 0;
};

class Search {
 public:
  Search(const Group& g, const GeneratedSpec& spec, const SaturationBudget& budget)
      : g_(g), spec_(spec), budget_(budget) {
    build_pool();
    node_cap_ = kNodesPerUnit * std::max<std::size_t>(1, budget.max_summands) *
                std::max<std::size_t>(1, budget.max_conjugators);
  }

  Verdict run(const Element& t) {
    const bool found = reach(t, budget_.max_summands);
    Verdict v = found ? Verdict::yes(Scope::kSearch, "decomposed into conjugates of generators")
                      : Verdict::unknown("not reached within the saturation budget");
    if (found) {
      for (const auto& [label, e] : trail_) v.with(label, g_, e);
    }
    std::size_t summands = 0;
    for (const auto& entry : trail_) summands += entry.first == "conjugator" ? 0 : 1;
    v.used.conjugator_length = found ? used_conj_ : budget_.max_conjugators;
    v.used.summands = found ? summands : budget_.max_summands;
    return v;
  }

 private:
  void build_pool() {
    std::vector<Element> step;
    for (const auto& gen : g_.generators()) {
      step.push_back(gen);
      step.push_back(g_.neg(gen));
    }
    std::map<Element, std::size_t> conjugators{{g_.zero(), 0}};
    std::vector<Element> frontier{g_.zero()};
    for (std::size_t len = 1; len <= budget_.max_conjugators; ++len) {
      std::vector<Element> next;
      for (const auto& w : frontier) {
        for (const auto& s : step) {
          Element e = g_.add(w, s);
          if (conjugators.emplace(e, len).second) next.push_back(std::move(e));
        }
      }
      frontier = std::move(next);
    }
    std::set<std::pair<Element, bool>> seen;
    for (const auto& r : spec_.rays) {
      for (const auto& [w, len] : conjugators) {
        Element c = g_.conjugate(w, r.element);
        if (g_.is_zero(c)) continue;
        if (seen.emplace(c, r.rational).second) pool_.push_back(PoolEntry{std::move(c), r.rational, len});
      }
    }
    std::stable_sort(pool_.begin(), pool_.end(), [](const PoolEntry& a, const PoolEntry& b) {
      return a.conjugator_length < b.conjugator_length;
    });
  }

  // One summand: a base element, a pool element (or positive multiple of a
  // rational one) or a conjugate found by the linear solver.
  bool direct(const Element& t) {
    if (spec_.base && spec_.base(t, budget_).is_yes()) {
      trail_.emplace_back("generator", t);
      return true;
    }
    for (const auto& p : pool_) {
      if (p.element == t || (p.rational && is_positive_multiple(g_, t, p.element))) {
        used_conj_ = std::max(used_conj_, p.conjugator_length);
        trail_.emplace_back("conjugate", t);
        return true;
      }
    }
    return solve(t);
  }

  // For a semidirect carrier with a linear action: t = (x,b) is the
  // conjugate of s = (x0,b) ∈ A by (y,0) when (id - φ_b) y = x - x0.
  bool solve(const Element& t) {
    if (g_.kind() != GroupKind::kSemidirect) return false;
    const Group& xg = g_.kernel();
    for (const auto& c : xg.coordinates()) {
      if (!is_additive_coord(c)) return false;
    }
    const Element b = g_.base_part(t);
    const Element x = g_.kernel_part(t);
    const auto m = g_.action().matrix_at(b);
    if (!m) return false;
    std::vector<Element> starts;
    const Element origin = g_.pair(xg.zero(), b);
    if ((spec_.base && spec_.base(origin, budget_).is_yes()) || is_ray(origin)) starts.push_back(xg.zero());
    for (const auto& r : spec_.rays) {
      if (!r.rational && g_.base_part(r.element) == b) starts.push_back(g_.kernel_part(r.element));
    }
    const std::size_t k = xg.arity();
    const Matrix d = Matrix::identity(k) - *m;
    for (const auto& x0 : starts) {
      std::vector<Rational> rhs(k);
      for (std::size_t i = 0; i < k; ++i) rhs[i] = x[i] - x0[i];
      std::optional<std::vector<Rational>> y;
      if (m->is_diagonal()) {
        y.emplace(k);
        for (std::size_t i = 0; i < k && y; ++i) {
          if (d(i, i) == 0) {
            if (rhs[i] != 0) y.reset();
          } else {
            (*y)[i] = rhs[i] / d(i, i);
          }
        }
      } else {
        y = d.solve(rhs);
      }
      if (!y) continue;
      const Element ye(*y);
      if (!xg.accepts(ye)) continue;
      const Element conj = g_.pair(ye, g_.base().zero());
      if (!(g_.conjugate(conj, g_.pair(x0, b)) == t)) continue;
      trail_.emplace_back("conjugator", conj);
      trail_.emplace_back("conjugate", t);
      used_conj_ = std::max<std::size_t>(used_conj_, 1);
      return true;
    }
    return false;
  }

  bool is_ray(const Element& e) const {
    for (const auto& r : spec_.rays) {
      if (r.element == e) return true;
    }
    return false;
  }

  bool reach(const Element& t, std::size_t depth) {
    if (g_.is_zero(t)) return true;
    if (depth == 0 || nodes_ >= node_cap_) return false;
    ++nodes_;
    const auto key = std::make_pair(t, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t mark = trail_.size();
    bool ok = direct(t);
    if (!ok && depth > 1 && !(spec_.envelope && spec_.envelope(t, budget_).is_no())) {
      for (const auto& p : pool_) {
        for (int side = 0; side < 2 && !ok; ++side) {
          const Element rest = side == 0 ? g_.add(g_.neg(p.element), t) : g_.sub(t, p.element);
          if (spec_.envelope && spec_.envelope(rest, budget_).is_no()) continue;
          const std::size_t inner = trail_.size();
          if (reach(rest, depth - 1)) {
            ok = true;
            trail_.emplace_back("conjugate", p.element);
            used_conj_ = std::max(used_conj_, p.conjugator_length);
          } else {
            trail_.resize(inner);
          }
        }
        if (ok || nodes_ >= node_cap_) break;
      }
    }
    if (!ok) trail_.resize(mark);
    if (ok || nodes_ < node_cap_) memo_[key] = ok;
    return ok;
  }

  const Group& g_;
  const GeneratedSpec& spec_;
  const SaturationBudget& budget_;
  std::vector<PoolEntry> pool_;
  std::map<std::pair<Element, std::size_t>, bool> memo_;
  std::vector<std::pair<std::string, Element>> trail_;
  std::size_t nodes_ = 0;
  std::size_t node_cap_ = 0;
  std::size_t used_conj_ = 0;
};

}  // namespace

bool is_positive_multiple(const Group& g, const Element& t, const Element& d) {
  if (t.size() != d.size()) return false;
  std::optional<Rational> q;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) {
      if (t[i] != 0) return false;
      continue;
    }
    if (g.coordinates()[i].kind != CoordKind::kRational) return false;
    const Rational r = t[i] / d[i];
    if (q && *q != r) return false;
    q = r;
  }
  return q && *q > 0;
}

bool functional_is_homomorphism(const Group& g, const std::vector<Integer>& c, const Integer& m) {
  return chi_hom_rec(g, c, 0, m);
}

Verdict saturate(const Group& g, const GeneratedSpec& spec, const Element& t, const SaturationBudget& budget) {
  if (g.is_zero(t)) return Verdict::yes(Scope::kExact, "zero");
  if (spec.envelope) {
    const Verdict e = spec.envelope(t, budget);
    if (e.is_no()) {
      Verdict v = Verdict::no("outside a compatible envelope containing the generated cone");
      v.note += e.note.empty() ? "" : " (" + e.note + ")";
      return v;
    }
  }
  if (spec.base && spec.base(t, budget).is_yes()) return Verdict::yes(Scope::kExact, "generator");
  for (const auto& r : spec.rays) {
    if (r.element == t || (r.rational && is_positive_multiple(g, t, r.element))) {
      return Verdict::yes(Scope::kExact, "generator");
    }
  }
  if (spec.rays_complete) {
    if (auto v = functional_certificate(g, spec, t)) return *v;
    if (auto v = modular_certificate(g, spec, t)) return *v;
  }
  Search search(g, spec, budget);
  return search.run(t);
}

}  // namespace splitord::detail
