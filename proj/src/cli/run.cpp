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

#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "splitord/cli/cli.hpp"

namespace splitord::cli {

namespace {

std::string truth(const Verdict& v) { return to_string(v.truth); }

Json verdict_json(const Verdict& v) {
  Json w = Json::array();
  for (const auto& x : v.witnesses) w.push_back({{"label", x.label}, {"value", format_element(x.group, x.value)}});
  return {{"truth", truth(v)},
          {"scope", to_string(v.scope)},
          {"note", v.note},
          {"witnesses", w},
          {"budget_used",
           {{"conjugator_length", v.used.conjugator_length},
            {"summands", v.used.summands},
            {"window_elements", v.used.window_elements}}}};
}

std::string literal_text(const Group& g, const Element& e) { return format_element(g, e).dump(); }

AutConeKind order_kind(const std::string& s) {
  if (s == "tilde") return AutConeKind::kTilde;
  if (s == "plus") return AutConeKind::kPlus;
  if (s == "minus") return AutConeKind::kMinus;
  if (s == "trivial") return AutConeKind::kTrivial;
  return AutConeKind::kFull;
}

ExtNat extnat_of(const Json& v) {
  if (v.is_number_unsigned()) return ExtNat(v.get<long long>());
  if (v.is_string()) return ExtNat::parse(v.get<std::string>());
  throw ParseError("sequence terms are nonnegative integers or \"inf\"");
}

struct Outcome {
  Verdict verdict;
  Json values = Json::object();
};

class Executor {
 public:
  Executor(const Document& doc, const SaturationBudget& budget) : doc_(doc), b_(budget) {}

  Outcome operator()(const Query& q) const {
    const Json& a = q.args;
    const std::string& op = q.op;
    if (op == "compatible_exists") {
      const CompatibleExistence ce = compatible_exists(ext(a, "extension"), b_);
      return {ce.verdict, {{"certificate", ce.certificate.has_value()}}};
    }
    if (op == "is_compatible") {
      const Point& p = point(a, "point");
      const std::string mode = a.value("mode", std::string("both"));
      const CompatMode m = mode == "interval" ? CompatMode::kInterval
                           : mode == "definitional" ? CompatMode::kDefinitional
                                                    : CompatMode::kBoth;
      return {is_compatible(p.cone, p.ext, m, b_), {{"mode", mode}}};
    }
    if (op == "minimal_equals_product") return {is_minimal_equal_product(ext(a, "extension"), b_)};
    if (op == "contains") {
      const Point& p = point(a, "point");
      return {p.cone.contains(parse_element(p.ext.carrier, a["element"]), b_)};
    }
    if (op == "lattice") return lattice(a);
    if (op == "validate_family") {
      const Extension& e = ext(a, "extension");
      const Json& f = a.at("family");
      std::vector<ExtNat> seq;
      for (const auto& t : f.at("sequence")) seq.push_back(extnat_of(t));
      const ExtNat tail = f.contains("tail") ? extnat_of(f["tail"]) : ExtNat::infinity();
      const FamilyValidation v = validate_family(ConeFamily::up_sets(e.b, e.x, seq, tail), e.action, b_);
      Json conds = Json::array();
      for (const auto& c : v.conditions) conds.push_back(truth(c));
      return {v.verdict, {{"conditions", conds}, {"conjugation_invariance", truth(v.conjugation_invariance)}}};
    }
    if (op == "is_rali") {
      const RaliResult r = is_rali(point(a, "point"), b_);
      return {r.verdict, {{"cone_route", truth(r.cone_route)}, {"adjoint_route", truth(r.adjoint_route)}}};
    }
    if (op == "is_strong") return {is_strong(point(a, "point"), b_)};
    if (op == "stably_strong" || op == "classify") {
      const Point& p = point(a, "point");
      const auto catalog = default_catalog(p.ext.b);
      if (op == "stably_strong") {
        const StablyStrongReport r = stably_strong_over(p, catalog, b_);
        return {r.verdict, {{"per_morphism", per_morphism(r)}, {"scope_note", r.scope_note}}};
      }
      const PointClassification c = classify_point(p, catalog, b_);
      return {c.strong,
              {{"rali", truth(c.rali)},
               {"strong", truth(c.strong)},
               {"stably_strong", truth(c.stably_strong.verdict)},
               {"per_morphism", per_morphism(c.stably_strong)}}};
    }
    if (op == "hom_leq") {
      return {hom_leq(hom(a, "g"), hom(a, "h"), preorder(a, "source"), preorder(a, "target"), b_)};
    }
    if (op == "point_morphism" || op == "ssfl") {
      const Point& src = point(a, "source");
      const Point& dst = point(a, "target");
      const PointMorphism m = a.contains("a") ? PointMorphism{hom(a, "a"), hom(a, "b"), hom(a, "c")} : identity_morphism(src);
      if (op == "point_morphism") return {check_point_morphism(m, src, dst, b_)};
      const SsflResult r = ssfl_check(m, src, dst, b_);
      return {r.verdict,
              {{"hypotheses", truth(r.hypotheses)},
               {"morphism", truth(r.morphism)},
               {"b_iso", truth(r.b_iso)},
               {"b_inverse_monotone", truth(r.b_inverse_monotone)}}};
    }
    if (op == "pullback") {
      const Point pb = pullback(point(a, "point"), preorder(a, "source"), hom(a, "along"), b_);
      Json members = Json::object();
      if (a.contains("contains")) {
        for (const auto& lit : a["contains"]) {
          const Element t = parse_element(pb.ext.carrier, lit);
          members[literal_text(pb.ext.carrier, t)] = truth(pb.cone.contains(t, b_));
        }
      }
      return {is_strong(pb, b_), {{"members", members}, {"action_trivial", pb.ext.action.is_trivial()}}};
    }
    return classifier_op(q);
  }

 private:
  Outcome lattice(const Json& a) const {
    const Extension& e = ext(a, "extension");
    LatticeScope scope = LatticeScope::exhaustive();
    if (a.contains("scope") && a["scope"].value("kind", std::string()) == "superadditive") {
      scope = LatticeScope::superadditive(a["scope"].at("n").get<std::size_t>(), a["scope"].at("m").get<std::size_t>());
    }
    const LatticeReport r = enumerate_compatible_cones(e, scope, b_);
    Json values = {{"count", r.count()},
                   {"candidates", r.candidates},
                   {"meet_closed", r.meet_closed},
                   {"join_closed", r.join_closed},
                   {"joins_outside_scope", r.joins_outside_scope},
                   {"scope", scope.describe()}};
    if (a.value("list", false)) {
      Json list = Json::array();
      for (const auto& c : r.cones) {
        if (scope.kind == LatticeScope::Kind::kSuperadditiveWindow) {
          Json seq = Json::array();
          for (const auto& x : c.sequence) seq.push_back(x.to_string());
          list.push_back(seq);
        } else {
          list.push_back(c.members);
        }
      }
      values["cones"] = list;
    }
    const Scope s = scope.kind == LatticeScope::Kind::kExhaustiveFinite ? Scope::kExact : Scope::kWindow;
    Verdict v = r.meet_closed && r.join_closed ? Verdict::yes(s, "closed under meets and joins")
                                               : Verdict::no("not closed under meets or joins");
    return {v, values};
  }

  Outcome classifier_op(const Query& q) const {
    const Json& a = q.args;
    const std::string& op = q.op;
    if (op == "classify_into" || op == "sclass") {
      const Point& p = point(a, "point");
      const AutOrder o = aut_cone(monotone_aut(p.ext.x), order_kind(a["order"]), b_);
      if (op == "sclass") {
        const SClassMembership m = sclass_membership(p, o, b_);
        return {m.verdict,
                {{"positive_images", truth(m.positive_images)}, {"kernel_reflection", truth(m.kernel_reflection)}}};
      }
      const Classifier cls = build_classifier(p.ext.x, o, b_);
      const ClassifyResult r = classify_into(p, cls, b_);
      Json images = Json::object();
      for (const auto& g : p.ext.b.group.generators()) {
        images[literal_text(p.ext.b.group, g)] = format_element(o.aut.group, r.phi_bar(g));
      }
      return {r.phi_bar_monotone && r.total_monotone && r.uniqueness,
              {{"phi_bar_monotone", truth(r.phi_bar_monotone)},
               {"total_monotone", truth(r.total_monotone)},
               {"morphism", truth(r.is_morphism)},
               {"uniqueness", truth(r.uniqueness)},
               {"phi_bar", images}}};
    }
    const PreorderedGroup& x = preorder(a, "preorder");
    if (op == "no_classifier_witness") {
      const auto w = no_classifier_witness(x, b_);
      if (!w) return {Verdict::no("no automorphism in P+ fails pointwise equivalence")};
      const MonotoneAutGroup aut = monotone_aut(x);
      Verdict v = Verdict::yes(Scope::kExact, w->describe);
      v.with("alpha", aut.group, w->alpha).with("x", x.group, w->x);
      return {v};
    }
    const MonotoneAutGroup aut = monotone_aut(x);
    if (op == "monotone_aut") {
      Json values = {{"kind", to_string(aut.kind)}, {"describe", aut.describe()}};
      if (aut.group.is_finite()) values["order"] = aut.group.order();
      return {Verdict::yes(Scope::kExact, aut.describe()), values};
    }
    const AutOrder o = aut_cone(aut, order_kind(a["order"]), b_);
    if (op == "aut_contains") return {o.cone.contains(parse_element(aut.group, a.at("alpha")), b_)};
    if (op == "admissible") return {admissible_check(o, b_)};
    // build_classifier
    const Classifier cls = build_classifier(x, o, b_);
    Json values = {{"carrier", cls.point.ext.carrier.describe()}};
    if (cls.point.ext.carrier.is_finite()) values["carrier_order"] = cls.point.ext.carrier.order();
    if (o.which == AutConeKind::kTilde) {
      const RaliResult r = is_rali(cls.point, b_);
      values["rali"] = truth(r.verdict);
      return {r.verdict, values};
    }
    return {Verdict::yes(Scope::kExact, "lex order on the classifier"), values};
  }

  static Json per_morphism(const StablyStrongReport& r) {
    Json out = Json::array();
    for (const auto& [name, v] : r.per_morphism) out.push_back({{"map", name}, {"strong", truth(v)}});
    return out;
  }

  const Extension& ext(const Json& a, const char* key) const { return doc_.extensions.at(a.at(key).get<std::string>()); }
  const Point& point(const Json& a, const char* key) const { return doc_.points.at(a.at(key).get<std::string>()); }
  const Homomorphism& hom(const Json& a, const char* key) const { return doc_.homs.at(a.at(key).get<std::string>()); }
  const PreorderedGroup& preorder(const Json& a, const char* key) const {
    return doc_.preorders.at(a.at(key).get<std::string>());
  }

  const Document& doc_;
  SaturationBudget b_;
};

/// Checks the query outcome against its "expect" entry: a truth string, or
/// an object with optional "verdict", "values" (subset match) and
/// "witness" (some witness has this literal).
void compare(QueryResult& r) {
  if (!r.expect) return;
  const Json& e = *r.expect;
  const std::string actual = to_string(r.verdict.truth);
  auto mismatch = [&](const std::string& why) {
    r.matches = false;
    r.mismatch = why;
  };
  if (!r.error.empty()) return mismatch("query failed: " + r.error);
  if (e.is_string()) {
    if (e.get<std::string>() != actual) mismatch("expected " + e.get<std::string>() + ", got " + actual);
    return;
  }
  if (e.contains("verdict") && e["verdict"].get<std::string>() != actual) {
    return mismatch("expected " + e["verdict"].get<std::string>() + ", got " + actual);
  }
  if (e.contains("values")) {
    for (const auto& [k, v] : e["values"].items()) {
      if (!r.values.contains(k) || r.values[k] != v) {
        return mismatch("value " + k + ": expected " + v.dump() + ", got " + (r.values.contains(k) ? r.values[k].dump() : "nothing"));
      }
    }
  }
  if (e.contains("witness")) {
    bool found = false;
    for (const auto& w : r.verdict.witnesses) found = found || format_element(w.group, w.value) == e["witness"];
    if (!found) mismatch("no witness equal to " + e["witness"].dump());
  }
}

}  // namespace

SaturationBudget effective_budget(const Document& doc, const RunOptions& options) {
  SaturationBudget b = doc.budget;
  if (options.overrides.conjugators) b.max_conjugators = *options.overrides.conjugators;
  if (options.overrides.summands) b.max_summands = *options.overrides.summands;
  if (options.overrides.window) {
    b.window.integer_bound = *options.overrides.window;
    b.window.numerator_bound = 2 * *options.overrides.window;
    b.window.denominator_bound = *options.overrides.window;
  }
  for (unsigned s = options.scale; s > 1; s /= 2) b = b.doubled();
  return b;
}

Report run(const Document& doc, const RunOptions& options) {
  Report report;
  report.budget = effective_budget(doc, options);
  std::vector<const Query*> selected;
  for (const auto& q : doc.queries) {
    if (!options.only || q.category == *options.only) selected.push_back(&q);
  }
  report.results.resize(selected.size());
  const Executor exec(doc, report.budget);
  auto work = [&](std::size_t i) {
    const Query& q = *selected[i];
    QueryResult& r = report.results[i];
    r.id = q.id;
    r.op = q.op;
    r.expect = q.expect;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = exec(q);
      r.verdict = std::move(o.verdict);
      r.values = std::move(o.values);
    } catch (const std::exception& e) {
      r.error = e.what();
      r.verdict = Verdict::unknown("error");
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    compare(r);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, selected.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  return report;
}

bool Report::ok() const {
  for (const auto& r : results) {
    if (!r.error.empty() || !r.matches) return false;
  }
  return true;
}

int Report::exit_code() const { return ok() ? 0 : 1; }

Json Report::to_json(bool timing) const {
  Json rs = Json::array();
  std::size_t errors = 0;
  std::size_t mismatches = 0;
  for (const auto& r : results) {
    Json j = {{"id", r.id}, {"op", r.op}, {"verdict", verdict_json(r.verdict)}, {"values", r.values}};
    if (!r.error.empty()) {
      j["error"] = r.error;
      ++errors;
    }
    if (r.expect) {
      j["expect"] = *r.expect;
      j["matches"] = r.matches;
      if (!r.matches) {
        j["mismatch"] = r.mismatch;
        ++mismatches;
      }
    }
    if (timing) j["wall_ms"] = r.wall_ms;
    rs.push_back(std::move(j));
  }
  return {{"format", "splitord-report/1"},
          {"budget",
           {{"conjugators", budget.max_conjugators},
            {"summands", budget.max_summands},
            {"window",
             {{"integer_bound", budget.window.integer_bound},
              {"numerator_bound", budget.window.numerator_bound},
              {"denominator_bound", budget.window.denominator_bound},
              {"max_elements", budget.window.max_elements}}}}},
          {"results", rs},
          {"summary", {{"queries", results.size()}, {"errors", errors}, {"mismatches", mismatches}}}};
}

std::string Report::to_text(bool timing) const {
  std::size_t id_w = 2;
  std::size_t op_w = 2;
  for (const auto& r : results) {
    id_w = std::max(id_w, r.id.size());
    op_w = std::max(op_w, r.op.size());
  }
  std::ostringstream out;
  for (const auto& r : results) {
    out << std::left << std::setw(static_cast<int>(id_w)) << r.id << "  " << std::setw(static_cast<int>(op_w)) << r.op
        << "  ";
    if (!r.error.empty()) {
      out << "ERROR    " << r.error;
    } else {
      out << std::setw(7) << to_string(r.verdict.truth) << "  " << std::setw(6) << to_string(r.verdict.scope) << "  "
          << r.verdict.note;
      for (const auto& w : r.verdict.witnesses) out << " " << w.label << "=" << format_element(w.group, w.value).dump();
    }
    if (r.expect) out << (r.matches ? "  [expected]" : "  [MISMATCH: " + r.mismatch + "]");
    if (timing) out << "  (" << std::fixed << std::setprecision(1) << r.wall_ms << " ms)";
    out << "\n";
  }
  out << results.size() << " queries, " << (ok() ? "all ok" : "failures present") << "\n";
  return out.str();
}

}  // namespace splitord::cli
