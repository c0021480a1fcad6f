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

#include <functional>
#include <set>

#include "splitord/cli/cli.hpp"

namespace splitord::cli {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] void fail(const std::string& path, const std::string& message) { throw DocumentError(path, message); }

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

std::string string_field(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_string()) fail(child(path, key), "expected a string");
  return v.get<std::string>();
}

std::size_t size_field(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_number_unsigned()) fail(child(path, key), "expected a nonnegative integer");
  return v.get<std::size_t>();
}

Rational rational_of(const Json& v, const std::string& path) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      for (std::size_t pos; (pos = s.find("−")) != std::string::npos;) s.replace(pos, 3, "-");
      return parse_rational(s);
    }
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path, "expected a rational literal");
}

Matrix matrix_of(const Json& v, const std::string& path) {
  if (!v.is_array() || v.empty() || !v[0].is_array()) fail(path, "expected a nonempty array of rows");
  const std::size_t rows = v.size();
  const std::size_t cols = v[0].size();
  std::vector<Rational> data;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array() || v[r].size() != cols) fail(child(path, r), "rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) data.push_back(rational_of(v[r][c], child(child(path, r), c)));
  }
  return Matrix(rows, cols, std::move(data));
}

std::vector<std::string> names_of(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) fail(child(path, i), "expected a name");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

/// Resolves named declarations on demand, so sections may reference each
/// other in any order. Cycles are reported.
class Resolver {
 public:
  Resolver(const Json& root, Document& doc) : root_(root), doc_(doc) {}

  Group group(const std::string& name, const std::string& from) {
    return resolve<Group>("groups", name, from, doc_.groups, [&](const Json& d, const std::string& p) { return make_group(d, p); });
  }
  Cone cone(const std::string& name, const std::string& from) {
    return resolve<Cone>("cones", name, from, doc_.cones, [&](const Json& d, const std::string& p) {
      return make_cone(d, group(string_field(d, "group", p), child(p, "group")), p);
    });
  }
  PreorderedGroup preorder(const std::string& name, const std::string& from) {
    return resolve<PreorderedGroup>("preorders", name, from, doc_.preorders, [&](const Json& d, const std::string& p) {
      const Group g = group(string_field(d, "group", p), child(p, "group"));
      const Json& c = field(d, "cone", p);
      Cone cn = c.is_string() ? cone(c.get<std::string>(), child(p, "cone")) : make_cone(c, g, child(p, "cone"));
      if (!cn.group().same_as(g)) fail(child(p, "cone"), "cone lives on another group");
      return PreorderedGroup(g, cn);
    });
  }
  Action action(const std::string& name, const std::string& from) {
    return resolve<Action>("actions", name, from, doc_.actions, [&](const Json& d, const std::string& p) { return make_action(d, p); });
  }
  Homomorphism hom(const std::string& name, const std::string& from) {
    return resolve<Homomorphism>("homs", name, from, doc_.homs, [&](const Json& d, const std::string& p) { return make_hom(d, p); });
  }
  Extension extension(const std::string& name, const std::string& from) {
    return resolve<Extension>("extensions", name, from, doc_.extensions, [&](const Json& d, const std::string& p) {
      return Extension::make(preorder(string_field(d, "x", p), child(p, "x")),
                             preorder(string_field(d, "b", p), child(p, "b")),
                             action(string_field(d, "action", p), child(p, "action")));
    });
  }
  Point point(const std::string& name, const std::string& from) {
    return resolve<Point>("points", name, from, doc_.points, [&](const Json& d, const std::string& p) {
      const Extension e = extension(string_field(d, "extension", p), child(p, "extension"));
      const Json& c = field(d, "cone", p);
      const std::string cp = child(p, "cone");
      if (c.is_string()) {
        const std::string k = c.get<std::string>();
        if (k == "minimal") return Point(e, minimal_cone(e));
        if (k == "product") return Point(e, product_cone(e));
        if (k == "lex") return Point(e, lex_cone(e));
        Cone named = cone(k, cp);
        if (!named.group().same_as(e.carrier)) fail(cp, "cone '" + k + "' does not live on the carrier");
        return Point(e, named);
      }
      return Point(e, make_cone(c, e.carrier, cp));
    });
  }

  void resolve_all() {
    static const std::vector<std::string> sections = {"groups", "cones", "preorders", "actions", "homs", "extensions",
                                                      "points"};
    for (const auto& s : sections) {
      auto it = root_.find(s);
      if (it == root_.end()) continue;
      if (!it->is_object()) fail("/" + s, "expected an object of named declarations");
      for (const auto& [name, _] : it->items()) {
        const std::string from = "/" + s;
        if (s == "groups") group(name, from);
        if (s == "cones") cone(name, from);
        if (s == "preorders") preorder(name, from);
        if (s == "actions") action(name, from);
        if (s == "homs") hom(name, from);
        if (s == "extensions") extension(name, from);
        if (s == "points") point(name, from);
      }
    }
  }

 private:
  template <class T, class Make>
  T resolve(const std::string& section, const std::string& name, const std::string& from, std::map<std::string, T>& memo,
            Make make) {
    if (auto it = memo.find(name); it != memo.end()) return it->second;
    auto sec = root_.find(section);
    if (sec == root_.end() || !sec->is_object() || !sec->contains(name)) {
      fail(from, "unresolved reference '" + name + "' (no such entry in " + section + ")");
    }
    const std::string path = "/" + section + "/" + name;
    if (!active_.insert(path).second) fail(path, "circular reference through '" + name + "'");
    try {
      T value = make((*sec)[name], path);
      active_.erase(path);
      memo.emplace(name, value);
      return value;
    } catch (const DocumentError&) {
      throw;
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

  Group make_group(const Json& d, const std::string& p) {
    const std::string type = string_field(d, "type", p);
    if (type == "cyclic") return Group::cyclic(size_field(d, "n", p));
    if (type == "free_abelian") return Group::free_abelian(size_field(d, "rank", p));
    if (type == "rational_vector") return Group::rational_vector(size_field(d, "rank", p));
    if (type == "positive_rationals") return Group::positive_rationals();
    if (type == "symmetric") return Group::symmetric(size_field(d, "n", p));
    if (type == "product") {
      std::vector<Group> fs;
      const auto names = names_of(field(d, "factors", p), child(p, "factors"));
      for (std::size_t i = 0; i < names.size(); ++i) fs.push_back(group(names[i], child(child(p, "factors"), i)));
      return Group::product(std::move(fs));
    }
    if (type == "cayley") {
      const Json& t = field(d, "table", p);
      if (!t.is_array()) fail(child(p, "table"), "expected an array of rows");
      std::vector<std::vector<std::size_t>> table;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t[i].is_array()) fail(child(child(p, "table"), i), "expected a row");
        std::vector<std::size_t> row;
        for (const auto& v : t[i]) {
          if (!v.is_number_unsigned()) fail(child(child(p, "table"), i), "entries are element indices");
          row.push_back(v.get<std::size_t>());
        }
        table.push_back(std::move(row));
      }
      const std::size_t id = d.contains("identity") ? size_field(d, "identity", p) : 0;
      return Group::cayley(std::move(table), id, d.value("name", std::string()));
    }
    if (type == "semidirect") {
      return Group::semidirect(group(string_field(d, "kernel", p), child(p, "kernel")),
                               group(string_field(d, "base", p), child(p, "base")),
                               action(string_field(d, "action", p), child(p, "action")));
    }
    fail(child(p, "type"), "unknown group type '" + type + "'");
  }

  std::vector<Element> elements_of(const Json& v, const Group& g, const std::string& p) {
    if (!v.is_array()) fail(p, "expected an array of element literals");
    std::vector<Element> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_element(g, v[i], child(p, i)));
    return out;
  }

  Cone make_cone(const Json& d, const Group& g, const std::string& p) {
    const std::string type = string_field(d, "type", p);
    Cone c = [&]() -> Cone {
      if (type == "trivial") return Cone::trivial(g);
      if (type == "full") return Cone::full(g);
      if (type == "natural_orthant") return Cone::natural_orthant(g);
      if (type == "extensional") return Cone::extensional(g, elements_of(field(d, "members", p), g, child(p, "members")));
      if (type == "generated") return Cone::generated(g, elements_of(field(d, "seeds", p), g, child(p, "seeds")));
      if (type == "product" || type == "lex") {
        const auto names = names_of(field(d, "parts", p), child(p, "parts"));
        std::vector<Cone> parts;
        for (std::size_t i = 0; i < names.size(); ++i) parts.push_back(cone(names[i], child(child(p, "parts"), i)));
        if (type == "product") return Cone::product(g, std::move(parts));
        if (parts.size() != 2) fail(child(p, "parts"), "lex needs two parts");
        return Cone::lex(g, parts[0], parts[1]);
      }
      fail(child(p, "type"), "unknown cone type '" + type + "'");
    }();
    if (d.contains("name")) c = c.named(d["name"].get<std::string>());
    return c;
  }

  Action make_action(const Json& d, const std::string& p) {
    const std::string type = string_field(d, "type", p);
    if (type == "precomposed") {
      return Action::precomposed(action(string_field(d, "base", p), child(p, "base")),
                                 hom(string_field(d, "along", p), child(p, "along")));
    }
    if (type == "product") {
      const auto names = names_of(field(d, "parts", p), child(p, "parts"));
      std::vector<Action> parts;
      for (std::size_t i = 0; i < names.size(); ++i) parts.push_back(action(names[i], child(child(p, "parts"), i)));
      return Action::product(std::move(parts));
    }
    const Group acted = group(string_field(d, "acted", p), child(p, "acted"));
    if (type == "dilation") return Action::dilation(acted);
    const Group acting = group(string_field(d, "acting", p), child(p, "acting"));
    if (type == "trivial") return Action::trivial(acting, acted);
    if (type == "sign") return Action::sign(acting, acted);
    if (type == "scaling") return Action::scaling(acting, acted, rational_of(field(d, "q", p), child(p, "q")));
    if (type == "matrix" || type == "matrix_table") {
      const Json& ms = field(d, "matrices", p);
      if (!ms.is_array()) fail(child(p, "matrices"), "expected an array of matrices");
      std::vector<Matrix> mats;
      for (std::size_t i = 0; i < ms.size(); ++i) mats.push_back(matrix_of(ms[i], child(child(p, "matrices"), i)));
      return type == "matrix" ? Action::matrix(acting, acted, std::move(mats))
                              : Action::matrix_table(acting, acted, std::move(mats));
    }
    if (type == "finite_table") {
      const Json& ps = field(d, "permutations", p);
      if (!ps.is_array()) fail(child(p, "permutations"), "expected an array of permutations");
      std::vector<std::vector<std::size_t>> perms;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!ps[i].is_array()) fail(child(child(p, "permutations"), i), "expected an index array");
        perms.push_back(ps[i].get<std::vector<std::size_t>>());
      }
      return Action::finite_table(acting, acted, std::move(perms));
    }
    fail(child(p, "type"), "unknown action type '" + type + "'");
  }

  Homomorphism make_hom(const Json& d, const std::string& p) {
    const std::string type = string_field(d, "type", p);
    if (type == "compose") {
      return Homomorphism::compose(hom(string_field(d, "outer", p), child(p, "outer")),
                                   hom(string_field(d, "inner", p), child(p, "inner")));
    }
    if (type == "identity") return Homomorphism::identity(group(string_field(d, "group", p), child(p, "group")));
    if (type == "scalar") {
      const Rational c = rational_of(field(d, "c", p), child(p, "c"));
      if (denominator_of(c) != 1) fail(child(p, "c"), "scalar must be an integer");
      return Homomorphism::scalar(group(string_field(d, "group", p), child(p, "group")), numerator_of(c));
    }
    const Group src = group(string_field(d, "source", p), child(p, "source"));
    const Group tgt = group(string_field(d, "target", p), child(p, "target"));
    if (type == "zero") return Homomorphism::zero(src, tgt);
    if (type == "linear") return Homomorphism::linear(src, tgt, matrix_of(field(d, "matrix", p), child(p, "matrix")));
    if (type == "generator_images" || type == "finite_table") {
      auto images = elements_of(field(d, "images", p), tgt, child(p, "images"));
      return type == "generator_images" ? Homomorphism::generator_images(src, tgt, std::move(images))
                                        : Homomorphism::finite_table(src, tgt, std::move(images));
    }
    fail(child(p, "type"), "unknown homomorphism type '" + type + "'");
  }

  const Json& root_;
  Document& doc_;
  std::set<std::string> active_;
};

struct OpInfo {
  Category category;
  /// Argument name -> section it references.
  std::vector<std::pair<std::string, std::string>> refs;
};

const std::map<std::string, OpInfo>& op_table() {
  static const std::map<std::string, OpInfo> table = {
      {"compatible_exists", {Category::kCheck, {{"extension", "extensions"}}}},
      {"is_compatible", {Category::kCheck, {{"point", "points"}}}},
      {"minimal_equals_product", {Category::kCheck, {{"extension", "extensions"}}}},
      {"contains", {Category::kCheck, {{"point", "points"}}}},
      {"lattice", {Category::kLattice, {{"extension", "extensions"}}}},
      {"validate_family", {Category::kLattice, {{"extension", "extensions"}}}},
      {"is_rali", {Category::kClassify, {{"point", "points"}}}},
      {"is_strong", {Category::kClassify, {{"point", "points"}}}},
      {"stably_strong", {Category::kClassify, {{"point", "points"}}}},
      {"classify", {Category::kClassify, {{"point", "points"}}}},
      {"hom_leq", {Category::kClassify, {{"g", "homs"}, {"h", "homs"}, {"source", "preorders"}, {"target", "preorders"}}}},
      {"point_morphism", {Category::kClassify, {{"source", "points"}, {"target", "points"}}}},
      {"ssfl", {Category::kClassify, {{"source", "points"}, {"target", "points"}}}},
      {"pullback", {Category::kPullback, {{"point", "points"}, {"along", "homs"}, {"source", "preorders"}}}},
      {"monotone_aut", {Category::kClassifier, {{"preorder", "preorders"}}}},
      {"aut_contains", {Category::kClassifier, {{"preorder", "preorders"}}}},
      {"admissible", {Category::kClassifier, {{"preorder", "preorders"}}}},
      {"build_classifier", {Category::kClassifier, {{"preorder", "preorders"}}}},
      {"classify_into", {Category::kClassifier, {{"point", "points"}}}},
      {"sclass", {Category::kClassifier, {{"point", "points"}}}},
      {"no_classifier_witness", {Category::kClassifier, {{"preorder", "preorders"}}}},
  };
  return table;
}

void check_refs(Resolver& r, const Json& args, const OpInfo& info, const std::string& path) {
  for (const auto& [arg, section] : info.refs) {
    const std::string name = string_field(args, arg, path);
    const std::string p = child(path, arg);
    if (section == "extensions") r.extension(name, p);
    if (section == "points") r.point(name, p);
    if (section == "homs") r.hom(name, p);
    if (section == "preorders") r.preorder(name, p);
  }
}

}  // namespace

const char* to_string(Category c) {
  switch (c) {
    case Category::kCheck:
      return "check";
    case Category::kLattice:
      return "lattice";
    case Category::kClassify:
      return "classify";
    case Category::kPullback:
      return "pullback";
    case Category::kClassifier:
      return "classifier";
  }
  return "?";
}

std::optional<Category> parse_category(const std::string& name) {
  for (Category c : {Category::kCheck, Category::kLattice, Category::kClassify, Category::kPullback, Category::kClassifier}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

Element parse_element(const Group& g, const Json& literal, const std::string& path) {
  if (!literal.is_array()) fail(path, "element literal must be an array of strings");
  std::vector<std::string> coords;
  for (std::size_t i = 0; i < literal.size(); ++i) {
    if (!literal[i].is_string()) fail(child(path, i), "coordinate literal must be a string");
    std::string s = literal[i].get<std::string>();
    for (std::size_t pos; (pos = s.find("−")) != std::string::npos;) s.replace(pos, 3, "-");
    coords.push_back(std::move(s));
  }
  try {
    return g.parse(coords);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Json format_element(const Group& g, const Element& e) { return Json(g.format(e)); }

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

Document parse_document(const Json& j) {
  if (!j.is_object()) fail("", "document must be a JSON object");
  const std::string format = string_field(j, "format", "");
  if (format != kFormat) fail("/format", "unsupported format '" + format + "', expected '" + kFormat + "'");
  Document doc;
  doc.source = j;
  if (auto b = j.find("budget"); b != j.end()) {
    if (!b->is_object()) fail("/budget", "expected an object");
    if (b->contains("conjugators")) doc.budget.max_conjugators = size_field(*b, "conjugators", "/budget");
    if (b->contains("summands")) doc.budget.max_summands = size_field(*b, "summands", "/budget");
    if (b->contains("window")) doc.budget.window.integer_bound = static_cast<std::int64_t>(size_field(*b, "window", "/budget"));
    if (b->contains("max_elements")) doc.budget.window.max_elements = size_field(*b, "max_elements", "/budget");
  }
  Resolver r(j, doc);
  r.resolve_all();

  const Json& qs = field(j, "queries", "");
  if (!qs.is_array()) fail("/queries", "expected an array");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const std::string p = child("/queries", i);
    Query q;
    q.path = p;
    q.id = qs[i].contains("id") ? string_field(qs[i], "id", p) : "q" + std::to_string(i + 1);
    if (!ids.insert(q.id).second) fail(child(p, "id"), "duplicate query id '" + q.id + "'");
    q.op = string_field(qs[i], "op", p);
    auto op = op_table().find(q.op);
    if (op == op_table().end()) fail(child(p, "op"), "unknown query op '" + q.op + "'");
    q.category = op->second.category;
    q.args = qs[i];
    if (qs[i].contains("expect")) q.expect = qs[i]["expect"];
    check_refs(r, qs[i], op->second, p);
    // Element literals are checked against the group they live in.
    if (q.op == "contains") {
      const Point pt = r.point(q.args["point"].get<std::string>(), child(p, "point"));
      parse_element(pt.ext.carrier, field(q.args, "element", p), child(p, "element"));
    }
    if (q.op == "pullback" && q.args.contains("contains")) {
      const PreorderedGroup c = r.preorder(q.args["source"].get<std::string>(), child(p, "source"));
      const Point pt = r.point(q.args["point"].get<std::string>(), child(p, "point"));
      const Group carrier = Group::semidirect(pt.ext.x.group, c.group, Action::trivial(c.group, pt.ext.x.group));
      const Json& els = q.args["contains"];
      if (!els.is_array()) fail(child(p, "contains"), "expected an array of element literals");
      for (std::size_t k = 0; k < els.size(); ++k) parse_element(carrier, els[k], child(child(p, "contains"), k));
    }
    if (q.op == "aut_contains" || q.op == "admissible" || q.op == "build_classifier" || q.op == "classify_into" ||
        q.op == "sclass") {
      const std::string w = string_field(q.args, "order", p);
      static const std::set<std::string> orders = {"tilde", "plus", "minus", "trivial", "full"};
      if (!orders.count(w)) fail(child(p, "order"), "unknown order '" + w + "'");
    }
    doc.queries.push_back(std::move(q));
  }
  return doc;
}

}  // namespace splitord::cli
