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

#include "doctest.h"
#include "splitord/cli/cli.hpp"

using namespace splitord;
using namespace splitord::cli;

namespace {

const char* const kSign = R"({
  "format": "splitord/1",
  "groups": {"Z": {"type": "free_abelian", "rank": 1}, "Q": {"type": "rational_vector", "rank": 1}},
  "cones": {"N": {"group": "Z", "type": "natural_orthant"}, "F": {"group": "Z", "type": "full"}},
  "preorders": {"ZN": {"group": "Z", "cone": "N"}, "ZF": {"group": "Z", "cone": "F"}},
  "actions": {"sign": {"type": "sign", "acting": "Z", "acted": "Z"}},
  "extensions": {"e": {"x": "ZN", "b": "ZF", "action": "sign"}},
  "queries": [{"id": "exists", "op": "compatible_exists", "extension": "e"}]
})";

Json sign_doc() { return Json::parse(kSign); }

}  // namespace

TEST_CASE("documents parse and run") {
  const Document doc = parse_document(std::string(kSign));
  CHECK(doc.groups.size() == 2);
  CHECK(doc.extensions.count("e") == 1);
  const Report r = run(doc);
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].verdict.is_no());
  CHECK(r.exit_code() == 0);
  CHECK(r.to_json().dump() == run(doc).to_json().dump());
  CHECK(r.to_json(true)["results"][0].contains("wall_ms"));
  CHECK_FALSE(r.to_json()["results"][0].contains("wall_ms"));
}

TEST_CASE("diagnostics name the offending field") {
  Json j = sign_doc();
  j["preorders"]["ZN"]["cone"] = "Missing";
  try {
    parse_document(j);
    FAIL("expected a DocumentError");
  } catch (const DocumentError& e) {
    CHECK(e.path() == "/preorders/ZN/cone");
    CHECK(std::string(e.what()).find("Missing") != std::string::npos);
  }
  Json k = sign_doc();
  k["queries"][0]["op"] = "nonsense";
  CHECK_THROWS_AS(parse_document(k), DocumentError);
  Json f = sign_doc();
  f["format"] = "other/2";
  CHECK_THROWS_AS(parse_document(f), DocumentError);
  CHECK_THROWS_AS(parse_document(std::string("{ nope")), DocumentError);
  Json c = sign_doc();
  c["groups"]["P"] = {{"type", "product"}, {"factors", {"P"}}};
  CHECK_THROWS_WITH_AS(parse_document(c), doctest::Contains("circular"), DocumentError);
}

TEST_CASE("element literals") {
  const Group q = Group::rational_vector(1);
  CHECK(parse_element(q, Json::array({"2/4"})) == Element(std::vector<Rational>{Rational(1, 2)}));
  CHECK(parse_element(q, Json::array({"−1/2"})) == Element(std::vector<Rational>{Rational(-1, 2)}));
  CHECK(format_element(q, Element(std::vector<Rational>{Rational(-1, 2)})) == Json::array({"-1/2"}));
  const Group z5 = Group::cyclic(5);
  CHECK(parse_element(z5, Json::array({"r4"})) == Element{4});
  CHECK_THROWS_AS(parse_element(q, Json::array({"1", "2"})), DocumentError);
  CHECK_THROWS_AS(parse_element(q, Json::array({1})), DocumentError);
}

TEST_CASE("expectations and budget overrides") {
  Json j = sign_doc();
  j["queries"][0]["expect"] = "yes";
  const Report r = run(parse_document(j));
  CHECK_FALSE(r.results[0].matches);
  CHECK(r.exit_code() == 1);

  RunOptions o;
  o.overrides.conjugators = 5;
  o.overrides.window = 3;
  o.scale = 2;
  const SaturationBudget b = effective_budget(parse_document(j), o);
  CHECK(b.max_conjugators == 10);
  CHECK(b.window.integer_bound == 6);

  o = {};
  o.only = Category::kLattice;
  CHECK(run(parse_document(j), o).results.empty());
}

TEST_CASE("built-in catalog") {
  const Document doc = builtin_catalog();
  CHECK(doc.queries.size() >= 7);
  const Report r = run(doc);
  for (const auto& q : r.results) {
    INFO(q.id << ": " << q.mismatch << q.error);
    CHECK(q.matches);
  }
}
