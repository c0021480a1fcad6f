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

#ifndef SPLITORD_CLI_CLI_HPP_
#define SPLITORD_CLI_CLI_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "splitord/classifiers/classifiers.hpp"

namespace splitord::cli {

using Json = nlohmann::json;

inline constexpr const char* kFormat = "splitord/1";

/// A malformed document. path is a JSON pointer to the offending field.
class DocumentError : public ParseError {
 public:
  DocumentError(std::string path, const std::string& message)
      : ParseError(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class Category { kCheck, kLattice, kClassify, kPullback, kClassifier };

const char* to_string(Category c);
std::optional<Category> parse_category(const std::string& name);

struct Query {
  std::string id;
  std::string op;
  Category category;
  Json args;
  std::optional<Json> expect;
  std::string path;
};

struct Document {
  Json source;
  SaturationBudget budget;
  std::map<std::string, Group> groups;
  std::map<std::string, Cone> cones;
  std::map<std::string, PreorderedGroup> preorders;
  std::map<std::string, Action> actions;
  std::map<std::string, Homomorphism> homs;
  std::map<std::string, Extension> extensions;
  std::map<std::string, Point> points;
  std::vector<Query> queries;
};

/// Parses and validates every declaration and query reference. Throws
/// DocumentError.
Document parse_document(const std::string& text);
Document parse_document(const Json& j);

/// Element literal: an array of coordinate strings ("3", "-1/2", "r4").
Element parse_element(const Group& g, const Json& literal, const std::string& path = {});
Json format_element(const Group& g, const Element& e);

struct BudgetOverrides {
  std::optional<std::size_t> conjugators;
  std::optional<std::size_t> summands;
  std::optional<std::int64_t> window;
};

struct RunOptions {
  BudgetOverrides overrides;
  /// Budget multiplier applied after overrides (2 doubles every component).
  unsigned scale = 1;
  std::optional<Category> only;
  std::size_t jobs = 1;
};

struct QueryResult {
  std::string id;
  std::string op;
  /// Empty unless the query threw.
  std::string error;
  Verdict verdict;
  Json values = Json::object();
  std::optional<Json> expect;
  bool matches = true;
  std::string mismatch;
  double wall_ms = 0;
};

struct Report {
  SaturationBudget budget;
  std::vector<QueryResult> results;

  bool ok() const;
  /// 0 when every query ran and met its expectation, 1 otherwise.
  int exit_code() const;
  /// Deterministic unless timing is requested.
  Json to_json(bool timing = false) const;
  std::string to_text(bool timing = false) const;
};

SaturationBudget effective_budget(const Document& doc, const RunOptions& options);
Report run(const Document& doc, const RunOptions& options = {});

/// The built-in scenario document with embedded expectations.
const std::string& builtin_catalog_text();
Document builtin_catalog();

}  // namespace splitord::cli

#endif  // SPLITORD_CLI_CLI_HPP_
