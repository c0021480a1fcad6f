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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "splitord/cli/cli.hpp"

namespace {

using namespace splitord;

constexpr int kParseFailure = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cli::DocumentError("", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Flags {
  std::string file;
  std::optional<std::size_t> conj;
  std::optional<std::size_t> sum;
  std::optional<std::int64_t> window;
  unsigned scale = 1;
  std::string report = "text";
  std::string out;
  bool timing = false;
  std::size_t jobs = 1;
};

void add_run_flags(CLI::App* app, Flags& f) {
  app->add_option("--budget-conj", f.conj, "Maximum conjugator word length");
  app->add_option("--budget-sum", f.sum, "Maximum number of summands in a decomposition");
  app->add_option("--window", f.window, "Integer bound of the test window");
  app->add_option("--budget-scale", f.scale, "Double every budget component log2(N) times")->check(CLI::PositiveNumber);
  app->add_option("--report", f.report, "Report format")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--out", f.out, "Write the report to this file");
  app->add_flag("--timing", f.timing, "Include wall-clock times in the report");
  app->add_option("--jobs", f.jobs, "Queries run concurrently")->check(CLI::PositiveNumber);
}

int emit(const cli::Report& report, const Flags& f) {
  const std::string text = f.report == "json" ? report.to_json(f.timing).dump(2) + "\n" : report.to_text(f.timing);
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(f.out, std::ios::binary);
    if (!o) {
      std::cerr << "error: cannot write " << f.out << "\n";
      return 1;
    }
    o << text;
  }
  return report.exit_code();
}

int run_document(const cli::Document& doc, const Flags& f, std::optional<cli::Category> only) {
  cli::RunOptions opts;
  opts.overrides = {f.conj, f.sum, f.window};
  opts.scale = f.scale;
  opts.only = only;
  opts.jobs = f.jobs;
  if (only) {
    bool any = false;
    for (const auto& q : doc.queries) any = any || q.category == *only;
    if (!any) {
      std::cerr << "error: the document has no " << cli::to_string(*only) << " queries\n";
      return kParseFailure;
    }
  }
  return emit(cli::run(doc, opts), f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitord: preordered groups, positive cones and split extensions"};
  app.require_subcommand(1);
  Flags f;
  bool dump = false;

  auto* run = app.add_subcommand("run", "Run every query of a document");
  auto* validate = app.add_subcommand("validate", "Parse and validate a document without running it");
  auto* paper = app.add_subcommand("paper", "Run the built-in scenario catalog against its expected verdicts");
  paper->add_flag("--dump", dump, "Print the catalog document instead of running it");
  add_run_flags(paper, f);
  std::map<CLI::App*, cli::Category> filtered;
  for (cli::Category c : {cli::Category::kCheck, cli::Category::kLattice, cli::Category::kClassify,
                          cli::Category::kPullback, cli::Category::kClassifier}) {
    auto* sub = app.add_subcommand(cli::to_string(c), std::string("Run the ") + cli::to_string(c) + " queries of a document");
    filtered[sub] = c;
  }
  for (auto* sub : app.get_subcommands({})) {
    if (sub == paper) continue;
    sub->add_option("file", f.file, "Problem document (JSON)")->required();
    if (sub != validate) add_run_flags(sub, f);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseFailure;
  }

  try {
    if (paper->parsed()) {
      if (dump) {
        std::cout << cli::builtin_catalog_text() << "\n";
        return 0;
      }
      return run_document(cli::builtin_catalog(), f, std::nullopt);
    }
    const cli::Document doc = cli::parse_document(read_file(f.file));
    if (validate->parsed()) {
      std::cout << "ok: " << doc.queries.size() << " queries\n";
      return 0;
    }
    if (run->parsed()) return run_document(doc, f, std::nullopt);
    for (const auto& [sub, cat] : filtered) {
      if (sub->parsed()) return run_document(doc, f, cat);
    }
  } catch (const cli::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kParseFailure;
}
