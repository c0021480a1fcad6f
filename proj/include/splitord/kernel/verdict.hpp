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

#ifndef SPLITORD_KERNEL_VERDICT_HPP_
#define SPLITORD_KERNEL_VERDICT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "splitord/kernel/element.hpp"
#include "splitord/kernel/group.hpp"

namespace splitord {

enum class Truth { kYes, kNo, kUnknown };

/// How a Yes or No was established.
enum class Scope {
  /// Decided: exhaustive on a finite carrier, a generator reduction, a
  /// closed form or a certificate.
  kExact,
  /// Verified on every element of a finite window of an infinite carrier.
  kWindow,
  /// Found (or not) by a budgeted search.
  kSearch,
};

const char* to_string(Truth t);
const char* to_string(Scope s);

struct Witness {
  std::string label;
  Group group;
  Element value;
};

struct BudgetUsed {
  std::size_t conjugator_length = 0;
  std::size_t summands = 0;
  std::size_t window_elements = 0;

  void absorb(const BudgetUsed& other);
};

/// Three-valued verdict. No always carries a concrete counterexample when
/// one exists by construction; Unknown means a budget ran out.
class Verdict {
 public:
  Truth truth = Truth::kUnknown;
  Scope scope = Scope::kExact;
  std::vector<Witness> witnesses;
  std::string note;
  BudgetUsed used;

  static Verdict yes(Scope scope = Scope::kExact, std::string note = {});
  static Verdict no(std::string note = {});
  static Verdict unknown(std::string note = {});
  static Verdict from_bool(bool value, Scope scope = Scope::kExact);

  bool is_yes() const { return truth == Truth::kYes; }
  bool is_no() const { return truth == Truth::kNo; }
  bool is_unknown() const { return truth == Truth::kUnknown; }

  Verdict& with(std::string label, const Group& g, const Element& value);
  Verdict& because(std::string text);
  Verdict& within(Scope s);
};

/// Kleene conjunction. A No keeps its own witnesses; the weakest scope of
/// the Yes parts is kept.
Verdict operator&&(const Verdict& a, const Verdict& b);
Verdict operator||(const Verdict& a, const Verdict& b);
Verdict operator!(const Verdict& a);
/// a implies b, three-valued.
Verdict implies(const Verdict& a, const Verdict& b);

/// Accumulates a universally quantified check: stops at the first No,
/// remembers whether any case was Unknown.
class ForAll {
 public:
  explicit ForAll(Scope scope = Scope::kExact) : scope_(scope) {}
  /// Returns false once a No has been recorded.
  bool add(const Verdict& v);
  bool failed() const { return failed_.has_value(); }
  Verdict result() const;
  void count_element() { ++used_.window_elements; }

 private:
  Scope scope_;
  std::optional<Verdict> failed_;
  std::optional<Verdict> unknown_;
  BudgetUsed used_;
};

}  // namespace splitord

#endif  // SPLITORD_KERNEL_VERDICT_HPP_
