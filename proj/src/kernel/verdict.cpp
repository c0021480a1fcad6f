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

#include "splitord/kernel/verdict.hpp"

#include <algorithm>

namespace splitord {

const char* to_string(Truth t) {
  switch (t) {
    case Truth::kYes:
      return "yes";
    case Truth::kNo:
      return "no";
    case Truth::kUnknown:
      return "unknown";
  }
  return "?";
}

const char* to_string(Scope s) {
  switch (s) {
    case Scope::kExact:
      return "exact";
    case Scope::kWindow:
      return "window";
    case Scope::kSearch:
      return "search";
  }
  return "?";
}

void BudgetUsed::absorb(const BudgetUsed& other) {
  conjugator_length = std::max(conjugator_length, other.conjugator_length);
  summands = std::max(summands, other.summands);
  window_elements = std::max(window_elements, other.window_elements);
}

Verdict Verdict::yes(Scope scope, std::string note) {
  Verdict v;
  v.truth = Truth::kYes;
  v.scope = scope;
  v.note = std::move(note);
  return v;
}

Verdict Verdict::no(std::string note) {
  Verdict v;
  v.truth = Truth::kNo;
  v.note = std::move(note);
  return v;
}

Verdict Verdict::unknown(std::string note) {
  Verdict v;
  v.truth = Truth::kUnknown;
  v.scope = Scope::kSearch;
  v.note = std::move(note);
  return v;
}

Verdict Verdict::from_bool(bool value, Scope scope) {
  Verdict v = value ? yes(scope) : no();
  v.scope = scope;
  return v;
}

Verdict& Verdict::with(std::string label, const Group& g, const Element& value) {
  witnesses.push_back(Witness{std::move(label), g, value});
  return *this;
}

Verdict& Verdict::because(std::string text) {
  note = std::move(text);
  return *this;
}

Verdict& Verdict::within(Scope s) {
  scope = s;
  return *this;
}

namespace {

Scope weaker(Scope a, Scope b) { return std::max(a, b); }

}  // namespace

Verdict operator&&(const Verdict& a, const Verdict& b) {
  if (a.is_no()) return a;
  if (b.is_no()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  Verdict out = a;
  out.scope = weaker(a.scope, b.scope);
  out.used.absorb(b.used);
  if (out.note.empty()) out.note = b.note;
  return out;
}

Verdict operator||(const Verdict& a, const Verdict& b) {
  if (a.is_yes()) return a;
  if (b.is_yes()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  Verdict out = a;
  out.scope = weaker(a.scope, b.scope);
  out.used.absorb(b.used);
  return out;
}

Verdict operator!(const Verdict& a) {
  Verdict out = a;
  if (a.is_yes()) out.truth = Truth::kNo;
  else if (a.is_no()) out.truth = Truth::kYes;
  return out;
}

Verdict implies(const Verdict& a, const Verdict& b) { return !a || b; }

bool ForAll::add(const Verdict& v) {
  used_.absorb(v.used);
  if (failed_) return false;
  if (v.is_no()) {
    failed_ = v;
    return false;
  }
  if (v.is_unknown()) {
    if (!unknown_) unknown_ = v;
  } else {
    scope_ = std::max(scope_, v.scope);
  }
  return true;
}

Verdict ForAll::result() const {
  Verdict out;
  if (failed_) {
    out = *failed_;
  } else if (unknown_) {
    out = *unknown_;
  } else {
    out = Verdict::yes(scope_);
  }
  out.used.absorb(used_);
  return out;
}

}  // namespace splitord
