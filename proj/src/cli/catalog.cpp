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

#include "splitord/cli/cli.hpp"

namespace splitord::cli {

namespace {

const char* const kCatalog = R"json({
  "format": "splitord/1",
  "groups": {
    "Z": {"type": "free_abelian", "rank": 1},
    "Q": {"type": "rational_vector", "rank": 1},
    "Z2": {"type": "cyclic", "n": 2},
    "V4": {"type": "product", "factors": ["Z2", "Z2"]}
  },
  "cones": {
    "N": {"group": "Z", "type": "natural_orthant"},
    "ZFull": {"group": "Z", "type": "full"},
    "ZTriv": {"group": "Z", "type": "trivial"},
    "Qpos": {"group": "Q", "type": "natural_orthant"},
    "V4Triv": {"group": "V4", "type": "trivial"}
  },
  "preorders": {
    "ZN": {"group": "Z", "cone": "N"},
    "ZF": {"group": "Z", "cone": "ZFull"},
    "ZT": {"group": "Z", "cone": "ZTriv"},
    "QP": {"group": "Q", "cone": "Qpos"},
    "V4T": {"group": "V4", "cone": "V4Triv"}
  },
  "actions": {
    "sign": {"type": "sign", "acting": "Z", "acted": "Z"},
    "trivZ": {"type": "trivial", "acting": "Z", "acted": "Z"},
    "trivQ": {"type": "trivial", "acting": "Z", "acted": "Q"},
    "scale2": {"type": "scaling", "acting": "Z", "acted": "Q", "q": "2"}
  },
  "homs": {
    "double": {"type": "scalar", "group": "Z", "c": "2"},
    "idZ": {"type": "identity", "group": "Z"},
    "idQ": {"type": "identity", "group": "Q"},
    "twiceQ": {"type": "scalar", "group": "Q", "c": "2"}
  },
  "extensions": {
    "sign_full_base": {"x": "ZN", "b": "ZF", "action": "sign"},
    "sign_point": {"x": "ZT", "b": "ZN", "action": "sign"},
    "zz": {"x": "ZN", "b": "ZN", "action": "trivZ"},
    "scaling": {"x": "QP", "b": "ZN", "action": "scale2"},
    "q_trivial": {"x": "QP", "b": "ZN", "action": "trivQ"}
  },
  "points": {
    "sign_minimal": {"extension": "sign_point", "cone": "minimal"},
    "zz_product": {"extension": "zz", "cone": "product"},
    "zz_lex": {"extension": "zz", "cone": "lex"},
    "scaling_minimal": {"extension": "scaling", "cone": "minimal"},
    "q_rali": {"extension": "q_trivial", "cone": "product"},
    "q_lex": {"extension": "q_trivial", "cone": "lex"}
  },
  "queries": [
    {"id": "sign-action-incompatible", "op": "compatible_exists", "extension": "sign_full_base",
     "expect": {"verdict": "no", "witness": ["1"]}},
    {"id": "sign-minimal-compatible", "op": "is_compatible", "point": "sign_minimal", "expect": "yes"},
    {"id": "zz-family-lattice-small", "op": "lattice", "extension": "zz",
     "scope": {"kind": "superadditive", "n": 2, "m": 2}, "expect": {"verdict": "yes", "values": {"count": 8}}},
    {"id": "zz-family-lattice-larger", "op": "lattice", "extension": "zz",
     "scope": {"kind": "superadditive", "n": 3, "m": 4}, "expect": {"verdict": "yes", "values": {"count": 33}}},
    {"id": "zz-superadditive-family", "op": "validate_family", "extension": "zz",
     "family": {"sequence": ["0", "1", "2", "inf"], "tail": "inf"}, "expect": "yes"},
    {"id": "zz-non-superadditive-family", "op": "validate_family", "extension": "zz",
     "family": {"sequence": ["0", "2", "3", "inf"], "tail": "inf"}, "expect": "no"},
    {"id": "trivial-product-rali", "op": "is_rali", "point": "zz_product", "expect": "yes"},
    {"id": "lex-not-strong", "op": "is_strong", "point": "zz_lex", "expect": {"verdict": "no", "witness": ["-1", "1"]}},
    {"id": "sign-point-strong", "op": "is_strong", "point": "sign_minimal", "expect": "yes"},
    {"id": "sign-pullback-along-doubling", "op": "pullback", "point": "sign_minimal", "source": "ZN", "along": "double",
     "contains": [["-2", "1"], ["-1", "1"]],
     "expect": {"verdict": "no", "values": {"members": {"[\"-2\",\"1\"]": "yes", "[\"-1\",\"1\"]": "no"}}}},
    {"id": "sign-point-not-stably-strong", "op": "stably_strong", "point": "sign_minimal", "expect": "no"},
    {"id": "scaling-point-not-rali", "op": "is_rali", "point": "scaling_minimal", "expect": "no"},
    {"id": "scaling-point-stably-strong", "op": "stably_strong", "point": "scaling_minimal", "expect": "yes"},
    {"id": "scaling-point-classification", "op": "classify", "point": "scaling_minimal",
     "expect": {"verdict": "yes", "values": {"rali": "no", "stably_strong": "yes"}}},
    {"id": "identity-ssfl", "op": "ssfl", "source": "scaling_minimal", "target": "scaling_minimal", "expect": "yes"},
    {"id": "minimal-to-lex-ssfl", "op": "ssfl", "source": "zz_product", "target": "zz_lex",
     "expect": {"verdict": "no", "values": {"b_iso": "yes"}}},
    {"id": "rational-monotone-automorphisms", "op": "monotone_aut", "preorder": "QP",
     "expect": {"verdict": "yes", "values": {"kind": "rational scalings"}}},
    {"id": "klein-monotone-automorphisms", "op": "monotone_aut", "preorder": "V4T",
     "expect": {"verdict": "yes", "values": {"order": 6}}},
    {"id": "scaling-two-in-plus", "op": "aut_contains", "preorder": "QP", "order": "plus", "alpha": ["2"], "expect": "yes"},
    {"id": "scaling-two-not-in-tilde", "op": "aut_contains", "preorder": "QP", "order": "tilde", "alpha": ["2"],
     "expect": "no"},
    {"id": "scaling-half-in-minus", "op": "aut_contains", "preorder": "QP", "order": "minus", "alpha": ["1/2"],
     "expect": "yes"},
    {"id": "plus-admissible", "op": "admissible", "preorder": "QP", "order": "plus", "expect": "yes"},
    {"id": "minus-admissible", "op": "admissible", "preorder": "QP", "order": "minus", "expect": "yes"},
    {"id": "full-not-admissible", "op": "admissible", "preorder": "QP", "order": "full",
     "expect": {"verdict": "no", "witness": ["2"]}},
    {"id": "tilde-classifier-rali", "op": "build_classifier", "preorder": "QP", "order": "tilde", "expect": "yes"},
    {"id": "klein-tilde-classifier", "op": "build_classifier", "preorder": "V4T", "order": "tilde",
     "expect": {"verdict": "yes", "values": {"carrier_order": 24}}},
    {"id": "rali-into-tilde-classifier", "op": "classify_into", "point": "q_rali", "order": "tilde", "expect": "yes"},
    {"id": "scaling-not-into-tilde-classifier", "op": "classify_into", "point": "scaling_minimal", "order": "tilde",
     "expect": {"verdict": "no", "values": {"phi_bar_monotone": "no"}}},
    {"id": "scaling-into-plus-classifier", "op": "classify_into", "point": "scaling_minimal", "order": "plus",
     "expect": "yes"},
    {"id": "lex-outside-plus-class", "op": "sclass", "point": "q_lex", "order": "plus",
     "expect": {"verdict": "no", "witness": ["-1", "1"]}},
    {"id": "scaling-in-plus-class", "op": "sclass", "point": "scaling_minimal", "order": "plus", "expect": "yes"},
    {"id": "no-classifier-for-rationals", "op": "no_classifier_witness", "preorder": "QP",
     "expect": {"verdict": "yes", "witness": ["2"]}},
    {"id": "integers-have-no-witness", "op": "no_classifier_witness", "preorder": "ZN", "expect": "no"}
  ]
})json";

}  // namespace

const std::string& builtin_catalog_text() {
  static const std::string text = kCatalog;
  return text;
}

Document builtin_catalog() { return parse_document(builtin_catalog_text()); }

}  // namespace splitord::cli
