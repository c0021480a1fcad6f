# Copyright 2026 The splitord Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib

import pytest

import splitord as so

Z = so.Group.free_abelian(1)
Q = so.Group.rational_vector(1)
ZN = so.PreorderedGroup(Z, so.Cone.natural_orthant(Z))
ZT = so.PreorderedGroup(Z, so.Cone.trivial(Z))
QP = so.PreorderedGroup(Q, so.Cone.natural_orthant(Q))


def sign_point():
    e = so.Extension.make(ZT, ZN, so.Action.sign(Z, Z))
    return so.Point(e, so.minimal_cone(e))


def test_group_arithmetic():
    assert Z.add(["2"], ["-5"]) == ["-3"]
    assert Q.add(["1/2"], ["2/4"]) == ["1"]
    assert len(so.Group.symmetric(3).elements()) == 6


def test_sign_action_has_no_compatible_cone():
    zf = so.PreorderedGroup(Z, so.Cone.full(Z))
    v = so.compatible_exists(so.Extension.make(ZN, zf, so.Action.sign(Z, Z)))
    assert v.truth == "no"
    assert v.witnesses


def test_pullback_of_sign_point_is_not_strong():
    p = sign_point()
    assert so.is_strong(p).is_yes()
    pb = so.pullback(p, ZN, so.Homomorphism.scalar(Z, 2))
    v = so.is_strong(pb)
    assert v.is_no()
    assert ("x", ["-2", "1"]) in v.witnesses
    with pytest.raises(ValueError):
        so.pullback(p, ZN, so.Homomorphism.scalar(Z, -1))


def test_scaling_point():
    e = so.Extension.make(QP, ZN, so.Action.scaling(Z, Q, "2"))
    p = so.Point(e, so.minimal_cone(e))
    assert so.is_rali(p).is_no()
    assert so.stably_strong(p).is_yes()


def test_lattice_counts():
    e = so.Extension.make(ZN, ZN, so.Action.trivial(Z, Z))
    assert so.lattice_count(e, 2, 2) == 8


def test_classifier_operations():
    assert so.no_classifier_witness(QP) == (["2"], ["1"])
    assert so.no_classifier_witness(ZN) is None
    assert so.admissible(QP, "plus").is_yes()
    assert so.admissible(QP, "full").is_no()
    v4 = so.Group.product([so.Group.cyclic(2), so.Group.cyclic(2)])
    assert so.monotone_aut_order(so.PreorderedGroup(v4, so.Cone.trivial(v4))) == 6


def test_documents():
    catalog = so.builtin_catalog()
    assert json.loads(catalog)["format"] == "splitord/1"
    docs = pathlib.Path(os.environ.get("SPLITORD_DOCUMENTS", "documents"))
    report = so.run_document((docs / "sign_compat.json").read_text())
    assert report["summary"]["mismatches"] == 0
    assert report["results"][0]["verdict"]["truth"] == "no"
    with pytest.raises(ValueError, match="Naturals"):
        so.validate_document((docs / "bad_reference.json").read_text())
