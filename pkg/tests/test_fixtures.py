"""Catalog loading: built-in groups, packaged data files, user files."""

import json
import math

import pytest

from groupinv.errors import InputError
from groupinv.fixtures import (
    dihedral,
    get_group,
    group_to_json,
    load_group,
    load_group_file,
    quaternion,
    sl2_f3,
    symmetric,
)
from groupinv.groups import center, derived_subgroup, is_nilpotent


# Orders, class counts and a few structural invariants of the packaged
# stem groups, frozen from the generation run (scripts/gen_fixtures.py
# re-derives them from relation-checked realizations).
PACKAGED = {
    #        order, classes, exponent, |center|, |derived|
    "phi4": (243, 51, 3, 9, 9),
    "phi5": (243, 99, 3, 27, 3),
    "phi6": (243, 35, 9, 9, 27),
    "phi7": (243, 35, 9, 3, 9),
    "phi9": (243, 35, 9, 3, 27),
    "phi10": (243, 19, 9, 3, 27),
    "phi11": (729, 105, 3, 27, 27),
}


@pytest.mark.parametrize("name", sorted(PACKAGED))
def test_packaged_groups(name):
    order, classes, exponent, z_order, d_order = PACKAGED[name]
    g = get_group(name)
    assert g.order == order
    assert g.conjugacy_classes().count == classes
    assert g.exponent() == exponent
    assert center(g).order == z_order
    assert derived_subgroup(g).order == d_order
    assert is_nilpotent(g)


def test_packaged_name_is_case_insensitive():
    assert get_group("Phi11").order == 729


def test_unknown_packaged_name():
    with pytest.raises(InputError, match="phi8"):
        get_group("phi8")


def test_builtin_names():
    assert get_group("S4").order == 24
    assert get_group("d12").order == 12
    assert get_group("Z9").order == 9
    assert get_group("V4").order == 4
    assert get_group("q8").order == 8
    assert get_group("SL2F3").order == 24


def test_unknown_name_rejected():
    with pytest.raises(InputError, match="unknown group name"):
        get_group("monster")


def test_builtin_structures():
    assert symmetric(4).conjugacy_classes().count == 5
    assert dihedral(12).conjugacy_classes().count == 6
    assert quaternion().exponent() == 4
    assert sl2_f3().conjugacy_classes().count == 7


def test_json_round_trip_permutation():
    g = get_group("phi9")
    data = group_to_json(g)
    assert data["kind"] == "permutation"
    assert data["degree"] == 81
    again = load_group(data)
    assert again.order == g.order
    assert again.table_key() == g.table_key()


def test_json_round_trip_matrix():
    g = get_group("phi4")
    data = group_to_json(g)
    assert data["kind"] == "matrix"
    assert data["prime"] == 3 and data["dim"] == 6
    again = load_group(data)
    assert again.table_key() == g.table_key()


def test_table_round_trip():
    g = get_group("Z6")
    data = {"kind": "table", "order": 6, "mul": [int(v) for v in g.table.ravel()]}
    again = load_group(data)
    assert again.table_key() == g.table_key()


def test_metadata_mismatch_rejected(tmp_path):
    data = group_to_json(get_group("S3"))
    data["expected_order"] = 7
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(InputError, match="declared order 7"):
        load_group_file(path)


def test_class_count_mismatch_rejected(tmp_path):
    data = group_to_json(get_group("S3"))
    data["expected_class_count"] = 4
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(InputError, match="declared class count 4"):
        load_group_file(path)


def test_catalog_requires_env(monkeypatch):
    monkeypatch.delenv("GROUPINV_CATALOG", raising=False)
    with pytest.raises(InputError, match="48_15"):
        get_group("48_15")


def test_catalog_file_lookup(tmp_path, monkeypatch):
    data = group_to_json(dihedral(48))
    data["expected_order"] = 48
    data["expected_class_count"] = 15
    (tmp_path / "48_15.json").write_text(json.dumps(data))
    monkeypatch.setenv("GROUPINV_CATALOG", str(tmp_path))
    g = get_group("48_15")
    assert g.order == 48


def test_catalog_file_must_declare_class_count(tmp_path, monkeypatch):
    data = group_to_json(dihedral(48))
    data["expected_order"] = 48
    (tmp_path / "48_15.json").write_text(json.dumps(data))
    monkeypatch.setenv("GROUPINV_CATALOG", str(tmp_path))
    with pytest.raises(InputError, match="expected_class_count"):
        get_group("48_15")


def test_phi7_has_order_nine_generator():
    # one generator cube is a nontrivial central element, the others are not
    g = get_group("phi7")
    orders = sorted(g.element_order(i) for i in g.generator_provenance["indices"])
    assert orders == [3, 3, 9]


def test_phi11_center_equals_derived():
    g = get_group("phi11")
    z = center(g)
    d = derived_subgroup(g)
    assert z == d
    q_size = g.order // z.order
    assert q_size == 27 and math.gcd(q_size, 2) == 1
