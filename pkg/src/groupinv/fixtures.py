"""Built-in example groups, JSON group files, and the external catalog hook.

Group files come in three kinds::

    {"kind": "permutation", "degree": k, "generators": [[images], ...]}
    {"kind": "matrix", "prime": p, "dim": d, "generators": [[row-major], ...]}
    {"kind": "table", "order": n, "mul": [row-major entries]}

Permutation images are 0-based. Catalog-identified groups (e.g. "48_15") are
user-supplied table files living in the directory named by the
GROUPINV_CATALOG environment variable; they carry expected metadata that is
checked on load.
"""

from __future__ import annotations

import json
import os
from importlib import resources

import numpy as np

from .errors import InputError
from .groups import FiniteGroup, group_from_generators

CATALOG_ENV = "GROUPINV_CATALOG"

# Expected (order, declared class count verified on load) for user-ingested
# catalog groups. None means "only the order is pinned here"; the file itself
# must declare its class count, which is recomputed and compared.
CATALOG_IDS = {
    "48_15": 48,
    "48_16": 48,
    "48_17": 48,
    "48_18": 48,
    "64_10": 64,
    "128_254": 128,
}


def cyclic(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup([[0]])
    shift = [(i + 1) % n for i in range(n)]
    return group_from_generators([shift])


def klein_four() -> FiniteGroup:
    return group_from_generators([[1, 0, 3, 2], [2, 3, 0, 1]])


def symmetric(n: int) -> FiniteGroup:
    cycle = [(i + 1) % n for i in range(n)]
    swap = [1, 0] + list(range(2, n))
    return group_from_generators([cycle, swap])


def dihedral(two_n: int) -> FiniteGroup:
    """Dihedral group of order two_n (so D12 is the symmetries of a hexagon)."""
    if two_n % 2 or two_n < 6:
        raise InputError(f"dihedral order must be an even number >= 6, got {two_n}")
    n = two_n // 2
    rot = [(i + 1) % n for i in range(n)]
    ref = [(n - i) % n for i in range(n)]
    return group_from_generators([rot, ref])


def quaternion() -> FiniteGroup:
    # i and j inside SL2(F3)
    return group_from_generators([[0, 2, 1, 0], [1, 1, 1, 2]], prime=3)


def sl2_f3() -> FiniteGroup:
    return group_from_generators([[1, 1, 0, 1], [1, 0, 1, 1]], prime=3)


def load_group(data, *, budget: int = 100_000) -> FiniteGroup:
    """Build a group from a parsed group-file dict."""
    if not isinstance(data, dict) or "kind" not in data:
        raise InputError("group file must be an object with a 'kind' field")
    kind = data["kind"]
    if kind == "permutation":
        gens = data["generators"]
        degree = int(data["degree"])
        if any(len(g) != degree for g in gens):
            raise InputError("permutation generator does not match the degree")
        return group_from_generators(gens, budget=budget)
    if kind == "matrix":
        prime = int(data["prime"])
        dim = int(data["dim"])
        gens = data["generators"]
        if any(len(g) != dim * dim for g in gens):
            raise InputError("matrix generator does not match dim*dim")
        return group_from_generators(gens, prime=prime, budget=budget)
    if kind == "table":
        n = int(data["order"])
        mul = np.array(data["mul"], dtype=np.int64)
        if mul.size != n * n:
            raise InputError(f"table length {mul.size} is not order^2 = {n * n}")
        group = FiniteGroup(mul.reshape(n, n), check="basic")
        group.check_associativity()
        return group
    raise InputError(f"unknown group file kind: {kind!r}")


def load_group_file(path, *, budget: int = 100_000) -> FiniteGroup:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    group = load_group(data, budget=budget)
    _check_declared_metadata(data, group, path)
    return group


def _check_declared_metadata(data, group, path):
    declared_order = data.get("expected_order")
    if declared_order is not None and int(declared_order) != group.order:
        raise InputError(
            f"{path}: declared order {declared_order}, table gives {group.order}"
        )
    declared_classes = data.get("expected_class_count")
    if declared_classes is not None:
        got = group.conjugacy_classes().count
        if int(declared_classes) != got:
            raise InputError(
                f"{path}: declared class count {declared_classes}, "
                f"recomputed {got}"
            )


def group_to_json(group: FiniteGroup) -> dict:
    """Serialize a group, preferring its generator provenance when present."""
    prov = group.generator_provenance
    if prov is not None and prov.get("kind") == "permutation":
        return {
            "kind": "permutation",
            "degree": prov["degree"],
            "generators": [list(g) for g in prov["generators"]],
        }
    if prov is not None and prov.get("kind") == "matrix":
        return {
            "kind": "matrix",
            "prime": prov["prime"],
            "dim": prov["dim"],
            "generators": [list(g) for g in prov["generators"]],
        }
    return {
        "kind": "table",
        "order": group.order,
        "mul": [int(v) for v in group.table.ravel()],
    }


def _packaged(name: str, budget: int) -> FiniteGroup:
    ref = resources.files("groupinv").joinpath("data", f"{name}.json")
    try:
        with ref.open("r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no packaged group named {name!r}") from None
    group = load_group(data, budget=budget)
    _check_declared_metadata(data, group, f"data/{name}.json")
    return group


def catalog_path(name: str):
    """Path of a user-supplied catalog group file, or None if unavailable."""
    base = os.environ.get(CATALOG_ENV)
    if not base:
        return None
    path = os.path.join(base, f"{name}.json")
    return path if os.path.exists(path) else None


def get_group(name: str, *, budget: int = 100_000) -> FiniteGroup:
    """Look up a built-in, packaged, or catalog group by name.

    Accepted names: S3, S4, Z<n>, V4, D<2n> for 2n in 6..24, Q8, SL2F3,
    Phi4, Phi5, Phi6, Phi7, Phi9, Phi10, Phi11, and catalog ids like 48_15.
    """
    key = name.strip().lower().replace("(", "_").replace(")", "").replace(",", "_")
    if key in ("s3", "s4", "s5"):
        return symmetric(int(key[1]))
    if key == "v4":
        return klein_four()
    if key == "q8":
        return quaternion()
    if key == "sl2f3":
        return sl2_f3()
    if key.startswith("z") and key[1:].isdigit():
        return cyclic(int(key[1:]))
    if key.startswith("d") and key[1:].isdigit():
        return dihedral(int(key[1:]))
    if key.startswith("phi") and key[3:].isdigit():
        return _packaged(key, budget)
    if key in CATALOG_IDS:
        path = catalog_path(key)
        if path is None:
            raise InputError(
                f"catalog group {name} requires a table file {key}.json in "
                f"${CATALOG_ENV}"
            )
        group = load_group_file(path, budget=budget)
        if group.order != CATALOG_IDS[key]:
            raise InputError(
                f"catalog group {name}: expected order {CATALOG_IDS[key]}, "
                f"file gives {group.order}"
            )
        if "expected_class_count" not in json.load(open(path)):
            raise InputError(
                f"catalog group {name}: file must declare expected_class_count"
            )
        return group
    raise InputError(f"unknown group name: {name!r}")
