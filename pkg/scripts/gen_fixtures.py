#!/usr/bin/env python3
"""Build the packaged stem-group fixtures (src/groupinv/data/phi*.json).

Each group of order 3^5 or 3^6 is realized concretely (mod-3 matrices or
permutations), then validated against its defining relations before the
JSON file is written.  Class counts are recomputed from scratch and stored
as expected_class_count so that loading re-verifies them.

Run from the repository root:  python3 scripts/gen_fixtures.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from groupinv.fixtures import group_to_json
from groupinv.groups import FiniteGroup, group_from_generators

DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "groupinv", "data")


# ---------------------------------------------------------------------------
# small matrix helpers (flat row-major lists over F_3)

def eye(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def uni(n, *entries):
    """Identity plus 1 at each (i, j) position."""
    m = eye(n)
    for i, j in entries:
        m[i][j] = 1
    return m


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = b[i][j]
        off += k
    return out


def flat(m):
    return [v % 3 for row in m for v in row]


# ---------------------------------------------------------------------------
# relation checking against a built group

class Rel:
    """Evaluate words over named elements inside a FiniteGroup."""

    def __init__(self, group: FiniteGroup, names: dict[str, int]):
        self.g = group
        self.names = dict(names)

    def define(self, name, x):
        self.names[name] = x

    def el(self, name):
        return self.names[name]

    def word(self, *terms):
        """Product of (name, exponent) pairs."""
        g = self.g
        acc = 0
        for name, exp in terms:
            acc = g.mul(acc, g.power(self.names[name], exp))
        return acc

    def comm(self, a, b):
        return self.g.comm(self.names[a], self.names[b])

    def assert_eq(self, got, expected, what):
        if got != expected:
            raise AssertionError(f"{what}: got element {got}, expected {expected}")

    def check_comm(self, a, b, result):
        self.assert_eq(self.comm(a, b), self.names[result], f"[{a},{b}] = {result}")

    def check_commute(self, a, b):
        self.assert_eq(self.comm(a, b), 0, f"[{a},{b}] = 1")

    def check_order(self, name, k):
        got = self.g.element_order(self.names[name])
        if got != k:
            raise AssertionError(f"order({name}): got {got}, expected {k}")

    def check_trivial_word(self, label, *terms):
        self.assert_eq(self.word(*terms), 0, label)

    def check_nontrivial(self, name):
        if self.names[name] == 0:
            raise AssertionError(f"{name} collapsed to the identity")

    def check_central(self, name):
        g = self.g
        x = self.names[name]
        for y in range(g.order):
            if g.comm(x, y) != 0:
                raise AssertionError(f"{name} is not central")


def gen_indices(group):
    return group.generator_provenance["indices"]


# ---------------------------------------------------------------------------
# order 243, class 2: three generators, two independent central commutators
#   [a1, a] = b1, [a2, a] = b2, everything else commutes, exponent 3

def build_phi4():
    x = uni(3, (0, 1))
    y = uni(3, (1, 2))
    i3 = eye(3)
    a = flat(block_diag(x, x))
    a1 = flat(block_diag(y, i3))
    a2 = flat(block_diag(i3, y))
    g = group_from_generators([a, a1, a2], prime=3)
    ia, ia1, ia2 = gen_indices(g)
    r = Rel(g, {"a": ia, "a1": ia1, "a2": ia2})
    r.define("b1", r.comm("a1", "a"))
    r.define("b2", r.comm("a2", "a"))
    for name in ("a", "a1", "a2", "b1", "b2"):
        r.check_order(name, 3)
    r.check_nontrivial("b1")
    r.check_nontrivial("b2")
    r.check_commute("a1", "a2")
    r.check_central("b1")
    r.check_central("b2")
    # b1 and b2 generate independent central subgroups
    sub = {g.power(r.el("b1"), k) for k in range(3)}
    if r.el("b2") in sub:
        raise AssertionError("b2 lies in <b1>")
    return g


# order 243, class 2: four generators, one central commutator hit twice
#   [a1, a2] = [a2, a3] = b, all other pairs commute, exponent 3
# Realized as a Heisenberg-style group 1+4+1: top row carries the bilinear
# form q(v, w) = v1*w2 + v2*w3, whose antisymmetrization is the required
# commutator pairing.

def build_phi5():
    def heis(v, c):
        m = eye(6)
        m[0][2], m[0][3] = v[0], v[1]   # row vector v^T Q, Q = E12 + E23
        m[0][5] = c
        for k in range(4):
            m[1 + k][5] = v[k]
        return flat(m)

    gens = [heis([1, 0, 0, 0], 0), heis([0, 1, 0, 0], 0),
            heis([0, 0, 1, 0], 0), heis([0, 0, 0, 1], 0)]
    g = group_from_generators(gens, prime=3)
    i1, i2, i3, i4 = gen_indices(g)
    r = Rel(g, {"a1": i1, "a2": i2, "a3": i3, "a4": i4})
    r.define("b", r.comm("a1", "a2"))
    r.check_nontrivial("b")
    r.assert_eq(r.comm("a2", "a3"), r.el("b"), "[a2,a3] = b")
    for pair in (("a1", "a3"), ("a1", "a4"), ("a2", "a4"), ("a3", "a4")):
        r.check_commute(*pair)
    for name in ("a1", "a2", "a3", "a4", "b"):
        r.check_order(name, 3)
    r.check_central("b")
    return g


# order 243, class 3: two generators
#   [a1, a2] = b, [b, a1] = b1, [b, a2] = b2, generator cubes trivial
# Realized inside UT(4,3) x UT(4,3); each block sees one of b1, b2.

def build_phi6():
    a1 = flat(block_diag(uni(4, (0, 1), (2, 3)), uni(4, (1, 2))))
    a2 = flat(block_diag(uni(4, (1, 2)), uni(4, (0, 1), (2, 3))))
    g = group_from_generators([a1, a2], prime=3)
    i1, i2 = gen_indices(g)
    r = Rel(g, {"a1": i1, "a2": i2})
    r.define("b", r.comm("a1", "a2"))
    r.define("b1", r.comm("b", "a1"))
    r.define("b2", r.comm("b", "a2"))
    for name in ("b", "b1", "b2"):
        r.check_nontrivial(name)
    for name in ("a1", "a2", "b", "b1", "b2"):
        r.check_order(name, 3)
    r.check_central("b1")
    r.check_central("b2")
    sub = {g.power(r.el("b1"), k) for k in range(3)}
    if r.el("b2") in sub:
        raise AssertionError("b2 lies in <b1>")
    return g


# order 243: abelian Z9 x Z3 extended by two commuting order-3 actions
#   [a1, a] = a2, [a2, a] = a3, [a1, b] = a3, a^3 = b^3 = 1,
#   a1^3 * a2^3 * a3 = 1 (so a1 has order 9)
# Permutations of the 27 cosets of <a, b>, identified with pairs
# (u mod 9, v mod 3) for a1^u a2^v.  An element h acts by conj(-, h^-1),
# which is left multiplication on cosets.

def build_phi7():
    pts = [(u, v) for u in range(9) for v in range(3)]
    idx = {p: k for k, p in enumerate(pts)}

    def perm(f):
        return [idx[f(p)] for p in pts]

    a1 = perm(lambda p: ((p[0] + 1) % 9, p[1]))
    # conj-by-a sends (u, v) to (u - 3v, u + v); the inverse square below
    # is conj-by-a^-1, i.e. the left action of a itself
    a = perm(lambda p: ((7 * p[0] + 3 * p[1]) % 9, (2 * p[0] + p[1]) % 3))
    b = perm(lambda p: ((4 * p[0]) % 9, p[1]))

    g = group_from_generators([a, a1, b])
    ia, ia1, ib = gen_indices(g)
    r = Rel(g, {"a": ia, "a1": ia1, "b": ib})
    r.define("a2", r.comm("a1", "a"))
    r.define("a3", r.comm("a2", "a"))
    r.check_nontrivial("a2")
    r.check_nontrivial("a3")
    r.check_order("a", 3)
    r.check_order("b", 3)
    r.check_order("a1", 9)
    r.check_order("a2", 3)
    r.check_order("a3", 3)
    r.assert_eq(r.comm("a1", "b"), r.el("a3"), "[a1,b] = a3")
    r.check_commute("a3", "a")
    r.check_commute("a2", "b")
    r.check_commute("a3", "b")
    r.check_commute("a", "b")
    r.check_commute("a1", "a2")
    r.check_commute("a1", "a3")
    r.check_commute("a2", "a3")
    r.check_trivial_word("a1^3 a2^3 a3 = 1", ("a1", 3), ("a2", 3), ("a3", 1))
    return g


# order 243: Z9 x Z9 extended by an order-3 action
#   [a1, a] = a2, [a2, a] = a3, [a3, a] = a4, [a4, a] = 1, base abelian,
#   modified cube relations a_i^3 a_{i+1}^3 a_{i+2} = 1

def build_phi9():
    pts = [(u, v) for u in range(9) for v in range(9)]
    idx = {p: k for k, p in enumerate(pts)}

    def perm(f):
        return [idx[f(p)] for p in pts]

    a1 = perm(lambda p: ((p[0] + 1) % 9, p[1]))
    a2 = perm(lambda p: (p[0], (p[1] + 1) % 9))
    # conj-by-a is (u, v) -> (u - 3v, u - 2v) on exponent pairs; its square
    # below gives the left action of a on the 81 cosets of <a>
    a = perm(lambda p: ((7 * p[0] + 3 * p[1]) % 9, (8 * p[0] + p[1]) % 9))

    g = group_from_generators([a, a1, a2])
    ia, ia1, ia2 = gen_indices(g)
    r = Rel(g, {"a": ia, "a1": ia1, "a2": ia2})
    r.assert_eq(r.comm("a1", "a"), r.el("a2"), "[a1,a] = a2")
    r.define("a3", r.comm("a2", "a"))
    r.define("a4", r.comm("a3", "a"))
    r.check_nontrivial("a3")
    r.check_nontrivial("a4")
    r.check_order("a", 3)
    r.check_order("a1", 9)
    r.check_order("a2", 9)
    r.check_order("a3", 3)
    r.check_order("a4", 3)
    r.check_commute("a4", "a")
    for x in ("a1", "a2", "a3", "a4"):
        for y in ("a1", "a2", "a3", "a4"):
            r.check_commute(x, y)
    r.check_trivial_word("a1^3 a2^3 a3 = 1", ("a1", 3), ("a2", 3), ("a3", 1))
    r.check_trivial_word("a2^3 a3^3 a4 = 1", ("a2", 3), ("a3", 3), ("a4", 1))
    r.check_trivial_word("a3^3 a4^3 = 1", ("a3", 3), ("a4", 3))
    return g


# order 243: (Z9 semidirect Z9) extended by an order-3 action
#   same chain as above plus [a1, a2] = a4
# The base N = <s, t | t^9, s^9, s^-1 t s = t^4> is handled in normal-form
# coordinates (i, j) for t^i s^j.

def build_phi10():
    def nprod(x, y):
        # s^j t^k s^-j = t^(k * 4^j); 4^-1 = 7 mod 9
        return ((x[0] + y[0] * pow(7, x[1], 9)) % 9, (x[1] + y[1]) % 9)

    def npow(x, n):
        acc = (0, 0)
        for _ in range(n):
            acc = nprod(acc, x)
        return acc

    # conj-by-alpha on N: s -> t^7 s, t -> t^7 s^6
    ca, cb = (7, 1), (7, 6)

    def cmap(p):
        return nprod(npow(cb, p[0]), npow(ca, p[1]))

    pts = [(i, j) for i in range(9) for j in range(9)]
    idx = {p: k for k, p in enumerate(pts)}
    # confirm cmap is an order-3 automorphism of N before using it
    for x in pts:
        for y in pts:
            if cmap(nprod(x, y)) != nprod(cmap(x), cmap(y)):
                raise AssertionError("base action is not a homomorphism")
    if sorted(cmap(p) for p in pts) != pts:
        raise AssertionError("base action is not a bijection")
    for p in pts:
        if cmap(cmap(cmap(p))) != p:
            raise AssertionError("base action does not have order 3")

    def perm(f):
        return [idx[f(p)] for p in pts]

    a1 = perm(lambda p: nprod((0, 1), p))          # left mult by s
    a2 = perm(lambda p: nprod((1, 0), p))          # left mult by t
    a = perm(lambda p: cmap(cmap(p)))              # left action of alpha

    g = group_from_generators([a, a1, a2])
    ia, ia1, ia2 = gen_indices(g)
    r = Rel(g, {"a": ia, "a1": ia1, "a2": ia2})
    r.assert_eq(r.comm("a1", "a"), r.el("a2"), "[a1,a] = a2")
    r.define("a3", r.comm("a2", "a"))
    r.define("a4", r.comm("a3", "a"))
    r.check_nontrivial("a3")
    r.check_nontrivial("a4")
    r.check_order("a", 3)
    r.check_order("a1", 9)
    r.check_order("a2", 9)
    r.check_order("a3", 3)
    r.check_order("a4", 3)
    r.check_commute("a4", "a")
    r.assert_eq(r.comm("a1", "a2"), r.el("a4"), "[a1,a2] = a4")
    r.check_trivial_word("a1^3 a2^3 a3 = 1", ("a1", 3), ("a2", 3), ("a3", 1))
    r.check_trivial_word("a2^3 a3^3 a4 = 1", ("a2", 3), ("a3", 3), ("a4", 1))
    r.check_trivial_word("a3^3 a4^3 = 1", ("a3", 3), ("a4", 3))
    return g


# order 729, class 2: three generators, three independent central commutators
# in a cyclic pattern:
#   [a1, a2] = b3, [a2, a3] = b1, [a3, a1] = b2, exponent 3
# Realized as three 3x3 unitriangular blocks; block k witnesses exactly one
# of the commutators.

def build_phi11():
    x = uni(3, (0, 1))
    y = uni(3, (1, 2))
    i3 = eye(3)
    a1 = flat(block_diag(x, i3, y))
    a2 = flat(block_diag(y, x, i3))
    a3 = flat(block_diag(i3, y, x))
    g = group_from_generators([a1, a2, a3], prime=3)
    i1, i2, i3_ = gen_indices(g)
    r = Rel(g, {"a1": i1, "a2": i2, "a3": i3_})
    r.define("b3", r.comm("a1", "a2"))
    r.define("b1", r.comm("a2", "a3"))
    r.define("b2", r.comm("a3", "a1"))
    for name in ("b1", "b2", "b3"):
        r.check_nontrivial(name)
        r.check_central(name)
    for name in ("a1", "a2", "a3", "b1", "b2", "b3"):
        r.check_order(name, 3)
    # the three commutators generate a central Z3 x Z3 x Z3
    seen = set()
    for k1 in range(3):
        for k2 in range(3):
            for k3 in range(3):
                w = g.mul(g.mul(g.power(r.el("b1"), k1), g.power(r.el("b2"), k2)),
                          g.power(r.el("b3"), k3))
                seen.add(w)
    if len(seen) != 27:
        raise AssertionError("b1, b2, b3 are not independent")
    return g


BUILDERS = {
    "phi4": (build_phi4, 243),
    "phi5": (build_phi5, 243),
    "phi6": (build_phi6, 243),
    "phi7": (build_phi7, 243),
    "phi9": (build_phi9, 243),
    "phi10": (build_phi10, 243),
    "phi11": (build_phi11, 729),
}


def main():
    os.makedirs(DATA_DIR, exist_ok=True)
    for name, (builder, expected_order) in BUILDERS.items():
        g = builder()
        if g.order != expected_order:
            raise AssertionError(
                f"{name}: built order {g.order}, expected {expected_order}")
        k = g.conjugacy_classes().count
        data = group_to_json(g)
        data["expected_order"] = g.order
        data["expected_class_count"] = k
        path = os.path.join(DATA_DIR, f"{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, separators=(",", ":"))
            fh.write("\n")
        print(f"{name}: order {g.order}, {k} classes, kind {data['kind']} -> {path}")


if __name__ == "__main__":
    main()
