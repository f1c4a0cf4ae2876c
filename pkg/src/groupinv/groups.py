"""Finite groups as dense multiplication tables.

The product convention throughout is ``mul(x, y) = x . y`` meaning "apply y
first": for permutations ``(x.y)(p) = x[y[p]]``, for matrices ``X @ Y``.
Conjugation is ``x^g = g^-1 . x . g``, commutators are
``[x, y] = x^-1 . y^-1 . x . y``, and cosets of a subgroup N are left cosets
``g.N``.

Element 0 is always the identity for groups built from generators; ingested
tables may put it elsewhere (``identity_index`` says where).
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InputError, ResourceLimitError

_DTYPE = np.int32


class FiniteGroup:
    """A finite group given by its full multiplication table."""

    def __init__(self, table, element_labels=None, generator_provenance=None,
                 check="basic"):
        table = np.ascontiguousarray(np.asarray(table, dtype=_DTYPE))
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise InputError(f"multiplication table must be square, got {table.shape}")
        n = table.shape[0]
        if n == 0:
            raise InputError("empty multiplication table")
        if table.min() < 0 or table.max() >= n:
            raise InputError("table entries out of range")
        self.order = n
        self.table = table

        ar = np.arange(n, dtype=_DTYPE)
        left_ids = np.nonzero((table == ar[None, :]).all(axis=1))[0]
        if len(left_ids) != 1:
            raise InputError("table has no unique identity row")
        e = int(left_ids[0])
        if not (table[:, e] == ar).all():
            raise InputError("identity element fails on the right")
        self.identity_index = e

        if check in ("basic", "full"):
            if not (np.sort(table, axis=1) == ar[None, :]).all():
                raise InputError("table rows are not permutations")
            if not (np.sort(table, axis=0) == ar[:, None]).all():
                raise InputError("table columns are not permutations")

        inv = np.empty(n, dtype=_DTYPE)
        rows, cols = np.nonzero(table == e)
        inv[rows] = cols
        if not (table[inv, ar] == e).all():
            raise InputError("one-sided inverses only; not a group table")
        self.inverses = inv

        if element_labels is not None:
            element_labels = list(element_labels)
            if len(element_labels) != n:
                raise InputError("element_labels length mismatch")
        self.element_labels = element_labels
        self.generator_provenance = generator_provenance

        self._classes = None
        self._gens = None
        self._orders = None
        self._normals = None
        self._derived = None
        self._quotients = {}
        self._key = None

        if check == "full":
            self.check_associativity()

    # -- elementary operations -----------------------------------------

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverses[x])

    def conj(self, x: int, g: int) -> int:
        """g^-1 . x . g"""
        t = self.table
        return int(t[t[self.inverses[g], x], g])

    def comm(self, x: int, y: int) -> int:
        """[x, y] = x^-1 . y^-1 . x . y"""
        t = self.table
        return int(t[t[t[self.inverses[x], self.inverses[y]], x], y])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv(x), -k
        acc, base = self.identity_index, x
        t = self.table
        while k:
            if k & 1:
                acc = int(t[acc, base])
            base = int(t[base, base])
            k >>= 1
        return acc

    def element_order(self, x: int) -> int:
        e, t = self.identity_index, self.table
        k, y = 1, x
        while y != e:
            y = int(t[y, x])
            k += 1
        return k

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            self._orders = np.array(
                [self.element_order(x) for x in range(self.order)], dtype=_DTYPE
            )
        return self._orders

    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders().astype(np.int64)))

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def is_cyclic(self) -> bool:
        return int(self.element_orders().max()) == self.order

    def label(self, x: int) -> str:
        if self.element_labels is not None:
            return self.element_labels[x]
        return str(x)

    def table_key(self) -> bytes:
        if self._key is None:
            self._key = self.table.tobytes()
        return self._key

    # -- structure ------------------------------------------------------

    def generating_set(self) -> list[int]:
        """A small generating set (greedy; cached)."""
        if self._gens is None:
            gens: list[int] = []
            have = np.zeros(self.order, dtype=bool)
            have[self.identity_index] = True
            while not have.all():
                x = int(np.nonzero(~have)[0][0])
                gens.append(x)
                have[subgroup_closure(self, gens)] = True
            self._gens = gens
        return self._gens

    def conjugacy_classes(self) -> "ConjugacyClasses":
        if self._classes is None:
            self._classes = _compute_classes(self)
        return self._classes

    def subgroup(self, elements, check=True) -> "Subgroup":
        return Subgroup(self, elements, check=check)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, [self.identity_index], check=False)

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, np.arange(self.order), check=False)

    def check_associativity(self, samples: int = 10_000, seed: int = 0) -> None:
        """(x.y).z == x.(y.z); exhaustive for small orders, sampled above."""
        t = self.table
        n = self.order
        if n <= 1000:
            for x in range(n):
                left = t[t[x]]
                right = np.take(t[x], t)
                if not (left == right).all():
                    raise InputError(f"table is not associative at x={x}")
        else:
            rng = np.random.default_rng(seed)
            xs, ys, zs = rng.integers(0, n, size=(3, samples))
            if not (t[t[xs, ys], zs] == t[xs, t[ys, zs]]).all():
                raise InputError("table is not associative")

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


class ConjugacyClasses:
    """Conjugacy classes in canonical order.

    Classes are sorted by (order of representative, class size, smallest
    member); the representative of each class is its smallest member. The
    identity class always comes first.
    """

    def __init__(self, group, class_of, representatives, sizes):
        self.group = group
        self.class_of = class_of
        self.representatives = representatives
        self.sizes = sizes

    @property
    def count(self) -> int:
        return len(self.representatives)

    def members(self, c: int) -> np.ndarray:
        return np.nonzero(self.class_of == c)[0]

    def __repr__(self):
        return f"ConjugacyClasses(count={self.count})"


def _compute_classes(group: FiniteGroup) -> ConjugacyClasses:
    n = group.order
    t = group.table
    inv = group.inverses
    gens = group.generating_set()
    ar = np.arange(n, dtype=_DTYPE)
    conj_maps = [t[t[inv[g]], g] for g in gens]  # x -> g^-1.x.g, whole column at once

    class_of = np.full(n, -1, dtype=_DTYPE)
    raw = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        cid = len(raw)
        class_of[x] = cid
        frontier = [x]
        members = [x]
        while frontier:
            fr = np.array(frontier, dtype=_DTYPE)
            frontier = []
            for cm in conj_maps:
                img = cm[fr]
                fresh = img[class_of[img] < 0]
                if fresh.size:
                    fresh = np.unique(fresh)
                    fresh = fresh[class_of[fresh] < 0]
                    class_of[fresh] = cid
                    frontier.extend(int(v) for v in fresh)
                    members.extend(int(v) for v in fresh)
        raw.append(sorted(members))

    orders = group.element_orders()
    order_keys = sorted(
        range(len(raw)), key=lambda c: (int(orders[raw[c][0]]), len(raw[c]), raw[c][0])
    )
    remap = np.empty(len(raw), dtype=_DTYPE)
    for new, old in enumerate(order_keys):
        remap[old] = new
    class_of = remap[class_of]
    reps = np.array([raw[old][0] for old in order_keys], dtype=_DTYPE)
    sizes = np.array([len(raw[old]) for old in order_keys], dtype=_DTYPE)
    return ConjugacyClasses(group, class_of, reps, sizes)


class Subgroup:
    """A subgroup given by its sorted element indices in the parent group."""

    def __init__(self, parent: FiniteGroup, elements, check=True):
        self.parent = parent
        elements = np.unique(np.asarray(elements, dtype=_DTYPE))
        if elements.size == 0:
            raise InputError("a subgroup cannot be empty")
        self.elements = elements
        if check:
            inside = np.zeros(parent.order, dtype=bool)
            inside[elements] = True
            if not inside[parent.identity_index]:
                raise InputError("subgroup does not contain the identity")
            prods = parent.table[np.ix_(elements, elements)]
            if not inside[prods].all():
                raise InputError("element set is not closed under multiplication")
        self._as_group = None
        self._index_of = None

    @property
    def order(self) -> int:
        return int(self.elements.size)

    def __contains__(self, x: int) -> bool:
        i = int(np.searchsorted(self.elements, x))
        return i < self.elements.size and int(self.elements[i]) == x

    def contains_all(self, xs) -> bool:
        xs = np.asarray(xs, dtype=_DTYPE)
        pos = np.searchsorted(self.elements, xs)
        pos = np.clip(pos, 0, self.elements.size - 1)
        return bool((self.elements[pos] == xs).all())

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_full(self) -> bool:
        return self.order == self.parent.order

    def is_abelian(self) -> bool:
        sub = self.parent.table[np.ix_(self.elements, self.elements)]
        return bool((sub == sub.T).all())

    def is_central(self) -> bool:
        return bool(np.isin(self.elements, center(self.parent).elements).all())

    def is_cyclic(self) -> bool:
        orders = self.parent.element_orders()
        return int(orders[self.elements].max()) == self.order

    def is_normal(self) -> bool:
        par = self.parent
        t, inv = par.table, par.inverses
        for g in par.generating_set():
            image = np.sort(t[t[inv[g], self.elements], g])
            if not (image == self.elements).all():
                return False
        return True

    def index_of(self) -> np.ndarray:
        """Map parent element index -> position in `elements` (or -1)."""
        if self._index_of is None:
            idx = np.full(self.parent.order, -1, dtype=_DTYPE)
            idx[self.elements] = np.arange(self.elements.size, dtype=_DTYPE)
            self._index_of = idx
        return self._index_of

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone FiniteGroup (element i = elements[i])."""
        if self._as_group is None:
            par = self.parent
            sub = par.table[np.ix_(self.elements, self.elements)]
            table = self.index_of()[sub]
            labels = None
            if par.element_labels is not None:
                labels = [par.element_labels[int(x)] for x in self.elements]
            self._as_group = FiniteGroup(table, element_labels=labels, check=None)
        return self._as_group

    def key(self) -> bytes:
        return self.elements.tobytes()

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.elements.shape == self.elements.shape
            and bool((other.elements == self.elements).all())
        )

    def __hash__(self):
        return hash((id(self.parent), self.key()))

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.order})"


class QuotientGroup:
    """G/N with its projection map and coset representatives."""

    def __init__(self, parent, kernel, group, projection, coset_reps):
        self.parent = parent
        self.kernel = kernel
        self.group = group
        self.projection = projection
        self.coset_reps = coset_reps

    def project(self, x: int) -> int:
        return int(self.projection[x])

    def __repr__(self):
        return (
            f"QuotientGroup({self.parent.order}/{self.kernel.order}"
            f"={self.group.order})"
        )


def subgroup_closure(group: FiniteGroup, seeds) -> np.ndarray:
    """Sorted element indices of the subgroup generated by `seeds`."""
    t = group.table
    seeds = np.unique(np.asarray(seeds, dtype=_DTYPE))
    have = np.zeros(group.order, dtype=bool)
    have[group.identity_index] = True
    frontier = np.array([group.identity_index], dtype=_DTYPE)
    while frontier.size:
        prods = np.unique(t[np.ix_(frontier, seeds)].ravel())
        fresh = prods[~have[prods]]
        have[fresh] = True
        frontier = fresh
    return np.nonzero(have)[0].astype(_DTYPE)


def normal_closure(group: FiniteGroup, seeds) -> np.ndarray:
    """Smallest normal subgroup of `group` containing `seeds`."""
    t, inv = group.table, group.inverses
    gens = group.generating_set()
    current = subgroup_closure(group, seeds)
    while True:
        extra = []
        for g in gens:
            image = t[t[inv[g], current], g]
            new = image[~np.isin(image, current, assume_unique=False)]
            if new.size:
                extra.append(new)
        if not extra:
            return current
        current = subgroup_closure(group, np.concatenate([current] + extra))


def group_from_generators(generators, *, prime=None, budget: int = 100_000,
                          labels=None) -> FiniteGroup:
    """Close a generator list into a full multiplication table.

    `generators` is either a list of permutations (image lists, 0-based) or,
    when `prime` is given, a list of square matrices over F_prime (nested rows
    or flat row-major). Raises ResourceLimitError when the closure exceeds
    `budget` elements, InputError for malformed or singular generators.
    """
    if not generators:
        raise InputError("need at least one generator")
    if prime is None:
        concrete = [_check_permutation(g) for g in generators]
        degree = len(concrete[0])
        if any(len(g) != degree for g in concrete):
            raise InputError("permutation generators act on different point counts")
        identity = tuple(range(degree))
        compose = lambda a, b: tuple(a[p] for p in b)
        provenance = {"kind": "permutation", "degree": degree,
                      "generators": [list(g) for g in concrete]}
    else:
        concrete = [_check_matrix(g, prime) for g in generators]
        dim = concrete[0][0]
        if any(d != dim for d, _ in concrete):
            raise InputError("matrix generators have mixed dimensions")
        concrete = [m for _, m in concrete]
        identity = tuple(int(v) for v in np.eye(dim, dtype=np.int64).ravel())
        def compose(a, b, _d=dim, _p=prime):
            mat_a = np.array(a, dtype=np.int64).reshape(_d, _d)
            mat_b = np.array(b, dtype=np.int64).reshape(_d, _d)
            return tuple(int(v) for v in ((mat_a @ mat_b) % _p).ravel())
        provenance = {"kind": "matrix", "prime": prime, "dim": dim,
                      "generators": [list(g) for g in concrete]}

    elements = [identity]
    index = {identity: 0}
    parent_of = [0]
    gen_of = [-1]
    cursor = 0
    while cursor < len(elements):
        base = elements[cursor]
        for gi, g in enumerate(concrete):
            prod = compose(base, g)
            if prod not in index:
                if len(elements) >= budget:
                    raise ResourceLimitError(
                        f"closure exceeded the element budget of {budget}"
                    )
                index[prod] = len(elements)
                elements.append(prod)
                parent_of.append(cursor)
                gen_of.append(gi)
        cursor += 1

    n = len(elements)
    gen_indices = [index[g] for g in concrete]
    provenance["indices"] = gen_indices

    # Left-multiplication rows: row[x][y] = index(x . y). A child discovered
    # as parent.g satisfies row_child = row_parent[row_g], so only the
    # generator rows need concrete products.
    table = np.empty((n, n), dtype=_DTYPE)
    table[0] = np.arange(n, dtype=_DTYPE)
    gen_rows = {}
    for gi, g in enumerate(concrete):
        row = np.empty(n, dtype=_DTYPE)
        for y, el in enumerate(elements):
            row[y] = index[compose(g, el)]
        gen_rows[gi] = row
    for x in range(1, n):  # discovery order, so the parent row already exists
        table[x] = table[parent_of[x]][gen_rows[gen_of[x]]]

    if labels is None and len(concrete) <= 26:
        labels = _word_labels(parent_of, gen_of)
    return FiniteGroup(table, element_labels=labels,
                       generator_provenance=provenance, check="basic")


def _word_labels(parent_of, gen_of):
    letters = "abcdefghijklmnopqrstuvwxyz"
    labels = ["e"]
    for x in range(1, len(parent_of)):
        base = labels[parent_of[x]]
        letter = letters[gen_of[x]]
        labels.append(letter if base == "e" else base + letter)
    return labels


def _check_permutation(g):
    images = tuple(int(v) for v in g)
    if sorted(images) != list(range(len(images))):
        raise InputError(f"not a permutation of 0..{len(images) - 1}: {list(g)}")
    return images


def _check_matrix(g, prime):
    arr = np.array(g, dtype=np.int64)
    if arr.ndim == 1:
        dim = math.isqrt(arr.size)
        if dim * dim != arr.size:
            raise InputError("flat matrix generator is not square")
        arr = arr.reshape(dim, dim)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InputError("matrix generator is not square")
    arr %= prime
    if _det_mod(arr, prime) == 0:
        raise InputError("matrix generator is singular modulo the prime")
    return arr.shape[0], tuple(int(v) for v in arr.ravel())


def _det_mod(mat, p):
    m = mat.copy() % p
    n = m.shape[0]
    det = 1
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r, c] % p:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
            det = -det
        det = (det * int(m[c, c])) % p
        inv = pow(int(m[c, c]), p - 2, p)
        for r in range(c + 1, n):
            if m[r, c]:
                m[r] = (m[r] - int(m[r, c]) * inv * m[c]) % p
    return det % p


# -- structural operators ---------------------------------------------------


def conjugacy_classes(group: FiniteGroup) -> ConjugacyClasses:
    return group.conjugacy_classes()


def center(group: FiniteGroup) -> Subgroup:
    mask = (group.table == group.table.T).all(axis=1)
    return Subgroup(group, np.nonzero(mask)[0], check=False)


def commutator_subgroup(group: FiniteGroup, a_elements, b_elements=None) -> Subgroup:
    """The subgroup generated by all [a, b] with a in A and b in B (default G)."""
    t, inv = group.table, group.inverses
    a = np.asarray(a_elements, dtype=_DTYPE)
    b = (np.arange(group.order, dtype=_DTYPE) if b_elements is None
         else np.asarray(b_elements, dtype=_DTYPE))
    t1 = t[np.ix_(inv[a], inv[b])]
    t2 = t[t1, a[:, None]]
    seeds = np.unique(t[t2, b[None, :]])
    return Subgroup(group, subgroup_closure(group, seeds), check=False)


def derived_subgroup(group: FiniteGroup) -> Subgroup:
    if group._derived is None:
        group._derived = commutator_subgroup(group, np.arange(group.order))
    return group._derived


def is_nilpotent(group: FiniteGroup) -> bool:
    """Lower central series reaches the trivial subgroup."""
    current = np.arange(group.order, dtype=_DTYPE)
    while True:
        nxt = commutator_subgroup(group, current).elements
        if nxt.size == current.size:
            return current.size == 1
        if nxt.size == 1:
            return True
        current = nxt


def normal_subgroups(group: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, sorted by (order, element list).

    Every normal subgroup is a join of closures of conjugacy classes, and the
    product of two normal subgroups is already a subgroup, so the lattice
    closure needs one table pass per join.
    """
    if group._normals is not None:
        return group._normals
    t = group.table
    classes = group.conjugacy_classes()
    seen = {}
    work = []
    for c in range(classes.count):
        n_c = subgroup_closure(group, classes.members(c))
        key = n_c.tobytes()
        if key not in seen:
            seen[key] = n_c
            work.append(n_c)
    cursor = 0
    while cursor < len(work):
        a = work[cursor]
        for b in work[: cursor + 1]:
            join = np.unique(t[np.ix_(a, b)])
            key = join.tobytes()
            if key not in seen:
                seen[key] = join
                work.append(join)
        cursor += 1
    subs = [Subgroup(group, el, check=False) for el in seen.values()]
    subs.sort(key=lambda s: (s.order, s.elements.tolist()))
    group._normals = subs
    return subs


def abelian_normal_subgroups(group: FiniteGroup) -> list[Subgroup]:
    """Nontrivial abelian normal subgroups, largest first."""
    subs = [s for s in normal_subgroups(group) if not s.is_trivial() and s.is_abelian()]
    subs.sort(key=lambda s: (-s.order, s.elements.tolist()))
    return subs


def quotient(group: FiniteGroup, kernel) -> QuotientGroup:
    """G/N for a normal subgroup N; raises InputError if N is not normal."""
    if not isinstance(kernel, Subgroup):
        kernel = Subgroup(group, kernel)
    cached = group._quotients.get(kernel.key())
    if cached is not None:
        return cached
    if kernel.parent is not group:
        raise InputError("kernel belongs to a different group")
    if not kernel.is_normal():
        raise InputError("cannot form the quotient: subgroup is not normal")
    t = group.table
    cosets = t[:, kernel.elements]
    keys = cosets.min(axis=1)
    reps = np.unique(keys)
    projection = np.searchsorted(reps, keys).astype(_DTYPE)
    q_table = projection[t[np.ix_(reps, reps)]]
    labels = None
    if group.element_labels is not None:
        labels = [group.element_labels[int(r)] for r in reps]
    q_group = FiniteGroup(q_table, element_labels=labels, check="basic")
    result = QuotientGroup(group, kernel, q_group, projection, reps.astype(_DTYPE))
    group._quotients[kernel.key()] = result
    return result


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Componentwise product on index pairs (x1, x2) -> x1 * |G2| + x2."""
    n1, n2 = g1.order, g2.order
    t1 = g1.table.astype(np.int64)
    t2 = g2.table.astype(np.int64)
    big = (
        t1[:, None, :, None] * n2 + t2[None, :, None, :]
    ).reshape(n1 * n2, n1 * n2)
    labels = None
    if g1.element_labels is not None and g2.element_labels is not None:
        labels = [
            f"({g1.element_labels[i]},{g2.element_labels[j]})"
            for i in range(n1)
            for j in range(n2)
        ]
    return FiniteGroup(big.astype(_DTYPE), element_labels=labels, check="basic")
