"""Character tables and Clifford-theory operations.

Tables are computed by the modular splitting method: structure constants of
the class algebra are reduced mod a prime p = 1 (mod exponent), p^2 > 4|G|,
the common eigenvectors of the class-sum matrices are found by repeated
characteristic-polynomial splitting over F_p, and the resulting mod-p
characters are lifted to exact values in Q(zeta_exponent) by a discrete
Fourier transform over the eigenvalue powers.

Irreducibles are sorted by (degree, lexicographic coefficient vectors), so a
table is a pure function of the multiplication table; tables are memoized on
the table bytes.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import _cycvec
from .cyclotomic import Cyclotomic, _pow_table, phi
from .errors import InputError, InternalCheckError, ResourceLimitError
from .groups import FiniteGroup, QuotientGroup, Subgroup, quotient


def _as_cyc(v):
    if isinstance(v, Cyclotomic):
        return v
    if isinstance(v, (int, Fraction)):
        return Cyclotomic.from_rational(v)
    raise InputError(f"cannot use {type(v).__name__} as a class-function value")


def same_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    """Same presented group: identical instance or identical table."""
    return a is b or (a.order == b.order and a.table_key() == b.table_key())


class ClassFunction:
    """A class function given by one exact value per conjugacy class."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values):
        self.group = group
        self.values = tuple(_as_cyc(v) for v in values)
        k = group.conjugacy_classes().count
        if len(self.values) != k:
            raise InputError(f"expected {k} class values, got {len(self.values)}")

    def __call__(self, x: int) -> Cyclotomic:
        return self.values[int(self.group.conjugacy_classes().class_of[x])]

    @property
    def degree(self):
        d = self.values[0].is_rational_integer()
        return d if d is not None else self.values[0]

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, [v.conjugate() for v in self.values])

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)

    def _binary(self, other, op):
        if isinstance(other, ClassFunction):
            if not same_group(self.group, other.group):
                raise InputError("class functions live on different groups")
            return ClassFunction(
                self.group, [op(a, b) for a, b in zip(self.values, other.values)]
            )
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return ClassFunction(self.group, [op(a, other) for a in self.values])
        return NotImplemented

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return same_group(self.group, other.group) and self.values == other.values

    def __hash__(self):
        return hash(tuple(v._reduced_key() for v in self.values))

    def key(self):
        return tuple(v._reduced_key() for v in self.values)

    def __repr__(self):
        return f"ClassFunction({[str(v) for v in self.values]})"


def trivial_character(group: FiniteGroup) -> ClassFunction:
    k = group.conjugacy_classes().count
    return ClassFunction(group, [1] * k)


def regular_character(group: FiniteGroup) -> ClassFunction:
    k = group.conjugacy_classes().count
    return ClassFunction(group, [group.order] + [0] * (k - 1))


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum over classes of size * f * conj(g), exactly."""
    if not same_group(f.group, g.group):
        raise InputError("inner product needs class functions on the same group")
    cc = f.group.conjugacy_classes()
    sizes = cc.sizes
    n = f.group.order
    e = 1
    for v in f.values + g.values:
        e = e * v.m // math.gcd(e, v.m)
    a = _cycvec.value_matrix(f.values, e)
    b = _cycvec.value_matrix(g.values, e)
    if a is not None and b is not None:
        bc = b @ _cycvec.conj_matrix(e)
        pair = np.einsum("ia,ib->ab", a * sizes.astype(np.int64)[:, None], bc)
        vec = np.einsum("ab,abc->c", pair, _cycvec.reduce_tensor(e))
        return Cyclotomic(e, [Fraction(int(c), n) for c in vec])
    total = Cyclotomic.zero(1)
    for c in range(cc.count):
        total = total + int(sizes[c]) * f.values[c] * g.values[c].conjugate()
    return total / n


class CharacterTable:
    """All irreducible characters of a group, canonically ordered."""

    def __init__(self, group, irreducibles, exponent, prime):
        self.group = group
        self.classes = group.conjugacy_classes()
        self.irreducibles = tuple(irreducibles)
        self.exponent = exponent
        self.prime = prime
        self.degrees = np.array([chi.degree for chi in self.irreducibles],
                                dtype=np.int64)
        self._tensor = None
        self._index = {chi.values: i for i, chi in enumerate(self.irreducibles)}

    @property
    def count(self) -> int:
        return len(self.irreducibles)

    def irr(self, i: int) -> ClassFunction:
        return self.irreducibles[i]

    def index_of(self, chi: ClassFunction) -> int:
        i = self._index.get(chi.values)
        if i is None:
            raise InputError("character is not a row of this table")
        return i

    def linear_indices(self) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == 1]

    def trivial_index(self) -> int:
        for i, chi in enumerate(self.irreducibles):
            if chi.is_trivial():
                return i
        raise InternalCheckError("table has no trivial character")

    def value_tensor(self) -> np.ndarray:
        """(count, classes, phi(exponent)) int64 coefficient tensor."""
        if self._tensor is None:
            rows = [
                _cycvec.value_matrix(chi.values, self.exponent)
                for chi in self.irreducibles
            ]
            if any(r is None for r in rows):
                raise InternalCheckError("character values must be integral")
            self._tensor = np.stack(rows)
        return self._tensor

    def __repr__(self):
        return f"CharacterTable(order={self.group.order}, count={self.count})"


_TABLE_CACHE: dict[bytes, CharacterTable] = {}


def character_table(group: FiniteGroup) -> CharacterTable:
    key = group.table_key()
    tab = _TABLE_CACHE.get(key)
    if tab is None:
        tab = _dixon(group)
        _TABLE_CACHE[key] = tab
    return tab


# -- the modular method ------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def _find_prime(exponent: int, order: int) -> int:
    p = exponent + 1
    while p <= 10_000_000:
        if p * p > 4 * order and _is_prime(p):
            return p
        p += exponent
    raise ResourceLimitError(
        f"no usable prime = 1 mod {exponent} with p^2 > {4 * order} below 1e7"
    )


def _primitive_root(p: int) -> int:
    factors = []
    m = p - 1
    q = 2
    while q * q <= m:
        if m % q == 0:
            factors.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise InternalCheckError(f"no primitive root mod {p}")


def _hessenberg_mod(mat: np.ndarray, p: int) -> np.ndarray:
    h = mat.copy() % p
    d = h.shape[0]
    for c in range(d - 2):
        piv = None
        for r in range(c + 1, d):
            if h[r, c]:
                piv = r
                break
        if piv is None:
            continue
        if piv != c + 1:
            h[[c + 1, piv]] = h[[piv, c + 1]]
            h[:, [c + 1, piv]] = h[:, [piv, c + 1]]
        inv = pow(int(h[c + 1, c]), p - 2, p)
        for r in range(c + 2, d):
            f = int(h[r, c]) * inv % p
            if f:
                h[r] = (h[r] - f * h[c + 1]) % p
                h[:, c + 1] = (h[:, c + 1] + f * h[:, r]) % p
    return h


def _charpoly_mod(mat: np.ndarray, p: int) -> np.ndarray:
    """det(xI - mat) mod p, ascending coefficients, via Hessenberg recurrence."""
    d = mat.shape[0]
    if d == 0:
        return np.array([1], dtype=np.int64)
    h = _hessenberg_mod(mat, p)
    polys = [np.array([1], dtype=np.int64)]
    for m in range(1, d + 1):
        prev = polys[m - 1]
        cur = np.zeros(m + 1, dtype=np.int64)
        cur[1 : m + 1] += prev
        cur[:m] -= int(h[m - 1, m - 1]) * prev
        beta = 1
        for i in range(m - 1, 0, -1):
            beta = beta * int(h[i, i - 1]) % p
            coef = int(h[i - 1, m - 1]) * beta % p
            if coef:
                cur[:i] -= coef * polys[i - 1]
        polys.append(cur % p)
    return polys[d]


def _roots_mod(coeffs: np.ndarray, p: int) -> np.ndarray:
    xs = np.arange(p, dtype=np.int64)
    vals = np.zeros(p, dtype=np.int64)
    for c in coeffs[::-1]:
        vals = (vals * xs + int(c)) % p
    return xs[vals == 0]


def _rref_mod(mat: np.ndarray, p: int):
    m = mat.copy() % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        sel = None
        for i in range(r, rows):
            if m[i, c]:
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            m[[r, sel]] = m[[sel, r]]
        m[r] = m[r] * pow(int(m[r, c]), p - 2, p) % p
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - int(m[i, c]) * m[r]) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _nullspace_mod(mat: np.ndarray, p: int) -> np.ndarray:
    red, pivots = _rref_mod(mat, p)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = (-int(red[ri, fc])) % p
    return basis


def _eigen_split(b: np.ndarray, p: int) -> list[np.ndarray]:
    d = b.shape[0]
    roots = _roots_mod(_charpoly_mod(b, p), p)
    spaces = []
    covered = 0
    for lam in roots:
        ns = _nullspace_mod((b - lam * np.eye(d, dtype=np.int64)) % p, p)
        if ns.shape[0]:
            spaces.append(ns)
            covered += ns.shape[0]
    if covered != d:
        raise InternalCheckError("class-sum restriction was not diagonalizable")
    return spaces


def _dixon(group: FiniteGroup) -> CharacterTable:
    cc = group.conjugacy_classes()
    k = cc.count
    n = group.order
    reps = cc.representatives
    sizes = cc.sizes.astype(np.int64)
    e = group.exponent()
    p = _find_prime(e, n)
    t = group.table

    def class_sum_matrix(i):
        # structure constants m[j, s] = #{x in C_i : x^-1 . rep_s in C_j}
        members = cc.members(i)
        w = cc.class_of[t[np.ix_(group.inverses[members], reps)]]
        m = np.zeros((k, k), dtype=np.int64)
        np.add.at(m, (w, np.broadcast_to(np.arange(k), w.shape)), 1)
        return m

    # split the common right-eigenvector spaces
    if k == 1:
        done = [np.eye(1, dtype=np.int64)]
    else:
        pending = [np.eye(k, dtype=np.int64)]
        done: list[np.ndarray] = []
        for i in range(1, k):
            if not pending:
                break
            a = class_sum_matrix(i) % p
            nxt = []
            for v in pending:
                piv = [int(np.nonzero(row)[0][0]) for row in v]
                avt = (a @ v.T) % p
                b = avt[piv, :]
                if ((v.T @ b) % p != avt).any():
                    raise InternalCheckError("subspace not invariant under class sum")
                for w in _eigen_split(b, p):
                    u, _ = _rref_mod((w @ v) % p, p)
                    (done if u.shape[0] == 1 else nxt).append(u)
            pending = nxt
        if pending:
            raise InternalCheckError("class-sum eigenspaces did not fully split")
    if len(done) != k:
        raise InternalCheckError(f"expected {k} characters, split into {len(done)}")

    omegas = np.zeros((k, k), dtype=np.int64)
    for r, v in enumerate(done):
        row = v[0] % p
        if row[0] == 0:
            raise InternalCheckError("eigenvector vanishes at the identity class")
        omegas[r] = row * pow(int(row[0]), p - 2, p) % p

    inv_class = cc.class_of[group.inverses[reps]]
    inv_sizes = np.array([pow(int(s), p - 2, p) for s in sizes], dtype=np.int64)

    s = (omegas * omegas[:, inv_class] % p * inv_sizes[None, :]).sum(axis=1) % p
    degrees = np.zeros(k, dtype=np.int64)
    limit = math.isqrt(n)
    for r in range(k):
        d2 = n * pow(int(s[r]), p - 2, p) % p
        for d in range(1, limit + 1):
            if d * d % p == d2:
                degrees[r] = d
                break
        if degrees[r] == 0:
            raise InternalCheckError("no degree matches the mod-p norm equation")
    if int((degrees * degrees).sum()) != n:
        raise InternalCheckError("degree squares do not sum to the group order")

    chi_p = degrees[:, None] * omegas % p * inv_sizes[None, :] % p

    gamma = _primitive_root(p)
    theta = pow(gamma, (p - 1) // e, p)
    pows_e = _pow_table(e)
    dims = phi(e)
    coeff = np.zeros((k, k, dims), dtype=np.int64)
    for ci in range(k):
        rep = int(reps[ci])
        n_t = group.element_order(rep)
        pcls = np.empty(n_t, dtype=np.int64)
        y = group.identity_index
        for v in range(n_t):
            pcls[v] = cc.class_of[y]
            y = int(t[y, rep])
        theta_n_inv = pow(pow(theta, e // n_t, p), p - 2, p)
        base = np.array([pow(theta_n_inv, x, p) for x in range(n_t)], dtype=np.int64)
        dft = base[np.outer(np.arange(n_t), np.arange(n_t)) % n_t]
        inv_n = pow(n_t, p - 2, p)
        c_u = chi_p[:, pcls] @ dft.T % p * inv_n % p
        if (c_u > degrees[:, None]).any():
            raise InternalCheckError("eigenvalue multiplicity exceeds the degree")
        basis_rows = np.array([pows_e[u * (e // n_t)] for u in range(n_t)],
                              dtype=np.int64)
        coeff[:, ci, :] = c_u @ basis_rows

    funcs = []
    for r in range(k):
        values = [Cyclotomic(e, [int(c) for c in coeff[r, ci]]) for ci in range(k)]
        funcs.append(ClassFunction(group, values))
    funcs.sort(key=lambda f: (f.degree, [v.coeffs for v in f.values]))
    return CharacterTable(group, funcs, e, p)


# -- Clifford-theory operations ---------------------------------------------


def restrict(f: ClassFunction, sub: Subgroup) -> ClassFunction:
    """Restriction of a class function to a subgroup (as its own group)."""
    if not same_group(f.group, sub.parent):
        raise InputError("subgroup does not live in the class function's group")
    sub_g = sub.as_group()
    cc_sub = sub_g.conjugacy_classes()
    cc = f.group.conjugacy_classes()
    values = [
        f.values[int(cc.class_of[int(sub.elements[int(r)])])]
        for r in cc_sub.representatives
    ]
    return ClassFunction(sub_g, values)


def induce(mu: ClassFunction, sub: Subgroup) -> ClassFunction:
    """Induced class function: Ind(mu)(g) = (1/|N|) sum over x with x^-1.g.x in N."""
    parent = sub.parent
    sub_g = sub.as_group()
    if not same_group(mu.group, sub_g):
        raise InputError("character does not live on the given subgroup")
    t, inv = parent.table, parent.inverses
    cc = parent.conjugacy_classes()
    cc_sub = sub_g.conjugacy_classes()
    sub_idx = sub.index_of()
    ar = np.arange(parent.order)
    e = 1
    for v in mu.values:
        e = e * v.m // math.gcd(e, v.m)
    mu_rows = _cycvec.value_matrix(mu.values, e)
    values = []
    for rep in cc.representatives:
        half = t[inv, int(rep)]
        conj_all = t[half, ar]
        ni = sub_idx[conj_all]
        inside = ni >= 0
        counts = np.bincount(cc_sub.class_of[ni[inside]], minlength=cc_sub.count)
        if mu_rows is not None:
            vec = counts.astype(np.int64) @ mu_rows
            values.append(Cyclotomic(e, [Fraction(int(c), sub.order) for c in vec]))
        else:
            acc = Cyclotomic.zero(1)
            for j, c in enumerate(counts):
                if c:
                    acc = acc + int(c) * mu.values[j]
            values.append(acc / sub.order)
    return ClassFunction(parent, values)


def tensor(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    return f * g


def deflate(f: ClassFunction, kernel: Subgroup) -> ClassFunction:
    """View a character trivial on a normal subgroup as one of the quotient."""
    # class data is a pure function of the multiplication table, so indexing
    # through the kernel's own parent is sound even for a twin instance
    parent = kernel.parent
    if not same_group(f.group, parent):
        raise InputError("kernel does not live in the class function's group")
    cc = parent.conjugacy_classes()
    ident = f.values[0]
    for cls in np.unique(cc.class_of[kernel.elements]):
        if f.values[int(cls)] != ident:
            raise InputError("class function is not trivial on the kernel")
    q = quotient(parent, kernel)
    qcc = q.group.conjugacy_classes()
    values = [
        f.values[int(cc.class_of[int(q.coset_reps[int(r)])])]
        for r in qcc.representatives
    ]
    return ClassFunction(q.group, values)


def inflate(f: ClassFunction, q: QuotientGroup) -> ClassFunction:
    """Pull a class function on G/N back to G along the projection."""
    if not same_group(f.group, q.group):
        raise InputError("class function does not live on the quotient group")
    cc = q.parent.conjugacy_classes()
    qcc = q.group.conjugacy_classes()
    values = [
        f.values[int(qcc.class_of[int(q.projection[int(r)])])]
        for r in cc.representatives
    ]
    return ClassFunction(q.parent, values)


def decompose(f: ClassFunction, table: CharacterTable | None = None) -> np.ndarray:
    """Multiplicities of f against the irreducibles; InputError if not a character sum."""
    if table is None:
        table = character_table(f.group)
    mults = np.zeros(table.count, dtype=np.int64)
    for i, chi in enumerate(table.irreducibles):
        m = inner_product(f, chi)
        mi = m.is_rational_integer()
        if mi is None or mi < 0:
            raise InputError(
                f"not a nonnegative integer combination: <f, chi{i}> = {m}"
            )
        mults[i] = mi
    return mults


def is_multiplicity_free(f: ClassFunction, table: CharacterTable | None = None) -> bool:
    return bool((decompose(f, table) <= 1).all())


def conjugated_on_subgroup(mu: ClassFunction, sub: Subgroup, g: int) -> ClassFunction:
    """The conjugate character (g.mu)(x) = mu(g^-1 . x . g) on the subgroup."""
    parent = sub.parent
    sub_g = sub.as_group()
    if not same_group(mu.group, sub_g):
        raise InputError("character does not live on the given subgroup")
    cc_sub = sub_g.conjugacy_classes()
    sub_idx = sub.index_of()
    t, inv = parent.table, parent.inverses
    values = []
    for r in cc_sub.representatives:
        el = int(sub.elements[int(r)])
        conj_el = int(t[t[inv[g], el], g])
        pos = int(sub_idx[conj_el])
        if pos < 0:
            raise InputError("subgroup is not invariant under conjugation by g")
        values.append(mu.values[int(cc_sub.class_of[pos])])
    return ClassFunction(sub_g, values)


def inertia_subgroup(sub: Subgroup, mu: ClassFunction) -> Subgroup:
    """Elements g of the parent with mu(g^-1 . n . g) = mu(n) for all n."""
    parent = sub.parent
    sub_g = sub.as_group()
    if not same_group(mu.group, sub_g):
        raise InputError("character does not live on the given subgroup")
    cc_sub = sub_g.conjugacy_classes()
    ids = {}
    vid = np.empty(sub.order, dtype=np.int64)
    for pos in range(sub.order):
        v = mu.values[int(cc_sub.class_of[pos])]
        key = v._reduced_key()
        vid[pos] = ids.setdefault(key, len(ids))
    t, inv = parent.table, parent.inverses
    n_el = sub.elements
    t1 = t[np.ix_(inv, n_el)]
    t2 = t[t1, np.arange(parent.order)[:, None]]
    pos = sub.index_of()[t2]
    if (pos < 0).any():
        raise InputError("inertia subgroup needs a normal subgroup")
    mask = (vid[pos] == vid[None, :]).all(axis=1)
    return Subgroup(parent, np.nonzero(mask)[0], check=False)


def irr_over(sub: Subgroup, mu: ClassFunction,
             table: CharacterTable | None = None) -> list[int]:
    """Indices of irreducibles of the parent lying over mu (nonzero restriction pairing)."""
    if table is None:
        table = character_table(sub.parent)
    out = []
    for i, chi in enumerate(table.irreducibles):
        if not inner_product(restrict(chi, sub), mu).is_zero():
            out.append(i)
    return out


# -- explicit representations ------------------------------------------------


class RepresentationMatrices:
    """A matrix representation given by images of a generating set.

    `matrices` pair positionally with `gen_indices` (element indices of the
    generators; defaults to the group's generator provenance). Images of other
    elements are built lazily along a BFS spanning tree and memoized.
    """

    def __init__(self, group: FiniteGroup, matrices, gen_indices=None,
                 variable_basis=None):
        self.group = group
        if gen_indices is None:
            prov = group.generator_provenance
            if prov is None or "indices" not in prov:
                raise InputError(
                    "group has no generator provenance; pass gen_indices"
                )
            gen_indices = prov["indices"]
        gen_indices = [int(g) for g in gen_indices]
        if len(matrices) != len(gen_indices):
            raise InputError("one matrix per generator, positionally")
        mats = []
        dim = None
        for m in matrices:
            rows = [[_as_cyc(v) for v in row] for row in m]
            if dim is None:
                dim = len(rows)
            if len(rows) != dim or any(len(r) != dim for r in rows):
                raise InputError("representation matrices must be square, same size")
            mats.append(tuple(tuple(r) for r in rows))
        self.dim = dim
        self.gen_indices = gen_indices
        if variable_basis is None:
            variable_basis = [f"x{i}" for i in range(dim)]
        if len(variable_basis) != dim:
            raise InputError("variable_basis length must equal the dimension")
        self.variable_basis = list(variable_basis)

        # spanning tree: parent[x], via[x] with x = parent . gen(via)
        t = group.table
        parent = np.full(group.order, -1, dtype=np.int64)
        via = np.full(group.order, -1, dtype=np.int64)
        e = group.identity_index
        parent[e] = e
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for gi, g in enumerate(gen_indices):
                    y = int(t[x, g])
                    if parent[y] < 0:
                        parent[y] = x
                        via[y] = gi
                        nxt.append(y)
            frontier = nxt
        if (parent < 0).any():
            raise InputError("generator indices do not generate the group")
        self._parent = parent
        self._via = via
        ident = tuple(
            tuple(
                Cyclotomic.one(1) if i == j else Cyclotomic.zero(1)
                for j in range(dim)
            )
            for i in range(dim)
        )
        self._images = {e: ident}
        for gi, g in enumerate(gen_indices):
            self._images.setdefault(g, mats[gi])
        self._gen_mats = mats

    def image(self, x: int):
        memo = self._images
        chain = []
        while x not in memo:
            chain.append(x)
            x = int(self._parent[x])
        mat = memo[x]
        for y in reversed(chain):
            mat = _mat_mul(memo[int(self._parent[y])], self._gen_mats[int(self._via[y])])
            memo[y] = mat
        return mat

    def character(self) -> ClassFunction:
        cc = self.group.conjugacy_classes()
        values = []
        for r in cc.representatives:
            m = self.image(int(r))
            acc = Cyclotomic.zero(1)
            for i in range(self.dim):
                acc = acc + m[i][i]
            values.append(acc)
        return ClassFunction(self.group, values)

    def check_homomorphism(self, samples: int = 200, seed: int = 0) -> None:
        n = self.group.order
        rng = np.random.default_rng(seed)
        if n * n <= samples:
            pairs = [(x, y) for x in range(n) for y in range(n)]
        else:
            pairs = zip(
                rng.integers(0, n, size=samples), rng.integers(0, n, size=samples)
            )
        for x, y in pairs:
            xy = self.group.mul(int(x), int(y))
            if _mat_mul(self.image(int(x)), self.image(int(y))) != self.image(xy):
                raise InternalCheckError(
                    f"matrices fail image({x}).image({y}) == image({x}.{y})"
                )


def _mat_mul(a, b):
    dim = len(a)
    inner = len(b)
    out = []
    for i in range(dim):
        row = []
        for j in range(len(b[0])):
            acc = a[i][0] * b[0][j]
            for s in range(1, inner):
                acc = acc + a[i][s] * b[s][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def character_of(rep: RepresentationMatrices) -> ClassFunction:
    return rep.character()


def render_character_table(table: CharacterTable) -> str:
    """Deterministic text rendering: class data block, then one row per character."""
    group = table.group
    cc = table.classes
    lines = [
        f"# group order {group.order}, {cc.count} classes, exponent {table.exponent}",
        "# class: representative label, size, element order",
    ]
    for c in range(cc.count):
        rep = int(cc.representatives[c])
        lines.append(
            f"class c{c}: rep {group.label(rep)}, size {int(cc.sizes[c])}, "
            f"order {group.element_order(rep)}"
        )
    lines.append("# character: degree, value list (values in Q(zeta_m))")
    for i, chi in enumerate(table.irreducibles):
        vals = ", ".join(str(v) for v in chi.values)
        lines.append(f"chi{i}: degree {chi.degree}, values [{vals}]")
    return "\n".join(lines) + "\n"
