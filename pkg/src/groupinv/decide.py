"""Decision procedures built on restriction behaviour over abelian normal
subgroups.

Two graded notions are decided level by level.  A group is *unramified* over
an abelian normal subgroup N when every irreducible character restricts to N
either multiplicity-freely or as a multiple of the trivial character of N; it
is *pseudo-unramified* over N when every linear character of N is covered by
some irreducible of G whose restriction to N is multiplicity free.  The
*totally* (pseudo-)unramified deciders chain these checks through successive
quotients down to the trivial group and return a replayable certificate.
``is_complete`` decides, for a single character, whether it splits level by
level so that one summand restricts to exactly the nontrivial linear
characters of N, recursing on a derived character of the quotient.

Verdicts depend only on multiplication tables and exact character data, so
they are deterministic.  Candidate subgroups are examined in a canonical
order (descending order, then element lists); the searches share no mutable
state beyond per-run memo tables, so candidate checks could run in any order
without changing a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chartheory import (
    CharacterTable,
    ClassFunction,
    RepresentationMatrices,
    character_table,
    conjugated_on_subgroup,
    decompose,
    deflate,
    inertia_subgroup,
    irr_over,
    restrict,
    same_group,
)
from .errors import InputError, InternalCheckError
from .groups import (
    FiniteGroup,
    Subgroup,
    abelian_normal_subgroups,
    commutator_subgroup,
    derived_subgroup,
    is_nilpotent,
    quotient,
)

TAG_SUFFICIENT = "UNRAMIFIED-SUFFICIENT"
TAG_IMPOSSIBLE = "UNRAMIFIED-IMPOSSIBLE"
TAG_SKIP = "SKIP"
TAG_MAXIMAL = "MAXIMAL-ABELIAN"

__all__ = [
    "TAG_SUFFICIENT",
    "TAG_IMPOSSIBLE",
    "TAG_SKIP",
    "TAG_MAXIMAL",
    "ChainLevel",
    "DecisionCertificate",
    "SplitLevel",
    "CompletenessReport",
    "is_unramified_over",
    "is_pseudo_unramified_over",
    "is_unramified_over_by_inertia",
    "is_pseudo_unramified_over_by_inertia",
    "is_totally_unramified",
    "is_totally_pseudo_unramified",
    "fast_path_flags",
    "linear_character_orbits",
    "replay_certificate",
    "export_certificate",
    "qpi_character",
    "is_complete",
]


# -- single-level checks -----------------------------------------------------


def _require_abelian_normal(group: FiniteGroup, sub) -> Subgroup:
    if not isinstance(sub, Subgroup):
        raise InputError("N must be a Subgroup")
    if not same_group(sub.parent, group):
        raise InputError("N does not live in the given group")
    if sub.is_trivial():
        raise InputError("N must be nontrivial")
    if not sub.is_abelian():
        raise InputError("N must be abelian")
    if not sub.is_normal():
        raise InputError("N must be normal")
    return sub


def _restriction_multiplicities(group, sub):
    """(table of G, table of N, multiplicity matrix irr(G) x irr(N))."""
    tab_g = character_table(group)
    tab_n = character_table(sub.as_group())
    mult = np.zeros((tab_g.count, tab_n.count), dtype=np.int64)
    for i, chi in enumerate(tab_g.irreducibles):
        mult[i] = decompose(restrict(chi, sub), tab_n)
    return tab_g, tab_n, mult


def _violating_rows(tab_n: CharacterTable, mult: np.ndarray) -> np.ndarray:
    free = (mult <= 1).all(axis=1)
    keep = np.ones(mult.shape[1], dtype=bool)
    keep[tab_n.trivial_index()] = False
    trivial_only = ~(mult[:, keep] != 0).any(axis=1)
    return np.nonzero(~(free | trivial_only))[0]


def _orphan_columns(mult: np.ndarray) -> np.ndarray:
    free = (mult <= 1).all(axis=1)
    covered = (mult[free] > 0).any(axis=0)
    return np.nonzero(~covered)[0]


def is_unramified_over(group: FiniteGroup, sub: Subgroup):
    """Does every irreducible of the group restrict to the subgroup either
    multiplicity-freely or as a multiple of its trivial character?

    Returns (verdict, witness): on False the witness is a violating
    irreducible character of the group, otherwise None.
    """
    _require_abelian_normal(group, sub)
    tab_g, tab_n, mult = _restriction_multiplicities(group, sub)
    bad = _violating_rows(tab_n, mult)
    if bad.size:
        return False, tab_g.irreducibles[int(bad[0])]
    return True, None


def is_pseudo_unramified_over(group: FiniteGroup, sub: Subgroup):
    """Is every linear character of the subgroup contained in some
    irreducible of the group whose restriction is multiplicity free?

    Returns (verdict, witness): on False the witness is an orphaned linear
    character of the subgroup, otherwise None.
    """
    _require_abelian_normal(group, sub)
    _, tab_n, mult = _restriction_multiplicities(group, sub)
    orphan = _orphan_columns(mult)
    if orphan.size:
        return False, tab_n.irreducibles[int(orphan[0])]
    return True, None


def linear_character_orbits(group, sub, table=None):
    """Orbits of the subgroup's irreducible (= linear) characters under
    conjugation by the ambient group, as sorted index lists into its table."""
    if table is None:
        table = character_table(sub.as_group())
    index_of = {mu.key(): j for j, mu in enumerate(table.irreducibles)}
    gens = group.generating_set()
    orbits, seen = [], set()
    for start in range(table.count):
        if start in seen:
            continue
        orbit, queue = [start], [start]
        seen.add(start)
        while queue:
            cur = queue.pop()
            for g in gens:
                moved = conjugated_on_subgroup(table.irreducibles[cur], sub, g)
                j = index_of[moved.key()]
                if j not in seen:
                    seen.add(j)
                    orbit.append(j)
                    queue.append(j)
        orbits.append(sorted(orbit))
    return orbits


# -- the same two checks routed through inertia subgroups ---------------------
#
# These exist as an independent cross-check: the direct definitions above and
# the inertia formulation below must agree, and the test suite compares them.


def _inertia_irreducibles_over(group, sub, mu):
    inertia = inertia_subgroup(sub, mu)
    ig = inertia.as_group()
    tab_i = character_table(ig)
    positions = np.searchsorted(inertia.elements, sub.elements)
    inner = Subgroup(ig, positions)
    over = irr_over(inner, mu, table=tab_i)
    return tab_i, over


def is_unramified_over_by_inertia(group: FiniteGroup, sub: Subgroup) -> bool:
    """Equivalent test: every irreducible of the inertia group lying over a
    nontrivial linear character must itself be linear."""
    _require_abelian_normal(group, sub)
    tab_n = character_table(sub.as_group())
    triv = tab_n.trivial_index()
    for j, mu in enumerate(tab_n.irreducibles):
        if j == triv:
            continue
        tab_i, over = _inertia_irreducibles_over(group, sub, mu)
        if any(tab_i.irreducibles[i].degree != 1 for i in over):
            return False
    return True


def is_pseudo_unramified_over_by_inertia(group: FiniteGroup, sub: Subgroup) -> bool:
    """Equivalent test: some irreducible of the inertia group lying over each
    nontrivial linear character must be linear."""
    _require_abelian_normal(group, sub)
    tab_n = character_table(sub.as_group())
    triv = tab_n.trivial_index()
    for j, mu in enumerate(tab_n.irreducibles):
        if j == triv:
            continue
        tab_i, over = _inertia_irreducibles_over(group, sub, mu)
        if not any(tab_i.irreducibles[i].degree == 1 for i in over):
            return False
    return True


# -- fast-path structural rules ------------------------------------------------


def fast_path_flags(group: FiniteGroup, sub: Subgroup) -> set:
    """Cheap structural rules about unramifiedness over the subgroup.

    UNRAMIFIED-SUFFICIENT: the quotient is cyclic, which forces the full
    check to pass.  UNRAMIFIED-IMPOSSIBLE: a necessary condition fails (the
    subgroup is central in a nonabelian group, or [N,G] equals neither N nor
    the derived subgroup).  SKIP: in a nilpotent group only subgroups
    strictly containing the derived subgroup can carry an unramified level.
    """
    _require_abelian_normal(group, sub)
    flags = set()
    if quotient(group, sub).group.is_cyclic():
        flags.add(TAG_SUFFICIENT)
    if sub.is_central() and not group.is_abelian():
        flags.add(TAG_IMPOSSIBLE)
    else:
        ng = commutator_subgroup(group, sub.elements)
        if ng != sub and ng != derived_subgroup(group):
            flags.add(TAG_IMPOSSIBLE)
    if is_nilpotent(group):
        der = derived_subgroup(group)
        if not (sub.contains_all(der.elements) and der.order < sub.order):
            flags.add(TAG_SKIP)
    return flags


# -- chained decisions with certificates --------------------------------------


@dataclass(frozen=True)
class ChainLevel:
    """One accepted level of a totally-(pseudo-)unramified chain.

    ``subgroup_elements`` are element indices in the group at this level
    (the original group for level 0, successive quotients below).  For
    pseudo levels, ``linear_orbit_witnesses`` pairs each orbit representative
    of the subgroup's linear characters with a covering multiplicity-free
    irreducible, both as table row indices.
    """

    group_order: int
    subgroup_elements: tuple
    quotient_order: int
    tags: tuple
    linear_orbit_witnesses: tuple | None


@dataclass
class DecisionCertificate:
    verdict: bool
    chain: list
    counterexample: tuple | None
    prunes_applied: list
    pseudo: bool
    levels: tuple


def _level_check(group, sub, pseudo):
    """Full check at one level; (ok, counterexample, orbit witnesses)."""
    tab_g, tab_n, mult = _restriction_multiplicities(group, sub)
    els = tuple(int(x) for x in sub.elements)
    if not pseudo:
        bad = _violating_rows(tab_n, mult)
        if bad.size:
            return False, (f"chi{int(bad[0])}", els), None
        return True, None, None
    orphan = _orphan_columns(mult)
    if orphan.size:
        return False, (f"mu{int(orphan[0])}", els), None
    free = (mult <= 1).all(axis=1)
    witnesses = []
    for orbit in linear_character_orbits(group, sub, tab_n):
        rep = orbit[0]
        row = int(np.nonzero(free & (mult[:, rep] > 0))[0][0])
        witnesses.append((rep, row))
    return True, None, tuple(witnesses)


def _iter_candidates(group, pseudo, prunes):
    """Candidate subgroups in canonical descending order.

    The unramified search may prune: in a nilpotent group only maximal
    abelian normal subgroups strictly containing the derived subgroup can
    start a chain, and structurally impossible candidates are dropped.  The
    pseudo search never prunes; subgroups of a pseudo-unramified group need
    not inherit anything, so every candidate gets the full check.
    """
    subs = abelian_normal_subgroups(group)
    if pseudo:
        for s in subs:
            yield s, ()
        return
    nilp = is_nilpotent(group)
    der = derived_subgroup(group) if nilp else None
    maximal = []
    for s in subs:
        if nilp:
            # descending order: any strictly larger abelian normal subgroup
            # was already seen, so checking against collected maxima suffices
            if any(m.contains_all(s.elements) for m in maximal):
                prunes.append(TAG_MAXIMAL)
                continue
            maximal.append(s)
            if not (s.contains_all(der.elements) and der.order < s.order):
                prunes.append(TAG_SKIP)
                continue
        flags = fast_path_flags(group, s)
        if TAG_IMPOSSIBLE in flags:
            prunes.append(TAG_IMPOSSIBLE)
            continue
        if TAG_SUFFICIENT in flags:
            prunes.append(TAG_SUFFICIENT)
            yield s, (TAG_SUFFICIENT,)
        else:
            yield s, ()


def _chain_search(group, pseudo, memo, prunes, budget):
    key = group.table_key()
    hit = memo.get(key)
    if hit is not None:
        return hit
    if group.order == 1:
        memo[key] = (True, (), None)
        return memo[key]
    if budget < 0:
        raise InternalCheckError("chain search exceeded its depth budget")
    counterexample = None
    result = None
    for sub, tags in _iter_candidates(group, pseudo, prunes):
        if TAG_SUFFICIENT in tags:
            ok, bad, witnesses = True, None, None
        else:
            ok, bad, witnesses = _level_check(group, sub, pseudo)
        if not ok:
            if counterexample is None:
                counterexample = (bad[0], list(bad[1]))
            continue
        q = quotient(group, sub)
        deeper, tail, _ = _chain_search(q.group, pseudo, memo, prunes, budget - 1)
        if not deeper:
            continue
        level = ChainLevel(
            group_order=group.order,
            subgroup_elements=tuple(int(x) for x in sub.elements),
            quotient_order=q.group.order,
            tags=tags,
            linear_orbit_witnesses=witnesses,
        )
        result = (True, (level,) + tail, None)
        break
    if result is None:
        result = (False, (), counterexample)
    memo[key] = result
    return result


def _decide_totally(group, pseudo):
    prunes = []
    verdict, levels, counterexample = _chain_search(
        group, pseudo, {}, prunes, group.order.bit_length() - 1
    )
    cert = DecisionCertificate(
        verdict=verdict,
        chain=[list(level.subgroup_elements) for level in levels],
        counterexample=counterexample,
        prunes_applied=prunes,
        pseudo=pseudo,
        levels=levels,
    )
    return verdict, cert


def is_totally_unramified(group: FiniteGroup):
    """Search for a chain of abelian normal subgroups through successive
    quotients, unramified at every level; (verdict, certificate)."""
    return _decide_totally(group, pseudo=False)


def is_totally_pseudo_unramified(group: FiniteGroup):
    """As `is_totally_unramified` with the pseudo check at each level."""
    return _decide_totally(group, pseudo=True)


def replay_certificate(group: FiniteGroup, cert: DecisionCertificate) -> bool:
    """Re-verify a true certificate's chain level by level, with no shortcuts.

    Returns True when every level passes its full check and the chain of
    quotients ends at the trivial group.
    """
    if not cert.verdict:
        raise InputError("only a true verdict carries a replayable chain")
    cur = group
    for elements in cert.chain:
        sub = cur.subgroup(elements)
        check = is_pseudo_unramified_over if cert.pseudo else is_unramified_over
        ok, _ = check(cur, sub)
        if not ok:
            return False
        cur = quotient(cur, sub).group
    return cur.order == 1


def export_certificate(cert: DecisionCertificate) -> str:
    """Render a certificate as deterministic structured text."""
    kind = "pseudo-unramified" if cert.pseudo else "unramified"
    lines = [f"check: totally {kind}", f"verdict: {'true' if cert.verdict else 'false'}"]
    for depth, level in enumerate(cert.levels):
        els = ", ".join(str(x) for x in level.subgroup_elements)
        rules = ", ".join(level.tags) if level.tags else "full check"
        lines.append(
            f"level {depth}: group order {level.group_order}, "
            f"subgroup order {len(level.subgroup_elements)} {{{els}}}, "
            f"quotient order {level.quotient_order}, rules: {rules}"
        )
        if level.linear_orbit_witnesses is not None:
            for rep, row in level.linear_orbit_witnesses:
                lines.append(f"  orbit of mu{rep}: chi{row} restricts multiplicity-free")
    if cert.counterexample is not None:
        name, elements = cert.counterexample
        els = ", ".join(str(x) for x in elements)
        lines.append(f"counterexample: {name} over subgroup {{{els}}}")
    if cert.prunes_applied:
        lines.append("prunes: " + ", ".join(cert.prunes_applied))
    return "\n".join(lines) + "\n"


# -- completeness of a character ----------------------------------------------


def qpi_character(chi_pi, chi_b, chi_j, sub: Subgroup) -> ClassFunction:
    """The derived character on the quotient by the subgroup.

    Forms chi_pi + chi_b^2 + 2 chi_b chi_j + chi_b chi_pi chi_b, keeps the
    constituents that are trivial on the subgroup, and pushes the result down
    to the quotient group.  Requires chi_pi = chi_b + chi_j.
    """
    group = chi_pi.group
    if not (same_group(chi_b.group, group) and same_group(chi_j.group, group)):
        raise InputError("the three characters must live on one group")
    if chi_b + chi_j != chi_pi:
        raise InputError("need chi_pi = chi_b + chi_j")
    if not same_group(sub.parent, group):
        raise InputError("subgroup does not live in the characters' group")
    cross = chi_b * chi_j
    big = chi_pi + chi_b * chi_b + cross + cross + chi_b * chi_pi * chi_b
    tab = character_table(group)
    mults = decompose(big, tab)
    cc = group.conjugacy_classes()
    kernel_classes = np.unique(cc.class_of[sub.elements])
    kept = ClassFunction(group, [0] * cc.count)
    for i in np.nonzero(mults)[0]:
        chi = tab.irreducibles[int(i)]
        if all(chi.values[int(c)] == chi.values[0] for c in kernel_classes):
            kept = kept + chi * int(mults[int(i)])
    return deflate(kept, sub)


@dataclass(frozen=True)
class SplitLevel:
    """One accepted level of a completeness chain: the chosen subgroup, the
    split into covering part (b) and rest (j) as irreducible indices into the
    level group's character table, and the derived character passed down."""

    group_order: int
    subgroup_elements: tuple
    b_indices: tuple
    j_indices: tuple
    qpi: ClassFunction
    quotient_order: int


@dataclass
class CompletenessReport:
    verdict: bool
    levels: tuple


class _SplitContext:
    """Per-run memo state for the completeness search."""

    def __init__(self):
        self.memo = {}          # (table key, multiplicities) -> result
        self.proven = {}        # table key -> [(multiplicities, chain spec)]
        self.failed = {}        # table key -> [multiplicities array]
        self.level_data = {}    # (table key, subgroup key) -> level analysis


def _split_level_data(ctx, group, sub):
    key = (group.table_key(), sub.key())
    hit = ctx.level_data.get(key)
    if hit is None:
        _, tab_n, mult = _restriction_multiplicities(group, sub)
        triv = tab_n.trivial_index()
        orbits = linear_character_orbits(group, sub, tab_n)
        reps = [orbit[0] for orbit in orbits if triv not in orbit]
        hit = (triv, reps, mult)
        ctx.level_data[key] = hit
    return hit


def _exact_covers(rows, n_orbits):
    """All subsets of rows whose vectors sum to all-ones, depth first.

    Orbits are visited least-branching first; each cover holds exactly one
    row per visited orbit, so the enumeration never repeats a subset and
    bails out at once when some orbit has no candidate row.
    """
    items = sorted(rows.items())
    by_orbit = [[(i, vec) for i, vec in items if vec[o] == 1] for o in range(n_orbits)]
    order = sorted(range(n_orbits), key=lambda o: (len(by_orbit[o]), o))
    demand = [1] * n_orbits
    chosen = []

    def rec(pos):
        while pos < n_orbits and not demand[order[pos]]:
            pos += 1
        if pos == n_orbits:
            yield tuple(sorted(chosen))
            return
        for i, vec in by_orbit[order[pos]]:
            if all(vec[o] <= demand[o] for o in range(n_orbits)):
                for o in range(n_orbits):
                    demand[o] -= vec[o]
                chosen.append(i)
                yield from rec(pos + 1)
                chosen.pop()
                for o in range(n_orbits):
                    demand[o] += vec[o]

    yield from rec(0)


def _build_b_character(group, tab, b_indices):
    k = group.conjugacy_classes().count
    chi_b = ClassFunction(group, [0] * k)
    for i in b_indices:
        chi_b = chi_b + tab.irreducibles[int(i)]
    return chi_b


def _split_search(ctx, chi, budget):
    group = chi.group
    if group.order == 1:
        # no nontrivial abelian normal subgroup exists down here
        return False, ()
    tab = character_table(group)
    mults = decompose(chi, tab)
    tkey = group.table_key()
    key = (tkey, tuple(int(m) for m in mults))
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    if budget < 0:
        raise InternalCheckError("completeness recursion exceeded its depth budget")
    res = None
    for smaller, chain in ctx.proven.get(tkey, ()):
        # a complete subcharacter forces completeness of the whole character,
        # and its accepting chain lifts level by level
        if np.all(smaller <= mults):
            res = _replay_chain(ctx, chi, tab, mults, chain)
            break
    if res is None:
        for failed in ctx.failed.get(tkey, ()):
            # adding a subcharacter of a failed character cannot fix it
            if np.all(failed <= mults) and np.all(mults <= 2 * failed):
                res = (False, ())
                break
    if res is None:
        res = _search_covers(ctx, chi, tab, mults, budget)
        if res[0]:
            chain = tuple((lvl.subgroup_elements, lvl.b_indices) for lvl in res[1])
            ctx.proven.setdefault(tkey, []).append((mults.copy(), chain))
        else:
            ctx.failed.setdefault(tkey, []).append(mults.copy())
    ctx.memo[key] = res
    return res


def _search_covers(ctx, chi, tab, mults, budget):
    group = chi.group
    present = [int(i) for i in np.nonzero(mults)[0]]
    if not present:
        return False, ()
    for sub in abelian_normal_subgroups(group):
        triv, reps, mult = _split_level_data(ctx, group, sub)
        rows = {}
        for i in present:
            if mult[i, triv] != 0:
                continue
            vec = tuple(int(mult[i, rep]) for rep in reps)
            if any(v > 1 for v in vec):
                continue
            rows[i] = vec
        for b_indices in _exact_covers(rows, len(reps)):
            chi_b = _build_b_character(group, tab, b_indices)
            chi_j = chi - chi_b
            qchar = qpi_character(chi, chi_b, chi_j, sub)
            if sub.order == group.order:
                deeper, tail = True, ()
            else:
                deeper, tail = _split_search(ctx, qchar, budget - 1)
            if deeper:
                rest = mults.copy()
                for i in b_indices:
                    rest[i] -= 1
                level = SplitLevel(
                    group_order=group.order,
                    subgroup_elements=tuple(int(x) for x in sub.elements),
                    b_indices=tuple(int(i) for i in b_indices),
                    j_indices=tuple(int(i) for i in np.nonzero(rest)[0]),
                    qpi=qchar,
                    quotient_order=qchar.group.order,
                )
                return True, (level,) + tail
    return False, ()


def _replay_chain(ctx, chi, tab, mults, chain):
    """Rebuild the levels of a dominated character along a proven chain."""
    levels = []
    cur, cur_tab, cur_mults = chi, tab, mults
    for elements, b_indices in chain:
        group = cur.group
        sub = group.subgroup(list(elements))
        if any(cur_mults[i] < 1 for i in b_indices):
            raise InternalCheckError("lifted chain lost a covering constituent")
        chi_b = _build_b_character(group, cur_tab, b_indices)
        chi_j = cur - chi_b
        qchar = qpi_character(cur, chi_b, chi_j, sub)
        rest = cur_mults.copy()
        for i in b_indices:
            rest[i] -= 1
        levels.append(
            SplitLevel(
                group_order=group.order,
                subgroup_elements=tuple(elements),
                b_indices=tuple(b_indices),
                j_indices=tuple(int(i) for i in np.nonzero(rest)[0]),
                qpi=qchar,
                quotient_order=qchar.group.order,
            )
        )
        if len(elements) == group.order:
            return True, tuple(levels)
        cur = qchar
        cur_tab = character_table(cur.group)
        cur_mults = decompose(cur, cur_tab)
    raise InternalCheckError("lifted chain did not end at a full subgroup")


def is_complete(pi) -> CompletenessReport:
    """Decide completeness of a character (or of matrices via their trace).

    The decision happens at character level; a real representation has the
    same character as its complexification, so no field adjustment is needed.
    Searches nontrivial abelian normal subgroups N and splits chi = chi_b +
    chi_j such that chi_b restricts to exactly the nontrivial linear
    characters of N, each once; unless N is the whole group, the derived
    quotient character must in turn be complete.
    """
    if isinstance(pi, RepresentationMatrices):
        chi = pi.character()
    elif isinstance(pi, ClassFunction):
        chi = pi
    else:
        raise InputError("expected a ClassFunction or RepresentationMatrices")
    ctx = _SplitContext()
    verdict, levels = _split_search(ctx, chi, chi.group.order.bit_length() - 1)
    return CompletenessReport(verdict=verdict, levels=tuple(levels))
