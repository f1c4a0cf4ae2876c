"""Free-group words, Schreier kernel generators, and folding.

`kernel_generators` produces a free basis for the kernel of a map from a free
group onto a finite abelian group (given by exponent images in a product of
cyclic factors). The basis comes from the shortlex positive Schreier
transversal and is then rewritten, by right Nielsen moves, into positive
words: any generator ending in an inverse letter is right-multiplied by the
shortest other generator starting with the matching positive letter, repeated
in list order until every word is positive.

`fold_rank_index` independently recovers (rank, index) of the subgroup
generated by a word list by Stallings folding, and is used to cross-check the
kernel bases.
"""

from __future__ import annotations

import math
from itertools import product

from .errors import InputError, InternalCheckError


def _reduce(letters):
    out = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


class FreeWord:
    """A freely reduced word; letters are (generator index, +1 or -1)."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = _reduce(tuple((int(g), int(s)) for g, s in letters))
        if any(s not in (1, -1) for _, s in self.letters):
            raise InputError("letter signs must be +1 or -1")

    @staticmethod
    def generator(i: int) -> "FreeWord":
        return FreeWord(((i, 1),))

    @staticmethod
    def identity() -> "FreeWord":
        return FreeWord()

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        out = FreeWord()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def is_positive(self) -> bool:
        return all(s == 1 for _, s in self.letters)

    def exponent_image(self, images, moduli):
        """Image in the abelian group: componentwise exponent sums mod moduli."""
        acc = [0] * len(moduli)
        for g, s in self.letters:
            for c, v in enumerate(images[g]):
                acc[c] = (acc[c] + s * v) % moduli[c]
        return tuple(acc)

    def format(self, names) -> str:
        if not self.letters:
            return "1"
        return "".join(names[g] + ("" if s == 1 else "'") for g, s in self.letters)

    def __eq__(self, other):
        return isinstance(other, FreeWord) and other.letters == self.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"FreeWord({self.format([f'g{i}' for i in range(26)])!r})"


def _abelian_closure(images, moduli):
    """All sums of the image vectors (the subgroup they generate)."""
    zero = (0,) * len(moduli)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for img in images:
                w = tuple((a + b) % m for a, b, m in zip(v, img, moduli))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def kernel_generators(images, moduli) -> list[FreeWord]:
    """Positive free basis for the kernel of F_n -> prod Z_moduli, gen i -> images[i].

    Raises InputError if the images do not generate the whole product group.
    The result has exactly |A|(n-1)+1 words, every word positive.
    """
    moduli = tuple(int(m) for m in moduli)
    if any(m < 1 for m in moduli):
        raise InputError("moduli must be positive")
    n = len(images)
    if n == 0:
        raise InputError("need at least one free generator")
    if any(len(img) != len(moduli) for img in images):
        raise InputError("each image needs one exponent per modulus")
    images = [tuple(int(v) % m for v, m in zip(img, moduli)) for img in images]
    size = math.prod(moduli)
    reached = _abelian_closure(images, moduli)
    if len(reached) != size:
        raise InputError(
            f"images generate a subgroup of order {len(reached)}, "
            f"not the full group of order {size}"
        )

    # shortlex-minimal positive transversal; BFS by length gives shortlex and
    # first-reached words are automatically prefix closed
    zero = (0,) * len(moduli)
    transversal = {zero: FreeWord()}
    order = [zero]
    frontier = [zero]
    while frontier:
        nxt = []
        for coset in frontier:
            base = transversal[coset]
            for i in range(n):
                tgt = tuple(
                    (a + b) % m for a, b, m in zip(coset, images[i], moduli)
                )
                if tgt not in transversal:
                    transversal[tgt] = base * FreeWord.generator(i)
                    order.append(tgt)
                    nxt.append(tgt)
        frontier = nxt
    if len(order) != size:
        raise InternalCheckError("transversal misses cosets despite surjectivity")

    gens: list[FreeWord] = []
    for coset in order:
        t_word = transversal[coset]
        for i in range(n):
            tgt = tuple((a + b) % m for a, b, m in zip(coset, images[i], moduli))
            w = t_word * FreeWord.generator(i) * transversal[tgt].inverse()
            if not w.is_identity():
                gens.append(w)
    expected = size * (n - 1) + 1
    if len(gens) != expected:
        raise InternalCheckError(
            f"Schreier basis has {len(gens)} words, expected {expected}"
        )

    # distance from each coset to zero along positive generator steps,
    # by BFS from zero over reversed edges
    dist = {zero: 0}
    frontier = [zero]
    while frontier:
        nxt = []
        for tgt in frontier:
            for img in images:
                src = tuple((a - b) % m for a, b, m in zip(tgt, img, moduli))
                if src not in dist:
                    dist[src] = dist[tgt] + 1
                    nxt.append(src)
        frontier = nxt
    rep_coset = {transversal[c].letters: c for c in transversal}
    return _positive_cleanup(gens, rep_coset, dist)


def _suffix_state(w: FreeWord, rep_coset, dist):
    """(-1, split) for a positive word, else (distance of the suffix coset, split).

    Maintained invariant: every word is a positive prefix followed by the
    inverse of a full transversal word, so the suffix always scores.
    """
    letters = w.letters
    split = len(letters)
    while split > 0 and letters[split - 1][1] == -1:
        split -= 1
    if split == len(letters):
        return -1, split
    suffix = tuple((g, 1) for g, _ in reversed(letters[split:]))
    coset = rep_coset.get(suffix)
    if coset is None:
        raise InternalCheckError("word suffix left the transversal")
    return dist[coset], split


def _positive_cleanup(words, rep_coset, dist):
    """Right Nielsen moves: multiply by the other word that continues the
    suffix's transversal word, preferring multipliers that land positive or
    closest to the zero coset, then shortest, then earliest."""
    out = list(words)
    for idx in range(len(out)):
        guard = 0
        while not out[idx].is_positive():
            _, split = _suffix_state(out[idx], rep_coset, dist)
            rep_letters = tuple((g, 1) for g, _ in reversed(out[idx].letters[split:]))
            best = None
            for j, w in enumerate(out):
                if j == idx or len(w.letters) < len(rep_letters):
                    continue
                if w.letters[: len(rep_letters)] != rep_letters:
                    continue
                score, _ = _suffix_state(w, rep_coset, dist)
                key = (score, len(w.letters), j)
                if best is None or key < best[0]:
                    best = (key, w)
            if best is None:
                raise InternalCheckError(
                    "no word available to clear an inverted suffix"
                )
            nxt = out[idx] * best[1]
            if nxt.is_identity():
                raise InternalCheckError("cleanup collapsed a basis word")
            out[idx] = nxt
            guard += 1
            if guard > 10_000:
                raise InternalCheckError("positive cleanup did not terminate")
    return out


# -- Stallings folding ---------------------------------------------------------


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def fold_rank_index(words, n_gens: int):
    """(rank, index) of the subgroup of F_{n_gens} generated by the words.

    Folds the bouquet of word loops at a base vertex, trims off-base hair,
    and reads rank = edges - vertices + 1. The index is the vertex count when
    the folded graph is a full cover, else math.inf.
    """
    if n_gens < 0:
        raise InputError("the ambient free group needs a nonnegative rank")
    edges = []
    next_v = 1
    for w in words:
        if w.is_identity():
            continue
        prev = 0
        letters = w.letters
        for i, (g, s) in enumerate(letters):
            if g >= n_gens:
                raise InputError(f"word uses generator {g} outside the ambient rank")
            cur = 0 if i == len(letters) - 1 else next_v
            if i != len(letters) - 1:
                next_v += 1
            if s == 1:
                edges.append((prev, cur, g))
            else:
                edges.append((cur, prev, g))
            prev = cur

    uf = _UnionFind(next_v)
    while True:
        seen_out: dict[tuple[int, int], int] = {}
        seen_in: dict[tuple[int, int], int] = {}
        merged = False
        for u, v, g in edges:
            ru, rv = uf.find(u), uf.find(v)
            prior = seen_out.get((ru, g))
            if prior is not None and uf.find(prior) != rv:
                uf.union(prior, rv)
                merged = True
                break
            seen_out[(ru, g)] = rv
            prior = seen_in.get((rv, g))
            if prior is not None and uf.find(prior) != ru:
                uf.union(prior, ru)
                merged = True
                break
            seen_in[(rv, g)] = ru
        if not merged:
            break

    base = uf.find(0)
    edge_set = {(uf.find(u), uf.find(v), g) for u, v, g in edges}
    verts = {base} | {u for u, _, _ in edge_set} | {v for _, v, _ in edge_set}

    # trim degree-1 hair away from the base vertex
    while True:
        deg: dict[int, int] = {v: 0 for v in verts}
        for u, v, _ in edge_set:
            deg[u] += 1
            deg[v] += 1
        hair = {v for v in verts if v != base and deg[v] <= 1}
        if not hair:
            break
        verts -= hair
        edge_set = {
            (u, v, g) for u, v, g in edge_set if u not in hair and v not in hair
        }

    rank = len(edge_set) - len(verts) + 1
    out_deg: dict[tuple[int, int], int] = {}
    in_deg: dict[tuple[int, int], int] = {}
    for u, v, g in edge_set:
        out_deg[(u, g)] = out_deg.get((u, g), 0) + 1
        in_deg[(v, g)] = in_deg.get((v, g), 0) + 1
    complete = all(
        out_deg.get((v, g), 0) == 1 and in_deg.get((v, g), 0) == 1
        for v in verts
        for g in range(n_gens)
    )
    index = len(verts) if complete else math.inf
    return rank, index


def all_positive_words(n_gens: int, max_len: int):
    """Positive words of length 1..max_len in shortlex order (testing helper)."""
    out = []
    for length in range(1, max_len + 1):
        for combo in product(range(n_gens), repeat=length):
            out.append(FreeWord(tuple((g, 1) for g in combo)))
    return out
