"""Free words, Schreier kernel bases, and the folding cross-check."""

import math
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupinv.errors import InputError
from groupinv.freegroup import (
    FreeWord,
    all_positive_words,
    fold_rank_index,
    kernel_generators,
)


def word(s, names="abc"):
    letters = []
    i = 0
    while i < len(s):
        g = names.index(s[i])
        if i + 1 < len(s) and s[i + 1] == "'":
            letters.append((g, -1))
            i += 2
        else:
            letters.append((g, 1))
            i += 1
    return FreeWord(letters)


def test_free_reduction():
    assert word("ab'ba").letters == ((0, 1), (0, 1))
    assert (word("ab") * word("b'a'")).is_identity()
    w = word("abc")
    assert (w * w.inverse()).is_identity()
    assert w.inverse().format("abc") == "c'b'a'"


def test_word_powers():
    a = FreeWord.generator(0)
    assert (a ** 3).format("abc") == "aaa"
    assert (a ** -2).format("abc") == "a'a'"
    assert (a ** 0).is_identity()


def test_exponent_image():
    w = word("abba'")
    assert w.exponent_image([(1, 0), (0, 1), (5, 5)], (7, 3)) == (0, 2)


def test_kernel_of_three_letters_onto_cyclic_three():
    # generators map to 0, 1, 2 in Z/3; the positive basis is frozen
    gens = kernel_generators([(0,), (1,), (2,)], (3,))
    assert [g.format("abc") for g in gens] == [
        "a",
        "bac",
        "bbb",
        "bc",
        "cab",
        "cb",
        "ccc",
    ]
    for g in gens:
        assert g.is_positive()
        assert g.exponent_image([(0,), (1,), (2,)], (3,)) == (0,)


def test_kernel_counts_and_membership():
    images = [(1, 0), (0, 1), (1, 1)]
    moduli = (2, 2)
    gens = kernel_generators(images, moduli)
    assert len(gens) == 4 * 2 + 1
    for g in gens:
        assert g.is_positive()
        assert g.exponent_image(images, moduli) == (0, 0)


def test_kernel_single_generator():
    gens = kernel_generators([(1,)], (5,))
    assert [g.format("a") for g in gens] == ["aaaaa"]


def test_kernel_trivial_target():
    gens = kernel_generators([(0,), (0,)], (1,))
    assert [g.format("ab") for g in gens] == ["a", "b"]


def test_kernel_rejects_non_surjective():
    with pytest.raises(InputError) as exc:
        kernel_generators([(2,)], (4,))
    assert "order 2" in str(exc.value)


def test_kernel_rejects_bad_shapes():
    with pytest.raises(InputError):
        kernel_generators([(1, 0)], (3,))
    with pytest.raises(InputError):
        kernel_generators([], (3,))
    with pytest.raises(InputError):
        kernel_generators([(0,)], (0,))


# -- folding --------------------------------------------------------------------


def test_fold_empty_is_trivial_of_infinite_index():
    assert fold_rank_index([], 2) == (0, math.inf)


def test_fold_whole_group():
    gens = [FreeWord.generator(0), FreeWord.generator(1)]
    assert fold_rank_index(gens, 2) == (2, 1)


def test_fold_cyclic_powers():
    a = FreeWord.generator(0)
    assert fold_rank_index([a ** 2], 1) == (1, 2)
    assert fold_rank_index([a ** 5], 1) == (1, 5)
    # adding a redundant element keeps the subgroup
    assert fold_rank_index([a ** 2, a ** 4], 1) == (1, 2)


def test_fold_commutator_subgroup_basis_has_infinite_index():
    a, b = FreeWord.generator(0), FreeWord.generator(1)
    comm = a.inverse() * b.inverse() * a * b
    rank, index = fold_rank_index([comm], 2)
    assert rank == 1
    assert index == math.inf


def test_fold_agrees_with_kernel_construction():
    images = [(0,), (1,), (2,)]
    gens = kernel_generators(images, (3,))
    assert fold_rank_index(gens, 3) == (7, 3)


def _random_surjective_case(seed):
    import random

    rng = random.Random(seed)
    while True:
        n = rng.choice([1, 2, 3])
        moduli = tuple(rng.choice([2, 3, 4]) for _ in range(rng.choice([1, 2])))
        images = [tuple(rng.randrange(m) for m in moduli) for _ in range(n)]
        try:
            gens = kernel_generators(images, moduli)
        except InputError:
            continue
        return images, moduli, n, gens


@pytest.mark.parametrize("seed", range(10))
def test_random_kernels_fold_to_expected_rank_and_index(seed):
    images, moduli, n, gens = _random_surjective_case(seed)
    size = math.prod(moduli)
    assert len(gens) == size * (n - 1) + 1
    assert all(g.is_positive() for g in gens)
    assert all(g.exponent_image(images, moduli) == (0,) * len(moduli) for g in gens)
    assert fold_rank_index(gens, n) == (len(gens), size)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_kernel_membership_is_exactly_the_zero_image(data):
    # every short positive word with zero image must fold into the subgroup
    images = [(0,), (1,), (2,)]
    moduli = (3,)
    gens = kernel_generators(images, moduli)
    length = data.draw(st.integers(min_value=1, max_value=4))
    combo = data.draw(
        st.tuples(*[st.integers(min_value=0, max_value=2) for _ in range(length)])
    )
    w = FreeWord(tuple((g, 1) for g in combo))
    in_kernel = w.exponent_image(images, moduli) == (0,)
    rank0, index0 = fold_rank_index(gens, 3)
    rank1, index1 = fold_rank_index(list(gens) + [w], 3)
    if in_kernel:
        assert (rank1, index1) == (rank0, index0)
    else:
        assert (rank1, index1) != (rank0, index0)


def test_positive_word_enumeration_helper():
    words = all_positive_words(2, 2)
    assert [w.format("ab") for w in words] == ["a", "b", "aa", "ab", "ba", "bb"]
