"""Vectorized exact arithmetic on batches of cyclotomic integers.

Character values are algebraic integers, so on the power basis of Q(zeta_e)
they have int coefficient vectors. Batches of values become int64 matrices
(one row per value) and inner products become integer matrix products plus
one reduction against the basis-product tensor. Everything stays exact; the
Fraction-based Cyclotomic class is the fallback for non-integer coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cyclotomic import Cyclotomic, _pow_table, phi


def value_matrix(values, e: int):
    """Stack values as int64 coefficient rows at level e; None if fractional."""
    rows = np.zeros((len(values), phi(e)), dtype=np.int64)
    for i, v in enumerate(values):
        if isinstance(v, int):
            rows[i, 0] = v
            continue
        if isinstance(v, Fraction):
            if v.denominator != 1:
                return None
            rows[i, 0] = int(v)
            continue
        if e % v.m:
            return None
        coeffs = v._lift_coeffs(e) if v.m != e else v.coeffs
        for j, c in enumerate(coeffs):
            if isinstance(c, Fraction):
                return None
            rows[i, j] = c
    return rows


@lru_cache(maxsize=None)
def reduce_tensor(e: int) -> np.ndarray:
    """T[a, b, :] = coefficients of z^(a+b), so products reduce by one einsum."""
    d = phi(e)
    pows = _pow_table(e)
    t = np.zeros((d, d, d), dtype=np.int64)
    for a in range(d):
        for b in range(d):
            t[a, b] = pows[a + b]
    return t


@lru_cache(maxsize=None)
def conj_matrix(e: int) -> np.ndarray:
    """Row j = coefficients of conj(z^j); conjugate a batch with M @ conj_matrix."""
    d = phi(e)
    pows = _pow_table(e)
    c = np.zeros((d, d), dtype=np.int64)
    for j in range(d):
        c[j] = pows[(e - j) % e] if j else pows[0]
    return c


def weighted_dot(a_rows: np.ndarray, b_rows: np.ndarray, weights, e: int) -> np.ndarray:
    """Coefficient vector of sum_i w_i * a_i * b_i (no conjugation)."""
    w = np.asarray(weights, dtype=np.int64)
    pair = np.einsum("ia,ib->ab", a_rows * w[:, None], b_rows)
    return np.einsum("ab,abc->c", pair, reduce_tensor(e))


def gram(a_rows: np.ndarray, b_rows: np.ndarray, weights, e: int) -> np.ndarray:
    """G[r, s] = coefficients of sum_i w_i * a[r, i] * conj(b[s, i]).

    Here a_rows and b_rows are (num_functions, num_points, phi(e)) tensors.
    Returns an (num_a, num_b, phi(e)) int64 tensor.
    """
    w = np.asarray(weights, dtype=np.int64)
    bc = b_rows @ conj_matrix(e)
    pair = np.einsum("ria,sib->rsab", a_rows * w[None, :, None], bc)
    return np.einsum("rsab,abc->rsc", pair, reduce_tensor(e))


def rows_to_values(coeff_rows: np.ndarray, e: int, denom: int = 1):
    """Turn int64 coefficient rows back into Cyclotomic values (divided by denom)."""
    out = []
    for row in coeff_rows:
        if denom == 1:
            out.append(Cyclotomic(e, [int(c) for c in row]))
        else:
            out.append(Cyclotomic(e, [Fraction(int(c), denom) for c in row]))
    return out
