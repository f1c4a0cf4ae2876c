"""Exact cyclotomic arithmetic: frozen identities, field axioms, round trips."""

from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from groupinv.cyclotomic import Cyclotomic, phi, cyclotomic_poly, zeta


def approx(value):
    return complex(value)


class TestFrozenIdentities:
    def test_i_squared(self):
        assert zeta(4) ** 2 == -1

    def test_third_root_sum(self):
        assert zeta(3) ** 2 + zeta(3) + 1 == 0

    def test_sixth_vs_third(self):
        # zeta_6 = -zeta_3^2, an equality across levels
        assert zeta(6) == -(zeta(3) ** 2)

    def test_sqrt3(self):
        root3 = zeta(12) + zeta(12, 11)
        assert root3 ** 2 == 3

    def test_sqrt5(self):
        s = zeta(5) + zeta(5, 4)
        assert (2 * s + 1) ** 2 == 5

    def test_power_wraps(self):
        assert zeta(8) ** 8 == 1
        assert zeta(8) ** 9 == zeta(8)

    def test_phi_small_values(self):
        assert [phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]

    def test_cyclotomic_poly_samples(self):
        assert cyclotomic_poly(1) == (-1, 1)
        assert cyclotomic_poly(2) == (1, 1)
        assert cyclotomic_poly(4) == (1, 0, 1)
        assert cyclotomic_poly(6) == (1, -1, 1)
        assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


class TestPredicates:
    def test_rational_detection(self):
        assert (zeta(3) + zeta(3, 2)).is_rational() == Fraction(-1)
        assert zeta(5).is_rational() is None

    def test_rational_integer(self):
        assert (zeta(6) * zeta(6, 5)).is_rational_integer() == 1
        half = Cyclotomic.from_rational(Fraction(1, 2))
        assert half.is_rational_integer() is None
        assert half.is_rational() == Fraction(1, 2)

    def test_is_real(self):
        assert (zeta(7) + zeta(7, 6)).is_real()
        assert not zeta(7).is_real()
        assert Cyclotomic.from_rational(3).is_real()

    def test_conjugate_frozen(self):
        assert zeta(8).conjugate() == zeta(8, 7)
        assert zeta(4).conjugate() == -zeta(4)


class TestInverse:
    def test_inverse_of_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            Cyclotomic.zero(5).inverse()

    def test_rational_inverse(self):
        x = Cyclotomic.from_rational(Fraction(-3, 7), 8)
        assert x.inverse() == Fraction(-7, 3)

    def test_root_inverse(self):
        assert zeta(9).inverse() == zeta(9, 8)

    def test_division(self):
        a = 1 + zeta(5)
        assert (a / a) == 1


class TestGalois:
    def test_apply_matches_power(self):
        assert zeta(7).galois_apply(3) == zeta(7, 3)

    def test_composition(self):
        x = 2 + zeta(15) - 3 * zeta(15, 4)
        assert x.galois_apply(2).galois_apply(4) == x.galois_apply(8)

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError):
            zeta(6).galois_apply(3)


class TestCanonicalization:
    def test_cross_level_equality_and_hash(self):
        a = zeta(12) ** 3
        b = zeta(4)
        assert a == b
        assert hash(a) == hash(b)
        assert {a: "x"}[b] == "x"

    def test_reduced_level(self):
        assert (zeta(12) ** 3).reduced().m == 4
        assert (zeta(8) * zeta(8, 7)).reduced().m == 1

    def test_lift_round_trip(self):
        x = 1 - 2 * zeta(9, 2)
        assert x.lift(18) == x
        assert x.lift(18).reduced() == x


class TestSerialization:
    def test_round_trip(self):
        x = Cyclotomic(5, [Fraction(1, 2), 0, 0, Fraction(-2, 3)])
        data = x.to_json()
        assert data["m"] == 5
        assert data["coeffs"][0] == "1/2"
        assert Cyclotomic.from_json(data) == x

    def test_str_smoke(self):
        assert str(Cyclotomic.from_rational(Fraction(1, 2))) == "1/2"
        assert "z8" in str(zeta(8) - 1)


small_levels = st.integers(min_value=1, max_value=24)
small_coeff = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def cyclo_values(draw):
    m = draw(small_levels)
    coeffs = draw(st.lists(small_coeff, min_size=phi(m), max_size=phi(m)))
    return Cyclotomic(m, coeffs)


@settings(max_examples=80, deadline=None)
@given(cyclo_values(), cyclo_values(), cyclo_values())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + Cyclotomic.zero(b.m) == a
    assert a * Cyclotomic.one(b.m) == a


@settings(max_examples=80, deadline=None)
@given(cyclo_values())
def test_inverse_cancels(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == 1


@settings(max_examples=80, deadline=None)
@given(cyclo_values())
def test_conjugate_involutive(a):
    assert a.conjugate().conjugate() == a


@settings(max_examples=60, deadline=None)
@given(cyclo_values(), cyclo_values())
def test_conjugate_multiplicative(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@settings(max_examples=60, deadline=None)
@given(cyclo_values())
def test_reduced_preserves_value(a):
    r = a.reduced()
    assert r == a
    assert a.m % r.m == 0
    assert hash(r) == hash(a)


@settings(max_examples=60, deadline=None)
@given(cyclo_values(), cyclo_values())
def test_numeric_embedding_consistent(a, b):
    # float shadow of the exact arithmetic; loose tolerance, sanity only
    assert cmath.isclose(
        complex(a * b), complex(a) * complex(b), rel_tol=1e-9, abs_tol=1e-9
    )
    assert cmath.isclose(
        complex(a + b), complex(a) + complex(b), rel_tol=1e-9, abs_tol=1e-9
    )


@settings(max_examples=60, deadline=None)
@given(cyclo_values())
def test_serialization_round_trip(a):
    assert Cyclotomic.from_json(a.to_json()) == a
