"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Values are stored on the power basis 1, z, ..., z^(phi(m)-1) where z = zeta_m
is the primitive m-th root of unity exp(2*pi*i/m) and phi is Euler's totient.
Coefficients are rational (int where possible, fractions.Fraction otherwise),
so all arithmetic is exact. Mixed-field operations lift both operands to the
lcm of their levels.

The power basis keeps reduction tables small and makes the frequent
all-integer case (character values) a plain integer convolution.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

__all__ = ["Cyclotomic", "Rational", "zeta", "phi", "cyclotomic_poly"]


@lru_cache(maxsize=None)
def phi(m: int) -> int:
    if m < 1:
        raise ValueError(f"level must be positive, got {m}")
    count = 0
    for k in range(1, m + 1):
        if math.gcd(k, m) == 1:
            count += 1
    return count


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials (ascending coefficients),
    # denominator monic. Remainder must come out zero.
    num = list(num)
    dd = len(den) - 1
    qd = len(num) - 1 - dd
    quot = [0] * (qd + 1)
    for k in range(qd, -1, -1):
        c = num[k + dd]
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, ascending, monic."""
    if m == 1:
        return (-1, 1)
    poly = [0] * (m + 1)
    poly[0] = -1
    poly[m] = 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_div_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _pow_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row k is z^k reduced mod the m-th cyclotomic polynomial."""
    cp = cyclotomic_poly(m)
    deg = len(cp) - 1
    hi = max(m - 1, 2 * deg - 2, 0)
    rows = []
    row = [0] * deg
    row[0] = 1
    rows.append(tuple(row))
    for _ in range(hi):
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            for j in range(deg):
                row[j] -= top * cp[j]
        rows.append(tuple(row))
    return tuple(rows)


def _norm_coeff(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c._numerator if c._denominator == 1 else c
    if isinstance(c, int):
        return int(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class Cyclotomic:
    """An element of Q(zeta_m) with exact rational coordinates."""

    __slots__ = ("m", "coeffs", "_canon")

    def __init__(self, m: int, coeffs):
        d = phi(m)
        coeffs = tuple(_norm_coeff(c) for c in coeffs)
        if len(coeffs) != d:
            raise ValueError(
                f"need {d} coefficients for level {m}, got {len(coeffs)}"
            )
        self.m = m
        self.coeffs = coeffs
        self._canon = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, q, m: int = 1) -> "Cyclotomic":
        coeffs = [0] * phi(m)
        coeffs[0] = _norm_coeff(Fraction(q))
        return cls(m, coeffs)

    @classmethod
    def zero(cls, m: int = 1) -> "Cyclotomic":
        return cls(m, [0] * phi(m))

    @classmethod
    def one(cls, m: int = 1) -> "Cyclotomic":
        return cls.from_rational(1, m)

    # -- field structure ----------------------------------------------

    def _lift_coeffs(self, big: int) -> tuple:
        """Coordinates of self on the power basis at level `big` (m | big)."""
        if big == self.m:
            return self.coeffs
        step = big // self.m
        pows = _pow_table(big)
        out = [0] * phi(big)
        for j, c in enumerate(self.coeffs):
            if c:
                row = pows[j * step]
                for t, r in enumerate(row):
                    if r:
                        out[t] += c * r
        return tuple(_norm_coeff(x) for x in out)

    def lift(self, big: int) -> "Cyclotomic":
        if big % self.m:
            raise ValueError(f"cannot lift level {self.m} into level {big}")
        return Cyclotomic(big, self._lift_coeffs(big))

    def _pair(self, other):
        if isinstance(other, Cyclotomic):
            if other.m == self.m:
                return self.coeffs, other.coeffs, self.m
            big = self.m * other.m // math.gcd(self.m, other.m)
            return self._lift_coeffs(big), other._lift_coeffs(big), big
        if isinstance(other, (int, Fraction)):
            oc = [0] * len(self.coeffs)
            oc[0] = _norm_coeff(Fraction(other))
            return self.coeffs, tuple(oc), self.m
        return None

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b, m = pair
        return Cyclotomic(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b, m = pair
        return Cyclotomic(m, [x - y for x, y in zip(a, b)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Cyclotomic(self.m, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _norm_coeff(Fraction(other))
            return Cyclotomic(self.m, [c * q for c in self.coeffs])
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b, m = pair
        d = len(a)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:d])
        pows = _pow_table(m)
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = pows[k]
                for t, r in enumerate(row):
                    if r:
                        out[t] += c * r
        return Cyclotomic(m, out)

    __rmul__ = __mul__

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        cp = [Fraction(c) for c in cyclotomic_poly(self.m)]
        # Extended Euclid over Q[x] on (self, cyclotomic poly).
        r0, r1 = cp, [Fraction(c) for c in self.coeffs]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                lead = r1[0]
                inv_c = [c / lead for c in s1]
                break
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, [a - b for a, b in _zip_pad(s0, _poly_mul_frac(q, s1))]
        d = len(self.coeffs)
        out = [Fraction(0)] * d
        pows = _pow_table(self.m)
        for k, c in enumerate(inv_c):
            if c:
                if k < d:
                    out[k] += c
                else:
                    for t, r in enumerate(pows[k]):
                        if r:
                            out[t] += c * r
        return Cyclotomic(self.m, out)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.one(self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- galois action -------------------------------------------------

    def galois_apply(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta_m -> zeta_m^k (k coprime to m)."""
        m = self.m
        k %= m
        if m == 1:
            return self
        if math.gcd(k, m) != 1:
            raise ValueError(f"{k} is not coprime to {m}")
        pows = _pow_table(m)
        out = [0] * len(self.coeffs)
        for j, c in enumerate(self.coeffs):
            if c:
                row = pows[(j * k) % m]
                for t, r in enumerate(row):
                    if r:
                        out[t] += c * r
        return Cyclotomic(m, out)

    def conjugate(self) -> "Cyclotomic":
        if self.m <= 2:
            return self
        return self.galois_apply(self.m - 1)

    # -- predicates and extraction --------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        """Return the value as a Fraction if it is rational, else None."""
        if any(self.coeffs[1:]):
            return None
        return Fraction(self.coeffs[0])

    def is_rational_integer(self):
        """Return the value as an int if it is a rational integer, else None."""
        q = self.is_rational()
        if q is None or q.denominator != 1:
            return None
        return int(q)

    def is_real(self) -> bool:
        return self.conjugate() == self

    def __complex__(self) -> complex:
        total = 0j
        for j, c in enumerate(self.coeffs):
            if c:
                ang = 2.0 * math.pi * j / self.m
                total += float(c) * complex(math.cos(ang), math.sin(ang))
        return total

    # -- canonical form, equality, hashing ------------------------------

    def _reduced_key(self):
        if self._canon is None:
            self._canon = _minimal_form(self.m, self.coeffs)
        return self._canon

    def reduced(self) -> "Cyclotomic":
        """Equal value at the smallest level m' | m that contains it."""
        m2, coeffs2 = self._reduced_key()
        return Cyclotomic(m2, coeffs2)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            q = self.is_rational()
            return q is not None and q == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.m == other.m:
            return self.coeffs == other.coeffs
        a, b, _ = self._pair(other)
        return a == b

    def __hash__(self):
        return hash(self._reduced_key())

    def __bool__(self):
        return not self.is_zero()

    # -- presentation ----------------------------------------------------

    def __repr__(self):
        return f"Cyclotomic({self.m}, {list(self.coeffs)!r})"

    def __str__(self):
        q = self.is_rational()
        if q is not None:
            return str(_norm_coeff(q))
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                var = f"z{self.m}" if j == 1 else f"z{self.m}^{j}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [str(Fraction(c)) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        return cls(int(data["m"]), [Fraction(s) for s in data["coeffs"]])


def zeta(m: int, k: int = 1) -> Cyclotomic:
    """The root of unity zeta_m^k."""
    k %= m
    d = phi(m)
    if k < d:
        coeffs = [0] * d
        coeffs[k] = 1
        return Cyclotomic(m, coeffs)
    return Cyclotomic(m, list(_pow_table(m)[k]))


# -- helpers for the inverse and for canonical reduction ------------------


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod_frac(num, den):
    num = list(num)
    while den and den[-1] == 0:
        den.pop()
    dd = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dd:
        return [Fraction(0)], num
    quot = [Fraction(0)] * (len(num) - dd)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dd] / lead
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    rem = num[:dd] if dd else [Fraction(0)]
    return quot, rem


def _minimal_form(m: int, coeffs: tuple) -> tuple:
    """Smallest divisor level containing the value, plus coordinates there."""
    if not any(coeffs[1:]):
        return (1, (_norm_coeff(Fraction(coeffs[0])),))
    value = Cyclotomic(m, coeffs)
    for d in sorted(k for k in range(1, m) if m % k == 0):
        # Invariance under Gal(Q(zeta_m)/Q(zeta_d)) puts the value in Q(zeta_d).
        fixed = all(
            value.galois_apply(k) == value
            for k in range(1, m)
            if (k - 1) % d == 0 and math.gcd(k, m) == 1
        )
        if fixed:
            return (d, _rewrite_at(value, d))
    return (m, coeffs)


def _rewrite_at(value: Cyclotomic, d: int) -> tuple:
    """Coordinates of value on the level-d power basis (value known to fit)."""
    m = value.m
    step = m // d
    pows = _pow_table(m)
    dim, small = phi(m), phi(d)
    cols = [list(pows[i * step]) for i in range(small)]
    # Solve cols . a = coeffs by Gaussian elimination over Q.
    aug = [[Fraction(cols[j][i]) for j in range(small)] + [Fraction(value.coeffs[i])]
           for i in range(dim)]
    piv_rows = []
    r = 0
    for c in range(small):
        sel = next((i for i in range(r, dim) if aug[i][c] != 0), None)
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(dim):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_rows.append((r, c))
        r += 1
    sol = [Fraction(0)] * small
    for row, col in piv_rows:
        sol[col] = aug[row][-1]
    check = Cyclotomic(d, sol).lift(m)
    if check.coeffs != value.coeffs:
        raise ArithmeticError("canonical reduction failed to verify")
    return tuple(_norm_coeff(c) for c in sol)
