"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are stored as coefficient vectors of length phi(m) over Fraction, in
the power basis 1, zeta, ..., zeta^(phi(m)-1), reduced modulo the m-th
cyclotomic polynomial.  All operations are exact; nothing here touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def euler_phi(m: int) -> int:
    assert m >= 1
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def _poly_div_exact(num, den):
    """Divide integer polynomials exactly (den monic up to sign), num/den.

    Polynomials are lists of ints, constant term first.  Asserts the division
    is exact and returns the quotient.
    """
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    assert lead in (1, -1)
    for i in range(len(num) - 1, len(den) - 2, -1):
        c = num[i] * lead
        q[i - len(den) + 1] = c
        if c:
            for j, d in enumerate(den):
                num[i - len(den) + 1 + j] -= c * d
    assert all(c == 0 for c in num), "polynomial division not exact"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int):
    """Integer coefficients of Phi_m, constant term first."""
    assert m >= 1
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_vectors(m: int):
    """Reduced coefficient vectors of zeta_m^k for k = 0..m-1."""
    phi = euler_phi(m)
    phim = cyclotomic_polynomial(m)
    vectors = []
    # repeatedly multiply by zeta and reduce by Phi_m (monic)
    cur = [Fraction(0)] * phi
    cur[0] = Fraction(1)
    for _ in range(m):
        vectors.append(tuple(cur))
        nxt = [Fraction(0)] + cur[:-1]
        spill = cur[-1]
        if spill:
            for j in range(phi):
                nxt[j] -= spill * phim[j]
        cur = nxt
    return tuple(vectors)


class Cyclotomic:
    """An element of Q(zeta_m), immutable."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs):
        phi = euler_phi(conductor)
        coeffs = tuple(Fraction(c) for c in coeffs)
        assert len(coeffs) == phi, "coefficient vector has wrong length"
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(m, value):
        phi = euler_phi(m)
        v = [Fraction(0)] * phi
        v[0] = Fraction(value)
        return Cyclotomic(m, v)

    @staticmethod
    def zero(m):
        return Cyclotomic.from_rational(m, 0)

    @staticmethod
    def one(m):
        return Cyclotomic.from_rational(m, 1)

    @staticmethod
    def root_of_unity(m, k):
        """zeta_m^k."""
        return Cyclotomic(m, _power_vectors(m)[k % m])

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            assert other.conductor == self.conductor, "conductor mismatch"
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.conductor, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(
            self.conductor,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic(self.conductor, [a * q for a in self.coeffs])
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        assert other.conductor == self.conductor, "conductor mismatch"
        phi = len(self.coeffs)
        prod = [Fraction(0)] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        # reduce degrees >= phi via the power vectors
        powers = _power_vectors(self.conductor)
        out = list(prod[:phi])
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                vec = powers[k % self.conductor]
                for j in range(phi):
                    out[j] += c * vec[j]
        return Cyclotomic(self.conductor, out)

    __rmul__ = __mul__

    def conjugate(self):
        """Complex conjugation, zeta -> zeta^(m-1)."""
        m = self.conductor
        powers = _power_vectors(m)
        phi = len(self.coeffs)
        out = [Fraction(0)] * phi
        for j, a in enumerate(self.coeffs):
            if a:
                vec = powers[(m - j) % m]
                for i in range(phi):
                    out[i] += a * vec[i]
        return Cyclotomic(m, out)

    def lift(self, new_conductor):
        """Embed into Q(zeta_M) for a multiple M of the conductor."""
        m, big = self.conductor, new_conductor
        assert big % m == 0, "new conductor must be a multiple"
        if big == m:
            return self
        step = big // m
        powers = _power_vectors(big)
        phi = euler_phi(big)
        out = [Fraction(0)] * phi
        for j, a in enumerate(self.coeffs):
            if a:
                vec = powers[(j * step) % big]
                for i in range(phi):
                    out[i] += a * vec[i]
        return Cyclotomic(big, out)

    # -- predicates and conversions ----------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        assert self.is_rational(), "value is not rational"
        return self.coeffs[0]

    def is_integer(self):
        return self.is_rational() and self.coeffs[0].denominator == 1

    def integer_value(self) -> int:
        assert self.is_integer(), "value is not a rational integer"
        return int(self.coeffs[0])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.conductor != self.conductor:
            big = self.conductor * other.conductor // gcd(
                self.conductor, other.conductor)
            return self.lift(big).coeffs == other.lift(big).coeffs
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def sort_key(self):
        return self.coeffs

    def __str__(self):
        sym = "z%d" % self.conductor
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
                continue
            power = sym if j == 1 else "%s^%d" % (sym, j)
            if c == 1:
                term = power
            elif c == -1:
                term = "-" + power
            else:
                term = "%s*%s" % (c, power)
            terms.append(term)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return "Cyclotomic(%d, %s)" % (self.conductor, str(self))
