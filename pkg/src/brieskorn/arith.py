"""Exact scalar arithmetic: Hirzebruch-Jung continued fractions and
cyclotomic fields.

Rationals are ``fractions.Fraction`` throughout the package (always in
lowest terms, positive denominator, arbitrary precision).

A ``Cyclotomic`` is an element of Q(zeta_p), p an odd prime, stored as the
canonical residue modulo the p-th cyclotomic polynomial
Phi_p = 1 + x + ... + x^(p-1): a coefficient vector over the basis
1, zeta, ..., zeta^(p-2).  Two elements are equal iff their coefficient
vectors are equal, so equality, hashing and the Galois action are exact.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple, Union

Scalar = Union[int, Fraction]


def is_prime(n: int) -> bool:
    """Trial-division primality test (inputs here are tiny)."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Hirzebruch-Jung continued fractions
# ---------------------------------------------------------------------------

def hj_evaluate(terms: Sequence[int]) -> Fraction:
    """Evaluate t1 - 1/(t2 - 1/(... - 1/tm)) exactly."""
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[-1])
    for t in reversed(terms[:-1]):
        if value == 0:
            raise ZeroDivisionError("zero convergent in continued fraction")
        value = t - 1 / value
    return value


@dataclass(frozen=True)
class HJExpansion:
    """Continued-fraction expansion a/b = [t1, ..., tm] with every ti <= -2.

    The convention is a > 0, -a < b < 0, so that a/b < -1 and the
    all-terms-<=-2 expansion exists and is unique.
    """

    numerator: int
    denominator: int
    terms: Tuple[int, ...]

    def __post_init__(self):
        if any(t > -2 for t in self.terms):
            raise ValueError(f"terms must all be <= -2, got {self.terms}")
        if hj_evaluate(self.terms) != Fraction(self.numerator, self.denominator):
            raise ValueError("terms do not evaluate to numerator/denominator")


def hj_expand(a: int, b: int) -> HJExpansion:
    """Expand a/b (a > 0, -a < b < 0, gcd(a,|b|) = 1) with all terms <= -2.

    Each step takes t = floor(q) and recurses on -1/(q - t); because
    a/b < -1, every quotient along the way is < -1 and every floor is <= -2.
    Uniqueness is a property of this expansion: re-evaluating the output
    reproduces a/b exactly.
    """
    if a <= 0:
        raise ValueError(f"numerator must be positive, got {a}")
    if not (-a < b < 0):
        raise ValueError(f"denominator must satisfy -{a} < b < 0, got {b}")
    if gcd(a, -b) != 1:
        raise ValueError(f"{a} and {b} are not coprime")
    terms = []
    q = Fraction(a, b)
    while True:
        t = q.numerator // q.denominator  # floor for exact Fractions
        if q == t:
            terms.append(t)
            break
        terms.append(t)
        q = -1 / (q - t)
    return HJExpansion(a, b, tuple(terms))


# ---------------------------------------------------------------------------
# Cyclotomic field arithmetic
# ---------------------------------------------------------------------------

class NonRationalError(ValueError):
    """A cyclotomic number expected to be Galois-invariant was not."""


def _as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Cyclotomic:
    """Element of Q(zeta_p) as a reduced residue mod Phi_p (p odd prime)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[Scalar]):
        if not is_prime(p) or p < 3:
            raise ValueError(f"order must be an odd prime >= 3, got {p}")
        vec = [_as_fraction(c) for c in coeffs]
        if len(vec) > p:
            raise ValueError("coefficient vector longer than the field degree")
        vec += [Fraction(0)] * (p - len(vec))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", self._reduce(p, vec))

    @staticmethod
    def _reduce(p: int, full) -> Tuple[Fraction, ...]:
        # Kill the zeta^(p-1) coordinate via zeta^(p-1) = -(1 + ... + zeta^(p-2)).
        top = full[p - 1]
        if not top:
            return tuple(full[: p - 1])
        return tuple(c - top for c in full[: p - 1])

    @classmethod
    def _raw(cls, p: int, coeffs: Tuple[Fraction, ...]) -> "Cyclotomic":
        # Internal fast path: coeffs already a reduced length-(p-1) tuple.
        self = object.__new__(cls)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "Cyclotomic":
        return cls(p, [])

    @classmethod
    def one(cls, p: int) -> "Cyclotomic":
        return cls(p, [1])

    @classmethod
    def from_rational(cls, p: int, value: Scalar) -> "Cyclotomic":
        return cls(p, [value])

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> "Cyclotomic":
        """zeta_p^k (any integer k, exponent taken mod p)."""
        vec = [Fraction(0)] * p
        vec[k % p] = Fraction(1)
        return cls(p, vec)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.p != self.p:
                raise ValueError(f"mixed cyclotomic orders {self.p} and {other.p}")
            return other
        return Cyclotomic.from_rational(self.p, other)

    def __add__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        return Cyclotomic._raw(
            self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic._raw(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        return Cyclotomic._raw(
            self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> "Cyclotomic":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        p = self.p
        full = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    full[(i + j) % p] += a * b
        return Cyclotomic._raw(p, self._reduce(p, full))

    __rmul__ = __mul__

    def mul_zeta_power(self, k: int) -> "Cyclotomic":
        """Multiply by zeta^k (a cyclic coefficient shift; O(p))."""
        p = self.p
        full = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            if a:
                full[(i + k) % p] = a
        return Cyclotomic._raw(p, self._reduce(p, full))

    def inverse(self) -> "Cyclotomic":
        """Field inverse via the extended Euclidean algorithm against Phi_p."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_p)")
        p = self.p
        phi = [Fraction(1)] * p  # Phi_p = 1 + x + ... + x^(p-1)
        r0, t0 = phi, [Fraction(0)]
        r1, t1 = list(self.coeffs), [Fraction(1)]
        while _poly_degree(r1) > 0:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
        if _poly_degree(r1) != 0:
            raise ArithmeticError("gcd with Phi_p is not constant; p not prime?")
        c = r1[0]
        return Cyclotomic(p, [x / c for x in t1])

    def __truediv__(self, other) -> "Cyclotomic":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "Cyclotomic":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "Cyclotomic":
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure ----------------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """The automorphism zeta -> zeta^k, for k coprime to p."""
        p = self.p
        if gcd(k, p) != 1:
            raise ValueError(f"{k} is not invertible mod {p}")
        full = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            if a:
                full[(i * k) % p] += a
        return Cyclotomic._raw(p, self._reduce(p, full))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        """The value of a Galois-invariant element, as an exact rational.

        Invariance is verified by applying every automorphism; a
        non-invariant input raises NonRationalError rather than being
        projected.
        """
        for k in range(2, self.p):
            if self.galois(k) != self:
                raise NonRationalError(
                    f"not fixed by zeta -> zeta^{k}; no rational value")
        if not self.is_rational():
            # Invariant under the full Galois group but not a constant
            # vector: impossible for prime p (the fixed field is Q).
            raise NonRationalError("Galois-invariant element is not constant")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        """Float embedding at zeta = e^(2 pi i / p) (cross-checks only)."""
        z = cmath.exp(2j * cmath.pi / self.p)
        return sum(float(c) * z ** k for k, c in enumerate(self.coeffs))

    # -- plumbing ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(self.p, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*z")
            else:
                parts.append(f"{c}*z^{k}")
        body = " + ".join(parts) if parts else "0"
        return f"Cyclotomic(p={self.p}, {body})"


def rational_value(x: Cyclotomic) -> Fraction:
    """Exact rational value of a Galois-invariant cyclotomic number."""
    return x.rational_value()


# -- dense polynomial helpers over Fraction (for the inverse only) ----------

def _poly_degree(f) -> int:
    for i in range(len(f) - 1, -1, -1):
        if f[i] != 0:
            return i
    return -1


def _poly_sub(f, g):
    n = max(len(f), len(g))
    f = list(f) + [Fraction(0)] * (n - len(f))
    g = list(g) + [Fraction(0)] * (n - len(g))
    return [a - b for a, b in zip(f, g)]


def _poly_mul(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1 if f and g else 0)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] += a * b
    return out


def _poly_divmod(f, g):
    df, dg = _poly_degree(f), _poly_degree(g)
    if dg < 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f) + [Fraction(0)] * (max(df, dg) + 1 - len(f))
    quot = [Fraction(0)] * (max(df - dg, 0) + 1)
    lead = g[dg]
    for k in range(df - dg, -1, -1):
        c = rem[k + dg] / lead
        if c:
            quot[k] = c
            for i in range(dg + 1):
                rem[k + i] -= c * g[i]
    return quot, rem
