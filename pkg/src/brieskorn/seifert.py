"""Brieskorn/Seifert data: the orbit invariants b_i, the central weight
delta, the Fintushel-Stern R-invariant, and the two infinite families of
triples used throughout.

For a triple (a1, a2, a3) of pairwise-coprime integers >= 2, the Seifert
invariants are the unique b_i with -a_i < b_i < 0 and

    a1*a2*a3 * b_i / a_i == 1  (mod a_i),

and the central plumbing weight is

    delta = -1/(a1*a2*a3) + b1/a1 + b2/a2 + b3/a3,

always an integer <= -1.  The R-invariant is -2*delta - 3, an odd integer
>= -1; R == -1 is necessary for the sphere to bound a smooth contractible
4-manifold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Tuple


@dataclass(frozen=True, order=True)
class BrieskornTriple:
    """Pairwise-coprime integers >= 2, stored sorted ascending."""

    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        entries = (self.a1, self.a2, self.a3)
        if any(a < 2 for a in entries):
            raise ValueError(f"entries must all be >= 2, got {entries}")
        if not (self.a1 <= self.a2 <= self.a3):
            raise ValueError(f"entries must be sorted ascending, got {entries}")
        for i in range(3):
            for j in range(i + 1, 3):
                if gcd(entries[i], entries[j]) != 1:
                    raise ValueError(
                        f"entries must be pairwise coprime, got {entries}")

    @classmethod
    def of(cls, a: int, b: int, c: int) -> "BrieskornTriple":
        x, y, z = sorted((a, b, c))
        return cls(x, y, z)

    @property
    def entries(self) -> Tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    @property
    def product(self) -> int:
        return self.a1 * self.a2 * self.a3

    def __str__(self):
        return f"Sigma({self.a1},{self.a2},{self.a3})"


@dataclass(frozen=True)
class SeifertData:
    triple: BrieskornTriple
    b: Tuple[int, int, int]
    delta: int
    r_invariant: int

    def __post_init__(self):
        a = self.triple.entries
        prod = self.triple.product
        for ai, bi in zip(a, self.b):
            if not (-ai < bi < 0):
                raise ValueError(f"b={self.b} out of range for {a}")
            if (prod * bi // ai) % ai != 1 % ai:
                raise ValueError(f"congruence fails for b={self.b}")
        if self.delta > -1:
            raise ValueError(f"delta must be <= -1, got {self.delta}")
        if self.r_invariant != -2 * self.delta - 3:
            raise ValueError("r_invariant inconsistent with delta")


@lru_cache(maxsize=None)
def seifert_invariants(triple: BrieskornTriple) -> SeifertData:
    """Solve the defining congruences by exhaustive residue search.

    Exhaustion over the (small) residue range doubles as a uniqueness
    proof: exactly one b_i in (-a_i, 0) satisfies each congruence.
    """
    a = triple.entries
    prod = triple.product
    b = []
    for ai in a:
        others = prod // ai  # coprime to ai, so the congruence has one root
        solutions = [bi for bi in range(-ai + 1, 0)
                     if (others * bi) % ai == 1 % ai]
        if len(solutions) != 1:
            raise ArithmeticError(f"congruence not uniquely solvable for {ai}")
        b.append(solutions[0])
    delta = Fraction(-1, prod) + sum(Fraction(bi, ai) for ai, bi in zip(a, b))
    if delta.denominator != 1:
        raise ArithmeticError(f"central weight is not an integer: {delta}")
    d = int(delta)
    r = -2 * d - 3
    if r % 2 == 0 or r < -1:
        raise ArithmeticError(f"R-invariant {r} is not an odd integer >= -1")
    return SeifertData(triple, tuple(b), d, r)


def r_invariant(triple: BrieskornTriple) -> int:
    """-2*delta - 3; values != -1 rule out bounding a smooth contractible
    4-manifold."""
    return seifert_invariants(triple).r_invariant


def standard_action_valid(triple: BrieskornTriple, p: int) -> bool:
    """Is the restriction of the circle action to Z/p free on the sphere?

    True iff p is coprime to a1*a2*a3.
    """
    if p < 2:
        raise ValueError(f"group order must be >= 2, got {p}")
    return gcd(p, triple.product) == 1


_FAMILY_KINDS = ("casson-harer", "stern")


def family(kind: str, r: int, s: int, sign: str = "+") -> BrieskornTriple:
    """A member of one of the two generator families of triples.

    casson-harer:
        r even, s odd:  (r, r*s - 1, r*s + 1)          (sign ignored)
        r odd,  any s:  (r, r*s +- 1, r*s +- 2)
    stern (sphere bounds a contractible manifold; s = k*p gives the
    locally-linear extension family):
        r even, s odd:  (r, r*s +- 1, 2r(r*s +- 1) + r*s -+ 1)
        r odd,  any s:  (r, r*s +- 1, 2r(r*s +- 1) + r*s +- 2)

    Degenerate parameters (an entry <= 1, or non-coprime entries) are
    rejected rather than silently normalized.
    """
    if kind not in _FAMILY_KINDS:
        raise ValueError(f"unknown family kind {kind!r}; expected one of {_FAMILY_KINDS}")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    if r < 2 or s < 1:
        raise ValueError(f"parameters out of range: r={r}, s={s}")
    e = 1 if sign == "+" else -1
    if kind == "casson-harer":
        if r % 2 == 0:
            if s % 2 == 0:
                raise ValueError(f"r even requires s odd, got r={r}, s={s}")
            raw = (r, r * s - 1, r * s + 1)
        else:
            raw = (r, r * s + e, r * s + 2 * e)
    else:
        if r % 2 == 0:
            if s % 2 == 0:
                raise ValueError(f"r even requires s odd, got r={r}, s={s}")
            m = r * s + e
            raw = (r, m, 2 * r * m + r * s - e)
        else:
            m = r * s + e
            raw = (r, m, 2 * r * m + r * s + 2 * e)
    if any(x < 2 for x in raw):
        raise ValueError(f"degenerate family member {raw} for "
                         f"kind={kind}, r={r}, s={s}, sign={sign}")
    return BrieskornTriple.of(*raw)
