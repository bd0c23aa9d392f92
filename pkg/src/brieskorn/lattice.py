"""Exact diagonalization of negative definite unimodular integer forms.

A form Q of rank n is integrally equivalent to -I iff it has n +- pairs of
vectors of square -1; for a negative definite form those vectors are
automatically pairwise orthogonal (Cauchy-Schwarz is strict on
non-proportional vectors), so finding them is the entire problem.  The
search enumerates every v with v^t Q v = -1 by exact backtracking with
bounds from a rational LDL^t factorization of -Q; no floating point
enters the decision path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from . import matrices
from .matrices import IntMatrix, det, freeze, identity, inverse_unimodular, mat_mul, transpose


@dataclass(frozen=True)
class UnimodularForm:
    n: int
    q: IntMatrix

    def __post_init__(self):
        if len(self.q) != self.n or not matrices.is_symmetric(self.q):
            raise ValueError("form matrix must be symmetric n x n")

    @classmethod
    def from_matrix(cls, rows) -> "UnimodularForm":
        q = freeze(rows)
        return cls(len(q), q)

    @property
    def determinant(self) -> int:
        return det(self.q)

    @property
    def is_unimodular(self) -> bool:
        return abs(self.determinant) == 1

    @property
    def is_negative_definite(self) -> bool:
        return matrices.is_negative_definite(self.q)

    def evaluate(self, v, w=None) -> int:
        """v^t Q w (defaults to the square v^t Q v)."""
        if w is None:
            w = v
        return sum(v[i] * self.q[i][j] * w[j]
                   for i in range(self.n) for j in range(self.n))


def _ldl(a: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[Fraction]]:
    """A = L D L^t for positive definite A; L unit lower triangular."""
    n = len(a)
    L = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for j in range(n):
        d[j] = a[j][j] - sum(L[j][k] * L[j][k] * d[k] for k in range(j))
        if d[j] <= 0:
            raise ValueError("matrix is not positive definite")
        L[j][j] = Fraction(1)
        for i in range(j + 1, n):
            L[i][j] = (a[i][j] - sum(L[i][k] * L[j][k] * d[k] for k in range(j))) / d[j]
    return L, d


def enumerate_roots(form: UnimodularForm) -> Tuple[Tuple[int, ...], ...]:
    """All integer vectors v with v^t Q v = -1, for negative definite Q.

    Complete by construction: writing -Q = L D L^t, the quadratic form is
    sum_j d_j (v_j + c_j)^2 with c_j depending only on later coordinates,
    so coordinates are enumerated from the last with the exact interval
    d_j (v_j + c_j)^2 <= remaining budget.  The output is closed under
    negation, duplicate-free, and sorted lexicographically.
    """
    if not form.is_negative_definite:
        raise ValueError("root enumeration requires a negative definite form")
    n = form.n
    a = [[Fraction(-x) for x in row] for row in form.q]
    L, d = _ldl(a)
    target = Fraction(1)
    roots: List[Tuple[int, ...]] = []
    v = [0] * n

    def descend(j: int, budget: Fraction):
        if j < 0:
            if budget == 0 and any(v):
                roots.append(tuple(v))
            return
        c = sum(L[i][j] * v[i] for i in range(j + 1, n))

        def fits(m: int) -> bool:
            return d[j] * (m + c) * (m + c) <= budget

        base = math.floor(-c)
        m = base
        while fits(m):
            v[j] = m
            descend(j - 1, budget - d[j] * (m + c) * (m + c))
            m -= 1
        m = base + 1
        while fits(m):
            v[j] = m
            descend(j - 1, budget - d[j] * (m + c) * (m + c))
            m += 1
        v[j] = 0

    descend(n - 1, target)
    return tuple(sorted(roots))


@dataclass(frozen=True)
class Diagonalization:
    """Exact basis change C with C^t Q C = -I and its integer inverse.

    Columns of c are the diagonal basis vectors in the node basis; columns
    of c_inv express each node class in the diagonal basis.  Both
    identities are re-verified on construction.
    """

    form: UnimodularForm
    c: IntMatrix
    c_inv: IntMatrix

    def __post_init__(self):
        n = self.form.n
        minus_i = tuple(tuple(-1 if i == j else 0 for j in range(n)) for i in range(n))
        if mat_mul(mat_mul(transpose(self.c), self.form.q), self.c) != minus_i:
            raise ValueError("C^t Q C != -I")
        if mat_mul(self.c, self.c_inv) != identity(n):
            raise ValueError("C * C_inv != I")

    @property
    def found(self) -> bool:
        return True

    def column(self, i: int) -> Tuple[int, ...]:
        """Node class i in the diagonal basis (column i of C^-1)."""
        return tuple(self.c_inv[j][i] for j in range(self.form.n))


@dataclass(frozen=True)
class DiagonalizationFailure:
    """Certificate that the form is not integrally equivalent to -I."""

    form: UnimodularForm
    root_pairs: int

    @property
    def found(self) -> bool:
        return False

    @property
    def message(self) -> str:
        return (f"{self.root_pairs} root pairs < {self.form.n} required: "
                "no integral diagonalization exists")


def diagonalize(form: UnimodularForm) -> Union[Diagonalization, DiagonalizationFailure]:
    """Donaldson-style diagonalization, or a root-count certificate.

    Requires a negative definite unimodular form.  Success needs one
    square -1 vector per +- pair in every coordinate direction, i.e. n
    pairs; representatives are the pair members with positive leading
    entry, in lexicographic order, which makes the output canonical.
    """
    if not form.is_unimodular:
        raise ValueError("form must have determinant +-1")
    roots = enumerate_roots(form)
    reps = [v for v in roots if next(x for x in v if x) > 0]
    if len(reps) != form.n:
        return DiagonalizationFailure(form, len(reps))
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if form.evaluate(reps[i], reps[j]) != 0:
                raise ArithmeticError(
                    "root pairs are not pairwise orthogonal; the form "
                    "violates the geometry of square -1 vectors")
    c = tuple(tuple(reps[j][i] for j in range(form.n)) for i in range(form.n))
    return Diagonalization(form, c, inverse_unimodular(c))


def signed_permutation_equal(a, b, axis: str = "col") -> bool:
    """Is A = B * S for a signed permutation S of the given axis?

    axis="col" compares columns up to reordering and per-column sign
    (the relation between two matrices whose columns are a diagonal basis,
    such as C); axis="row" compares rows the same way (the relation
    between two C^-1 matrices, whose rows are indexed by the diagonal
    basis).
    """
    a = freeze(a)
    b = freeze(b)
    if axis == "row":
        a, b = transpose(a), transpose(b)
    elif axis != "col":
        raise ValueError(f"axis must be 'col' or 'row', got {axis!r}")
    if len(a) != len(b) or any(len(r) != len(s) for r, s in zip(a, b)):
        return False

    def canonical_columns(m):
        cols = list(zip(*m))
        return sorted(max(c, tuple(-x for x in c)) for c in cols)

    return canonical_columns(a) == canonical_columns(b)
