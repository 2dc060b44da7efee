"""Exact model of the Neron-Severi lattice: intersection form, cone tests,
primitivity and isometries.

Classes are plain integer tuples and matrices are tuples of integer tuples,
so everything is hashable and safe to cache.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import (
    DimensionMismatch,
    NotIsometry,
    NotSymmetric,
    ReversesCone,
    WrongSignature,
    ZeroVector,
)

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows) -> Matrix:
    S = tuple(tuple(int(x) for x in row) for row in rows)
    if not S or any(len(row) != len(S) for row in S):
        raise NotSymmetric("matrix must be square")
    return S


def as_vector(coords, rho: int | None = None) -> Vector:
    v = tuple(int(x) for x in coords)
    if rho is not None and len(v) != rho:
        raise DimensionMismatch(f"expected length {rho}, got {len(v)}")
    return v


def mat_vec(S: Matrix, v: Vector) -> Vector:
    if len(v) != len(S):
        raise DimensionMismatch(f"matrix is {len(S)}x{len(S)}, class has length {len(v)}")
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in S)


def pair(S: Matrix, v: Vector, w: Vector) -> int:
    """Intersection number v.w, exact."""
    Sw = mat_vec(S, w)
    if len(v) != len(Sw):
        raise DimensionMismatch(f"class lengths {len(v)} and {len(w)} do not match")
    return sum(a * b for a, b in zip(v, Sw))


def self_int(S: Matrix, v: Vector) -> int:
    return pair(S, v, v)


def congruence_diagonalize(S: Matrix) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Lagrange congruence diagonalization over Q.

    Returns (U, pivots) with U invertible rational and U^T S U = diag(pivots).
    Pivot choice: largest absolute diagonal entry, ties by index; a zero
    diagonal is repaired by adding the column of a nonzero off-diagonal entry.
    """
    rho = len(S)
    A = [[Fraction(S[i][j]) for j in range(rho)] for i in range(rho)]
    U = [[Fraction(i == j) for j in range(rho)] for i in range(rho)]

    def add_col(dst, src, c):
        # column op dst += c*src applied congruently (rows too)
        for i in range(rho):
            A[i][dst] += c * A[i][src]
        for j in range(rho):
            A[dst][j] += c * A[src][j]
        for i in range(rho):
            U[i][dst] += c * U[i][src]

    def swap_col(a, b):
        for i in range(rho):
            A[i][a], A[i][b] = A[i][b], A[i][a]
        A[a], A[b] = A[b], A[a]
        for i in range(rho):
            U[i][a], U[i][b] = U[i][b], U[i][a]

    for k in range(rho):
        best = max(range(k, rho), key=lambda j: (abs(A[j][j]), -j))
        if A[best][best] == 0:
            found = next(
                ((i, j) for i in range(k, rho) for j in range(i + 1, rho) if A[i][j] != 0),
                None,
            )
            if found is None:
                pivots = [A[i][i] for i in range(rho)]
                return U, pivots
            i, j = found
            add_col(i, j, Fraction(1))
            best = i
        if best != k:
            swap_col(best, k)
        for j in range(k + 1, rho):
            if A[k][j] != 0:
                add_col(j, k, -A[k][j] / A[k][k])
    return U, [A[i][i] for i in range(rho)]


@dataclass(frozen=True)
class FormProfile:
    signature: tuple[int, int]
    pivots: tuple[Fraction, ...]
    even_diagonal: bool


def validate_matrix(S) -> FormProfile:
    """Check symmetry and signature (1, rho-1); flag odd diagonal entries.

    Odd self-intersections cannot come from an abelian surface but the
    machinery still applies, so they only clear even_diagonal.
    """
    S = as_matrix(S)
    rho = len(S)
    for i in range(rho):
        for j in range(i):
            if S[i][j] != S[j][i]:
                raise NotSymmetric(f"entries[{i}][{j}] != entries[{j}][{i}]")
    _, pivots = congruence_diagonalize(S)
    pos = sum(1 for p in pivots if p > 0)
    neg = sum(1 for p in pivots if p < 0)
    if (pos, neg) != (1, rho - 1):
        raise WrongSignature((pos, neg))
    det = 1
    for p in pivots:
        det *= p
    assert det != 0
    even = all(S[i][i] % 2 == 0 for i in range(rho))
    return FormProfile(signature=(pos, neg), pivots=tuple(pivots), even_diagonal=even)


def primitive_part(v: Vector) -> tuple[Vector, int]:
    """Divide out the gcd of the coordinates; errors on the zero vector."""
    v = as_vector(v)
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        raise ZeroVector("zero vector has no primitive part")
    return tuple(x // g for x in v), g


def _scan_order(m: int, rho: int):
    # digits ordered 0, 1, -1, 2, -2, ..., m, -m; boxes of growing radius
    digits = [0]
    for a in range(1, m + 1):
        digits += [a, -a]
    return itertools.product(digits, repeat=rho)


@lru_cache(maxsize=None)
def reference_ample(S: Matrix) -> Vector:
    """Deterministic positive class fixing the forward cone.

    Scans integer boxes of radius 1, 2, ... with coordinate digits ordered
    0, 1, -1, 2, -2, ... and returns the first v with v.v > 0.
    """
    S = as_matrix(S)
    rho = len(S)
    for m in range(1, 100):
        for v in _scan_order(m, rho):
            if self_int(S, v) > 0:
                return v
    raise AssertionError("no positive vector found; signature check should prevent this")


class Positivity(Enum):
    AMPLE = "Ample"
    NEF_BOUNDARY = "NefBoundary"
    NOT_NEF = "NotNef"


def positivity_class(S: Matrix, H: Vector, v: Vector) -> Positivity:
    """Position of v relative to the nef cone fixed by the ample class H."""
    vv = self_int(S, v)
    vH = pair(S, v, H)
    if vv > 0 and vH > 0:
        return Positivity.AMPLE
    if (vv == 0 and vH > 0) or all(x == 0 for x in v):
        return Positivity.NEF_BOUNDARY
    return Positivity.NOT_NEF


def is_nef(S: Matrix, v: Vector) -> bool:
    return positivity_class(S, reference_ample(S), v) is not Positivity.NOT_NEF


@dataclass(frozen=True)
class IsometryMap:
    matrix: Matrix
    S: Matrix

    def apply(self, v: Vector) -> Vector:
        return mat_vec(self.matrix, v)

    def inverse(self) -> "IsometryMap":
        inv = invert_int_matrix(self.matrix)
        return IsometryMap(matrix=inv, S=self.S)

    def compose(self, other: "IsometryMap") -> "IsometryMap":
        if self.S != other.S:
            raise DimensionMismatch("isometries of different lattices")
        rho = len(self.S)
        m = tuple(
            tuple(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(rho)) for j in range(rho))
            for i in range(rho)
        )
        return IsometryMap(matrix=m, S=self.S)


def invert_int_matrix(M: Matrix) -> Matrix:
    """Inverse of an integer matrix with det +-1."""
    rho = len(M)
    A = [[Fraction(M[i][j]) for j in range(rho)] + [Fraction(i == j) for j in range(rho)] for i in range(rho)]
    for col in range(rho):
        piv = next((r for r in range(col, rho) if A[r][col] != 0), None)
        if piv is None:
            raise NotIsometry("matrix is singular")
        A[col], A[piv] = A[piv], A[col]
        f = A[col][col]
        A[col] = [x / f for x in A[col]]
        for r in range(rho):
            if r != col and A[r][col] != 0:
                c = A[r][col]
                A[r] = [x - c * y for x, y in zip(A[r], A[col])]
    inv = [row[rho:] for row in A]
    if any(x.denominator != 1 for row in inv for x in row):
        raise NotIsometry("inverse is not integral")
    return tuple(tuple(int(x) for x in row) for row in inv)


def check_isometry(S, psi) -> IsometryMap:
    """Validate psi^T S psi == S and that psi keeps the forward cone."""
    S = as_matrix(S)
    rho = len(S)
    psi = tuple(tuple(int(x) for x in row) for row in psi)
    if len(psi) != rho or any(len(r) != rho for r in psi):
        raise DimensionMismatch("isometry must be rho x rho")
    for i in range(rho):
        for j in range(rho):
            lhs = sum(psi[k][i] * S[k][l] * psi[l][j] for k in range(rho) for l in range(rho))
            if lhs != S[i][j]:
                raise NotIsometry(f"(psi^T S psi)[{i}][{j}] = {lhs} != {S[i][j]}")
    H = reference_ample(S)
    psiH = mat_vec(psi, H)
    if pair(S, psiH, H) <= 0:
        raise ReversesCone("image of the reference ample class lies in the backward cone")
    return IsometryMap(matrix=psi, S=S)
