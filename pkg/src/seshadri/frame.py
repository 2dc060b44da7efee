"""Standardized hyperbolic frame for the intersection form.

diagonalize() produces integer column vectors u_0, ..., u_{rho-1} that are
S-orthogonal with u_0.u_0 = d_0 > 0 and u_i.u_i = -d_i < 0.  The real basis
B_i = u_i / sqrt(d_i) then has Gram matrix diag(1, -1, ..., -1) and a class v
has exact coordinates b_i(v) = sqrt(d_i) * (U^-1 v)_i, kept as QuadValues.
The cross-section of the nef cone is the unit ball b_0 = 1, sum b_i^2 <= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, gcd

from .errors import BoundNotPositive, CapNotPositive, DenominatorNonPositive, NotForward
from .exact import QuadValue, sqrt_lower, sqrt_upper
from .lattice import (
    Matrix,
    Vector,
    as_matrix,
    congruence_diagonalize,
    pair,
    reference_ample,
    self_int,
    validate_matrix,
)


@dataclass(frozen=True)
class LatticeBox:
    """The cube [-m, m]^rho in original lattice coordinates."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("box radius must be >= 1")


@dataclass(frozen=True)
class HodgeFrame:
    S: Matrix
    U: Matrix  # integer columns, pairwise S-orthogonal
    d: tuple[int, ...]  # u_0^2 = d_0, u_i^2 = -d_i, all positive
    inv_num: Matrix  # U^-1 = inv_num / inv_den
    inv_den: int

    @property
    def rho(self) -> int:
        return len(self.S)

    def coords(self, v: Vector) -> tuple[Fraction, ...]:
        """Rational coordinates of v in the integer column basis U."""
        return tuple(
            Fraction(sum(self.inv_num[i][j] * v[j] for j in range(self.rho)), self.inv_den)
            for i in range(self.rho)
        )

    def b_coords(self, v: Vector) -> tuple[QuadValue, ...]:
        """Exact Minkowski coordinates b_i(v) = sqrt(d_i) * (U^-1 v)_i."""
        return tuple(QuadValue(c, self.d[i]) for i, c in enumerate(self.coords(v)))

    def b0(self, v: Vector) -> QuadValue:
        c0 = Fraction(sum(self.inv_num[0][j] * v[j] for j in range(self.rho)), self.inv_den)
        return QuadValue(c0, self.d[0])

    def minkowski(self, a: tuple[QuadValue, ...], b: tuple[QuadValue, ...]):
        out = a[0] * b[0]
        for x, y in zip(a[1:], b[1:]):
            out = out - x * y
        return out


def _primitive_column(col: list[Fraction]) -> tuple[int, ...]:
    den = 1
    for x in col:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in col]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _invert(U: Matrix) -> tuple[Matrix, int]:
    """Exact inverse of an integer matrix as (numerator matrix, denominator)."""
    rho = len(U)
    A = [[Fraction(U[i][j]) for j in range(rho)] + [Fraction(i == j) for j in range(rho)] for i in range(rho)]
    for col in range(rho):
        piv = next(r for r in range(col, rho) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        f = A[col][col]
        A[col] = [x / f for x in A[col]]
        for r in range(rho):
            if r != col and A[r][col] != 0:
                c = A[r][col]
                A[r] = [x - c * y for x, y in zip(A[r], A[col])]
    inv = [row[rho:] for row in A]
    den = 1
    for row in inv:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    num = tuple(tuple(int(x * den) for x in row) for row in inv)
    return num, den


@lru_cache(maxsize=None)
def diagonalize(S: Matrix) -> HodgeFrame:
    """Congruence-diagonalize S and orient so the reference ample class has b_0 > 0."""
    S = as_matrix(S)
    validate_matrix(S)
    rho = len(S)
    U_frac, pivots = congruence_diagonalize(S)
    cols = [[U_frac[i][j] for i in range(rho)] for j in range(rho)]
    cols = [_primitive_column(c) for c in cols]
    pos = [j for j in range(rho) if pivots[j] > 0]
    neg = [j for j in range(rho) if pivots[j] < 0]
    assert len(pos) == 1
    order = pos + neg
    cols = [cols[j] for j in order]
    d = [abs(self_int(S, c)) for c in cols]

    H = reference_ample(S)
    U = tuple(tuple(cols[j][i] for j in range(rho)) for i in range(rho))
    inv_num, inv_den = _invert(U)
    c0_H = sum(inv_num[0][j] * H[j] for j in range(rho))
    if c0_H < 0:
        cols[0] = tuple(-x for x in cols[0])
        U = tuple(tuple(cols[j][i] for j in range(rho)) for i in range(rho))
        inv_num, inv_den = _invert(U)
    return HodgeFrame(S=S, U=U, d=tuple(d), inv_num=inv_num, inv_den=inv_den)


def cross_section_coords(frame: HodgeFrame, v: Vector) -> tuple[QuadValue, ...]:
    """Exact coordinates (a_0, ..., a_{rho-1}) of v in the B-basis.

    Requires v in the forward closure (b_0 >= 0); its representative on the
    cross-section is (1, a_1/a_0, ...).
    """
    a = frame.b_coords(v)
    if a[0].sign() < 0:
        raise NotForward(f"class {v} has b_0 < 0")
    return a


def _lambda_upper(cap, a: tuple[QuadValue, ...]) -> Fraction:
    """Certified rational upper bound for cap / (a_0 - sqrt(sum a_i^2))."""
    if not isinstance(cap, QuadValue):
        cap = QuadValue(cap)
    if cap.sign() <= 0:
        raise CapNotPositive(f"cap {cap!r} must be positive")
    a0_sq = a[0].square()
    rest_sq = sum((x.square() for x in a[1:]), Fraction(0))
    if a[0].sign() <= 0 or a0_sq <= rest_sq:
        raise DenominatorNonPositive("class is not in the open forward cone")
    digits = 20
    while True:
        denom_lo = sqrt_lower(a0_sq, digits) - sqrt_upper(rest_sq, digits)
        if denom_lo > 0:
            return cap.upper(digits) / denom_lo
        digits *= 2


def _cube_radius(frame: HodgeFrame, coord_bound: Fraction) -> LatticeBox:
    """Cube certified to contain every class whose |b_i| are all <= coord_bound."""
    rho = frame.rho
    m = 1
    for j in range(rho):
        total = Fraction(0)
        for i in range(rho):
            if frame.U[j][i]:
                total += abs(frame.U[j][i]) * coord_bound / sqrt_lower(Fraction(frame.d[i]), 20)
        m = max(m, ceil(total))
    return LatticeBox(m=m)


def elliptic_box_radius(frame: HodgeFrame, L: Vector, cap) -> LatticeBox:
    """Cube containing every elliptic class E with L.E below the cap.

    Soundness: E = lambda * E' with E' on the boundary of the cross-section,
    so b_0(E) = lambda and |b_i(E)| <= lambda; lambda is bounded by
    cap / (a_0 - sqrt(sum a_i^2)), which is over-approximated one-sidedly.
    """
    a = cross_section_coords(frame, L)
    return _cube_radius(frame, _lambda_upper(cap, a))


def pell_box_radius(frame: HodgeFrame, p0_bound) -> LatticeBox:
    """Cube containing every class with 0 <= b_0 <= p0_bound, |b_i| <= p0_bound."""
    p0_bound = Fraction(p0_bound)
    if p0_bound <= 0:
        raise BoundNotPositive("p0 bound must be positive")
    return _cube_radius(frame, p0_bound)


def sqrt_d_ratio(frame: HodgeFrame) -> QuadValue:
    """sqrt(d_0 / d_1) for rho = 2; rational exactly when -det(S) is a square."""
    return QuadValue.sqrt_of(Fraction(frame.d[0], frame.d[1]))


def rational_ray_class(frame: HodgeFrame, xi: Fraction) -> Vector:
    """Primitive forward class on the rational ray with (U^-1 v)_1 / (U^-1 v)_0 = xi (rho = 2)."""
    xi = Fraction(xi)
    v = [
        frame.U[j][0] * xi.denominator + frame.U[j][1] * xi.numerator
        for j in range(frame.rho)
    ]
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return tuple(x // g for x in v)


def t_coord(frame: HodgeFrame, v: Vector) -> QuadValue:
    """Cross-section coordinate t = a_1 / a_0 of a forward class (rho = 2)."""
    a = frame.b_coords(v)
    if a[0].sign() <= 0:
        raise NotForward(f"class {v} is not in the open forward cone")
    return a[1] / a[0]


def hodge_identity_check(frame: HodgeFrame, v: Vector) -> bool:
    """b_0^2 - sum b_i^2 == v.v, exactly."""
    b = frame.b_coords(v)
    lhs = b[0].square() - sum((x.square() for x in b[1:]), Fraction(0))
    return lhs == self_int(frame.S, v)
