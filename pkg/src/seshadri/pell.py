"""Pell equations and Pell bounds.

The fundamental solution (ell, k) of x^2 - N y^2 = 1 is computed from the
continued fraction of sqrt(N); solutions grow exponentially, so everything is
big-integer.  A Pell bound is the rational linear functional
M -> k (M.P) / ell attached to a primitive ample class P with nonsquare P^2;
it is an upper bound for the Seshadri function and agrees with the functional
of a submaximal ample curve in P's ray whenever one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import (
    DimensionMismatch,
    NotAmple,
    NotPrimitive,
    PerfectSquare,
    SquareSelfIntersection,
    WrongRho,
)
from .exact import QuadValue, RadicalSum, is_square
from .frame import HodgeFrame
from .lattice import (
    Matrix,
    Positivity,
    Vector,
    as_vector,
    mat_vec,
    positivity_class,
    primitive_part,
    reference_ample,
    self_int,
)


@dataclass(frozen=True)
class PellSolution:
    N: int
    ell: int
    k: int

    def __post_init__(self):
        assert self.ell * self.ell - self.N * self.k * self.k == 1


_full: dict[int, PellSolution] = {}
_ell_floor: dict[int, int] = {}  # fundamental ell known to exceed this


def _cf_pell(N: int, ell_cap: int | None) -> PellSolution | None:
    a0 = isqrt(N)
    m, d, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while True:
        if h * h - N * k * k == 1:
            sol = PellSolution(N=N, ell=h, k=k)
            _full[N] = sol
            return sol
        if ell_cap is not None and h > ell_cap:
            _ell_floor[N] = max(_ell_floor.get(N, 0), ell_cap)
            return None
        m = d * a - m
        d = (N - m * m) // d
        a = (a0 + m) // d
        h, h_prev = a * h + h_prev, h
        k, k_prev = a * k + k_prev, k


def pell_fundamental(N: int) -> PellSolution:
    """Fundamental solution of x^2 - N y^2 = 1 for nonsquare N > 0."""
    if N <= 0 or is_square(N):
        raise PerfectSquare(f"{N} is a perfect square (or non-positive)")
    sol = _full.get(N)
    if sol is None:
        sol = _cf_pell(N, None)
    return sol


def pell_fundamental_bounded(N: int, ell_cap: int) -> PellSolution | None:
    """Fundamental solution if its ell is <= ell_cap, else None.

    Continued-fraction convergent numerators grow strictly, so the search can
    abort as soon as they pass the cap; aborted prefixes are remembered.
    """
    if N <= 0 or is_square(N):
        raise PerfectSquare(f"{N} is a perfect square (or non-positive)")
    sol = _full.get(N)
    if sol is not None:
        return sol if sol.ell <= ell_cap else None
    if _ell_floor.get(N, 0) >= ell_cap:
        return None
    return _cf_pell(N, ell_cap)


@dataclass(frozen=True)
class PellBound:
    """The functional M -> k (M.P) / ell of the primitive ample class P."""

    P: Vector
    sol: PellSolution
    cov: tuple[Fraction, ...]  # (k/ell) * S P as a covector

    def __call__(self, M: Vector) -> Fraction:
        return eval_bound(self, M)

    def value_at_p(self) -> Fraction:
        return Fraction(self.sol.k * self.sol.N, self.sol.ell)


def make_pell_bound(S: Matrix, P) -> PellBound:
    P = as_vector(P, len(S))
    prim, g = primitive_part(P)
    if g != 1:
        raise NotPrimitive(f"{P} = {g} * {prim}")
    if positivity_class(S, reference_ample(S), P) is not Positivity.AMPLE:
        raise NotAmple(f"{P} is not ample")
    N = self_int(S, P)
    if is_square(N):
        raise SquareSelfIntersection(f"P^2 = {N} is a perfect square")
    sol = pell_fundamental(N)
    r = Fraction(sol.k, sol.ell)
    cov = tuple(r * x for x in mat_vec(S, P))
    return PellBound(P=P, sol=sol, cov=cov)


def eval_bound(b: PellBound, M) -> Fraction:
    M = as_vector(M)
    if len(M) != len(b.cov):
        raise DimensionMismatch(f"bound over rho={len(b.cov)}, class has length {len(M)}")
    return sum((c * x for c, x in zip(b.cov, M)), Fraction(0))


def bounds_coincide(b1: PellBound, b2: PellBound) -> bool:
    """Covector equality; by distinctness of Pell bounds this is b1.P == b2.P."""
    if len(b1.cov) != len(b2.cov):
        raise DimensionMismatch("bounds over different ranks")
    return b1.cov == b2.cov


def sd_interval(b: PellBound, frame: HodgeFrame):
    """Endpoints of {t : pi_P(B0 + t B1) < sqrt(1 - t^2)} for rho = 2.

    Exact: t = (k^2 p0 p1 +- ell) / (1 + k^2 p0^2).  Each endpoint is a
    QuadValue whenever p0 p1 is rational (always so when -det S is a square),
    a two-term RadicalSum otherwise.
    """
    if frame.rho != 2:
        raise WrongRho("submaximality interval is a rho=2 notion")
    a = frame.b_coords(b.P)
    k, ell = b.sol.k, b.sol.ell
    p0p1 = a[0] * a[1]
    denom = 1 + k * k * a[0].square()
    lo = RadicalSum(p0p1 * (k * k), -ell).scale(Fraction(1, denom))
    hi = RadicalSum(p0p1 * (k * k), ell).scale(Fraction(1, denom))
    try:
        return lo.as_quadvalue(), hi.as_quadvalue()
    except ValueError:
        return lo, hi


def sd_length(b: PellBound, frame: HodgeFrame) -> Fraction:
    """Exact length 2 ell / (1 + k^2 p0^2) of the submaximality interval."""
    if frame.rho != 2:
        raise WrongRho
    p0_sq = frame.b_coords(b.P)[0].square()
    return Fraction(2 * b.sol.ell, 1) / (1 + b.sol.k * b.sol.k * p0_sq)
