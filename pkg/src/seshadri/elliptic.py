"""Enumeration of elliptic curve classes and minimal elliptic degrees.

By Kani's criterion an elliptic curve class is exactly a primitive lattice
class E with E^2 = 0 and E.H > 0, so enumeration is a filtered box scan.  The
certified box radii from the frame module make "no submaximal elliptic class"
an actual certificate rather than a search timeout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BudgetExceeded, CapNotPositive, NotAmple
from .exact import QuadValue
from .frame import HodgeFrame, LatticeBox, diagonalize, elliptic_box_radius
from .lattice import (
    Matrix,
    Positivity,
    Vector,
    as_matrix,
    as_vector,
    mat_vec,
    pair,
    positivity_class,
    reference_ample,
    self_int,
)

_MAX_BOX_POINTS = 8_000_000


def enumerate_elliptic(S: Matrix, box: LatticeBox) -> list[Vector]:
    """All primitive classes E in [-m, m]^rho with E^2 = 0 and E.H > 0, lex order."""
    S = as_matrix(S)
    rho = len(S)
    m = box.m
    if (2 * m + 1) ** rho > _MAX_BOX_POINTS:
        raise BudgetExceeded(f"elliptic box radius {m} too large to scan")
    H = reference_ample(S)
    SH = mat_vec(S, H)
    found = []
    for v in itertools.product(range(-m, m + 1), repeat=rho):
        if sum(x * y for x, y in zip(v, SH)) <= 0:
            continue
        g = 0
        for x in v:
            g = gcd(g, abs(x))
        if g != 1:
            continue
        if self_int(S, v) == 0:
            found.append(v)
    found.sort()
    return found


@dataclass(frozen=True)
class EllipticMinimum:
    value: int  # minimal degree L.E over the admitted elliptic classes
    minimizers: tuple[Vector, ...]


def _check_ample(S: Matrix, L) -> Vector:
    L = as_vector(L, len(S))
    if positivity_class(S, reference_ample(S), L) is not Positivity.AMPLE:
        raise NotAmple(f"{L} is not ample")
    return L


def eps_elliptic_submaximal(S: Matrix, L) -> EllipticMinimum | None:
    """Minimal degree of elliptic classes strictly submaximal for L, if any.

    The scan box provably contains every elliptic class E with
    L.E < sqrt(L^2), so a None return certifies there is none.
    """
    S = as_matrix(S)
    L = _check_ample(S, L)
    frame = diagonalize(S)
    L2 = self_int(S, L)
    box = elliptic_box_radius(frame, L, QuadValue.sqrt_of(L2))
    best: int | None = None
    mins: list[Vector] = []
    for E in enumerate_elliptic(S, box):
        deg = pair(S, L, E)
        if deg * deg >= L2:  # submaximality is strict
            continue
        if best is None or deg < best:
            best, mins = deg, [E]
        elif deg == best:
            mins.append(E)
    if best is None:
        return None
    return EllipticMinimum(value=best, minimizers=tuple(sorted(mins)))


def eps_elliptic_capped(S: Matrix, L, cap) -> EllipticMinimum | None:
    """Minimal degree of elliptic classes with L.E <= cap (caller-supplied cap)."""
    S = as_matrix(S)
    L = _check_ample(S, L)
    cap = Fraction(cap)
    if cap <= 0:
        raise CapNotPositive(f"cap {cap} must be positive")
    frame = diagonalize(S)
    box = elliptic_box_radius(frame, L, cap)
    best: int | None = None
    mins: list[Vector] = []
    for E in enumerate_elliptic(S, box):
        deg = pair(S, L, E)
        if deg > cap:
            continue
        if best is None or deg < best:
            best, mins = deg, [E]
        elif deg == best:
            mins.append(E)
    if best is None:
        return None
    return EllipticMinimum(value=best, minimizers=tuple(sorted(mins)))
