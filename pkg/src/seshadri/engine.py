"""Seshadri constants: upper bounds, submaximality windows, finite Pell
candidate enumeration, the main minimization, and curve verification.

The point algorithm: an upper bound R < sqrt(L^2) pins per-axis windows on the
cross-section inside which every Seshadri curve is submaximal; the windows
span a cross-polytope of exact volume zeta; any Pell bound whose submaximality
domain contains that polytope has p_0 below an explicit bound, so only a
finite candidate set remains and

    eps(L) = min(eps_ell(L), min over candidate Pell bounds, sqrt(L^2)).

Candidate enumeration is pruned soundly: pi_P(L) <= V forces both
(P.L)^2 <= V^2 (P^2 + 1)  (an ellipsoid, since V < sqrt(L^2)) and
ell_P <= sqrt(L^2 / (L^2 - V^2)), so the scan walks the ellipsoid with
Fincke-Pohst and aborts each Pell solve once convergents pass the ell cap.
Every discarded class provably evaluates above V, and every retained bound is
a genuine upper bound, so the pruned minimum equals the boxed minimum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator

from .elliptic import EllipticMinimum, eps_elliptic_submaximal
from .errors import (
    BoundNotSubmaximal,
    BudgetExceeded,
    IrrationalClass,
    NotAmple,
    NotNef,
    WindowCountMismatch,
    ZetaNotPositive,
)
from .exact import QuadValue, RadicalSum, frac_str, is_square, parse_frac
from .frame import HodgeFrame, cross_section_coords, diagonalize, pell_box_radius
from .lattice import (
    Matrix,
    Positivity,
    Vector,
    IsometryMap,
    as_matrix,
    mat_vec,
    pair,
    positivity_class,
    primitive_part,
    reference_ample,
    self_int,
    validate_matrix,
)
from .pell import PellBound, PellSolution, make_pell_bound, pell_fundamental, pell_fundamental_bounded

ELLIPTIC = "Elliptic"
AMPLE = "Ample"
SQRT_BOUND = "SqrtBound"

# Vol(S^0), Vol(S^1), Vol(S^2) with pi replaced by the rational upper bound
# 355/113; enlarging the candidate bound is sound.
_SPHERE_VOL = {2: Fraction(2), 3: Fraction(710, 113), 4: Fraction(1420, 113)}


@dataclass(frozen=True)
class EngineLimits:
    fp_nodes: int = 4_000_000  # Fincke-Pohst node budget per enumeration
    cube_points: int = 2_000_000  # plain cube scans (public candidate op)
    seed_caps: tuple[int, ...] = (16, 64, 256)  # p0 caps for the cheap seed scan
    seed_ell_cap: int = 10**6


DEFAULT_LIMITS = EngineLimits()


@dataclass(frozen=True)
class SubmaximalityWindow:
    axis: int
    t1: Fraction
    t2: Fraction

    def width(self) -> Fraction:
        return self.t2 - self.t1


@dataclass(frozen=True)
class SeshadriCurve:
    kind: str  # ELLIPTIC or AMPLE
    cls: Vector
    pell: PellSolution | None
    cov: tuple[Fraction, ...]
    verified: bool | None  # AMPLE only

    def value_at(self, M) -> Fraction:
        return sum((c * x for c, x in zip(self.cov, M)), Fraction(0))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "class": list(self.cls),
            "ell": str(self.pell.ell) if self.pell else None,
            "k": str(self.pell.k) if self.pell else None,
            "verified": self.verified,
        }


@dataclass(frozen=True)
class SeshadriResult:
    value: QuadValue
    attained_by: tuple[str, ...]
    curves: tuple[SeshadriCurve, ...]
    candidates_scanned: int
    diagnostics: dict = field(compare=False)

    def to_dict(self) -> dict:
        diag = {"candidates_scanned": self.candidates_scanned}
        for k, v in self.diagnostics.items():
            diag[k] = frac_str(v) if isinstance(v, Fraction) else v
        return {
            "value": self.value.to_dict(),
            "attained_by": list(self.attained_by),
            "curves": [c.to_dict() for c in self.curves],
            "diagnostics": diag,
        }

    @staticmethod
    def from_dict(d: dict, S) -> "SeshadriResult":
        S = as_matrix(S)
        curves = []
        for c in d["curves"]:
            cls = tuple(int(x) for x in c["class"])
            if c["kind"] == AMPLE:
                sol = PellSolution(N=self_int(S, cls), ell=int(c["ell"]), k=int(c["k"]))
                cov = tuple(Fraction(sol.k, sol.ell) * x for x in mat_vec(S, cls))
            else:
                sol = None
                cov = tuple(Fraction(x) for x in mat_vec(S, cls))
            curves.append(
                SeshadriCurve(kind=c["kind"], cls=cls, pell=sol, cov=cov, verified=c["verified"])
            )
        diag = dict(d.get("diagnostics", {}))
        scanned = int(diag.pop("candidates_scanned", 0))
        return SeshadriResult(
            value=QuadValue.from_dict(d["value"]),
            attained_by=tuple(d["attained_by"]),
            curves=tuple(curves),
            candidates_scanned=scanned,
            diagnostics=diag,
        )


def _rational_vector(coords) -> tuple[Fraction, ...]:
    out = []
    for x in coords:
        if isinstance(x, float):
            raise IrrationalClass(f"coordinate {x} is a float; pass exact rationals")
        out.append(Fraction(x))
    return tuple(out)


def upper_bound(S: Matrix, L) -> Fraction:
    """Rational upper bound R < sqrt(L^2): the Pell bound value at L, or the
    (2 L^2 - 1) / (2 sqrt(L^2)) fallback when L^2 is a perfect square."""
    S = as_matrix(S)
    if positivity_class(S, reference_ample(S), L) is not Positivity.AMPLE:
        raise NotAmple(f"{tuple(L)} is not ample")
    P, g = primitive_part(L)
    N = self_int(S, P)
    if is_square(N):
        return g * Fraction(2 * N - 1, 2 * isqrt(N))
    sol = pell_fundamental(N)
    return g * Fraction(sol.k * N, sol.ell)


def _shrink_into(pred, start: Fraction, limit_hint: float) -> Fraction:
    """A positive rational close below `limit_hint` satisfying pred, kept with
    a small denominator so downstream arithmetic stays cheap."""
    if limit_hint > 0:
        t = Fraction(limit_hint).limit_denominator(10**6)
        for _ in range(80):
            if t > 0 and pred(t):
                return t
            t = (t * Fraction(63, 64)).limit_denominator(10**7)
            if t <= 0:
                break
    t = start
    for _ in range(200):
        if t > 0 and pred(t):
            return t
        t /= 2
    raise AssertionError("no interior rational found; precondition violated")


def submaximality_window(frame: HodgeFrame, L, R, axis: int) -> SubmaximalityWindow:
    """Interval (t1, t2) around L on the cross-section line along axis `axis`
    inside which every linear functional f with f(L) <= R and f >= 0 on the
    section stays below sqrt.  Endpoints are exact quadratic roots when the
    data is rational, otherwise rationals rounded inward (still sound)."""
    rho = frame.rho
    if not 1 <= axis <= rho - 1:
        raise WindowCountMismatch(f"axis {axis} out of range for rho={rho}")
    a = cross_section_coords(frame, L)
    L2 = self_int(frame.S, L)
    if L2 <= 0:
        raise NotAmple(f"{tuple(L)} is not in the open forward cone")
    if not isinstance(R, QuadValue):
        R = QuadValue(R)
    if R.sign() <= 0 or not R.square() < L2:
        raise BoundNotSubmaximal(f"R = {R!r} is not strictly below sqrt(L^2)")

    w = [a[j] / a[0] for j in range(1, rho)]  # cross-section point of L
    wi = w[axis - 1]
    c = Fraction(1) - sum((w[j].square() for j in range(rho - 1) if j != axis - 1), Fraction(0))
    v0_sq = c - wi.square()  # = L^2 / a_0^2 > 0
    assert v0_sq > 0

    R_s = R / a[0]
    digits = 6
    while True:
        R_t = R_s.upper(digits).limit_denominator(10 ** max(6, digits))
        if R_t >= R_s and R_t * R_t < v0_sq:
            break
        digits *= 2
        if digits > 10**4:
            raise AssertionError("cannot separate R from sqrt(L^2)")

    def check_inside_section(t: Fraction) -> bool:
        # (wi + t)^2 <= c: admissible functionals are >= 0 on the closed section
        rat = wi.square() + t * t - c
        return RadicalSum(rat, wi * (2 * t)).sign() <= 0

    def q_negative(e: Fraction, wq: QuadValue, t: Fraction) -> bool:
        # q(t) = R_t^2 (1 - t/e)^2 + (wq + t)^2 - c < 0
        rat = R_t * R_t * (1 - t / e) ** 2 + wq.square() + t * t - c
        return RadicalSum(rat, wq * (2 * t)).sign() < 0

    def positive_root_inward(e: Fraction, wq: QuadValue) -> Fraction:
        # convex q with q(0) < 0; find (or inward-round) the positive root
        A = R_t * R_t / (e * e) + 1
        B_rat = -2 * R_t * R_t / e
        C = R_t * R_t + wq.square() - c
        assert C < 0
        if wq.is_rational:
            B = B_rat + 2 * wq.q
            disc = B * B - 4 * A * C
            # exact root only when disc is a square of a rational; never factor
            if is_square(disc.numerator) and is_square(disc.denominator):
                root = Fraction(isqrt(disc.numerator), isqrt(disc.denominator))
                return (-B + root) / (2 * A)
            hint = (-float(B) + float(disc) ** 0.5) / (2 * float(A))
        else:
            Bf = float(B_rat) + 2 * float(wq)
            disc_f = Bf * Bf - 4 * float(A) * float(C)
            hint = (-Bf + disc_f**0.5) / (2 * float(A))
        return _shrink_into(lambda t: q_negative(e, wq, t), Fraction(1, 4), hint * (1 - 1e-12))

    # right leg: worst admissible line rises from the left section end
    wf = float(wi)
    cf = float(c)
    a_end_f = -wf - cf**0.5
    a_t = -_shrink_into(lambda t: check_inside_section(-t), Fraction(1, 4), -a_end_f * (1 - 1e-12))
    t2 = positive_root_inward(a_t, wi)
    # left leg: mirror t -> -t
    b_end_f = -wf + cf**0.5
    b_t = _shrink_into(check_inside_section, Fraction(1, 4), b_end_f * (1 - 1e-12))
    t1 = -positive_root_inward(-b_t, -wi)
    assert t1 < 0 < t2
    # inward simplification keeps later big-integer work small
    if t2.denominator > 10**6:
        t2 = max(Fraction(int(t2 * 10**6), 10**6), t2 / 2)
    if t1.denominator > 10**6:
        t1 = min(-Fraction(int(-t1 * 10**6), 10**6), t1 / 2)
    return SubmaximalityWindow(axis=axis, t1=t1, t2=t2)


def guaranteed_volume(windows) -> Fraction:
    """Exact volume of the cross-polytope spanned by the window endpoints."""
    rho = len(windows) + 1
    if sorted(wdw.axis for wdw in windows) != list(range(1, rho)):
        raise WindowCountMismatch(f"need one window per axis 1..{rho - 1}")
    zeta = Fraction(1)
    for wdw in windows:
        zeta *= wdw.width()
    fact = 1
    for i in range(2, rho):
        fact *= i
    return zeta / fact


def _p0_bound(rho: int, zeta: Fraction) -> Fraction:
    from .exact import nth_root_upper

    return nth_root_upper(_SPHERE_VOL[rho] / zeta, rho - 1)


def _fp_levels(T: list[list[Fraction]]):
    """Quadratic completion for Fincke-Pohst: x^T T x = sum_i q[i][i] (x_i + sum_{j>i} mu[i][j] x_j)^2."""
    n = len(T)
    q = [row[:] for row in T]
    for i in range(n):
        assert q[i][i] > 0
        for j in range(i + 1, n):
            tmp = q[i][j]
            q[i][j] = tmp / q[i][i]
            for l in range(j, n):
                q[j][l] -= tmp * q[i][l]
    diag = [q[i][i] for i in range(n)]
    mu = [[q[i][j] for j in range(n)] for i in range(n)]
    return diag, mu


def _fp_enumerate(T: list[list[Fraction]], c: Fraction, budget: list[int]) -> Iterator[Vector]:
    """All integer x with x^T T x <= c for positive definite T, exact arithmetic."""
    n = len(T)
    diag, mu = _fp_levels(T)

    def rec(i: int, rest: Fraction, shift_next: list[Fraction], x: list[int]):
        if i < 0:
            yield tuple(x)
            return
        u = shift_next[i]
        r = rest / diag[i]
        # |x_i + u| <= sqrt(r); outward rational bound then exact trim
        num, den = r.numerator, r.denominator
        rad = Fraction(isqrt(num * den) + 1, den)
        lo = (-u - rad).__ceil__()
        hi = (-u + rad).__floor__()
        for xi in range(lo, hi + 1):
            budget[0] -= 1
            if budget[0] < 0:
                raise BudgetExceeded("candidate enumeration exceeded the node budget")
            s = xi + u
            used = diag[i] * s * s
            if used > rest:
                continue
            x[i] = xi
            nxt = [shift_next[j] + mu[j][i] * xi for j in range(i)] + shift_next[i:]
            yield from rec(i - 1, rest - used, nxt, x)
        x[i] = 0

    yield from rec(n - 1, c, [Fraction(0)] * n, [0] * n)


def _ellipsoid_matrix(S: Matrix, SL: Vector, V: Fraction) -> tuple[list[list[Fraction]], Fraction]:
    """Integer-cleared form of (P.L)^2 - V^2 P^2 <= V^2, positive definite for V < sqrt(L^2)."""
    rho = len(S)
    vn, vd = V.numerator, V.denominator
    T = [
        [Fraction(vd * vd * SL[i] * SL[j] - vn * vn * S[i][j]) for j in range(rho)]
        for i in range(rho)
    ]
    return T, Fraction(vn * vn)


@dataclass
class _CandidateScan:
    best: Fraction | None = None
    ties: list[tuple[Vector, PellSolution]] = field(default_factory=list)
    scanned: int = 0

    def offer(self, P: Vector, sol: PellSolution, value: Fraction):
        if self.best is None or value < self.best:
            self.best, self.ties = value, [(P, sol)]
        elif value == self.best and (P, sol) not in self.ties:
            self.ties.append((P, sol))


def _pruned_candidate_scan(
    S: Matrix,
    frame: HodgeFrame,
    L: Vector,
    V: Fraction,
    zeta: Fraction,
    limits: EngineLimits,
) -> _CandidateScan:
    """Minimum of pi_P(L) over the W_zeta box, computed on the sound prune."""
    rho = len(S)
    L2 = self_int(S, L)
    delta = Fraction(L2) - V * V
    assert delta > 0
    ratio = Fraction(L2) / delta
    ell_max = isqrt(ratio.numerator // ratio.denominator)
    p0b = _p0_bound(rho, zeta)
    p0b_sq = p0b * p0b
    SL = mat_vec(S, L)
    SH = mat_vec(S, reference_ample(S))
    r0 = frame.inv_num[0]
    b0_scale = Fraction(frame.d[0], frame.inv_den * frame.inv_den)

    scan = _CandidateScan()
    T, cap = _ellipsoid_matrix(S, SL, V)
    budget = [limits.fp_nodes]
    for x in _fp_enumerate(T, cap, budget):
        if all(v == 0 for v in x):
            continue
        if sum(a * b for a, b in zip(x, SH)) <= 0:
            continue
        g = 0
        for v in x:
            g = gcd(g, abs(v))
        if g != 1:
            continue
        N = self_int(S, x)
        if N <= 0 or is_square(N):
            continue
        c0 = sum(r0[j] * x[j] for j in range(rho))
        if b0_scale * c0 * c0 > p0b_sq:
            continue
        scan.scanned += 1
        sol = pell_fundamental_bounded(N, ell_max)
        if sol is None:
            continue
        value = Fraction(sol.k * sum(a * b for a, b in zip(x, SL)), sol.ell)
        if value <= V:
            scan.offer(tuple(x), sol, value)
    scan.ties.sort(key=lambda t: t[0])
    return scan


def candidate_pell_classes(S: Matrix, frame: HodgeFrame, zeta, limits: EngineLimits = DEFAULT_LIMITS) -> list[PellBound]:
    """All Pell bounds of primitive classes in the W_zeta cube (Cor. of the
    volume bound: p_0 <= (Vol(S^{rho-2}) / zeta)^(1/(rho-1)))."""
    S = as_matrix(S)
    zeta = Fraction(zeta)
    if zeta <= 0:
        raise ZetaNotPositive(f"zeta = {zeta} must be positive")
    rho = len(S)
    p0b = _p0_bound(rho, zeta)
    p0b_sq = p0b * p0b
    box = pell_box_radius(frame, p0b)
    m = box.m
    if (2 * m + 1) ** rho > limits.cube_points:
        raise BudgetExceeded(f"candidate cube radius {m} too large to scan directly")
    H = reference_ample(S)
    SH = mat_vec(S, H)
    r0 = frame.inv_num[0]
    b0_scale = Fraction(frame.d[0], frame.inv_den * frame.inv_den)
    out = []
    for x in itertools.product(range(-m, m + 1), repeat=rho):
        if sum(a * b for a, b in zip(x, SH)) <= 0:
            continue
        g = 0
        for v in x:
            g = gcd(g, abs(v))
        if g != 1:
            continue
        N = self_int(S, x)
        if N <= 0 or is_square(N):
            continue
        c0 = sum(r0[j] * x[j] for j in range(rho))
        if b0_scale * c0 * c0 > p0b_sq:
            continue
        out.append(make_pell_bound(S, x))
    out.sort(key=lambda b: b.P)
    return out


def _seed_scan(S: Matrix, frame: HodgeFrame, L: Vector, L2: int, limits: EngineLimits) -> Fraction | None:
    """Cheap scan of small-p0 Pell bounds for a better upper bound at L.

    Any Pell bound value is a genuine upper bound for eps(L), so taking the
    minimum into R is sound and widens the windows where pi_L itself is a
    poor bound (fundamental solutions near accumulation points are huge)."""
    rho = len(S)
    SL = mat_vec(S, L)
    SH = mat_vec(S, reference_ample(S))
    best: Fraction | None = None
    for cap in limits.seed_caps:
        box = pell_box_radius(frame, Fraction(cap))
        m = box.m
        if (2 * m + 1) ** rho > 400_000:
            break
        for x in itertools.product(range(-m, m + 1), repeat=rho):
            if sum(a * b for a, b in zip(x, SH)) <= 0:
                continue
            g = 0
            for v in x:
                g = gcd(g, abs(v))
            if g != 1:
                continue
            N = self_int(S, x)
            if N <= 0 or is_square(N):
                continue
            sol = pell_fundamental_bounded(N, limits.seed_ell_cap)
            if sol is None:
                continue
            val = Fraction(sol.k * sum(a * b for a, b in zip(x, SL)), sol.ell)
            if val * val < L2 and (best is None or val < best):
                best = val
        if best is not None and best * best * 512 <= L2 * 511:
            break
    return best


def _windows_and_candidates(
    S: Matrix,
    frame: HodgeFrame,
    L: Vector,
    R: Fraction,
    limits: EngineLimits,
) -> tuple[_CandidateScan, Fraction]:
    windows = [submaximality_window(frame, L, R, i) for i in range(1, frame.rho)]
    zeta = guaranteed_volume(windows)
    scan = _pruned_candidate_scan(S, frame, L, R, zeta, limits)
    return scan, zeta


def seshadri_constant(S: Matrix, L, *, verify: bool = True, limits: EngineLimits = DEFAULT_LIMITS) -> SeshadriResult:
    """Exact Seshadri constant and witnessing curves of a rational nef class."""
    S = as_matrix(S)
    validate_matrix(S)
    rho = len(S)
    coords = _rational_vector(L)
    if len(coords) != rho:
        raise NotNef(f"class length {len(coords)} does not match rho={rho}")

    den = 1
    for x in coords:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = tuple(int(x * den) for x in coords)
    if all(x == 0 for x in ints):
        return SeshadriResult(
            value=QuadValue(0),
            attained_by=(SQRT_BOUND,),
            curves=(),
            candidates_scanned=0,
            diagnostics={"branch": "zero-class"},
        )
    prim, g = primitive_part(ints)
    scale = Fraction(g, den)

    H = reference_ample(S)
    cls = positivity_class(S, H, prim)
    if cls is Positivity.NOT_NEF:
        raise NotNef(f"{tuple(coords)} is not nef")

    N = self_int(S, prim)
    if N == 0:
        cov = tuple(Fraction(x) for x in mat_vec(S, prim))
        curve = SeshadriCurve(kind=ELLIPTIC, cls=prim, pell=None, cov=cov, verified=None)
        return SeshadriResult(
            value=QuadValue(0),
            attained_by=(ELLIPTIC,),
            curves=(curve,),
            candidates_scanned=0,
            diagnostics={"branch": "boundary"},
        )

    frame = diagonalize(S)
    ell = eps_elliptic_submaximal(S, prim)
    diagnostics: dict = {}
    square_branch = is_square(N)
    if square_branch:
        R0 = Fraction(2 * N - 1, 2 * isqrt(N))
        sol_L = None
        if ell is None:
            diagnostics["branch"] = "perfect-square"
            diagnostics["hypothesis_R"] = R0
    else:
        sol_L = pell_fundamental(N)
        R0 = Fraction(sol_L.k * N, sol_L.ell)
    R = R0 if ell is None else min(R0, Fraction(ell.value))

    if R * R * 512 > 511 * N:
        seed = _seed_scan(S, frame, prim, N, limits)
        if seed is not None and seed < R:
            R = seed
            diagnostics["seed_R"] = seed

    scan, zeta = _windows_and_candidates(S, frame, prim, R, limits)
    if sol_L is not None:
        scan.offer(prim, sol_L, R0)
    diagnostics["zeta"] = zeta

    sqrt_val = QuadValue.sqrt_of(N)
    choices: list[QuadValue] = [sqrt_val]
    if ell is not None:
        choices.append(QuadValue(ell.value))
    if scan.best is not None:
        choices.append(QuadValue(scan.best))
    value = min(choices)

    attained: list[str] = []
    curves: list[SeshadriCurve] = []
    if ell is not None and QuadValue(ell.value) == value:
        attained.append(ELLIPTIC)
        for E in ell.minimizers:
            cov = tuple(Fraction(x) for x in mat_vec(S, E))
            curves.append(SeshadriCurve(kind=ELLIPTIC, cls=E, pell=None, cov=cov, verified=None))
    if scan.best is not None and QuadValue(scan.best) == value and value < sqrt_val:
        attained.append(AMPLE)
        for P, sol in scan.ties:
            cov = tuple(Fraction(sol.k, sol.ell) * x for x in mat_vec(S, P))
            flag = verify_ample_curve(S, P, limits=limits) if verify else None
            curves.append(SeshadriCurve(kind=AMPLE, cls=P, pell=sol, cov=cov, verified=flag))
    if value == sqrt_val:
        attained.append(SQRT_BOUND)

    return SeshadriResult(
        value=QuadValue(scale) * value,
        attained_by=tuple(attained),
        curves=tuple(curves),
        candidates_scanned=scan.scanned,
        diagnostics=diagnostics,
    )


def verify_ample_curve(S: Matrix, P, limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    """Decide whether pi_P is realized by an irreducible submaximal curve:
    true iff pi_P(P) is the unique strict minimum among all candidate Pell
    bounds and all elliptic degrees at P."""
    S = as_matrix(S)
    bound = make_pell_bound(S, P)
    P = bound.P
    target = bound.value_at_p()
    ell = eps_elliptic_submaximal(S, P)
    if ell is not None and Fraction(ell.value) <= target:
        return False
    frame = diagonalize(S)
    scan, _ = _windows_and_candidates(S, frame, P, target, limits)
    for other, _sol in scan.ties:
        if other != P:
            return False
    if scan.best is not None and scan.best < target:
        return False
    return True


def transport_curve(curve: SeshadriCurve, psi: IsometryMap) -> SeshadriCurve:
    """Image of a Seshadri curve under a validated cone-preserving isometry.

    Pell data depends only on the self-intersection, which psi preserves, so
    kind, (ell, k) and the verified flag carry over."""
    S = psi.S
    new_cls = psi.apply(curve.cls)
    if curve.kind == AMPLE:
        r = Fraction(curve.pell.k, curve.pell.ell)
        cov = tuple(r * x for x in mat_vec(S, new_cls))
    else:
        cov = tuple(Fraction(x) for x in mat_vec(S, new_cls))
    return SeshadriCurve(kind=curve.kind, cls=new_cls, pell=curve.pell, cov=cov, verified=curve.verified)
