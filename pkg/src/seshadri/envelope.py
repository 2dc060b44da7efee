"""Certified plots of the Seshadri function t -> eps(B0 + t B1) for rho = 2.

Internally the section is parameterized by the rational slope xi with class
U (1, xi): on that parameter every curve functional divided by a_0 is the
QuadValue (p + q xi) * sqrt(m) with a fixed radicand m, so attainment tests
and curve crossings are exact and crossings are rational.  Certification uses
the concavity sandwich: a linear function that is >= eps everywhere and equals
eps at two points equals eps between them, so a curve attaining at two
evaluated points owns the whole interval.  Gaps that resist closure are
refined by bisection and reported at resolution delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log2

from .engine import (
    DEFAULT_LIMITS,
    ELLIPTIC,
    EngineLimits,
    SeshadriCurve,
    seshadri_constant,
)
from .errors import BudgetExceeded, GridPointNotNef, UnknownFormat, WrongRho
from .exact import QuadValue, frac_str
from .frame import HodgeFrame, diagonalize, rational_ray_class, sqrt_d_ratio
from .lattice import Matrix, as_matrix, validate_matrix

CurveKey = tuple[str, tuple[int, ...]]


@dataclass(frozen=True)
class Segment:
    curve: SeshadriCurve
    t_lo: QuadValue
    t_hi: QuadValue
    certified: bool
    c0: QuadValue  # functional on the section: t -> c0 + c1 t
    c1: QuadValue

    def eps_at(self, t) -> float:
        return float(self.c0) + float(self.c1) * float(t)


@dataclass(frozen=True)
class GapReport:
    delta: Fraction
    uncovered: tuple[tuple[Fraction, Fraction], ...]
    segment_count: int

    def to_dict(self) -> dict:
        return {
            "delta": frac_str(self.delta),
            "uncovered": [[frac_str(lo), frac_str(hi)] for lo, hi in self.uncovered],
            "segment_count": self.segment_count,
        }


@dataclass(frozen=True)
class SectionAffine:
    """Functional / a_0 on the xi parameterization: xi -> (p + q xi) sqrt(m)."""

    p: Fraction
    q: Fraction
    m: int

    def at(self, xi: Fraction) -> QuadValue:
        return QuadValue(self.p + self.q * xi, self.m)


def curve_functional_on_section(frame: HodgeFrame, curve: SeshadriCurve):
    """Exact coefficients (c0, c1) of curve.functional(B0 + t B1), rho = 2."""
    if frame.rho != 2:
        raise WrongRho("section functionals are a rho=2 notion")
    c = []
    for j in (0, 1):
        uj = tuple(frame.U[i][j] for i in range(2))
        val = sum((f * x for f, x in zip(curve.cov, uj)), Fraction(0))
        c.append(QuadValue(Fraction(val, frame.d[j]), frame.d[j]))
    return c[0], c[1]


def _section_affine(frame: HodgeFrame, curve: SeshadriCurve) -> SectionAffine:
    # functional(U (1, xi)) / sqrt(d0) = (cov.u0 + cov.u1 xi) / sqrt(d0)
    u0 = tuple(frame.U[i][0] for i in range(2))
    u1 = tuple(frame.U[i][1] for i in range(2))
    a = sum((f * x for f, x in zip(curve.cov, u0)), Fraction(0))
    b = sum((f * x for f, x in zip(curve.cov, u1)), Fraction(0))
    d0 = frame.d[0]
    return SectionAffine(p=Fraction(a, d0), q=Fraction(b, d0), m=d0)


@dataclass
class _PointEval:
    xi: Fraction
    value_bar: QuadValue | None  # eps divided by a_0; None if the engine gave up
    witnesses: tuple[SeshadriCurve, ...]


class _Builder:
    def __init__(self, S: Matrix, delta: Fraction, limits: EngineLimits, max_evals: int):
        self.S = S
        self.frame = diagonalize(S)
        if self.frame.rho != 2:
            raise WrongRho(f"plotting needs rho=2, got {self.frame.rho}")
        self.delta = delta
        self.limits = limits
        self.max_evals = max_evals
        self.s = sqrt_d_ratio(self.frame)  # t = xi / s
        self.s_sq = Fraction(self.frame.d[0], self.frame.d[1])
        self.evals: dict[Fraction, _PointEval] = {}
        self.failed: set[Fraction] = set()
        self.pool: dict[CurveKey, tuple[SeshadriCurve, SectionAffine]] = {}

    # -- parameterization ---------------------------------------------------
    def xi_of_t(self, t: Fraction) -> Fraction:
        if self.s.is_rational:
            return t * self.s.as_fraction()
        xi = Fraction(float(t) * float(self.s)).limit_denominator(10**7)
        while xi * xi > self.s_sq:
            xi = xi * Fraction(999999, 1000000)
        return xi

    def t_of_xi(self, xi: Fraction) -> QuadValue:
        return QuadValue(xi) / self.s

    def in_domain(self, xi: Fraction) -> bool:
        return xi * xi <= self.s_sq

    # -- evaluation ---------------------------------------------------------
    def evaluate(self, xi: Fraction) -> _PointEval | None:
        if xi in self.evals:
            return self.evals[xi]
        if xi in self.failed or len(self.evals) >= self.max_evals:
            return None
        cls = rational_ray_class(self.frame, xi)
        try:
            res = seshadri_constant(self.S, cls, verify=False, limits=self.limits)
        except BudgetExceeded:
            self.failed.add(xi)
            return None
        a0 = self.frame.b0(cls)
        pe = _PointEval(xi=xi, value_bar=res.value / a0, witnesses=res.curves)
        self.evals[xi] = pe
        for cu in res.curves:
            key = (cu.kind, cu.cls)
            if key not in self.pool:
                self.pool[key] = (cu, _section_affine(self.frame, cu))
        return pe

    # -- assembly -----------------------------------------------------------
    def attained_map(self) -> dict[CurveKey, list[Fraction]]:
        out: dict[CurveKey, list[Fraction]] = {k: [] for k in self.pool}
        for xi in sorted(self.evals):
            pe = self.evals[xi]
            for key, (_cu, aff) in self.pool.items():
                if aff.at(xi) == pe.value_bar:
                    out[key].append(xi)
        return out

    def certified_intervals(self) -> list[tuple[Fraction, Fraction, CurveKey]]:
        ivals = []
        for key, xs in self.attained_map().items():
            if len(xs) >= 2:
                ivals.append((xs[0], xs[-1], key))
        ivals.sort()
        return ivals

    def gaps(self, ivals) -> list[tuple[Fraction | None, Fraction | None, CurveKey | None, CurveKey | None]]:
        """Uncovered open intervals as (lo, hi, left_curve, right_curve); None
        endpoint means the (possibly irrational) domain edge."""
        out = []
        cur: Fraction | None = None  # None = at left edge
        cur_key: CurveKey | None = None
        edge_lo = -self.s.as_fraction() if self.s.is_rational else None
        edge_hi = self.s.as_fraction() if self.s.is_rational else None
        pos = edge_lo
        for lo, hi, key in ivals:
            if pos is None or lo > pos:
                out.append((pos, lo, cur_key, key))
            if pos is None or hi > pos:
                pos, cur_key = hi, key
        if pos is None:
            out.append((None, None, None, None))
        elif edge_hi is None or pos < edge_hi:
            out.append((pos, edge_hi, cur_key, None))
        return [g for g in out if self._gap_open(g)]

    def _gap_open(self, g) -> bool:
        lo, hi, _, _ = g
        if lo is None or hi is None:
            return True
        return lo < hi

    def gap_t_length_at_least(self, g, thresh: Fraction) -> bool:
        lo, hi, _, _ = g
        if lo is None:
            lo = -self._edge_rational(False)
        if hi is None:
            hi = self._edge_rational(True)
        if hi <= lo:
            return False
        # length in t is (hi - lo)/s
        return QuadValue(hi - lo) >= QuadValue(thresh) * self.s

    def _edge_rational(self, upper: bool) -> Fraction:
        if self.s.is_rational:
            return self.s.as_fraction()
        return self.s.upper(20) if upper else self.s.lower(20)

    def _probe_point(self, g) -> Fraction | None:
        lo, hi, lk, rk = g
        lo_r = lo if lo is not None else -self._edge_rational(False)
        hi_r = hi if hi is not None else self._edge_rational(True)
        if lk is not None and rk is not None and lk != rk:
            cross = self._crossing(lk, rk)
            if cross is not None and lo_r < cross < hi_r and cross not in self.evals and cross not in self.failed:
                return cross
        mid = (lo_r + hi_r) / 2
        mid = mid.limit_denominator(10**9)
        if not (lo_r < mid < hi_r):
            mid = (lo_r + hi_r) / 2
        while not self.in_domain(mid):
            mid = mid * Fraction(9999, 10000)
        if mid in self.evals or mid in self.failed:
            return None
        return mid

    def _crossing(self, k1: CurveKey, k2: CurveKey) -> Fraction | None:
        a1, a2 = self.pool[k1][1], self.pool[k2][1]
        if a1.m != a2.m or a1.q == a2.q:
            return None
        return (a2.p - a1.p) / (a1.q - a2.q)

    def refine(self, rounds: int):
        for _ in range(rounds):
            ivals = self.certified_intervals()
            open_gaps = [g for g in self.gaps(ivals) if self.gap_t_length_at_least(g, self.delta)]
            if not open_gaps:
                return
            progress = False
            for g in open_gaps:
                probe = self._probe_point(g)
                if probe is None:
                    continue
                if self.evaluate(probe) is not None:
                    progress = True
            if not progress:
                return

    def build(self) -> tuple[list[Segment], GapReport]:
        ivals = self.certified_intervals()
        segments = []
        for lo, hi, key in ivals:
            cu, _aff = self.pool[key]
            c0, c1 = curve_functional_on_section(self.frame, cu)
            segments.append(
                Segment(
                    curve=cu,
                    t_lo=self.t_of_xi(lo),
                    t_hi=self.t_of_xi(hi),
                    certified=True,
                    c0=c0,
                    c1=c1,
                )
            )
        segments.sort(key=lambda s: (float(s.t_lo), float(s.t_hi)))
        uncovered = []
        for g in self.gaps(ivals):
            if not self.gap_t_length_at_least(g, self.delta):
                continue
            lo, hi, _, _ = g
            lo_t = (
                Fraction(-1)
                if lo is None
                else (self.t_of_xi(lo).as_fraction() if self.t_of_xi(lo).is_rational else (QuadValue(lo) / self.s).lower(20))
            )
            hi_t = (
                Fraction(1)
                if hi is None
                else (self.t_of_xi(hi).as_fraction() if self.t_of_xi(hi).is_rational else (QuadValue(hi) / self.s).upper(20))
            )
            uncovered.append((lo_t, hi_t))
        report = GapReport(delta=self.delta, uncovered=tuple(uncovered), segment_count=len(segments))
        return segments, report


def default_rounds(delta: Fraction) -> int:
    return 4 + 3 * ceil(log2(max(2.0, 1.0 / float(delta))))


def build_envelope(
    S,
    t_grid,
    *,
    delta=Fraction(1, 100),
    limits: EngineLimits = DEFAULT_LIMITS,
    max_evals: int = 900,
    rounds: int | None = None,
) -> tuple[list[Segment], GapReport]:
    """Certified segments of the section Seshadri function plus a gap report.

    Evaluates eps at every grid point, certifies each curve between its
    attained points, closes gaps at exact curve crossings, then bisects
    remaining gaps; gaps of t-length below delta are dropped from the report.
    """
    S = as_matrix(S)
    validate_matrix(S)
    delta = Fraction(delta)
    b = _Builder(S, delta, limits, max_evals)
    for t in t_grid:
        t = Fraction(t)
        if t * t > 1:
            raise GridPointNotNef(f"grid point {t} lies outside [-1, 1]")
        b.evaluate(b.xi_of_t(t))
    b.refine(rounds if rounds is not None else default_rounds(delta))
    return b.build()


# -- emission ----------------------------------------------------------------


def _fmt(x) -> str:
    return f"{float(x):.12g}"


def _csv(segments, report: GapReport) -> bytes:
    lines = ["t_lo,t_hi,eps_lo,eps_hi,kind,class,ell,k,certified"]
    for s in segments:
        lines.append(
            ",".join(
                [
                    _fmt(s.t_lo),
                    _fmt(s.t_hi),
                    _fmt(s.eps_at(s.t_lo)),
                    _fmt(s.eps_at(s.t_hi)),
                    s.curve.kind,
                    ":".join(str(x) for x in s.curve.cls),
                    str(s.curve.pell.ell) if s.curve.pell else "",
                    str(s.curve.pell.k) if s.curve.pell else "",
                    str(s.certified).lower(),
                ]
            )
        )
    for lo, hi in report.uncovered:
        lines.append(f"gap,{_fmt(lo)},{_fmt(hi)}")
    return ("\n".join(lines) + "\n").encode()


def _svg(segments, report: GapReport) -> bytes:
    W, H = 800, 500
    pad = 40

    def px(t: float) -> float:
        return pad + (t + 1) / 2 * (W - 2 * pad)

    def py(e: float) -> float:
        return H - pad - e * (H - 2 * pad) / 1.1

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
        f'<rect width="{W}" height="{H}" fill="white"/>',
    ]
    pts = []
    for i in range(201):
        t = -1 + i / 100
        pts.append(f"{px(t):.2f},{py((1 - t * t) ** 0.5):.2f}")
    parts.append(f'<polyline points="{" ".join(pts)}" fill="none" stroke="black" stroke-dasharray="6 4"/>')
    for lo, hi in report.uncovered:
        parts.append(
            f'<rect x="{px(float(lo)):.2f}" y="{pad}" width="{max(px(float(hi)) - px(float(lo)), 1.0):.2f}" '
            f'height="{H - 2 * pad}" fill="#fbb" fill-opacity="0.4"/>'
        )
    for s in segments:
        x1, x2 = float(s.t_lo), float(s.t_hi)
        y1, y2 = s.eps_at(s.t_lo), s.eps_at(s.t_hi)
        parts.append(
            f'<line x1="{px(x1):.2f}" y1="{py(y1):.2f}" x2="{px(x2):.2f}" y2="{py(y2):.2f}" '
            f'stroke="blue" stroke-width="1.5"/>'
        )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode()


def _tikz(segments, report: GapReport) -> bytes:
    lines = [
        "% Seshadri function section plot",
        "\\begin{tikzpicture}[x=3.3cm,y=2cm]",
        "\\draw[->] (-1.05,0) -- (1.05,0) node[right] {$t$};",
        "\\draw[->] (0,0) -- (0,1.2);",
        "\\draw[dashed, domain=-1:1, samples=200] plot (\\x, {sqrt(1-\\x*\\x)});",
    ]
    for s in segments:
        lines.append(
            f"\\draw ({_fmt(s.t_lo)},{_fmt(s.eps_at(s.t_lo))}) -- ({_fmt(s.t_hi)},{_fmt(s.eps_at(s.t_hi))});"
        )
    for lo, hi in report.uncovered:
        lines.append(f"% gap ({_fmt(lo)}, {_fmt(hi)})")
    lines.append("\\end{tikzpicture}")
    return ("\n".join(lines) + "\n").encode()


def emit_plot(segments, report: GapReport, fmt: str) -> bytes:
    """Serialize segments and gaps; csv/svg/tikz, byte-deterministic."""
    if fmt == "csv":
        return _csv(segments, report)
    if fmt == "svg":
        return _svg(segments, report)
    if fmt == "tikz":
        return _tikz(segments, report)
    raise UnknownFormat(f"unknown plot format {fmt!r}")
