"""Exact arithmetic helpers: quadratic irrationals q*sqrt(n) and sums thereof.

Every epsilon value, cross-section coordinate and breakpoint in this package
is either rational or of the form q*sqrt(n) with q rational and n squarefree.
QuadValue keeps that canonical shape; RadicalSum handles the few places where
values with different radicands must be added and compared (envelope chords,
window certification).  All comparisons are exact: squarefree radicands make
equality syntactic, and sums of distinct radicals are nonzero unless all
coefficients vanish, so interval refinement always terminates with a sign.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) * isqrt(n) == n


@lru_cache(maxsize=None)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return (s, m) with n = s*s*m and m squarefree (n >= 0).

    Trial division by primes up to 10^4, then a perfect-square check; the
    leftover cofactor has no prime factor below 10^4, so below 10^12 it is
    either a perfect square or already squarefree.
    """
    if n < 0:
        raise ValueError("radicand must be non-negative")
    if n in (0, 1):
        return 1, n
    s, m = 1, n
    p = 2
    while p * p <= m and p <= 10_000:
        p2 = p * p
        while m % p2 == 0:
            m //= p2
            s *= p
        if m % p == 0:
            m //= p
            rest_s, rest_m = squarefree_decompose(m)
            return s * rest_s, p * rest_m
        p += 1 if p == 2 else 2
    r = isqrt(m)
    if r * r == m:
        return s * r, 1
    if m < 10**12:
        return s, m
    # rare: keep dividing past the fast-path cutoff
    while p * p <= m:
        p2 = p * p
        while m % p2 == 0:
            m //= p2
            s *= p
        if m % p == 0:
            m //= p
            rest_s, rest_m = squarefree_decompose(m)
            return s * rest_s, p * rest_m
        p += 2
    return s, m


def sqrt_lower(x: Fraction, digits: int = 30) -> Fraction:
    """Rational lower bound for sqrt(x), within 10**-digits."""
    if x < 0:
        raise ValueError("negative radicand")
    n, d = x.numerator, x.denominator
    k = 10**digits
    return Fraction(isqrt(n * d * k * k), d * k)


def sqrt_upper(x: Fraction, digits: int = 30) -> Fraction:
    if x < 0:
        raise ValueError("negative radicand")
    n, d = x.numerator, x.denominator
    k = 10**digits
    r = isqrt(n * d * k * k)
    if r * r != n * d * k * k:
        r += 1
    return Fraction(r, d * k)


def iroot(m: int, k: int) -> int:
    """Floor of the k-th root of m >= 0 (binary search; safe for big ints)."""
    if m < 0 or k < 1:
        raise ValueError
    if m < 2 or k == 1:
        return m
    lo, hi = 0, 1 << (m.bit_length() // k + 2)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= m:
            lo = mid
        else:
            hi = mid - 1
    return lo


def nth_root_upper(x: Fraction, k: int) -> Fraction:
    """Rational upper bound for x**(1/k), x >= 0."""
    if x < 0:
        raise ValueError
    n, d = x.numerator, x.denominator
    r = iroot(n * d ** (k - 1), k)
    if r**k != n * d ** (k - 1):
        r += 1
    return Fraction(r, d)


def frac_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


class QuadValue:
    """Exact value q*sqrt(n), q rational, n squarefree (n == 1 iff rational)."""

    __slots__ = ("q", "n")

    def __init__(self, q, n: int = 1):
        q = Fraction(q)
        if n < 0:
            raise ValueError("radicand must be non-negative")
        if n == 0:
            q, n = Fraction(0), 1
        else:
            s, n = squarefree_decompose(n)
            q *= s
        if q == 0:
            n = 1
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *a):
        raise AttributeError("QuadValue is immutable")

    @staticmethod
    def sqrt_of(x) -> "QuadValue":
        """Exact sqrt of a non-negative rational."""
        x = Fraction(x)
        if x < 0:
            raise ValueError("negative radicand")
        # sqrt(p/q) = sqrt(p*q)/q
        return QuadValue(Fraction(1, x.denominator), x.numerator * x.denominator)

    @property
    def is_rational(self) -> bool:
        return self.n == 1

    def as_fraction(self) -> Fraction:
        if self.n != 1:
            raise ValueError(f"{self!r} is irrational")
        return self.q

    def square(self) -> Fraction:
        return self.q * self.q * self.n

    def sign(self) -> int:
        return (self.q > 0) - (self.q < 0)

    def __float__(self) -> float:
        return float(self.q) * float(self.n) ** 0.5

    def __bool__(self) -> bool:
        return self.q != 0

    def __neg__(self) -> "QuadValue":
        return QuadValue(-self.q, self.n)

    def __abs__(self) -> "QuadValue":
        return QuadValue(abs(self.q), self.n)

    @staticmethod
    def _coerce(other):
        if isinstance(other, QuadValue):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadValue(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.q == 0:
            return o
        if o.q == 0:
            return self
        if self.n != o.n:
            raise ArithmeticError("mixed radicands; use RadicalSum")
        return QuadValue(self.q + o.q, self.n)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadValue(self.q * o.q, self.n * o.n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.q == 0:
            raise ZeroDivisionError
        # (a sqrt(m)) / (b sqrt(n)) = (a / (b n)) sqrt(m n)
        return QuadValue(self.q / (o.q * o.n), self.n * o.n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare QuadValue with {type(other)}")
        if self.n == o.n:
            return (self.q > o.q) - (self.q < o.q)
        sa, sb = self.sign(), o.sign()
        if sa != sb:
            return (sa > sb) - (sa < sb)
        if sa == 0:
            return 0
        d = self.square() - o.square()
        mag = (d > 0) - (d < 0)
        return mag if sa > 0 else -mag

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.q == o.q and self.n == o.n

    def __hash__(self):
        if self.n == 1:
            return hash(self.q)
        return hash((self.q, self.n))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __repr__(self):
        if self.n == 1:
            return f"QuadValue({frac_str(self.q)})"
        return f"QuadValue({frac_str(self.q)}*sqrt({self.n}))"

    def lower(self, digits: int = 30) -> Fraction:
        """Rational lower bound."""
        if self.n == 1:
            return self.q
        r = sqrt_lower(Fraction(self.n), digits) if self.q > 0 else sqrt_upper(Fraction(self.n), digits)
        return self.q * r

    def upper(self, digits: int = 30) -> Fraction:
        if self.n == 1:
            return self.q
        r = sqrt_upper(Fraction(self.n), digits) if self.q > 0 else sqrt_lower(Fraction(self.n), digits)
        return self.q * r

    def to_dict(self) -> dict:
        return {"q": frac_str(self.q), "n": self.n}

    @staticmethod
    def from_dict(d: dict) -> "QuadValue":
        return QuadValue(parse_frac(d["q"]), int(d["n"]))


ZERO = QuadValue(0)
ONE = QuadValue(1)


class RadicalSum:
    """Exact finite sum of terms q_i * sqrt(n_i) with distinct squarefree n_i."""

    __slots__ = ("terms",)

    def __init__(self, *values):
        terms: dict[int, Fraction] = {}
        for v in values:
            if isinstance(v, RadicalSum):
                for n, q in v.terms.items():
                    terms[n] = terms.get(n, Fraction(0)) + q
            else:
                if not isinstance(v, QuadValue):
                    v = QuadValue(v)
                if v.q:
                    terms[v.n] = terms.get(v.n, Fraction(0)) + v.q
        object.__setattr__(self, "terms", {n: q for n, q in terms.items() if q})

    def __setattr__(self, *a):
        raise AttributeError("RadicalSum is immutable")

    def __add__(self, other):
        return RadicalSum(self, other)

    __radd__ = __add__

    def __neg__(self):
        out = RadicalSum()
        object.__setattr__(out, "terms", {n: -q for n, q in self.terms.items()})
        return out

    def __sub__(self, other):
        return RadicalSum(self, -RadicalSum(other))

    def __rsub__(self, other):
        return RadicalSum(other, -self)

    def scale(self, c) -> "RadicalSum":
        c = Fraction(c)
        out = RadicalSum()
        if c:
            object.__setattr__(out, "terms", {n: q * c for n, q in self.terms.items()})
        return out

    def __float__(self):
        return sum(float(q) * n**0.5 for n, q in self.terms.items())

    def is_zero(self) -> bool:
        # sqrt of distinct squarefree integers are linearly independent over Q
        return not self.terms

    def as_quadvalue(self) -> QuadValue:
        if not self.terms:
            return ZERO
        if len(self.terms) == 1:
            ((n, q),) = self.terms.items()
            return QuadValue(q, n)
        raise ValueError(f"{self!r} is not a single radical")

    def sign(self) -> int:
        if not self.terms:
            return 0
        items = list(self.terms.items())
        if len(items) == 1:
            q = items[0][1]
            return 1 if q > 0 else -1
        if all(q > 0 for _, q in items):
            return 1
        if all(q < 0 for _, q in items):
            return -1
        if len(items) == 2:
            (n1, q1), (n2, q2) = items
            # exactly one positive term; compare squares
            d = q1 * q1 * n1 - q2 * q2 * n2
            big_first = d > 0  # d == 0 impossible: distinct squarefree radicands
            return 1 if (q1 > 0) == big_first else -1
        digits = 30
        while digits <= 10000:
            lo = sum(QuadValue(q, n).lower(digits) for n, q in items)
            hi = sum(QuadValue(q, n).upper(digits) for n, q in items)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            digits *= 2
        raise RuntimeError(f"sign refinement did not converge for {self!r}")

    def _cmp(self, other) -> int:
        return (self - RadicalSum(other)).sign()

    def __eq__(self, other):
        if isinstance(other, (RadicalSum, QuadValue, int, Fraction)):
            return (self - RadicalSum(other)).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __repr__(self):
        if not self.terms:
            return "RadicalSum(0)"
        parts = [f"{frac_str(q)}*sqrt({n})" if n != 1 else frac_str(q) for n, q in sorted(self.terms.items())]
        return f"RadicalSum({' + '.join(parts)})"
