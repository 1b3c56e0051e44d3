"""Lazy exact real numbers as accuracy-queried interval oracles.

A ``CReal`` maps a requested accuracy ``p`` to a dyadic interval of
width at most ``2**-p`` containing the represented value.  Arithmetic
is precision iteration: operands are evaluated at geometrically
increasing internal accuracy until the combined interval meets the
requested width.  Comparison is semi-decidable and returns a lazy
Kleenean; equality on the diagonal stays bottom forever.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .dyadic import Dyadic, ZERO
from .errors import DivisorStraddlesZero, EffortExhausted
from .interval import Interval
from .kleenean import (
    BOTTOM,
    FALSE,
    TRUE,
    Branch,
    LazyKleenean,
    resolve_budget,
    select,
)

Number = "CReal | Dyadic | Fraction | int"


class CReal:
    """An exact real: ``approx(p)`` yields an interval of width <= 2**-p.

    Queries are idempotent; each value caches its best interval so far
    and answers coarser queries from the cache.
    """

    __slots__ = ("_fn", "_best_p", "_best")

    def __init__(self, fn: Callable[[int], Interval]):
        self._fn = fn
        self._best_p = -1
        self._best: Interval | None = None

    def approx(self, p: int) -> Interval:
        p = max(p, 0)
        if self._best_p >= p:
            return self._best
        iv = self._fn(p)
        if self._best is not None:
            # both intervals contain the value; keep them consistent
            iv = iv.intersect(self._best)
        self._best_p = p
        self._best = iv
        return iv

    # -- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "CReal":
        return cls.from_dyadic(Dyadic(n))

    @classmethod
    def from_dyadic(cls, d: Dyadic) -> "CReal":
        point = Interval.point(d)
        return cls(lambda p: point)

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "CReal":
        den = fr.denominator
        if den & (den - 1) == 0:
            return cls.from_dyadic(Dyadic(fr.numerator, -(den.bit_length() - 1)))
        num = fr.numerator

        def fn(p: int) -> Interval:
            k = p + 2
            lo = (num << k) // den
            return Interval(Dyadic(lo, -k), Dyadic(lo + 1, -k))

        return cls(fn)

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "CReal":
        if isinstance(value, CReal):
            return value
        if isinstance(value, int):
            return CReal.from_int(value)
        if isinstance(value, Dyadic):
            return CReal.from_dyadic(value)
        if isinstance(value, Fraction):
            return CReal.from_fraction(value)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _binary(self, other, lambda a, b, q: a + b, "addition")

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _binary(self, other, lambda a, b, q: a - b, "subtraction")

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _binary(self, other, lambda a, b, q: a * b, "multiplication")

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _binary(self, other, _div_intervals, "division")

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return CReal(lambda p: -self.approx(p))

    def scale2(self, k: int) -> "CReal":
        """Exact multiplication by ``2**k``."""
        if k == 0:
            return self
        return CReal(lambda p: self.approx(max(0, p + k)).scale2(k))

    # -- comparison ---------------------------------------------------

    def lt(self, other) -> LazyKleenean:
        return less_than(self, self._coerce(other))

    def gt(self, other) -> LazyKleenean:
        return less_than(self._coerce(other), self)

    # -- output -------------------------------------------------------

    def to_decimal(self, digits: int) -> str:
        return to_decimal(self, digits)


def _refined(
    p: int,
    raw: Callable[[int], Interval],
    budget: "int | None",
    what: str,
) -> Interval:
    """Precision iteration: retry ``raw`` at doubling internal accuracy
    until the result is tight enough, then round onto the 2**-(p+2)
    grid to keep mantissas bounded."""
    budget = resolve_budget(budget)
    target = Dyadic(1, -(p + 1))
    q = p + 4
    while True:
        try:
            iv = raw(q)
            if iv.width() <= target:
                return iv.round_out_grid(p + 2)
        except DivisorStraddlesZero:
            pass
        if q >= budget:
            raise EffortExhausted(budget, what)
        q = min(budget, 2 * q)


def _binary(x: CReal, y: CReal, combine, what: str, budget: int | None = None):
    def fn(p: int) -> Interval:
        return _refined(p, lambda q: combine(x.approx(q), y.approx(q), q), budget, what)

    return CReal(fn)


def _div_intervals(a: Interval, b: Interval, q: int) -> Interval:
    if b.straddles_zero():
        raise DivisorStraddlesZero(f"divisor {b} contains zero")
    # enough significant bits that relative rounding error stays below 2**-(q+2)
    num_mag = max(_mag_exp(a.lo), _mag_exp(a.hi))
    den_mag = min(_mag_exp(b.lo), _mag_exp(b.hi)) - 1
    bits = max(8, q + 4 + num_mag - den_mag)
    return a.div(b, bits)


def _mag_exp(d: Dyadic) -> int:
    """Smallest e with |d| <= 2**e (0 for zero)."""
    if d.mantissa == 0:
        return 0
    return abs(d.mantissa).bit_length() + d.exponent


# -- comparison and splitting -----------------------------------------


def less_than(x: CReal, y: CReal) -> LazyKleenean:
    """Semi-decidable order: true iff x < y, false iff y < x, bottom
    forever when x = y."""

    def fn(n: int):
        xi = x.approx(n)
        yi = y.approx(n)
        if xi.hi < yi.lo:
            return TRUE
        if yi.hi < xi.lo:
            return FALSE
        return BOTTOM

    return LazyKleenean(fn)


def split(x, y, eps, budget: int | None = None) -> Branch:
    """Approximate splitting: Left certifies x < y + eps, Right
    certifies y < x + eps.  Requires eps > 0."""
    x = CReal._coerce(x)
    y = CReal._coerce(y)
    eps = CReal._coerce(eps)
    return select(less_than(x, y + eps), less_than(y, x + eps), budget)


# -- limits ------------------------------------------------------------


def limit(f: Callable[[int], CReal]) -> CReal:
    """Limit of a fast Cauchy sequence: |f(n) - lim| <= 2**-n.

    The sequence is queried once per index and memoized, so stateful
    generators (refinement loops) see a consistent history.
    """
    memo: dict[int, CReal] = {}

    def term(n: int) -> CReal:
        if n not in memo:
            memo[n] = f(n)
        return memo[n]

    def fn(p: int) -> Interval:
        iv = term(p + 2).approx(p + 2).widen(Dyadic(1, -(p + 2)))
        return iv.round_out_grid(p + 3)

    return CReal(fn)


def limit_refine(seed: CReal, seed_hint, step) -> CReal:
    """Limit of a self-refining nondeterministic sequence.

    ``step(n, x_n, hint_n) -> (x_{n+1}, hint_{n+1})`` must keep
    consecutive terms within 2**-(n+1); the hint records the choices
    already made so later steps stay on the same candidate.
    """
    terms: list[tuple[CReal, object]] = [(seed, seed_hint)]

    def f(n: int) -> CReal:
        while len(terms) <= n:
            k = len(terms) - 1
            terms.append(step(k, terms[k][0], terms[k][1]))
        return terms[n][0]

    return limit(f)


# -- rounding to integers and decimals ---------------------------------


def round_nd(x: CReal, budget: int | None = None) -> int:
    """Nondeterministic rounding: some integer z with z-1 < x < z+1."""
    budget = resolve_budget(budget)
    q = 2
    while True:
        iv = x.approx(q)
        # nearest integer to the midpoint
        mid = iv.midpoint()
        z = (mid + Dyadic(1, -1)).floor_to_grid(0)
        z_int = z.mantissa << max(z.exponent, 0)
        if Dyadic(z_int - 1) < iv.lo and iv.hi < Dyadic(z_int + 1):
            return z_int
        if q >= budget:
            raise EffortExhausted(budget, "rounding to an integer")
        q = min(budget, 2 * q)


def dyadic_approx(x: CReal, n: int, budget: int | None = None) -> int:
    """Some integer z with |x - z * 2**-n| <= 2**-n."""
    return round_nd(x.scale2(n), budget)


# ceil(log2(10) * d) is bounded above by this rational multiplier
_LOG2_10_NUM, _LOG2_10_DEN = 3322, 1000


def to_decimal(x: CReal, digits: int) -> str:
    """Decimal rendering with |x - printed| <= 10**-digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    p = _LOG2_10_NUM * digits // _LOG2_10_DEN + 3
    mid = x.approx(p).midpoint()
    scaled = mid.mantissa * 10 ** digits
    if mid.exponent >= 0:
        n = scaled << mid.exponent
    else:
        den = 1 << -mid.exponent
        n = (2 * scaled + den) // (2 * den)  # round to nearest
    sign = "-" if n < 0 else ""
    whole, frac = divmod(abs(n), 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


ZERO_REAL = CReal.from_dyadic(ZERO)
