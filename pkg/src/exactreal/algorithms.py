"""Worked algorithms over exact reals.

Maximum via approximate splitting, pi from a Machin-style series with
certified tails, root finding by trisection, real square roots by
scaled Heron iteration, and the total nondeterministic complex square
root whose branch-point case is handled by an invariant-guided
refinement limit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .creal import (
    CReal,
    ZERO_REAL,
    _mag_exp,
    less_than,
    limit,
    split,
)
from .dyadic import Dyadic
from .errors import EffortExhausted
from .kleenean import (
    Branch,
    _select_with_effort,
    resolve_budget,
    select,
    select_index,
)

# -- maximum and absolute value ---------------------------------------


def real_max(x, y, budget: int | None = None) -> CReal:
    """max(x, y), as the limit of splitting-based approximations.

    At stage n one of ``x > y - 2**-n`` / ``y > x - 2**-n`` is
    certified; the corresponding argument is within 2**-n of the
    maximum.
    """
    x = CReal._coerce(x)
    y = CReal._coerce(y)

    def term(n: int) -> CReal:
        br = split(x, y, Dyadic(1, -n), budget)
        return x if br is Branch.RIGHT else y

    return limit(term)


def real_abs(x, budget: int | None = None) -> CReal:
    x = CReal._coerce(x)
    return real_max(x, -x, budget)


# -- pi ----------------------------------------------------------------


def _atan_inv_bounds(m: int, g: int) -> tuple[int, int]:
    """Integer bounds [lo, hi] on ``atan(1/m) * 2**g``.

    Alternating Gregory series with floored terms; the floor errors and
    the truncation tail are absorbed into an explicit error count.
    """
    total = 0
    k = 0
    power = m
    m2 = m * m
    one = 1 << g
    while True:
        term = one // ((2 * k + 1) * power)
        if term == 0:
            break
        total += -term if k & 1 else term
        k += 1
        power *= m2
    err = k + 1
    return total - err, total + err


def _pi_midpoint(n: int) -> Dyadic:
    """A dyadic within 2**-n of pi (Machin: 16 atan(1/5) - 4 atan(1/239))."""
    g = n + 20
    a5_lo, a5_hi = _atan_inv_bounds(5, g)
    a239_lo, a239_hi = _atan_inv_bounds(239, g)
    lo = 16 * a5_lo - 4 * a239_hi
    hi = 16 * a5_hi - 4 * a239_lo
    if hi - lo >= 1 << 19:
        raise EffortExhausted(n, "pi series error budget")
    return Dyadic(lo + hi, -(g + 1))


def real_pi() -> CReal:
    return limit(lambda n: CReal.from_dyadic(_pi_midpoint(n)))


# -- intermediate value theorem by trisection --------------------------


def _to_fraction(v) -> Fraction:
    if isinstance(v, Dyadic):
        return v.to_fraction()
    return Fraction(v)


def ivt_trisect(
    f: Callable[[CReal], CReal],
    a,
    b,
    budget: int | None = None,
) -> CReal:
    """The unique zero of ``f`` on [a, b], given f(a) < 0 < f(b).

    Each step moves one bracket end to a trisection point, certified by
    the sign of an endpoint product, so the uncomputable comparison of
    f against 0 is never needed; the bracket shrinks by 2/3 per step.
    Endpoints are kept as exact rationals.
    """
    a = _to_fraction(a)
    b = _to_fraction(b)
    if not a < b:
        raise ValueError("invalid bracket: need a < b")
    state = {
        "a": a,
        "b": b,
        "fa": f(CReal.from_fraction(a)),
        "fb": f(CReal.from_fraction(b)),
        "effort": 0,  # certification effort grows smoothly with the step count
    }

    def advance(target: Fraction):
        while state["b"] - state["a"] > target:
            a0, b0 = state["a"], state["b"]
            a1 = (2 * a0 + b0) / 3
            b1 = (a0 + 2 * b0) / 3
            fa1 = f(CReal.from_fraction(a1))
            fb1 = f(CReal.from_fraction(b1))
            winner, effort = _select_with_effort(
                (
                    less_than(fa1 * state["fb"], ZERO_REAL),
                    less_than(state["fa"] * fb1, ZERO_REAL),
                ),
                budget,
                max(0, state["effort"] - 1),
            )
            state["effort"] = effort
            if winner == 0:
                state["a"], state["fa"] = a1, fa1
            else:
                state["b"], state["fb"] = b1, fb1

    def term(n: int) -> CReal:
        advance(Fraction(1, 1 << n))
        mid = (state["a"] + state["b"]) / 2
        return CReal.from_fraction(mid)

    return limit(term)


# -- real square root --------------------------------------------------


def heron(x, n: int) -> CReal:
    """n-th Heron iterate for sqrt(x), starting from 1."""
    x = CReal._coerce(x)
    h = CReal.from_int(1)
    for _ in range(n):
        h = (h + x / h).scale2(-1)
    return h


def sqrt_restricted(x) -> CReal:
    """sqrt(x) for x in [0.25, 2], via quadratically convergent Heron
    iterates: |heron(x, k) - sqrt(x)| <= 2**-2**k on that range."""
    x = CReal._coerce(x)
    iterates = [CReal.from_int(1)]

    def iterate(k: int) -> CReal:
        while len(iterates) <= k:
            h = iterates[-1]
            iterates.append((h + x / h).scale2(-1))
        return iterates[k]

    def term(n: int) -> CReal:
        # smallest k with 2**2**k <= 2**-n slack: 2**k > n + 2
        return iterate((n + 2).bit_length())

    return limit(term)


_SCALE_LO = Dyadic(1, -2)
_SCALE_HI = Dyadic(2)


def sqrt_scale(x, budget: int | None = None) -> tuple[int, CReal]:
    """Find z with 4**z * x in [0.25, 2], for x > 0.

    The exponent is found by Archimedean search: evaluate x at
    increasing accuracy until positivity and membership of a scaled
    copy are certified.  Raises ``EffortExhausted`` when x <= 0.
    """
    x = CReal._coerce(x)
    budget = resolve_budget(budget)
    q = 2
    while True:
        iv = x.approx(q)
        if iv.lo.sign > 0:
            # 4**z pushes hi into (1/2, 2]
            z = (1 - _mag_exp(iv.hi)) >> 1
            for cand in (z, z + 1, z - 1):
                s = iv.scale2(2 * cand)
                if s.lo >= _SCALE_LO and s.hi <= _SCALE_HI:
                    return cand, x.scale2(2 * cand)
        if q >= budget:
            raise EffortExhausted(budget, "scaling into [0.25, 2]")
        q = min(budget, 2 * q)


def real_sqrt(x, budget: int | None = None) -> CReal:
    """sqrt(x) for x >= 0, total including 0.

    Stage n chooses between |x| < 2**-2n (emit 0, a valid 2**-n
    approximation) and x > 0 (scale into [0.25, 2], run Heron, rescale;
    the choice is then pinned for all later stages).  For x < 0 neither
    case is certifiable and the effort budget is exhausted.
    """
    x = CReal._coerce(x)
    chosen: list[CReal] = []

    def term(n: int) -> CReal:
        if chosen:
            return chosen[0]
        bound = CReal.from_dyadic(Dyadic(1, -2 * n))
        small = less_than(x, bound) & less_than(-bound, x)
        br = select(small, less_than(ZERO_REAL, x), budget)
        if br is Branch.RIGHT:
            z, scaled = sqrt_scale(x, budget)
            chosen.append(sqrt_restricted(scaled).scale2(-z))
            return chosen[0]
        return ZERO_REAL

    return limit(term)


# -- complex numbers ---------------------------------------------------


class Complex:
    """A complex number as a pair of exact reals, with the maximum norm."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        object.__setattr__(self, "re", CReal._coerce(re))
        object.__setattr__(self, "im", CReal._coerce(im))

    def __setattr__(self, name, value):
        raise AttributeError("Complex values are immutable")

    def __add__(self, other: "Complex") -> "Complex":
        return Complex(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Complex") -> "Complex":
        return Complex(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Complex":
        return Complex(-self.re, -self.im)

    def __mul__(self, other: "Complex") -> "Complex":
        a, b, c, d = self.re, self.im, other.re, other.im
        return Complex(a * c - b * d, a * d + b * c)

    def norm(self, budget: int | None = None) -> CReal:
        return real_max(real_abs(self.re, budget), real_abs(self.im, budget), budget)


def csqrt_nonzero(z: Complex, budget: int | None = None) -> Complex:
    """A square root of z != 0.

    One of the four sign cases im < 0, im > 0, re < 0, re > 0 is
    certified; each case applies the classical half-angle formula
    driven by the certified sign, so no discontinuous sgn is needed.
    """
    a, b = z.re, z.im
    zero = ZERO_REAL
    case = select_index(
        (less_than(b, zero), less_than(zero, b), less_than(a, zero), less_than(zero, a)),
        budget,
    )
    m = real_sqrt(a * a + b * b, budget)
    if case == 0:  # b < 0
        u = real_sqrt((m + a).scale2(-1), budget)
        v = real_sqrt((m - a).scale2(-1), budget)
        return Complex(u, -v)
    if case == 1:  # b > 0
        u = real_sqrt((m + a).scale2(-1), budget)
        v = real_sqrt((m - a).scale2(-1), budget)
        return Complex(u, v)
    if case == 2:  # a < 0: v > 0 is bounded away from zero
        v = real_sqrt((m - a).scale2(-1), budget)
        return Complex(b / v.scale2(1), v)
    # a > 0: u > 0 is bounded away from zero
    u = real_sqrt((m + a).scale2(-1), budget)
    return Complex(u, b / u.scale2(1))


def csqrt(z: Complex, budget: int | None = None) -> Complex:
    """A square root of z, total including the branch point z = 0.

    Refinement with an invariant: while |z| < 2**-2(n+2) remains
    certifiable the sequence emits 0; once |z| > 0 is certified a
    concrete root is computed and pinned, so every run converges to a
    single root (never a blend).  All possible output sequences look
    like 0, 0, ..., 0, x, x, ...
    """
    nrm = z.norm(budget)
    zero = ZERO_REAL
    terms: list[Complex] = []
    chosen: list[Complex] = []

    def term(n: int) -> Complex:
        while len(terms) <= n:
            k = len(terms)
            if chosen:
                terms.append(chosen[0])
                continue
            small = less_than(nrm, CReal.from_dyadic(Dyadic(1, -2 * (k + 2))))
            br = select(small, less_than(zero, nrm), budget)
            if br is Branch.RIGHT:
                chosen.append(csqrt_nonzero(z, budget))
                terms.append(chosen[0])
            else:
                terms.append(Complex(0, 0))
        return terms[n]

    re = limit(lambda n: term(n).re)
    im = limit(lambda n: term(n).im)
    return Complex(re, im)
