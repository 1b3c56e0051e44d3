"""Lazy three-valued truth values and the ``select`` primitive.

A ``Kleenean`` is one of true/false/bottom, where bottom stands for a
test that never answers.  A ``LazyKleenean`` is an effort-indexed,
monotone sequence of Kleeneans: once an effort level yields a definite
answer, every higher effort yields the same answer.  ``select`` is the
sole source of nondeterminism in the library.
"""

from __future__ import annotations

import enum
from typing import Callable, Sequence

from .errors import EffortExhausted

DEFAULT_BUDGET = 1 << 20
_current_budget = DEFAULT_BUDGET


def set_default_budget(budget: int) -> None:
    """Set the process-wide default effort budget."""
    global _current_budget
    _current_budget = budget


def resolve_budget(budget: "int | None") -> int:
    return _current_budget if budget is None else budget


class Kleenean(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    BOTTOM = "bottom"

    def __invert__(self) -> "Kleenean":
        if self is Kleenean.TRUE:
            return Kleenean.FALSE
        if self is Kleenean.FALSE:
            return Kleenean.TRUE
        return Kleenean.BOTTOM

    def __and__(self, other: "Kleenean") -> "Kleenean":
        if self is Kleenean.FALSE or other is Kleenean.FALSE:
            return Kleenean.FALSE
        if self is Kleenean.TRUE and other is Kleenean.TRUE:
            return Kleenean.TRUE
        return Kleenean.BOTTOM

    def __or__(self, other: "Kleenean") -> "Kleenean":
        if self is Kleenean.TRUE or other is Kleenean.TRUE:
            return Kleenean.TRUE
        if self is Kleenean.FALSE and other is Kleenean.FALSE:
            return Kleenean.FALSE
        return Kleenean.BOTTOM


TRUE = Kleenean.TRUE
FALSE = Kleenean.FALSE
BOTTOM = Kleenean.BOTTOM


class Branch(enum.Enum):
    LEFT = 0
    RIGHT = 1


class LazyKleenean:
    """An effort-indexed Kleenean with a definedness latch.

    The underlying function may be only semantically monotone (a
    comparison certified at effort n might momentarily fail to certify
    at n+1 from tighter but shifted intervals); the latch makes the
    observable sequence monotone: once a definite value is seen at
    effort n, all efforts >= n report it.
    """

    __slots__ = ("_fn", "_settled_at", "_settled")

    def __init__(self, fn: Callable[[int], Kleenean]):
        self._fn = fn
        self._settled_at: int | None = None
        self._settled = BOTTOM

    def at(self, effort: int) -> Kleenean:
        if self._settled_at is not None and effort >= self._settled_at:
            return self._settled
        value = self._fn(effort)
        if value is not BOTTOM and self._settled_at is None:
            self._settled_at = effort
            self._settled = value
        return value

    @classmethod
    def const(cls, k: Kleenean) -> "LazyKleenean":
        return cls(lambda _: k)

    def __invert__(self) -> "LazyKleenean":
        return LazyKleenean(lambda n: ~self.at(n))

    def __and__(self, other: "LazyKleenean") -> "LazyKleenean":
        return LazyKleenean(lambda n: self.at(n) & other.at(n))

    def __or__(self, other: "LazyKleenean") -> "LazyKleenean":
        return LazyKleenean(lambda n: self.at(n) | other.at(n))


def _effort_schedule(budget: int, start: int = 0):
    """Deterministic effort levels start, start+1, start+2, start+4, ...
    capped at the budget.

    Geometric advance keeps the total work of the underlying
    evaluations within a constant factor of the final level; a start
    hint lets iterated searches resume near their last success.
    """
    n = min(start, budget)
    step = 1
    while True:
        yield n
        if n >= budget:
            return
        n = min(budget, n + step)
        step *= 2


def _select_with_effort(
    candidates: Sequence[LazyKleenean], budget: "int | None", start: int
) -> tuple[int, int]:
    budget = resolve_budget(budget)
    for n in _effort_schedule(budget, start):
        for i, k in enumerate(candidates):
            if k.at(n) is TRUE:
                return i, n
    raise EffortExhausted(budget, "waiting for a true Kleenean in select")


def select_index(
    candidates: Sequence[LazyKleenean], budget: int | None = None, start: int = 0
) -> int:
    """Return the index of a candidate that evaluates to true.

    All candidates are queried at each effort level before advancing
    (fair lockstep); ties go to the lowest index.  At least one
    candidate must eventually be true, otherwise ``EffortExhausted``
    is raised at the budget.
    """
    return _select_with_effort(candidates, budget, start)[0]


def select(
    a: LazyKleenean, b: LazyKleenean, budget: int | None = None
) -> Branch:
    """Nondeterministic choice: Left only if ``a`` certified true,
    Right only if ``b`` did."""
    return Branch(select_index((a, b), budget))
