"""Explicit regressive pair coloring driven by orbit ladders of the hierarchy.

For a size parameter k >= 3 the construction colors pairs from the interval
[4k^2, F(k, 4k^2)).  The *ladder* at level i is the orbit of the base point
4k^2 under F(i, .); the level-i distance between m and n counts ladder rungs
in the half-open range (m, n].  A pair is classified by the greatest level
with positive distance together with that distance, and the two numbers are
packed into a single color by the Cantor pairing function.  The resulting
color of {m, n} always stays below min(m, n) - the coloring is regressive -
yet no min-homogeneous subset of size k + 1 exists inside the interval.

Level 1 distances use the closed form n - m; the level-1 ladder (every
integer) is materialized only on explicit request.  Ladders for levels >= 2
are grown rung by rung with capped evaluations, so a rung far beyond the
interval is detected cheaply instead of being computed in full.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import comb, isqrt

from .hierarchy import EvalBudget, bounded_value, hierarchy_value, isqrt_half


class BudgetExhausted(RuntimeError):
    """An evaluation needed for an exact answer ran out of steps.

    ``lower_bound`` is the largest intermediate iterate reached, a certified
    lower bound on the uncomputed value.
    """

    def __init__(self, message: str, lower_bound: int, steps: int) -> None:
        super().__init__(message)
        self.lower_bound = lower_bound
        self.steps = steps


@dataclass(frozen=True)
class ConstructionParams:
    """Size parameter for the construction; the base point is 4k^2."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 3:
            raise ValueError(f"construction needs k >= 3, got {self.k}")

    @property
    def base(self) -> int:
        return 4 * self.k * self.k


@dataclass(frozen=True)
class Interval:
    """Half-open integer interval [lo, hi)."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty reversed interval [{self.lo}, {self.hi})")

    def __contains__(self, n: int) -> bool:
        return self.lo <= n < self.hi

    def elements(self) -> range:
        return range(self.lo, self.hi)


@dataclass(frozen=True)
class Ladder:
    """Materialized orbit of ``base`` under one hierarchy level, up to ``cap``.

    ``rungs`` lists every orbit point in [base, cap] in increasing order.
    ``complete`` records whether the next orbit point is certified to lie
    above ``cap``; an incomplete ladder (rung generation ran out of budget)
    only answers distance queries whose upper end stays at or below its last
    rung.
    """

    level: int
    base: int
    cap: int
    rungs: tuple[int, ...]
    complete: bool

    @property
    def usable_to(self) -> int:
        return self.cap if self.complete else self.rungs[-1]

    def count_in(self, m: int, n: int) -> int:
        """Number of rungs in the half-open range (m, n]; requires n <= usable_to."""
        if m > n:
            m, n = n, m
        if n > self.usable_to:
            raise LookupError(
                f"level-{self.level} ladder is only usable up to {self.usable_to}, "
                f"queried at {n}"
            )
        return bisect_right(self.rungs, n) - bisect_right(self.rungs, m)


def build_ladder(
    level: int, base: int, cap: int, budget: EvalBudget | None = None
) -> Ladder:
    """Grow the orbit ladder of ``base`` under level ``level`` up to ``cap``.

    Each next rung is evaluated with an early exit above ``cap``, so finishing
    a ladder never costs more than the work of walking through [base, cap].
    If a rung evaluation exhausts its budget below the cap the ladder is
    returned incomplete.
    """
    if level < 1:
        raise ValueError(f"ladder level must be >= 1, got {level}")
    if base < 0 or cap < base:
        raise ValueError(f"need 0 <= base <= cap, got base={base} cap={cap}")
    if level == 1:
        return Ladder(level=1, base=base, cap=cap, rungs=tuple(range(base, cap + 1)), complete=True)
    rungs = [base]
    complete = False
    while True:
        status, value, _steps = bounded_value(level, rungs[-1], cap, budget)
        if status == "value":
            if value == rungs[-1]:  # fixed point below 4; cannot occur at real bases
                complete = True
                break
            rungs.append(value)
        elif status == "above_cap":
            complete = True
            break
        else:
            break
    return Ladder(level=level, base=base, cap=cap, rungs=tuple(rungs), complete=complete)


def cantor_pair(a: int, b: int) -> int:
    """Cantor pairing: C(a + b + 1, 2) + b, a bijection between N^2 and N."""
    if a < 0 or b < 0:
        raise ValueError(f"pairing requires naturals, got ({a}, {b})")
    return comb(a + b + 1, 2) + b


def cantor_unpair(p: int) -> tuple[int, int]:
    """Inverse of :func:`cantor_pair` (exact integer arithmetic throughout)."""
    if p < 0:
        raise ValueError(f"cannot unpair negative {p}")
    s = (isqrt(8 * p + 1) - 1) // 2
    b = p - s * (s + 1) // 2
    return s - b, b


@dataclass(frozen=True)
class ColorCode:
    """Classification of a pair: greatest level with positive distance, that
    distance, and the packed color."""

    level: int
    distance: int

    @property
    def encoded(self) -> int:
        return cantor_pair(self.level, self.distance)


class Construction:
    """The regressive coloring on [base, cap] with all its ladders materialized.

    Build with :meth:`build`; ``cap`` defaults to the right end of the full
    construction interval (F(k, base) - 1).  An explicit smaller cap allows
    partial verification when the full interval is out of budget - the build
    still certifies cap < F(k, base), which is what makes levels above k
    irrelevant for classification in range.
    """

    def __init__(self, params: ConstructionParams, interval: Interval, ladders: dict[int, Ladder]):
        self.params = params
        self.interval = interval
        self.ladders = ladders

    @classmethod
    def build(
        cls,
        k: int,
        cap: int | None = None,
        budget: EvalBudget | None = None,
    ) -> "Construction":
        params = ConstructionParams(k)
        base = params.base
        if cap is None:
            interval = construction_interval(params, budget)
            cap = interval.hi - 1
        else:
            if cap < base:
                raise ValueError(f"cap {cap} below base {base}")
            # The classification scan stops at level k, which is only sound on
            # a range that ends before the first level-k rung after the base.
            status, value, steps = bounded_value(k, base, cap, budget)
            if status == "value" and value <= cap:
                raise ValueError(
                    f"cap {cap} reaches the level-{k} rung {value}; "
                    f"the construction interval ends at {value}"
                )
            if status == "budget":
                raise BudgetExhausted(
                    f"could not certify cap {cap} < F({k}, {base}) within budget",
                    lower_bound=value,
                    steps=steps,
                )
            interval = Interval(base, cap + 1)
        ladders = {
            level: build_ladder(level, base, cap, budget) for level in range(2, k + 1)
        }
        for level, ladder in ladders.items():
            if not ladder.complete:
                raise BudgetExhausted(
                    f"level-{level} ladder incomplete below cap {cap}",
                    lower_bound=ladder.rungs[-1],
                    steps=0,
                )
        return cls(params, interval, ladders)

    def _check_range(self, m: int, n: int) -> tuple[int, int]:
        if m > n:
            m, n = n, m
        if m not in self.interval or n not in self.interval:
            raise LookupError(
                f"pair ({m}, {n}) outside the materialized interval "
                f"[{self.interval.lo}, {self.interval.hi})"
            )
        return m, n

    def distance(self, level: int, m: int, n: int) -> int:
        """Level-``level`` distance: rungs of that ladder in (min, max].

        Level 1 uses the closed form n - m.  Levels above k are identically
        zero in range: their first rung after the base sits beyond the cap.
        """
        if level < 1:
            raise ValueError(f"level must be >= 1, got {level}")
        m, n = self._check_range(m, n)
        if level == 1:
            return n - m
        if level > self.params.k:
            return 0
        return self.ladders[level].count_in(m, n)

    def classify(self, m: int, n: int) -> ColorCode:
        """Greatest level with positive distance, with that distance."""
        m, n = self._check_range(m, n)
        if m == n:
            raise ValueError(f"classification needs two distinct points, got {m} twice")
        for level in range(self.params.k, 1, -1):
            d = self.ladders[level].count_in(m, n)
            if d > 0:
                return ColorCode(level=level, distance=d)
        return ColorCode(level=1, distance=n - m)

    def color(self, m: int, n: int) -> int:
        """The packed color of the pair {m, n}."""
        return self.classify(m, n).encoded

    def elements(self) -> range:
        return self.interval.elements()


def construction_interval(
    params: ConstructionParams | int, budget: EvalBudget | None = None
) -> Interval:
    """The full construction interval [4k^2, F(k, 4k^2)).

    Raises :class:`BudgetExhausted` (with a certified lower bound on the right
    endpoint) when the endpoint evaluation runs out of steps; from k = 5 on
    the endpoint is astronomically far beyond any desk-scale budget.
    """
    if isinstance(params, int):
        params = ConstructionParams(params)
    base = params.base
    result = hierarchy_value(params.k, base, budget)
    if not result.exact:
        raise BudgetExhausted(
            f"right endpoint F({params.k}, {base}) exceeds the step budget",
            lower_bound=result.value,
            steps=result.steps,
        )
    return Interval(base, result.value)


@dataclass
class RegressiveReport:
    """Exhaustive regressiveness check over one construction range."""

    k: int
    lo: int
    hi: int
    pairs_checked: int
    max_color: int
    violations: list[tuple[int, int, int]]  # (m, n, color) with color >= m

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_regressive(construction: Construction) -> RegressiveReport:
    """Check color({m, n}) < m for every pair in the materialized range."""
    elems = construction.elements()
    violations: list[tuple[int, int, int]] = []
    max_color = -1
    pairs = 0
    for i, m in enumerate(elems):
        for n in elems[i + 1 :]:
            c = construction.color(m, n)
            pairs += 1
            if c > max_color:
                max_color = c
            if c >= m:
                violations.append((m, n, c))
    return RegressiveReport(
        k=construction.params.k,
        lo=construction.interval.lo,
        hi=construction.interval.hi,
        pairs_checked=pairs,
        max_color=max_color,
        violations=violations,
    )


@dataclass
class SqrtBoundReport:
    """Exhaustive check of the distance bound d <= isqrt_half(m)."""

    k: int
    lo: int
    hi: int
    pairs_checked: int
    max_distance: int
    violations: list[tuple[int, int, int]]  # (m, n, distance)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_sqrt_bound(construction: Construction) -> SqrtBoundReport:
    """Check classify(m, n).distance <= isqrt_half(m) for every pair in range."""
    elems = construction.elements()
    violations: list[tuple[int, int, int]] = []
    max_distance = 0
    pairs = 0
    for i, m in enumerate(elems):
        bound = isqrt_half(m)
        for n in elems[i + 1 :]:
            d = construction.classify(m, n).distance
            pairs += 1
            if d > max_distance:
                max_distance = d
            if d > bound:
                violations.append((m, n, d))
    return SqrtBoundReport(
        k=construction.params.k,
        lo=construction.interval.lo,
        hi=construction.interval.hi,
        pairs_checked=pairs,
        max_distance=max_distance,
        violations=violations,
    )
