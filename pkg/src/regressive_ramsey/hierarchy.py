"""Budgeted exact evaluation of a square-root-paced fast-growing hierarchy.

The hierarchy is built from the successor function by square-root-paced
iteration:

    F(1, n) = n + 1
    F(i+1, n) = F(i, .) applied isqrt_half(n) times to n,

where ``isqrt_half(n)`` is the integer part of half the square root of n.
Alongside it we evaluate the classical Ackermann-style approximations

    A(1, n) = n + 1
    A(i+1, n) = A(i, .) applied n times to n,

which majorize the F hierarchy level-for-level up to a fixed level shift.

Every computation here is exact integer arithmetic (arbitrary precision, no
floating point) and is metered: one *step* is one application of the successor
function or one constant-time closed-form move for level 2 (F(2, n) equals
n + isqrt_half(n), so a level-2 application never needs to unroll level 1).
A computation that would exceed its step budget stops and reports the largest
intermediate iterate it reached.  Because every elementary move is monotone,
that iterate is a certified lower bound on the true value, which also makes
cheap early-exit threshold queries possible: once any intermediate iterate
clears a threshold, the final value must clear it too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

DEFAULT_STEP_BUDGET = 10**7


def isqrt_half(n: int) -> int:
    """Integer part of half the square root of ``n``.

    Computed exactly as ``isqrt(n) // 2``; flooring before or after the
    halving gives the same value, since floor(x/2) = floor(floor(x)/2)
    for every real x >= 0.

    Args:
        n: a natural number.

    Returns:
        floor(sqrt(n) / 2) as an exact integer.
    """
    if n < 0:
        raise ValueError(f"isqrt_half requires n >= 0, got {n}")
    return math.isqrt(n) // 2


@dataclass(frozen=True)
class EvalBudget:
    """Step allowance for one metered evaluation."""

    max_steps: int = DEFAULT_STEP_BUDGET

    def __post_init__(self) -> None:
        if self.max_steps < 1:
            raise ValueError(f"budget must allow at least one step, got {self.max_steps}")


@dataclass(frozen=True)
class EvalResult:
    """Outcome of a metered evaluation.

    ``value`` is the exact result when ``exact`` is true.  Otherwise the step
    budget ran out first and ``value`` is the largest intermediate iterate
    reached, which is a certified lower bound on the true result.
    """

    value: int
    steps: int
    exact: bool

    @property
    def kind(self) -> str:
        return "exact" if self.exact else "budget_exceeded"


class Tristate(Enum):
    """Verdict of a budgeted threshold comparison."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


# Internal engine statuses.
_EXACT = 0
_CAP = 1
_BUDGET = 2


def _engine(
    level: int,
    count: int,
    n: int,
    max_steps: int,
    cap: int | None,
) -> tuple[int, int, int]:
    """Run ``count`` applications of hierarchy level ``level`` starting at ``n``.

    The pending work is kept as a run-length encoded stack of
    (level, remaining applications) pairs; expanding a level >= 3 application
    costs nothing, while levels 1 and 2 consume one step per application
    (level 1 in bulk).  Returns (status, value, steps) where status is _EXACT
    (stack drained; value is final), _CAP (some intermediate iterate reached
    ``cap``; value is that iterate), or _BUDGET (steps ran out; value is the
    largest iterate reached).
    """
    x = n
    steps = 0
    stack: list[list[int]] = [[level, count]] if count > 0 else []
    while True:
        if cap is not None and x >= cap:
            return _CAP, x, steps
        if not stack:
            return _EXACT, x, steps
        lev, cnt = stack[-1]
        if lev == 1:
            remaining = max_steps - steps
            take = cnt if cnt <= remaining else remaining
            x += take
            steps += take
            if take < cnt:
                if cap is not None and x >= cap:
                    return _CAP, x, steps
                return _BUDGET, x, steps
            stack.pop()
        elif lev == 2:
            if steps == max_steps:
                return _BUDGET, x, steps
            x += math.isqrt(x) // 2
            steps += 1
            if cnt == 1:
                stack.pop()
            else:
                stack[-1][1] = cnt - 1
        else:
            if cnt == 1:
                stack.pop()
            else:
                stack[-1][1] = cnt - 1
            reps = math.isqrt(x) // 2
            if reps > 0:
                stack.append([lev - 1, reps])


def _check_args(level: int, count: int, n: int) -> None:
    if level < 1:
        raise ValueError(f"hierarchy level must be >= 1, got {level}")
    if count < 0:
        raise ValueError(f"application count must be >= 0, got {count}")
    if n < 0:
        raise ValueError(f"argument must be a natural number, got {n}")


def hierarchy_iterate(
    level: int, count: int, n: int, budget: EvalBudget | None = None
) -> EvalResult:
    """Apply hierarchy level ``level`` to ``n``, ``count`` times, under a budget.

    Args:
        level: hierarchy level, >= 1.
        count: number of applications, >= 0 (zero applications return ``n``).
        n: starting natural number.
        budget: step allowance; defaults to ``DEFAULT_STEP_BUDGET`` steps.

    Returns:
        An :class:`EvalResult`; on budget exhaustion its value is the largest
        intermediate iterate, a certified lower bound for the true result.
    """
    _check_args(level, count, n)
    max_steps = (budget or EvalBudget()).max_steps
    status, value, steps = _engine(level, count, n, max_steps, None)
    return EvalResult(value=value, steps=steps, exact=(status == _EXACT))


def hierarchy_value(level: int, n: int, budget: EvalBudget | None = None) -> EvalResult:
    """Evaluate hierarchy level ``level`` at ``n`` (a single application)."""
    return hierarchy_iterate(level, 1, n, budget)


def ackermann_value(level: int, n: int, budget: EvalBudget | None = None) -> EvalResult:
    """Evaluate the Ackermann approximation A(level, n) under a budget.

    A(1, n) = n + 1 and A(i+1, n) is the n-fold application of A(i, .) to n.
    The evaluation unrolls to successor applications; as with the main
    hierarchy, a budget overrun reports the largest intermediate iterate
    reached (a certified lower bound).
    """
    _check_args(level, 1, n)
    max_steps = (budget or EvalBudget()).max_steps
    x = n
    steps = 0
    stack: list[list[int]] = [[level, 1]]
    while stack:
        lev, cnt = stack[-1]
        if lev == 1:
            remaining = max_steps - steps
            take = cnt if cnt <= remaining else remaining
            x += take
            steps += take
            if take < cnt:
                return EvalResult(value=x, steps=steps, exact=False)
            stack.pop()
        else:
            if cnt == 1:
                stack.pop()
            else:
                stack[-1][1] = cnt - 1
            if x > 0:
                stack.append([lev - 1, x])
    return EvalResult(value=x, steps=steps, exact=True)


def exceeds_threshold(
    level: int,
    n: int,
    threshold: int,
    budget: EvalBudget | None = None,
    count: int = 1,
) -> Tristate:
    """Decide whether ``count`` applications of level ``level`` at ``n`` reach ``threshold``.

    Monotonicity makes the comparison cheap in the common case: the evaluation
    stops as soon as any intermediate iterate reaches the threshold (YES), and
    only a completed evaluation may answer NO.  A budget overrun before either
    event yields UNKNOWN.
    """
    _check_args(level, count, n)
    max_steps = (budget or EvalBudget()).max_steps
    status, _value, _steps = _engine(level, count, n, max_steps, threshold)
    if status == _CAP:
        return Tristate.YES
    if status == _EXACT:
        return Tristate.YES if _value >= threshold else Tristate.NO
    return Tristate.UNKNOWN


def bounded_value(
    level: int, n: int, cap: int, budget: EvalBudget | None = None
) -> tuple[str, int, int]:
    """Evaluate one application of level ``level`` at ``n``, stopping early above ``cap``.

    Returns (status, value, steps) with status one of:

    * ``"value"``     - evaluation finished with value <= cap (value is exact);
    * ``"above_cap"`` - some intermediate iterate exceeded ``cap``, so the true
      value does too (value is that iterate);
    * ``"budget"``    - the budget ran out below the cap (value is the largest
      iterate reached, a lower bound).

    This is the primitive used to grow orbit ladders without ever paying for a
    full evaluation whose result lies far beyond the range of interest.
    """
    _check_args(level, 1, n)
    if cap < 0:
        raise ValueError(f"cap must be a natural number, got {cap}")
    max_steps = (budget or EvalBudget()).max_steps
    status, value, steps = _engine(level, 1, n, max_steps, cap + 1)
    if status == _CAP:
        return "above_cap", value, steps
    if status == _EXACT:
        if value > cap:  # n itself may already sit above the cap
            return "above_cap", value, steps
        return "value", value, steps
    return "budget", value, steps


@dataclass
class MonotoneReport:
    """Spot-check report for strict growth of one hierarchy level."""

    level: int
    lo: int
    hi: int
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.skipped


def verify_monotone(
    level: int, lo: int, hi: int, budget: EvalBudget | None = None
) -> MonotoneReport:
    """Check F(level, n) < F(level, n+1) and n < F(level, n) for n in [lo, hi).

    Arguments whose evaluation blows the budget are recorded as skipped rather
    than silently ignored.
    """
    if lo < 0 or hi < lo:
        raise ValueError(f"need 0 <= lo <= hi, got lo={lo} hi={hi}")
    report = MonotoneReport(level=level, lo=lo, hi=hi)
    prev: EvalResult | None = None
    for n in range(lo, hi + 1):
        cur = hierarchy_value(level, n, budget)
        if not cur.exact:
            report.skipped.append(n)
            prev = None
            continue
        if n < hi:
            report.checked += 1
        if n > lo and prev is not None:
            if not prev.value < cur.value:
                report.violations.append(
                    f"level {level}: F({n - 1}) = {prev.value} not < F({n}) = {cur.value}"
                )
        if n < hi and not n < cur.value:
            report.violations.append(f"level {level}: F({n}) = {cur.value} not > {n}")
        prev = cur
    return report
