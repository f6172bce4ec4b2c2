"""Min-homogeneous set search, exact small Ramsey-style thresholds, CNF export.

A finite pair coloring assigns a color to every 2-subset of its domain.  A
subset S is *min-homogeneous* when, for every x in S, the colors c(x, y) agree
for all y in S above x - i.e. the color of a pair inside S depends only on its
minimum.  Restrictions of min-homogeneous sets are min-homogeneous, which is
what makes prefix-pruned search exact.

Two searches are provided: a deliberately dumb exhaustive scan
(:func:`brute_force_max`, the independent oracle) and a branch-and-bound
(:func:`max_min_homog`).  Both report the lexicographically least witness of
maximum size, so their outputs are comparable bit for bit.

The threshold routines decide, for a domain {1..N}, whether *every* regressive
coloring (color of a pair strictly below its minimum) contains a
min-homogeneous k-subset.  Min-homogeneity only reads equalities inside a
single row, and regressiveness only caps the number of distinct colors a row
can use, so colorings are enumerated as per-row set partitions in
restricted-growth (RGS) form: this collapses the color-renaming symmetry
exactly, without losing any avoider.  :func:`export_cnf` emits the same
avoidance problem as DIMACS CNF for external solvers.
"""

from __future__ import annotations

import multiprocessing
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from random import Random

DEFAULT_NODE_LIMIT = 10**8


class SearchLimitExceeded(RuntimeError):
    """A search hit its explicit node limit before finishing."""

    def __init__(self, message: str, nodes: int) -> None:
        super().__init__(message)
        self.nodes = nodes


@dataclass(frozen=True)
class PairColoring:
    """A total coloring of the 2-subsets of a finite domain of naturals >= 1."""

    domain: tuple[int, ...]
    colors: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        if any(b <= a for a, b in zip(self.domain, self.domain[1:])):
            raise ValueError("domain must be strictly increasing")
        if self.domain and self.domain[0] < 1:
            raise ValueError(f"domain elements must be >= 1, got {self.domain[0]}")
        for a, b in self.colors:
            if a >= b:
                raise ValueError(f"color keys must be ordered pairs, got ({a}, {b})")
        n = len(self.domain)
        if len(self.colors) != n * (n - 1) // 2:
            raise ValueError("coloring must cover exactly the 2-subsets of the domain")
        for a, b in combinations(self.domain, 2):
            if (a, b) not in self.colors:
                raise ValueError(f"coloring is not total: pair ({a}, {b}) missing")

    @classmethod
    def from_callable(cls, domain, fn) -> "PairColoring":
        dom = tuple(sorted(domain))
        return cls(dom, {(a, b): fn(a, b) for a, b in combinations(dom, 2)})

    @classmethod
    def from_rgs_rows(cls, n: int, rows: dict[int, tuple[int, ...]]) -> "PairColoring":
        """Decode per-row restricted-growth strings over the domain {1..n}."""
        dom = tuple(range(1, n + 1))
        colors: dict[tuple[int, int], int] = {}
        for x in range(1, n):
            row = rows[x]
            if len(row) != n - x:
                raise ValueError(f"row of {x} must color {n - x} successors, got {len(row)}")
            for j, y in enumerate(range(x + 1, n + 1)):
                colors[(x, y)] = row[j]
        return cls(dom, colors)

    def color(self, m: int, n: int) -> int:
        if m > n:
            m, n = n, m
        return self.colors[(m, n)]

    def is_regressive(self) -> bool:
        return all(c < pair[0] for pair, c in self.colors.items())

    def index_matrix(self) -> tuple[dict[int, int], list[list[int]]]:
        """Index map and a dense color matrix over element indices (fast scans)."""
        idx = {e: i for i, e in enumerate(self.domain)}
        n = len(self.domain)
        mat = [[-1] * n for _ in range(n)]
        for (a, b), c in self.colors.items():
            mat[idx[a]][idx[b]] = c
        return idx, mat


def random_regressive(domain, rng: Random) -> PairColoring:
    """Uniformly random regressive coloring: each pair gets a color below its min."""
    dom = tuple(sorted(domain))
    return PairColoring(
        dom, {(a, b): rng.randrange(a) for a, b in combinations(dom, 2)}
    )


def is_min_homogeneous(coloring: PairColoring, subset) -> bool:
    """True when pair colors inside ``subset`` depend only on the pair minimum.

    Vacuously true for subsets of size <= 2.
    """
    s = sorted(subset)
    dom = set(coloring.domain)
    for e in s:
        if e not in dom:
            raise ValueError(f"element {e} not in coloring domain")
    for i, a in enumerate(s[:-1]):
        first = coloring.color(a, s[i + 1])
        for b in s[i + 2 :]:
            if coloring.color(a, b) != first:
                return False
    return True


@dataclass
class MinHomogWitness:
    """A min-homogeneous subset with, for each non-maximal element, its row color."""

    elements: tuple[int, ...]
    row_colors: dict[int, int]

    def check(self, coloring: PairColoring) -> bool:
        e = self.elements
        if list(self.row_colors) != list(e[:-1]):
            return False
        for i, a in enumerate(e[:-1]):
            want = self.row_colors[a]
            if any(coloring.color(a, b) != want for b in e[i + 1 :]):
                return False
        return True


@dataclass
class SearchOutcome:
    """Result of a maximum min-homogeneous subset search."""

    max_size: int
    witness: MinHomogWitness
    nodes: int
    method: str


def _witness(coloring: PairColoring, elements: tuple[int, ...]) -> MinHomogWitness:
    row = {a: coloring.color(a, elements[i + 1]) for i, a in enumerate(elements[:-1])}
    return MinHomogWitness(elements=elements, row_colors=row)


# ---------------------------------------------------------------------------
# Exhaustive oracle
# ---------------------------------------------------------------------------

def _scan_size(mat: list[list[int]], n: int, s: int, leads=None) -> tuple[int, ...] | None:
    """First (lex) min-homogeneous s-subset of indices, or None.

    Unrolled for the small sizes that dominate desk-scale runs; the scan
    itself is a plain pass over every s-combination in lexicographic order.
    """
    leads = range(n) if leads is None else leads
    if s == 3:
        for a in leads:
            ra = mat[a]
            for b, c in combinations(range(a + 1, n), 2):
                if ra[b] == ra[c]:
                    return (a, b, c)
        return None
    if s == 4:
        for a in leads:
            ra = mat[a]
            for b, c, d in combinations(range(a + 1, n), 3):
                x = ra[b]
                if ra[c] != x or ra[d] != x:
                    continue
                rb = mat[b]
                if rb[c] == rb[d]:
                    return (a, b, c, d)
        return None
    if s == 5:
        for a in leads:
            ra = mat[a]
            for b, c, d, e in combinations(range(a + 1, n), 4):
                x = ra[b]
                if ra[c] != x or ra[d] != x or ra[e] != x:
                    continue
                rb = mat[b]
                y = rb[c]
                if rb[d] != y or rb[e] != y:
                    continue
                if mat[c][d] == mat[c][e]:
                    return (a, b, c, d, e)
        return None
    for a in leads:
        for rest in combinations(range(a + 1, n), s - 1):
            combo = (a, *rest)
            ok = True
            for i in range(s - 1):
                row = mat[combo[i]]
                c0 = row[combo[i + 1]]
                for j in range(i + 2, s):
                    if row[combo[j]] != c0:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return combo
    return None


_POOL_MAT: list[list[int]] | None = None


def _pool_init(mat: list[list[int]]) -> None:
    global _POOL_MAT
    _POOL_MAT = mat


def _pool_scan(args: tuple[int, int, int]) -> tuple[int, ...] | None:
    lead, n, s = args
    return _scan_size(_POOL_MAT, n, s, leads=(lead,))


def brute_force_max(coloring: PairColoring, cap: int, jobs: int = 1) -> SearchOutcome:
    """Exhaustive maximum min-homogeneous subset search, capped at size ``cap``.

    Scans sizes downward; within a size, subsets are visited in lexicographic
    order, so the reported witness is the lexicographically least one of
    maximum size.  ``jobs`` > 1 splits each size scan by leading element
    across processes; the merge keeps lexicographic order, so the outcome is
    identical to a sequential run.
    """
    if cap < 0:
        raise ValueError(f"cap must be >= 0, got {cap}")
    dom = coloring.domain
    n = len(dom)
    _idx, mat = coloring.index_matrix()
    top = min(cap, n)
    pool = None
    try:
        if jobs > 1:
            ctx = multiprocessing.get_context("fork")
            pool = ctx.Pool(jobs, _pool_init, (mat,))
        for s in range(top, 2, -1):
            if pool is not None:
                hits = pool.map(_pool_scan, [(a, n, s) for a in range(n - s + 1)])
                combo = next((h for h in hits if h is not None), None)
            else:
                combo = _scan_size(mat, n, s)
            if combo is not None:
                elements = tuple(dom[i] for i in combo)
                return SearchOutcome(
                    max_size=s,
                    witness=_witness(coloring, elements),
                    nodes=0,
                    method="exhaustive",
                )
        size = min(top, 2)
        elements = dom[:size]
        return SearchOutcome(
            max_size=size,
            witness=_witness(coloring, elements),
            nodes=0,
            method="exhaustive",
        )
    finally:
        if pool is not None:
            pool.close()
            pool.join()


# ---------------------------------------------------------------------------
# Branch and bound
# ---------------------------------------------------------------------------

def max_min_homog(
    coloring: PairColoring,
    cap: int | None = None,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> SearchOutcome:
    """Maximum min-homogeneous subset via branch and bound.

    Elements are added in increasing order; adding z after last element t
    restricts the candidate pool to successors w of z with c(t, w) = c(t, z),
    since t's row color inside the set is fixed the moment its first successor
    is chosen.  Phase one establishes the maximum size with an incumbent
    bound; phase two re-runs the search in pure lexicographic order to pin
    the canonical (lex-least) witness of that size.
    """
    dom = coloring.domain
    n = len(dom)
    _idx, mat = coloring.index_matrix()
    top = n if cap is None else min(cap, n)
    nodes = 0

    def bump() -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise SearchLimitExceeded(f"node limit {node_limit} hit", nodes)

    best = min(top, 2)

    def grow(chosen: list[int], cands: list[int]) -> None:
        nonlocal best
        bump()
        if len(chosen) > best:
            best = len(chosen)
        if best >= top or len(chosen) + len(cands) <= best:
            return
        last = chosen[-1] if chosen else -1
        for i, z in enumerate(cands):
            if last >= 0:
                cz = mat[last][z]
                nxt = [w for w in cands[i + 1 :] if mat[last][w] == cz]
            else:
                nxt = cands[i + 1 :]
            chosen.append(z)
            grow(chosen, nxt)
            chosen.pop()
            if best >= top:
                return

    def extract(chosen: list[int], cands: list[int], target: int) -> tuple[int, ...] | None:
        bump()
        if len(chosen) == target:
            return tuple(chosen)
        if len(chosen) + len(cands) < target:
            return None
        last = chosen[-1] if chosen else -1
        for i, z in enumerate(cands):
            if last >= 0:
                cz = mat[last][z]
                nxt = [w for w in cands[i + 1 :] if mat[last][w] == cz]
            else:
                nxt = cands[i + 1 :]
            chosen.append(z)
            got = extract(chosen, nxt, target)
            chosen.pop()
            if got is not None:
                return got
        return None

    if n == 0 or top == 0:
        return SearchOutcome(0, MinHomogWitness((), {}), nodes, "branch_and_bound")
    if top <= 2 or n <= 2:
        size = min(top, n, 2)
        return SearchOutcome(
            size, _witness(coloring, dom[:size]), nodes, "branch_and_bound"
        )

    grow([], list(range(n)))
    combo = extract([], list(range(n)), best)
    assert combo is not None  # phase one found a set of this size
    elements = tuple(dom[i] for i in combo)
    return SearchOutcome(
        max_size=best,
        witness=_witness(coloring, elements),
        nodes=nodes,
        method="branch_and_bound",
    )


# ---------------------------------------------------------------------------
# Exact thresholds for forced min-homogeneous k-subsets on {1..N}
# ---------------------------------------------------------------------------

def _rgs_strings(length: int, max_blocks: int):
    """Restricted-growth strings: canonical set partitions of ``length`` items
    into at most ``max_blocks`` blocks.

    Yields, in lexicographic order, every string s with s[0] = 0 and
    s[j] <= min(max(prefix) + 1, max_blocks - 1).
    """
    if length == 0:
        yield ()
        return
    s = [0] * length

    def rec(j: int, top: int):
        if j == length:
            yield tuple(s)
            return
        hi = top + 1 if top + 1 < max_blocks else max_blocks - 1
        for v in range(hi + 1):
            s[j] = v
            yield from rec(j + 1, top if v <= top else v)

    yield from rec(1, 0)


@dataclass
class NuCertificate:
    """Decision for one (N, k): either every regressive coloring of {1..N} is
    forced to contain a min-homogeneous k-subset, or an explicit avoider."""

    n: int
    k: int
    forced: bool
    avoider_rows: dict[int, tuple[int, ...]] | None
    nodes: int

    @property
    def verdict(self) -> str:
        return "forced" if self.forced else "avoider_exists"

    def avoider(self) -> PairColoring:
        if self.avoider_rows is None:
            raise ValueError("no avoider on a forced certificate")
        return PairColoring.from_rgs_rows(self.n, self.avoider_rows)


def _trivial_rows(n: int) -> dict[int, tuple[int, ...]]:
    return {x: (0,) * (n - x) for x in range(1, n)}


def _creates_forced_set(
    rows: dict[int, tuple[int, ...]], t: int, n: int, k: int
) -> bool:
    """After assigning row t, is some k-subset with third-largest-or-deeper
    structure newly decided and min-homogeneous?

    A k-subset S = {s_1 < ... < s_k} is decided by the rows of s_1..s_{k-2}
    (the top two elements never constrain S), so S is checked exactly once:
    when the row of its (k-2)-nd element is assigned.
    """
    row_t = rows[t]
    by_color: dict[int, list[int]] = defaultdict(list)
    for j, y in enumerate(range(t + 1, n + 1)):
        by_color[row_t[j]].append(y)
    pairs = [
        (y, z)
        for members in by_color.values()
        for y, z in combinations(members, 2)
    ]
    if not pairs:
        return False
    if k == 3:
        return True
    for lower in combinations(range(1, t), k - 3):
        for y, z in pairs:
            tail = [*lower, t, y, z]
            ok = True
            for i, p in enumerate(tail[:-2]):
                if p == t:
                    break  # row t already agrees on (y, z) by block choice
                row_p = rows[p]
                first = row_p[tail[i + 1] - p - 1]
                if any(row_p[w - p - 1] != first for w in tail[i + 2 :]):
                    ok = False
                    break
            if ok:
                return True
    return False


def nu_decision(n: int, k: int, node_limit: int = DEFAULT_NODE_LIMIT) -> NuCertificate:
    """Decide whether every regressive coloring of {1..N} contains a
    min-homogeneous k-subset.

    Backtracks over canonical colorings: row x (colors of pairs with minimum
    x) is a restricted-growth string over at most min(x, N - x) blocks - the
    row of 1 is forced monochromatic, matching regressiveness, and block
    counts cap the distinct colors a regressive row can take.  A branch is cut
    as soon as its already-decided pairs force a min-homogeneous k-subset;
    pruning never discards an avoider because extensions preserve decided
    pairs.  Node accounting covers every row assignment attempted.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n} k={k}")
    if n < k:
        return NuCertificate(n, k, forced=False, avoider_rows=_trivial_rows(n), nodes=0)
    if k <= 2:
        # any subset of size <= 2 is vacuously min-homogeneous
        return NuCertificate(n, k, forced=True, avoider_rows=None, nodes=0)

    rows: dict[int, tuple[int, ...]] = {}
    nodes = 0

    def assign(x: int) -> dict[int, tuple[int, ...]] | None:
        nonlocal nodes
        if x == n:
            return dict(rows)
        length = n - x
        for rgs in _rgs_strings(length, min(x, length)):
            nodes += 1
            if nodes > node_limit:
                raise SearchLimitExceeded(f"node limit {node_limit} hit", nodes)
            rows[x] = rgs
            if not _creates_forced_set(rows, x, n, k):
                found = assign(x + 1)
                if found is not None:
                    return found
        rows.pop(x, None)
        return None

    avoider = assign(1)
    if avoider is None:
        return NuCertificate(n, k, forced=True, avoider_rows=None, nodes=nodes)
    return NuCertificate(n, k, forced=False, avoider_rows=avoider, nodes=nodes)


def nu_value(k: int, n_cap: int, node_limit: int = DEFAULT_NODE_LIMIT) -> int | None:
    """Least N <= n_cap forcing a min-homogeneous k-subset, or None if no such
    N exists below the cap.

    Forcedness is monotone in N (a coloring of a larger domain restricts), so
    the first forced N in an upward sweep is the threshold.
    """
    for n in range(k, n_cap + 1):
        if nu_decision(n, k, node_limit).forced:
            return n
    return None


# ---------------------------------------------------------------------------
# DIMACS CNF export
# ---------------------------------------------------------------------------

@dataclass
class CnfDocument:
    """CNF encoding of 'some regressive coloring of {1..N} avoids all
    min-homogeneous k-subsets'.

    One-hot color variables (pair, color < pair minimum) keep regressiveness
    structural; equality indicators e(x; y, z) <-> c(x,y) = c(x,z) make the
    per-k-subset avoidance clauses linear in the subset size.
    """

    n: int
    k: int
    num_vars: int
    clauses: list[tuple[int, ...]]
    color_var: dict[tuple[int, int, int], int]
    eq_var: dict[tuple[int, int, int], int]
    comments: list[str] = field(default_factory=list)

    def to_dimacs(self) -> str:
        lines = [f"c {text}" for text in self.comments]
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        lines.extend(" ".join(map(str, clause)) + " 0" for clause in self.clauses)
        return "\n".join(lines) + "\n"

    def assignment_from_coloring(self, coloring: PairColoring) -> frozenset[int]:
        """True-variable set encoding ``coloring`` (which must be regressive)."""
        if coloring.domain != tuple(range(1, self.n + 1)):
            raise ValueError(f"coloring domain must be 1..{self.n}")
        true_vars = set()
        for (x, y), c in coloring.colors.items():
            var = self.color_var.get((x, y, c))
            if var is None:
                raise ValueError(f"color {c} of pair ({x}, {y}) is not regressive")
            true_vars.add(var)
        for (x, y, z), var in self.eq_var.items():
            if coloring.color(x, y) == coloring.color(x, z):
                true_vars.add(var)
        return frozenset(true_vars)

    def check_assignment(self, true_vars) -> bool:
        """True when every clause has a satisfied literal under the assignment."""
        tv = set(true_vars)
        return all(
            any(lit in tv if lit > 0 else -lit not in tv for lit in clause)
            for clause in self.clauses
        )

    def decode_assignment(self, true_vars) -> PairColoring:
        """Rebuild the coloring from a satisfying assignment (exactly-one
        checked per pair)."""
        tv = set(true_vars)
        colors: dict[tuple[int, int], int] = {}
        chosen: dict[tuple[int, int], list[int]] = defaultdict(list)
        for (x, y, c), var in self.color_var.items():
            if var in tv:
                chosen[(x, y)].append(c)
        for x, y in combinations(range(1, self.n + 1), 2):
            got = chosen.get((x, y), [])
            if len(got) != 1:
                raise ValueError(f"pair ({x}, {y}) has {len(got)} colors in assignment")
            colors[(x, y)] = got[0]
        return PairColoring(tuple(range(1, self.n + 1)), colors)


def export_cnf(n: int, k: int, max_clauses: int = 10**6) -> CnfDocument:
    """Build the avoidance CNF for domain {1..N} and subset size k."""
    if n < 1 or k < 3:
        raise ValueError(f"need n >= 1 and k >= 3, got n={n} k={k}")
    total = (
        comb(n, 2)                                            # at-least-one
        + sum(comb(x, 2) for x, _y in combinations(range(1, n + 1), 2))
        + sum(2 * x for x, _y, _z in combinations(range(1, n + 1), 3))
        + comb(n, k)                                          # avoidance
    )
    if total > max_clauses:
        raise ValueError(
            f"CNF for n={n} k={k} needs {total} clauses, over the guard {max_clauses}"
        )
    color_var: dict[tuple[int, int, int], int] = {}
    eq_var: dict[tuple[int, int, int], int] = {}
    comments = [
        f"avoidance of min-homogeneous {k}-subsets by a regressive pair coloring of 1..{n}",
        "color variables: one per (pair, admissible color); colors run below the pair minimum",
    ]
    v = 0
    for x, y in combinations(range(1, n + 1), 2):
        for c in range(x):
            v += 1
            color_var[(x, y, c)] = v
            comments.append(f"var {v} : color({x},{y}) = {c}")
    for x, y, z in combinations(range(1, n + 1), 3):
        v += 1
        eq_var[(x, y, z)] = v
        comments.append(f"var {v} : color({x},{y}) = color({x},{z})")

    clauses: list[tuple[int, ...]] = []
    for x, y in combinations(range(1, n + 1), 2):
        group = [color_var[(x, y, c)] for c in range(x)]
        clauses.append(tuple(group))  # at least one color
        clauses.extend((-a, -b) for a, b in combinations(group, 2))  # at most one
    for (x, y, z), e in eq_var.items():
        for c in range(x):
            vy = color_var[(x, y, c)]
            vz = color_var[(x, z, c)]
            clauses.append((-e, -vy, vz))  # e and c(x,y)=c  ->  c(x,z)=c
            clauses.append((e, -vy, -vz))  # c(x,y)=c and c(x,z)=c  ->  e
    for subset in combinations(range(1, n + 1), k):
        clause = []
        for i, x in enumerate(subset[:-2]):
            for y, z in combinations(subset[i + 1 :], 2):
                clause.append(-eq_var[(x, y, z)])
        clauses.append(tuple(clause))  # not every within-row equality can hold

    assert len(clauses) == total
    return CnfDocument(
        n=n,
        k=k,
        num_vars=v,
        clauses=clauses,
        color_var=color_var,
        eq_var=eq_var,
        comments=comments,
    )
