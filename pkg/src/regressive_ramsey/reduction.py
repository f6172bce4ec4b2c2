"""Two-color triple lift of a pair coloring, and its pigeonhole consequences.

A pair coloring c induces a coloring of ordered triples x < y < z with two
colors: RED when c(x, y) = c(x, z), BLUE otherwise.  Red-homogeneous sets are
exactly the min-homogeneous ones (every row is constant), so a witness can be
extracted and re-checked mechanically.  Blue-homogeneous sets of a regressive
coloring are small for pigeonhole reasons: all colors out of the minimum are
pairwise distinct yet lie below the minimum, so a Blue-homogeneous set A has
|A| <= min(A) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .search import MinHomogWitness, PairColoring


class TripleColor(Enum):
    RED = "red"
    BLUE = "blue"


@dataclass
class TripleColoring:
    """The induced two-coloring of triples, stored explicitly at build time."""

    source: PairColoring
    colors: dict[tuple[int, int, int], TripleColor]

    def color(self, x: int, y: int, z: int) -> TripleColor:
        key = tuple(sorted((x, y, z)))
        if len(set(key)) != 3:
            raise ValueError(f"triples need three distinct elements, got {key}")
        return self.colors[key]

    def recompute(self, x: int, y: int, z: int) -> TripleColor:
        """Re-derive one triple color from the source pair coloring."""
        x, y, z = sorted((x, y, z))
        return (
            TripleColor.RED
            if self.source.color(x, y) == self.source.color(x, z)
            else TripleColor.BLUE
        )


def lift_to_triples(coloring: PairColoring) -> TripleColoring:
    """Color every triple RED iff the two pairs out of its minimum agree."""
    colors = {
        (x, y, z): (
            TripleColor.RED
            if coloring.color(x, y) == coloring.color(x, z)
            else TripleColor.BLUE
        )
        for x, y, z in combinations(coloring.domain, 3)
    }
    return TripleColoring(source=coloring, colors=colors)


def extract_min_homog(subset, coloring: PairColoring) -> MinHomogWitness:
    """Turn a Red-homogeneous set into a checked min-homogeneous witness.

    Red-homogeneity of all triples inside ``subset`` says precisely that each
    element's row is constant across the later elements, which is
    min-homogeneity.  Raises ValueError naming the first violating row if the
    set is not Red-homogeneous.
    """
    elems = tuple(sorted(subset))
    row_colors: dict[int, int] = {}
    for i, x in enumerate(elems[:-1]):
        first = coloring.color(x, elems[i + 1])
        for y in elems[i + 2 :]:
            if coloring.color(x, y) != first:
                raise ValueError(
                    f"row of {x} is not constant on the set: "
                    f"c({x},{elems[i + 1]}) = {first} but c({x},{y}) = {coloring.color(x, y)}"
                )
        row_colors[x] = first
    return MinHomogWitness(elements=elems, row_colors=row_colors)


@dataclass
class BlueBoundReport:
    """Exhaustive confirmation that Blue-homogeneous sets obey the pigeonhole
    size cap |A| <= min(A) + 1."""

    domain: tuple[int, ...]
    sets_checked: int = 0
    blue_homogeneous: int = 0
    violations: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def blue_bound_check(coloring: PairColoring) -> BlueBoundReport:
    """Scan every subset of size >= 3 for Blue-homogeneity over the cap.

    For a regressive coloring no violation can exist: a Blue-homogeneous A has
    all colors out of min(A) pairwise distinct and below min(A), giving
    |A| - 1 <= min(A).
    """
    lifted = lift_to_triples(coloring)
    report = BlueBoundReport(domain=coloring.domain)
    for size in range(3, len(coloring.domain) + 1):
        for subset in combinations(coloring.domain, size):
            report.sets_checked += 1
            if all(
                lifted.colors[t] is TripleColor.BLUE
                for t in combinations(subset, 3)
            ):
                report.blue_homogeneous += 1
                if len(subset) > subset[0] + 1:
                    report.violations.append(subset)
    return report
