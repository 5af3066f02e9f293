"""Exact geometry of real line arrangements.

The whole pipeline runs on arrangements of affine lines y = m*x + c with
rational coefficients, pairwise distinct slopes (no two lines parallel) and
no vertical lines.  Lines carry labels 1..n assigned by strictly decreasing
slope, so far to the right of every intersection the top-to-bottom reading
of the lines is exactly 1, 2, ..., n.

Everything here is exact: coefficients are `fractions.Fraction`, equality
tests are decidable, and identical input produces bit-identical output.  No
float is ever consulted.

Intersection points are ranked by strictly decreasing x-coordinate.  Two
distinct points sharing an x-coordinate violate the genericity the ranking
needs; that raises `NonGenericX` instead of being silently perturbed, and
`shear_to_generic` performs the repair explicitly when the caller asks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Rational = Fraction
# Accepted spellings of an exact rational input value.  Floats are rejected
# on purpose: they smuggle binary rounding into an exact pipeline.
RationalLike = Fraction | int | str


class DuplicateSlope(ValueError):
    """Two input lines are parallel, which no arrangement here may be."""

    def __init__(self, first: int, second: int, slope: Fraction):
        self.first = first
        self.second = second
        self.slope = slope
        super().__init__(
            f"input lines {first} and {second} share slope {slope}; "
            "arrangements must have pairwise distinct slopes"
        )


class NonGenericX(ValueError):
    """Two distinct intersection points share an x-coordinate.

    Carries the two offending points as (x, y, line ids) triples.  The
    caller may apply `shear_to_generic` and retry.
    """

    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(
            f"intersection points {first[2]} at (x={first[0]}, y={first[1]}) and "
            f"{second[2]} at (x={second[0]}, y={second[1]}) share an x-coordinate; "
            "apply shear_to_generic to restore x-genericity"
        )


class InvariantViolation(RuntimeError):
    """An internal exactness invariant failed.

    This signals a bug in the library, never bad user input; computation
    must abort rather than continue on a broken combinatorial state.
    """


def as_rational(value: RationalLike) -> Fraction:
    """Convert an exact input (Fraction, int, or 'p/q' string) to Fraction."""
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: coefficients must be exact rationals "
            "(Fraction, int, or 'p/q' string)"
        )
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class Line:
    """An affine line y = slope*x + intercept, labeled by its arrangement id."""

    id: int
    slope: Fraction
    intercept: Fraction
    name: str | None = field(default=None, compare=False)

    def y_at(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    @property
    def display_name(self) -> str:
        return self.name if self.name is not None else f"L{self.id}"


@dataclass(frozen=True)
class Arrangement:
    """Lines labeled 1..n by strictly decreasing slope.

    `source_order[k]` records which input line (0-based) became line k+1;
    it is diagnostic only and ignored by equality.
    """

    lines: tuple[Line, ...]
    source_order: tuple[int, ...] = field(default=(), compare=False)

    @property
    def n(self) -> int:
        return len(self.lines)

    def line(self, line_id: int) -> Line:
        if not 1 <= line_id <= self.n:
            raise ValueError(f"line id {line_id} outside 1..{self.n}")
        return self.lines[line_id - 1]


@dataclass(frozen=True)
class IntersectionPoint:
    """An exact intersection point with its incident lines and x-rank.

    `lines` is the sorted tuple of ids of all lines through the point (a
    triple concurrence is one point with three lines, not three points).
    Rank 1 is the point of largest x; ranks strictly decrease in x.
    """

    x: Fraction
    y: Fraction
    lines: tuple[int, ...]
    rank: int


@dataclass(frozen=True)
class OrderProfile:
    """Top-to-bottom (decreasing y) reading of the lines over one interval.

    Profile 0 lives to the right of every intersection, profile j between
    the projections of points of rank j and j+1; consecutive profiles
    differ by reversing the contiguous block of lines through one point.
    """

    index: int
    order: tuple[int, ...]


def validate_arrangement(
    coefficients: Iterable[Sequence[RationalLike | str | None]],
) -> Arrangement:
    """Build an Arrangement from (slope, intercept[, name]) entries.

    Lines are relabeled 1..n by strictly decreasing slope; the original
    input positions are kept in `source_order` for diagnostics.  Raises
    `DuplicateSlope` when two entries are parallel.
    """
    raw: list[tuple[Fraction, Fraction, str | None]] = []
    for entry in coefficients:
        if len(entry) not in (2, 3):
            raise ValueError(f"expected (slope, intercept[, name]), got {entry!r}")
        slope = as_rational(entry[0])
        intercept = as_rational(entry[1])
        name = entry[2] if len(entry) == 3 else None
        if name is not None and not isinstance(name, str):
            raise TypeError(f"line name must be a string, got {name!r}")
        raw.append((slope, intercept, name))
    if not raw:
        raise ValueError("an arrangement needs at least one line")

    by_slope: dict[Fraction, int] = {}
    for pos, (slope, _, _) in enumerate(raw):
        if slope in by_slope:
            raise DuplicateSlope(by_slope[slope] + 1, pos + 1, slope)
        by_slope[slope] = pos

    order = sorted(range(len(raw)), key=lambda pos: raw[pos][0], reverse=True)
    lines = tuple(
        Line(rank + 1, raw[pos][0], raw[pos][1], raw[pos][2])
        for rank, pos in enumerate(order)
    )
    return Arrangement(lines, tuple(order))


def _group_points(arr: Arrangement) -> dict[tuple[Fraction, Fraction], set[int]]:
    """Group the pairwise intersections by exact coordinates."""
    groups: dict[tuple[Fraction, Fraction], set[int]] = {}
    for a, b in combinations(arr.lines, 2):
        x = (b.intercept - a.intercept) / (a.slope - b.slope)
        y = a.y_at(x)
        groups.setdefault((x, y), set()).update((a.id, b.id))
    return groups


def intersections(arr: Arrangement) -> tuple[IntersectionPoint, ...]:
    """All intersection points, grouped exactly and ranked by decreasing x.

    Raises `NonGenericX` when two distinct points share an x-coordinate.
    """
    if arr.n < 2:
        raise ValueError("intersections need at least two lines")
    groups = _group_points(arr)
    ordered = sorted(groups.items(), key=lambda item: item[0][0], reverse=True)
    for (first, members_a), (second, members_b) in zip(ordered, ordered[1:]):
        if first[0] == second[0]:
            raise NonGenericX(
                (first[0], first[1], tuple(sorted(members_a))),
                (second[0], second[1], tuple(sorted(members_b))),
            )
    points = tuple(
        IntersectionPoint(x, y, tuple(sorted(members)), rank)
        for rank, ((x, y), members) in enumerate(ordered, start=1)
    )
    pair_count = sum(len(p.lines) * (len(p.lines) - 1) // 2 for p in points)
    if pair_count != arr.n * (arr.n - 1) // 2:
        raise InvariantViolation(
            f"pair count {pair_count} != C({arr.n},2); intersection grouping is broken"
        )
    return points


def line_multiplicities(arr: Arrangement, points: Sequence[IntersectionPoint] | None = None) -> dict[int, int]:
    """Number of intersection points on each line, keyed by line id."""
    if points is None:
        points = intersections(arr)
    mu = {line.id: 0 for line in arr.lines}
    for p in points:
        for line_id in p.lines:
            mu[line_id] += 1
    return mu


def _order_at(arr: Arrangement, x: Fraction) -> tuple[int, ...]:
    heights = sorted(arr.lines, key=lambda line: line.y_at(x), reverse=True)
    values = [line.y_at(x) for line in heights]
    if len(set(values)) != len(values):
        raise InvariantViolation(f"sample x={x} hits an intersection; bad sample choice")
    return tuple(line.id for line in heights)


def order_profiles(arr: Arrangement) -> tuple[OrderProfile, ...]:
    """The fiber orders O_0 .. O_s over the intervals between projections.

    O_0 is the identity order (1, ..., n); O_j arises from O_{j-1} by
    reversing the contiguous block of lines through the rank-j point.  Both
    facts are recomputed and enforced; a violation aborts because it can
    only mean broken arithmetic, never bad input.
    """
    if arr.n == 1:
        return (OrderProfile(0, (1,)),)
    points = intersections(arr)
    xs = [p.x for p in points]
    samples = [xs[0] + 1]
    samples += [(xs[j] + xs[j + 1]) / 2 for j in range(len(xs) - 1)]
    samples += [xs[-1] - 1]

    profiles = [OrderProfile(j, _order_at(arr, x)) for j, x in enumerate(samples)]
    if profiles[0].order != tuple(range(1, arr.n + 1)):
        raise InvariantViolation(
            f"basepoint order {profiles[0].order} is not the identity; "
            "slope ordering is broken"
        )
    for j, point in enumerate(points, start=1):
        prev = profiles[j - 1].order
        positions = sorted(prev.index(line_id) for line_id in point.lines)
        lo, hi = positions[0], positions[-1]
        if positions != list(range(lo, hi + 1)):
            raise InvariantViolation(
                f"lines {point.lines} not contiguous in profile {j - 1}: {prev}"
            )
        expected = prev[:lo] + tuple(reversed(prev[lo : hi + 1])) + prev[hi + 1 :]
        if profiles[j].order != expected:
            raise InvariantViolation(
                f"profile {j} is {profiles[j].order}, expected block reversal {expected}"
            )
    return tuple(profiles)


def _shear_lines(arr: Arrangement, t: Fraction) -> Arrangement | None:
    """Apply (x, y) -> (x - t*y, y); None when the shear is inadmissible.

    A line y = m*x + c maps to slope m/(1 - m*t), intercept c/(1 - m*t);
    the shear is inadmissible if some line turns vertical or the slope
    order (hence the labeling) changes.
    """
    transformed = []
    for line in arr.lines:
        denom = 1 - line.slope * t
        if denom == 0:
            return None
        transformed.append(Line(line.id, line.slope / denom, line.intercept / denom, line.name))
    slopes = [line.slope for line in transformed]
    if any(a <= b for a, b in zip(slopes, slopes[1:])):
        return None
    return Arrangement(tuple(transformed), arr.source_order)


def _partition(groups: dict[tuple[Fraction, Fraction], set[int]]) -> set[frozenset[int]]:
    return {frozenset(members) for members in groups.values()}


def shear_to_generic(arr: Arrangement) -> tuple[Arrangement, Fraction]:
    """Shear (x, y) -> (x - t*y, y) until intersection x's are distinct.

    Tries t = 0 first, then 1/2, 1/4, 1/8, ...; the first admissible t that
    also preserves the concurrency combinatorics wins.  Only finitely many
    t can collide a pair of x's, flip the slope order, or create a vertical
    line, so the halving search terminates.
    """

    def is_generic(candidate: Arrangement) -> bool:
        if candidate.n < 2:
            return True
        try:
            intersections(candidate)
        except NonGenericX:
            return False
        return True

    if is_generic(arr):
        return arr, Fraction(0)

    partition = _partition(_group_points(arr))
    t = Fraction(1, 2)
    for _ in range(256):
        candidate = _shear_lines(arr, t)
        if candidate is not None and is_generic(candidate):
            if _partition(_group_points(candidate)) != partition:
                raise InvariantViolation(
                    f"shear by t={t} changed the concurrency combinatorics"
                )
            return candidate, t
        t /= 2
    raise InvariantViolation("no admissible shear found; this cannot happen")
