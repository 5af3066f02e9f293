"""Named arrangement families, pair orderings, and structure checkers.

Families:

* pencil: all lines through one point; the relation degenerates to the
  outer twist equalling one interior twist around everything.
* wajnryb: a fully generic arrangement realizing the lexicographic pair
  order, built by translating the lines of a pencil one at a time.
* daisy: lines 2..n concurrent, line 1 crossing them to the right of the
  center, rightmost crossing with line 2.
* doubled daisy: lines 2..n-1 concurrent, line 1 crossing everything to
  the right of the center, line n crossing the middle lines to its left.

A PairOrdering lists the C(n,2) unordered pairs in decreasing order of the
x-coordinate of the intersection realizing them (rank order).  An ordering
is admissible when the points of line i against lines j < k keep (i,j)
before (i,k); `realize_ordering` searches for an arrangement realizing an
admissible ordering exactly, using exact linear feasibility over the
intercepts for a handful of slope vectors, and reports `Unrealized` with
its best partial match when the bounded search runs out.  Admissible does
not imply realizable: for any slopes, the x-coordinate of points(i,k) is a
convex combination of those of (i,j) and (j,k) whenever i < j < k, so e.g.
[(1,2), (2,3), (1,3)] on three lines is admissible but never realizable.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations

from .framed import (
    compose,
    compose_all,
    conjugated_twist,
    elements_equal,
    inner_boundary_twist,
)
from .geometry import (
    Arrangement,
    NonGenericX,
    intersections,
    validate_arrangement,
)
from .monodromy import lantern_relation, verify_relation
from .relation import Relation, VerificationReport


class MalformedOrdering(ValueError):
    """A pair ordering misses or repeats a pair (or uses bad pairs)."""


@dataclass(frozen=True)
class PairOrdering:
    """The C(n,2) line pairs listed by decreasing intersection x (rank order)."""

    n: int
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Unrealized:
    """Outcome of an exhausted realization search: honest, with a witness.

    `candidate` realizes the longest target prefix the search could reach
    (when any); `first_mismatch` is the 0-based position where the
    candidate's rank order first departs from the target.
    """

    ordering: PairOrdering
    candidate: Arrangement | None
    realized: PairOrdering | None
    first_mismatch: int | None
    message: str


def validate_ordering(ordering: PairOrdering) -> bool:
    """Admissibility: (i,j) must come before (i,k) whenever j < k.

    Raises MalformedOrdering when the sequence is not a permutation of all
    pairs (i, j) with 1 <= i < j <= n.
    """
    n = ordering.n
    expected = {(i, j) for i, j in combinations(range(1, n + 1), 2)}
    seen = set(ordering.pairs)
    if len(ordering.pairs) != len(expected) or seen != expected:
        missing = sorted(expected - seen)
        extra = sorted(set(ordering.pairs) - expected) or sorted(
            p for p in set(ordering.pairs) if ordering.pairs.count(p) > 1
        )
        raise MalformedOrdering(
            f"not a permutation of all pairs: missing {missing}, bad/duplicated {extra}"
        )
    position = {pair: k for k, pair in enumerate(ordering.pairs)}
    for i in range(1, n + 1):
        ranks = [position[(i, j)] for j in range(i + 1, n + 1)]
        if any(a >= b for a, b in zip(ranks, ranks[1:])):
            return False
    return True


def extract_pair_ordering(arr: Arrangement) -> PairOrdering:
    """Rank-ordered pair list of a simple (double points only) arrangement."""
    points = intersections(arr)
    pairs = []
    for point in points:
        if len(point.lines) != 2:
            raise ValueError(
                f"point of rank {point.rank} lies on {len(point.lines)} lines; "
                "pair orderings only make sense for simple arrangements"
            )
        pairs.append((point.lines[0], point.lines[1]))
    return PairOrdering(arr.n, tuple(pairs))


# ---------------------------------------------------------------------------
# constructors


def make_pencil(n: int) -> Arrangement:
    """n lines through the origin with slopes n, n-1, ..., 1."""
    if n < 2:
        raise ValueError(f"a pencil needs n >= 2 lines, got {n}")
    return validate_arrangement([(n + 1 - i, 0) for i in range(1, n + 1)])


def make_daisy(n: int) -> Arrangement:
    """Lines 2..n through the origin, line 1 crossing them to the right.

    Slopes n, n-1, ..., 1 and intercept -1 on line 1 put the crossing with
    line j at x = 1/(j-1), so the rightmost crossing is with line 2 and the
    crossings march monotonically toward the center.
    """
    if n < 3:
        raise ValueError(f"a daisy needs n >= 3 lines, got {n}")
    coefficients = [(n, -1)] + [(n + 1 - i, 0) for i in range(2, n + 1)]
    return validate_arrangement(coefficients)


def make_doubled_daisy(n: int) -> Arrangement:
    """Middle lines 2..n-1 concurrent, line 1 crossing right, line n left.

    With slopes n, n-1, ..., 1, intercept -1 on line 1 and -1/2 on line n:
    line 1 meets line j at x = 1/(j-1) > 0 and line n at x = 1/(2(n-1)),
    still right of the center; line n meets line j at x = -1/(2(n-j)) < 0,
    nearest crossing with line 2.  All 2n-2 points have distinct x.
    """
    if n < 5:
        raise ValueError(f"a doubled daisy needs n >= 5 lines, got {n}")
    coefficients: list[tuple[Fraction, Fraction]] = [(Fraction(n), Fraction(-1))]
    coefficients += [(Fraction(n + 1 - i), Fraction(0)) for i in range(2, n)]
    coefficients += [(Fraction(1), Fraction(-1, 2))]
    return validate_arrangement(coefficients)


def _wajnryb_step_target(n: int, moved: int) -> list[frozenset[int]]:
    """Expected rank-ordered line sets after translating lines 1..moved."""
    target = [
        frozenset((i, j))
        for i in range(1, moved + 1)
        for j in range(i + 1, n + 1)
    ]
    if n - moved >= 2:
        target.append(frozenset(range(moved + 1, n + 1)))
    return target


def realize_wajnryb(n: int) -> Arrangement:
    """Generic arrangement whose pair order is lexicographic.

    Starts from a pencil and translates lines in slope order by rapidly
    decreasing offsets, halving each offset until the new intersections sit
    strictly left of every previously created one (rechecked globally and
    exactly after each step).  The offsets can always be shrunk into place,
    so the search terminates.
    """
    if n < 3:
        raise ValueError(f"the lexicographic family needs n >= 3 lines, got {n}")
    slopes = [Fraction(n + 1 - i) for i in range(1, n + 1)]
    offsets = [Fraction(0)] * n

    def current(upto: int) -> Arrangement:
        return validate_arrangement(
            [(slopes[i], -slopes[i] * offsets[i]) for i in range(n)]
        )

    def step_ok(moved: int) -> bool:
        try:
            points = intersections(current(moved))
        except NonGenericX:
            return False
        realized = [frozenset(p.lines) for p in points]
        return realized == _wajnryb_step_target(n, moved)

    previous = Fraction(1)
    for index in range(n - 1):
        candidate = previous if index == 0 else previous / 2
        for _ in range(10_000):
            offsets[index] = candidate
            if step_ok(index + 1):
                break
            candidate /= 2
        else:
            raise RuntimeError("offset halving failed to settle; this cannot happen")
        previous = offsets[index]
    return current(n - 1)


# ---------------------------------------------------------------------------
# exact feasibility search for pair orderings

_Ineq = tuple[tuple[Fraction, ...], Fraction]  # sum(coeff*c) + const > 0


def _fm_feasible_point(ineqs: list[_Ineq], nvars: int) -> list[Fraction] | None:
    """A point satisfying all strict inequalities, or None (Fourier-Motzkin)."""
    stages: list[tuple[int, list[_Ineq]]] = []
    current = ineqs
    for v in range(nvars - 1, -1, -1):
        stages.append((v, current))
        pos = [q for q in current if q[0][v] > 0]
        neg = [q for q in current if q[0][v] < 0]
        new = [q for q in current if q[0][v] == 0]
        for p in pos:
            for q in neg:
                ap, aq = p[0][v], q[0][v]
                coeffs = tuple(
                    p[0][k] * (-aq) + q[0][k] * ap for k in range(nvars)
                )
                new.append((coeffs, p[1] * (-aq) + q[1] * ap))
        current = new
    if any(const <= 0 for _, const in current):
        return None
    values = [Fraction(0)] * nvars
    for v, stage in reversed(stages):
        lower: Fraction | None = None
        upper: Fraction | None = None
        for coeffs, const in stage:
            a = coeffs[v]
            if a == 0:
                continue
            rest = const + sum(coeffs[k] * values[k] for k in range(v))
            bound = -rest / a
            if a > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        if lower is not None and upper is not None:
            values[v] = (lower + upper) / 2
        elif lower is not None:
            values[v] = lower + 1
        elif upper is not None:
            values[v] = upper - 1
    return values


def _pair_forms(
    slopes: list[Fraction], pairs: list[tuple[int, int]]
) -> dict[tuple[int, int], tuple[Fraction, ...]]:
    """Intersection x of each pair as a linear form in c_2..c_n (c_1 = 0)."""
    n = len(slopes)
    forms = {}
    for i, j in pairs:
        coeffs = [Fraction(0)] * (n - 1)
        weight = 1 / (slopes[i - 1] - slopes[j - 1])
        if j >= 2:
            coeffs[j - 2] += weight
        if i >= 2:
            coeffs[i - 2] -= weight
        forms[(i, j)] = tuple(coeffs)
    return forms


def _chain_inequalities(
    forms: dict[tuple[int, int], tuple[Fraction, ...]],
    chain: list[tuple[int, int]],
    below: list[tuple[int, int]],
    nvars: int,
) -> list[_Ineq]:
    ineqs: list[_Ineq] = []
    for u, v in zip(chain, chain[1:]):
        coeffs = tuple(a - b for a, b in zip(forms[u], forms[v]))
        ineqs.append((coeffs, Fraction(0)))
    for q in below:
        coeffs = tuple(a - b for a, b in zip(forms[chain[-1]], forms[q]))
        ineqs.append((coeffs, Fraction(0)))
    return ineqs


def _slope_candidates(n: int) -> list[list[Fraction]]:
    return [
        [Fraction(n + 1 - i) for i in range(1, n + 1)],
        [Fraction(2) ** (n - i) for i in range(1, n + 1)],
        [Fraction((n + 1 - i) ** 2) for i in range(1, n + 1)],
        [Fraction(1, i) for i in range(1, n + 1)],
    ]


def _arrangement_from_intercepts(
    slopes: list[Fraction], values: list[Fraction]
) -> Arrangement:
    intercepts = [Fraction(0)] + list(values)
    return validate_arrangement(list(zip(slopes, intercepts)))


def realize_ordering(ordering: PairOrdering) -> Arrangement | Unrealized:
    """Search for an arrangement realizing an admissible pair order exactly.

    For each candidate slope vector the realized order is a conjunction of
    strict linear inequalities over the intercepts, decided exactly; the
    first feasible system yields the arrangement (whose relation is then
    verified).  On exhaustion the result is Unrealized carrying the longest
    realizable target prefix found.
    """
    if not validate_ordering(ordering):
        raise ValueError(
            "ordering violates the admissibility condition; rejected before search"
        )
    n = ordering.n
    target = list(ordering.pairs)
    best: tuple[int, Arrangement | None] = (0, None)
    for slopes in _slope_candidates(n):
        forms = _pair_forms(slopes, target)
        ineqs = _chain_inequalities(forms, target, [], n - 1)
        values = _fm_feasible_point(ineqs, n - 1)
        if values is not None:
            arr = _arrangement_from_intercepts(slopes, values)
            realized = extract_pair_ordering(arr)
            if realized.pairs != ordering.pairs:
                continue  # cannot happen: the inequalities pin the full order
            report = verify_relation(lantern_relation(arr))
            if not report.verified:
                raise RuntimeError("realized arrangement failed verification")
            return arr

        # Longest prefix of the target this slope vector can realize: the
        # prefix chain plus "everything else is strictly smaller".
        lo, hi = 1, len(target) - 1
        best_here = 0
        point = None
        while lo <= hi:
            mid = (lo + hi) // 2
            ineqs = _chain_inequalities(
                forms, target[:mid], target[mid:], n - 1
            )
            candidate_point = _fm_feasible_point(ineqs, n - 1)
            if candidate_point is not None:
                best_here, point = mid, candidate_point
                lo = mid + 1
            else:
                hi = mid - 1
        if best_here > best[0] and point is not None:
            best = (best_here, _arrangement_from_intercepts(slopes, point))

    prefix, candidate = best
    realized = None
    if candidate is not None:
        try:
            realized = extract_pair_ordering(candidate)
        except (ValueError, NonGenericX):
            realized = None
    return Unrealized(
        ordering=ordering,
        candidate=candidate,
        realized=realized,
        first_mismatch=prefix if candidate is not None else 0,
        message=(
            f"no slope candidate admits intercepts realizing the full order; "
            f"longest realizable target prefix: {prefix} of {len(target)} pairs"
        ),
    )


# ---------------------------------------------------------------------------
# structure checks


@dataclass(frozen=True)
class FamilyCheck:
    """Verification plus structural comparison for a named family."""

    name: str
    n: int
    relation: Relation
    verification: VerificationReport
    lhs_ok: bool
    rhs_ok: bool
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.verification.verified and self.lhs_ok and self.rhs_ok


@dataclass(frozen=True)
class DoubledDaisyCheck(FamilyCheck):
    """Doubled daisy check; also re-derives the displayed single-power form.

    The displayed form carries each middle boundary twist once, absorbing
    the second power into the central factor: replacing the center twist
    alpha_q by (d_2 ... d_{n-1})^{-1} alpha_q turns the relation into

        d0 d1^{n-2} d2 ... d_{n-1} dn^{n-2} = (products of pair twists and
        the absorbed center factor),

    which `display_ok` certifies independently.
    """

    display_ok: bool = False


def _structure_check(
    name: str,
    arr: Arrangement,
    expected_rank_sets: list[frozenset[int]],
    expected_lhs: tuple[tuple[int, int], ...],
) -> tuple[Relation, VerificationReport, bool, bool, tuple[str, ...]]:
    relation = lantern_relation(arr, name=name)
    report = verify_relation(relation)
    relation = replace(relation, report=report)
    problems: list[str] = []

    lhs_ok = relation.lhs == expected_lhs
    if not lhs_ok:
        problems.append(
            f"boundary exponents {list(relation.lhs)} != expected {list(expected_lhs)}"
        )

    rank_sets = [d.enclosed for d in reversed(relation.rhs)]  # rank order
    rhs_ok = rank_sets == expected_rank_sets
    if not rhs_ok:
        for k, (got, want) in enumerate(zip(rank_sets, expected_rank_sets), start=1):
            if got != want:
                problems.append(
                    f"rank-{k} factor encloses {sorted(got)}, expected {sorted(want)}"
                )
                break
        if len(rank_sets) != len(expected_rank_sets):
            problems.append(
                f"{len(rank_sets)} interior factors, expected {len(expected_rank_sets)}"
            )
    if not report.verified:
        problems.append("relation failed verification")
    return relation, report, lhs_ok, rhs_ok, tuple(problems)


def check_daisy_arrangement(arr: Arrangement) -> FamilyCheck:
    """Check any arrangement against the daisy pattern for its n."""
    n = arr.n
    expected_sets = [frozenset((1, k)) for k in range(2, n + 1)]
    expected_sets.append(frozenset(range(2, n + 1)))
    expected_lhs = ((0, 1), (1, n - 2)) + tuple((k, 1) for k in range(2, n + 1))
    relation, report, lhs_ok, rhs_ok, problems = _structure_check(
        "daisy", arr, expected_sets, expected_lhs
    )
    return FamilyCheck("daisy", n, relation, report, lhs_ok, rhs_ok, problems)


def check_daisy(n: int) -> FamilyCheck:
    """Build the daisy on n lines and check relation plus structure."""
    return check_daisy_arrangement(make_daisy(n))


def check_doubled_daisy(n: int) -> DoubledDaisyCheck:
    """Build the doubled daisy and check relation, structure, display form."""
    arr = make_doubled_daisy(n)
    expected_sets = [frozenset((1, k)) for k in range(2, n + 1)]
    expected_sets.append(frozenset(range(2, n)))
    expected_sets += [frozenset((k, n)) for k in range(2, n)]
    expected_lhs = (
        ((0, 1), (1, n - 2))
        + tuple((k, 2) for k in range(2, n))
        + ((n, n - 2),)
    )
    relation, report, lhs_ok, rhs_ok, problems = _structure_check(
        "doubled-daisy", arr, expected_sets, expected_lhs
    )

    # Displayed single-power form: absorb one middle boundary twist per
    # line into the central factor and recheck the identity exactly.
    center = frozenset(range(2, n))
    lhs_display = compose(
        relation.lhs_element,
        compose_all(
            (inner_boundary_twist(n, k) for k in range(2, n)), n=n
        ).inverse(),
    )
    factors = []
    for descriptor in relation.rhs:  # temporal order
        factor = conjugated_twist(descriptor)
        if descriptor.enclosed == center:
            absorbed = compose_all(
                (inner_boundary_twist(n, k) for k in range(2, n)), n=n
            ).inverse()
            factor = compose(absorbed, factor)
        factors.append(factor)
    rhs_display = compose_all(factors, n=n)
    display_ok = elements_equal(lhs_display, rhs_display)
    if not display_ok:
        problems = problems + ("displayed single-power form failed to verify",)
    return DoubledDaisyCheck(
        "doubled-daisy", n, relation, report, lhs_ok, rhs_ok, problems, display_ok
    )
