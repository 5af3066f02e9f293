"""Braid monodromy of a real line arrangement and the relation it carries.

Transporting the fiber of the vertical projection from a basepoint right of
everything to a small circle around the rank-k intersection point, along a
path that detours through the upper half plane around every earlier-ranked
projection, braids the fiber points.  Combinatorially the transport is

    beta_k = half_twist(B_1) * half_twist(B_2) * ... * half_twist(B_{k-1}),

one positive block half twist per detour, taken in temporal order (the
detour nearest the basepoint happens first); B_j is the contiguous block of
positions occupied in the fiber order O_{j-1} by the lines through the
rank-j point.  The detour sign is positive because moving the fiber across
a projection through the upper half plane rotates the local cluster
counterclockwise by half a turn; the sign is pinned operationally by the
negative-control tests (flipping it kills the classical lantern).

The loop around the rank-k point then acts as the conjugated full twist

    alpha_k = beta_k * full_twist(B_k) * beta_k^{-1}        (temporal),

an interior Dehn twist whose curve encloses exactly the lines through the
point.  Composing the loops so that the twist at the LEFTMOST point (rank
s, smallest x) acts first telescopes the product to

    alpha_s * ... * alpha_1
      = (D_1 ... D_{s-1}) D_s^2 (D_{s-1} ... D_1)          D_j = half_twist(B_j)
      = [D_1 ... D_s] [D_s ... D_1] = full twist on all strands,

because each product in brackets is a positive word in which every pair of
strands crosses exactly once, i.e. a half twist of the whole fiber.  That
is the braid part of the arrangement's relation; framings do the boundary
bookkeeping on top of it.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .braids import BraidWord, artin_image, half_twist_block
from .framed import (
    FramedElement,
    TwistDescriptor,
    compose,
    compose_all,
    conjugated_twist,
    identity_element,
    inner_boundary_twist,
    outer_boundary_twist,
    twist_label,
)
from .geometry import (
    Arrangement,
    IntersectionPoint,
    InvariantViolation,
    intersections,
    line_multiplicities,
    order_profiles,
)
from .relation import Relation, VerificationReport, Witness


@dataclass(frozen=True)
class PointTwist:
    """Monodromy data attached to one intersection point."""

    point: IntersectionPoint
    descriptor: TwistDescriptor
    element: FramedElement


@dataclass(frozen=True)
class MonodromyData:
    """Per-point conjugators, blocks, enclosed sets and twists, rank order."""

    arrangement: Arrangement
    twists: tuple[PointTwist, ...]

    @property
    def n(self) -> int:
        return self.arrangement.n


def braid_monodromy(arr: Arrangement) -> MonodromyData:
    """Conjugator, block, and twist for every intersection point.

    Requires x-generic input; propagates NonGenericX otherwise.  The
    descriptor consistency (the conjugator really carries the enclosed
    lines onto the block) is re-checked at construction for every point.
    """
    points = intersections(arr)
    profiles = order_profiles(arr)
    beta_letters: list[int] = []
    twists: list[PointTwist] = []
    for point in points:
        before = profiles[point.rank - 1].order
        positions = sorted(before.index(line_id) + 1 for line_id in point.lines)
        lo, hi = positions[0], positions[-1]
        if positions != list(range(lo, hi + 1)):
            raise InvariantViolation(
                f"lines {point.lines} occupy non-contiguous positions {positions} "
                f"in profile {point.rank - 1}"
            )
        conjugator = BraidWord(arr.n, tuple(beta_letters))
        descriptor = TwistDescriptor(
            conjugator, (lo, hi), frozenset(point.lines), twist_label(point.lines)
        )
        twists.append(PointTwist(point, descriptor, conjugated_twist(descriptor)))
        beta_letters.extend(half_twist_block(arr.n, lo, hi).letters)
    return MonodromyData(arr, tuple(twists))


def lantern_relation(arr: Arrangement, name: str = "lantern") -> Relation:
    """The generalized lantern relation the arrangement carries.

    Left side: outer twist times inner twists to the power mu_L - 1 (all
    commuting).  Right side: the conjugated interior twists in temporal
    order, leftmost intersection point acting first.
    """
    data = braid_monodromy(arr)
    mu = line_multiplicities(arr, [t.point for t in data.twists])
    lhs_pairs = ((0, 1),) + tuple((line.id, mu[line.id] - 1) for line in arr.lines)
    lhs_element = outer_boundary_twist(arr.n)
    for line in arr.lines:
        lhs_element = compose(lhs_element, inner_boundary_twist(arr.n, line.id) ** (mu[line.id] - 1))
    ordered = tuple(reversed(data.twists))  # temporal order: smallest x first
    rhs_element = compose_all((t.element for t in ordered), n=arr.n)
    return Relation(
        name=name,
        n=arr.n,
        lhs=lhs_pairs,
        rhs=tuple(t.descriptor for t in ordered),
        lhs_element=lhs_element,
        rhs_element=rhs_element,
    )


def verify_relation(relation: Relation) -> VerificationReport:
    """Decide the relation exactly; failure is a report, not an exception.

    The framing check amounts to "the framing at every line equals mu_L on
    both sides"; the braid check is the nontrivial identity between the
    full twist and the product of conjugated block twists.  On braid
    failure the report carries the first free-group generator whose images
    differ, with both image words.
    """
    lhs, rhs = relation.lhs_element, relation.rhs_element
    framing_ok = lhs.framing == rhs.framing
    lhs_images = artin_image(lhs.braid)
    rhs_images = artin_image(rhs.braid)
    braid_ok = lhs_images == rhs_images
    witness = None
    if not braid_ok:
        for j, (left, right) in enumerate(zip(lhs_images, rhs_images), start=1):
            if left != right:
                witness = Witness(j, left, right)
                break
    return VerificationReport(braid_ok, framing_ok, lhs, rhs, witness)


def verified_relation(arr: Arrangement, name: str = "lantern") -> Relation:
    """Convenience: the relation with its verification report attached."""
    relation = lantern_relation(arr, name)
    return replace(relation, report=verify_relation(relation))


def total_monodromy(arr: Arrangement) -> FramedElement:
    """Monodromy of the big circle around all intersection projections.

    Composes the loop monodromies (product of inner twists of the incident
    lines)^{-1} * alpha_k in temporal order, leftmost point first.  For
    every valid generic arrangement this equals the full twist with zero
    framing, which is deformation invariance made computational: sliding
    all lines into a pencil cannot change what happens at infinity.
    """
    data = braid_monodromy(arr)
    result = identity_element(arr.n)
    for twist in reversed(data.twists):
        incident = compose_all(
            (inner_boundary_twist(arr.n, line_id) for line_id in twist.point.lines),
            n=arr.n,
        )
        result = compose(result, compose(incident.inverse(), twist.element))
    return result
