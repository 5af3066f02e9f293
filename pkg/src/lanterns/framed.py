"""Framed pure-braid model of the mapping class group of a holed sphere.

A genus-zero surface with boundary components d_0 (outer) and d_1 .. d_n
(one per line) has just enough mapping class group for the relations this
library emits.  The model element is a pair

    (pure braid word on n strands, integer framing vector indexed by line),

equality being semantic braid equality together with exact framing
equality.  Only pure braids are ever composed, so line labels stay glued to
strand positions and framings add componentwise; the model is an honest
direct product rather than a permutation-twisted one.  Non-pure braids
appear solely inside twist descriptors as conjugators.

Dehn twist constructors:

* `inner_boundary_twist(n, L)` - twist about a curve parallel to d_L:
  empty braid, framing e_L.
* `outer_boundary_twist(n)` - twist about a curve parallel to d_0: the
  full twist on all strands, framing (1, ..., 1).  The all-ones framing is
  forced by consistency: the twist about a curve enclosing every line must
  agree with the outer boundary twist (a pencil collapses the two).
* `conjugated_twist(descriptor)` - twist about an interior curve enclosing
  a set E of lines, transported by a conjugator braid: the braid part is
  conjugator * block-full-twist * conjugator^{-1} (temporal), the framing
  the indicator vector of E.  Assigning interior twists framing 0 instead
  is provably inconsistent and is kept around only as a negative control
  in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .braids import (
    BraidWord,
    StrandCountMismatch,
    braids_equal,
    full_twist_block,
    is_pure,
    permutation,
)


class NotPure(ValueError):
    """A framed element was built on a non-pure braid, which the model forbids."""


class InconsistentDescriptor(ValueError):
    """A twist descriptor's conjugator does not carry its enclosed lines onto its block."""


def twist_label(enclosed: Iterable[int]) -> str:
    """Display label for the twist about a curve enclosing these lines."""
    ids = sorted(enclosed)
    if len(ids) == 2 and all(i <= 9 for i in ids):
        return f"a{ids[0]}{ids[1]}"
    return "a(" + ",".join(str(i) for i in ids) + ")"


def boundary_label(line_id: int) -> str:
    """Display label for a boundary twist; line_id 0 is the outer boundary."""
    return f"d{line_id}"


@dataclass(frozen=True)
class TwistDescriptor:
    """A conjugated interior Dehn twist, described algebraically.

    The curve is the block-enclosing circle on positions a..b pulled back
    through `conjugator`; `enclosed` is the set of line ids the curve
    separates from the rest.  Consistency (the conjugator's permutation
    carries the enclosed ids onto positions a..b) is enforced here, keeping
    the algebra and the curve's advertised line set in lockstep.
    """

    conjugator: BraidWord
    block: tuple[int, int]
    enclosed: frozenset[int]
    label: str = ""

    def __post_init__(self):
        n = self.conjugator.n
        a, b = self.block
        if not 1 <= a <= b <= n:
            raise InconsistentDescriptor(f"block [{a}, {b}] outside 1..{n}")
        enclosed = frozenset(self.enclosed)
        object.__setattr__(self, "enclosed", enclosed)
        if not enclosed <= set(range(1, n + 1)):
            raise InconsistentDescriptor(f"enclosed {sorted(enclosed)} outside 1..{n}")
        if len(enclosed) != b - a + 1:
            raise InconsistentDescriptor(
                f"block [{a}, {b}] holds {b - a + 1} strands but encloses "
                f"{len(enclosed)} lines"
            )
        perm = permutation(self.conjugator)
        if {perm[line_id - 1] for line_id in enclosed} != set(range(a, b + 1)):
            raise InconsistentDescriptor(
                f"conjugator sends lines {sorted(enclosed)} to positions "
                f"{sorted(perm[line_id - 1] for line_id in enclosed)}, not onto "
                f"[{a}, {b}]"
            )
        if not self.label:
            object.__setattr__(self, "label", twist_label(enclosed))


@dataclass(frozen=True)
class FramedElement:
    """A mapping class: pure braid word plus per-line boundary framing."""

    braid: BraidWord
    framing: tuple[int, ...]

    def __post_init__(self):
        if len(self.framing) != self.braid.n:
            raise ValueError(
                f"framing length {len(self.framing)} != strand count {self.braid.n}"
            )
        if not is_pure(self.braid):
            raise NotPure(
                "framed elements must carry pure braids; got permutation "
                f"{permutation(self.braid)}"
            )

    @property
    def n(self) -> int:
        return self.braid.n

    def __mul__(self, other: FramedElement) -> FramedElement:
        return compose(self, other)

    def inverse(self) -> FramedElement:
        return FramedElement(self.braid.inverse(), tuple(-f for f in self.framing))

    def __pow__(self, exponent: int) -> FramedElement:
        braid = self.braid**exponent
        return FramedElement(braid, tuple(f * exponent for f in self.framing))


def identity_element(n: int) -> FramedElement:
    return FramedElement(BraidWord(n), (0,) * n)


def compose(a: FramedElement, b: FramedElement) -> FramedElement:
    """Temporal product: a happens first, then b; framings add.

    Componentwise addition is valid exactly because both factors are pure,
    so line labels are position-stable across the composition.
    """
    if a.n != b.n:
        raise StrandCountMismatch(f"{a.n} strands vs {b.n} strands")
    return FramedElement(a.braid * b.braid, tuple(x + y for x, y in zip(a.framing, b.framing)))


def compose_all(factors: Iterable[FramedElement], n: int | None = None) -> FramedElement:
    """Temporal product of a sequence; the first factor acts first."""
    result: FramedElement | None = None
    for factor in factors:
        result = factor if result is None else compose(result, factor)
    if result is None:
        if n is None:
            raise ValueError("empty product needs an explicit strand count")
        return identity_element(n)
    return result


def inner_boundary_twist(n: int, line_id: int) -> FramedElement:
    """Dehn twist about a curve parallel to the boundary of line `line_id`."""
    if not 1 <= line_id <= n:
        raise ValueError(f"line id {line_id} outside 1..{n}")
    framing = tuple(1 if k == line_id else 0 for k in range(1, n + 1))
    return FramedElement(BraidWord(n), framing)


def outer_boundary_twist(n: int) -> FramedElement:
    """Dehn twist about a curve parallel to the outer boundary d_0."""
    return FramedElement(full_twist_block(n, 1, n), (1,) * n)


def conjugated_twist(descriptor: TwistDescriptor) -> FramedElement:
    """Dehn twist about the interior curve a descriptor pins down."""
    n = descriptor.conjugator.n
    a, b = descriptor.block
    braid = descriptor.conjugator * full_twist_block(n, a, b) * descriptor.conjugator.inverse()
    framing = tuple(1 if k in descriptor.enclosed else 0 for k in range(1, n + 1))
    return FramedElement(braid, framing)


def elements_equal(a: FramedElement, b: FramedElement) -> bool:
    """Exact model equality: braid parts equal and framings identical."""
    if a.n != b.n:
        raise StrandCountMismatch(f"{a.n} strands vs {b.n} strands")
    return a.framing == b.framing and braids_equal(a.braid, b.braid)


def to_braid(a: FramedElement) -> BraidWord:
    """Forget the framing, killing exactly the inner boundary twists."""
    return a.braid
