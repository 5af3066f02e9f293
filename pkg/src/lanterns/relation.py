"""Dehn twist relations: the data type, verification reports, exporters.

A Relation equates a product of boundary twists (left side) with an
ordered product of conjugated interior twists (right side).  Factor lists
are stored in temporal order: the first entry acts first, and the exported
text reads left to right in that same order, so

    d0 d1 d2 d3 = a12 a13 a23

says the twist about the curve enclosing lines 1 and 2 acts first on the
right.  Left-side factors commute, so their order is cosmetic.

Exports: `text` (ASCII, one line), `latex` (display math), `json`
(schema-versioned, lossless; `parse_relation` inverts it exactly).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .braids import BraidWord, FreeWord
from .framed import FramedElement, TwistDescriptor, boundary_label

JSON_SCHEMA = "lantern-relation/1"


class UnknownFormat(ValueError):
    """An export format other than text, latex, or json was requested."""


@dataclass(frozen=True)
class Witness:
    """First free-group generator whose images separate the two sides."""

    generator: int
    lhs_image: FreeWord
    rhs_image: FreeWord


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a relation in the framed model."""

    braid_ok: bool
    framing_ok: bool
    lhs: FramedElement
    rhs: FramedElement
    witness: Witness | None = None

    @property
    def verified(self) -> bool:
        return self.braid_ok and self.framing_ok

    def summary(self) -> str:
        parts = [
            f"braid part: {'equal' if self.braid_ok else 'DIFFERENT'}",
            f"framings:   {'equal' if self.framing_ok else 'DIFFERENT'} "
            f"(lhs {list(self.lhs.framing)}, rhs {list(self.rhs.framing)})",
            f"verified:   {'yes' if self.verified else 'NO'}",
        ]
        if self.witness is not None:
            parts.append(
                f"witness:    x_{self.witness.generator} maps to "
                f"{_free_word_str(self.witness.lhs_image)} on the left but "
                f"{_free_word_str(self.witness.rhs_image)} on the right"
            )
        return "\n".join(parts)


@dataclass(frozen=True)
class Relation:
    """A named twist relation with both sides materialized.

    `lhs` lists (boundary id, exponent) pairs, boundary id 0 being the
    outer boundary; `rhs` lists twist descriptors in temporal order (first
    acts first).  `lhs_element` and `rhs_element` are the assembled framed
    elements; `report` is attached once verification ran.
    """

    name: str
    n: int
    lhs: tuple[tuple[int, int], ...]
    rhs: tuple[TwistDescriptor, ...]
    lhs_element: FramedElement
    rhs_element: FramedElement
    report: VerificationReport | None = None


def _free_word_str(word: FreeWord) -> str:
    if not word:
        return "1"
    parts = []
    for letter in word:
        parts.append(f"x{letter}" if letter > 0 else f"x{-letter}^-1")
    return " ".join(parts)


def _lhs_text(relation: Relation) -> list[str]:
    parts = []
    for boundary_id, exponent in relation.lhs:
        if exponent == 0:
            continue
        name = boundary_label(boundary_id)
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
    return parts


def format_text(relation: Relation) -> str:
    lhs = " ".join(_lhs_text(relation)) or "1"
    rhs = " ".join(d.label for d in relation.rhs) or "1"
    return f"{lhs} = {rhs}"


def _latex_alpha(descriptor: TwistDescriptor) -> str:
    ids = sorted(descriptor.enclosed)
    if len(ids) == 2:
        return rf"\alpha_{{{ids[0]},{ids[1]}}}"
    return rf"\alpha_{{\{{{','.join(str(i) for i in ids)}\}}}}"


def format_latex(relation: Relation) -> str:
    lhs_parts = []
    for boundary_id, exponent in relation.lhs:
        if exponent == 0:
            continue
        term = rf"\partial_{{{boundary_id}}}"
        lhs_parts.append(term if exponent == 1 else term + rf"^{{{exponent}}}")
    rhs_parts = [_latex_alpha(d) for d in relation.rhs]
    lhs = " ".join(lhs_parts) or "1"
    rhs = " ".join(rhs_parts) or "1"
    return f"{lhs} = {rhs}"


def _element_dict(element: FramedElement) -> dict[str, Any]:
    return {"braid": list(element.braid.letters), "framing": list(element.framing)}


def _element_from_dict(data: dict[str, Any], n: int) -> FramedElement:
    return FramedElement(BraidWord(n, tuple(data["braid"])), tuple(data["framing"]))


def _report_dict(report: VerificationReport) -> dict[str, Any]:
    witness = None
    if report.witness is not None:
        witness = {
            "generator": report.witness.generator,
            "lhs_image": list(report.witness.lhs_image),
            "rhs_image": list(report.witness.rhs_image),
        }
    return {
        "braid_ok": report.braid_ok,
        "framing_ok": report.framing_ok,
        "verified": report.verified,
        "lhs": _element_dict(report.lhs),
        "rhs": _element_dict(report.rhs),
        "witness": witness,
    }


def relation_to_dict(relation: Relation) -> dict[str, Any]:
    data: dict[str, Any] = {
        "schema": JSON_SCHEMA,
        "name": relation.name,
        "n": relation.n,
        "text": format_text(relation),
        "lhs": [[boundary_id, exponent] for boundary_id, exponent in relation.lhs],
        "rhs": [
            {
                "label": d.label,
                "conjugator": list(d.conjugator.letters),
                "block": [d.block[0], d.block[1]],
                "enclosed": sorted(d.enclosed),
            }
            for d in relation.rhs
        ],
        "lhs_element": _element_dict(relation.lhs_element),
        "rhs_element": _element_dict(relation.rhs_element),
        "report": None if relation.report is None else _report_dict(relation.report),
    }
    return data


def format_json(relation: Relation) -> str:
    return json.dumps(relation_to_dict(relation), indent=2) + "\n"


def export_relation(relation: Relation, fmt: str) -> str:
    """Render a relation as `text`, `latex`, or `json`."""
    if fmt == "text":
        return format_text(relation) + "\n"
    if fmt == "latex":
        return format_latex(relation) + "\n"
    if fmt == "json":
        return format_json(relation)
    raise UnknownFormat(f"unknown relation format {fmt!r} (expected text, latex, or json)")


def relation_from_dict(data: dict[str, Any]) -> Relation:
    if data.get("schema") != JSON_SCHEMA:
        raise ValueError(f"unsupported relation schema {data.get('schema')!r}")
    n = int(data["n"])
    rhs = tuple(
        TwistDescriptor(
            BraidWord(n, tuple(entry["conjugator"])),
            (entry["block"][0], entry["block"][1]),
            frozenset(entry["enclosed"]),
            entry["label"],
        )
        for entry in data["rhs"]
    )
    report = None
    if data.get("report") is not None:
        rep = data["report"]
        witness = None
        if rep.get("witness") is not None:
            witness = Witness(
                rep["witness"]["generator"],
                tuple(rep["witness"]["lhs_image"]),
                tuple(rep["witness"]["rhs_image"]),
            )
        report = VerificationReport(
            rep["braid_ok"],
            rep["framing_ok"],
            _element_from_dict(rep["lhs"], n),
            _element_from_dict(rep["rhs"], n),
            witness,
        )
    return Relation(
        name=data["name"],
        n=n,
        lhs=tuple((pair[0], pair[1]) for pair in data["lhs"]),
        rhs=rhs,
        lhs_element=_element_from_dict(data["lhs_element"], n),
        rhs_element=_element_from_dict(data["rhs_element"], n),
        report=report,
    )


def parse_relation(text: str) -> Relation:
    """Inverse of the json export; round-trips losslessly."""
    return relation_from_dict(json.loads(text))
