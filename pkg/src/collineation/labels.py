"""Geometric labels for collineation varieties."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

# label -> number of independent coordinates of its linear span
SPANS = {
    "Veronese": 6,
    "Scroll_1_2": 5,
    "QuadricSurface": 4,
    "QuadricCone": 4,
    "Plane": 3,
    "Conic": 3,
    "Line": 2,
    "Point": 1,
}

KINDS = tuple(SPANS) + ("RNC", "Other", "Undefined")


@dataclass(frozen=True)
class CollineationLabel:
    """What the collineation variety is, up to linear isomorphism.

    ``RNC`` carries its degree; ``Other`` carries the numerical type
    ``(dim, degree, span)`` found by implicitization when no named variety fits.
    """

    kind: str
    degree: Optional[int] = None
    dim: Optional[int] = None
    span: Optional[int] = None
    reason: Optional[str] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown label {self.kind!r}")
        if self.kind == "RNC" and (self.degree is None or self.degree < 1):
            raise ValueError("RNC needs a degree >= 1")
        if self.span is None:
            if self.kind in SPANS:
                object.__setattr__(self, "span", SPANS[self.kind])
            elif self.kind == "RNC":
                object.__setattr__(self, "span", self.degree + 1)

    @property
    def name(self) -> str:
        if self.kind == "RNC":
            return f"RNC({self.degree})"
        if self.kind == "Other":
            return f"Other(dim={self.dim},deg={self.degree},span={self.span})"
        return self.kind

    def __str__(self):
        return self.name

    def same_variety(self, other: "CollineationLabel") -> bool:
        """Compare labels, identifying RNC(1) with Line and RNC(2) with Conic."""
        return _canonical(self) == _canonical(other)


def _canonical(label: CollineationLabel) -> str:
    if label.kind == "RNC" and label.degree == 1:
        return "Line"
    if label.kind == "RNC" and label.degree == 2:
        return "Conic"
    return label.name


def rnc(d: int) -> CollineationLabel:
    """Rational normal curve of degree ``d``; degree 0 is a point."""
    return CollineationLabel("Point") if d == 0 else CollineationLabel("RNC", degree=d)


def parse_label(text: str) -> CollineationLabel:
    m = re.fullmatch(r"RNC\((\d+)\)", text.strip())
    if m:
        return rnc(int(m.group(1)))
    return CollineationLabel(text.strip())


UNDEFINED = CollineationLabel("Undefined")
