"""D numbers over labelled frames: completeness, discounting, combination.

A D number assigns mass to non-empty subsets of a frame whose labels need not
be mutually exclusive, and the total mass may fall below 1 when information is
incomplete. Combination multiplies masses pairwise, drops products whose focal
elements do not intersect, and renormalizes by the surviving fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import EmptyInput, FrameMismatch, IncompleteInput, TotalConflict

__all__ = [
    "Frame",
    "FocalElement",
    "DNumber",
    "combine_all",
    "focal_sort_key",
    "COMPLETENESS_TOL",
    "MASS_FLOOR",
]

# Total mass within this of 1 counts as complete.
COMPLETENESS_TOL = 1e-9
# Masses below this are dropped as numeric dust.
MASS_FLOOR = 1e-12


@dataclass(frozen=True)
class FocalElement:
    """Non-empty subset of a frame, stored in canonical frame order.

    Build instances through :meth:`Frame.focal`, which canonicalizes the label
    order; two focal elements compare equal exactly when they canonicalize the
    same label set.
    """

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise ValueError("focal element cannot be empty")

    def intersection(self, other: FocalElement) -> FocalElement | None:
        """Label-set intersection, or None when it is empty."""
        other_labels = set(other.labels)
        common = tuple(label for label in self.labels if label in other_labels)
        return FocalElement(common) if common else None

    def __len__(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels) + "}"


@dataclass(frozen=True)
class Frame:
    """Ordered collection of unique labels an assessment ranges over."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise ValueError("frame needs at least one label")
        seen: set[str] = set()
        for label in self.labels:
            if not isinstance(label, str) or not label:
                raise ValueError(f"frame labels must be non-empty strings, got {label!r}")
            if label in seen:
                raise ValueError(f"duplicate frame label {label!r}")
            seen.add(label)

    def __contains__(self, label: object) -> bool:
        return label in self.labels

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    @property
    def theta(self) -> FocalElement:
        """The total-ignorance focal element covering the whole frame."""
        return FocalElement(self.labels)

    def focal(self, labels: str | Iterable[str]) -> FocalElement:
        """Canonical focal element for ``labels``: frame order, duplicates dropped."""
        if isinstance(labels, FocalElement):
            labels = labels.labels
        requested = (labels,) if isinstance(labels, str) else tuple(labels)
        unknown = [label for label in requested if label not in self.labels]
        if unknown:
            raise ValueError(f"labels not in frame {self.labels}: {unknown!r}")
        wanted = set(requested)
        canonical = tuple(label for label in self.labels if label in wanted)
        if not canonical:
            raise ValueError("focal element cannot be empty")
        return FocalElement(canonical)


def focal_sort_key(frame: Frame, focal: FocalElement) -> tuple[int, ...]:
    """Deterministic display order: the frame indices of the focal's labels."""
    index = {label: i for i, label in enumerate(frame.labels)}
    return tuple(index[label] for label in focal.labels)


class DNumber:
    """Immutable mass assignment over focal elements of a frame.

    Keys may be FocalElement instances, single labels, or label iterables; all
    are canonicalized through the frame. Masses must be finite and
    non-negative, values below MASS_FLOOR are dropped, and the total may not
    exceed 1 beyond COMPLETENESS_TOL. Duplicate keys accumulate.
    """

    __slots__ = ("_frame", "_masses")

    def __init__(
        self,
        frame: Frame,
        masses: Mapping[object, float] | Iterable[tuple[object, float]] = (),
    ) -> None:
        if not isinstance(frame, Frame):
            raise ValueError(f"frame must be a Frame, got {type(frame).__name__}")
        items = masses.items() if isinstance(masses, Mapping) else masses
        accumulated: dict[FocalElement, float] = {}
        for key, value in items:
            focal = frame.focal(key)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValueError(f"mass for {focal} must be a number, got {value!r}")
            mass = float(value)
            if not math.isfinite(mass):
                raise ValueError(f"mass for {focal} must be finite, got {value!r}")
            if mass < 0.0:
                raise ValueError(f"mass for {focal} must be non-negative, got {value!r}")
            accumulated[focal] = accumulated.get(focal, 0.0) + mass
        cleaned = {focal: mass for focal, mass in accumulated.items() if mass >= MASS_FLOOR}
        total = math.fsum(cleaned.values())
        if total > 1.0 + COMPLETENESS_TOL:
            raise ValueError(f"total mass may not exceed 1, got {total!r}")
        object.__setattr__(self, "_frame", frame)
        object.__setattr__(self, "_masses", cleaned)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("DNumber is immutable")

    @property
    def frame(self) -> Frame:
        return self._frame

    @property
    def masses(self) -> Mapping[FocalElement, float]:
        """Read-only view of the mass map."""
        return MappingProxyType(self._masses)

    @classmethod
    def vacuous(cls, frame: Frame) -> DNumber:
        """Total ignorance: all mass on the whole frame."""
        return cls(frame, {frame.theta: 1.0})

    def completeness(self) -> float:
        """Total assigned mass; below 1 means the information is incomplete."""
        return math.fsum(self._masses.values())

    def is_complete(self, tol: float = COMPLETENESS_TOL) -> bool:
        return self.completeness() >= 1.0 - tol

    def normalize_incomplete(self) -> DNumber:
        """Route any completeness deficit to total ignorance.

        A complete D number comes back unchanged; existing masses are never
        rescaled, the whole-frame element simply absorbs the missing mass.
        """
        deficit = 1.0 - self.completeness()
        if deficit <= MASS_FLOOR:
            # a deficit this small is rounding noise, not missing evidence
            return self
        theta = self._frame.theta
        masses = dict(self._masses)
        masses[theta] = masses.get(theta, 0.0) + deficit
        return DNumber(self._frame, masses)

    def discount(self, epsilon: float) -> DNumber:
        """Scale every mass by (1 - epsilon) and give epsilon to total ignorance.

        Requires a complete input; call :meth:`normalize_incomplete` first when
        total mass is below 1. ``epsilon`` must lie in [0, 1].
        """
        if isinstance(epsilon, bool) or not isinstance(epsilon, (int, float)):
            raise ValueError(f"epsilon must be a number, got {epsilon!r}")
        if not 0.0 <= epsilon <= 1.0:
            raise ValueError(f"epsilon must be in [0, 1], got {epsilon!r}")
        if not self.is_complete():
            raise IncompleteInput(
                f"discount requires total mass 1, got {self.completeness():.12g}; "
                "call normalize_incomplete() first"
            )
        keep = 1.0 - epsilon
        masses = {focal: mass * keep for focal, mass in self._masses.items()}
        theta = self._frame.theta
        masses[theta] = masses.get(theta, 0.0) + epsilon
        return DNumber(self._frame, masses)

    def combine(self, other: DNumber) -> DNumber:
        """Conflict-normalized combination of two complete D numbers.

        The mass of A sums the products d1(B) * d2(C) over pairs whose label
        sets intersect in exactly A, normalized by 1 - k where k is the product
        mass on empty intersections. Raises TotalConflict when 1 - k <= 1e-12.
        """
        if self._frame != other._frame:
            raise FrameMismatch(
                f"cannot combine over different frames: "
                f"{self._frame.labels!r} vs {other._frame.labels!r}"
            )
        if not self.is_complete() or not other.is_complete():
            raise IncompleteInput(
                "combination requires complete inputs; normalize or discount first"
            )
        buckets: dict[FocalElement, list[float]] = {}
        conflict: list[float] = []
        for left, left_mass in self._masses.items():
            for right, right_mass in other._masses.items():
                product = left_mass * right_mass
                meet = left.intersection(right)
                if meet is None:
                    conflict.append(product)
                else:
                    buckets.setdefault(meet, []).append(product)
        k = math.fsum(conflict)
        remaining = 1.0 - k
        if remaining <= 1e-12:
            raise TotalConflict(f"conflict k = {k:.12g} leaves no mass to normalize")
        combined = {
            focal: math.fsum(products) / remaining for focal, products in buckets.items()
        }
        return DNumber(self._frame, combined)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DNumber):
            return NotImplemented
        return self._frame == other._frame and self._masses == other._masses

    __hash__ = None  # mass maps are float-valued; hashing would mislead

    def __repr__(self) -> str:
        ordered = sorted(
            self._masses.items(), key=lambda kv: focal_sort_key(self._frame, kv[0])
        )
        inside = ", ".join(f"{focal}: {mass:.6g}" for focal, mass in ordered)
        return f"DNumber({inside or 'empty'})"


def combine_all(dnumbers: Sequence[DNumber]) -> DNumber:
    """Left fold of pairwise combination; a single input comes back unchanged."""
    items = list(dnumbers)
    if not items:
        raise EmptyInput("combine_all needs at least one D number")
    result = items[0]
    for d in items[1:]:
        result = result.combine(d)
    return result
