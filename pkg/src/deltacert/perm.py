"""Permutations of {0..m-1} with cycle-notation parsing and formatting."""

from __future__ import annotations

import re
from dataclasses import dataclass

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0..degree-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images!r}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: list[list[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation like ``(0 1)(2 3 4)``; ``()`` is the identity."""
        stripped = text.replace(",", " ").strip()
        if not re.fullmatch(r"(\s*\([\d\s]*\)\s*)*", stripped):
            raise ValueError(f"cannot parse permutation {text!r}")
        cycles = []
        top = -1
        for body in _CYCLE_RE.findall(stripped):
            points = [int(p) for p in body.split()]
            if len(points) != len(set(points)):
                raise ValueError(f"repeated point in cycle {body!r}")
            if points:
                cycles.append(points)
                top = max(top, max(points))
        if degree is None:
            degree = top + 1 if top >= 0 else 1
        elif top >= degree:
            raise ValueError(f"point {top} out of range for degree {degree}")
        return cls.from_cycles(cycles, degree)

    def compose(self, other: "Permutation") -> "Permutation":
        """Apply ``other`` first, then ``self``."""
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[i] for i in other.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for i, img in enumerate(self.images):
            images[img] = i
        return Permutation(tuple(images))

    def cycle_string(self) -> str:
        """Cycle notation; cycles and their starting points are minimal."""
        seen = [False] * self.degree
        parts = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cycle = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            parts.append("(" + " ".join(map(str, cycle)) + ")")
        return "".join(parts) if parts else "()"

    def __str__(self) -> str:
        return self.cycle_string()
