"""Permutations of {0, ..., n-1} stored as image tuples.

Composition is left-to-right: ``compose(p, q)`` applies ``p`` first, then
``q``, so ``compose(p, q)(x) == q(p(x))``.  Points are 0-indexed in code and
1-indexed in all text I/O (standard disjoint-cycle notation).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import CycleFormatError, DegreeMismatchError, InvalidPermutationError

__all__ = [
    "Permutation",
    "CycleType",
    "compose",
    "inverse",
    "power",
    "cycle_decomposition",
    "identity",
]


class Permutation:
    """An immutable bijection of {0, ..., n-1}."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for i in images:
            if not isinstance(i, int) or not 0 <= i < n or seen[i]:
                raise InvalidPermutationError(
                    f"image sequence {images!r} is not a bijection of 0..{n - 1}"
                )
            seen[i] = True
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Product, applying self first and `other` second."""
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def moved_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def support_size(self) -> int:
        return sum(1 for i, j in enumerate(self.images) if i != j)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each rotated to start at its least point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i]:
                continue
            cycle = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> "CycleType":
        return cycle_decomposition(self)[1]

    def order(self) -> int:
        return self.cycle_type().element_order()

    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return sum(len(c) - 1 for c in self.cycles()) % 2

    def is_even(self) -> bool:
        return self.parity() == 0

    def extended(self, degree: int) -> "Permutation":
        """The same permutation viewed in a larger symmetric group."""
        if degree < self.degree:
            raise DegreeMismatchError(
                f"cannot shrink degree {self.degree} to {degree}"
            )
        return Permutation(self.images + tuple(range(self.degree, degree)))

    def cycle_string(self) -> str:
        """1-indexed disjoint-cycle notation, '()' for the identity."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join(
            "(" + ",".join(str(p + 1) for p in c) + ")" for c in cycles
        )

    def __str__(self):
        return self.cycle_string()

    def __repr__(self):
        return f"Permutation.parse({self.cycle_string()!r}, {self.degree})"

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return identity(degree)

    @staticmethod
    def from_cycles(cycles, degree: int) -> "Permutation":
        """Build from 0-indexed cycles given as iterables of points."""
        images = list(range(degree))
        touched = [False] * degree
        for cycle in cycles:
            cycle = list(cycle)
            for p in cycle:
                if not 0 <= p < degree:
                    raise InvalidPermutationError(
                        f"point {p} out of range for degree {degree}"
                    )
                if touched[p]:
                    raise InvalidPermutationError(f"point {p} repeated in cycles")
                touched[p] = True
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return Permutation(images)

    @staticmethod
    def parse(text: str, degree: int | None = None) -> "Permutation":
        """Parse 1-indexed disjoint-cycle notation, e.g. '(1,2)(3,4,5)'."""
        cycles, top = _parse_cycle_text(text)
        if degree is None:
            degree = top
        elif top > degree:
            raise CycleFormatError(
                f"point {top} out of range for degree {degree}"
            )
        return Permutation.from_cycles(cycles, degree)


_CYCLE_RE = re.compile(r"\(\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\)")


def _parse_cycle_text(text):
    """Return (0-indexed cycles, largest point + 1) from cycle notation."""
    cycles = []
    top = 0
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        m = _CYCLE_RE.match(stripped, pos)
        if m is None:
            raise CycleFormatError(
                f"malformed cycle notation near column {pos + 1}: {stripped!r}",
                column=pos + 1,
            )
        body = m.group(1).strip()
        if body:
            points = [int(tok) for tok in body.split(",")]
            if any(p < 1 for p in points):
                raise CycleFormatError(
                    f"points are 1-indexed, got {min(points)}", column=pos + 1
                )
            top = max(top, max(points))
            cycles.append([p - 1 for p in points])
        pos = m.end()
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    return cycles, top


def identity(degree: int) -> Permutation:
    return Permutation(range(degree))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q."""
    if p.degree != q.degree:
        raise DegreeMismatchError(
            f"degree mismatch: {p.degree} vs {q.degree}"
        )
    qi = q.images
    return Permutation(tuple(qi[i] for i in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, j in enumerate(p.images):
        inv[j] = i
    return Permutation(inv)


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = identity(p.degree)
    square = p
    while k:
        if k & 1:
            result = compose(result, square)
        square = compose(square, square)
        k >>= 1
    return result


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths (fixed points included) of a permutation."""

    lengths: tuple[int, ...]
    degree: int

    def __post_init__(self):
        if sum(self.lengths) != self.degree:
            raise InvalidPermutationError(
                f"cycle lengths {self.lengths} do not sum to degree {self.degree}"
            )

    def element_order(self) -> int:
        return math.lcm(*self.lengths) if self.lengths else 1

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for length in self.lengths:
            out[length] = out.get(length, 0) + 1
        return out


def cycle_decomposition(p: Permutation) -> tuple[list[tuple[int, ...]], CycleType]:
    """Disjoint cycles covering every point, plus the cycle type."""
    cycles = p.cycles(include_fixed=True)
    lengths = tuple(sorted((len(c) for c in cycles), reverse=True))
    return cycles, CycleType(lengths, p.degree)
