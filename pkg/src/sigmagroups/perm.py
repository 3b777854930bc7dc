"""Permutations in cycle notation.

Points are 0-based internally and 1-based in every text form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class PermError(ValueError):
    pass


@dataclass(frozen=True)
class Perm:
    """A permutation of ``{0, ..., degree-1}``; ``images[i]`` is the image of ``i``.

    Products act on the right, as in GAP: ``(x * y)[i] == y[x[i]]``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise PermError(f"not a bijection on {len(imgs)} points: {imgs}")
        object.__setattr__(self, "images", imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> Perm:
        """Parse ``"(1 2 3)(4 5)"``; commas may separate points, ``"()"`` is the identity."""
        images = list(range(degree))
        rest = _CYCLE_RE.sub("", text).strip()
        if rest:
            raise PermError(f"unexpected text outside cycles: {rest!r}")
        seen: set[int] = set()
        for body in _CYCLE_RE.findall(text):
            tokens = body.replace(",", " ").split()
            try:
                points = [int(t) - 1 for t in tokens]
            except ValueError:
                raise PermError(f"non-integer point in cycle ({body})") from None
            for p in points:
                if not 0 <= p < degree:
                    raise PermError(f"point {p + 1} outside 1..{degree}")
                if p in seen:
                    raise PermError(f"point {p + 1} repeated in {text!r}")
                seen.add(p)
            for a, b in zip(points, points[1:] + points[:1]):
                images[a] = b
        return cls(tuple(images))

    def __mul__(self, other: Perm) -> Perm:
        if self.degree != other.degree:
            raise PermError("degree mismatch")
        return Perm(tuple(other.images[i] for i in self.images))

    def inverse(self) -> Perm:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycles)
