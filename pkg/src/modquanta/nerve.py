"""
Nerve of a degree cover.

Vertices are degree indices; a family of degrees spans a face when the chords
share at least one tone. Every face therefore lies inside the *star* of some
tone (the set of degrees containing it), so the maximal faces are just the
inclusion-maximal stars.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from modquanta.cadence import MAX_DEGREES, DegreeIndexSet, numeral
from modquanta.errors import CapacityError, InvalidInput
from modquanta.scales import Interpretation


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    maximal_faces: tuple[DegreeIndexSet, ...]

    def faces(self) -> Iterator[DegreeIndexSet]:
        """Every non-empty face, each exactly once, by (dimension, indices)."""
        seen = set()
        for face in self.maximal_faces:
            for r in range(1, len(face) + 1):
                seen.update(combinations(face, r))
        yield from sorted(seen, key=lambda f: (len(f), f))

    def __contains__(self, face) -> bool:
        face = set(face)
        return bool(face) and any(face <= set(m) for m in self.maximal_faces)

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.maximal_faces), default=-1)


@dataclass(frozen=True)
class ComplexStats:
    f_vector: tuple[int, ...]
    euler: int
    skeleton_complete: bool
    maximal_faces: tuple[DegreeIndexSet, ...]

    @property
    def edge_count(self) -> int:
        return self.f_vector[1] if len(self.f_vector) > 1 else 0


def _maximal(sets: Sequence[frozenset[int]]) -> tuple[DegreeIndexSet, ...]:
    unique = set(s for s in sets if s)
    keep = [s for s in unique if not any(s < t for t in unique)]
    return tuple(sorted((tuple(sorted(s)) for s in keep), key=lambda f: (-len(f), f)))


def compute_nerve(interp: Interpretation) -> SimplicialComplex:
    k = len(interp.degrees)
    if k > MAX_DEGREES:
        raise CapacityError(f"{k} degrees exceeds the nerve limit of {MAX_DEGREES}")
    stars = [
        frozenset(i for i, d in enumerate(interp.degrees) if tone in d)
        for tone in interp.scale.members
    ]
    # a degree with no tones would be a vertex-free chord; cannot occur for stacked thirds
    return SimplicialComplex(k, _maximal(stars))


def complex_stats(c: SimplicialComplex) -> ComplexStats:
    counts: list[int] = []
    for face in c.faces():
        d = len(face) - 1
        while len(counts) <= d:
            counts.append(0)
        counts[d] += 1
    euler = sum((-1) ** d * x for d, x in enumerate(counts))
    complete = all((i, j) in c for i, j in combinations(range(c.vertex_count), 2))
    return ComplexStats(tuple(counts), euler, complete, c.maximal_faces)


def is_skeleton_cycle(c: SimplicialComplex, vertices: Sequence[int]) -> bool:
    """Whether the distinct vertices walk along 1-skeleton edges and return to the start.

    The closing vertex may be given explicitly (``I, V, ..., I``) or left implicit.
    """
    vs = list(vertices)
    if len(vs) > 1 and vs[0] == vs[-1]:
        vs = vs[:-1]
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < c.vertex_count for v in vs):
        raise InvalidInput(f"vertices {vs} out of range for {c.vertex_count} degrees")
    return all((vs[i], vs[(i + 1) % len(vs)]) in c for i in range(len(vs)))


def skeleton_dot(c: SimplicialComplex, width: int = 3, name: str = "nerve") -> str:
    lines = [f"graph {name} {{"]
    for v in range(c.vertex_count):
        lines.append(f'  "{numeral(v, width)}";')
    for i, j in combinations(range(c.vertex_count), 2):
        if (i, j) in c:
            lines.append(f'  "{numeral(i, width)}" -- "{numeral(j, width)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
