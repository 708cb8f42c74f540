"""Scales, stacked-third interpretations and their transposition orbits."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from modquanta.errors import InvalidInput
from modquanta.pitch import PitchClassSet, apply_symmetry, check_modulus, transposition

MAJOR = (0, 2, 4, 5, 7, 9, 11)


def major_scale(modulus: int = 12) -> PitchClassSet:
    return PitchClassSet.of(MAJOR, modulus)


def make_scale(residues, modulus: int = 12) -> PitchClassSet:
    """Validate residues (each already reduced, no repeats) and build a scale."""
    check_modulus(modulus)
    residues = [int(r) for r in residues]
    if not residues:
        raise InvalidInput("scale must contain at least one tone")
    bad = [r for r in residues if not 0 <= r < modulus]
    if bad:
        raise InvalidInput(f"scale residues {bad} not in [0, {modulus})")
    if len(set(residues)) != len(residues):
        raise InvalidInput(f"scale residues repeat: {residues}")
    return PitchClassSet.of(residues, modulus)


@dataclass(frozen=True)
class Interpretation:
    """A scale covered by its ``width``-note stacked-third chords, one per scale degree."""

    scale: PitchClassSet
    width: int
    degrees: tuple[PitchClassSet, ...]

    @property
    def modulus(self) -> int:
        return self.scale.modulus

    def __len__(self) -> int:
        return len(self.degrees)


def build_interpretation(scale: PitchClassSet, width: int) -> Interpretation:
    """Degree ``i`` is ``{x[i], x[i+2], ..., x[i+2(width-1)]}`` with indices mod ``k``."""
    if not scale:
        raise InvalidInput("cannot interpret an empty scale")
    if width < 1:
        raise InvalidInput(f"width must be >= 1, got {width}")
    xs = scale.members
    k = len(xs)
    degrees = tuple(
        PitchClassSet.of((xs[(i + 2 * j) % k] for j in range(width)), scale.modulus)
        for i in range(k)
    )
    return Interpretation(scale, width, degrees)


@dataclass(frozen=True)
class Tonality:
    """A transposed copy of an interpretation; degree labels travel with the transposition."""

    base: Interpretation
    transposition: int

    @cached_property
    def scale(self) -> PitchClassSet:
        return apply_symmetry(transposition(self.transposition, self.base.modulus), self.base.scale)

    @cached_property
    def degrees(self) -> tuple[PitchClassSet, ...]:
        t = transposition(self.transposition, self.base.modulus)
        return tuple(apply_symmetry(t, d) for d in self.base.degrees)

    @cached_property
    def degree_masks(self) -> frozenset[int]:
        return frozenset(d.mask for d in self.degrees)

    def has_degree(self, chord: PitchClassSet) -> bool:
        return chord.mask in self.degree_masks

    @property
    def modulus(self) -> int:
        return self.base.modulus


@dataclass(frozen=True)
class TonalityOrbit:
    base: Interpretation
    members: tuple[Tonality, ...]

    @property
    def modulus(self) -> int:
        return self.base.modulus

    @property
    def degree_count(self) -> int:
        return len(self.base.degrees)

    @property
    def width(self) -> int:
        return self.base.width

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def at(self, a: int) -> Tonality:
        """The member whose scale equals ``T^a`` of the base scale."""
        target = apply_symmetry(transposition(a, self.modulus), self.base.scale)
        for t in self.members:
            if t.scale == target:
                return t
        raise AssertionError("orbit is missing a transposed scale")  # unreachable by construction

    def index_of(self, a: int) -> int:
        return self.members.index(self.at(a))


def tonality_orbit(base: Interpretation) -> TonalityOrbit:
    seen = set()
    members = []
    for a in range(base.modulus):
        t = Tonality(base, a)
        if t.scale.mask not in seen:
            seen.add(t.scale.mask)
            members.append(t)
    return TonalityOrbit(base, tuple(members))


def tonalities_containing(chord: PitchClassSet, orbit: TonalityOrbit) -> list[int]:
    """Transposition indices of orbit members having ``chord`` as one of their degrees."""
    if chord.modulus != orbit.modulus:
        raise InvalidInput(f"modulus mismatch: {chord.modulus} vs {orbit.modulus}")
    return [t.transposition for t in orbit.members if t.has_degree(chord)]
