"""
Quantized modulations between tonalities of an orbit.

A modulation is a modulator ``g`` (a special affine symmetry carrying the
source scale onto the target scale) together with a cadential set of the
target. Its quantum is the <g>-orbit of the union of the target's cadence
chords; the modulation counts as quantized when the trace of the quantum on
the target scale has no nontrivial symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from modquanta.cadence import DegreeIndexSet, check_indices, minimal_cadential_sets
from modquanta.errors import InvalidInput
from modquanta.pitch import (
    AffineSymmetry,
    PitchClassSet,
    SymmetryGroup,
    affine_group,
    apply_symmetry,
    orbit_union,
    powers,
    special_affine_group,
    stabilizer,
    symmetry_sort_key,
)
from modquanta.scales import Tonality, TonalityOrbit

DIMINISHED = "diminished-scale"
TRITONE = "tritone-substitution"
CHAINING = "chaining"

DOMINANT = (4,)  # degree V


@dataclass(frozen=True)
class Modulation:
    source: Tonality
    target: Tonality
    modulator: AffineSymmetry
    cadence: DegreeIndexSet

    def __post_init__(self):
        if self.source.base != self.target.base:
            raise InvalidInput("source and target must come from the same interpretation")
        if apply_symmetry(self.modulator, self.source.scale) != self.target.scale:
            raise InvalidInput(
                f"{self.modulator} does not carry the source scale {{{self.source.scale}}} "
                f"onto the target scale {{{self.target.scale}}}"
            )
        object.__setattr__(self, "cadence", check_indices(self.cadence, len(self.target.degrees)))

    @property
    def distance(self) -> int:
        n = self.source.modulus
        return (self.target.transposition - self.source.transposition) % n


@dataclass(frozen=True)
class QuantumResult:
    quantum: PitchClassSet
    trace: PitchClassSet
    pivots: DegreeIndexSet
    covered: bool
    rigid: bool = True


@dataclass(frozen=True)
class NotQuantized:
    """The trace of the candidate quantum is fixed by ``witness`` (not the identity)."""

    quantum: PitchClassSet
    trace: PitchClassSet
    witness: AffineSymmetry


def enumerate_modulators(source: Tonality, target: Tonality, group: SymmetryGroup | None = None) -> list[AffineSymmetry]:
    """Every symmetry in ``group`` (default: x -> +-x + a) mapping source scale to target scale."""
    if group is None:
        group = special_affine_group(source.modulus)
    found = [g for g in group.elements if apply_symmetry(g, source.scale) == target.scale]
    return sorted(found, key=symmetry_sort_key)


def compute_quantum(mod: Modulation, rigidity_group: SymmetryGroup | None = None) -> QuantumResult | NotQuantized:
    target = mod.target
    n = target.modulus
    if rigidity_group is None:
        rigidity_group = special_affine_group(n)

    cadence_union = PitchClassSet(0, n)
    for j in mod.cadence:
        cadence_union |= target.degrees[j]
    quantum = orbit_union(cadence_union, powers(mod.modulator))
    trace = quantum & target.scale

    fixers = [h for h in stabilizer(trace, rigidity_group) if not h.is_identity()]
    if fixers:
        return NotQuantized(quantum, trace, fixers[0])

    pivots = tuple(i for i, d in enumerate(target.degrees) if d.issubset(quantum))
    covered_mask = 0
    for i in pivots:
        covered_mask |= target.degrees[i].mask
    return QuantumResult(quantum, trace, pivots, covered_mask == trace.mask)


def is_diminished(x: PitchClassSet) -> bool:
    """Eight tones whose cyclic steps alternate 1 and 2."""
    steps = x.intervals()
    if len(steps) != 8 or set(steps) != {1, 2}:
        return False
    return all(steps[i] != steps[(i + 1) % 8] for i in range(8))


@dataclass(frozen=True)
class CatalogRow:
    distance: int
    cadence: DegreeIndexSet
    quantum: PitchClassSet
    modulator: AffineSymmetry
    pivots: DegreeIndexSet
    covered: bool
    annotations: tuple[str, ...] = field(default=())

    @property
    def modulus(self) -> int:
        return self.quantum.modulus


def annotate(distance: int, cadence: DegreeIndexSet, quantum: PitchClassSet) -> tuple[str, ...]:
    tags = []
    if is_diminished(quantum):
        tags.append(DIMINISHED)
    if 2 * distance == quantum.modulus:
        tags.append(TRITONE)
    if distance == 2 and tuple(cadence) == DOMINANT:
        tags.append(CHAINING)
    return tuple(tags)


def modulation_catalog(
    orbit: TonalityOrbit,
    *,
    cadences: Sequence[Iterable[int]] | None = None,
    distances: Iterable[int] | None = None,
    source: int = 0,
    require_cover: bool = False,
    widen_rigidity: bool = False,
) -> list[CatalogRow]:
    """Quantized modulations out of the tonality at transposition ``source``.

    ``cadences`` defaults to all minimal cadential sets, ``distances`` to
    1..n-1. Rows whose pivots do not cover the trace are kept (``covered`` is
    False) unless ``require_cover`` is set.
    """
    n = orbit.modulus
    if cadences is None:
        pool = minimal_cadential_sets(orbit)
    else:
        pool = sorted({check_indices(c, orbit.degree_count) for c in cadences}, key=lambda c: (len(c), c))
    if distances is None:
        distances = range(1, n)
    rigidity = affine_group(n) if widen_rigidity else special_affine_group(n)

    src = orbit.at(source)
    rows = []
    for d in sorted({d % n for d in distances}):
        target = orbit.at(source + d)
        modulators = enumerate_modulators(src, target)
        for cadence in pool:
            for g in modulators:
                res = compute_quantum(Modulation(src, target, g, cadence), rigidity)
                if isinstance(res, NotQuantized):
                    continue
                if require_cover and not res.covered:
                    continue
                rows.append(
                    CatalogRow(
                        distance=d,
                        cadence=tuple(cadence),
                        quantum=res.quantum,
                        modulator=g,
                        pivots=res.pivots,
                        covered=res.covered,
                        annotations=annotate(d, cadence, res.quantum),
                    )
                )
    return rows
