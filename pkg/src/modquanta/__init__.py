"""Cadential sets, modulation quanta and nerves of scale tonalities over Z_n."""

from modquanta.cadence import is_cadential, minimal_cadential_sets, numeral, parse_numerals
from modquanta.errors import CapacityError, InvalidInput
from modquanta.modulation import (
    CatalogRow,
    Modulation,
    NotQuantized,
    QuantumResult,
    compute_quantum,
    enumerate_modulators,
    modulation_catalog,
)
from modquanta.nerve import SimplicialComplex, complex_stats, compute_nerve, is_skeleton_cycle
from modquanta.pitch import (
    AffineSymmetry,
    PitchClass,
    PitchClassSet,
    SymmetryGroup,
    apply_symmetry,
    compose,
    generated_group,
    is_rigid,
    special_affine_group,
    stabilizer,
)
from modquanta.scales import (
    Interpretation,
    Tonality,
    TonalityOrbit,
    build_interpretation,
    major_scale,
    tonalities_containing,
    tonality_orbit,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSymmetry",
    "CapacityError",
    "CatalogRow",
    "Interpretation",
    "InvalidInput",
    "Modulation",
    "NotQuantized",
    "PitchClass",
    "PitchClassSet",
    "QuantumResult",
    "SimplicialComplex",
    "SymmetryGroup",
    "Tonality",
    "TonalityOrbit",
    "apply_symmetry",
    "build_interpretation",
    "complex_stats",
    "compose",
    "compute_nerve",
    "compute_quantum",
    "enumerate_modulators",
    "generated_group",
    "is_cadential",
    "is_rigid",
    "is_skeleton_cycle",
    "major_scale",
    "minimal_cadential_sets",
    "modulation_catalog",
    "numeral",
    "parse_numerals",
    "special_affine_group",
    "stabilizer",
    "tonalities_containing",
    "tonality_orbit",
]
