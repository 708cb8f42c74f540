"""
Cadential sets of degree indices.

A set ``J`` of degree indices is cadential when the chords sitting at those
degrees of a tonality occur *together as degrees* (at any index) in no other
tonality of the orbit. Index labels are deliberately ignored: the triad
{7,11,2} is V of C, IV of D and I of G, so ``{V}`` alone does not pin down
the key.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Sequence

from modquanta.errors import CapacityError, InvalidInput
from modquanta.scales import TonalityOrbit

DegreeIndexSet = tuple[int, ...]

MAX_DEGREES = 16

_ROMAN = [(10, "X"), (9, "IX"), (5, "V"), (4, "IV"), (1, "I")]


def roman(number: int) -> str:
    out = []
    for value, glyph in _ROMAN:
        while number >= value:
            out.append(glyph)
            number -= value
    return "".join(out)


def numeral(index: int, width: int = 3) -> str:
    """Degree index 0 -> 'I'; tetrads get a '7' suffix ('V7')."""
    return roman(index + 1) + ("7" if width == 4 else "")


def numerals(indices: Iterable[int], width: int = 3) -> list[str]:
    return [numeral(i, width) for i in indices]


_FROM_ROMAN = {roman(i): i - 1 for i in range(1, MAX_DEGREES + 1)}


def parse_numerals(text: str | Sequence[str], degree_count: int) -> DegreeIndexSet:
    """Parse 'II,V' / 'II7,V7' / ['II', 'V'] into sorted degree indices."""
    tokens = re.split(r"[\s,;]+", text.strip()) if isinstance(text, str) else list(text)
    tokens = [t.strip() for t in tokens if t.strip()]
    if not tokens:
        raise InvalidInput("empty cadence")
    out = set()
    for tok in tokens:
        key = tok.upper().removesuffix("7")
        if key not in _FROM_ROMAN:
            raise InvalidInput(f"cannot parse degree numeral {tok!r}")
        out.add(_FROM_ROMAN[key])
    return check_indices(out, degree_count)


def check_indices(indices: Iterable[int], degree_count: int) -> DegreeIndexSet:
    out = tuple(sorted(set(indices)))
    bad = [i for i in out if not 0 <= i < degree_count]
    if bad:
        raise InvalidInput(f"degree indices {bad} out of range for {degree_count} degrees")
    return out


def is_cadential(J: Iterable[int], orbit: TonalityOrbit, representative: int = 0) -> bool:
    """True iff the chords of ``J`` in member ``representative`` appear together only there."""
    J = check_indices(J, orbit.degree_count)
    rep = orbit.members[representative]
    chords = [rep.degrees[j] for j in J]
    hits = [t for t in orbit.members if all(t.has_degree(c) for c in chords)]
    return hits == [rep]


def minimal_cadential_sets(orbit: TonalityOrbit) -> list[DegreeIndexSet]:
    """All cadential sets with no proper cadential subset, by (size, indices)."""
    k = orbit.degree_count
    if k > MAX_DEGREES:
        raise CapacityError(f"{k} degrees exceeds the exhaustive-search limit of {MAX_DEGREES}")
    found: list[DegreeIndexSet] = []
    found_masks: list[int] = []
    for size in range(k + 1):
        for J in combinations(range(k), size):
            mask = sum(1 << j for j in J)
            # cadentiality is monotone, so supersets of a minimal set are skipped
            if any(m & mask == m for m in found_masks):
                continue
            if is_cadential(J, orbit):
                found.append(J)
                found_masks.append(mask)
    return found
