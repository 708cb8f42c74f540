"""
Pitch classes, pitch-class sets and the special affine group of Z_n.

Sets are stored as integer bitmasks (bit ``x`` set iff residue ``x`` is a
member), which gives constant-time membership, equality and hashing for any
modulus up to :data:`MAX_MODULUS`.

Symmetries are the maps ``x -> v*x + a (mod n)`` with ``v`` in ``{+1, -1}``.
Their textual form follows the usual notation: ``T5`` for ``x -> x + 5`` and
``T5.11`` for ``x -> -x + 5`` when ``n = 12``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator

from modquanta.errors import InvalidInput

MIN_MODULUS = 3
MAX_MODULUS = 64


def check_modulus(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or not MIN_MODULUS <= n <= MAX_MODULUS:
        raise InvalidInput(f"modulus must be an integer in [{MIN_MODULUS}, {MAX_MODULUS}], got {n!r}")
    return n


def _same_modulus(a: int, b: int) -> None:
    if a != b:
        raise InvalidInput(f"modulus mismatch: {a} vs {b}")


@dataclass(frozen=True)
class PitchClass:
    value: int
    modulus: int = 12

    def __post_init__(self):
        check_modulus(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise InvalidInput(f"pitch class {self.value} not reduced mod {self.modulus}")

    @classmethod
    def reduce(cls, value: int, modulus: int = 12) -> PitchClass:
        return cls(value % check_modulus(modulus), modulus)

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class PitchClassSet:
    """A subset of Z_n held as a bitmask."""

    mask: int
    modulus: int = 12

    def __post_init__(self):
        check_modulus(self.modulus)
        if self.mask < 0 or self.mask >> self.modulus:
            raise InvalidInput(f"mask {self.mask:#x} has bits outside Z_{self.modulus}")

    @classmethod
    def of(cls, residues: Iterable[int], modulus: int = 12) -> PitchClassSet:
        """Build from residues; values are reduced mod ``modulus``."""
        check_modulus(modulus)
        mask = 0
        for x in residues:
            mask |= 1 << (int(x) % modulus)
        return cls(mask, modulus)

    @classmethod
    def empty(cls, modulus: int = 12) -> PitchClassSet:
        return cls(0, modulus)

    @classmethod
    def full(cls, modulus: int = 12) -> PitchClassSet:
        return cls((1 << check_modulus(modulus)) - 1, modulus)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.modulus) if self.mask >> x & 1)

    def pitch_classes(self) -> tuple[PitchClass, ...]:
        return tuple(PitchClass(x, self.modulus) for x in self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, x) -> bool:
        if isinstance(x, PitchClass):
            _same_modulus(self.modulus, x.modulus)
            x = x.value
        return 0 <= x < self.modulus and bool(self.mask >> x & 1)

    def __or__(self, other: PitchClassSet) -> PitchClassSet:
        _same_modulus(self.modulus, other.modulus)
        return PitchClassSet(self.mask | other.mask, self.modulus)

    def __and__(self, other: PitchClassSet) -> PitchClassSet:
        _same_modulus(self.modulus, other.modulus)
        return PitchClassSet(self.mask & other.mask, self.modulus)

    def __sub__(self, other: PitchClassSet) -> PitchClassSet:
        _same_modulus(self.modulus, other.modulus)
        return PitchClassSet(self.mask & ~other.mask, self.modulus)

    def issubset(self, other: PitchClassSet) -> bool:
        _same_modulus(self.modulus, other.modulus)
        return self.mask & ~other.mask == 0

    __le__ = issubset

    def intervals(self) -> tuple[int, ...]:
        """Cyclic step sizes between consecutive members (last one wraps around)."""
        xs = self.members
        if not xs:
            return ()
        return tuple((xs[(i + 1) % len(xs)] - xs[i]) % self.modulus or self.modulus for i in range(len(xs)))

    def __str__(self) -> str:
        return ",".join(map(str, self.members))

    def __repr__(self) -> str:
        return f"PitchClassSet({{{str(self)}}}, n={self.modulus})"


@dataclass(frozen=True, order=True)
class AffineSymmetry:
    """The map ``x -> sign*x + shift`` on Z_n.

    ``sign`` is normally +1 or -1; other units are accepted so that the full
    affine group can be explored, but the defaults everywhere stay within the
    special affine group.
    """

    shift: int
    sign: int = 1
    modulus: int = 12

    def __post_init__(self):
        check_modulus(self.modulus)
        if not 0 <= self.shift < self.modulus:
            raise InvalidInput(f"shift {self.shift} not reduced mod {self.modulus}")
        if self.sign not in (1, -1) and not (
            0 < self.sign < self.modulus and gcd(self.sign, self.modulus) == 1
        ):
            raise InvalidInput(f"multiplier {self.sign} is not a unit of Z_{self.modulus}")

    @classmethod
    def make(cls, shift: int, sign: int = 1, modulus: int = 12) -> AffineSymmetry:
        """Build with reduction: ``sign`` may be given as -1 or as a residue like 11."""
        check_modulus(modulus)
        sign %= modulus
        if sign == 1:
            pass
        elif sign == modulus - 1:
            sign = -1
        return cls(shift % modulus, sign, modulus)

    @classmethod
    def identity(cls, modulus: int = 12) -> AffineSymmetry:
        return cls(0, 1, modulus)

    @classmethod
    def parse(cls, text: str, modulus: int = 12) -> AffineSymmetry:
        """Parse ``T6``, ``T6.11`` or ``T6.-1`` (``T^6.11`` is tolerated too)."""
        m = re.fullmatch(r"\s*T\^?\{?(-?\d+)\}?(?:\.(-?\d+))?\s*", text)
        if not m:
            raise InvalidInput(f"cannot parse symmetry {text!r}; expected e.g. 'T6' or 'T6.11'")
        shift = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        if gcd(mult % modulus, modulus) != 1:
            raise InvalidInput(f"multiplier {mult} is not a unit of Z_{modulus}")
        return cls.make(shift, mult, modulus)

    @property
    def multiplier(self) -> int:
        """The multiplier as a residue in [0, n)."""
        return self.sign % self.modulus

    def is_identity(self) -> bool:
        return self.shift == 0 and self.sign == 1

    def map_residue(self, x: int) -> int:
        return (self.sign * x + self.shift) % self.modulus

    def __call__(self, x: PitchClassSet) -> PitchClassSet:
        return apply_symmetry(self, x)

    def __matmul__(self, other: AffineSymmetry) -> AffineSymmetry:
        return compose(self, other)

    def inverse(self) -> AffineSymmetry:
        # y = v x + a  =>  x = v^-1 y - v^-1 a
        inv = pow(self.sign, -1, self.modulus)
        return AffineSymmetry.make(-inv * self.shift, inv, self.modulus)

    def __str__(self) -> str:
        if self.sign == 1:
            return f"T{self.shift}"
        return f"T{self.shift}.{self.multiplier}"


def _rotate(mask: int, a: int, n: int) -> int:
    return ((mask << a) | (mask >> (n - a))) & ((1 << n) - 1) if a else mask


def _negate(mask: int, n: int) -> int:
    # bit x -> bit (-x mod n)
    out = mask & 1
    m = mask >> 1
    x = 1
    while m:
        if m & 1:
            out |= 1 << (n - x)
        m >>= 1
        x += 1
    return out


def apply_symmetry(s: AffineSymmetry, x: PitchClassSet) -> PitchClassSet:
    _same_modulus(s.modulus, x.modulus)
    n = x.modulus
    if s.sign == 1:
        return PitchClassSet(_rotate(x.mask, s.shift, n), n)
    if s.sign == -1:
        return PitchClassSet(_rotate(_negate(x.mask, n), s.shift, n), n)
    return PitchClassSet.of((s.map_residue(y) for y in x.members), n)


def compose(s1: AffineSymmetry, s2: AffineSymmetry) -> AffineSymmetry:
    """``s1 o s2``: apply ``s2`` first, then ``s1``."""
    _same_modulus(s1.modulus, s2.modulus)
    n = s1.modulus
    return AffineSymmetry.make(s1.sign * s2.shift + s1.shift, s1.sign * s2.sign, n)


def transposition(a: int, modulus: int = 12) -> AffineSymmetry:
    return AffineSymmetry.make(a, 1, modulus)


def symmetry_sort_key(s: AffineSymmetry) -> tuple[int, int]:
    """Transpositions first, then the other multipliers; ascending shift within each."""
    return (0 if s.sign == 1 else 1 if s.sign == -1 else 1 + s.multiplier, s.shift)


@dataclass(frozen=True)
class SymmetryGroup:
    elements: frozenset[AffineSymmetry]
    modulus: int = 12

    def __post_init__(self):
        for e in self.elements:
            _same_modulus(e.modulus, self.modulus)

    def __iter__(self) -> Iterator[AffineSymmetry]:
        return iter(sorted(self.elements, key=symmetry_sort_key))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, s) -> bool:
        return s in self.elements

    def is_trivial(self) -> bool:
        return len(self.elements) == 1 and next(iter(self.elements)).is_identity()

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"


@lru_cache(maxsize=None)
def special_affine_group(modulus: int = 12) -> SymmetryGroup:
    """All 2n maps x -> +-x + a."""
    check_modulus(modulus)
    return SymmetryGroup(
        frozenset(AffineSymmetry.make(a, v, modulus) for v in (1, -1) for a in range(modulus)),
        modulus,
    )


@lru_cache(maxsize=None)
def affine_group(modulus: int = 12) -> SymmetryGroup:
    """All maps x -> u*x + a with u a unit of Z_n."""
    check_modulus(modulus)
    units = [u for u in range(1, modulus) if gcd(u, modulus) == 1]
    return SymmetryGroup(
        frozenset(AffineSymmetry.make(a, u, modulus) for u in units for a in range(modulus)),
        modulus,
    )


def generated_group(g: AffineSymmetry) -> SymmetryGroup:
    """The cyclic group <g>."""
    elements = {AffineSymmetry.identity(g.modulus)}
    h = g
    while h not in elements:
        elements.add(h)
        h = compose(g, h)
    return SymmetryGroup(frozenset(elements), g.modulus)


def powers(g: AffineSymmetry) -> list[AffineSymmetry]:
    """g^0, g^1, ... up to the order of g, in that order."""
    out = [AffineSymmetry.identity(g.modulus)]
    h = g
    while not h.is_identity():
        out.append(h)
        h = compose(g, h)
    return out


def orbit_union(x: PitchClassSet, group: Iterable[AffineSymmetry]) -> PitchClassSet:
    """Union of h(x) over h in ``group``."""
    mask = 0
    for h in group:
        mask |= apply_symmetry(h, x).mask
    return PitchClassSet(mask, x.modulus)


def stabilizer(x: PitchClassSet, group: SymmetryGroup | None = None) -> SymmetryGroup:
    if group is None:
        group = special_affine_group(x.modulus)
    _same_modulus(group.modulus, x.modulus)
    return SymmetryGroup(frozenset(h for h in group.elements if apply_symmetry(h, x) == x), x.modulus)


def is_rigid(x: PitchClassSet, group: SymmetryGroup | None = None) -> bool:
    return stabilizer(x, group).is_trivial()
