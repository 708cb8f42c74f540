"""Brute-force reference computations on plain frozensets, independent of modquanta."""

from itertools import combinations

C_MAJOR = (0, 2, 4, 5, 7, 9, 11)


def affine(a, v, xs, n=12):
    return frozenset((v * x + a) % n for x in xs)


def all_special(n=12):
    return [(a, v) for v in (1, -1) for a in range(n)]


def stacked(scale, width):
    xs = sorted(scale)
    k = len(xs)
    return [frozenset(xs[(i + 2 * j) % k] for j in range(width)) for i in range(k)]


def keys(scale, width, n=12):
    """Distinct transposed copies (a, scale, degrees), first occurrence of each scale."""
    base = stacked(scale, width)
    out, seen = [], set()
    for a in range(n):
        s = affine(a, 1, scale, n)
        if s not in seen:
            seen.add(s)
            out.append((a, s, [affine(a, 1, d, n) for d in base]))
    return out


def fixing(xs, n=12):
    xs = frozenset(xs)
    return [(a, v) for a, v in all_special(n) if affine(a, v, xs, n) == xs]


def cadential(J, scale, width, n=12):
    ks = keys(scale, width, n)
    chords = [ks[0][2][j] for j in J]
    hits = [a for a, _, degs in ks if all(c in degs for c in chords)]
    return hits == [ks[0][0]]


def minimal_cadential(scale, width, n=12):
    k = len(scale)
    cads = [set(J) for r in range(k + 1) for J in combinations(range(k), r) if cadential(J, scale, width, n)]
    return sorted(
        (tuple(sorted(J)) for J in cads if not any(other < J for other in cads)),
        key=lambda J: (len(J), J),
    )


def cyclic_orbit(a, v, xs, n=12):
    """Union of g^i(xs) by iterating g until the set stops growing."""
    out = frozenset(xs)
    while True:
        nxt = out | affine(a, v, out, n)
        if nxt == out:
            return out
        out = nxt


def nerve_faces(degrees):
    """Every non-empty index set with a common tone, by plain subset enumeration."""
    k = len(degrees)
    faces = []
    for r in range(1, k + 1):
        for J in combinations(range(k), r):
            if frozenset.intersection(*(degrees[j] for j in J)):
                faces.append(J)
    return faces
