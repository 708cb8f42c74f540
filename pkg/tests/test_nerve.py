from itertools import combinations

import pytest

from modquanta.errors import CapacityError, InvalidInput
from modquanta.nerve import SimplicialComplex, complex_stats, compute_nerve, is_skeleton_cycle, skeleton_dot
from modquanta.pitch import PitchClassSet
from modquanta.scales import Interpretation, build_interpretation, tonality_orbit

import oracles

I, II, III, IV, V, VI, VII = range(7)

TETRAHEDRA = {
    "S1": (I, II, IV, VI),
    "S2": (II, III, V, VII),
    "S3": (III, IV, VI, I),
    "S4": (IV, V, VII, II),
    "S5": (V, VI, I, III),
    "S6": (VI, VII, II, IV),
    "S7": (VII, I, III, V),
}


def oracle_f_vector(width):
    faces = oracles.nerve_faces(oracles.stacked(oracles.C_MAJOR, width))
    counts = [0] * max(len(f) for f in faces)
    for f in faces:
        counts[len(f) - 1] += 1
    return tuple(counts)


def test_triadic_f_vector(triadic):
    assert oracle_f_vector(3) == (7, 14, 7)
    stats = complex_stats(compute_nerve(triadic))
    assert stats.f_vector == (7, 14, 7)
    assert stats.euler == 0
    assert not stats.skeleton_complete


def test_tetradic_maximal_faces(tetradic):
    nerve = compute_nerve(tetradic)
    assert set(nerve.maximal_faces) == {tuple(sorted(s)) for s in TETRAHEDRA.values()}
    assert nerve.dimension == 3


def test_tetradic_stats_against_triple_oracle(tetradic):
    degrees = oracles.stacked(oracles.C_MAJOR, 4)
    triangles = sum(1 for J in combinations(range(7), 3) if frozenset.intersection(*(degrees[j] for j in J)))
    edges = sum(1 for J in combinations(range(7), 2) if degrees[J[0]] & degrees[J[1]])
    assert (edges, triangles) == (21, 21)
    assert oracle_f_vector(4) == (7, 21, 21, 7)

    stats = complex_stats(compute_nerve(tetradic))
    assert stats.f_vector == (7, 21, 21, 7)
    assert stats.edge_count == 21
    assert stats.euler == 0
    assert stats.skeleton_complete


def test_width_one_is_discrete():
    stats = complex_stats(compute_nerve(build_interpretation(PitchClassSet.of([0, 1, 3, 4, 6, 8, 10]), 1)))
    assert stats.f_vector == (7,)
    assert stats.euler == 7


@pytest.mark.parametrize(
    "scale, width",
    [(oracles.C_MAJOR, 3), (oracles.C_MAJOR, 4), (oracles.C_MAJOR, 2), ((0, 2, 3, 5, 7, 8, 11), 4), ((0, 3, 6), 2)],
)
def test_faces_match_oracle(scale, width):
    interp = build_interpretation(PitchClassSet.of(scale), width)
    nerve = compute_nerve(interp)
    faces = list(nerve.faces())
    assert sorted(faces) == sorted(oracles.nerve_faces([frozenset(d) for d in interp.degrees]))
    # downward closure
    fs = set(faces)
    for f in faces:
        for r in range(1, len(f)):
            assert all(sub in fs for sub in combinations(f, r))


@pytest.mark.parametrize("width", [3, 4])
def test_transposition_invariant(width):
    base = build_interpretation(PitchClassSet.of(oracles.C_MAJOR), width)
    expected = compute_nerve(base)
    for t in tonality_orbit(base):
        transported = Interpretation(t.scale, width, t.degrees)
        assert compute_nerve(transported) == expected
        # re-indexing the transposed scale from its lowest residue only rotates labels
        fresh = compute_nerve(build_interpretation(t.scale, width))
        assert complex_stats(fresh).f_vector == complex_stats(expected).f_vector


@pytest.mark.parametrize("width", [3, 4])
def test_no_face_above_width(width, request):
    interp = request.getfixturevalue("triadic" if width == 3 else "tetradic")
    assert compute_nerve(interp).dimension == width - 1


def test_tone_stars_are_the_tetrahedra(tetradic):
    stars = {tuple(i for i, d in enumerate(tetradic.degrees) if t in d) for t in tetradic.scale}
    assert stars == set(compute_nerve(tetradic).maximal_faces)


def test_seven_cycle_in_tetradic_skeleton(tetradic):
    nerve = compute_nerve(tetradic)
    assert is_skeleton_cycle(nerve, [I, V, IV, VI, III, VII, II, I])
    assert is_skeleton_cycle(nerve, [I, V, IV, VI, III, VII, II])


def test_cycle_rejections(triadic):
    nerve = compute_nerve(triadic)
    assert not is_skeleton_cycle(nerve, [I, II, III])  # I and II share no tone
    assert is_skeleton_cycle(nerve, [I, III, V])
    assert not is_skeleton_cycle(nerve, [I, III])
    assert not is_skeleton_cycle(nerve, [I, III, I, V])
    with pytest.raises(InvalidInput):
        is_skeleton_cycle(nerve, [I, III, 9])


def test_tetrahedra_chain_into_a_ring(tetradic):
    ring = ["S5", "S7", "S2", "S4", "S6", "S1", "S3", "S5"]
    for a, b in zip(ring, ring[1:]):
        assert len(set(TETRAHEDRA[a]) & set(TETRAHEDRA[b])) == 3


def test_dot_export(triadic):
    dot = skeleton_dot(compute_nerve(triadic))
    assert dot.startswith("graph nerve {\n")
    assert dot.count(" -- ") == 14
    assert '"I" -- "III";' in dot
    assert dot == skeleton_dot(compute_nerve(triadic))


def test_capacity():
    interp = build_interpretation(PitchClassSet.of(range(17), 20), 3)
    with pytest.raises(CapacityError):
        compute_nerve(interp)


def test_contains():
    c = SimplicialComplex(3, ((0, 1), (2,)))
    assert (0, 1) in c and (1,) in c and () not in c and (1, 2) not in c
