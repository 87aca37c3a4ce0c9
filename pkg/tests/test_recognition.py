import pytest

from cssphere import SimplicialComplex
from cssphere.complex import suspension
from cssphere.constructions import crosspolytope_boundary, cs_sphere_4m, simplex_boundary, stacked_cs_sphere, torus_t2
from cssphere.recognition import (
    BistellarMove,
    Verdict,
    bistellar_flip,
    is_closed_pseudomanifold,
    is_combinatorial_manifold,
    is_sphere,
    is_sphere_exact_low_dim,
    is_stacked_sphere,
    replay,
    ridge_degrees,
    sphere_heuristic,
    subdivision_move,
    valid_moves,
)
from cssphere.symmetry import Permutation, rotation


def test_pseudomanifold():
    assert is_closed_pseudomanifold(cs_sphere_4m(3))
    disk = SimplicialComplex.from_facets([(1, 2, 3), (1, 3, 4)])
    assert not is_closed_pseudomanifold(disk)
    assert set(ridge_degrees(simplex_boundary(3)).values()) == {2}


def test_exact_low_dim():
    assert is_sphere_exact_low_dim(crosspolytope_boundary(3))
    assert not is_sphere_exact_low_dim(torus_t2(2))
    # two disjoint triangles boundaries: a 1-manifold that is not a circle
    two = SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    assert not is_sphere_exact_low_dim(two)


def test_flip_roundtrip():
    c = simplex_boundary(3)
    mv = subdivision_move(c, (1, 2, 3))
    d = bistellar_flip(c, mv)
    assert tuple(d.f_vector()) == (5, 9, 6)
    assert bistellar_flip(d, mv.reverse()).facets == c.facets


def test_invalid_flip():
    with pytest.raises(ValueError):
        bistellar_flip(simplex_boundary(3), BistellarMove((1, 2), (3, 4)))


def test_valid_moves_on_octahedron():
    moves = valid_moves(crosspolytope_boundary(3), 1)
    assert len(moves) == 12
    assert all(m.index == 1 for m in moves)


def test_heuristic_certificate_replays():
    c = cs_sphere_4m(3)
    cert = sphere_heuristic(c, seed=3)
    assert cert.verdict == Verdict.SPHERE
    end = replay(c, cert.move_log).normalize()[0]
    assert end == simplex_boundary(4)


def test_heuristic_deterministic():
    c = crosspolytope_boundary(5)
    a, b = sphere_heuristic(c, seed=7), sphere_heuristic(c, seed=7)
    assert a.move_log == b.move_log


def test_heuristic_rejections():
    assert sphere_heuristic(torus_t2(2)).obstruction
    s, _ = suspension(torus_t2(2))
    assert sphere_heuristic(s).verdict == Verdict.MANIFOLD
    assert sphere_heuristic(cs_sphere_4m(3), budget=0).verdict == Verdict.MANIFOLD


def test_is_sphere_dispatch():
    assert is_sphere(crosspolytope_boundary(3)).note == "exact"
    assert is_sphere(torus_t2(2)).verdict == Verdict.MANIFOLD
    assert is_sphere(crosspolytope_boundary(5)).is_sphere


def test_manifold_checks():
    c = cs_sphere_4m(4)
    cert = is_combinatorial_manifold(c, symmetry=[rotation(16)])
    assert cert.verdict == Verdict.MANIFOLD and list(cert.links_checked) == [1]
    assert is_combinatorial_manifold(torus_t2(2)).verdict == Verdict.MANIFOLD
    s, _ = suspension(torus_t2(2))
    assert is_combinatorial_manifold(s).verdict == Verdict.NOT_MANIFOLD
    with pytest.raises(ValueError):
        is_combinatorial_manifold(c, symmetry=[Permutation.from_cycles(16, [(1, 2)])])


def test_stacked_detection():
    assert is_stacked_sphere(stacked_cs_sphere(3, 5).link(1))
    assert not is_stacked_sphere(crosspolytope_boundary(4))
