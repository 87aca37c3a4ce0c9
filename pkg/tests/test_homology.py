import numpy as np
import pytest
from oracles import determinantal_divisors, random_matrices

from cssphere.constructions import crosspolytope_boundary, cs_sphere_4m, simplex_boundary, torus_t2
from cssphere.homology import homology, smith_normal_form
from cssphere import SimplicialComplex


def test_snf_matches_minor_oracle():
    for a in random_matrices(1000, seed=20240501):
        assert smith_normal_form(a) == determinantal_divisors(np.array(a, dtype=float)), a


def test_snf_small_cases():
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([[6]]) == [6]


def test_spheres():
    assert homology(simplex_boundary(3)).betti == (1, 0, 1)
    assert homology(crosspolytope_boundary(4)).is_sphere_like()
    for m in (2, 3, 4):
        h = homology(cs_sphere_4m(m))
        assert h.betti == (1, 0, 0, 1) and not any(h.torsion)


def test_torus():
    h = homology(torus_t2(2))
    assert h.betti == (1, 2, 1)
    assert h.euler_characteristic() == 0


@pytest.fixture
def projective_plane():
    # six-vertex real projective plane
    return SimplicialComplex.from_facets(
        [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
         (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6)]
    )


def test_torsion(projective_plane):
    h = homology(projective_plane)
    assert h.betti == (1, 0, 0)
    assert tuple(h.torsion[1]) == (2,)
