from itertools import combinations

import pytest

from cssphere import SimplicialComplex, face, vertices_of
from cssphere.complex import cone, join, suspension
from cssphere.constructions import crosspolytope_boundary, simplex_boundary


def test_face_roundtrip():
    assert vertices_of(face([3, 1, 7])) == (1, 3, 7)
    assert face([]) == 0


def test_from_facets_drops_non_maximal():
    c = SimplicialComplex.from_facets([(1, 2, 3), (1, 2), (3, 4)])
    assert c.sorted_facets() == [(1, 2, 3), (3, 4)]
    assert not c.is_pure()


@pytest.mark.parametrize("bad", [[], [(1, 1, 2)]])
def test_from_facets_rejects(bad):
    with pytest.raises(ValueError):
        SimplicialComplex.from_facets(bad)


def test_boundary_of_tetrahedron():
    c = SimplicialComplex.from_facets([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    assert tuple(c.f_vector()) == (4, 6, 4)
    assert c.euler_characteristic() == 2
    assert c == simplex_boundary(3)


def test_crosspolytope_counts_match_brute_force():
    # faces of the boundary of the 4-crosspolytope are subsets of 1..8 without an antipodal pair
    c = crosspolytope_boundary(4)
    for i in range(4):
        expected = sum(
            1 for s in combinations(range(1, 9), i + 1) if not any(v + 4 in s for v in s)
        )
        assert len(c.faces(i)) == expected
    assert len(c.faces(2)) == 32


def test_octahedron_triangles():
    assert len(crosspolytope_boundary(3).faces(2)) == 8
    # boundary of the 8-crosspolytope: 2^3 * C(8, 3) triangles in its 2-skeleton
    assert len(crosspolytope_boundary(8).faces(2)) == 448


def test_link_star_deletion():
    c = crosspolytope_boundary(3)
    lk = c.link(face([1]))
    assert lk.sorted_facets() == [(2, 3), (2, 6), (3, 5), (5, 6)]
    assert c.star(face([1])).facets <= c.facets
    assert face([1]) not in c.deletion(face([1])).face_set()
    assert c.degree(1) == 4


def test_skeleton_and_boundary():
    tet = SimplicialComplex.from_facets([(1, 2, 3, 4)])
    assert tet.boundary() == simplex_boundary(3)
    assert tuple(tet.skeleton(1).f_vector()) == (4, 6)


def test_relabel_and_normalize():
    c = SimplicialComplex.from_facets([(2, 5, 9)])
    d, mapping = c.normalize()
    assert d.sorted_facets() == [(1, 2, 3)]
    assert mapping[9] == 3
    assert c.relabel({2: 1, 5: 2, 9: 3}, n=3) == d


def test_join_cone_suspension():
    two_points = SimplicialComplex.from_facets([(1,), (2,)])
    square = join(two_points, two_points)
    assert tuple(square.f_vector()) == (4, 4)
    assert tuple(cone(square).f_vector()) == (5, 8, 4)
    s, images = suspension(crosspolytope_boundary(2))
    assert s == crosspolytope_boundary(3)
    assert images == [1, 2, 4, 5]
