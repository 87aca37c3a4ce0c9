from math import comb

import pytest

from cssphere import face
from cssphere.constructions import cs_sphere_4m, crosspolytope_boundary, torus_t2
from cssphere.symmetry import (
    GroupSpec,
    OrbitGenerator,
    OrbitSizeError,
    Permutation,
    are_isomorphic,
    canonical_representative,
    central_involution,
    complex_from_orbits,
    expand_orbit,
    is_centrally_symmetric,
    is_invariant,
    meets_antipode,
    orbit_masks,
    prefilter_orbits,
    reflection,
    rotation,
)


def _orbit_count(n, k, group):
    seen, count = set(), 0
    from itertools import combinations

    for s in combinations(range(1, n + 1), k):
        m = face(s)
        if m not in seen:
            seen |= orbit_masks(m, group)
            count += 1
    return count


def _necklaces(n, k):
    # Burnside over rotations: (1/n) sum_{d | gcd(n,k)} phi(d) C(n/d, k/d)
    from math import gcd

    def phi(m):
        return sum(1 for i in range(1, m + 1) if gcd(i, m) == 1)

    g = gcd(n, k)
    return sum(phi(d) * comb(n // d, k // d) for d in range(1, g + 1) if g % d == 0) // n


@pytest.mark.parametrize("n,k", [(8, 4), (6, 3), (10, 4), (12, 4)])
def test_cyclic_orbit_counts(n, k):
    assert _orbit_count(n, k, GroupSpec("cyclic", n)) == _necklaces(n, k)


def test_dihedral_orbit_counts():
    # bracelets: 8 of 4-subsets of 8 points, 3 of 3-subsets of 6 points
    assert _orbit_count(8, 4, GroupSpec("dihedral", 8)) == 8
    assert _orbit_count(6, 3, GroupSpec("dihedral", 6)) == 3


def test_permutation_algebra():
    r = rotation(8)
    assert (r**8) == Permutation.identity(8)
    assert r * r.inverse() == Permutation.identity(8)
    assert central_involution(8) == r**4
    assert reflection(8)(1) == 8
    p = Permutation.from_cycles(5, [(1, 2, 3)])
    assert p.cycles() == [(1, 2, 3)]
    with pytest.raises(ValueError):
        central_involution(7)


def test_group_orders():
    assert len(GroupSpec("cyclic", 10).elements) == 10
    assert len(GroupSpec("dihedral", 10).elements) == 20


def test_expand_orbit_size_check():
    g = GroupSpec("cyclic", 8)
    assert len(expand_orbit(OrbitGenerator((1, 2, 3, 4), 8), g)) == 8
    assert len(expand_orbit(OrbitGenerator((1, 3, 5, 7)), g)) == 2
    with pytest.raises(OrbitSizeError):
        expand_orbit(OrbitGenerator((1, 3, 5, 7), 8), g)


def test_complex_from_orbits_crosspolytope():
    g = GroupSpec("cyclic", 8)
    assert complex_from_orbits([(1, 2, 3, 4), (1, 2, 4, 7)], g) == crosspolytope_boundary(4)


def test_central_symmetry():
    assert is_centrally_symmetric(cs_sphere_4m(3))
    assert is_centrally_symmetric(torus_t2(2))
    assert is_invariant(cs_sphere_4m(3), rotation(12))
    assert meets_antipode(face([1, 5]), 8)
    assert not meets_antipode(face([1, 2, 3, 4]), 8)


def test_prefilter_idempotent():
    g = GroupSpec("cyclic", 8)
    gens = [OrbitGenerator((1, 2, 3, 4)), OrbitGenerator((1, 2, 3, 5)), OrbitGenerator((1, 2, 4, 7))]
    once = prefilter_orbits(gens, g)
    assert [o.representative for o in once] == [(1, 2, 3, 4), (1, 2, 4, 7)]
    assert prefilter_orbits(once, g) == once


def test_canonical_representative_is_orbit_invariant():
    g = GroupSpec("dihedral", 10)
    m = face([1, 2, 5])
    reps = {canonical_representative(x, g) for x in orbit_masks(m, g)}
    assert len(reps) == 1


def test_isomorphism_witness():
    a, b = cs_sphere_4m(2), crosspolytope_boundary(4)
    perm = are_isomorphic(a, b)
    assert perm is not None
    assert a.relabel(list(perm.images)) == b
    assert are_isomorphic(cs_sphere_4m(3), torus_t2(3)) is None
