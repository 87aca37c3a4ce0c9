"""Randomized invariants, seeded through hypothesis so runs are reproducible."""

import random

from hypothesis import given, settings, strategies as st

from cssphere.constructions import crosspolytope_boundary, cs_sphere_4m, cs_sphere_4m_orbits, stacked_cs_sphere, torus_t2
from cssphere.homology import homology
from cssphere.invariants import f_from_h, h_vector
from cssphere.io import parse_complex, serialize_complex, serialize_orbits
from cssphere.recognition import bistellar_flip, subdivision_move, valid_moves
from cssphere.symmetry import GroupSpec, OrbitGenerator, are_isomorphic, expand_orbit, orbit_masks, prefilter_orbits

PROFILE = settings(max_examples=25, deadline=None, derandomize=True)

CS8, T8 = cs_sphere_4m(2), torus_t2(2)


def _random_flips(c, rng, steps):
    for _ in range(steps):
        facet = rng.choice(c.sorted_facets())
        moves = valid_moves(c) + [subdivision_move(c, facet, apex=c.n + 1)]
        c = bistellar_flip(c, rng.choice(moves))
    return c


@PROFILE
@given(st.integers(0, 10**6), st.integers(1, 12))
def test_flips_preserve_euler_and_homology(seed, steps):
    rng = random.Random(seed)
    for c in (CS8, T8):
        d = _random_flips(c, rng, steps)
        assert d.euler_characteristic() == c.euler_characteristic()
        assert homology(d).betti[: c.dim + 1] == homology(c).betti


@PROFILE
@given(st.lists(st.integers(0, 50), min_size=1, max_size=6))
def test_f_h_roundtrip(tail):
    h = [1] + tail
    f = f_from_h(h)
    assert h_vector(f) == tuple(h)


@PROFILE
@given(st.sampled_from([crosspolytope_boundary(4), cs_sphere_4m(3), torus_t2(3), stacked_cs_sphere(4, 6)]))
def test_h_from_f_roundtrip(c):
    f = c.f_vector()
    assert tuple(f_from_h(h_vector(f))) == tuple(f)


@PROFILE
@given(
    st.sampled_from(["cyclic", "dihedral"]),
    st.integers(3, 9).map(lambda k: 2 * k),
    st.data(),
)
def test_orbit_expansion_well_defined(kind, n, data):
    g = GroupSpec(kind, n)
    size = data.draw(st.integers(1, min(n - 1, 5)))
    rep = data.draw(st.lists(st.integers(1, n), min_size=size, max_size=size, unique=True))
    orbit = expand_orbit(OrbitGenerator(tuple(sorted(rep))), g)
    # every member generates the same orbit, and its size divides the group order
    for m in orbit:
        assert orbit_masks(m, g) == orbit
    assert len(g.elements) % len(orbit) == 0
    # a rotated representative, written with labels beyond n, names the same orbit
    rotated = tuple(sorted(v + 1 for v in rep))
    assert expand_orbit(OrbitGenerator(rotated), g) == orbit


@PROFILE
@given(st.integers(4, 12).map(lambda k: 2 * k), st.data())
def test_prefilter_idempotent(n, data):
    g = GroupSpec("cyclic", n)
    reps = data.draw(st.lists(st.lists(st.integers(1, n), min_size=4, max_size=4, unique=True), max_size=8))
    gens = [OrbitGenerator(tuple(sorted(r))) for r in reps]
    once = prefilter_orbits(gens, g)
    assert prefilter_orbits(once, g) == once


@PROFILE
@given(st.permutations(list(range(1, 13))), st.sampled_from([cs_sphere_4m(3), torus_t2(3)]))
def test_isomorphism_relabel_invariance(perm, c):
    d = c.relabel(list(perm))
    witness = are_isomorphic(c, d)
    assert witness is not None
    assert c.relabel(list(witness.images)) == d


@PROFILE
@given(st.integers(2, 6), st.permutations(list(range(1, 9))))
def test_parser_roundtrip(m, perm):
    c = cs_sphere_4m(m)
    assert parse_complex(serialize_complex(c)) == c
    d = CS8.relabel(list(perm))
    assert parse_complex(serialize_complex(d)) == d
    g = GroupSpec("cyclic", 4 * m)
    assert parse_complex(serialize_orbits(cs_sphere_4m_orbits(m), g, d=3)) == c
