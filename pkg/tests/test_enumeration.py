import pytest

from cssphere.constructions import crosspolytope_boundary, cs_sphere_4m
from cssphere.enumeration import (
    KNOWN_CYCLIC_COUNTS,
    SearchConfig,
    candidate_orbits,
    check_selection,
    classify,
    enumerate_nn_cs_spheres,
    reference_search,
)
from cssphere.symmetry import are_isomorphic


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(d=3, n=9)
    with pytest.raises(ValueError):
        SearchConfig(d=3, n=6)
    with pytest.raises(ValueError):
        SearchConfig(d=3, n=8, group="alternating")


def test_candidate_orbits_avoid_antipodes():
    cfg = SearchConfig(d=3, n=8)
    reps = [o.representative for o in candidate_orbits(cfg)]
    assert (1, 2, 3, 4) in reps and (1, 2, 4, 7) in reps
    assert all(not any(v + 4 in r for v in r) for r in reps)


@pytest.mark.parametrize("d,n", [(2, 6), (3, 8), (3, 10)])
def test_pruning_is_sound(d, n):
    cfg = SearchConfig(d=d, n=n)
    brute = reference_search(cfg)
    res = enumerate_nn_cs_spheres(cfg)
    assert sorted(res.accepted_selections) == brute


@pytest.mark.parametrize("d,n", [(3, 8), (3, 10)])
def test_nn_pruning_toggle(d, n):
    on = enumerate_nn_cs_spheres(SearchConfig(d=d, n=n))
    off = enumerate_nn_cs_spheres(SearchConfig(d=d, n=n, nn_pruning=False))
    assert on.count == off.count
    assert off.nodes >= on.nodes


@pytest.mark.parametrize("d,n", [(2, 6), (2, 8), (3, 8), (3, 10), (3, 12), (4, 10), (4, 12), (5, 12)])
def test_small_counts(d, n):
    res = enumerate_nn_cs_spheres(SearchConfig(d=d, n=n))
    assert res.exhausted and not res.uncertified
    assert res.count == KNOWN_CYCLIC_COUNTS[(d, n)]


def test_found_spheres_are_known():
    assert are_isomorphic(enumerate_nn_cs_spheres(SearchConfig(d=3, n=8)).classes[0].complex, crosspolytope_boundary(4))
    res = enumerate_nn_cs_spheres(SearchConfig(d=3, n=12))
    assert are_isomorphic(res.classes[0].complex, cs_sphere_4m(3)) is not None


def test_check_selection_reasons():
    cfg = SearchConfig(d=3, n=12)
    assert check_selection(cs_sphere_4m(3), cfg)[0] == "sphere"
    assert check_selection(cs_sphere_4m(2), SearchConfig(d=3, n=8))[0] == "sphere"


def test_catalog_and_json_deterministic():
    cfg = SearchConfig(d=3, n=10, seed=4)
    a, b = enumerate_nn_cs_spheres(cfg), enumerate_nn_cs_spheres(cfg)
    assert a.to_dict() == b.to_dict()
    labels = [e.label for e in classify(a)]
    assert labels and labels[0].startswith("3_nn_10^")
    assert "orbit " in classify(a)[0].presentation_text()


def test_dihedral_search():
    res = enumerate_nn_cs_spheres(SearchConfig(d=3, n=8, group="dihedral"))
    assert res.count == 1


def test_time_budget():
    res = enumerate_nn_cs_spheres(SearchConfig(d=3, n=14, time_budget=0.0))
    assert not res.exhausted
