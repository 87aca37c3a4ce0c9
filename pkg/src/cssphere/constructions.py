"""Explicit centrally symmetric spheres and related complexes.

Every construction returns complexes whose antipodal map is the standard
involution ``i <-> i + k`` on ``2k`` labels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .complex import SimplicialComplex, face, iter_bits, vertices_of
from .invariants import central_neighborliness_degree
from .symmetry import GroupSpec, OrbitGenerator, central_involution, complex_from_orbits, is_centrally_symmetric


def crosspolytope_boundary(k: int) -> SimplicialComplex:
    """Boundary of the k-dimensional crosspolytope on labels 1..2k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    facets = []
    for signs in range(2**k):
        facets.append(face(i + 1 + (k if signs >> i & 1 else 0) for i in range(k)))
    return SimplicialComplex(2 * k, frozenset(facets))


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex on labels 1..d+1."""
    full = (1 << (d + 1)) - 1
    return SimplicialComplex(d + 1, frozenset(full & ~(1 << i) for i in range(d + 1)))


# the 4m series -------------------------------------------------------------------

def cs_sphere_4m_orbits(m: int) -> list[OrbitGenerator]:
    """Orbit generators of the cyclic 3-sphere series on 4m vertices, column by column."""
    if m < 2:
        raise ValueError("m must be at least 2")
    n = 4 * m
    gens = [(1, 2, 3, 4), (1, 2, 4, 2 * m + 3)]
    gens += [(1, 2, 2 * m + 2 * j + 1, 2 * m + 2 * j + 3) for j in range(1, m - 1)]
    gens += [(1, 3, 2 * j + 1, 2 * j + 4) for j in range(2, m)]
    return [OrbitGenerator(g, n) for g in gens]


def cs_sphere_4m(m: int) -> SimplicialComplex:
    """Nearly neighborly centrally symmetric 3-sphere on 4m vertices with cyclic symmetry."""
    return complex_from_orbits(cs_sphere_4m_orbits(m), GroupSpec("cyclic", 4 * m))


def torus_t2(m: int) -> SimplicialComplex:
    """The vertex-transitive 2-torus on 4m vertices sitting inside the 4m sphere."""
    if m < 2:
        raise ValueError("m must be at least 2")
    n = 4 * m
    return complex_from_orbits([OrbitGenerator((1, 2, 3), n), OrbitGenerator((1, 3, 2 * m + 2), n)], GroupSpec("cyclic", n))


# balls and surgery ----------------------------------------------------------------

def jockusch_ball(d: int) -> SimplicialComplex:
    """Ball in the boundary of the d-crosspolytope built from 1..d by flipping up to (d-2)/2 vertices."""
    if d % 2 or d < 4:
        raise ValueError("d must be even and at least 4")
    base = list(range(1, d + 1))
    facets = []
    for j in range((d - 2) // 2 + 1):
        for flip in combinations(base, j):
            facets.append(face(v + d if v in flip else v for v in base))
    return SimplicialComplex(2 * d, frozenset(facets))


@dataclass(frozen=True)
class SurgeryResult:
    complex: SimplicialComplex
    images: tuple[int, ...]  # new label of old vertex v is images[v - 1]
    new_vertex: int  # apex over the boundary of B
    new_antipode: int  # apex over the boundary of B^I


def _apply_involution(c: SimplicialComplex, n: int) -> SimplicialComplex:
    I = central_involution(n)
    return SimplicialComplex(n, frozenset(I.apply_mask(F) for F in c.facets))


def surgery(s: SimplicialComplex, ball: SimplicialComplex) -> SurgeryResult:
    """Remove a ball and its antipodal image, then cone their boundaries from a new antipodal pair.

    Labels are rearranged so that the result carries the standard involution on
    ``n + 2`` labels; the new pair is ``(k + 1, 2k + 2)`` for ``n = 2k``.
    """
    n = s.n
    if n % 2:
        raise ValueError("surgery needs an even vertex count")
    k = n // 2
    ball_i = _apply_involution(ball, n)
    if not ball.facets <= s.facets or not ball_i.facets <= s.facets:
        raise ValueError("ball is not a union of facets of the sphere")
    if ball.facets & ball_i.facets:
        raise ValueError("ball and its antipodal image share a facet")
    v1, v2 = 1 << n, 1 << (n + 1)  # temporary labels n+1, n+2
    keep = s.facets - ball.facets - ball_i.facets
    new = set(keep)
    new |= {F | v1 for F in ball.boundary().facets}
    new |= {F | v2 for F in ball_i.boundary().facets}
    images = tuple(v if v <= k else v + 1 for v in range(1, n + 1))
    full = list(images) + [k + 1, n + 2]
    raw = SimplicialComplex(n + 2, frozenset(new))
    return SurgeryResult(raw.relabel(full, n=n + 2), images, k + 1, n + 2)


def mcmullen_shephard_sphere(d: int) -> SimplicialComplex:
    """Nearly neighborly centrally symmetric (d-1)-sphere on 2d+2 vertices, d even."""
    return surgery(crosspolytope_boundary(d), jockusch_ball(d)).complex


# Jockusch step --------------------------------------------------------------------

class BallSearchExhausted(RuntimeError):
    pass


def find_jockusch_ball(s: SimplicialComplex, seed: int = 0, budget: int = 200_000) -> SimplicialComplex:
    """Search a stacked 3-ball through all vertices of ``s``, disjoint from its antipodal image.

    The ball grows one tetrahedron at a time across a boundary triangle, each
    step adding a vertex not yet in the ball, so every ball produced is stacked
    and has no interior edges or vertices. Attachment is tried at the most
    recently added tetrahedron first; ``seed`` permutes ties.
    """
    if s.dim != 3:
        raise ValueError("expects a 3-dimensional complex")
    n = s.n
    I = central_involution(n)
    everything = s.vertex_mask
    rng = random.Random(seed)
    by_ridge: dict[int, list[int]] = {}
    for F in s.facets:
        for b in iter_bits(F):
            by_ridge.setdefault(F & ~b, []).append(F)

    def across(F: int, ridge: int) -> int:
        a, b = by_ridge[ridge]
        return b if a == F else a

    nodes = 0
    starts = sorted(s.facets, key=vertices_of)
    rng.shuffle(starts)

    def grow(chain: list[int], covered: int, banned: set[int]) -> list[int] | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BallSearchExhausted(f"no ball found within {budget} search nodes")
        if covered == everything:
            return chain
        tried = set()
        for F in reversed(chain):
            options = []
            for b in iter_bits(F):
                G = across(F, F & ~b)
                if G in tried or G in banned or G in chain:
                    continue
                apex = G & ~F
                if apex & covered:
                    continue
                options.append(G)
            rng.shuffle(options)
            for G in options:
                tried.add(G)
                res = grow(chain + [G], covered | G, banned | {I.apply_mask(G)})
                if res is not None:
                    return res
        return None

    for F in starts:
        res = grow([F], F, {I.apply_mask(F)})
        if res is not None:
            return SimplicialComplex(n, frozenset(res))
    raise BallSearchExhausted("no admissible ball exists")


def jockusch_next(s: SimplicialComplex, seed: int = 0, budget: int = 200_000) -> SurgeryResult:
    """One surgery step: a nearly neighborly CS 3-sphere on 2k vertices to one on 2k+2."""
    if s.dim != 3 or not is_centrally_symmetric(s):
        raise ValueError("expects a centrally symmetric 3-dimensional complex")
    if central_neighborliness_degree(s) < 2:
        raise ValueError("expects a nearly neighborly complex")
    return surgery(s, find_jockusch_ball(s, seed, budget))


def jockusch_family(k_max: int, seed: int = 0) -> list[SurgeryResult]:
    """Steps producing spheres on 10, 12, ..., 2*k_max + 2 vertices from the 4-crosspolytope."""
    out = []
    s = crosspolytope_boundary(4)
    for _ in range(4, k_max + 1):
        step = jockusch_next(s, seed)
        out.append(step)
        s = step.complex
    return out


# stacked spheres -------------------------------------------------------------------

def stacked_cs_sphere(d: int, k: int) -> SimplicialComplex:
    """Subdivide k-d successive antipodal facet pairs of the d-crosspolytope boundary.

    Each step subdivides the lexicographically least facet through the newest
    vertex (the crosspolytope's vertex 1 at the start) together with its antipode.
    """
    if k < d:
        raise ValueError("k must be at least d")
    c = crosspolytope_boundary(d)
    newest = 1
    for _ in range(k - d):
        n = c.n
        I = central_involution(n)
        b = 1 << (newest - 1)
        F = min((G for G in c.facets if G & b), key=vertices_of)
        G = I.apply_mask(F)
        v1, v2 = 1 << n, 1 << (n + 1)
        facets = set(c.facets) - {F, G}
        facets |= {(F & ~x) | v1 for x in iter_bits(F)}
        facets |= {(G & ~x) | v2 for x in iter_bits(G)}
        half = n // 2
        relabel = [v if v <= half else v + 1 for v in range(1, n + 1)] + [half + 1, n + 2]
        c = SimplicialComplex(n + 2, frozenset(facets)).relabel(relabel, n=n + 2)
        newest = half + 1
    return c


def octahedron() -> SimplicialComplex:
    return crosspolytope_boundary(3)

