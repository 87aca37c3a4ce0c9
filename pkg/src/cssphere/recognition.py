"""Pseudomanifold and manifold checks, exact low-dimensional sphere recognition,
and one-sided sphere recognition by bistellar flips."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .complex import SimplicialComplex, face, iter_bits, subfaces, vertices_of
from .symmetry import Permutation, is_invariant


class Verdict(str, Enum):
    SPHERE = "sphere"
    MANIFOLD = "manifold-not-certified-sphere"
    NOT_PSEUDOMANIFOLD = "not-pseudomanifold"
    NOT_MANIFOLD = "not-manifold"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BistellarMove:
    """Replace ``face * boundary(co_face)`` by ``boundary(face) * co_face``."""

    face: tuple[int, ...]
    co_face: tuple[int, ...]

    @property
    def index(self) -> int:
        return len(self.face) - 1

    def reverse(self) -> "BistellarMove":
        return BistellarMove(self.co_face, self.face)

    def to_list(self) -> list[list[int]]:
        return [list(self.face), list(self.co_face)]


@dataclass
class RecognitionCertificate:
    verdict: Verdict
    move_log: list[BistellarMove] = field(default_factory=list)
    links_checked: dict[int, str] = field(default_factory=dict)
    seed: int | None = None
    note: str = ""
    obstruction: str = ""

    @property
    def is_sphere(self) -> bool:
        return self.verdict == Verdict.SPHERE

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "moves": [m.to_list() for m in self.move_log],
            "links_checked": {str(k): v for k, v in sorted(self.links_checked.items())},
            "seed": self.seed,
            "note": self.note,
            "obstruction": self.obstruction,
        }


# pseudomanifolds ------------------------------------------------------------

def ridge_degrees(c: SimplicialComplex) -> dict[int, int]:
    counts: dict[int, int] = {}
    for F in c.facets:
        for b in iter_bits(F):
            r = F & ~b
            counts[r] = counts.get(r, 0) + 1
    return counts


def is_strongly_connected(c: SimplicialComplex) -> bool:
    if not c.facets:
        return False
    by_ridge: dict[int, list[int]] = {}
    for F in c.facets:
        for b in iter_bits(F):
            by_ridge.setdefault(F & ~b, []).append(F)
    start = next(iter(c.facets))
    seen = {start}
    stack = [start]
    while stack:
        F = stack.pop()
        for b in iter_bits(F):
            for G in by_ridge[F & ~b]:
                if G not in seen:
                    seen.add(G)
                    stack.append(G)
    return len(seen) == len(c.facets)


def is_closed_pseudomanifold(c: SimplicialComplex) -> bool:
    """Pure, every ridge in exactly two facets, and strongly connected."""
    if not c.facets or not c.is_pure() or c.dim < 1:
        return c.dim == 0 and len(c.facets) == 2
    if any(v != 2 for v in ridge_degrees(c).values()):
        return False
    return is_strongly_connected(c)


def _is_cycle(c: SimplicialComplex) -> bool:
    if c.dim != 1 or not c.is_pure():
        return False
    deg: dict[int, int] = {}
    for e in c.facets:
        for b in iter_bits(e):
            deg[b] = deg.get(b, 0) + 1
    if any(x != 2 for x in deg.values()):
        return False
    return is_strongly_connected(c)


def is_sphere_exact_low_dim(c: SimplicialComplex) -> bool:
    """Exact sphere recognition in dimensions 0, 1 and 2."""
    d = c.dim
    if d > 2:
        raise ValueError("exact recognition only in dimension <= 2; use sphere_heuristic")
    if d == 0:
        return len(c.facets) == 2
    if d == 1:
        return _is_cycle(c)
    if d < 0 or not is_closed_pseudomanifold(c):
        return False
    if c.euler_characteristic() != 2:
        return False
    return all(_is_cycle(c.link(b)) for b in iter_bits(c.vertex_mask))


def is_stacked_sphere(c: SimplicialComplex) -> bool:
    """Reduce to the boundary of a simplex using vertex removals only."""
    if not is_closed_pseudomanifold(c):
        return False
    state = _FlipState(c)
    d = state.d
    while True:
        if len(state.facets) == d + 2 and state.vertex_count() == d + 2:
            return True
        moves = state.candidates(0)
        if not moves:
            return False
        state.apply(*moves[0])


# bistellar flips ---------------------------------------------------------------

class _FlipState:
    """Mutable facet set with per-vertex stars, used inside flip searches."""

    def __init__(self, c: SimplicialComplex):
        self.d = c.dim
        self.facets: set[int] = set(c.facets)
        self.stars: dict[int, set[int]] = {}
        for F in self.facets:
            for b in iter_bits(F):
                self.stars.setdefault(b, set()).add(F)

    def vertex_count(self) -> int:
        return len(self.stars)

    def containing(self, A: int) -> list[int]:
        bits = list(iter_bits(A))
        smallest = min((self.stars.get(b, ()) for b in bits), key=len)
        return [F for F in smallest if F & A == A]

    def is_face(self, B: int) -> bool:
        b = B & -B
        return any(F & B == B for F in self.stars.get(b, ()))

    def move_for(self, A: int) -> int | None:
        """Co-face B if the link of A is the boundary of a simplex B not in the complex."""
        i = A.bit_count() - 1
        need = self.d + 1 - i
        star = self.containing(A)
        if len(star) != need:
            return None
        B = 0
        for F in star:
            B |= F
        B &= ~A
        if B.bit_count() != need:
            return None
        if self.is_face(B):
            return None
        return B

    def candidates(self, i: int) -> list[tuple[int, int]]:
        out = []
        if i == self.d:
            return out
        seen = set()
        for F in self.facets:
            for A in subfaces(F, i + 1):
                if A in seen:
                    continue
                seen.add(A)
                B = self.move_for(A)
                if B is not None:
                    out.append((A, B))
        out.sort(key=lambda ab: (vertices_of(ab[0]), vertices_of(ab[1])))
        return out

    def all_candidates(self) -> dict[int, list[tuple[int, int]]]:
        """Valid moves of every index below dim, keyed by index, in a fixed order."""
        d = self.d
        count: dict[int, int] = {}
        union: dict[int, int] = {}
        for F in self.facets:
            for k in range(1, d + 1):
                for A in subfaces(F, k):
                    count[A] = count.get(A, 0) + 1
                    union[A] = union.get(A, 0) | F
        out: dict[int, list[tuple[int, int]]] = {}
        for A, cnt in count.items():
            need = d + 2 - A.bit_count()
            if cnt != need:
                continue
            B = union[A] & ~A
            if B.bit_count() != need:
                continue
            if B in count or B in self.facets:
                continue
            out.setdefault(A.bit_count() - 1, []).append((A, B))
        for moves in out.values():
            moves.sort(key=lambda ab: (vertices_of(ab[0]), vertices_of(ab[1])))
        return out

    def apply(self, A: int, B: int) -> None:
        old = [A | (B & ~b) for b in iter_bits(B)]
        new = [B | (A & ~a) for a in iter_bits(A)]
        for F in old:
            self.facets.discard(F)
            for b in iter_bits(F):
                s = self.stars[b]
                s.discard(F)
                if not s:
                    del self.stars[b]
        for F in new:
            self.facets.add(F)
            for b in iter_bits(F):
                self.stars.setdefault(b, set()).add(F)

    def freeze(self, n: int) -> SimplicialComplex:
        top = max(F.bit_length() for F in self.facets)
        return SimplicialComplex(max(n, top), frozenset(self.facets))


def _move_masks(c: SimplicialComplex, move: BistellarMove) -> tuple[int, int]:
    A = face(move.face)
    B = face(move.co_face)
    if A & B:
        raise ValueError("face and co-face must be disjoint")
    if A.bit_count() + B.bit_count() != c.dim + 2:
        raise ValueError("face and co-face sizes must add up to dim + 2")
    return A, B


def bistellar_flip(c: SimplicialComplex, move: BistellarMove) -> SimplicialComplex:
    A, B = _move_masks(c, move)
    state = _FlipState(c)
    if B.bit_count() == 1 and not (B & c.vertex_mask):
        # subdivision of a facet by a fresh vertex
        if A not in state.facets:
            raise ValueError(f"{move.face} is not a facet")
    else:
        if A not in c.face_set():
            raise ValueError(f"{move.face} is not a face")
        if state.move_for(A) != B:
            raise ValueError(f"link of {move.face} is not the boundary of {move.co_face} (or it is a face)")
    state.apply(A, B)
    return state.freeze(c.n)


def valid_moves(c: SimplicialComplex, i: int | None = None) -> list[BistellarMove]:
    """All moves of index ``i`` (every index below dim when omitted); subdivisions excluded."""
    state = _FlipState(c)
    indices = range(c.dim) if i is None else [i]
    return [BistellarMove(vertices_of(A), vertices_of(B)) for j in indices for A, B in state.candidates(j)]


def subdivision_move(c: SimplicialComplex, facet: Sequence[int], apex: int | None = None) -> BistellarMove:
    if apex is None:
        apex = c.n + 1
    return BistellarMove(tuple(sorted(facet)), (apex,))


DEFAULT_BUDGET = 50_000


def sphere_heuristic(
    c: SimplicialComplex,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    temperature: float | None = None,
    cooling: float | None = None,
) -> RecognitionCertificate:
    """Try to flip ``c`` down to the boundary of a simplex.

    Vertex removals are taken whenever one exists. Otherwise a move index i is
    drawn with weight exp(-(2i - dim) / T), 2i - dim being the change in the
    number of facets, and a move of that index is picked at random. T cools
    geometrically and is occasionally reset to its start value. Failure within
    ``budget`` moves is inconclusive.
    """
    if not is_closed_pseudomanifold(c):
        return RecognitionCertificate(Verdict.NOT_PSEUDOMANIFOLD, seed=seed)
    d = c.dim
    sphere_chi = 1 + (-1) ** d
    if c.euler_characteristic() != sphere_chi:
        return RecognitionCertificate(
            Verdict.MANIFOLD, seed=seed, obstruction=f"Euler characteristic {c.euler_characteristic()} != {sphere_chi}"
        )
    # high dimensions have long plateaus of index-(d/2) moves and need a hotter, slower schedule
    if temperature is None:
        temperature = 5.0 if d >= 6 else max(2.0, 0.6 * d)
    if cooling is None:
        cooling = 0.998 if d >= 6 else 0.995
    t_start = temperature
    t_min = 0.05
    rng = random.Random(seed)
    state = _FlipState(c)
    log: list[BistellarMove] = []
    T = t_start
    while len(log) < budget:
        if state.vertex_count() == d + 2 and len(state.facets) == d + 2:
            return RecognitionCertificate(Verdict.SPHERE, log, seed=seed, note=f"{len(log)} moves")
        moves = state.all_candidates()
        if 0 in moves:
            A, B = rng.choice(moves[0])
        else:
            indices = sorted(moves)
            if not indices:
                break
            weights = [math.exp(-(2 * i - d) / T) for i in indices]
            i = rng.choices(indices, weights=weights)[0]
            A, B = rng.choice(moves[i])
            T = max(t_min, T * cooling)
            if T == t_min and rng.random() < 0.01:
                T = t_start
        state.apply(A, B)
        log.append(BistellarMove(vertices_of(A), vertices_of(B)))
    return RecognitionCertificate(Verdict.MANIFOLD, seed=seed, note=f"budget of {budget} moves exhausted")


def replay(c: SimplicialComplex, moves: Iterable[BistellarMove]) -> SimplicialComplex:
    for m in moves:
        c = bistellar_flip(c, m)
    return c


def is_sphere(c: SimplicialComplex, budget: int = DEFAULT_BUDGET, seed: int = 0) -> RecognitionCertificate:
    """Exact below dimension 3, bistellar flips above."""
    if c.dim <= 2:
        ok = is_sphere_exact_low_dim(c)
        if ok:
            return RecognitionCertificate(Verdict.SPHERE, seed=seed, note="exact")
        if not is_closed_pseudomanifold(c):
            return RecognitionCertificate(Verdict.NOT_PSEUDOMANIFOLD, seed=seed)
        if c.dim == 2 and not _links_are_cycles(c):
            return RecognitionCertificate(Verdict.NOT_MANIFOLD, seed=seed, note="exact")
        return RecognitionCertificate(
            Verdict.MANIFOLD, seed=seed, note="exact", obstruction=f"Euler characteristic {c.euler_characteristic()}"
        )
    return sphere_heuristic(c, budget, seed)


def _links_are_cycles(c: SimplicialComplex) -> bool:
    return all(_is_cycle(c.link(b)) for b in iter_bits(c.vertex_mask))


def vertex_orbits(n: int, generators: Sequence[Permutation]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for v in range(1, n + 1):
        if v in seen:
            continue
        orbit = [v]
        seen.add(v)
        i = 0
        while i < len(orbit):
            for g in generators:
                w = g(orbit[i])
                if w not in seen:
                    seen.add(w)
                    orbit.append(w)
            i += 1
        out.append(orbit)
    return out


def is_combinatorial_manifold(
    c: SimplicialComplex,
    symmetry: Sequence[Permutation] | None = None,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
) -> RecognitionCertificate:
    """Check that every vertex link is a sphere.

    With ``symmetry`` (permutations leaving ``c`` invariant) only one vertex per
    orbit of the generated group is examined.
    """
    if not c.facets or not c.is_pure():
        return RecognitionCertificate(Verdict.NOT_PSEUDOMANIFOLD, seed=seed)
    if c.dim >= 1 and any(v != 2 for v in ridge_degrees(c).values()):
        return RecognitionCertificate(Verdict.NOT_PSEUDOMANIFOLD, seed=seed)
    used = c.vertices
    if symmetry:
        for g in symmetry:
            if not is_invariant(c, g):
                raise ValueError(f"complex is not invariant under {g}")
        to_check = [o[0] for o in vertex_orbits(c.n, symmetry) if o[0] in used]
    else:
        to_check = list(used)
    cert = RecognitionCertificate(Verdict.MANIFOLD, seed=seed)
    for v in to_check:
        lk = c.link(1 << (v - 1))
        res = is_sphere(lk, budget=budget, seed=seed)
        cert.links_checked[v] = res.verdict.value
        if res.verdict == Verdict.SPHERE:
            continue
        if res.verdict == Verdict.MANIFOLD and lk.dim >= 3 and not res.obstruction:
            cert.verdict = Verdict.INCONCLUSIVE
            cert.note = f"link of {v} not certified"
            continue
        cert.verdict = Verdict.NOT_MANIFOLD
        cert.note = f"link of {v} is not a sphere"
        return cert
    return cert
