"""Search for nearly neighborly centrally symmetric spheres with a vertex-transitive
cyclic or dihedral symmetry.

Candidate facets are orbits of (d+1)-subsets of 1..n under the group, after
discarding every orbit whose facets meet their antipodal image. A selection of
orbits is grown ridge by ridge: whenever some ridge orbit lies in exactly one
selected facet, one of the orbits able to close it is added (fewest options
first). A selection with no open ridge is a closed pseudomanifold and is
checked for neighborliness, manifold links and sphericity.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .complex import SimplicialComplex, face, format_face, iter_bits, subfaces, vertices_of
from .homology import homology
from .recognition import (
    DEFAULT_BUDGET,
    RecognitionCertificate,
    Verdict,
    is_closed_pseudomanifold,
    is_sphere,
    sphere_heuristic,
)
from .symmetry import (
    GroupSpec,
    OrbitGenerator,
    are_isomorphic,
    complex_invariant,
    is_centrally_symmetric,
    is_invariant,
    meets_antipode,
    orbit_masks,
    reflection,
)


# Known counts of nearly neighborly centrally symmetric d-spheres on n
# vertices with the standard cyclic symmetry; unknown entries are omitted.
KNOWN_CYCLIC_COUNTS: dict[tuple[int, int], int] = {
    (2, 6): 1, (2, 8): 0, (2, 10): 0, (2, 12): 0, (2, 14): 0, (2, 16): 0, (2, 18): 0, (2, 20): 0, (2, 22): 0,
    (3, 8): 1, (3, 10): 1, (3, 12): 1, (3, 14): 1, (3, 16): 5, (3, 18): 10, (3, 20): 9, (3, 22): 12,
    (4, 10): 1, (4, 12): 0, (4, 14): 0,
    (5, 12): 1, (5, 14): 2, (5, 16): 3,
    (6, 14): 1, (6, 16): 0,
    (7, 16): 1, (7, 18): 12,
}


@dataclass(frozen=True)
class SearchConfig:
    d: int  # sphere dimension
    n: int
    group: str = "cyclic"
    require_nearly_neighborly: bool = True
    nn_pruning: bool = True
    flip_budget: int = DEFAULT_BUDGET
    seed: int = 0
    time_budget: float | None = None

    def __post_init__(self):
        if self.n % 2:
            raise ValueError("n must be even")
        if self.n < 2 * (self.d + 1):
            raise ValueError("a centrally symmetric d-sphere needs at least 2(d+1) vertices")
        GroupSpec(self.group, self.n)

    @property
    def group_spec(self) -> GroupSpec:
        return GroupSpec(self.group, self.n)

    @property
    def neighborliness(self) -> int:
        """Number of vertices in the crosspolytope faces that must be present."""
        return (self.d + 1) // 2 if self.require_nearly_neighborly else 1


@dataclass
class SphereClass:
    complex: SimplicialComplex
    presentations: list[tuple[OrbitGenerator, ...]]
    certificate: RecognitionCertificate
    dihedral: bool = False

    @property
    def orbits(self) -> tuple[OrbitGenerator, ...]:
        return self.presentations[0]


@dataclass
class SearchResult:
    config: SearchConfig
    classes: list[SphereClass] = field(default_factory=list)
    uncertified: list[tuple[tuple[OrbitGenerator, ...], str]] = field(default_factory=list)
    rejected_manifolds: int = 0
    accepted_selections: list[tuple[OrbitGenerator, ...]] = field(default_factory=list)
    nodes: int = 0
    exhausted: bool = True
    seconds: float = 0.0

    @property
    def count(self) -> int:
        return len(self.classes)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "d": self.config.d,
            "n": self.config.n,
            "group": self.config.group,
            "seed": self.config.seed,
            "count": self.count,
            "exhausted": self.exhausted,
            "uncertified": [[str(o) for o in sel] + [why] for sel, why in self.uncertified],
            "classes": [
                {
                    "orbits": [str(o) for o in cls.orbits],
                    "f_vector": list(cls.complex.f_vector()),
                    "dihedral": cls.dihedral,
                    "presentations": len(cls.presentations),
                    "certificate": {"verdict": cls.certificate.verdict.value, "moves": len(cls.certificate.move_log)},
                }
                for cls in self.classes
            ],
        }


def _orbits_of_subsets(n: int, k: int, group: GroupSpec) -> list[frozenset[int]]:
    seen: set[int] = set()
    out = []
    for combo in combinations(range(1, n + 1), k):
        m = face(combo)
        if m in seen:
            continue
        orb = orbit_masks(m, group)
        seen |= orb
        out.append(orb)
    return out


def _rep(orbit: frozenset[int]) -> int:
    return min(orbit, key=vertices_of)


def candidate_orbits(cfg: SearchConfig) -> list[OrbitGenerator]:
    """Facet orbits with no member meeting its antipodal image, sorted by representative."""
    group = cfg.group_spec
    out = []
    for orb in _orbits_of_subsets(cfg.n, cfg.d + 1, group):
        if any(meets_antipode(F, cfg.n) for F in orb):
            continue
        out.append(OrbitGenerator(vertices_of(_rep(orb)), len(orb)))
    out.sort(key=lambda o: o.representative)
    return out


class _Search:
    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        group = cfg.group_spec
        self.group = group
        self.orbits = candidate_orbits(cfg)
        self.orbit_facets = [orbit_masks(o.mask, group) for o in self.orbits]
        k = len(self.orbits)

        # ridge orbits and multiplicities
        ridge_id: dict[int, int] = {}
        ridge_size: list[int] = []
        for facets in self.orbit_facets:
            for F in facets:
                for b in iter_bits(F):
                    r = F & ~b
                    if r not in ridge_id:
                        orb = orbit_masks(r, group)
                        idx = len(ridge_size)
                        ridge_size.append(len(orb))
                        for x in orb:
                            ridge_id[x] = idx
        self.n_ridges = len(ridge_size)
        self.mult: list[dict[int, int]] = []
        for facets in self.orbit_facets:
            pairs: dict[int, int] = {}
            for F in facets:
                for b in iter_bits(F):
                    rid = ridge_id[F & ~b]
                    pairs[rid] = pairs.get(rid, 0) + 1
            self.mult.append({rid: c // ridge_size[rid] for rid, c in pairs.items()})
        # orbits meeting ridge r with multiplicity >= t, as bitmasks over orbit indices
        self.mult_ge = [[0, 0, 0, 0] for _ in range(self.n_ridges)]
        for o, mm in enumerate(self.mult):
            for rid, c in mm.items():
                for t in range(1, min(c, 3) + 1):
                    self.mult_ge[rid][t] |= 1 << o

        # required crosspolytope faces, grouped into orbits
        l = cfg.neighborliness
        self.required: list[int] = []
        req_id: dict[int, int] = {}
        for orb in _orbits_of_subsets(cfg.n, l, group):
            if any(meets_antipode(x, cfg.n) for x in orb):
                continue
            idx = len(self.required)
            self.required.append(0)
            for x in orb:
                req_id[x] = idx
        for o, facets in enumerate(self.orbit_facets):
            for F in facets:
                for s in subfaces(F, l):
                    self.required[req_id[s]] |= 1 << o
        self.all_orbits = (1 << k) - 1

        self.nodes = 0
        self.closed: list[int] = []
        self.deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
        self.timed_out = False

    # --------------------------------------------------------------------

    def run(self) -> list[int]:
        degree = [0] * self.n_ridges
        if not self.required or any(r == 0 for r in self.required):
            return []
        # root branching: the required orbit with fewest covering candidates
        q = min(range(len(self.required)), key=lambda i: self.required[i].bit_count())
        excluded = 0
        for o in self._bits(self.required[q]):
            self._include(o, 0, excluded, 0, degree)
            excluded |= 1 << o
            if self.timed_out:
                break
        return self.closed

    @staticmethod
    def _bits(mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def _include(self, o: int, chosen: int, excluded: int, dead: int, degree: list[int]) -> None:
        degree = degree[:]
        for rid, c in self.mult[o].items():
            degree[rid] += c
            if degree[rid] > 2:
                return
        chosen |= 1 << o
        for rid in self.mult[o]:
            x = degree[rid]
            dead |= self.mult_ge[rid][3 - x] if x >= 1 else 0
        self._node(chosen, excluded, dead & ~chosen, degree)

    def _node(self, chosen: int, excluded: int, dead: int, degree: list[int]) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            self.timed_out = True
        if self.timed_out:
            return
        available = self.all_orbits & ~(chosen | excluded | dead)
        if self.cfg.nn_pruning:
            for req in self.required:
                if not req & chosen and not req & available:
                    return
        best = None
        best_opts = 0
        for rid in range(self.n_ridges):
            if degree[rid] == 1:
                opts = self.mult_ge[rid][1] & available
                cnt = opts.bit_count()
                if best is None or cnt < best_opts.bit_count():
                    best, best_opts = rid, opts
                    if cnt <= 1:
                        break
        if best is None:
            self.closed.append(chosen)
            return
        for o in self._bits(best_opts):
            if self.mult[o][best] != 1:
                continue
            self._include(o, chosen, excluded, dead, degree)


def _selection_generators(search: _Search, chosen: int) -> tuple[OrbitGenerator, ...]:
    return tuple(search.orbits[o] for o in _Search._bits(chosen))


def _complex_of(search: _Search, chosen: int) -> SimplicialComplex:
    facets: set[int] = set()
    for o in _Search._bits(chosen):
        facets |= search.orbit_facets[o]
    return SimplicialComplex(search.cfg.n, frozenset(facets))


def _neighborly_enough(c: SimplicialComplex, l: int) -> bool:
    n = c.n
    k = n // 2
    return len(c.faces(l - 1)) == 2**l * comb(k, l)


def check_selection(c: SimplicialComplex, cfg: SearchConfig) -> tuple[str, RecognitionCertificate | None]:
    """Classify a candidate complex: 'sphere', 'uncertified', or a rejection reason."""
    if c.dim != cfg.d or not is_closed_pseudomanifold(c):
        return "not-pseudomanifold", None
    if not is_centrally_symmetric(c):
        return "not-centrally-symmetric", None
    if c.vertex_mask != (1 << cfg.n) - 1:
        return "missing-vertices", None
    if cfg.require_nearly_neighborly and not _neighborly_enough(c, cfg.neighborliness):
        return "not-nearly-neighborly", None
    # vertex-transitive: the link of vertex 1 stands for all links
    lk = c.link(1)
    link_cert = is_sphere(lk, budget=cfg.flip_budget, seed=cfg.seed)
    if link_cert.verdict != Verdict.SPHERE:
        if lk.dim >= 3 and link_cert.verdict == Verdict.MANIFOLD and not link_cert.obstruction:
            return "uncertified", link_cert
        return "not-manifold", link_cert
    if c.dim <= 2:
        cert = is_sphere(c)
        return ("sphere", cert) if cert.is_sphere else ("not-sphere", cert)
    if not homology(c).is_sphere_like():
        return "not-sphere", None
    cert = sphere_heuristic(c, budget=cfg.flip_budget, seed=cfg.seed)
    cert.links_checked[1] = link_cert.verdict.value
    if cert.is_sphere:
        return "sphere", cert
    return "uncertified", cert


def enumerate_nn_cs_spheres(cfg: SearchConfig) -> SearchResult:
    """All isomorphism classes found by the pruned orbit search."""
    start = time.monotonic()
    search = _Search(cfg)
    closed = search.run()
    result = SearchResult(cfg, nodes=search.nodes, exhausted=not search.timed_out)
    refl = reflection(cfg.n)
    buckets: dict[tuple, list[SphereClass]] = {}
    for chosen in sorted(closed, key=lambda m: _selection_generators(search, m)):
        gens = _selection_generators(search, chosen)
        c = _complex_of(search, chosen)
        status, cert = check_selection(c, cfg)
        if status == "uncertified":
            result.uncertified.append((gens, cert.note if cert else ""))
            continue
        if status != "sphere":
            if status == "not-sphere":
                result.rejected_manifolds += 1
            continue
        result.accepted_selections.append(gens)
        dihedral = is_invariant(c, refl)
        key = complex_invariant(c)
        for cls in buckets.get(key, []):
            if are_isomorphic(cls.complex, c) is not None:
                cls.presentations.append(gens)
                cls.dihedral = cls.dihedral or dihedral
                break
        else:
            cls = SphereClass(c, [gens], cert, dihedral)
            buckets.setdefault(key, []).append(cls)
            result.classes.append(cls)
    result.seconds = time.monotonic() - start
    return result


def reference_search(cfg: SearchConfig) -> list[tuple[OrbitGenerator, ...]]:
    """Every subset of candidate orbits, checked directly; for small cases only."""
    orbits = candidate_orbits(cfg)
    group = cfg.group_spec
    out = []
    for r in range(1, len(orbits) + 1):
        for sel in combinations(orbits, r):
            facets: set[int] = set()
            for o in sel:
                facets |= orbit_masks(o.mask, group)
            c = SimplicialComplex(cfg.n, frozenset(facets))
            status, _ = check_selection(c, cfg)
            if status == "sphere":
                out.append(tuple(sel))
    return sorted(out)


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    sphere: SphereClass

    def presentation_text(self) -> str:
        cfg_line = f"# {self.label}\nn={self.sphere.complex.n} d={self.sphere.complex.dim} group=cyclic\n"
        return cfg_line + "".join(f"orbit {o}\n" for o in self.sphere.orbits)


def classify(result: SearchResult) -> list[CatalogEntry]:
    """Label classes ``{d}_nn_{n}^{di|cy}_{z}``: dihedral-invariant classes first, then cyclic-only."""
    d, n = result.config.d, result.config.n
    out = []
    for tag in ("di", "cy"):
        z = 0
        for cls in result.classes:
            if cls.dihedral == (tag == "di"):
                z += 1
                out.append(CatalogEntry(f"{d}_nn_{n}^{tag}_{z}", cls))
    return out


def format_orbits(gens) -> str:
    return ", ".join(f"{format_face(face(g.representative))}_{g.declared_size}" for g in gens)
