"""Permutations, cyclic and dihedral actions, orbits, central symmetry and isomorphism."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .complex import SimplicialComplex, face, iter_bits, vertices_of


@dataclass(frozen=True)
class Permutation:
    """A bijection of 1..n stored as ``images[v - 1]``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("images do not form a permutation of 1..n")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``(p * q)(v) = p(q(v))``."""
        return Permutation(tuple(self.images[q - 1] for q in other.images))

    def __pow__(self, k: int) -> "Permutation":
        out = Permutation.identity(self.n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = base * out
        return out

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return Permutation(tuple(inv))

    @cached_property
    def _bit_table(self) -> dict[int, int]:
        return {1 << i: 1 << (img - 1) for i, img in enumerate(self.images)}

    def apply_mask(self, mask: int) -> int:
        table = self._bit_table
        out = 0
        for b in iter_bits(mask):
            out |= table[b]
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for v in range(1, self.n + 1):
            if v in seen:
                continue
            cyc = [v]
            seen.add(v)
            w = self(v)
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = self(w)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def rotation(n: int, shift: int = 1) -> Permutation:
    """``v -> v + shift`` with labels reduced into 1..n."""
    return Permutation(tuple((v - 1 + shift) % n + 1 for v in range(1, n + 1)))


def reflection(n: int) -> Permutation:
    """``b = (1 n)(2 n-1)...``, i.e. ``v -> n + 1 - v``."""
    return Permutation(tuple(n + 1 - v for v in range(1, n + 1)))


def central_involution(n: int) -> Permutation:
    """The standard antipodal map ``(1 k+1)(2 k+2)...(k 2k)`` for ``n = 2k``."""
    if n % 2 or n < 2:
        raise ValueError(f"central involution needs an even vertex count, got {n}")
    return rotation(n, n // 2)


def antipode(v: int, n: int) -> int:
    k = n // 2
    return v + k if v <= k else v - k


@dataclass(frozen=True)
class GroupSpec:
    kind: str  # "cyclic" or "dihedral"
    n: int

    def __post_init__(self):
        if self.kind not in ("cyclic", "dihedral"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def order(self) -> int:
        return self.n if self.kind == "cyclic" else 2 * self.n

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        rots = [rotation(self.n, s) for s in range(self.n)]
        if self.kind == "cyclic":
            return tuple(rots)
        b = reflection(self.n)
        return tuple(rots) + tuple(b * r for r in rots)

    def generators(self) -> list[Permutation]:
        gens = [rotation(self.n)]
        if self.kind == "dihedral":
            gens.append(reflection(self.n))
        return gens


@dataclass(frozen=True, order=True)
class OrbitGenerator:
    """A facet representative together with the orbit size it is declared to have."""

    representative: tuple[int, ...]
    declared_size: int | None = None

    @property
    def mask(self) -> int:
        return face(self.representative)

    def __str__(self) -> str:
        s = " ".join(map(str, self.representative))
        return s if self.declared_size is None else f"{s} | size={self.declared_size}"


class OrbitSizeError(ValueError):
    pass


def orbit_masks(mask: int, group: GroupSpec) -> frozenset[int]:
    return frozenset(g.apply_mask(mask) for g in group.elements)


def expand_orbit(gen: OrbitGenerator | Sequence[int], group: GroupSpec) -> frozenset[int]:
    """Facet bitmasks of the orbit; labels above n wrap into 1..n."""
    if not isinstance(gen, OrbitGenerator):
        gen = OrbitGenerator(tuple(gen))
    reduced = [(v - 1) % group.n + 1 for v in gen.representative]
    if len(set(reduced)) != len(reduced):
        raise ValueError(f"representative {gen.representative} collapses modulo {group.n}")
    orbit = orbit_masks(face(reduced), group)
    if gen.declared_size is not None and gen.declared_size != len(orbit):
        raise OrbitSizeError(
            f"orbit of {gen.representative} has {len(orbit)} members, declared {gen.declared_size}"
        )
    return orbit


def complex_from_orbits(gens: Iterable[OrbitGenerator | Sequence[int]], group: GroupSpec) -> SimplicialComplex:
    facets: set[int] = set()
    for g in gens:
        facets |= expand_orbit(g, group)
    return SimplicialComplex.from_facets(facets, n=group.n)


def canonical_representative(mask: int, group: GroupSpec) -> int:
    """Orbit member with lexicographically least sorted label tuple."""
    return min(orbit_masks(mask, group), key=vertices_of)


def is_invariant(c: SimplicialComplex, sigma: Permutation) -> bool:
    if sigma.n < c.n:
        raise ValueError("permutation acts on fewer labels than the complex uses")
    return frozenset(sigma.apply_mask(F) for F in c.facets) == c.facets


def is_centrally_symmetric(c: SimplicialComplex, involution: Permutation | None = None) -> bool:
    """Invariant under the involution and no nonempty face is mapped onto itself."""
    if involution is None:
        involution = central_involution(c.n)
    if not is_invariant(c, involution):
        return False
    if involution == central_involution(involution.n):
        # a fixed face must contain an antipodal pair; such a pair lies in some facet
        k = involution.n // 2
        pairs = [(1 << i) | (1 << (i + k)) for i in range(k)]
        return not any(F & p == p for F in c.facets for p in pairs)
    return not any(involution.apply_mask(f) == f for f in c.face_set())


def meets_antipode(mask: int, n: int) -> bool:
    """``F`` intersects ``F^I`` for the standard involution."""
    k = n // 2
    low = mask & ((1 << k) - 1)
    high = mask >> k
    return bool(low & high)


def prefilter_orbits(orbits: Iterable[OrbitGenerator], group: GroupSpec) -> list[OrbitGenerator]:
    """Keep orbits none of whose members meets its antipodal image."""
    if group.n % 2:
        raise ValueError("central symmetry needs an even vertex count")
    kept = []
    for o in orbits:
        if not any(meets_antipode(F, group.n) for F in expand_orbit(o, group)):
            kept.append(o)
    return kept


# isomorphism ---------------------------------------------------------------

def _vertex_invariants(c: SimplicialComplex) -> dict[int, tuple]:
    out = {}
    for v in range(1, c.n + 1):
        b = 1 << (v - 1)
        if not c.vertex_mask & b:
            out[v] = ()
            continue
        lk = c.link(b)
        out[v] = (tuple(lk.f_vector()),) if not lk.is_empty() else ((),)
    return out


def complex_invariant(c: SimplicialComplex) -> tuple:
    inv = _vertex_invariants(c)
    return (c.n, tuple(c.f_vector()), tuple(sorted(inv.values())))


def are_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> Permutation | None:
    """A vertex bijection carrying the facets of ``a`` onto those of ``b``, if one exists."""
    if a.n != b.n or len(a.facets) != len(b.facets) or a.f_vector() != b.f_vector():
        return None
    n = a.n
    inv_a, inv_b = _vertex_invariants(a), _vertex_invariants(b)
    if sorted(inv_a.values()) != sorted(inv_b.values()):
        return None

    faces_a, faces_b = a.face_set(), b.face_set()
    # order vertices of a so each one meets as many earlier ones as possible
    adj_a = {v: 0 for v in range(1, n + 1)}
    for e in a.faces(1) if a.dim >= 1 else ():
        for x in vertices_of(e):
            adj_a[x] |= e & ~(1 << (x - 1))
    order: list[int] = []
    placed = 0
    remaining = set(range(1, n + 1))
    while remaining:
        v = max(remaining, key=lambda x: ((adj_a[x] & placed).bit_count(), -x))
        order.append(v)
        placed |= 1 << (v - 1)
        remaining.discard(v)

    # faces of a whose last vertex in the order is v, grouped by v
    pos = {v: i for i, v in enumerate(order)}
    closing: dict[int, list[int]] = {v: [] for v in order}
    for f in faces_a:
        last = max(vertices_of(f), key=pos.__getitem__)
        closing[last].append(f)
    count_b_at = {}  # number of faces of b containing w within a given image set, computed lazily

    candidates = {v: [w for w in range(1, n + 1) if inv_b[w] == inv_a[v]] for v in order}
    mapping: dict[int, int] = {}
    used = 0

    def image(f: int) -> int:
        m = 0
        for bit in iter_bits(f):
            m |= 1 << (mapping[bit.bit_length()] - 1)
        return m

    def faces_within(w: int, target: int) -> int:
        wb = 1 << (w - 1)
        key = (w, target)
        if key not in count_b_at:
            count_b_at[key] = sum(1 for g in faces_b if g & wb and g & ~target == 0)
        return count_b_at[key]

    def extend(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            wb = 1 << (w - 1)
            if used & wb:
                continue
            mapping[v] = w
            if all(image(f) in faces_b for f in closing[v]) and faces_within(w, used | wb) == len(closing[v]):
                used |= wb
                if extend(i + 1):
                    return True
                used &= ~wb
            del mapping[v]
        return False

    if not extend(0):
        return None
    return Permutation(tuple(mapping[v] for v in range(1, n + 1)))
