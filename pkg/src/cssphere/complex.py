"""Immutable pure simplicial complexes over the vertex labels 1..n.

Faces are stored as integer bitsets: vertex ``v`` occupies bit ``v - 1``.
Use :func:`face` / :func:`vertices_of` to move between label tuples and masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


def face(vertices: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based vertex labels."""
    mask = 0
    for v in vertices:
        if v < 1 or v > MAX_VERTICES:
            raise ValueError(f"vertex label {v} outside 1..{MAX_VERTICES}")
        bit = 1 << (v - 1)
        if mask & bit:
            raise ValueError(f"repeated vertex {v}")
        mask |= bit
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def size(mask: int) -> int:
    return mask.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the single-bit masks contained in ``mask``."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def subfaces(mask: int, k: int) -> Iterator[int]:
    """All ``k``-element subsets of ``mask``."""
    bits = list(iter_bits(mask))
    for combo in combinations(bits, k):
        s = 0
        for b in combo:
            s |= b
        yield s


def format_face(mask: int) -> str:
    return " ".join(str(v) for v in vertices_of(mask))


def _maximal(masks: Iterable[int]) -> frozenset[int]:
    ordered = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its inclusion-maximal faces.

    ``n`` is the size of the label range 1..n; the complex need not use every
    label (links and stars keep the labels of their parent).
    """

    n: int
    facets: frozenset[int]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    # construction -------------------------------------------------------

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[int] | int], n: int | None = None) -> "SimplicialComplex":
        masks = []
        for f in facets:
            m = f if isinstance(f, int) else face(f)
            if m == 0:
                raise ValueError("empty face")
            masks.append(m)
        if not masks:
            raise ValueError("no facets given")
        top = max(m.bit_length() for m in masks)
        if n is None:
            n = top
        elif n < top:
            raise ValueError(f"label {top} exceeds n={n}")
        return cls(n, _maximal(masks))

    @classmethod
    def empty(cls, n: int = 0) -> "SimplicialComplex":
        return cls(n, frozenset())

    # basic queries ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.facets)

    def __contains__(self, f) -> bool:
        m = f if isinstance(f, int) else face(f)
        return any(m & F == m for F in self.facets)

    def is_empty(self) -> bool:
        return not self.facets

    @property
    def vertex_mask(self) -> int:
        m = 0
        for F in self.facets:
            m |= F
        return m

    @property
    def vertices(self) -> tuple[int, ...]:
        return vertices_of(self.vertex_mask)

    @property
    def dim(self) -> int:
        if not self.facets:
            return -1
        return max(F.bit_count() for F in self.facets) - 1

    def is_pure(self) -> bool:
        return len({F.bit_count() for F in self.facets}) <= 1

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted(vertices_of(F) for F in self.facets)

    def faces(self, i: int) -> frozenset[int]:
        """All ``i``-dimensional faces as bitmasks."""
        if i < -1 or i > self.dim:
            raise ValueError(f"dimension {i} outside 0..{self.dim}")
        key = ("faces", i)
        if key not in self._cache:
            k = i + 1
            out = set()
            for F in self.facets:
                if F.bit_count() >= k:
                    out.update(subfaces(F, k))
            self._cache[key] = frozenset(out)
        return self._cache[key]

    def all_faces(self, i: int) -> set[tuple[int, ...]]:
        return {vertices_of(m) for m in self.faces(i)}

    def face_set(self) -> frozenset[int]:
        """Every nonempty face of every dimension."""
        if "face_set" not in self._cache:
            out: set[int] = set()
            for i in range(self.dim + 1):
                out |= self.faces(i)
            self._cache["face_set"] = frozenset(out)
        return self._cache["face_set"]

    def f_vector(self) -> "FVector":
        return FVector(tuple(len(self.faces(i)) for i in range(self.dim + 1)))

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.f_vector()))

    # local structure ----------------------------------------------------

    def _as_mask(self, f) -> int:
        m = f if isinstance(f, int) else face(f)
        if m not in self.face_set():
            raise ValueError(f"{vertices_of(m)} is not a face")
        return m

    def link(self, f) -> "SimplicialComplex":
        m = self._as_mask(f)
        parts = [F & ~m for F in self.facets if F & m == m]
        return SimplicialComplex(self.n, _maximal(p for p in parts if p))

    def star(self, f) -> "SimplicialComplex":
        m = self._as_mask(f)
        return SimplicialComplex(self.n, frozenset(F for F in self.facets if F & m == m))

    def deletion(self, f) -> "SimplicialComplex":
        """Faces not containing ``f``."""
        m = f if isinstance(f, int) else face(f)
        out = set()
        for F in self.facets:
            if F & m == m:
                for b in iter_bits(m):
                    if F & ~b:
                        out.add(F & ~b)
            else:
                out.add(F)
        return SimplicialComplex(self.n, _maximal(out))

    def skeleton(self, l: int) -> "SimplicialComplex":
        if l < 0 or l > self.dim:
            raise ValueError(f"skeleton dimension {l} outside 0..{self.dim}")
        return SimplicialComplex(self.n, _maximal(self.faces(l) | {F for F in self.facets if F.bit_count() <= l + 1}))

    def degree(self, v: int) -> int:
        """Number of facets containing vertex ``v``."""
        b = 1 << (v - 1)
        return sum(1 for F in self.facets if F & b)

    def boundary(self) -> "SimplicialComplex":
        """Codimension-one faces lying in exactly one facet (pure complexes)."""
        counts: dict[int, int] = {}
        for F in self.facets:
            for b in iter_bits(F):
                r = F & ~b
                counts[r] = counts.get(r, 0) + 1
        return SimplicialComplex(self.n, frozenset(r for r, c in counts.items() if c == 1 and r))

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        faces = other.face_set()
        return all(F in faces for F in self.facets)

    # relabelling --------------------------------------------------------

    def relabel(self, images: Sequence[int] | dict[int, int], n: int | None = None) -> "SimplicialComplex":
        """Apply a vertex map. ``images`` is either 1-based list-like (``images[v-1]``) or a dict."""
        get = images.get if isinstance(images, dict) else (lambda v: images[v - 1])
        table = {1 << (v - 1): 1 << (get(v) - 1) for v in self.vertices}
        out = set()
        for F in self.facets:
            m = 0
            for b in iter_bits(F):
                m |= table[b]
            out.add(m)
        return SimplicialComplex(self.n if n is None else n, frozenset(out))

    def normalize(self) -> tuple["SimplicialComplex", dict[int, int]]:
        """Relabel used vertices to 1..k preserving order; returns the map."""
        mapping = {v: i + 1 for i, v in enumerate(self.vertices)}
        return self.relabel(mapping, n=len(mapping)), mapping

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, dim={self.dim}, facets={len(self.facets)})"


class FVector(tuple):
    """Face numbers ``(f_0, f_1, ..., f_d)`` indexed by face dimension."""

    def __new__(cls, entries: Iterable[int]):
        return super().__new__(cls, tuple(int(e) for e in entries))

    @property
    def dim(self) -> int:
        return len(self) - 1

    def __repr__(self) -> str:
        return f"FVector{tuple(self)}"


# named wrappers mirroring the functional surface ---------------------------

def from_facets(facets, n=None) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facets, n)


def all_faces(c: SimplicialComplex, i: int) -> set[tuple[int, ...]]:
    return c.all_faces(i)


def f_vector(c: SimplicialComplex) -> FVector:
    return c.f_vector()


def euler_characteristic(c: SimplicialComplex) -> int:
    return c.euler_characteristic()


def link(c: SimplicialComplex, f) -> SimplicialComplex:
    return c.link(f)


def star(c: SimplicialComplex, f) -> SimplicialComplex:
    return c.star(f)


def skeleton(c: SimplicialComplex, l: int) -> SimplicialComplex:
    return c.skeleton(l)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join with ``b``'s labels shifted above ``a``'s range."""
    shift = a.n
    bf = [F << shift for F in b.facets] or [0]
    af = list(a.facets) or [0]
    facets = [x | y for x in af for y in bf if x | y]
    return SimplicialComplex(a.n + b.n, frozenset(facets))


def suspension(c: SimplicialComplex) -> tuple[SimplicialComplex, list[int]]:
    """Join with two new points forming a fresh antipodal pair.

    For a complex on 2k labels with the standard pairing i <-> i+k, the output
    lives on 2k+2 labels with pairing i <-> i+k+1: old labels k+1..2k move up
    by one and the new pair is (k+1, 2k+2). Returns the complex together with
    the images of the old labels (1-based list). Odd ``n`` keeps old labels and
    appends n+1, n+2.
    """
    n = c.n
    if n % 2 == 0:
        k = n // 2
        images = [v if v <= k else v + 1 for v in range(1, n + 1)]
        north, south = k + 1, n + 2
    else:
        images = list(range(1, n + 1))
        north, south = n + 1, n + 2
    moved = c.relabel(images, n=n + 2)
    tips = (1 << (north - 1), 1 << (south - 1))
    facets = [F | t for F in moved.facets for t in tips]
    return SimplicialComplex(n + 2, frozenset(facets)), images


def cone(c: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    apex = c.n + 1 if apex is None else apex
    b = 1 << (apex - 1)
    return SimplicialComplex(max(c.n, apex), frozenset(F | b for F in c.facets))
