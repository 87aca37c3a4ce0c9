"""Integral simplicial homology through Smith normal form of boundary matrices."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .complex import SimplicialComplex, iter_bits


def _normalize_diagonal(diag: list[int]) -> list[int]:
    """Turn an arbitrary nonzero diagonal into invariant factors d1 | d2 | ..."""
    diag = sorted(abs(x) for x in diag)
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if b % a:
                    g = gcd(a, b)
                    diag[i], diag[j] = g, a // g * b
                    changed = True
        diag.sort()
    return diag


def _sparse_invariant_factors(rows: dict[int, dict[int, int]]) -> list[int]:
    cols: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    diag: list[int] = []

    def axpy(dst: int, src: int, q: int) -> None:
        # rows[dst] -= q * rows[src]
        drow, srow = rows[dst], rows[src]
        for c, v in srow.items():
            new = drow.get(c, 0) - q * v
            if new:
                if c not in drow:
                    cols[c].add(dst)
                drow[c] = new
            elif c in drow:
                del drow[c]
                cols[c].discard(dst)

    def drop(r: int, c: int) -> None:
        for cc in rows[r]:
            cols[cc].discard(r)
        del rows[r]
        for rr in cols.pop(c, ()):
            rows[rr].pop(c, None)

    while True:
        for r in [r for r, row in rows.items() if not row]:
            del rows[r]
        if not rows:
            break
        pivot = None
        best = None
        for r, row in rows.items():
            for c, v in row.items():
                a = abs(v)
                if best is None or a < best:
                    best, pivot = a, (r, c)
                    if a == 1:
                        break
            if best == 1:
                break
        r, c = pivot
        p = rows[r][c]
        clean = True
        for i in list(cols[c]):
            if i == r:
                continue
            q = rows[i][c] // p
            if q:
                axpy(i, r, q)
            if c in rows[i]:
                clean = False
        if not clean:
            # column ops below are only local to row r once column c is cleared
            continue
        row = rows[r]
        for j in list(row):
            if j == c:
                continue
            rem = row[j] % p
            if rem:
                row[j] = rem
                clean = False
            else:
                del row[j]
                cols[j].discard(r)
        if clean:
            diag.append(p)
            drop(r, c)
    return _normalize_diagonal(diag)


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors ``d1 | d2 | ... | dr`` of an integer matrix."""
    rows = {}
    for i, row in enumerate(matrix):
        entries = {j: int(v) for j, v in enumerate(row) if v}
        if entries:
            rows[i] = entries
    return _sparse_invariant_factors(rows)


def boundary_rows(c: SimplicialComplex, i: int) -> tuple[dict[int, dict[int, int]], int, int]:
    """Boundary map from i-faces to (i-1)-faces as sparse rows indexed by i-faces."""
    top = sorted(c.faces(i))
    low_index = {f: j for j, f in enumerate(sorted(c.faces(i - 1)))}
    rows = {}
    for r, f in enumerate(top):
        row = {}
        for sign_pos, b in enumerate(iter_bits(f)):
            row[low_index[f & ~b]] = -1 if sign_pos % 2 else 1
        rows[r] = row
    return rows, len(top), len(low_index)


@dataclass(frozen=True)
class HomologyProfile:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def is_sphere_like(self) -> bool:
        d = len(self.betti) - 1
        expected = (1,) + (0,) * (d - 1) + (1,) if d > 0 else (2,)
        return self.betti == expected and not any(self.torsion)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))

    def to_dict(self) -> dict:
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}


def homology(c: SimplicialComplex) -> HomologyProfile:
    d = c.dim
    if d < 0:
        return HomologyProfile((), ())
    sizes = [len(c.faces(i)) for i in range(d + 1)]
    factors: list[list[int]] = [[] for _ in range(d + 2)]  # factors[i] belongs to the map out of C_i
    for i in range(1, d + 1):
        rows, _, _ = boundary_rows(c, i)
        factors[i] = _sparse_invariant_factors(rows)
    ranks = [len(f) for f in factors]
    betti = tuple(sizes[i] - ranks[i] - ranks[i + 1] for i in range(d + 1))
    torsion = tuple(tuple(x for x in factors[i + 1] if x > 1) for i in range(d + 1))
    return HomologyProfile(betti, torsion)
