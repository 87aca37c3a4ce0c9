"""Neighborliness, f/h-vectors, face-number bounds and Euler characteristic inequalities.

All arithmetic is exact: integers, with :class:`fractions.Fraction` where
half-integer binomial coefficients appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .complex import FVector, SimplicialComplex
from .homology import HomologyProfile, homology, smith_normal_form  # noqa: F401  (re-exported)
from .symmetry import is_centrally_symmetric


def crosspolytope_face_count(k: int, i: int) -> int:
    """Number of i-faces of the boundary of the k-dimensional crosspolytope."""
    return 2 ** (i + 1) * comb(k, i + 1)


def central_neighborliness_degree(c: SimplicialComplex) -> int:
    """Largest l such that ``c`` contains the (l-1)-skeleton of the crosspolytope on its labels."""
    if c.n % 2 or not is_centrally_symmetric(c):
        raise ValueError("complex is not centrally symmetric")
    k = c.n // 2
    f = c.f_vector()
    l = 0
    while l < len(f) and f[l] == crosspolytope_face_count(k, l):
        l += 1
    return l


def is_nearly_neighborly(c: SimplicialComplex, d: int | None = None) -> bool:
    """Centrally floor(d/2)-neighborly, where ``d = dim + 1`` for a (d-1)-sphere."""
    if d is None:
        d = c.dim + 1
    return central_neighborliness_degree(c) >= d // 2


# f- and h-vectors -----------------------------------------------------------

def h_vector(f, d: int | None = None) -> tuple[int, ...]:
    """h-vector of a (d-1)-dimensional complex from ``f = (f_0, ..., f_{d-1})``."""
    f = tuple(f)
    if d is None:
        d = len(f)
    if len(f) != d:
        raise ValueError(f"expected {d} face numbers, got {len(f)}")
    ext = (1,) + f  # ext[i] = f_{i-1}
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * ext[i] for i in range(k + 1)) for k in range(d + 1)
    )


def f_from_h(h) -> FVector:
    h = tuple(h)
    d = len(h) - 1
    return FVector(sum(comb(d - k, j - k) * h[k] for k in range(j + 1)) for j in range(1, d + 1))


def ds_complete(prefix, d: int) -> FVector:
    """Complete ``(f_0, ..., f_{p-1})`` to the f-vector of a (d-1)-sphere via h_i = h_{d-i}.

    Needs at least ``floor(d/2)`` leading entries; extra entries must be consistent.
    """
    prefix = tuple(prefix)
    need = d // 2
    if len(prefix) < need or len(prefix) > d:
        raise ValueError(f"need between {need} and {d} leading face numbers for d={d}")
    ext = (1,) + prefix
    known = [
        sum((-1) ** (k - i) * comb(d - i, k - i) * ext[i] for i in range(k + 1)) for k in range(len(ext))
    ]
    h = [None] * (d + 1)
    for k, hk in enumerate(known):
        h[k] = hk
    for k in range(d + 1):
        mirror = h[d - k]
        if h[k] is None:
            h[k] = mirror
        elif mirror is not None and mirror != h[k]:
            raise ValueError(f"prefix {prefix} admits no symmetric completion (h_{k} != h_{d - k})")
    return f_from_h(h)


def nearly_neighborly_profile(d: int, k: int) -> FVector:
    """f-vector a nearly neighborly centrally symmetric (d-1)-sphere on 2k vertices would have."""
    prefix = [crosspolytope_face_count(k, i) for i in range(d // 2)]
    return ds_complete(prefix, d)


# bounds -------------------------------------------------------------------

def stanley_lower_bound_vector(d: int, k: int) -> FVector:
    """Lower bounds for face numbers of a centrally symmetric d-polytope with 2k vertices."""
    if d < 1 or k < d:
        raise ValueError(f"need k >= d >= 1, got d={d}, k={k}")
    out = [crosspolytope_face_count(d, i) + 2 * (k - d) * comb(d, i) for i in range(d - 1)]
    out.append(2**d + 2 * (k - d) * (d - 1))
    return FVector(out)


def check_stanley(c: SimplicialComplex) -> bool:
    d = c.dim + 1
    bound = stanley_lower_bound_vector(d, c.n // 2)
    return all(x >= y for x, y in zip(c.f_vector(), bound))


def cs_upper_bound_check(c: SimplicialComplex) -> bool:
    d = c.dim + 1
    bound = nearly_neighborly_profile(d, c.n // 2)
    return all(x <= y for x, y in zip(c.f_vector(), bound))


def vertex_transitive_2sphere_classification() -> list[tuple[int, int]]:
    """Solutions (n, q) of (6 - q) n = 12 in positive integers.

    q is the common vertex degree of a vertex-transitive triangulated 2-sphere
    on n vertices; a 2-sphere has at least 4 vertices so n <= 12 and q < 6.
    """
    return [(n, q) for q in range(1, 6) for n in range(1, 13) if (6 - q) * n == 12 and n >= 4]


# Euler characteristic inequalities -------------------------------------------

def generalized_binomial(x, r: int) -> Fraction:
    """x (x-1) ... (x-r+1) / r! for rational x."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    x = Fraction(x)
    num = Fraction(1)
    for i in range(r):
        num *= x - i
    den = 1
    for i in range(2, r + 1):
        den *= i
    return num / den


class BoundStatus(str, Enum):
    VIOLATED = "violated"
    STRICT = "strict"
    EQUALITY = "equality"


@dataclass(frozen=True)
class BoundReport:
    status: BoundStatus
    lhs: Fraction
    rhs: Fraction

    def to_dict(self) -> dict:
        return {"status": self.status.value, "lhs": str(self.lhs), "rhs": str(self.rhs)}


def kuehnel_sparla_check(r: int, k: int, chi: int) -> BoundReport:
    """Compare (-1)^r C(2r+1, r+1) (chi - 2) with 4^(r+1) C((k-1)/2, r+1).

    For r = 1 (surfaces) and r = 2 (4-manifolds) this is a theorem; for r >= 3
    it is conjectural and the result is a plain classification.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if k < 2 * r + 1:
        raise ValueError(f"need k >= 2r+1 = {2 * r + 1}")
    lhs = Fraction((-1) ** r * comb(2 * r + 1, r + 1) * (chi - 2))
    rhs = 4 ** (r + 1) * generalized_binomial(Fraction(k - 1, 2), r + 1)
    if lhs > rhs:
        status = BoundStatus.VIOLATED
    elif lhs == rhs:
        status = BoundStatus.EQUALITY
    else:
        status = BoundStatus.STRICT
    return BoundReport(status, lhs, rhs)


def kuehnel_sparla_for(c: SimplicialComplex) -> BoundReport:
    """The inequality for an even-dimensional complex, taking k = n/2 and r = dim/2."""
    if c.dim % 2 or c.dim < 2:
        raise ValueError("needs an even-dimensional complex of dimension >= 2")
    return kuehnel_sparla_check(c.dim // 2, c.n // 2, c.euler_characteristic())


def sphere_product_equality(r: int) -> tuple[Fraction, Fraction]:
    """Both sides of 2 C(2r+1, r+1) = 4^(r+1) C((2r+1)/2, r+1)."""
    return Fraction(2 * comb(2 * r + 1, r + 1)), 4 ** (r + 1) * generalized_binomial(Fraction(2 * r + 1, 2), r + 1)
