"""
Homology and face-number bounds
===============================

Integral homology comes from sparse Smith normal form. Face-number
inequalities use exact integers and fractions throughout.
"""

from cssphere import SimplicialComplex
from cssphere.constructions import cs_sphere_4m, stacked_cs_sphere, torus_t2
from cssphere.homology import homology, smith_normal_form
from cssphere.invariants import (
    central_neighborliness_degree,
    ds_complete,
    h_vector,
    kuehnel_sparla_check,
    kuehnel_sparla_for,
    nearly_neighborly_profile,
    stanley_lower_bound_vector,
    vertex_transitive_2sphere_classification,
)

print("SNF of [[2,4],[6,8]]:", smith_normal_form([[2, 4], [6, 8]]))

for name, c in [("torus", torus_t2(2)), ("3-sphere on 12", cs_sphere_4m(3))]:
    print(f"{name}: betti {homology(c).betti}")

rp2 = SimplicialComplex.from_facets(
    [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
     (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6)]
)
h = homology(rp2)
print("projective plane: betti", h.betti, "torsion", h.torsion)

# %%
# f- and h-vectors
# ----------------
f = cs_sphere_4m(5).f_vector()
print("20-vertex sphere f =", tuple(f), "h =", h_vector(f))
print("completed from (f0, f1):", tuple(ds_complete(f[:2], 4)))
print("largest possible for 2k = 20:", tuple(nearly_neighborly_profile(4, 10)))

# Stacked spheres meet the lower bound exactly.
for k in range(4, 8):
    s = stacked_cs_sphere(4, k)
    print(f"k={k}: stacked {tuple(s.f_vector())}  bound {tuple(stanley_lower_bound_vector(4, k))}")

# %%
# Euler characteristic inequality for centrally 2-neighborly manifolds
# ---------------------------------------------------------------------
print(kuehnel_sparla_check(1, 4, 0))
print(kuehnel_sparla_check(2, 6, 4))
t = torus_t2(2)
print("8-vertex torus:", kuehnel_sparla_for(t).status.value, "neighborliness", central_neighborliness_degree(t))
print("12-vertex torus:", kuehnel_sparla_for(torus_t2(3)).status.value)

print("vertex-transitive 2-spheres (n, degree):", vertex_transitive_2sphere_classification())
