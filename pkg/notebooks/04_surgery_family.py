"""
Growing nearly neighborly spheres by surgery
============================================

Each step cuts out an antipodal pair of stacked balls and cones the two
holes from a fresh antipodal vertex pair, adding two vertices while keeping
every antipodal-free edge.
"""

from cssphere.constructions import crosspolytope_boundary, cs_sphere_4m, jockusch_family, jockusch_next, mcmullen_shephard_sphere
from cssphere.invariants import is_nearly_neighborly
from cssphere.recognition import is_sphere, is_stacked_sphere
from cssphere.symmetry import are_isomorphic

first = jockusch_next(crosspolytope_boundary(4), seed=0)
polytope = mcmullen_shephard_sphere(4)
print("surgery result:", first.complex.f_vector(), "new pair", (first.new_vertex, first.new_antipode))
print("polytopal example:", polytope.f_vector())
print("isomorphic?", are_isomorphic(first.complex, polytope) is not None)

# %%
# Iterate up to 20 vertices. New-vertex links are stacked by construction.
for step in jockusch_family(9, seed=0):
    c = step.complex
    link = c.link(1 << (step.new_vertex - 1))
    print(
        f"n={c.n:2d}  f={tuple(c.f_vector())}  nn={is_nearly_neighborly(c)}"
        f"  sphere={is_sphere(c).is_sphere}  stacked link={is_stacked_sphere(link)}"
    )

# The cyclic series is different: its vertex links are not stacked.
for m in (3, 4, 5):
    print(f"cyclic series n={4 * m}: stacked vertex link = {is_stacked_sphere(cs_sphere_4m(m).link(1))}")
