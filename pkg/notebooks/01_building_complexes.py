"""
Building centrally symmetric complexes
======================================

Faces are stored as integer bitmasks; a complex is a frozen set of facets.
This walk-through builds the small spheres everything else starts from.
"""

from cssphere import SimplicialComplex, face
from cssphere.constructions import crosspolytope_boundary, cs_sphere_4m, cs_sphere_4m_orbits, torus_t2
from cssphere.symmetry import GroupSpec, complex_from_orbits, is_centrally_symmetric

# The boundary of a tetrahedron, typed in by hand.
tet = SimplicialComplex.from_facets([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
print("tetrahedron boundary:", tet.f_vector(), "chi =", tet.euler_characteristic())

# Links are complexes too. The link of a vertex of the octahedron is a 4-cycle.
octa = crosspolytope_boundary(3)
print("link of 1 in the octahedron:", octa.link(face([1])).sorted_facets())

# Vertex i is paired with i + k. On 8 labels the pairs are (1,5), (2,6), (3,7), (4,8),
# and the 4-crosspolytope boundary is every 4-set avoiding a pair.
c4 = crosspolytope_boundary(4)
print("4-crosspolytope:", c4.f_vector(), "centrally symmetric:", is_centrally_symmetric(c4))

# %%
# Orbit presentations
# -------------------
# Under rotation of 1..n a few representatives describe the whole complex.

for m in (2, 3, 4):
    gens = cs_sphere_4m_orbits(m)
    print(f"n={4 * m}:", "  ".join(str(g) for g in gens))

group = GroupSpec("cyclic", 12)
rebuilt = complex_from_orbits(cs_sphere_4m_orbits(3), group)
assert rebuilt == cs_sphere_4m(3)
print("12-vertex sphere from 4 orbits:", rebuilt.f_vector())

# %%
# A torus from the same ingredients: two orbits on 8 vertices.
t8 = torus_t2(2)
print("torus:", t8.f_vector(), "chi =", t8.euler_characteristic())
