"""
Recognizing spheres with bistellar flips
========================================

In dimension two and below sphere recognition is exact. Above that a
seeded annealing search over bistellar flips tries to reach the boundary of a
simplex. The move log is a certificate anyone can replay.
"""

from cssphere.complex import suspension
from cssphere.constructions import crosspolytope_boundary, cs_sphere_4m, simplex_boundary, torus_t2
from cssphere.recognition import (
    is_combinatorial_manifold,
    is_sphere,
    replay,
    sphere_heuristic,
)
from cssphere.symmetry import rotation

c = cs_sphere_4m(4)
cert = sphere_heuristic(c, seed=1)
print("16-vertex sphere:", cert.verdict.value, "after", len(cert.move_log), "moves")

# Replaying the log lands on the boundary of the 4-simplex (up to labels).
end, _ = replay(c, cert.move_log).normalize()
print("replay ends at the 4-simplex boundary:", end == simplex_boundary(4))

# The first few moves, written as (face, co-face) pairs.
for mv in cert.move_log[:5]:
    print("  ", mv.face, "->", mv.co_face)

# %%
# Manifold checks
# ---------------
# With a transitive symmetry a single vertex link settles the question.

res = is_combinatorial_manifold(c, symmetry=[rotation(16)])
print("manifold:", res.verdict.value, "links examined:", res.links_checked)

# The torus is a manifold, but an Euler characteristic obstruction rules out a sphere.
print("torus:", is_sphere(torus_t2(2)).verdict.value)

# Suspending the torus gives a pseudomanifold whose two apex links are tori.
s, _ = suspension(torus_t2(2))
print("suspended torus:", is_combinatorial_manifold(s).verdict.value)

# %%
# Higher dimensions need longer walks. The 5-sphere boundary of the 6-crosspolytope:
print("6-crosspolytope:", is_sphere(crosspolytope_boundary(6), seed=0).note)
