"""
Enumerating symmetric nearly neighborly spheres
===============================================

The search picks facet orbits under rotation of 1..n, closing open ridges
one at a time. Every closed selection is checked and isomorphic results are
merged.
"""

import json

from cssphere.enumeration import KNOWN_CYCLIC_COUNTS, SearchConfig, classify, enumerate_nn_cs_spheres

for d, n in [(2, 6), (2, 8), (3, 8), (3, 10), (3, 12), (3, 14), (4, 10), (4, 12), (5, 12)]:
    res = enumerate_nn_cs_spheres(SearchConfig(d=d, n=n, group="cyclic"))
    print(f"d={d} n={n:2d}: found {res.count} (known {KNOWN_CYCLIC_COUNTS[(d, n)]})"
          f"  nodes={res.nodes}  {res.seconds:.2f}s")

# %%
# A catalog entry is an orbit presentation that parses back into a complex.
res = enumerate_nn_cs_spheres(SearchConfig(d=3, n=12))
for entry in classify(res):
    print(entry.presentation_text())

# The JSON summary is stable for a fixed seed.
print(json.dumps(res.to_dict(), indent=1)[:400], "...")
