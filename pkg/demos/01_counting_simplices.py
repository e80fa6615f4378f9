"""
Counting simplices
==================

Build a few surfaces, count their vertices, edges and triangles, and watch the
alternating sum survive random refinement.
"""

import random

from eulerpoincare import build, counts, euler_characteristic, from_maximal, star_subdivide, validate

# the boundary of a tetrahedron, given by its four triangles
tetra = from_maximal([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
print("tetrahedron", counts(tetra), "chi", euler_characteristic(tetra))

# the same surface from the model library, plus a cube split into triangles
for name in ["sphere-tetra", "sphere-cube", "torus", "klein", "projective-plane", "pinched-torus"]:
    c = build(name)
    n = counts(c)
    print(f"{name:17s} {n[0]:3d} - {n[1]:3d} + {n[2]:3d} = {euler_characteristic(c)}")

# validate reports what is wrong with hand-built families
report = validate(tetra.union(from_maximal([(9,)])), require_pure=2)
print(report.findings())

# stellar subdivision adds a vertex, three edges and, net, two triangles
rng = random.Random(0)
torus = build("torus")
c = torus
for _ in range(15):
    c = star_subdivide(c, rng.choice(c.triangles))
print("torus after 15 subdivisions", counts(c), "chi", euler_characteristic(c))

# nothing here is specific to dimension two: the boundary of a 4-simplex
from itertools import combinations
s3 = from_maximal(combinations(range(5), 4))
print("3-sphere", counts(s3), "chi", euler_characteristic(s3))
