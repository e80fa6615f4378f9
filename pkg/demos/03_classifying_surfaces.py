"""
Classifying surfaces
====================

A closed surface is determined by its Euler characteristic and whether it is
orientable.  Connected sums move along the classification table.
"""

from eulerpoincare import build, classify, connected_sum, vertex_link

for name in ["sphere-tetra", "torus", "klein", "projective-plane", "genus(3)", "crosscaps(4)"]:
    r = classify(build(name))
    print(f"{name:17s} {r.summary():36s} {r.label}")

# glue two tori: genus adds
tt = connected_sum(build("torus"), build("torus"))
print("torus # torus:", classify(tt).summary())

# two projective planes make a Klein bottle
pp = connected_sum(build("projective-plane"), build("projective-plane"))
print("P2 # P2:", classify(pp).label)

# one non-orientable summand is enough
print("torus # P2:", classify(connected_sum(build("torus"), build("projective-plane"))).summary())

# the pinched torus fails the closed-surface test at a single vertex,
# whose link falls apart into two triangles
pinched = build("pinched-torus")
r = classify(pinched)
print(r.label, "chi", r.chi, "pinch at", r.pinch_vertices)
link = vertex_link(pinched, r.pinch_vertices[0])
print("link components:", link.components())
