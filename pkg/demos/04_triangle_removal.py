"""
Removing triangles one at a time
================================

Open one triangle of a sphere, then keep removing triangles (with an edge, or
with two edges and a vertex) from the rim of the hole.  No move changes
vertices - edges + triangles, and the sphere ends on a lone triangle.
"""

from eulerpoincare import build, reduce

trace = reduce(build("sphere-tetra"))
for line in trace.log_lines():
    print(line)

# the cube takes longer but ends the same way
trace = reduce(build("sphere-cube"))
print(len(trace.steps), "steps;", trace.final_line())

# on the torus the hole runs into itself; the moves continue along a boundary
# walk that revisits vertices, and dangling edges are trimmed at the end.
# what is left is a graph with one more edge than vertices
trace = reduce(build("torus"))
print("first non-simple step:", trace.relaxed_from)
print(trace.final_line())
print("residual graph edges:", trace.residual.edges)

# higher genus and non-orientable surfaces run to completion as well
for name in ["genus(3)", "klein", "crosscaps(3)"]:
    t = reduce(build(name))
    print(f"{name:13s} {t.final_line()}")
