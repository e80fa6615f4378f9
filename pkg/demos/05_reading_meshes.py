"""
Reading meshes
==============

OFF meshes with polygon faces are split into triangle fans; SCX files store
the maximal simplices of a complex one per line.
"""

from pathlib import Path

from eulerpoincare import classify, counts, euler_characteristic
from eulerpoincare.io import fan_triangulate, parse_scx, read_off, serialize_scx

data = Path(__file__).resolve().parent.parent / "tests" / "data"

# a soccer ball: 12 pentagons and 20 hexagons
mesh = read_off(data / "truncated_icosahedron.off")
print("faces by size:", {k: sum(len(f) == k for f in mesh.faces) for k in (5, 6)})
print("V - E + F =", mesh.euler_characteristic())

sphere = fan_triangulate(mesh)
print("after fanning:", counts(sphere), "chi", euler_characteristic(sphere))
print(classify(sphere).label)

# SCX keeps only maximal simplices and recomputes the faces on load
cube = fan_triangulate(read_off(data / "cube.off"))
text = serialize_scx(cube)
print(text.splitlines()[:4])
print("round trip:", parse_scx(text) == cube)
