"""Regenerate the OFF fixtures in this directory.

Run from anywhere:  python tests/data/generate_assets.py
"""

import itertools
from pathlib import Path

import numpy as np

HERE = Path(__file__).parent


def write_off(path, verts, faces, comment):
    lines = ["OFF", f"# {comment}", f"{len(verts)} {len(faces)} 0"]
    lines += [" ".join(f"{x:.6f}" for x in v) for v in verts]
    lines += [" ".join(map(str, [len(f), *f])) for f in faces]
    path.write_text("\n".join(lines) + "\n")


def cube():
    verts = [(x, y, z) for z in (0, 1) for y in (0, 1) for x in (0, 1)]
    faces = [(0, 1, 3, 2), (4, 6, 7, 5), (0, 4, 5, 1), (2, 3, 7, 6), (0, 2, 6, 4), (1, 5, 7, 3)]
    return verts, faces


def truncated_icosahedron():
    phi = (1 + 5 ** 0.5) / 2
    ico = []
    for a, b in itertools.product((-1, 1), repeat=2):
        ico += [(0, a, b * phi), (a, b * phi, 0), (b * phi, 0, a)]
    ico = np.array(ico, float)
    n = len(ico)
    adj = {i: [j for j in range(n) if j != i and abs(np.linalg.norm(ico[i] - ico[j]) - 2) < 1e-9] for i in range(n)}
    tri = [t for t in itertools.combinations(range(n), 3) if t[1] in adj[t[0]] and t[2] in adj[t[0]] and t[2] in adj[t[1]]]

    ids = {}
    verts = []
    for u in range(n):
        for v in adj[u]:
            ids[u, v] = len(verts)
            verts.append(tuple((2 * ico[u] + ico[v]) / 3))

    faces = []
    for u in range(n):
        axis = ico[u] / np.linalg.norm(ico[u])
        ref = ico[adj[u][0]] - ico[u]
        ref -= ref.dot(axis) * axis
        other = np.cross(axis, ref)

        def angle(v):
            d = ico[v] - ico[u]
            return np.arctan2(d.dot(other), d.dot(ref))

        faces.append(tuple(ids[u, v] for v in sorted(adj[u], key=angle)))
    for a, b, c in tri:
        faces.append((ids[a, b], ids[b, a], ids[b, c], ids[c, b], ids[c, a], ids[a, c]))
    return verts, faces


if __name__ == "__main__":
    write_off(HERE / "cube.off", *cube(), "unit cube, six quadrilateral faces")
    write_off(HERE / "truncated_icosahedron.off", *truncated_icosahedron(),
              "truncated icosahedron: 12 pentagons and 20 hexagons")
