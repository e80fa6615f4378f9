"""ASCII OFF meshes with polygonal faces, and their fan triangulation."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import DegenerateFace, DiagonalCollision, DuplicateMaximalFace, IndexOutOfRange, ParseError
from ..simplicial import SimplicialComplex


@dataclass
class PolygonMesh:
    """Vertex count plus faces given as cyclic vertex sequences."""

    n_vertices: int
    faces: list = field(default_factory=list)

    def edges(self) -> set:
        """Distinct unordered vertex pairs over all face boundaries."""
        out = set()
        for f in self.faces:
            for i in range(len(f)):
                a, b = f[i], f[(i + 1) % len(f)]
                out.add((min(a, b), max(a, b)))
        return out

    def used_vertices(self) -> set:
        return {v for f in self.faces for v in f}

    def euler_characteristic(self) -> int:
        """V - E + F, with V counting only vertices that some face uses."""
        return len(self.used_vertices()) - len(self.edges()) + len(self.faces)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_off(text: str) -> PolygonMesh:
    """Parse OFF text; vertex coordinates are read and discarded."""
    lines = _content_lines(text)
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise ParseError("empty OFF document", 1) from None
    if toks[0] != "OFF":
        raise ParseError(f"expected 'OFF' header, got {toks[0]!r}", lineno)
    toks = toks[1:]
    if not toks:
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise ParseError("missing counts line", lineno) from None
    try:
        nv, nf = int(toks[0]), int(toks[1])
        if len(toks) > 3:
            raise ValueError
        if nv < 0 or nf < 0:
            raise ValueError
    except (ValueError, IndexError):
        raise ParseError(f"bad counts line {' '.join(toks)!r}", lineno) from None

    for _ in range(nv):
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise ParseError(f"expected {nv} vertex lines", lineno) from None
        try:
            coords = [float(t) for t in toks]
        except ValueError:
            raise ParseError(f"bad vertex line {' '.join(toks)!r}", lineno) from None
        if len(coords) != 3:
            raise ParseError(f"vertex line needs 3 coordinates, got {len(coords)}", lineno)

    faces = []
    for _ in range(nf):
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise ParseError(f"expected {nf} face lines", lineno) from None
        try:
            ints = [int(t) for t in toks]
        except ValueError:
            raise ParseError(f"bad face line {' '.join(toks)!r}", lineno) from None
        k, idx = ints[0], ints[1:]
        if k != len(idx):
            raise ParseError(f"face declares {k} vertices but lists {len(idx)}", lineno)
        for v in idx:
            if not 0 <= v < nv:
                raise IndexOutOfRange(f"face references vertex {v}, mesh has {nv}", lineno)
        faces.append(tuple(idx))

    for lineno, toks in lines:
        raise ParseError(f"unexpected trailing data {' '.join(toks)!r}", lineno)
    return PolygonMesh(nv, faces)


def read_off(path) -> PolygonMesh:
    with open(path) as f:
        return parse_off(f.read())


def _fan(face, anchor):
    k = len(face)
    rot = face[anchor:] + face[:anchor]
    tris = [(rot[0], rot[i], rot[i + 1]) for i in range(1, k - 1)]
    diagonals = {tuple(sorted((rot[0], rot[i]))) for i in range(2, k - 1)}
    return tris, diagonals


def fan_triangulate(m: PolygonMesh) -> SimplicialComplex:
    """Split every k-gon into k-2 triangles by diagonals from one corner.

    The first corner is tried first; if one of its diagonals coincides with a
    mesh edge or with a diagonal already drawn in another face, the next
    corner is tried.
    """
    seen = {}
    for i, f in enumerate(m.faces):
        if len(f) < 3 or len(set(f)) != len(f):
            raise DegenerateFace(f"face {i} {list(f)} needs at least 3 distinct vertices")
        key = frozenset(f)
        if key in seen:
            raise DuplicateMaximalFace(f"faces {seen[key]} and {i} have the same vertex set")
        seen[key] = i

    mesh_edges = m.edges()
    drawn: set = set()
    triangles = []
    for i, f in enumerate(m.faces):
        f = tuple(f)
        for anchor in range(len(f)):
            tris, diagonals = _fan(f, anchor)
            if not (diagonals & mesh_edges or diagonals & drawn):
                break
        else:
            raise DiagonalCollision(f"every fan of face {i} {list(f)} reuses an existing edge")
        drawn |= diagonals
        triangles += tris

    canon = [tuple(sorted(t)) for t in triangles]
    if len(set(canon)) != len(canon):
        raise DiagonalCollision("two faces triangulate to the same triangle")
    return SimplicialComplex.from_maximal(canon)
