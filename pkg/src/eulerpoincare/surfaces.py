"""Recognition and classification of closed surfaces and pseudo-surfaces."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .errors import (
    Disconnected,
    GluingCollision,
    NoTriangle,
    NotASurfaceComplex,
    NotPure,
    VertexNotFound,
)
from .orientation import edge_triangles, orientability_check
from .simplicial import SimplicialComplex, euler_characteristic, faces, is_pure


@dataclass(frozen=True)
class VertexLink:
    """Link of ``apex``: neighbour vertices, joined when they span a triangle with the apex."""

    apex: int
    vertices: tuple
    edges: tuple

    def components(self) -> list:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen, comps = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            comp, stack = [], [v]
            while stack:
                u = stack.pop()
                if u in seen:
                    continue
                seen.add(u)
                comp.append(u)
                stack.extend(adj[u] - seen)
            comps.append(sorted(comp))
        return comps

    def degrees(self) -> dict:
        deg = {v: 0 for v in self.vertices}
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def cycle_count(self) -> int:
        """Number of components that are cycles (every vertex of degree two)."""
        deg = self.degrees()
        return sum(
            1 for comp in self.components() if len(comp) >= 3 and all(deg[v] == 2 for v in comp)
        )

    def is_cycle(self) -> bool:
        return len(self.components()) == 1 and self.cycle_count() == 1

    def is_union_of_cycles(self) -> bool:
        return self.cycle_count() == len(self.components()) > 0


def vertex_link(c: SimplicialComplex, v: int) -> VertexLink:
    if (v,) not in c:
        raise VertexNotFound(f"vertex {v} is not in the complex")
    star = c.vertex_star(v)
    nbrs = sorted({x for e in star if len(e) == 2 for x in e if x != v})
    edges = sorted(tuple(x for x in t if x != v) for t in star if len(t) == 3)
    return VertexLink(v, tuple(nbrs), tuple(edges))


@dataclass(frozen=True)
class ClosedSurface:
    kind = "closed"


@dataclass(frozen=True)
class PseudoSurface:
    pinch_vertices: tuple

    kind = "pseudo"


@dataclass(frozen=True)
class NotSurface:
    reason: str

    kind = "not-surface"


def surface_kind(c: SimplicialComplex):
    """ClosedSurface, PseudoSurface or NotSurface, in that order of preference."""
    if c.dim != 2 or not is_pure(c, 2):
        return NotSurface("not a pure 2-dimensional complex")
    if not c.is_connected():
        return NotSurface("disconnected")
    for e, ts in sorted(edge_triangles(c).items()):
        if len(ts) == 1:
            return NotSurface(f"boundary edge {list(e)}")
        if len(ts) > 2:
            return NotSurface(f"edge {list(e)} lies in {len(ts)} triangles")
    pinches = []
    for v in c.vertices:
        link = vertex_link(c, v)
        if not link.is_union_of_cycles():
            return NotSurface(f"link of vertex {v} is not a union of cycles")
        if len(link.components()) > 1:
            pinches.append(v)
    if pinches:
        return PseudoSurface(tuple(pinches))
    return ClosedSurface()


@dataclass
class SurfaceReport:
    """Summary produced by :func:`classify`.

    ``genus`` is the handle count for orientable closed surfaces and the
    number of projective-plane summands for non-orientable ones; ``orientable``
    disambiguates.  Both are None when the complex is not a surface.
    """

    chi: int
    closed: bool
    kind: str
    pinch_vertices: list = field(default_factory=list)
    orientable: bool | None = None
    genus: int | None = None
    label: str = ""

    def to_dict(self) -> dict:
        return asdict(self)

    def summary(self) -> str:
        if self.orientable is None:
            orient_txt = "orientability undefined"
        else:
            orient_txt = "orientable" if self.orientable else "non-orientable"
        genus_txt = "genus -" if self.genus is None else f"genus {self.genus}"
        return f"{orient_txt}, {genus_txt}, chi {self.chi}"


def _plural(n: int, word: str) -> str:
    return f"{n} {word}" if n == 1 else f"{n} {word}s"


def surface_label(orientable: bool, genus: int) -> str:
    if orientable:
        return f"orientable genus-{genus} surface"
    return f"connected sum of {_plural(genus, 'projective plane')}"


def classify(c: SimplicialComplex) -> SurfaceReport:
    """Euler characteristic, surface type, orientability and genus of a 2-complex."""
    if c.dim != 2 or not is_pure(c, 2):
        raise NotPure("classification needs a pure 2-dimensional complex")
    if not c.is_connected():
        raise Disconnected("classification needs a connected complex")
    chi = euler_characteristic(c)
    kind = surface_kind(c)
    if isinstance(kind, NotSurface):
        return SurfaceReport(chi, False, kind.kind, label=f"not a closed surface ({kind.reason})")
    orientable = orientability_check(c).orientable
    if isinstance(kind, PseudoSurface):
        pinches = list(kind.pinch_vertices)
        return SurfaceReport(
            chi, False, kind.kind, pinches, orientable,
            label=f"pseudo-surface with {len(pinches)} pinch {'vertex' if len(pinches) == 1 else 'vertices'}",
        )
    genus = (2 - chi) // 2 if orientable else 2 - chi
    return SurfaceReport(chi, True, kind.kind, [], orientable, genus, surface_label(orientable, genus))


def _check_summand(c: SimplicialComplex, name: str) -> None:
    if not c.cells(2):
        raise NoTriangle(f"{name} operand has no triangle")
    if c.dim != 2 or not is_pure(c, 2):
        raise NotPure(f"{name} operand is not a pure 2-complex")
    if not c.is_connected():
        raise Disconnected(f"{name} operand is disconnected")
    for e, ts in edge_triangles(c).items():
        if len(ts) > 2:
            raise NotASurfaceComplex(f"edge {list(e)} of {name} operand lies in {len(ts)} triangles")


def connected_sum(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Remove the smallest triangle of each operand and glue along the two boundary triangles.

    ``a`` keeps its vertex ids; ``b``'s surviving vertices are renumbered after
    ``a``'s largest id.  The gluing pairs the smallest corners and runs the two
    3-cycles in opposite directions.
    """
    _check_summand(a, "first")
    _check_summand(b, "second")
    ta = a.simplices(2)[0]
    tb = b.simplices(2)[0]
    a0, a1, a2 = ta
    b0, b1, b2 = tb
    glue = {b0: a0, b1: a2, b2: a1}
    nxt = a.max_vertex() + 1
    mapping = {}
    for v in b.vertices:
        if v in glue:
            mapping[v] = glue[v]
        else:
            mapping[v] = nxt
            nxt += 1
    a_part = set(a) - {ta}
    b_faces = set(faces(tb)) | {(v,) for v in tb}
    b_part = set()
    for s in b:
        if s == tb:
            continue
        image = tuple(sorted(mapping[v] for v in s))
        # cannot fire while unglued vertices get fresh ids; kept as a guard on the mapping
        if s not in b_faces and image in a_part:
            raise GluingCollision(f"gluing would merge {list(s)} of the second operand with {list(image)}")
        b_part.add(image)
    return SimplicialComplex._from_cells(a_part | b_part)
