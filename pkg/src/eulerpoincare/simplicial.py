"""Abstract simplicial complexes of any dimension.

A simplex is a plain tuple of strictly increasing non-negative vertex ids, so
simplices hash, compare and sort without any wrapper class.  A
:class:`SimplicialComplex` is an immutable family of such tuples indexed by
dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DegenerateSimplex, EmptyComplex, SimplexNotFound, ZeroDimensional

Simplex = tuple  # tuple[int, ...], strictly increasing


def simplex(vertices: Iterable[int]) -> Simplex:
    """Return the canonical (sorted) form of a vertex collection.

    >>> simplex([2, 0, 1])
    (0, 1, 2)
    """
    vs = tuple(vertices)
    if not vs:
        raise DegenerateSimplex("a simplex needs at least one vertex")
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise DegenerateSimplex(f"vertex ids must be non-negative integers, got {v!r}")
    canonical = tuple(sorted(vs))
    if len(set(canonical)) != len(canonical):
        raise DegenerateSimplex(f"repeated vertex in {vs}")
    return canonical


def dimension(s: Simplex) -> int:
    return len(s) - 1


def canonical_key(s: Simplex):
    """Sort key ordering simplices by dimension, then lexicographically."""
    return (len(s), s)


def faces(s: Simplex) -> list:
    """Codimension-one faces of ``s``; the i-th face omits the i-th vertex.

    >>> faces((0, 1, 2))
    [(1, 2), (0, 2), (0, 1)]
    """
    if len(s) < 2:
        raise ZeroDimensional(f"{s} has no proper faces")
    return [s[:i] + s[i + 1:] for i in range(len(s))]


def closure(simplices: Iterable[Simplex]) -> set:
    """All nonempty faces of the given simplices, the simplices included."""
    out = set()
    for s in simplices:
        if s in out:
            continue
        for k in range(1, len(s) + 1):
            out.update(combinations(s, k))
    return out


class SimplicialComplex:
    """An immutable, dimension-indexed family of simplices.

    The constructor stores exactly the simplices it is given (after
    canonicalisation) and does *not* close them under faces; use
    :meth:`from_maximal` for that.  Keeping the two apart lets :func:`validate`
    report on hand-built families that are missing faces.
    """

    __slots__ = ("_cells", "_hash", "_index")

    def __init__(self, simplices: Iterable[Iterable[int]] = ()):
        by_dim: dict[int, set] = {}
        for s in simplices:
            s = simplex(s)
            by_dim.setdefault(len(s) - 1, set()).add(s)
        top = max(by_dim, default=-1)
        self._cells = tuple(frozenset(by_dim.get(k, ())) for k in range(top + 1))
        self._hash = None
        self._index = None

    @classmethod
    def from_maximal(cls, maximal: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(closure(simplex(m) for m in maximal))

    @classmethod
    def _from_cells(cls, cells: Iterable[Simplex]) -> "SimplicialComplex":
        # trusted constructor: cells are already canonical tuples
        obj = cls.__new__(cls)
        by_dim: dict[int, set] = {}
        for s in cells:
            by_dim.setdefault(len(s) - 1, set()).add(s)
        top = max((k for k, v in by_dim.items() if v), default=-1)
        obj._cells = tuple(frozenset(by_dim.get(k, ())) for k in range(top + 1))
        obj._hash = None
        obj._index = None
        return obj

    # -- basic queries -------------------------------------------------

    @property
    def dim(self) -> int:
        """Largest dimension of a simplex; -1 for the empty complex."""
        return len(self._cells) - 1

    def simplices(self, k: int | None = None) -> list:
        """Simplices of dimension ``k`` (all of them if ``k`` is None), canonically sorted."""
        if k is None:
            return sorted((s for cell in self._cells for s in cell), key=canonical_key)
        if 0 <= k < len(self._cells):
            return sorted(self._cells[k])
        return []

    def cells(self, k: int) -> frozenset:
        """Unsorted frozenset of the ``k``-simplices."""
        if 0 <= k < len(self._cells):
            return self._cells[k]
        return frozenset()

    @property
    def vertices(self) -> list:
        return [s[0] for s in self.simplices(0)]

    @property
    def triangles(self) -> list:
        return self.simplices(2)

    @property
    def edges(self) -> list:
        return self.simplices(1)

    def counts(self) -> tuple:
        return tuple(len(cell) for cell in self._cells)

    def is_empty(self) -> bool:
        return not self._cells

    def __contains__(self, s) -> bool:
        s = tuple(s)
        k = len(s) - 1
        return 0 <= k < len(self._cells) and s in self._cells[k]

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices())

    def __len__(self) -> int:
        return sum(len(cell) for cell in self._cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._cells == other._cells

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._cells)
        return self._hash

    def __repr__(self) -> str:
        return f"SimplicialComplex(counts={self.counts()})"

    # -- structure -----------------------------------------------------

    def maximal_simplices(self) -> list:
        """Simplices that are not a face of any other simplex, canonically sorted."""
        covered = set()
        for cell in self._cells[1:]:
            for s in cell:
                covered.update(faces(s))
        return [s for s in self.simplices() if s not in covered]

    def vertex_star(self, v: int) -> list:
        """Canonically sorted simplices that contain vertex ``v``."""
        if self._index is None:
            index: dict = {}
            for cell in self._cells:
                for t in cell:
                    for x in t:
                        index.setdefault(x, []).append(t)
            for lst in index.values():
                lst.sort(key=canonical_key)
            self._index = index
        return self._index.get(v, [])

    def cofaces(self, s: Simplex) -> list:
        """Simplices strictly containing ``s``, canonically sorted."""
        s = tuple(s)
        if not s:
            return []
        ss = set(s)
        return [t for t in self.vertex_star(s[0]) if len(t) > len(s) and ss.issubset(t)]

    def max_vertex(self) -> int:
        return max(self.vertices, default=-1)

    def without(self, removed: Iterable[Simplex]) -> "SimplicialComplex":
        """Copy with the given simplices dropped (no closure bookkeeping)."""
        removed = set(removed)
        return SimplicialComplex._from_cells(
            s for cell in self._cells for s in cell if s not in removed
        )

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex._from_cells(list(self) + list(other))

    def relabel(self, mapping) -> "SimplicialComplex":
        """Apply a vertex map; ``mapping`` is a dict or a callable.

        The map must be injective on each simplex or DegenerateSimplex is raised.
        """
        f = mapping.get if isinstance(mapping, dict) else mapping
        return SimplicialComplex(tuple(f(v) for v in s) for s in self)

    def compacted(self) -> "SimplicialComplex":
        """Relabel vertices to 0..n-1 preserving their order."""
        table = {v: i for i, v in enumerate(self.vertices)}
        return self.relabel(table)

    def adjacency(self) -> dict:
        """Vertex adjacency in the 1-skeleton."""
        adj = {v: set() for v in self.vertices}
        for a, b in self.cells(1):
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def connected_components(self) -> list:
        """Vertex sets of the connected components, sorted by smallest vertex."""
        adj = self.adjacency()
        seen = set()
        comps = []
        for v in sorted(adj):
            if v in seen:
                continue
            comp, stack = set(), [v]
            while stack:
                u = stack.pop()
                if u in comp:
                    continue
                comp.add(u)
                stack.extend(adj[u] - comp)
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def subcomplex(self, vertices) -> "SimplicialComplex":
        """Full subcomplex spanned by a vertex set."""
        vs = set(vertices)
        return SimplicialComplex._from_cells(s for s in self if vs.issuperset(s))


def from_maximal(maximal: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Face closure of a list of vertex tuples.

    Raises DegenerateSimplex if any tuple repeats a vertex.
    """
    return SimplicialComplex.from_maximal(maximal)


def counts(c: SimplicialComplex) -> tuple:
    """Number of simplices in each dimension, ``()`` for the empty complex."""
    return c.counts()


def euler_characteristic(c: SimplicialComplex) -> int:
    """Alternating sum of the simplex counts."""
    n = c.counts()
    if not n:
        raise EmptyComplex("the Euler characteristic of the empty complex is not defined")
    return sum(-ni if i % 2 else ni for i, ni in enumerate(n))


@dataclass
class ValidationReport:
    """Findings of :func:`validate`.

    ``missing_faces`` holds ``(simplex, face)`` pairs where ``face`` is absent;
    ``impure`` lists simplices that are not a face of any simplex of dimension
    ``pure_dim`` (only filled when purity was requested).
    """

    missing_faces: list = field(default_factory=list)
    impure: list = field(default_factory=list)
    pure_dim: int | None = None

    @property
    def closed_under_faces(self) -> bool:
        return not self.missing_faces

    @property
    def ok(self) -> bool:
        return not self.missing_faces and not self.impure

    def findings(self) -> list:
        out = [f"missing face {list(f)} of {list(s)}" for s, f in self.missing_faces]
        out += [f"{list(s)} is not a face of any {self.pure_dim}-simplex" for s in self.impure]
        return out


def validate(c: SimplicialComplex, require_pure: int | None = None) -> ValidationReport:
    report = ValidationReport(pure_dim=require_pure)
    for s in c.simplices():
        if len(s) < 2:
            continue
        for f in faces(s):
            if f not in c:
                report.missing_faces.append((s, f))
    if require_pure is not None:
        covered = closure(c.cells(require_pure))
        report.impure = [s for s in c.simplices() if s not in covered]
    return report


def is_pure(c: SimplicialComplex, k: int | None = None) -> bool:
    k = c.dim if k is None else k
    return not validate(c, require_pure=k).impure


def star_subdivide(c: SimplicialComplex, t: Simplex) -> SimplicialComplex:
    """Stellar subdivision of ``c`` at the simplex ``t`` (usually a triangle).

    Every simplex containing ``t`` is coned from a fresh vertex over the
    proper faces of ``t``; the fresh vertex id is one more than the largest
    id in use.  For a maximal triangle this adds one vertex, three edges and
    a net two triangles.
    """
    t = simplex(t)
    if t not in c:
        raise SimplexNotFound(f"{t} is not in the complex")
    v = c.max_vertex() + 1
    tset = set(t)
    star = [t] + c.cofaces(t)
    proper = [f for k in range(0, len(t)) for f in combinations(t, k)]
    new = []
    for s in star:
        rest = tuple(x for x in s if x not in tset)
        for f in proper:
            new.append(tuple(sorted(rest + f + (v,))))
    removed = set(star)
    kept = (s for cell in c._cells for s in cell if s not in removed)
    return SimplicialComplex._from_cells(list(kept) + list(closure(new)))
