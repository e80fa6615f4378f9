"""Oriented simplices, integer chains, the boundary operator and orientability."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    DegenerateSimplex,
    Disconnected,
    MixedDimension,
    NotAdjacent,
    NotASurfaceComplex,
    NotPure,
    ZeroDimensional,
)
from .simplicial import Simplex, SimplicialComplex, faces, is_pure, simplex


def permutation_sign(seq) -> int:
    """+1 if sorting ``seq`` takes an even number of transpositions, else -1."""
    inversions = sum(
        1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
    )
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class OrientedSimplex:
    """A simplex together with one of its two orientation classes.

    ``sign`` is +1 when the orientation is that of the sorted vertex order.
    """

    base: Simplex
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def __neg__(self) -> "OrientedSimplex":
        return OrientedSimplex(self.base, -self.sign)

    @property
    def dim(self) -> int:
        return len(self.base) - 1

    def ordering(self) -> tuple:
        """A vertex ordering representing this orientation."""
        if self.sign == 1 or len(self.base) < 2:
            return self.base
        return (self.base[1], self.base[0]) + self.base[2:]

    def as_chain(self) -> "Chain":
        return Chain({self.base: self.sign})


def orient(ordering: Iterable[int]) -> OrientedSimplex:
    """Orientation class of a vertex ordering.

    >>> orient([0, 2, 1])
    OrientedSimplex(base=(0, 1, 2), sign=-1)
    """
    order = tuple(ordering)
    if len(set(order)) != len(order):
        raise DegenerateSimplex(f"repeated vertex in {order}")
    return OrientedSimplex(simplex(order), permutation_sign(order))


class Chain:
    """Finite formal sum of equal-dimension simplices with integer coefficients.

    Coefficients refer to the sorted orientation of each simplex; zero
    coefficients are never stored.
    """

    __slots__ = ("_coef",)

    def __init__(self, coefficients: Mapping[Simplex, int] | None = None):
        coef = {}
        dims = set()
        for s, c in (coefficients or {}).items():
            s = simplex(s)
            c = int(c)
            dims.add(len(s))
            if c:
                coef[s] = coef.get(s, 0) + c
        if len(dims) > 1:
            raise MixedDimension(f"chain mixes simplices of dimensions {sorted(d - 1 for d in dims)}")
        self._coef = {s: c for s, c in coef.items() if c}

    @classmethod
    def _trusted(cls, coef: dict) -> "Chain":
        obj = cls.__new__(cls)
        obj._coef = {s: c for s, c in coef.items() if c}
        return obj

    @property
    def dim(self) -> int | None:
        """Common dimension of the simplices, None for the zero chain."""
        for s in self._coef:
            return len(s) - 1
        return None

    def __getitem__(self, s) -> int:
        return self._coef.get(tuple(s), 0)

    def items(self):
        return sorted(self._coef.items())

    def support(self) -> list:
        return sorted(self._coef)

    def __len__(self) -> int:
        return len(self._coef)

    def __bool__(self) -> bool:
        return bool(self._coef)

    def __eq__(self, other) -> bool:
        if isinstance(other, OrientedSimplex):
            other = other.as_chain()
        if not isinstance(other, Chain):
            return NotImplemented
        return self._coef == other._coef

    def __add__(self, other: "Chain") -> "Chain":
        if isinstance(other, OrientedSimplex):
            other = other.as_chain()
        if self.dim is not None and other.dim is not None and self.dim != other.dim:
            raise MixedDimension(f"cannot add a {self.dim}-chain and a {other.dim}-chain")
        out = dict(self._coef)
        for s, c in other._coef.items():
            out[s] = out.get(s, 0) + c
        return Chain._trusted(out)

    def __neg__(self) -> "Chain":
        return Chain._trusted({s: -c for s, c in self._coef.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __mul__(self, k: int) -> "Chain":
        return Chain._trusted({s: k * c for s, c in self._coef.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._coef:
            return "Chain(0)"
        terms = " ".join(f"{c:+d}{list(s)}" for s, c in self.items())
        return f"Chain({terms})"


def boundary(s: OrientedSimplex) -> Chain:
    """Alternating sum of the faces of an oriented simplex.

    >>> boundary(orient([0, 1, 2])).items()
    [((0, 1), 1), ((0, 2), -1), ((1, 2), 1)]
    """
    if s.dim < 1:
        raise ZeroDimensional(f"{s.base} has no boundary")
    out = {}
    for i, f in enumerate(faces(s.base)):
        out[f] = s.sign * (-1 if i % 2 else 1)
    return Chain._trusted(out)


def boundary_chain(ch: Chain) -> Chain:
    """Linear extension of :func:`boundary` to chains.

    0-chains map to the zero chain (there are no (-1)-simplices).
    """
    d = ch.dim
    if d is None or d < 1:
        return Chain()
    out: dict = {}
    for s, c in ch._coef.items():
        for i, f in enumerate(faces(s)):
            out[f] = out.get(f, 0) + (-c if i % 2 else c)
    return Chain._trusted(out)


def compatible_orientation(src: OrientedSimplex, dst: Simplex, shared: Simplex) -> OrientedSimplex:
    """Orientation of ``dst`` inducing on ``shared`` the opposite of what ``src`` induces."""
    dst = simplex(dst)
    shared = simplex(shared)
    if (
        len(src.base) != len(dst)
        or len(shared) != len(dst) - 1
        or set(src.base) & set(dst) != set(shared)
        or src.base == dst
    ):
        raise NotAdjacent(f"{src.base} and {dst} do not meet exactly in {shared}")
    c_src = boundary(src)[shared]
    c_dst = boundary(OrientedSimplex(dst, 1))[shared]
    return OrientedSimplex(dst, -c_src * c_dst)


def propagate(path: list, start: OrientedSimplex | int = 1) -> list:
    """Carry an orientation along a chain of edge-adjacent simplices.

    Returns one OrientedSimplex per element of ``path``; each is the
    compatible orientation of its predecessor across their common face.
    """
    first = start if isinstance(start, OrientedSimplex) else OrientedSimplex(simplex(path[0]), start)
    out = [first]
    for prev, nxt in zip(path, path[1:]):
        shared = tuple(sorted(set(prev) & set(nxt)))
        out.append(compatible_orientation(out[-1], nxt, shared))
    return out


def edge_triangles(c: SimplicialComplex) -> dict:
    """Map each edge to the sorted list of triangles containing it."""
    table = {e: [] for e in c.cells(1)}
    for t in c.simplices(2):
        for e in faces(t):
            table.setdefault(e, []).append(t)
    return table


@dataclass
class Orientable:
    """Coherent orientation found: ``assignment`` maps each triangle to +1/-1."""

    assignment: dict

    orientable = True

    def oriented(self) -> list:
        return [OrientedSimplex(t, s) for t, s in sorted(self.assignment.items())]

    def fundamental_chain(self) -> Chain:
        return Chain._trusted(dict(self.assignment))


@dataclass
class NonOrientable:
    """Propagation conflict.

    ``witness`` is a closed chain of triangles (first element repeated at the
    end); carrying an orientation around it with :func:`propagate` returns the
    opposite orientation on the starting triangle.
    """

    witness: list

    orientable = False


def _check_surface_like(c: SimplicialComplex) -> dict:
    if c.dim != 2 or not is_pure(c, 2):
        raise NotPure("orientability is decided for pure 2-dimensional complexes only")
    if not c.is_connected():
        raise Disconnected("complex has several connected components")
    table = edge_triangles(c)
    bad = [e for e, ts in table.items() if len(ts) > 2]
    if bad:
        raise NotASurfaceComplex(f"edge {list(bad[0])} lies in {len(table[bad[0]])} triangles")
    return table


def _incidence(t: Simplex, e: Simplex) -> int:
    """Coefficient of the face ``e`` in the boundary of the sorted simplex ``t``."""
    i = next(i for i, x in enumerate(t) if x not in e)
    return -1 if i % 2 else 1


def _tree_path(parent: dict, t) -> list:
    path = [t]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def orientability_check(c: SimplicialComplex):
    """Breadth-first propagation of compatible orientations.

    The root is the canonically smallest triangle with sign +1; neighbours are
    visited in canonical order through edges lying in exactly two triangles.
    Returns :class:`Orientable` or :class:`NonOrientable`.
    """
    table = _check_surface_like(c)
    sign: dict = {}
    parent: dict = {}
    for root in c.simplices(2):
        if root in sign:
            continue
        # triangles joined only through a vertex form separate propagation trees
        sign[root] = 1
        parent[root] = None
        queue = deque([root])
        while queue:
            t = queue.popleft()
            for e in sorted(faces(t)):
                ts = table[e]
                if len(ts) != 2:
                    continue
                u = ts[0] if ts[1] == t else ts[1]
                # same rule as compatible_orientation, without the argument checks
                want = -sign[t] * _incidence(t, e) * _incidence(u, e)
                if u not in sign:
                    sign[u] = want
                    parent[u] = t
                    queue.append(u)
                elif sign[u] != want:
                    return NonOrientable(_witness(parent, t, u))
    return Orientable(sign)


def _witness(parent: dict, t, u) -> list:
    pt = _tree_path(parent, t)
    pu = _tree_path(parent, u)
    i = 0
    while i < min(len(pt), len(pu)) and pt[i] == pu[i]:
        i += 1
    lca = pt[i - 1]
    return [lca] + pt[i:] + pu[i:][::-1] + [lca]


def orientability_by_component(c: SimplicialComplex) -> list:
    """Per-component verdicts as ``(vertex_set, verdict)`` pairs."""
    out = []
    for comp in c.connected_components():
        out.append((comp, orientability_check(c.subcomplex(comp))))
    return out


def assignment_defects(c: SimplicialComplex, assignment: Mapping[Simplex, int]) -> list:
    """Edges of triangle-degree two whose induced coefficients do not cancel.

    Computed as the boundary of the signed sum of all triangles; an empty
    list certifies the assignment.
    """
    total = Chain()
    for t, s in assignment.items():
        total = total + boundary(OrientedSimplex(t, s))
    table = edge_triangles(c)
    return [e for e, ts in sorted(table.items()) if len(ts) == 2 and total[e] != 0]


def witness_flips(witness: list) -> bool:
    """True when propagation around the closed ``witness`` reverses the start orientation."""
    if len(witness) < 3 or witness[0] != witness[-1]:
        return False
    carried = propagate(witness, 1)
    return carried[-1].sign == -carried[0].sign
