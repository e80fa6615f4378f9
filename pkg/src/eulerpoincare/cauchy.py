"""Cauchy's triangle-removal argument as an executable, traced state machine.

A seed triangle is opened to make a hole; the hole then grows one triangle at
a time:

* operation I removes a triangle meeting the hole in one edge, together with
  that edge (counts change by 0, -1, -1);
* operation II removes a triangle meeting the hole in two edges, the two edges
  and their common vertex (-1, -2, -1);
* operation III removes an edge lying in no triangle together with a free
  endpoint (-1, -1, 0).

None of them changes n0 - n1 + n2, so the alternating count of what is left,
plus one for the seed, is the Euler characteristic of the input.

The hole boundary is kept as a cyclic vertex sequence.  While it is a simple
cycle the hole is a disk whose closure is also a disk; on a sphere the whole
run stays in that regime and ends on a single triangle.  On any other surface
the simple moves run out while triangles are left (the complement of a disk
with simple boundary is a surface with boundary), so the engine then lifts
the simplicity condition and lets the boundary walk touch itself, which is
what happens along the bands of a torus.  The hole stays an open disk in
both regimes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import (
    NotClosedSurface,
    NotEligible,
    NotFree,
    SimplexNotFound,
    Stalled,
    VertexStillUsed,
)
from .simplicial import Simplex, SimplicialComplex, euler_characteristic, faces, simplex
from .surfaces import ClosedSurface, surface_kind


class StepKind(str, Enum):
    SEED = "seed"
    OP_I = "I"
    OP_II = "II"
    OP_III = "III"


DELTAS = {
    StepKind.SEED: (0, 0, -1),
    StepKind.OP_I: (0, -1, -1),
    StepKind.OP_II: (-1, -2, -1),
    StepKind.OP_III: (-1, -1, 0),
}


def alternating(d) -> int:
    return sum(-x if i % 2 else x for i, x in enumerate(d))


@dataclass(frozen=True)
class ReductionStep:
    kind: StepKind
    removed: tuple
    deltas: tuple
    boundary: tuple = ()
    simple: bool = True

    def describe(self) -> str:
        what = " ".join("(" + " ".join(map(str, s)) + ")" for s in self.removed)
        d = ",".join(f"{x:+d}" for x in self.deltas)
        tag = "" if self.simple else "  [walk]"
        return f"{self.kind.value:<4} {what}  delta ({d}){tag}"


@dataclass(frozen=True)
class ReductionState:
    residual: SimplicialComplex
    hole_boundary: tuple = ()
    removed_counts: tuple = (0, 0, 0)

    def boundary_edges(self) -> frozenset:
        return self._boundary_edges

    @cached_property
    def _boundary_edges(self) -> frozenset:
        w = self.hole_boundary
        if len(w) < 2:
            return frozenset()
        return frozenset(_edge_of(w, i) for i in range(len(w)))

    def boundary_is_simple(self) -> bool:
        return len(set(self.hole_boundary)) == len(self.hole_boundary)

    @property
    def residual_chi(self) -> int:
        return euler_characteristic(self.residual)


def _pad(n, width=3) -> tuple:
    return tuple(n) + (0,) * (width - len(n))


def _removed_after(st: ReductionState, kind: StepKind) -> tuple:
    return tuple(r - d for r, d in zip(st.removed_counts, DELTAS[kind]))


def _is_simple(walk) -> bool:
    return len(set(walk)) == len(walk)


def _edge_of(walk, i) -> tuple:
    return tuple(sorted((walk[i], walk[(i + 1) % len(walk)])))


# -- seed --------------------------------------------------------------


def _seed(c: SimplicialComplex, t=None):
    if not isinstance(surface_kind(c), ClosedSurface):
        raise NotClosedSurface("the reduction starts from a closed surface")
    if t is None:
        t = c.simplices(2)[0]
    t = simplex(t)
    if len(t) != 3 or t not in c:
        raise SimplexNotFound(f"{t} is not a triangle of the complex")
    st = ReductionState(c.without([t]), t, (0, 0, 1))
    return st, ReductionStep(StepKind.SEED, (t,), DELTAS[StepKind.SEED], t)


def seed(c: SimplicialComplex, t: Simplex | None = None) -> ReductionState:
    """Open the triangle ``t`` (default: the smallest one), keeping its edges and vertices."""
    return _seed(c, t)[0]


# -- operation I ---------------------------------------------------------


def _shared(st: ReductionState, t: Simplex) -> list:
    bd = st.boundary_edges()
    return sorted(e for e in faces(t) if e in bd)


def _residual_triangle(st: ReductionState, t) -> Simplex:
    t = simplex(t)
    if len(t) != 3 or t not in st.residual:
        raise NotEligible(f"{t} is not a residual triangle")
    return t


def _plan_op_I(st: ReductionState, t, simple=True, edge=None):
    t = _residual_triangle(st, t)
    shared = _shared(st, t)
    if simple and len(shared) != 1:
        raise NotEligible(f"{t} meets the hole in {len(shared)} edges, operation I needs exactly one")
    if not shared:
        raise NotEligible(f"{t} does not meet the hole")
    if edge is None:
        e = shared[0]
    else:
        e = simplex(edge)
        if e not in shared:
            raise NotEligible(f"{e} is not an edge of {t} on the hole boundary")
    (x,) = set(t) - set(e)
    walk = st.hole_boundary
    i = next(i for i in range(len(walk)) if _edge_of(walk, i) == e)
    new_walk = walk[: i + 1] + (x,) + walk[i + 1:]
    if simple and not _is_simple(new_walk):
        raise NotEligible(f"adding vertex {x} would leave the hole boundary non-simple")
    return (t, e), new_walk


def apply_op_I(st: ReductionState, t: Simplex, simple: bool = True, edge: Simplex | None = None) -> ReductionState:
    """Remove ``t`` and one of its edges on the hole boundary.

    In the default simple regime ``t`` must meet the hole in exactly one edge
    and the rerouted boundary must stay a simple cycle.  With ``simple=False``
    the boundary walk may touch itself and ``t`` may meet the hole in several
    edges; ``edge`` picks which one is opened (default: the smallest).
    """
    return _apply(st, StepKind.OP_I, *_plan_op_I(st, t, simple, edge), simple)[0]


# -- operation II --------------------------------------------------------


def _plan_op_II(st: ReductionState, t, simple=True, edge=None):
    t = _residual_triangle(st, t)
    shared = _shared(st, t)
    if len(shared) != 2:
        raise NotEligible(f"{t} meets the hole in {len(shared)} edges, operation II needs exactly two")
    (x,) = set(shared[0]) & set(shared[1])
    u, w = sorted(set(t) - {x})
    walk = st.hole_boundary
    n = len(walk)
    pos = [
        i for i in range(n)
        if walk[i] == x and {walk[i - 1], walk[(i + 1) % n]} == {u, w}
    ]
    if not pos:
        raise NotEligible(f"the two hole edges of {t} are not consecutive at vertex {x}")
    own = {t, tuple(shared[0]), tuple(shared[1])}
    others = [s for s in st.residual.cofaces((x,)) if s not in own]
    if others:
        raise VertexStillUsed(f"vertex {x} still lies in {list(others[0])}")
    i = pos[0]
    new_walk = walk[:i] + walk[i + 1:]
    if simple and not _is_simple(new_walk):
        raise NotEligible("the hole boundary would not be simple")
    return (t,) + tuple(shared) + ((x,),), new_walk


def apply_op_II(st: ReductionState, t: Simplex, simple: bool = True) -> ReductionState:
    """Remove ``t``, its two edges on the hole boundary and their common vertex."""
    return _apply(st, StepKind.OP_II, *_plan_op_II(st, t, simple), simple)[0]


# -- operation III -------------------------------------------------------


def _plan_op_III(st: ReductionState, e):
    e = simplex(e)
    if len(e) != 2 or e not in st.residual:
        raise NotFree(f"{e} is not a residual edge")
    if st.residual.cofaces(e):
        raise NotFree(f"{e} still lies in a triangle")

    def degree(v):
        return sum(1 for s in st.residual.vertex_star(v) if len(s) == 2)

    free = [v for v in reversed(e) if degree(v) == 1]
    if not free:
        raise NotFree(f"neither endpoint of {e} is a leaf")
    w = free[0]
    (u,) = set(e) - {w}
    walk = st.hole_boundary
    n = len(walk)
    new_walk = walk
    if n == 2 and set(walk) == {u, w}:
        new_walk = (u,)
    else:
        for i in range(n):
            if walk[i] == w and walk[i - 1] == u and walk[(i + 1) % n] == u:
                # the spike u, w, u collapses to u
                drop = {i, (i + 1) % n}
                new_walk = tuple(walk[j] for j in range(n) if j not in drop)
                break
    return (e, (w,)), new_walk


def apply_op_III(st: ReductionState, e: Simplex) -> ReductionState:
    """Remove an edge lying in no triangle together with its leaf endpoint."""
    return _apply(st, StepKind.OP_III, *_plan_op_III(st, e), True)[0]


def _apply(st: ReductionState, kind: StepKind, removed, new_walk, simple):
    new = ReductionState(st.residual.without(removed), new_walk, _removed_after(st, kind))
    return new, ReductionStep(kind, tuple(removed), DELTAS[kind], new_walk, simple)


# -- driver --------------------------------------------------------------


@dataclass
class ReductionTrace:
    """Full record of one reduction.

    ``total_chi`` is the residual's alternating count plus one for the seed;
    ``relaxed_from`` is the index of the first step taken with a non-simple
    boundary walk, or None if the boundary stayed simple throughout.
    """

    steps: list
    residual: SimplicialComplex
    residual_chi: int
    total_chi: int
    original_chi: int
    hole_boundary: tuple = ()
    relaxed_from: int | None = None
    backtracks: int = 0
    dim: int = 2

    def residual_counts(self) -> tuple:
        return _pad(self.residual.counts(), self.dim + 1)

    def states(self, original: SimplicialComplex):
        """Replay the residual complex after each step."""
        cur = original
        for step in self.steps:
            cur = cur.without(step.removed)
            yield cur

    def log_lines(self) -> list:
        lines = [f"{i:4d}  {s.describe()}" for i, s in enumerate(self.steps)]
        lines.append(self.final_line())
        return lines

    def final_line(self) -> str:
        counts = " ".join(map(str, self.residual_counts()))
        return f"residual {counts}, total chi {self.total_chi}"

    def to_dict(self) -> dict:
        return {
            "steps": [
                {
                    "kind": s.kind.value,
                    "removed": [list(x) for x in s.removed],
                    "deltas": list(s.deltas),
                    "boundary": list(s.boundary),
                    "simple": s.simple,
                }
                for s in self.steps
            ],
            "residual_counts": list(self.residual_counts()),
            "residual_chi": self.residual_chi,
            "total_chi": self.total_chi,
            "original_chi": self.original_chi,
            "hole_boundary": list(self.hole_boundary),
            "relaxed_from": self.relaxed_from,
            "backtracks": self.backtracks,
        }


def _is_last_triangle(st: ReductionState) -> bool:
    return st.residual.counts() == (3, 3, 1)


def candidate_moves(st: ReductionState) -> list:
    """Legal moves as ``(StepKind, triangle, simple, edge)``.

    Simple-boundary moves come first (operation I before II, triangles in
    canonical order); walk moves are offered only when no simple move exists.
    Within the walk regime operation II is still preferred when it applies,
    since it is the only move that retires a vertex.
    """
    bd = st.boundary_edges()
    near = sorted({t for e in bd for t in st.residual.cofaces(e)})
    moves = []
    for kind, plan in ((StepKind.OP_I, _plan_op_I), (StepKind.OP_II, _plan_op_II)):
        for t in near:
            try:
                plan(st, t, True)
            except NotEligible:
                continue
            moves.append((kind, t, True, None))
    if moves:
        return moves
    for t in near:
        try:
            _plan_op_II(st, t, False)
        except NotEligible:
            continue
        moves.append((StepKind.OP_II, t, False, None))
    for t in near:
        for e in sorted(_shared(st, t)):
            moves.append((StepKind.OP_I, t, False, e))
    return moves


_PLANS = {StepKind.OP_I: _plan_op_I, StepKind.OP_II: _plan_op_II}


def _take(st, move):
    kind, t, simple, e = move
    return _apply(st, kind, *_PLANS[kind](st, t, simple, e), simple)


def reduce(
    c: SimplicialComplex,
    seed_triangle: Simplex | None = None,
    max_backtrack: int = 8,
    max_backtrack_events: int = 10_000,
) -> ReductionTrace:
    """Run the reduction to completion.

    Greedy: the first candidate move is always taken.  When the run gets
    stuck with triangles left, up to ``max_backtrack`` of the latest choices
    are revisited before giving up with :class:`Stalled`.
    """
    chi = euler_characteristic(c) if not c.is_empty() else 0
    st, first = _seed(c, seed_triangle)
    steps = [first]
    # one frame per choice point: (state before, len(steps) before, moves, index taken)
    frames: list = []
    events = 0
    while st.residual.cells(2) and not _is_last_triangle(st):
        moves = candidate_moves(st)
        if moves:
            frames.append((st, len(steps), moves, 0))
            st, step = _take(st, moves[0])
            steps.append(step)
            continue
        resumed = False
        for depth in range(1, min(max_backtrack, len(frames)) + 1):
            prev, n_steps, pmoves, idx = frames[-depth]
            if idx + 1 < len(pmoves) and events < max_backtrack_events:
                events += 1
                del frames[-depth:]
                del steps[n_steps:]
                frames.append((prev, n_steps, pmoves, idx + 1))
                st, step = _take(prev, pmoves[idx + 1])
                steps.append(step)
                resumed = True
                break
        if not resumed:
            raise Stalled(
                f"no legal move with {len(st.residual.cells(2))} triangles left", st, steps
            )
    while True:
        adj = st.residual.adjacency()
        free = next(
            (
                e for e in st.residual.simplices(1)
                if any(len(adj[v]) == 1 for v in e) and not st.residual.cofaces(e)
            ),
            None,
        )
        if free is None:
            break
        st, step = _apply(st, StepKind.OP_III, *_plan_op_III(st, free), True)
        steps.append(step)
    residual_chi = euler_characteristic(st.residual)
    relaxed = next((i for i, s in enumerate(steps) if not s.simple), None)
    return ReductionTrace(
        steps=steps,
        residual=st.residual,
        residual_chi=residual_chi,
        total_chi=residual_chi + 1,
        original_chi=chi,
        hole_boundary=st.hole_boundary,
        relaxed_from=relaxed,
        backtracks=events,
    )
