"""SCX: a line-oriented listing of maximal simplices.

::

    scx 1
    # tetrahedron boundary
    0 1 2
    0 1 3
    0 2 3
    1 2 3

The first non-blank, non-comment line must be ``scx 1``.  Each further line
holds one simplex as whitespace-separated non-negative vertex ids; ``#``
starts a comment.  Faces are recomputed on load.
"""

from __future__ import annotations

from ..errors import DegenerateSimplex, DuplicateMaximalFace, ParseError
from ..simplicial import SimplicialComplex

HEADER = "scx 1"


def parse_scx(text: str) -> SimplicialComplex:
    header_seen = False
    seen: dict = {}
    listed = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            if line.split() != HEADER.split():
                raise ParseError(f"expected header {HEADER!r}, got {line!r}", lineno)
            header_seen = True
            continue
        try:
            vs = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"vertex ids must be integers: {line!r}", lineno) from None
        if any(v < 0 for v in vs):
            raise ParseError(f"vertex ids must be non-negative: {line!r}", lineno)
        if len(set(vs)) != len(vs):
            raise DegenerateSimplex(f"repeated vertex in {vs}", lineno)
        key = tuple(sorted(vs))
        if key in seen:
            raise DuplicateMaximalFace(
                f"simplex {list(key)} already listed on line {seen[key]}", lineno
            )
        seen[key] = lineno
        listed.append(key)
    if not header_seen:
        raise ParseError(f"missing {HEADER!r} header", 1)
    return SimplicialComplex.from_maximal(listed)


def serialize_scx(c: SimplicialComplex) -> str:
    """Header plus the maximal simplices in lexicographic order, one per line."""
    lines = [HEADER]
    lines += [" ".join(map(str, s)) for s in sorted(c.maximal_simplices())]
    return "\n".join(lines) + "\n"


def read_scx(path) -> SimplicialComplex:
    with open(path) as f:
        return parse_scx(f.read())


def write_scx(c: SimplicialComplex, path) -> None:
    with open(path, "w") as f:
        f.write(serialize_scx(c))
