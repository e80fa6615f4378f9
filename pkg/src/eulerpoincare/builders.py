"""Ready-made triangulations: spheres, torus, Klein bottle, projective plane,
pinched torus, and the genus-g / k-crosscap families built by connected sum.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidParameter
from .simplicial import SimplicialComplex, validate
from .surfaces import SurfaceReport, connected_sum, surface_label

MODEL_NAMES = (
    "sphere-tetra",
    "sphere-cube",
    "torus",
    "klein",
    "projective-plane",
    "pinched-torus",
    "genus",
    "crosscaps",
)
_PARAMETRIC = {"genus": 0, "crosscaps": 1}  # smallest admissible parameter


@dataclass(frozen=True)
class ModelId:
    name: str
    param: int | None = None

    def __post_init__(self):
        if self.name not in MODEL_NAMES:
            raise InvalidParameter(f"unknown model {self.name!r}")
        if self.name in _PARAMETRIC:
            lo = _PARAMETRIC[self.name]
            if not isinstance(self.param, int) or isinstance(self.param, bool) or self.param < lo:
                raise InvalidParameter(f"{self.name} needs an integer parameter >= {lo}, got {self.param!r}")
        elif self.param is not None:
            raise InvalidParameter(f"{self.name} takes no parameter")

    def __str__(self) -> str:
        return self.name if self.param is None else f"{self.name}({self.param})"

    @classmethod
    def parse(cls, text: str) -> "ModelId":
        """Accepts ``torus``, ``genus(3)``, ``genus-3``, ``genus:3`` or ``genus3``."""
        m = re.fullmatch(r"\s*([a-z-]+?)(?:[(:\-]?(\d+)\)?)?\s*", text.lower())
        if not m:
            raise InvalidParameter(f"cannot parse model name {text!r}")
        name, num = m.group(1), m.group(2)
        return cls(name, None if num is None else int(num))


def _as_model(m) -> ModelId:
    return m if isinstance(m, ModelId) else ModelId.parse(m)


def tetrahedron() -> SimplicialComplex:
    return SimplicialComplex.from_maximal([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


# cube corners are labelled by their binary coordinates x + 2y + 4z
_CUBE_QUADS = [
    (0, 1, 3, 2),
    (4, 6, 7, 5),
    (0, 4, 5, 1),
    (2, 3, 7, 6),
    (0, 2, 6, 4),
    (1, 5, 7, 3),
]


def cube() -> SimplicialComplex:
    """Cube boundary with each square split along the diagonal from its first corner."""
    tris = []
    for a, b, c, d in _CUBE_QUADS:
        tris += [(a, b, c), (a, c, d)]
    return SimplicialComplex.from_maximal(tris)


def grid_quotient(n: int = 3, twisted: bool = False) -> SimplicialComplex:
    """n-by-n grid with opposite sides identified, every square cut along the same diagonal.

    With ``twisted`` the second pair of sides is glued with a reversal, which
    gives the Klein bottle instead of the torus.
    """
    if n < 3:
        raise InvalidParameter("grid quotients need n >= 3 to be simplicial")

    def vid(i, j):
        if twisted and i == n:
            i, j = 0, -j
        return (i % n) * n + (j % n)

    tris = []
    for i in range(n):
        for j in range(n):
            a, b, c, d = vid(i, j), vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)
            tris += [(a, b, d), (a, c, d)]
    return SimplicialComplex.from_maximal(tris)


def projective_plane() -> SimplicialComplex:
    """The 6-vertex, 10-triangle projective plane."""
    return SimplicialComplex.from_maximal([
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
        (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
    ])


def pinched_torus() -> SimplicialComplex:
    """Triangular cylinder whose two end circles are both coned to vertex 6."""
    apex = 6
    lo, hi = (0, 1, 2), (3, 4, 5)
    tris = []
    for i in range(3):
        j = (i + 1) % 3
        tris += [(lo[i], lo[j], hi[i]), (lo[j], hi[i], hi[j])]
        tris += [(apex, lo[i], lo[j]), (apex, hi[i], hi[j])]
    return SimplicialComplex.from_maximal(tris)


@lru_cache(maxsize=None)
def _build(m: ModelId) -> SimplicialComplex:
    if m.name == "sphere-tetra":
        return tetrahedron()
    if m.name == "sphere-cube":
        return cube()
    if m.name == "torus":
        return grid_quotient(3)
    if m.name == "klein":
        return grid_quotient(3, twisted=True)
    if m.name == "projective-plane":
        return projective_plane()
    if m.name == "pinched-torus":
        return pinched_torus()
    if m.name == "genus":
        if m.param == 0:
            return tetrahedron()
        if m.param == 1:
            return grid_quotient(3)
        return connected_sum(_build(ModelId("genus", m.param - 1)), grid_quotient(3))
    if m.name == "crosscaps":
        if m.param == 1:
            return projective_plane()
        return connected_sum(_build(ModelId("crosscaps", m.param - 1)), projective_plane())
    raise InvalidParameter(str(m))  # unreachable: ModelId validates names


def build(m) -> SimplicialComplex:
    """Build a model by :class:`ModelId` or by name (``"torus"``, ``"genus(2)"``...)."""
    m = _as_model(m)
    c = _build(m)
    report = validate(c, require_pure=2)
    assert report.ok, f"builder {m} produced an invalid complex: {report.findings()[:3]}"
    return c


def expected_report(m) -> SurfaceReport:
    """Classification each model is known to have."""
    m = _as_model(m)
    if m.name == "pinched-torus":
        return SurfaceReport(1, False, "pseudo", [6], True, None, "pseudo-surface with 1 pinch vertex")
    if m.name in ("sphere-tetra", "sphere-cube"):
        orientable, genus = True, 0
    elif m.name == "torus":
        orientable, genus = True, 1
    elif m.name == "klein":
        orientable, genus = False, 2
    elif m.name == "projective-plane":
        orientable, genus = False, 1
    elif m.name == "genus":
        orientable, genus = True, m.param
    else:
        orientable, genus = False, m.param
    chi = 2 - 2 * genus if orientable else 2 - genus
    return SurfaceReport(chi, True, "closed", [], orientable, genus, surface_label(orientable, genus))


CATALOG_MODELS = (
    ModelId("sphere-tetra"),
    ModelId("sphere-cube"),
    ModelId("torus"),
    ModelId("klein"),
    ModelId("projective-plane"),
    ModelId("pinched-torus"),
    ModelId("genus", 2),
    ModelId("crosscaps", 3),
)


def model_catalog() -> list:
    """One representative per model kind, paired with its expected report."""
    return [(m, expected_report(m)) for m in CATALOG_MODELS]
