"""
eulerpoincare: Euler characteristic and surface topology of simplicial complexes
================================================================================

Submodules
----------
simplicial
    Abstract simplicial complexes in any dimension, face closure, validation,
    simplex counts, Euler characteristic, stellar subdivision.
orientation
    Oriented simplices, integer chains, the boundary operator and the
    orientability test for 2-complexes.
surfaces
    Vertex links, closed and pseudo-surface recognition, classification by
    genus, connected sums.
cauchy
    The triangle-removal reduction with a full step trace.
builders
    Standard triangulations (spheres, torus, Klein bottle, projective plane,
    pinched torus, genus-g and k-crosscap surfaces).
io
    SCX and OFF readers and writers, fan triangulation of polygon meshes.
cli
    The ``eulerpoincare`` command.
"""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .simplicial import (
    SimplicialComplex,
    ValidationReport,
    counts,
    euler_characteristic,
    faces,
    from_maximal,
    simplex,
    star_subdivide,
    validate,
)
from .orientation import (
    Chain,
    NonOrientable,
    Orientable,
    OrientedSimplex,
    boundary,
    boundary_chain,
    compatible_orientation,
    orient,
    orientability_check,
)
from .surfaces import SurfaceReport, classify, connected_sum, surface_kind, vertex_link
from .cauchy import ReductionTrace, apply_op_I, apply_op_II, apply_op_III, reduce, seed
from .builders import ModelId, build, model_catalog
