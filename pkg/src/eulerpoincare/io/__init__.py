"""File formats: the native SCX text format and OFF polygon meshes."""

from .off import PolygonMesh, fan_triangulate, parse_off, read_off
from .scx import parse_scx, read_scx, serialize_scx, write_scx

__all__ = [
    "PolygonMesh",
    "fan_triangulate",
    "parse_off",
    "read_off",
    "parse_scx",
    "read_scx",
    "serialize_scx",
    "write_scx",
]
