"""Recognition and drawing of cubic graphs on 3D integer grid lines.

Graphs are passed as ``(n, edges)`` with ``edges`` a list of vertex pairs;
faces are lists of vertex cycles.  All functions return plain dicts.
"""

from ._core import (
    builtin,
    builtin_names,
    ccc,
    check_surface,
    classify,
    grid_mod,
    prism,
    recognize,
    recognize_all,
)

__all__ = [
    "builtin",
    "builtin_names",
    "ccc",
    "check_surface",
    "classify",
    "grid_mod",
    "prism",
    "recognize",
    "recognize_all",
]
