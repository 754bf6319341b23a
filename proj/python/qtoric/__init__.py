"""Exact checks for characteristic maps, cyclic polytopes and fans.

Function-level indices are 0-based; documents use 1-based indices.
"""

from ._core import (
    Error,
    coherent_orientation,
    cyclic_polar,
    determinant,
    euler_characteristic,
    f_vector,
    fixture_documents,
    fixture_names,
    gale_facets,
    gf2_solve,
    h_vector,
    origin_interior,
    parse_documents,
    run,
    search,
    sign_pattern,
    subcommand_names,
)

__all__ = [
    "Error",
    "coherent_orientation",
    "cyclic_polar",
    "determinant",
    "euler_characteristic",
    "f_vector",
    "fixture_documents",
    "fixture_names",
    "gale_facets",
    "gf2_solve",
    "h_vector",
    "origin_interior",
    "parse_documents",
    "run",
    "search",
    "sign_pattern",
    "subcommand_names",
]
