"""Quantum LDPC codes from Euclidean geometries EG(m,q)."""

from ._egqldpc import (
    CssCode,
    Error,
    Field,
    b_coefficient,
    build_code,
    claim_check,
    exact_distance,
    geometry_stats,
    lines,
    nullspace_basis,
    paper_params,
    parse_alist,
    point_coords,
    rank,
    self_orth_check,
    verify_distance_floor,
    write_alist,
)

__version__ = "0.1.0"
