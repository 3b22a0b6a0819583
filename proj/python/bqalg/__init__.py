"""Monomial algebras of bound quivers.

Relations are lists of arrow ids in traversal order. Modules are named as on
the command line: ``"P:1"``, ``"S:2"``, ``"Delta:3"``, ``"Gamma:1"`` or
``"M:1:a,b"``. Infinite dimensions are reported as ``math.inf``.
"""

from ._bqalg import (
    Algebra,
    Error,
    InfiniteResolutionError,
    InternalError,
    InvalidInput,
    NotAdmissibleError,
    ParseError,
    Quiver,
    achieve_gldim,
    build_I,
    build_Idoubleprime,
    build_Iprime,
    emit_qv,
    gldim,
    gldim2_exists,
    is_strongly_qh,
    matrix_resolve,
    parse_qv,
    pdim,
    render_dot,
    resolve,
    run_cli,
    simple_pdims,
)

__all__ = [
    "Algebra",
    "Error",
    "InfiniteResolutionError",
    "InternalError",
    "InvalidInput",
    "NotAdmissibleError",
    "ParseError",
    "Quiver",
    "achieve_gldim",
    "build_I",
    "build_Idoubleprime",
    "build_Iprime",
    "emit_qv",
    "gldim",
    "gldim2_exists",
    "is_strongly_qh",
    "matrix_resolve",
    "parse_qv",
    "pdim",
    "render_dot",
    "resolve",
    "run_cli",
    "simple_pdims",
]
