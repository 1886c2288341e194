"""Exact solver for Lie algebra extension problems.

Structures travel as text in the same line-oriented formats the ``liext``
command-line tool reads and writes; scalars are exact literals such as
``"-3/7"``. See :func:`check`, :func:`product`, :func:`census` and friends.
"""

from ._core import (
    AxiomFailure,
    FormatError,
    SolverError,
    bijection,
    catalog_algebra,
    catalog_names,
    census,
    check,
    check_pair,
    codim1,
    cohomologous,
    derivation_dims,
    dspace_dim,
    equivalent,
    extract,
    lambda_dim,
    product,
)

__all__ = [
    "AxiomFailure",
    "FormatError",
    "SolverError",
    "bijection",
    "catalog_algebra",
    "catalog_names",
    "census",
    "check",
    "check_pair",
    "codim1",
    "cohomologous",
    "derivation_dims",
    "dspace_dim",
    "equivalent",
    "extract",
    "lambda_dim",
    "product",
]
