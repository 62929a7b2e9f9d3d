"""Exact invariant theory of 2x2 matrix groups acting on a vector and a covector.

Subpackages by concern: finite fields (gf), sparse polynomials (poly), matrix
groups and actions (groups), exact linear algebra (linalg, kernels), the named
invariants and identity suite (invariants), Hilbert series (hilbert), graded
ring computations (ringcalc), and the command-line front end (cli).
"""

from .gf import FieldElem, FieldSpec, field_make
from .groups import ActionSpec, GroupId, GroupName, Mat2, group_id
from .hilbert import HilbertSeries, from_free_module, gorenstein_exponent, sl2_series_closed_form
from .invariants import InvariantCatalog, basis_catalog, basis_degrees, catalog, verify_identity
from .linalg import MatrixFq
from .poly import Poly, monomials_of_degree, parse_poly
from .ringcalc import (
    dimension_table,
    invariant_dimension,
    relative_trace,
    verify_free_basis,
    verify_generators,
)

__version__ = "0.1.0"

__all__ = [
    "ActionSpec",
    "FieldElem",
    "FieldSpec",
    "GroupId",
    "GroupName",
    "HilbertSeries",
    "InvariantCatalog",
    "Mat2",
    "MatrixFq",
    "Poly",
    "__version__",
    "basis_catalog",
    "basis_degrees",
    "catalog",
    "dimension_table",
    "field_make",
    "from_free_module",
    "gorenstein_exponent",
    "group_id",
    "invariant_dimension",
    "monomials_of_degree",
    "parse_poly",
    "relative_trace",
    "sl2_series_closed_form",
    "verify_free_basis",
    "verify_generators",
    "verify_identity",
]
