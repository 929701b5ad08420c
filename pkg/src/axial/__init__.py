"""Exact computations with primitive axes in finite-dimensional algebras over Q."""

from axial.algebra import AlgebraTable, Element, left_operator, multiply, right_operator, subalgebra_closure
from axial.axis import (AxisProfile, FrameError, TwoGeneratedFrame, TwoSidedDecomposition, build_frame,
                        check_fusion, classify_axis, decompose, find_idempotents)
from axial.constructions import (FischerSpace, dim2_algebra, fischer_space, load_fischer_space, matrix_unit_algebra,
                                 matsuo_algebra, one_line_space, transposition_space)
from axial.errors import InputError
from axial.formats import dump_algebra, load_algebra
from axial.kernels import BACKEND
from axial.linalg import Matrix, Polynomial, Subspace, minimal_polynomial
from axial.miyamoto import AlgebraMap, axis_orbit, is_automorphism, tau, tau_delta, tau_diag, tau_lambda
from axial.report import ReportEntry, VerificationReport
from axial.verify import run_suites, verify_main_theorem

__version__ = "0.1.0"

__all__ = [
    "AlgebraMap", "AlgebraTable", "AxisProfile", "BACKEND", "Element", "FischerSpace", "FrameError", "InputError",
    "Matrix", "Polynomial", "ReportEntry", "Subspace", "TwoGeneratedFrame", "TwoSidedDecomposition",
    "VerificationReport", "axis_orbit", "build_frame", "check_fusion", "classify_axis", "decompose",
    "dim2_algebra", "dump_algebra", "find_idempotents", "fischer_space", "is_automorphism", "left_operator",
    "load_algebra", "load_fischer_space", "matrix_unit_algebra", "matsuo_algebra", "minimal_polynomial",
    "multiply", "one_line_space", "right_operator", "run_suites", "subalgebra_closure", "tau", "tau_delta",
    "tau_diag", "tau_lambda", "transposition_space", "verify_main_theorem",
]
