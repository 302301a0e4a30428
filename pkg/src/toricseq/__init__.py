"""Cech resolutions and spectral-sequence pages for complete toric fans.

Exact integer arithmetic throughout; see :mod:`toricseq.cli` for the
command-line interface.
"""

from .builtins import builtin, builtin_fan, parse_fan
from .cech import augmentation_check, build_cech_complex, cech_homology, fiber_complex
from .cells import dual_cell_subcomplex, flag_complex, oracle_report, simplicial_homology
from .linalg import FgAbGroup, IntMatrix, homology_at, kernel_basis, smith_normal_form, wedge_power_matrix
from .polyhedral import Cone, Fan, incidence_sign, quotient_fan, validate_fan
from .spectral import betti_table, build_d1, build_E1, compute_E2, morphic_table

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "Fan",
    "FgAbGroup",
    "IntMatrix",
    "augmentation_check",
    "betti_table",
    "build_E1",
    "build_cech_complex",
    "build_d1",
    "builtin",
    "builtin_fan",
    "cech_homology",
    "compute_E2",
    "dual_cell_subcomplex",
    "fiber_complex",
    "flag_complex",
    "homology_at",
    "incidence_sign",
    "kernel_basis",
    "morphic_table",
    "oracle_report",
    "parse_fan",
    "quotient_fan",
    "simplicial_homology",
    "smith_normal_form",
    "validate_fan",
    "wedge_power_matrix",
]
