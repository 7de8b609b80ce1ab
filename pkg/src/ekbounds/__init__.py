"""Enestrom-Kakeya type eigenvalue localization for matrix polynomials."""

__version__ = "0.1.0"

from .bounds import (
    Annulus,
    BoundResult,
    Disk,
    ExclusionDisk,
    HypothesisWitness,
    TheoremId,
    all_bounds,
    bound_cor1,
    bound_thm1,
    bound_thm2,
    bound_thm3,
    bound_thm4,
    bound_thm_c,
    bound_thm_d,
    bound_thm_e,
    cone_witness,
    optimal_t_thm1,
    tightness_report,
)
from .eigensolve import Spectrum, dense_eigenvalues, polyeig
from .linalg_core import NormKind
from .matpoly import MatrixPolynomial, companion, evaluate, reverse, scale_argument

__all__ = [
    "Annulus", "BoundResult", "Disk", "ExclusionDisk", "HypothesisWitness", "MatrixPolynomial",
    "NormKind", "Spectrum", "TheoremId", "all_bounds", "bound_cor1", "bound_thm1",
    "bound_thm2", "bound_thm3", "bound_thm4", "bound_thm_c", "bound_thm_d", "bound_thm_e",
    "companion", "cone_witness", "dense_eigenvalues", "evaluate", "optimal_t_thm1",
    "polyeig", "reverse", "scale_argument", "tightness_report",
]
