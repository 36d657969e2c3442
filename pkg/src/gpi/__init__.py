"""Generalized polynomial identities of finite-dimensional W-algebras."""

from .algebra import WAction, WSuperAlgebra, builtin, load_algebra, semidirect
from .engine import (
    FreeModel,
    VerificationError,
    capelli_report,
    cocharacter,
    codimension,
    gl_pipeline_multiplicities,
    hilbert_truncated,
    is_identity,
    multidegree_dimension,
    multiplicity_bound_check,
)
from .gpoly import GenPoly, GradedGenPoly, multilinear_basis, parse_genpoly, tilde
from .superalg import envelope, graded_is_identity, tilde_correspondence_check

__all__ = [
    "FreeModel",
    "GenPoly",
    "GradedGenPoly",
    "VerificationError",
    "WAction",
    "WSuperAlgebra",
    "builtin",
    "capelli_report",
    "cocharacter",
    "codimension",
    "envelope",
    "gl_pipeline_multiplicities",
    "graded_is_identity",
    "hilbert_truncated",
    "is_identity",
    "load_algebra",
    "multidegree_dimension",
    "multilinear_basis",
    "multiplicity_bound_check",
    "parse_genpoly",
    "semidirect",
    "tilde",
    "tilde_correspondence_check",
]
