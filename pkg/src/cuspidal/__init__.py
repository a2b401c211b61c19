"""Exact invariants of plane cusp singularities.

The package computes, over exact rationals: truncated standard bases for the
local weighted order, the semimodule of differential values of a cusp via
Delorme's algorithm, Newton-Puiseux parametrizations used as independent
value oracles, Jacobian-ideal standard bases with the Tjurina number, and
certified subsets of Bernstein-Sato roots through an exact residue
criterion backed by interval arithmetic.
"""
from __future__ import annotations

from .bernstein import (Certificate, CertificateError, DeltaSequence, FourReport,
                        GammaExpr, NegativeK, PreconditionViolation,
                        ResidueDecision, RootCandidate, RootDecision,
                        ZariskiReport, certified_roots_from_semimodule,
                        decide_root, delta_sequences, four_condition_check,
                        interval_certificate, residue, residue_is_zero,
                        zariski_condition_check)
from .curve import (CurveEquation, CuspidalSets, NoSolution, NotAdapted,
                    Parametrization, Semigroup, cuspidal_sets, newton_puiseux,
                    pullback_value)
from .differentials import (DifferentialBasis, OneForm, SemimoduleBasis,
                            ValueMismatch, aligned_t_horizon,
                            apply_vector_field, delorme, differential_value,
                            monomial_value, oracle_differential_value,
                            tuning_constant)
from .jacobian import (JacobianBasis, ReductionVanished, jacobian_basis_direct,
                       jacobian_basis_via_differentials, tjurina_number)
from .poly import (Exponent, Term, TruncatedPoly, WeightedOrder, divides,
                   leading, partial_derivative, poly_from_terms)
from .rationals import Rat, rat, rat_str
from .semimodules import (AbstractSemimodule, FourClassification, Unclassifiable,
                          axes_and_criticals, classify_four, elements_outside,
                          enumerate_increasing, membership, validate_basis)
from .specfile import (CoefficientOutsideJ, CurveSpec, InvalidPair, ParseError,
                       SpecError, parse_spec)
from .standard_basis import (FDividesXf, FinalReduction, HorizonExhausted,
                             ReductionStatus, StandardBasis, basis_of_Xf_f,
                             buchberger, codimension, final_reduction,
                             reduce_step, s_process_min)

__version__ = "0.1.0"

__all__ = [
    "AbstractSemimodule", "Certificate", "CertificateError",
    "CoefficientOutsideJ", "CurveEquation", "CurveSpec", "CuspidalSets",
    "DeltaSequence", "DifferentialBasis", "Exponent", "FDividesXf",
    "FinalReduction", "FourClassification", "FourReport", "GammaExpr",
    "HorizonExhausted", "InvalidPair", "JacobianBasis", "NegativeK",
    "NoSolution", "NotAdapted", "OneForm", "Parametrization", "ParseError",
    "PreconditionViolation", "Rat", "ReductionStatus", "ReductionVanished",
    "ResidueDecision", "RootCandidate", "RootDecision", "Semigroup",
    "SemimoduleBasis", "SpecError", "StandardBasis", "Term", "TruncatedPoly",
    "Unclassifiable", "ValueMismatch", "WeightedOrder", "ZariskiReport",
    "aligned_t_horizon", "apply_vector_field", "axes_and_criticals",
    "basis_of_Xf_f", "buchberger", "certified_roots_from_semimodule",
    "classify_four", "codimension", "cuspidal_sets", "decide_root",
    "delorme", "delta_sequences", "differential_value", "divides",
    "elements_outside", "enumerate_increasing", "four_condition_check",
    "interval_certificate", "jacobian_basis_direct",
    "jacobian_basis_via_differentials", "leading", "membership",
    "monomial_value", "newton_puiseux", "oracle_differential_value",
    "parse_spec", "partial_derivative", "poly_from_terms", "pullback_value",
    "rat", "rat_str", "reduce_step", "residue", "residue_is_zero",
    "s_process_min", "tjurina_number", "tuning_constant", "validate_basis",
    "zariski_condition_check",
]
