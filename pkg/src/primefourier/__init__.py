"""Exact cyclotomic arithmetic over prime cyclic groups and what it buys:
every square minor of the p x p Fourier matrix is nonsingular, non-zero
signals obey |supp f| + |supp fhat| >= p + 1, and k-sparse signals are
recovered exactly from any 2k spectral samples.
"""

from . import errors
from .cyclotomic import (
    CycInt,
    CycRat,
    Prime,
    Valuation,
    cycrat_inverse,
    divide_by_one_minus_omega,
    galois_conjugate,
    is_prime,
    omega,
    omega_pow,
    one_minus_omega,
    reduce_mod_one_minus_omega,
    valuation_and_cofactor,
    valuation_one_minus_omega,
)
from .fourier_minors import (
    CompositeCounterexample,
    DescentTrace,
    FourierMinor,
    IndexSet,
    SparseCycPoly,
    VerificationReport,
    build_minor,
    composite_counterexample,
    descent_trace,
    determinant,
    is_nonzero_minor,
    verify_all_minors,
)
from .fp_poly import (
    BoundScanReport,
    FpPoly,
    FpScalar,
    MultiplicityBound,
    exhaustive_bound_scan,
    multiplicity_bound,
    random_bound_scan,
)
from .recovery import (
    AuditReport,
    MeasurementSet,
    RecoveryResult,
    measure,
    recover,
    uniqueness_audit,
)
from .uncertainty import (
    Signal,
    Spectrum,
    UncertaintyReport,
    construct_extremal,
    dft,
    idft,
    support,
    uncertainty_check,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "Prime",
    "CycInt",
    "CycRat",
    "Valuation",
    "is_prime",
    "omega",
    "omega_pow",
    "one_minus_omega",
    "reduce_mod_one_minus_omega",
    "divide_by_one_minus_omega",
    "valuation_one_minus_omega",
    "valuation_and_cofactor",
    "cycrat_inverse",
    "galois_conjugate",
    "FpScalar",
    "FpPoly",
    "MultiplicityBound",
    "BoundScanReport",
    "multiplicity_bound",
    "exhaustive_bound_scan",
    "random_bound_scan",
    "IndexSet",
    "FourierMinor",
    "SparseCycPoly",
    "DescentTrace",
    "VerificationReport",
    "CompositeCounterexample",
    "build_minor",
    "determinant",
    "is_nonzero_minor",
    "verify_all_minors",
    "composite_counterexample",
    "descent_trace",
    "Signal",
    "Spectrum",
    "UncertaintyReport",
    "dft",
    "idft",
    "support",
    "uncertainty_check",
    "construct_extremal",
    "MeasurementSet",
    "RecoveryResult",
    "AuditReport",
    "measure",
    "recover",
    "uniqueness_audit",
]
