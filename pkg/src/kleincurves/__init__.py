"""Exact projective invariants of rational curves, contact curves in P^3 and
the Klein correspondence with null curves in the quadric Q^3."""
from .classification import (
    VERIFIERS,
    enumerate_profiles,
    verify_all,
    verify_deg4_uniqueness,
    verify_deg5_nonexistence,
    verify_deg6_classification,
    verify_deg7_branched_example,
    verify_deg7_unbranched_nonexistence,
)
from .contact import (
    SymplecticForm,
    contact_family,
    contact_ramification_report,
    is_contact,
    recover_beta,
)
from .curves import (
    ProjectiveCurve,
    associated_curve,
    degree,
    dual_curve,
    first_ramification_divisor,
    is_nondegenerate,
    normalize,
    plucker_report,
    ramification_divisor,
    ramification_divisors,
    vanishing_sequence,
    wronskian,
)
from .divisors import INF, AlgebraicLocus, Divisor, FinitePoint, Infinity, valuation
from .errors import *  # noqa: F401,F403
from .field import I, QI, GaussianRational, parse_field
from .klein import (
    NullCurve,
    WModel,
    build_w_model,
    complete_null,
    is_null_curve,
    klein_forward,
    klein_inverse,
    model_change,
)
from .linalg import kernel_basis
from .multipoly import MultiPoly, fraction_free_det
from .poly import RatFunction, UniPoly, coprime_squarefree_basis

__version__ = "0.1.0"
