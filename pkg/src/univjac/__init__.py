"""Exact computations with the Picard groups of universal Jacobians over moduli of curves.

The subpackages split the work as follows:

* :mod:`~univjac.arith` for the integers attached to a genus and degree;
* :mod:`~univjac.dualgraph` and :mod:`~univjac.balanced` for the combinatorics of nodal fibres;
* :mod:`~univjac.picard` for free bases, boundary divisors and tautological classes;
* :mod:`~univjac.families` and :mod:`~univjac.compare` for independence and comparison results.
"""

__version__ = "0.1.0"

from .arith import GD, Invariants, invariants, normalize_degree, poincare_exists
from .balanced import (
    basic_bounds,
    enumerate_balanced,
    is_d_special,
    is_properly_balanced,
    is_strictly_balanced,
)
from .compare import alpha_d, compare_report, pic_J0
from .dualgraph import DualGraph, Stability, classify, stabilize, subcurves, vine
from .errors import DomainError, NotApplicable, RangeError, UnivJacError, VerificationError
from .families import UNKNOWN, family_F, family_Fh, family_Fprime, fh_integers, independence_matrix
from .picard import (
    PicElement,
    QClass,
    boundary_table,
    chi_d,
    grr_degree_one,
    membership_J,
    presentation,
    pullback_boundary,
    reduce_K,
    reduce_lambda,
    res_weight,
    theta_relation,
    topo_class,
    total_boundary,
    xi_element,
)


__all__ = [
    "__version__",
    "GD",
    "Invariants",
    "invariants",
    "normalize_degree",
    "poincare_exists",
    "basic_bounds",
    "enumerate_balanced",
    "is_d_special",
    "is_properly_balanced",
    "is_strictly_balanced",
    "alpha_d",
    "compare_report",
    "pic_J0",
    "DualGraph",
    "Stability",
    "classify",
    "stabilize",
    "subcurves",
    "vine",
    "DomainError",
    "NotApplicable",
    "RangeError",
    "UnivJacError",
    "VerificationError",
    "UNKNOWN",
    "family_F",
    "family_Fh",
    "family_Fprime",
    "fh_integers",
    "independence_matrix",
    "PicElement",
    "QClass",
    "boundary_table",
    "chi_d",
    "grr_degree_one",
    "membership_J",
    "presentation",
    "pullback_boundary",
    "reduce_K",
    "reduce_lambda",
    "res_weight",
    "theta_relation",
    "topo_class",
    "total_boundary",
    "xi_element",
]
