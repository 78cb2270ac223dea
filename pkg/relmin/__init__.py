# relmin/__init__.py

"""
relmin public API: exact scalars, the Cayley-Dickson tower, absolute values,
Heisenberg and unitriangular groups, and the witness engines.
"""

from relmin.algebra.scalars import parse_rational, format_rational, rational_arithmetic, sqrt_sum_leq
from relmin.algebra.cayley_dickson import (
    CDElement, Convention, cd_mul, cd_conjugate, cd_norm_form, cd_invert, cd_associator, cd_alternator,
    multiplication_table, find_composition_violation,
)
from relmin.algebra.absolute import (
    AbsValueDescriptor, abs_squared, padic_abs, padic_valuation, archimedean_witness, verify_axioms,
)
from relmin.groups.heisenberg import (
    BiadditiveMap, HeisenbergElement, Pairing, SubgroupFamily, w_eval, h_mul, h_inverse, h_commutator,
    commutator_closed_form, separatedness_witness, subgroup_membership,
)
from relmin.groups.unitriangular import (
    UniTriMatrix, ut_mul, ut_inverse, heisenberg_realization, corner_elem, tilde_membership,
    delete_reduction,
)
from relmin.witness.oracle import KroneckerOracle
from relmin.witness.engines import (
    EscalationRequest, escalate_unbounded, break_compatibility, break_compatibility_dual, coset_projection_eq,
)
from relmin.verify.suites import VerifyConfig, run_verify

__all__ = [
    "parse_rational", "format_rational", "rational_arithmetic", "sqrt_sum_leq",
    "CDElement", "Convention", "cd_mul", "cd_conjugate", "cd_norm_form", "cd_invert", "cd_associator",
    "cd_alternator", "multiplication_table", "find_composition_violation",
    "AbsValueDescriptor", "abs_squared", "padic_abs", "padic_valuation", "archimedean_witness", "verify_axioms",
    "BiadditiveMap", "HeisenbergElement", "Pairing", "SubgroupFamily", "w_eval", "h_mul", "h_inverse",
    "h_commutator", "commutator_closed_form", "separatedness_witness", "subgroup_membership",
    "UniTriMatrix", "ut_mul", "ut_inverse", "heisenberg_realization", "corner_elem", "tilde_membership",
    "delete_reduction",
    "KroneckerOracle",
    "EscalationRequest", "escalate_unbounded", "break_compatibility", "break_compatibility_dual",
    "coset_projection_eq",
    "VerifyConfig", "run_verify",
]
