"""
Seeded property suites behind `relmin verify`.

Every suite returns a list of PropertyResult; violations are tallied, never
raised. Reports hold no timestamps, so equal configs give identical JSON.
"""
import json
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil
from typing import Any, Dict, List

from relmin.algebra.absolute import AbsValueDescriptor, archimedean_witness, verify_axioms
from relmin.algebra.cayley_dickson import (
    MAX_LEVEL,
    CDElement,
    Convention,
    cd_alternator,
    cd_associator,
    cd_conjugate,
    cd_invert,
    cd_mul,
    cd_norm_form,
    find_alternativity_counterexample,
    find_associator_counterexample,
    find_composition_violation,
)
from relmin.codec import encode_cd, encode_heisenberg, encode_rational, encode_vector
from relmin.errors import IndexRangeError, MalformedInputError, NotInTildeSubgroupError, PreconditionError
from relmin.groups.heisenberg import (
    MAX_SCALAR_LEVEL,
    BiadditiveMap,
    HeisenbergElement,
    Pairing,
    SubgroupFamily,
    commutator_closed_form,
    h_commutator,
    h_inverse,
    separatedness_witness,
    subgroup_membership,
    w_eval,
)
from relmin.groups.unitriangular import (
    CornerCase,
    corner_case,
    corner_elem,
    corner_in_subset_b,
    delete_reduction,
    elementary,
    heisenberg_realization,
    in_relatively_minimal_subset,
    matrix_to_heisenberg,
    off_diagonal_support,
    pad_to_tilde,
    reduced_corner_position,
    tilde_membership,
    ut_inverse,
    ut_mul,
)
from relmin.report.models import PropertyResult
from relmin.verify.config import (
    ARCHIMEDEAN_SEARCH_BOUND,
    CORNER_SAMPLES,
    ESCALATION_LEVELS,
    ESCALATION_N0,
    ESCALATION_R,
    PADIC_PRIMES,
    REDUCTION_MAX_DIM,
    STRUCTURED_SEARCH_BOUND,
    SUMSET_SAMPLES,
)
from relmin.verify.sampling import Sampler
from relmin.witness.engines import (
    EscalationRequest,
    break_compatibility,
    break_compatibility_dual,
    check_shrink_contract,
    coset_projection_eq,
    coset_representative,
    escalate_unbounded,
    project,
)
from relmin.witness.oracle import KroneckerOracle

logger = logging.getLogger(__name__)


class Suite(str, Enum):
    CD_AXIOMS = "cd_axioms"
    ABS_AXIOMS = "abs_axioms"
    HEISENBERG_AXIOMS = "heisenberg_axioms"
    MATRIX_REALIZATION = "matrix_realization"
    REDUCTION_ISO = "reduction_iso"
    WITNESSES = "witnesses"


_MAX_LEVEL_FOR = {
    Suite.CD_AXIOMS: MAX_LEVEL,
    Suite.ABS_AXIOMS: MAX_LEVEL,
    Suite.HEISENBERG_AXIOMS: MAX_SCALAR_LEVEL,
    Suite.MATRIX_REALIZATION: MAX_SCALAR_LEVEL,
    Suite.REDUCTION_ISO: 0,
    Suite.WITNESSES: MAX_SCALAR_LEVEL,
}


@dataclass(frozen=True)
class VerifyConfig:
    suite: Suite
    samples: int = 200
    seed: int = 0
    level: int = 0
    dim: int = 2
    coeff_magnitude: int = 10

    def __post_init__(self):
        try:
            object.__setattr__(self, "suite", Suite(self.suite))
        except ValueError:
            raise MalformedInputError(f"unknown suite {self.suite!r}")
        for name in ("samples", "seed", "level", "dim", "coeff_magnitude"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise MalformedInputError(f"{name} must be an integer; got {value!r}")
        if self.samples < 1:
            raise MalformedInputError(f"samples must be >= 1; got {self.samples}")
        if not 0 <= self.seed < 2 ** 64:
            raise MalformedInputError(f"seed must be a 64-bit unsigned integer; got {self.seed}")
        if self.dim < 1:
            raise MalformedInputError(f"dim must be >= 1; got {self.dim}")
        if self.coeff_magnitude < 1:
            raise MalformedInputError(f"coeff_magnitude must be >= 1; got {self.coeff_magnitude}")
        top = _MAX_LEVEL_FOR[self.suite]
        if not 0 <= self.level <= top:
            raise MalformedInputError(f"suite {self.suite.value} needs level in 0..{top}; got {self.level}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite.value,
            "samples": self.samples,
            "seed": self.seed,
            "level": self.level,
            "dim": self.dim,
            "coeff_magnitude": self.coeff_magnitude,
        }


def _elements(**elements) -> Dict[str, Any]:
    return {name: encode_cd(x) for name, x in elements.items()}


def _prefixed(prefix: str, results: List[PropertyResult]) -> List[PropertyResult]:
    for result in results:
        result.name = f"{prefix}.{result.name}"
    return results


class PropertySuites:
    def __init__(self, config: VerifyConfig):
        self.config = config
        self.sampler = Sampler(config.seed, config.coeff_magnitude)

    def run(self) -> List[PropertyResult]:
        logger.debug("running suite %s", self.config.to_dict())
        return getattr(self, self.config.suite.value)()

    # ----------------------
    # Cayley-Dickson algebras
    # ----------------------

    def cd_axioms(self) -> List[PropertyResult]:
        level, s = self.config.level, self.sampler
        composition = PropertyResult("composition")
        anti = PropertyResult("conjugation_anti_automorphism")
        norm_identity = PropertyResult("norm_identity")
        opposite = PropertyResult("literal_is_opposite")
        results = [composition, anti, norm_identity, opposite]
        inverse = PropertyResult("two_sided_inverse") if level <= 3 else None
        alternative = PropertyResult("alternativity") if level <= 3 else None
        associative = PropertyResult("associativity") if level <= 2 else None
        commutative = PropertyResult("commutativity") if level <= 1 else None
        results += [r for r in (inverse, alternative, associative, commutative) if r is not None]
        one = CDElement.one(level)

        for index in range(self.config.samples):
            x, y = s.cd(level), s.cd(level)
            xy = cd_mul(x, y)
            if level <= 3:
                composition.record(
                    cd_norm_form(xy) == cd_norm_form(x) * cd_norm_form(y),
                    lambda: _elements(x=x, y=y), index)
            anti.record(cd_conjugate(xy) == cd_mul(cd_conjugate(y), cd_conjugate(x)),
                        lambda: _elements(x=x, y=y), index)
            norm_identity.record(cd_mul(x, cd_conjugate(x)) == CDElement.scalar(level, cd_norm_form(x)),
                                 lambda: _elements(x=x), index)
            opposite.record(cd_mul(x, y, Convention.LITERAL) == cd_mul(y, x),
                            lambda: _elements(x=x, y=y), index)
            if inverse is not None and not x.is_zero():
                inv = cd_invert(x)
                inverse.record(cd_mul(x, inv) == one and cd_mul(inv, x) == one,
                               lambda: _elements(x=x), index)
            if alternative is not None:
                right = cd_mul(cd_mul(y, x), x) - cd_mul(y, cd_mul(x, x))
                alternative.record(cd_alternator(x, y).is_zero() and right.is_zero(),
                                   lambda: _elements(x=x, y=y), index)
            if associative is not None:
                z = s.cd(level)
                associative.record(cd_associator(x, y, z).is_zero(),
                                   lambda: _elements(x=x, y=y, z=z), index)
            if commutative is not None:
                commutative.record(xy == cd_mul(y, x), lambda: _elements(x=x, y=y), index)

        if level == 4:
            pair = find_composition_violation(level, STRUCTURED_SEARCH_BOUND)
            if pair is not None:
                x, y = pair
                composition.record(False, {
                    **_elements(x=x, y=y),
                    "abs_sq_product": encode_rational(cd_norm_form(cd_mul(x, y))),
                    "product_of_abs_sq": encode_rational(cd_norm_form(x) * cd_norm_form(y)),
                })
            else:
                composition.record(True)
            found = find_alternativity_counterexample(level)
            counterexample = PropertyResult("alternativity_counterexample")
            counterexample.expect_found(_elements(x=found[0], y=found[1]) if found else None, {"level": level})
            results.append(counterexample)
        if level == 3:
            found = find_associator_counterexample(level)
            counterexample = PropertyResult("associator_counterexample")
            counterexample.expect_found(
                _elements(x=found[0], y=found[1], z=found[2]) if found else None, {"level": level})
            results.append(counterexample)
        return results

    # ----------------------
    # Absolute values
    # ----------------------

    def abs_axioms(self) -> List[PropertyResult]:
        level, s, samples = self.config.level, self.sampler, self.config.samples
        desc = AbsValueDescriptor.euclidean(level)
        pairs = [(s.cd(level), s.cd(level)) for _ in range(samples)]
        results = _prefixed(desc.describe(), verify_axioms(desc, pairs))
        archimedean = PropertyResult(f"{desc.describe()}.archimedean_witness")
        n0 = archimedean_witness(desc, ARCHIMEDEAN_SEARCH_BOUND)
        archimedean.expect_found({"n0": n0} if n0 is not None else None,
                                 {"bound": ARCHIMEDEAN_SEARCH_BOUND})
        results.append(archimedean)

        for p in PADIC_PRIMES:
            desc = AbsValueDescriptor.padic(p)
            pairs = [(s.rational(), s.rational()) for _ in range(samples)]
            results += _prefixed(desc.describe(), verify_axioms(desc, pairs))
            bounded = PropertyResult(f"{desc.describe()}.non_archimedean")
            n0 = archimedean_witness(desc, ARCHIMEDEAN_SEARCH_BOUND)
            bounded.record(n0 is None, {"n0": n0})
            results.append(bounded)
        return results

    # ----------------------
    # Heisenberg groups
    # ----------------------

    def heisenberg_axioms(self) -> List[PropertyResult]:
        results = []
        for pairing in Pairing:
            w = BiadditiveMap(self.config.level, self.config.dim, pairing)
            results += _prefixed(pairing.value, self._heisenberg_for(w))
        return results

    def _heisenberg_for(self, w: BiadditiveMap) -> List[PropertyResult]:
        s, level, n = self.sampler, w.scalar_level, w.dim
        associativity = PropertyResult("associativity")
        identity = PropertyResult("identity")
        inverse = PropertyResult("inverse")
        commutator = PropertyResult("commutator_closed_form")
        central = PropertyResult("commutators_central")
        separated = PropertyResult("separatedness")
        closure = PropertyResult("subgroup_closure")
        subgroups = [family for family in SubgroupFamily if family.is_subgroup]
        e = HeisenbergElement.identity(w)

        for index in range(self.config.samples):
            u1, u2, u3 = s.heisenberg(w), s.heisenberg(w), s.heisenberg(w)
            triple = lambda: {"u1": encode_heisenberg(u1), "u2": encode_heisenberg(u2),
                              "u3": encode_heisenberg(u3)}
            associativity.record((u1 * u2) * u3 == u1 * (u2 * u3), triple, index)
            identity.record(e * u1 == u1 and u1 * e == u1, triple, index)
            inv = h_inverse(u1)
            inverse.record((u1 * inv).is_identity() and (inv * u1).is_identity(), triple, index)
            bracket = h_commutator(u1, u2)
            commutator.record(bracket == commutator_closed_form(u1, u2), triple, index)
            central.record(h_commutator(bracket, u3).is_identity(), triple, index)

            x0, f0 = s.nonzero_vector(level, n), s.nonzero_vector(level, n)
            x, f = separatedness_witness(w, x0, f0)
            separated.record(not w_eval(w, x0, f).is_zero() and not w_eval(w, x, f0).is_zero(),
                             lambda: {"x0": encode_vector(x0), "f0": encode_vector(f0)}, index)

            family = subgroups[index % len(subgroups)]
            v1, v2 = s.heisenberg(w, family), s.heisenberg(w, family)
            closure.record(subgroup_membership(v1 * v2, family) and subgroup_membership(h_inverse(v1), family),
                           lambda: {"family": family.value, "u1": encode_heisenberg(v1),
                                    "u2": encode_heisenberg(v2)}, index)

        zero = CDElement.zero(level)
        u = HeisenbergElement(w, zero, w.zero_vector(), w.unit_vector(0))
        v = HeisenbergElement(w, zero, w.unit_vector(0), w.zero_vector())
        not_closed = PropertyResult("E_cross_F_not_closed")
        product = u * v
        not_closed.expect_found(
            None if subgroup_membership(product, SubgroupFamily.E_CROSS_F)
            else {"u1": encode_heisenberg(u), "u2": encode_heisenberg(v), "product": encode_heisenberg(product)},
            {"u1": encode_heisenberg(u), "u2": encode_heisenberg(v)})
        return [associativity, identity, inverse, commutator, central, separated, closure, not_closed]

    # ----------------------
    # Matrix realization
    # ----------------------

    def matrix_realization(self) -> List[PropertyResult]:
        results = []
        for pairing in Pairing:
            w = BiadditiveMap(self.config.level, self.config.dim, pairing)
            results += _prefixed(pairing.value, self._realization_for(w))
        return results

    def _realization_for(self, w: BiadditiveMap) -> List[PropertyResult]:
        s = self.sampler
        homomorphic = w.scalar_level <= 1 or w.pairing is Pairing.F_THEN_X
        homomorphism = PropertyResult("homomorphism")
        inverse = PropertyResult("inverse")
        round_trip = PropertyResult("round_trip")
        subset_b = PropertyResult("subset_b")
        support = PropertyResult("e_f_support")
        counterexample = None

        def realize(u):
            return heisenberg_realization(u, check_pairing=False)

        for index in range(self.config.samples):
            family = SubgroupFamily.E_CROSS_F if index % 2 == 0 else None
            u1, u2 = s.heisenberg(w, family), s.heisenberg(w)
            m1, m2 = realize(u1), realize(u2)
            pair = lambda: {"u1": encode_heisenberg(u1), "u2": encode_heisenberg(u2)}
            agrees = realize(u1 * u2) == ut_mul(m1, m2)
            if homomorphic:
                homomorphism.record(agrees, pair, index)
                inverse.record(realize(h_inverse(u1)) == ut_inverse(m1), pair, index)
            elif not agrees and counterexample is None:
                counterexample = self._realization_counterexample(u1, u2)
            round_trip.record(matrix_to_heisenberg(m1, w) == u1, pair, index)
            subset_b.record(in_relatively_minimal_subset(m1) == u1.a.is_zero(), pair, index)
            e, f = s.heisenberg(w, SubgroupFamily.E_ONLY), s.heisenberg(w, SubgroupFamily.F_ONLY)
            support.record(all(c == m1.size for _, c in off_diagonal_support(realize(e)))
                           and all(r == 1 for r, _ in off_diagonal_support(realize(f))),
                           lambda: {"e": encode_heisenberg(e), "f": encode_heisenberg(f)}, index)

        if homomorphic:
            return [homomorphism, inverse, round_trip, subset_b, support]
        if counterexample is None:
            # i*j != j*i settles it when no sampled pair did
            zero = CDElement.zero(w.scalar_level)
            f = (CDElement.basis(w.scalar_level, 1),) + w.zero_vector()[1:]
            x = (CDElement.basis(w.scalar_level, 2),) + w.zero_vector()[1:]
            counterexample = self._realization_counterexample(
                HeisenbergElement(w, zero, w.zero_vector(), f),
                HeisenbergElement(w, zero, x, w.zero_vector()))
        failure = PropertyResult("homomorphism_counterexample")
        failure.expect_found(counterexample, {"level": w.scalar_level, "pairing": w.pairing.value})
        return [failure, round_trip, subset_b, support]

    @staticmethod
    def _realization_counterexample(u1: HeisenbergElement, u2: HeisenbergElement):
        left = heisenberg_realization(u1 * u2, check_pairing=False)
        right = ut_mul(heisenberg_realization(u1, check_pairing=False),
                       heisenberg_realization(u2, check_pairing=False))
        if left == right:
            return None
        corner = (1, left.size)
        return {
            "u1": encode_heisenberg(u1),
            "u2": encode_heisenberg(u2),
            "realized_product_corner": encode_cd(left.entry(*corner)),
            "matrix_product_corner": encode_cd(right.entry(*corner)),
        }

    # ----------------------
    # Corner subgroups and the reduction isomorphism
    # ----------------------

    def reduction_iso(self) -> List[PropertyResult]:
        s = self.sampler
        closure = PropertyResult("corner_closure")
        abelian = PropertyResult("corner_abelian")
        inverse = PropertyResult("corner_inverse")
        first_case = PropertyResult("corner_in_subset_b")
        reduction = PropertyResult("corner_reduction")
        excluded = PropertyResult("excluded_corner_rejected")
        per_corner = min(self.config.samples, CORNER_SAMPLES)

        for n in range(1, REDUCTION_MAX_DIM + 1):
            try:
                corner_elem(n, 1, n + 2, 1)
                excluded.record(False, {"n": n})
            except IndexRangeError:
                excluded.record(True)
            for i in range(1, n + 2):
                for j in range(i + 1, n + 3):
                    if (i, j) == (1, n + 2):
                        continue
                    case = corner_case(n, i, j)
                    for _ in range(per_corner):
                        a, b = s.rational(), s.rational()
                        ma, mb = corner_elem(n, i, j, a), corner_elem(n, i, j, b)
                        where = lambda: {"n": n, "i": i, "j": j, "a": encode_rational(a), "b": encode_rational(b)}
                        product = ma * mb
                        closure.record(product == corner_elem(n, i, j, a + b), where)
                        abelian.record(product == mb * ma, where)
                        inverse.record(ut_inverse(ma) == corner_elem(n, i, j, -a), where)
                        if case is CornerCase.FIRST_ROW_OR_LAST_COLUMN:
                            first_case.record(corner_in_subset_b(n, i, j, a), where)
                        else:
                            n2, i2, j2 = reduced_corner_position(n, i, j)
                            reduction.record(
                                delete_reduction(ma, i) == corner_elem(n2, i2, j2, a)
                                and corner_case(n2, i2, j2) is CornerCase.FIRST_ROW_OR_LAST_COLUMN,
                                where)

        tilde_closure = PropertyResult("tilde_closure")
        homomorphism = PropertyResult("delete_reduction_homomorphism")
        padding = PropertyResult("pad_inverts_delete")
        rejected = PropertyResult("non_member_rejected")
        for index in range(self.config.samples):
            n = 1 + index % REDUCTION_MAX_DIM
            size = n + 2
            i = s.integer(2, size - 1)
            m1, m2 = s.tilde(size, i), s.tilde(size, i)
            where = lambda: {"size": size, "i": i, "index": index}
            product = m1 * m2
            tilde_closure.record(tilde_membership(product, i), where, index)
            reduced = delete_reduction(m1, i)
            homomorphism.record(delete_reduction(product, i) == reduced * delete_reduction(m2, i), where, index)
            padding.record(pad_to_tilde(reduced, i) == m1, where, index)
            outsider = m1 * elementary(size, 1, 2, 1)
            try:
                delete_reduction(outsider, i)
                rejected.record(False, where, index)
            except NotInTildeSubgroupError:
                rejected.record(not tilde_membership(outsider, i), where, index)

        return [closure, abelian, inverse, first_case, reduction, excluded,
                tilde_closure, homomorphism, padding, rejected]

    # ----------------------
    # Witness engines
    # ----------------------

    def witnesses(self) -> List[PropertyResult]:
        results = []
        for pairing in Pairing:
            w = BiadditiveMap(self.config.level, self.config.dim, pairing)
            results += _prefixed(pairing.value, self._compatibility_for(w))
        results += self._escalation()
        results += self._cosets()
        return results

    def _compatibility_for(self, w: BiadditiveMap) -> List[PropertyResult]:
        s, level, n = self.sampler, w.scalar_level, w.dim
        one = CDElement.one(level)
        primal = PropertyResult("break_compatibility")
        dual = PropertyResult("break_compatibility_dual")
        gate = PropertyResult("precondition_gate")

        for index in range(self.config.samples):
            v, eps0 = s.escaping_vector(level, n)
            where = lambda: {"vector": encode_vector(v), "eps0": encode_rational(eps0)}
            found = break_compatibility(w, v, eps0)
            primal.record(found.max_abs_sq < eps0 * eps0 and found.w_value == one, where, index)
            found = break_compatibility_dual(w, v, eps0)
            dual.record(found.max_abs_sq < eps0 * eps0 and found.w_value == one, where, index)

            small = s.vector(level, n)
            largest = max(cd_norm_form(c) for c in small)
            bound = Fraction(1, ceil(largest) + 1)
            try:
                break_compatibility(w, small, bound)
                gate.record(False, lambda: {"vector": encode_vector(small), "eps0": encode_rational(bound)}, index)
            except PreconditionError as exc:
                gate.record(exc.reason == "no escaping coordinate", None, index)
        return [primal, dual, gate]

    def _escalation(self) -> List[PropertyResult]:
        s = self.sampler
        oracle = KroneckerOracle()
        root = oracle.root
        bound = PropertyResult("escalation_bound")
        shrink = PropertyResult("shrink_contract")
        unbounded = PropertyResult("escape_unbounded")

        for m in ESCALATION_LEVELS:
            escalation = escalate_unbounded(oracle, root, EscalationRequest.for_integer(ESCALATION_N0, m, ESCALATION_R))
            bound.record(escalation.norm_squared >= escalation.lower_bound and oracle.contains(root, escalation.x),
                         lambda: escalation.to_dict(oracle), m)
            check_shrink_contract(oracle, root, escalation.k, s.rng, SUMSET_SAMPLES, shrink)

        for index in range(self.config.samples):
            r = Fraction(s.integer(1, 10 ** 6), s.integer(1, self.config.coeff_magnitude))
            q = oracle.escape(root, r)
            unbounded.record(q >= r and oracle.contains(root, q),
                             lambda: {"r": encode_rational(r), "q": encode_rational(q)}, index)
        return [bound, shrink, unbounded]

    def _cosets(self) -> List[PropertyResult]:
        s, level, n = self.sampler, self.config.level, self.config.dim
        zero = CDElement.zero(level)
        invariance = PropertyResult("coset_invariance")
        equivalence = PropertyResult("coset_equivalence")
        representative = PropertyResult("coset_representative")

        for index in range(self.config.samples):
            j = s.integer(1, n)
            g, g2 = s.vector(level, n), s.vector(level, n)
            h = tuple(zero if k == j - 1 else c for k, c in enumerate(s.vector(level, n)))
            shifted = tuple(a + b for a, b in zip(g, h))
            where = lambda: {"g": encode_vector(g), "g2": encode_vector(g2), "h": encode_vector(h), "j": j}
            invariance.record(coset_projection_eq(g, shifted, j), where, index)
            equivalence.record(coset_projection_eq(g, g, j)
                               and coset_projection_eq(g, g2, j) == coset_projection_eq(g2, g, j), where, index)
            rep = coset_representative(g, j)
            representative.record(coset_projection_eq(g, rep, j) and project(rep, j) == project(g, j), where, index)
        return [invariance, equivalence, representative]


def run_verify(config: VerifyConfig) -> Dict[str, Any]:
    results = PropertySuites(config).run()
    exit_code = 0 if all(r.passed for r in results) else 1
    logger.info("suite %s: %d properties, exit %d", config.suite.value, len(results), exit_code)
    return {
        "suite": config.suite.value,
        "config": config.to_dict(),
        "properties": [r.to_dict() for r in results],
        "exit": exit_code,
    }


def render_report(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2)
