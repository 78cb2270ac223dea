from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from relmin.algebra.absolute import AbsValueDescriptor
from relmin.algebra.cayley_dickson import CDElement, cd_norm_form
from relmin.errors import DomainError, IndexRangeError, OracleContractError, PreconditionError, ShapeError
from relmin.groups.heisenberg import BiadditiveMap, Pairing, w_eval
from relmin.verify.sampling import Sampler
from relmin.witness.engines import (
    EscalationRequest,
    break_compatibility,
    break_compatibility_dual,
    check_shrink_contract,
    coset_projection_eq,
    coset_representative,
    escalate_unbounded,
    escalation_chain,
    project,
)
from relmin.witness.oracle import KroneckerNeighborhood, KroneckerOracle


def r(*values):
    return tuple(CDElement.scalar(0, v) for v in values)


def test_break_compatibility_over_q():
    w = BiadditiveMap(0, 2)
    found = break_compatibility(w, r(20, 3), "1/10")
    assert found.vector == r("1/20", 0)
    assert found.index == 0
    assert found.w_value == CDElement.one(0)
    assert found.max_abs_sq == Fraction(1, 400)


def test_break_compatibility_over_quaternions():
    w = BiadditiveMap(2, 1)
    found = break_compatibility(w, (CDElement.basis(2, 1, 3),), "1/2")
    assert found.vector == (CDElement.basis(2, 1, Fraction(-1, 3)),)
    assert found.w_value == CDElement.one(2)


def test_break_compatibility_gate():
    with pytest.raises(PreconditionError) as info:
        break_compatibility(BiadditiveMap(0, 2), r(1, 1), "1/10")
    assert info.value.reason == "no escaping coordinate"
    assert info.value.details["largest_abs_sq"] == "1"
    with pytest.raises(DomainError):
        break_compatibility(BiadditiveMap(0, 1), r(5), 0)


@pytest.mark.parametrize("level", [0, 2, 3])
@pytest.mark.parametrize("pairing", list(Pairing))
def test_break_compatibility_postconditions(level, pairing):
    s = Sampler(level + 17, 10)
    w = BiadditiveMap(level, 3, pairing)
    for _ in range(15):
        v, eps0 = s.escaping_vector(level, 3)
        for found in (break_compatibility(w, v, eps0), break_compatibility_dual(w, v, eps0)):
            assert found.max_abs_sq < eps0 * eps0
            assert max(cd_norm_form(c) for c in found.vector) == found.max_abs_sq
            assert found.w_value == CDElement.one(level)


def test_dual_pairs_on_the_other_side():
    w = BiadditiveMap(2, 1, Pairing.X_THEN_F)
    f = (CDElement(2, (0, 4, 3, 0)),)
    found = break_compatibility_dual(w, f, "1/4")
    assert w_eval(w, found.vector, f) == CDElement.one(2)


def test_escalation_without_shrinking():
    oracle = KroneckerOracle()
    escalation = escalate_unbounded(oracle, oracle.root, EscalationRequest.for_integer(2, 0, 3))
    assert escalation.k == 1
    assert escalation.x == escalation.x0 >= 3


def test_escalation_m10():
    oracle = KroneckerOracle()
    escalation = escalate_unbounded(oracle, oracle.root, EscalationRequest.for_integer(2, 10, 1))
    assert escalation.x == 1024 * escalation.x0
    assert escalation.norm_squared >= 2 ** 20
    assert oracle.contains(oracle.root, escalation.x)
    assert escalation.to_dict(oracle)["k"] == 1024


def test_escalation_chain_and_shrink_contract():
    oracle = KroneckerOracle()
    rng = np.random.default_rng(0)
    chain = escalation_chain(oracle, oracle.root, 2, 1, range(0, 21))
    for m, escalation in enumerate(chain):
        assert escalation.norm_squared >= 4 ** m
        assert check_shrink_contract(oracle, oracle.root, escalation.k, rng, 5).passed


class LyingOracle(KroneckerOracle):
    def escape(self, neighborhood: KroneckerNeighborhood, r) -> Fraction:
        return Fraction(1, 2)


def test_contract_violation_carries_the_value():
    oracle = LyingOracle()
    with pytest.raises(OracleContractError) as info:
        escalate_unbounded(oracle, oracle.root, EscalationRequest.for_integer(2, 1, 1))
    assert info.value.value == Fraction(1, 2)


def test_escalation_request_validation():
    with pytest.raises(DomainError):
        EscalationRequest(1, Fraction(1), 0, Fraction(1))
    with pytest.raises(DomainError):
        EscalationRequest.for_integer(2, -1, 1)
    with pytest.raises(DomainError):
        EscalationRequest.for_integer(2, 1, 0)
    req = EscalationRequest.from_descriptor(AbsValueDescriptor.euclidean(0), 3, 1, 10)
    assert (req.n0, req.c_squared) == (2, 4)
    with pytest.raises(PreconditionError):
        EscalationRequest.from_descriptor(AbsValueDescriptor.padic(3), 3, 1, 10)


def test_coset_projection_examples():
    g, g2 = (1, 5), (2, 5)
    assert coset_projection_eq(g, g, 1)
    assert coset_projection_eq(g, g2, 2)
    assert not coset_projection_eq(g, g2, 1)
    with pytest.raises(IndexRangeError):
        coset_projection_eq(g, g2, 3)
    with pytest.raises(ShapeError):
        coset_projection_eq(g, (1, 5, 0), 1)


@given(st.lists(st.fractions(max_denominator=9), min_size=1, max_size=5), st.data())
def test_coset_invariance(g, data):
    j = data.draw(st.integers(1, len(g)))
    h = [Fraction(0) if k == j - 1 else data.draw(st.fractions(max_denominator=9)) for k in range(len(g))]
    shifted = tuple(a + b for a, b in zip(g, h))
    assert coset_projection_eq(tuple(g), shifted, j)
    rep = coset_representative(tuple(g), j)
    assert coset_projection_eq(tuple(g), rep, j)
    assert project(rep, j) == g[j - 1]
    assert sum(1 for c in rep if c != 0) <= 1
