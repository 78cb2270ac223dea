from fractions import Fraction

from relmin import (
    BiadditiveMap,
    CDElement,
    EscalationRequest,
    HeisenbergElement,
    KroneckerOracle,
    break_compatibility,
    cd_mul,
    cd_norm_form,
    corner_elem,
    delete_reduction,
    escalate_unbounded,
    find_composition_violation,
    h_mul,
    heisenberg_realization,
    ut_mul,
)


def quaternion_sign():
    i, j = CDElement.basis(2, 1), CDElement.basis(2, 2)
    print("i*j =", cd_mul(i, j))
    print("j*i =", cd_mul(j, i))


def sedenion_zero_divisor():
    x, y = find_composition_violation(4, 1)
    print(f"N(x)N(y) = {cd_norm_form(x) * cd_norm_form(y)}, N(xy) = {cd_norm_form(cd_mul(x, y))}")


def heisenberg_over_q():
    w = BiadditiveMap(0, 1)
    zero, one = CDElement.zero(0), CDElement.one(0)
    u1 = HeisenbergElement(w, zero, (one,), (zero,))
    u2 = HeisenbergElement(w, zero, (zero,), (one,))
    print("u1*u2 has central part", h_mul(u1, u2).a)
    print("u2*u1 has central part", h_mul(u2, u1).a)
    same = heisenberg_realization(h_mul(u1, u2)) == ut_mul(heisenberg_realization(u1), heisenberg_realization(u2))
    print("realization respects the product:", same)


def reduction():
    m = corner_elem(3, 2, 4, Fraction(5))
    reduced = delete_reduction(m, 2)
    print(f"reduced to size {reduced.size}, entry (1, 3) = {reduced.entry(1, 3)}")


def witnesses():
    w = BiadditiveMap(0, 2)
    found = break_compatibility(w, (CDElement.scalar(0, 20), CDElement.scalar(0, 3)), Fraction(1, 10))
    print("small vector:", [str(c) for c in found.vector], "pairs to", found.w_value)

    oracle = KroneckerOracle()
    escalation = escalate_unbounded(oracle, oracle.root, EscalationRequest.for_integer(2, 10, 1))
    print("escalated point:", escalation.to_dict(oracle))


if __name__ == "__main__":
    quaternion_sign()
    sedenion_zero_divisor()
    heisenberg_over_q()
    reduction()
    witnesses()
