from fractions import Fraction

import pytest

from relmin.algebra.cayley_dickson import CDElement
from relmin.errors import IndexRangeError, NotInTildeSubgroupError, PreconditionError, ShapeError
from relmin.groups.heisenberg import BiadditiveMap, HeisenbergElement, Pairing, h_inverse, h_mul, SubgroupFamily
from relmin.groups.unitriangular import (
    CornerCase,
    corner_case,
    corner_elem,
    corner_in_subset_b,
    delete_reduction,
    elementary,
    heisenberg_realization,
    in_relatively_minimal_subset,
    is_heisenberg_shaped,
    matrix_from_rows,
    matrix_to_heisenberg,
    off_diagonal_support,
    pad_to_tilde,
    reduced_corner_position,
    tilde_membership,
    ut_identity,
    ut_inverse,
    ut_mul,
)
from relmin.verify.sampling import Sampler


def test_identity_is_neutral():
    M = Sampler(1, 9).unitriangular(0, 4)
    assert ut_mul(M, ut_identity(4)) == M
    assert ut_mul(ut_identity(4), M) == M


def test_elementary_product():
    a, b = Fraction(2, 3), Fraction(-5, 7)
    product = ut_mul(elementary(3, 1, 2, a), elementary(3, 2, 3, b))
    assert product.entry(1, 2).real == a
    assert product.entry(2, 3).real == b
    assert product.entry(1, 3).real == a * b


def test_inverse_examples():
    assert ut_inverse(ut_identity(3)) == ut_identity(3)
    assert ut_inverse(elementary(5, 2, 4, 3)) == elementary(5, 2, 4, -3)
    M = Sampler(2, 9).unitriangular(0, 5)
    assert ut_mul(M, ut_inverse(M)).is_identity()


def test_quaternion_inverse():
    M = Sampler(4, 5).unitriangular(2, 4)
    assert ut_mul(ut_inverse(M), M).is_identity()


def test_general_octonion_inverse_is_refused():
    M = Sampler(4, 5).unitriangular(3, 4)
    with pytest.raises(PreconditionError):
        ut_inverse(M)


def test_broken_unitriangularity():
    with pytest.raises(ShapeError):
        matrix_from_rows(0, [[1, 1], [1, 1]])
    with pytest.raises(ShapeError):
        matrix_from_rows(0, [[2, 0], [0, 1]])
    with pytest.raises(ShapeError):
        ut_mul(ut_identity(3), ut_identity(4))


def _h(w, a, x, f):
    s = lambda v: CDElement.scalar(w.scalar_level, v)
    return HeisenbergElement(w, s(a), tuple(map(s, x)), tuple(map(s, f)))


def test_realization_of_identity():
    w = BiadditiveMap(0, 2)
    assert heisenberg_realization(HeisenbergElement.identity(w)) == ut_identity(4)


def test_realization_is_a_homomorphism_over_q():
    w = BiadditiveMap(0, 1)
    u1, u2 = _h(w, 0, [1], [0]), _h(w, 0, [0], [1])
    for a, b in ((u1, u2), (u2, u1)):
        assert heisenberg_realization(h_mul(a, b)) == ut_mul(heisenberg_realization(a), heisenberg_realization(b))


def test_realization_over_quaternions_depends_on_pairing():
    s = Sampler(8, 6)
    fx = BiadditiveMap(2, 2, Pairing.F_THEN_X)
    for _ in range(20):
        u1, u2 = s.heisenberg(fx), s.heisenberg(fx)
        assert heisenberg_realization(u1 * u2) == heisenberg_realization(u1) * heisenberg_realization(u2)
        assert heisenberg_realization(h_inverse(u1)) == ut_inverse(heisenberg_realization(u1))

    xf = BiadditiveMap(2, 1, Pairing.X_THEN_F)
    with pytest.raises(PreconditionError):
        heisenberg_realization(HeisenbergElement.identity(xf))
    zero = CDElement.zero(2)
    u1 = HeisenbergElement(xf, zero, (zero,), (CDElement.basis(2, 1),))
    u2 = HeisenbergElement(xf, zero, (CDElement.basis(2, 2),), (zero,))
    left = heisenberg_realization(u1 * u2, check_pairing=False)
    right = heisenberg_realization(u1, check_pairing=False) * heisenberg_realization(u2, check_pairing=False)
    assert left != right


def test_matrix_to_heisenberg_round_trip():
    w = BiadditiveMap(0, 3)
    u = Sampler(5, 7).heisenberg(w)
    M = heisenberg_realization(u)
    assert is_heisenberg_shaped(M)
    assert matrix_to_heisenberg(M, w) == u
    assert in_relatively_minimal_subset(M) == u.a.is_zero()
    with pytest.raises(PreconditionError):
        matrix_to_heisenberg(elementary(5, 2, 3, 1), w)


def test_corner_elements():
    assert corner_elem(2, 2, 3, 0) == ut_identity(4)
    a, b = Fraction(1, 3), Fraction(7, 2)
    assert corner_elem(3, 2, 4, a) * corner_elem(3, 2, 4, b) == corner_elem(3, 2, 4, a + b)
    with pytest.raises(IndexRangeError):
        corner_elem(2, 1, 4, 1)
    with pytest.raises(IndexRangeError):
        corner_elem(2, 3, 2, 1)


def test_corner_cases():
    assert corner_case(3, 1, 3) is CornerCase.FIRST_ROW_OR_LAST_COLUMN
    assert corner_case(3, 2, 5) is CornerCase.FIRST_ROW_OR_LAST_COLUMN
    assert corner_case(3, 2, 4) is CornerCase.INTERIOR
    assert corner_in_subset_b(3, 1, 3, 5)
    assert not corner_in_subset_b(3, 2, 4, 5)
    assert reduced_corner_position(3, 2, 4) == (2, 1, 3)
    with pytest.raises(PreconditionError):
        reduced_corner_position(3, 1, 3)


def test_tilde_membership_examples():
    assert tilde_membership(ut_identity(4), 3)
    assert not tilde_membership(elementary(3, 1, 2, 1), 2)
    assert tilde_membership(elementary(3, 2, 3, 5), 2)
    with pytest.raises(IndexRangeError):
        tilde_membership(ut_identity(3), 1)


def test_delete_reduction_examples():
    a = Fraction(-4, 9)
    assert delete_reduction(corner_elem(2, 2, 3, a), 2) == elementary(3, 1, 2, a)
    assert delete_reduction(ut_identity(4), 2) == ut_identity(3)
    with pytest.raises(NotInTildeSubgroupError):
        delete_reduction(elementary(4, 1, 2, 1), 2)
    with pytest.raises(PreconditionError):
        delete_reduction(ut_identity(3, level=2), 2)


def test_delete_reduction_is_a_homomorphism_and_pad_inverts_it():
    s = Sampler(13, 8)
    for i in (2, 3, 4):
        M, N = s.tilde(6, i), s.tilde(6, i)
        assert tilde_membership(M * N, i)
        assert delete_reduction(M * N, i) == delete_reduction(M, i) * delete_reduction(N, i)
        assert pad_to_tilde(delete_reduction(M, i), i) == M


def test_delete_reduction_needs_a_proper_index():
    with pytest.raises(IndexRangeError):
        delete_reduction(ut_identity(4), 4)
    with pytest.raises(IndexRangeError):
        delete_reduction(ut_identity(4), 1)
    assert delete_reduction(ut_identity(4), 3) == ut_identity(2)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_corner_families_are_closed_under_inverse(n):
    s = Sampler(n, 9)
    for i in range(1, n + 2):
        for j in range(i + 1, n + 3):
            if (i, j) == (1, n + 2):
                continue
            a = s.rational()
            assert ut_inverse(corner_elem(n, i, j, a)) == corner_elem(n, i, j, -a)


@pytest.mark.parametrize("level", [0, 2, 3])
def test_realization_support_of_e_and_f(level):
    s = Sampler(level + 5, 6)
    w = BiadditiveMap(level, 3, Pairing.F_THEN_X)
    for _ in range(10):
        e = heisenberg_realization(s.heisenberg(w, SubgroupFamily.E_ONLY))
        f = heisenberg_realization(s.heisenberg(w, SubgroupFamily.F_ONLY))
        assert all(c == 5 for _, c in off_diagonal_support(e))
        assert all(r == 1 for r, _ in off_diagonal_support(f))
    x = (CDElement.one(level),) + w.zero_vector()[1:]
    e = heisenberg_realization(HeisenbergElement(w, CDElement.zero(level), x, w.zero_vector()))
    assert off_diagonal_support(e) == {(2, 5)}
