"""
Upper unitriangular matrix groups U_m(F) with exact Cayley-Dickson entries.

Public index arguments (i, j) are 1-based, matching the usual a_ij notation;
rows are stored 0-based.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Set, Tuple

from relmin.algebra.cayley_dickson import CDElement, cd_mul
from relmin.algebra.scalars import RationalLike
from relmin.errors import (
    IndexRangeError,
    NotInTildeSubgroupError,
    PreconditionError,
    ShapeError,
)
from relmin.groups.heisenberg import BiadditiveMap, HeisenbergElement, Pairing

Rows = Tuple[Tuple[CDElement, ...], ...]


class CornerCase(str, Enum):
    FIRST_ROW_OR_LAST_COLUMN = "first_row_or_last_column"
    INTERIOR = "interior"


@dataclass(frozen=True)
class UniTriMatrix:
    level: int
    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        size = len(rows)
        if size < 2:
            raise ShapeError(f"unitriangular matrices need size >= 2; got {size}")
        for r, row in enumerate(rows):
            if len(row) != size:
                raise ShapeError(f"row {r + 1} has {len(row)} entries; expected {size}")
            for c, entry in enumerate(row):
                if not isinstance(entry, CDElement) or entry.level != self.level:
                    raise ShapeError(f"entry ({r + 1},{c + 1}) is not a level-{self.level} element")
                if c == r and entry != CDElement.one(self.level):
                    raise ShapeError(f"diagonal entry ({r + 1},{c + 1}) is {entry}, not 1")
                if c < r and not entry.is_zero():
                    raise ShapeError(f"entry ({r + 1},{c + 1}) below the diagonal is nonzero")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> CDElement:
        return self.rows[i - 1][j - 1]

    def is_identity(self) -> bool:
        return all(self.rows[r][c].is_zero()
                   for r in range(self.size) for c in range(r + 1, self.size))

    def __mul__(self, other: "UniTriMatrix") -> "UniTriMatrix":
        return ut_mul(self, other)


def from_entries(level: int, size: int, entries) -> UniTriMatrix:
    """entries: {(r, c): CDElement} strictly above the diagonal, 0-based."""
    zero = CDElement.zero(level)
    one = CDElement.one(level)
    rows = []
    for r in range(size):
        rows.append(tuple(one if c == r else entries.get((r, c), zero) for c in range(size)))
    return UniTriMatrix(level, tuple(rows))


def _lift(level: int, a) -> CDElement:
    if isinstance(a, CDElement):
        if a.level != level:
            raise ShapeError(f"expected a level-{level} entry; got level {a.level}")
        return a
    return CDElement.scalar(level, a)


def ut_identity(size: int, level: int = 0) -> UniTriMatrix:
    return from_entries(level, size, {})


def elementary(size: int, i: int, j: int, a, level: int = 0) -> UniTriMatrix:
    """I + a*E_ij for 1 <= i < j <= size."""
    if not 1 <= i < j <= size:
        raise IndexRangeError(f"need 1 <= i < j <= {size}; got ({i}, {j})")
    a = _lift(a.level if isinstance(a, CDElement) else level, a)
    return from_entries(a.level, size, {(i - 1, j - 1): a})


def _check_pair(M: UniTriMatrix, N: UniTriMatrix) -> None:
    if M.size != N.size:
        raise ShapeError(f"size mismatch: {M.size} vs {N.size}")
    if M.level != N.level:
        raise ShapeError(f"level mismatch: {M.level} vs {N.level}")


def ut_mul(M: UniTriMatrix, N: UniTriMatrix) -> UniTriMatrix:
    """Matrix product; each entry is summed over k = i..j in ascending order."""
    _check_pair(M, N)
    size, level = M.size, M.level
    entries = {}
    for r in range(size):
        for c in range(r + 1, size):
            total = CDElement.zero(level)
            for k in range(r, c + 1):
                left, right = M.rows[r][k], N.rows[k][c]
                if left.is_zero() or right.is_zero():
                    continue
                if k == r:
                    total = total + right
                elif k == c:
                    total = total + left
                else:
                    total = total + cd_mul(left, right)
            entries[(r, c)] = total
    return from_entries(level, size, entries)


def ut_inverse(M: UniTriMatrix) -> UniTriMatrix:
    """
    Back substitution: N[r][c] = -sum_{k=r+1..c} M[r][k] N[k][c].
    Needs associative entries (level <= 2) unless M has the Heisenberg shape,
    where only single products occur.
    """
    if M.level >= 3 and not is_heisenberg_shaped(M):
        raise PreconditionError(
            "general unitriangular inverse needs associative entries",
            {"level": M.level, "size": M.size})
    size, level = M.size, M.level
    inv = {}
    one = CDElement.one(level)

    def inv_entry(k, c):
        return one if k == c else inv.get((k, c), CDElement.zero(level))

    for c in range(size):
        for r in range(c - 1, -1, -1):
            total = CDElement.zero(level)
            for k in range(r + 1, c + 1):
                left, right = M.rows[r][k], inv_entry(k, c)
                if left.is_zero() or right.is_zero():
                    continue
                total = total + cd_mul(left, right)
            inv[(r, c)] = -total
    return from_entries(level, size, inv)


# ----------------------
# Heisenberg realization
# ----------------------

def heisenberg_realization(u: HeisenbergElement, check_pairing: bool = True) -> UniTriMatrix:
    """
    (n+2)x(n+2) matrix with first row (1, f_1..f_n, a), last column
    (a; x_1..x_n; 1) and identity interior. The corner entry of a product is
    a1 + a2 + sum f1_k x2_k, so over noncommutative levels only the f_then_x
    pairing makes this a homomorphism.
    """
    w = u.w
    if check_pairing and w.scalar_level >= 2 and w.pairing is not Pairing.F_THEN_X:
        raise PreconditionError(
            "noncommutative scalars need pairing f_then_x for the matrix realization",
            {"level": w.scalar_level, "pairing": w.pairing.value})
    n = w.dim
    last = n + 1
    entries = {(0, last): u.a}
    for k in range(n):
        entries[(0, k + 1)] = u.f[k]
        entries[(k + 1, last)] = u.x[k]
    return from_entries(w.scalar_level, n + 2, entries)


def is_heisenberg_shaped(M: UniTriMatrix) -> bool:
    """Nonzero off-diagonal entries only in the first row or the last column."""
    size = M.size
    if size < 3:
        return False
    for r in range(1, size - 1):
        for c in range(r + 1, size - 1):
            if not M.rows[r][c].is_zero():
                return False
    return True


def matrix_to_heisenberg(M: UniTriMatrix, w: BiadditiveMap) -> HeisenbergElement:
    if not is_heisenberg_shaped(M):
        raise PreconditionError("matrix is not in the Heisenberg realization shape", {"size": M.size})
    if M.size != w.dim + 2 or M.level != w.scalar_level:
        raise ShapeError(f"matrix of size {M.size}, level {M.level} does not realize {w}")
    last = M.size - 1
    f = tuple(M.rows[0][k + 1] for k in range(w.dim))
    x = tuple(M.rows[k + 1][last] for k in range(w.dim))
    return HeisenbergElement(w, M.rows[0][last], x, f)


def off_diagonal_support(M: UniTriMatrix) -> Set[Tuple[int, int]]:
    """1-based positions (r, c), r < c, of the nonzero off-diagonal entries."""
    return {(r + 1, c + 1) for r in range(M.size) for c in range(r + 1, M.size)
            if not M.rows[r][c].is_zero()}


def in_relatively_minimal_subset(M: UniTriMatrix) -> bool:
    """Realization-shaped with zero corner: the image of {0} x E x F."""
    return is_heisenberg_shaped(M) and M.rows[0][M.size - 1].is_zero()


# ----------------------
# Corner subgroups G_ij and the reduction to the first row / last column
# ----------------------

def _check_corner(n: int, i: int, j: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise IndexRangeError(f"n must be a positive integer; got {n!r}")
    size = n + 2
    if not 1 <= i < j <= size:
        raise IndexRangeError(f"need 1 <= i < j <= {size}; got ({i}, {j})")
    if (i, j) == (1, size):
        raise IndexRangeError(f"({i}, {j}) is the excluded corner (1, n+2)")


def corner_elem(n: int, i: int, j: int, a: RationalLike) -> UniTriMatrix:
    """I + a*E_ij in U_{n+2}(Q)."""
    _check_corner(n, i, j)
    a = _lift(0, a)
    return from_entries(0, n + 2, {(i - 1, j - 1): a})


def corner_case(n: int, i: int, j: int) -> CornerCase:
    _check_corner(n, i, j)
    if i == 1 or j == n + 2:
        return CornerCase.FIRST_ROW_OR_LAST_COLUMN
    return CornerCase.INTERIOR


def corner_in_subset_b(n: int, i: int, j: int, a: RationalLike) -> bool:
    return in_relatively_minimal_subset(corner_elem(n, i, j, a))


def reduced_corner_position(n: int, i: int, j: int) -> Tuple[int, int, int]:
    """
    For an interior corner (1 < i < j < n+2) the deletion of the first i-1
    rows and columns sends G_ij of U_{n+2} onto G_{1, j+1-i} of U_{n+3-i}.
    Returns (n', 1, j+1-i) with n' + 2 = n + 3 - i.
    """
    if corner_case(n, i, j) is not CornerCase.INTERIOR:
        raise PreconditionError("only interior corners are reduced",
                                {"n": n, "i": i, "j": j})
    return n + 1 - i, 1, j + 1 - i


def tilde_membership(M: UniTriMatrix, i: int) -> bool:
    """True iff rows 1..i-1 carry no off-diagonal entries."""
    if not 2 <= i <= M.size:
        raise IndexRangeError(f"need 2 <= i <= {M.size}; got {i}")
    return all(M.rows[r][c].is_zero() for r in range(i - 1) for c in range(r + 1, M.size))


def delete_reduction(M: UniTriMatrix, i: int) -> UniTriMatrix:
    """Drop the first i-1 rows and columns of a member of the tilde subgroup."""
    if M.level != 0:
        raise PreconditionError("the reduction isomorphism is stated over fields (level 0)",
                                {"level": M.level})
    if not 2 <= i <= M.size - 1:
        raise IndexRangeError(f"reduction needs 2 <= i <= {M.size - 1}; got {i}")
    if not tilde_membership(M, i):
        raise NotInTildeSubgroupError(
            f"matrix has off-diagonal entries in its first {i - 1} rows", {"i": i})
    start = i - 1
    return UniTriMatrix(M.level, tuple(row[start:] for row in M.rows[start:]))


def pad_to_tilde(M: UniTriMatrix, i: int) -> UniTriMatrix:
    """Preimage of M under delete_reduction(., i): prepend i-1 identity rows and columns."""
    if M.level != 0:
        raise PreconditionError("the reduction isomorphism is stated over fields (level 0)",
                                {"level": M.level})
    if i < 2:
        raise IndexRangeError(f"need i >= 2; got {i}")
    pad = i - 1
    entries = {(r + pad, c + pad): M.rows[r][c]
               for r in range(M.size) for c in range(r + 1, M.size)}
    return from_entries(0, M.size + pad, entries)


def matrix_from_rows(level: int, rows: Sequence[Sequence]) -> UniTriMatrix:
    return UniTriMatrix(level, tuple(tuple(_lift(level, e) for e in row) for row in rows))
