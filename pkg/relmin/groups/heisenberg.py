"""
Generalized Heisenberg groups H(w_n) = (A x E) x| F for the inner-product map
w_n : F^n x F^n -> F over a Cayley-Dickson level F.

Multiplication: (a1, x1, f1)(a2, x2, f2) = (a1 + a2 + w(x2, f1), x1 + x2, f1 + f2).
"""
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

from relmin.algebra.cayley_dickson import CDElement, cd_mul
from relmin.errors import PreconditionError, ShapeError

Vector = Tuple[CDElement, ...]

MAX_SCALAR_LEVEL = 3


class Pairing(str, Enum):
    X_THEN_F = "xf"
    F_THEN_X = "fx"


class SubgroupFamily(str, Enum):
    CENTER_A = "center_A"
    A_CROSS_E = "A_cross_E"
    A_CROSS_F = "A_cross_F"
    E_ONLY = "E_only"
    F_ONLY = "F_only"
    E_CROSS_F = "E_cross_F"

    @property
    def is_subgroup(self) -> bool:
        # {0} x E x F is a subset only: products pick up w(x2, f1) in A.
        return self is not SubgroupFamily.E_CROSS_F


@dataclass(frozen=True)
class BiadditiveMap:
    scalar_level: int
    dim: int
    pairing: Pairing = Pairing.X_THEN_F

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ShapeError(f"dim must be a positive integer; got {self.dim!r}")
        if not isinstance(self.scalar_level, int) or not 0 <= self.scalar_level <= MAX_SCALAR_LEVEL:
            raise ShapeError(f"scalar_level must be in 0..{MAX_SCALAR_LEVEL}; got {self.scalar_level!r}")
        object.__setattr__(self, "pairing", Pairing(self.pairing))

    def zero_vector(self) -> Vector:
        return (CDElement.zero(self.scalar_level),) * self.dim

    def unit_vector(self, k: int) -> Vector:
        """e_k, 0-based."""
        zero = CDElement.zero(self.scalar_level)
        one = CDElement.one(self.scalar_level)
        return tuple(one if t == k else zero for t in range(self.dim))

    def check_vector(self, v: Sequence[CDElement], label: str = "vector") -> Vector:
        v = tuple(v)
        if len(v) != self.dim:
            raise ShapeError(f"{label} has length {len(v)}; expected {self.dim}")
        for c in v:
            if not isinstance(c, CDElement) or c.level != self.scalar_level:
                raise ShapeError(f"{label} entries must be level-{self.scalar_level} elements")
        return v

    def __call__(self, x: Sequence[CDElement], f: Sequence[CDElement]) -> CDElement:
        return w_eval(self, x, f)


@dataclass(frozen=True)
class HeisenbergElement:
    w: BiadditiveMap
    a: CDElement
    x: Vector
    f: Vector

    def __post_init__(self):
        if not isinstance(self.a, CDElement) or self.a.level != self.w.scalar_level:
            raise ShapeError(f"scalar part must be a level-{self.w.scalar_level} element")
        object.__setattr__(self, "x", self.w.check_vector(self.x, "x"))
        object.__setattr__(self, "f", self.w.check_vector(self.f, "f"))

    @classmethod
    def identity(cls, w: BiadditiveMap) -> "HeisenbergElement":
        return cls(w, CDElement.zero(w.scalar_level), w.zero_vector(), w.zero_vector())

    def is_identity(self) -> bool:
        return self.a.is_zero() and _is_zero(self.x) and _is_zero(self.f)

    def __mul__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        return h_mul(self, other)


def _is_zero(v: Vector) -> bool:
    return all(c.is_zero() for c in v)


def _vadd(u: Vector, v: Vector) -> Vector:
    return tuple(p + q for p, q in zip(u, v))


def _vneg(v: Vector) -> Vector:
    return tuple(-c for c in v)


def w_eval(w: BiadditiveMap, x: Sequence[CDElement], f: Sequence[CDElement]) -> CDElement:
    x = w.check_vector(x, "x")
    f = w.check_vector(f, "f")
    total = CDElement.zero(w.scalar_level)
    for xk, fk in zip(x, f):
        term = cd_mul(xk, fk) if w.pairing is Pairing.X_THEN_F else cd_mul(fk, xk)
        total = total + term
    return total


def _same_group(u1: HeisenbergElement, u2: HeisenbergElement) -> None:
    if u1.w != u2.w:
        raise ShapeError(f"elements live in different groups: {u1.w} vs {u2.w}")


def h_mul(u1: HeisenbergElement, u2: HeisenbergElement) -> HeisenbergElement:
    _same_group(u1, u2)
    w = u1.w
    return HeisenbergElement(
        w,
        u1.a + u2.a + w_eval(w, u2.x, u1.f),
        _vadd(u1.x, u2.x),
        _vadd(u1.f, u2.f),
    )


def h_inverse(u: HeisenbergElement) -> HeisenbergElement:
    return HeisenbergElement(u.w, -u.a + w_eval(u.w, u.x, u.f), _vneg(u.x), _vneg(u.f))


def h_commutator(u1: HeisenbergElement, u2: HeisenbergElement) -> HeisenbergElement:
    """u1 u2 u1^-1 u2^-1, evaluated as a product chain."""
    _same_group(u1, u2)
    return h_mul(h_mul(h_mul(u1, u2), h_inverse(u1)), h_inverse(u2))


def commutator_closed_form(u1: HeisenbergElement, u2: HeisenbergElement) -> HeisenbergElement:
    """(w(x2, f1) - w(x1, f2), 0, 0)."""
    _same_group(u1, u2)
    w = u1.w
    scalar = w_eval(w, u2.x, u1.f) - w_eval(w, u1.x, u2.f)
    return HeisenbergElement(w, scalar, w.zero_vector(), w.zero_vector())


def _first_nonzero(v: Vector) -> int:
    return next(k for k, c in enumerate(v) if not c.is_zero())


def separatedness_witness(w: BiadditiveMap, x0: Sequence[CDElement],
                          f0: Sequence[CDElement]) -> Tuple[Vector, Vector]:
    """
    (x, f) with w(x0, f) != 0 and w(x, f0) != 0: for the first nonzero
    coordinates x0_i and f0_j take x = e_j and f = e_i.
    """
    x0 = w.check_vector(x0, "x0")
    f0 = w.check_vector(f0, "f0")
    if _is_zero(x0) or _is_zero(f0):
        raise PreconditionError("separatedness needs nonzero x0 and f0",
                                {"x0_zero": _is_zero(x0), "f0_zero": _is_zero(f0)})
    i = _first_nonzero(x0)
    j = _first_nonzero(f0)
    return w.unit_vector(j), w.unit_vector(i)


def subgroup_membership(u: HeisenbergElement, family: SubgroupFamily) -> bool:
    family = SubgroupFamily(family)
    a_zero, x_zero, f_zero = u.a.is_zero(), _is_zero(u.x), _is_zero(u.f)
    if family is SubgroupFamily.CENTER_A:
        return x_zero and f_zero
    if family is SubgroupFamily.A_CROSS_E:
        return f_zero
    if family is SubgroupFamily.A_CROSS_F:
        return x_zero
    if family is SubgroupFamily.E_ONLY:
        return a_zero and f_zero
    if family is SubgroupFamily.F_ONLY:
        return a_zero and x_zero
    return a_zero
