"""
The Cayley-Dickson tower over the rationals.

Level 0 is Q itself, level 1 the complex-like plane, level 2 the quaternions,
level 3 the octonions and level 4 the sedenions. Coefficients are indexed so
that an element of level l splits into (first half, second half) of level l-1,
which makes e1, e2, e3 of level 2 the quaternion units i, j, k.
"""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, Iterator, Optional, Tuple

from relmin.algebra.scalars import RationalLike, to_rational
from relmin.errors import NonInvertibleError, ShapeError

logger = logging.getLogger(__name__)

MAX_LEVEL = 4


class Convention(str, Enum):
    """
    STANDARD: (a,b)(c,d) = (ac - d*b, da + bc*), giving i*j = k.
    LITERAL:  (a,b)(c,d) = (ac - db*, a*d + cb), the doubling formula read
              left to right; it is the opposite algebra of STANDARD.
    """
    STANDARD = "standard"
    LITERAL = "literal"


# ----------------------
# Coefficient-tuple kernels
# ----------------------

def _add(u, v):
    return tuple(p + q for p, q in zip(u, v))


def _sub(u, v):
    return tuple(p - q for p, q in zip(u, v))


def _conj(u):
    return (u[0],) + tuple(-c for c in u[1:])


def _mul(x, y):
    """The doubling recursion itself; used once per level to derive the basis table."""
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    first = _sub(_mul(a, c), _mul(_conj(d), b))
    second = _add(_mul(d, a), _mul(b, _conj(c)))
    return first + second


def _cleared(u):
    """Integer numerators over the least common denominator of u."""
    den = 1
    for c in u:
        den = lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in u], den


def _table_mul(x, y, level: int):
    if level == 0:
        return (x[0] * y[0],)
    nx, dx = _cleared(x)
    ny, dy = _cleared(y)
    table = multiplication_table(level)
    out = [0] * len(x)
    for i, a in enumerate(nx):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(ny):
            if b:
                sign, k = row[j]
                out[k] += sign * a * b
    den = dx * dy
    return tuple(Fraction(c, den) for c in out)


def _norm(u):
    return sum(c * c for c in u)


@dataclass(frozen=True)
class CDElement:
    level: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.level, int) or not 0 <= self.level <= MAX_LEVEL:
            raise ShapeError(f"level must be in 0..{MAX_LEVEL}; got {self.level!r}")
        coeffs = self.coeffs
        if not (type(coeffs) is tuple and all(type(c) is Fraction for c in coeffs)):
            coeffs = tuple(to_rational(c) for c in coeffs)
        if len(coeffs) != 2 ** self.level:
            raise ShapeError(
                f"level {self.level} needs {2 ** self.level} coefficients; got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    # constructors

    @classmethod
    def zero(cls, level: int) -> "CDElement":
        return cls(level, (0,) * (2 ** level))

    @classmethod
    def scalar(cls, level: int, value: RationalLike) -> "CDElement":
        return cls(level, (value,) + (0,) * (2 ** level - 1))

    @classmethod
    def one(cls, level: int) -> "CDElement":
        return cls.scalar(level, 1)

    @classmethod
    def basis(cls, level: int, k: int, value: RationalLike = 1) -> "CDElement":
        size = 2 ** level
        if not 0 <= k < size:
            raise ShapeError(f"basis index {k} out of range for level {level}")
        coeffs = [0] * size
        coeffs[k] = value
        return cls(level, tuple(coeffs))

    # arithmetic

    def _same_level(self, other: "CDElement") -> None:
        if not isinstance(other, CDElement):
            raise ShapeError(f"expected a CDElement; got {type(other).__name__}")
        if other.level != self.level:
            raise ShapeError(f"level mismatch: {self.level} vs {other.level}")

    def __add__(self, other: "CDElement") -> "CDElement":
        self._same_level(other)
        return CDElement(self.level, _add(self.coeffs, other.coeffs))

    def __sub__(self, other: "CDElement") -> "CDElement":
        self._same_level(other)
        return CDElement(self.level, _sub(self.coeffs, other.coeffs))

    def __neg__(self) -> "CDElement":
        return CDElement(self.level, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "CDElement") -> "CDElement":
        return cd_mul(self, other)

    def scale(self, q: RationalLike) -> "CDElement":
        q = to_rational(q)
        return CDElement(self.level, tuple(q * c for c in self.coeffs))

    def conjugate(self) -> "CDElement":
        return cd_conjugate(self)

    def norm_form(self) -> Fraction:
        return cd_norm_form(self)

    def inverse(self) -> "CDElement":
        return cd_invert(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_real(self) -> bool:
        return not any(self.coeffs[1:])

    @property
    def real(self) -> Fraction:
        return self.coeffs[0]

    def __str__(self) -> str:
        if self.level == 0:
            return str(self.coeffs[0])
        terms = [f"{c}*e{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


# ----------------------
# Operations
# ----------------------

def cd_mul(x: CDElement, y: CDElement, convention: Convention = Convention.STANDARD) -> CDElement:
    x._same_level(y)
    if Convention(convention) is Convention.LITERAL:
        x, y = y, x
    return CDElement(x.level, _table_mul(x.coeffs, y.coeffs, x.level))


def cd_conjugate(x: CDElement) -> CDElement:
    if x.level == 0:
        return x
    return CDElement(x.level, _conj(x.coeffs))


def cd_norm_form(x: CDElement) -> Fraction:
    """N(x), the square of the Euclidean absolute value of x."""
    return _norm(x.coeffs)


def cd_invert(x: CDElement) -> CDElement:
    norm = cd_norm_form(x)
    if norm == 0:
        raise NonInvertibleError(f"{x} has zero norm and no inverse")
    return cd_conjugate(x).scale(1 / norm)


def cd_associator(x: CDElement, y: CDElement, z: CDElement,
                  convention: Convention = Convention.STANDARD) -> CDElement:
    """(x*y)*z - x*(y*z)."""
    left = cd_mul(cd_mul(x, y, convention), z, convention)
    right = cd_mul(x, cd_mul(y, z, convention), convention)
    return left - right


def cd_alternator(x: CDElement, y: CDElement,
                  convention: Convention = Convention.STANDARD) -> CDElement:
    """x*(x*y) - (x*x)*y; zero for every pair exactly when the level is alternative."""
    left = cd_mul(x, cd_mul(x, y, convention), convention)
    right = cd_mul(cd_mul(x, x, convention), y, convention)
    return left - right


# ----------------------
# Basis tables and structured searches
# ----------------------

@lru_cache(maxsize=None)
def multiplication_table(level: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """
    table[i][j] = (sign, k) with e_i * e_j = sign * e_k, read off the recursion.
    """
    size = 2 ** level
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            ei = tuple(1 if t == i else 0 for t in range(size))
            ej = tuple(1 if t == j else 0 for t in range(size))
            product = _mul(ei, ej)
            k = next(t for t, c in enumerate(product) if c)
            row.append((product[k], k))
        rows.append(tuple(row))
    return tuple(rows)


def _sparse_mul(x: Dict[int, int], y: Dict[int, int], table) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for i, a in x.items():
        for j, b in y.items():
            sign, k = table[i][j]
            out[k] = out.get(k, 0) + sign * a * b
    return out


def _sparse_norm(x: Dict[int, int]) -> int:
    return sum(c * c for c in x.values())


def _to_element(level: int, sparse: Dict[int, int]) -> CDElement:
    coeffs = [0] * (2 ** level)
    for k, c in sparse.items():
        coeffs[k] = c
    return CDElement(level, tuple(coeffs))


def structured_candidates(level: int, coeff_bound: int) -> Iterator[Dict[int, int]]:
    """
    The documented candidate set: c*e_i with 1 <= c <= bound, then
    c1*e_i + c2*e_j with i < j, 1 <= c1 <= bound and 1 <= |c2| <= bound.
    Elements are yielded sparsely as {index: coefficient}.
    """
    size = 2 ** level
    for i in range(size):
        for c in range(1, coeff_bound + 1):
            yield {i: c}
    signed = [s * c for c in range(1, coeff_bound + 1) for s in (1, -1)]
    for i, j in itertools.combinations(range(size), 2):
        for c1 in range(1, coeff_bound + 1):
            for c2 in signed:
                yield {i: c1, j: c2}


def find_composition_violation(level: int, coeff_bound: int) -> Optional[Tuple[CDElement, CDElement]]:
    """
    First pair (x, y) of structured candidates with N(x*y) != N(x)*N(y), or
    None when the whole candidate set composes.
    """
    if not 0 <= level <= MAX_LEVEL:
        raise ShapeError(f"level must be in 0..{MAX_LEVEL}; got {level}")
    if coeff_bound < 1:
        raise ShapeError(f"coeff_bound must be >= 1; got {coeff_bound}")
    table = multiplication_table(level)
    candidates = list(structured_candidates(level, coeff_bound))
    logger.debug("composition search: level=%d bound=%d candidates=%d",
                 level, coeff_bound, len(candidates))
    for x in candidates:
        nx = _sparse_norm(x)
        for y in candidates:
            if _sparse_norm(_sparse_mul(x, y, table)) != nx * _sparse_norm(y):
                return _to_element(level, x), _to_element(level, y)
    return None


def find_associator_counterexample(level: int) -> Optional[Tuple[CDElement, CDElement, CDElement]]:
    """First basis triple with a nonzero associator."""
    table = multiplication_table(level)
    size = 2 ** level
    for i, j, k in itertools.product(range(size), repeat=3):
        s1, ij = table[i][j]
        s2, left = table[ij][k]
        s3, jk = table[j][k]
        s4, right = table[i][jk]
        if (left, s1 * s2) != (right, s3 * s4):
            return (CDElement.basis(level, i), CDElement.basis(level, j), CDElement.basis(level, k))
    return None


def find_alternativity_counterexample(level: int) -> Optional[Tuple[CDElement, CDElement]]:
    """First (x, e_k) with x a sum of two basis elements and x(xy) != (xx)y."""
    table = multiplication_table(level)
    size = 2 ** level
    for x in structured_candidates(level, 1):
        xx = _sparse_mul(x, x, table)
        for k in range(size):
            y = {k: 1}
            left = _sparse_mul(x, _sparse_mul(x, y, table), table)
            right = _sparse_mul(xx, y, table)
            if {t: c for t, c in left.items() if c} != {t: c for t, c in right.items() if c}:
                return _to_element(level, x), CDElement.basis(level, k)
    return None

