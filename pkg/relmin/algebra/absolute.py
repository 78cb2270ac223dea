"""
Absolute values on the scalar algebras.

The Euclidean absolute value on a Cayley-Dickson level is carried by its
square, the norm form N; the p-adic absolute value on Q is an exact rational.
Neither is ever turned into a float.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from sympy import isprime, multiplicity

from relmin.algebra.cayley_dickson import MAX_LEVEL, CDElement, cd_mul, cd_norm_form
from relmin.algebra.scalars import RationalLike, sqrt_sum_leq, to_rational
from relmin.codec import encode_cd, encode_rational
from relmin.errors import DomainError, ShapeError
from relmin.report.models import PropertyResult

logger = logging.getLogger(__name__)

Element = Union[CDElement, Fraction, int, str]


class AbsKind(str, Enum):
    EUCLIDEAN_CD = "euclidean_cd"
    PADIC = "padic"


@dataclass(frozen=True)
class AbsValueDescriptor:
    kind: AbsKind
    level: Optional[int] = None
    p: Optional[int] = None

    def __post_init__(self):
        kind = AbsKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is AbsKind.EUCLIDEAN_CD:
            if not isinstance(self.level, int) or not 0 <= self.level <= MAX_LEVEL:
                raise ShapeError(f"euclidean level must be in 0..{MAX_LEVEL}; got {self.level!r}")
        else:
            if not isinstance(self.p, int) or not isprime(self.p):
                raise DomainError(f"p-adic absolute value needs a prime p; got {self.p!r}")

    @classmethod
    def euclidean(cls, level: int) -> "AbsValueDescriptor":
        return cls(AbsKind.EUCLIDEAN_CD, level=level)

    @classmethod
    def padic(cls, p: int) -> "AbsValueDescriptor":
        return cls(AbsKind.PADIC, p=p)

    def describe(self) -> str:
        if self.kind is AbsKind.EUCLIDEAN_CD:
            return f"euclidean_cd({self.level})"
        return f"padic({self.p})"


def abs_squared(desc: AbsValueDescriptor, x: CDElement) -> Fraction:
    """A(x)^2 = N(x)."""
    if desc.kind is not AbsKind.EUCLIDEAN_CD:
        raise DomainError(f"abs_squared is defined for euclidean descriptors; got {desc.describe()}")
    if x.level != desc.level:
        raise ShapeError(f"descriptor level {desc.level} does not match element level {x.level}")
    return cd_norm_form(x)


def padic_valuation(q: RationalLike, p: int) -> int:
    q = to_rational(q)
    if q == 0:
        raise DomainError("the p-adic valuation of 0 is infinite")
    if not isprime(p):
        raise DomainError(f"p must be prime; got {p}")
    return int(multiplicity(p, abs(q.numerator))) - int(multiplicity(p, q.denominator))


def padic_abs(q: RationalLike, p: int) -> Fraction:
    """|q|_p = p^(-v_p(q)), and |0|_p = 0."""
    q = to_rational(q)
    if q == 0:
        return Fraction(0)
    return Fraction(p) ** -padic_valuation(q, p)


def _as_rational(x: Element) -> Fraction:
    if isinstance(x, CDElement):
        if x.level != 0:
            raise ShapeError(f"p-adic absolute value needs level-0 elements; got level {x.level}")
        return x.coeffs[0]
    return to_rational(x)


def archimedean_witness(desc: AbsValueDescriptor, bound: int) -> Optional[int]:
    """Least n <= bound with A(n) > 1, or None when no such n exists up to the bound."""
    if bound < 1:
        raise DomainError(f"bound must be >= 1; got {bound}")
    for n in range(1, bound + 1):
        if desc.kind is AbsKind.EUCLIDEAN_CD:
            if abs_squared(desc, CDElement.scalar(desc.level, n)) > 1:
                return n
        elif padic_abs(n, desc.p) > 1:
            return n
    logger.debug("no archimedean witness for %s up to %d", desc.describe(), bound)
    return None


def _encode_element(x: Element):
    if isinstance(x, CDElement):
        return encode_cd(x)
    return encode_rational(to_rational(x))


def _pair_payload(x: Element, y: Element, **extra) -> dict:
    payload = {"x": _encode_element(x), "y": _encode_element(y)}
    payload.update({k: encode_rational(v) for k, v in extra.items()})
    return payload


def _verify_euclidean(desc: AbsValueDescriptor, samples) -> List[PropertyResult]:
    positivity = PropertyResult("positivity")
    multiplicativity = PropertyResult("multiplicativity")
    triangle = PropertyResult("triangle")
    for index, (x, y) in enumerate(samples):
        nx, ny = abs_squared(desc, x), abs_squared(desc, y)
        for z, nz in ((x, nx), (y, ny)):
            positivity.record((nz == 0) == z.is_zero(),
                              lambda z=z, nz=nz: {"x": encode_cd(z), "abs_sq": encode_rational(nz)}, index)
        nxy = abs_squared(desc, cd_mul(x, y))
        multiplicativity.record(
            nxy == nx * ny,
            lambda: _pair_payload(x, y, abs_sq_product=nxy, product_of_abs_sq=nx * ny), index)
        nsum = abs_squared(desc, x + y)
        triangle.record(sqrt_sum_leq(nsum, nx, ny),
                        lambda: _pair_payload(x, y, abs_sq_sum=nsum), index)
    return [positivity, multiplicativity, triangle]


def _verify_padic(desc: AbsValueDescriptor, samples) -> List[PropertyResult]:
    p = desc.p
    positivity = PropertyResult("positivity")
    multiplicativity = PropertyResult("multiplicativity")
    strong_triangle = PropertyResult("strong_triangle")
    triangle = PropertyResult("triangle")
    equality = PropertyResult("ultrametric_equality")
    for index, (x, y) in enumerate(samples):
        qx, qy = _as_rational(x), _as_rational(y)
        ax, ay = padic_abs(qx, p), padic_abs(qy, p)
        for q, aq in ((qx, ax), (qy, ay)):
            positivity.record((aq == 0) == (q == 0),
                              lambda q=q, aq=aq: {"x": encode_rational(q), "abs": encode_rational(aq)}, index)
        axy = padic_abs(qx * qy, p)
        multiplicativity.record(axy == ax * ay,
                                lambda: _pair_payload(qx, qy, abs_product=axy), index)
        asum = padic_abs(qx + qy, p)
        strong_triangle.record(asum <= max(ax, ay),
                               lambda: _pair_payload(qx, qy, abs_sum=asum), index)
        triangle.record(asum <= ax + ay, lambda: _pair_payload(qx, qy, abs_sum=asum), index)
        if ax != ay:
            equality.record(asum == max(ax, ay), lambda: _pair_payload(qx, qy, abs_sum=asum), index)
    return [positivity, multiplicativity, strong_triangle, triangle, equality]


def verify_axioms(desc: AbsValueDescriptor, samples: Sequence[Tuple[Element, Element]]) -> List[PropertyResult]:
    """
    Exact axiom checks over sample pairs. Violations are counted, never raised;
    `[r.to_dict("axiom") for r in result]` gives the JSON report.
    """
    if desc.kind is AbsKind.EUCLIDEAN_CD:
        return _verify_euclidean(desc, samples)
    return _verify_padic(desc, samples)
