"""
Neighborhood oracles: the two capabilities of a coarser group topology's
filter at zero that the unbounded-neighborhood argument actually uses.

    shrink(V, k)  -> W  with every k-fold sum of elements of W inside V
    escape(W, r)  -> x  in W with A(x)^2 >= r^2

The built-in instance is the Kronecker topology on Q: neighbourhoods
{x : dist(x, Z) < d1 and dist(sqrt(2)*x, Z) < d2}. Every test on sqrt(2) is
reduced to integer comparisons of squares.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, isqrt
from typing import Any, Dict, Iterator, Protocol, Tuple

from sympy.ntheory.continued_fraction import (
    continued_fraction_convergents,
    continued_fraction_periodic,
)

from relmin.algebra.scalars import RationalLike, format_rational, to_rational
from relmin.errors import DomainError, OracleContractError

logger = logging.getLogger(__name__)

SAMPLE_DENOMINATOR = 1000
SAMPLE_CONVERGENTS = 8


class NeighborhoodOracle(Protocol):
    def describe(self, neighborhood: Any) -> Dict[str, Any]: ...

    def shrink(self, neighborhood: Any, k: int) -> Any: ...

    def escape(self, neighborhood: Any, r: Fraction) -> Fraction: ...

    def contains(self, neighborhood: Any, x: Fraction) -> bool: ...

    def sample_member(self, neighborhood: Any, rng) -> Fraction: ...


# ----------------------
# Exact comparisons against sqrt(2) * x
# ----------------------

def _sqrt2_lt(x: Fraction, b: Fraction) -> bool:
    """sqrt(2)*x < b."""
    if x == 0:
        return b > 0
    if x > 0:
        return b > 0 and 2 * x * x < b * b
    return b >= 0 or 2 * x * x > b * b


def _sqrt2_gt(x: Fraction, b: Fraction) -> bool:
    """sqrt(2)*x > b."""
    return _sqrt2_lt(-x, -b)


def _floor_sqrt2_times(x: Fraction) -> int:
    """floor(sqrt(2)*x) for x >= 0."""
    num, den = x.numerator, x.denominator
    return isqrt((2 * num * num) // (den * den))


def dist_to_integers(x: Fraction) -> Fraction:
    frac = x - floor(x)
    return min(frac, 1 - frac)


def sqrt2_dist_lt(x: Fraction, delta: Fraction) -> bool:
    """dist(sqrt(2)*x, Z) < delta, for 0 < delta <= 1/2."""
    x = abs(x)
    base = _floor_sqrt2_times(x)
    for p in (base, base + 1):
        if _sqrt2_gt(x, p - delta) and _sqrt2_lt(x, p + delta):
            return True
    return False


def sqrt2_convergents() -> Iterator[Tuple[int, int]]:
    """(p, q) for the convergents p/q of sqrt(2) = [1; 2, 2, 2, ...]."""
    for c in continued_fraction_convergents(continued_fraction_periodic(0, 1, 2)):
        yield int(c.p), int(c.q)


@lru_cache(maxsize=None)
def _good_denominators(delta: Fraction) -> Tuple[int, ...]:
    """The first few convergent denominators q with |q*sqrt(2) - p| < delta."""
    found = []
    for p, q in sqrt2_convergents():
        if _sqrt2_gt(Fraction(q), p - delta) and _sqrt2_lt(Fraction(q), p + delta):
            found.append(q)
            if len(found) == SAMPLE_CONVERGENTS:
                break
    return tuple(found)


@dataclass(frozen=True)
class KroneckerNeighborhood:
    delta1: Fraction
    delta2: Fraction


class KroneckerOracle:
    """Oracle for the Kronecker topology on Q induced by alpha = sqrt(2)."""

    def __init__(self, delta1: RationalLike = Fraction(1, 2), delta2: RationalLike = Fraction(1, 2)):
        delta1, delta2 = to_rational(delta1), to_rational(delta2)
        for name, delta in (("delta1", delta1), ("delta2", delta2)):
            if not 0 < delta <= Fraction(1, 2):
                raise DomainError(f"{name} must satisfy 0 < {name} <= 1/2; got {delta}")
        self.root = KroneckerNeighborhood(delta1, delta2)

    def describe(self, neighborhood: KroneckerNeighborhood) -> Dict[str, Any]:
        return {
            "alpha": "sqrt(2)",
            "delta1": format_rational(neighborhood.delta1),
            "delta2": format_rational(neighborhood.delta2),
        }

    def shrink(self, neighborhood: KroneckerNeighborhood, k: int) -> KroneckerNeighborhood:
        if k < 1:
            raise DomainError(f"shrink factor must be >= 1; got {k}")
        return KroneckerNeighborhood(neighborhood.delta1 / k, neighborhood.delta2 / k)

    def contains(self, neighborhood: KroneckerNeighborhood, x: RationalLike) -> bool:
        x = to_rational(x)
        return dist_to_integers(x) < neighborhood.delta1 and sqrt2_dist_lt(x, neighborhood.delta2)

    def escape(self, neighborhood: KroneckerNeighborhood, r: RationalLike) -> Fraction:
        """
        First convergent denominator q of sqrt(2) with q >= r and
        |q*sqrt(2) - p| < delta2. Integers are at distance 0 from Z.
        """
        r = to_rational(r)
        delta = neighborhood.delta2
        for p, q in sqrt2_convergents():
            if abs(p * p - 2 * q * q) != 1:
                raise OracleContractError(f"{p}/{q} is not a convergent of sqrt(2)", (p, q))
            if q >= r and _sqrt2_gt(Fraction(q), p - delta) and _sqrt2_lt(Fraction(q), p + delta):
                logger.debug("escape: r=%s delta2=%s -> q=%d (p=%d)", r, delta, q, p)
                return Fraction(q)
        raise OracleContractError("convergent stream ended", r)  # unreachable: the stream is infinite

    def sample_member(self, neighborhood: KroneckerNeighborhood, rng) -> Fraction:
        """
        +-q + t with q a convergent denominator within delta2/2 of an integer
        multiple of sqrt(2) and |t| < min(delta1, delta2/3), so the offset moves
        sqrt(2)*x by less than delta2/2.
        """
        denominators = _good_denominators(neighborhood.delta2 / 2)
        q = denominators[int(rng.integers(0, len(denominators)))]
        sign = 1 if int(rng.integers(0, 2)) else -1
        bound = min(neighborhood.delta1, neighborhood.delta2 / 3)
        offset = bound * Fraction(int(rng.integers(-(SAMPLE_DENOMINATOR - 1), SAMPLE_DENOMINATOR)),
                                  SAMPLE_DENOMINATOR)
        x = sign * q + offset
        if not self.contains(neighborhood, x):
            raise OracleContractError("sampled point fell outside its neighbourhood", x)
        return x


def kronecker_oracle(delta1: RationalLike, delta2: RationalLike) -> KroneckerOracle:
    return KroneckerOracle(delta1, delta2)
