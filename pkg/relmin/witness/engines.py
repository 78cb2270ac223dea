"""
Constructive witnesses:

    escalate_unbounded     push a neighbourhood point past any norm bound
    break_compatibility    a small vector pairing to 1 with an unbounded one
    coset_projection_eq    same coset of the kernel of the j-th projection
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence

from relmin.algebra.absolute import AbsKind, AbsValueDescriptor, archimedean_witness
from relmin.algebra.cayley_dickson import CDElement, cd_invert, cd_norm_form
from relmin.algebra.scalars import RationalLike, format_rational, to_rational
from relmin.errors import (
    DomainError,
    IndexRangeError,
    OracleContractError,
    PreconditionError,
    ShapeError,
)
from relmin.groups.heisenberg import BiadditiveMap, Vector, w_eval
from relmin.report.models import PropertyResult
from relmin.witness.oracle import NeighborhoodOracle

logger = logging.getLogger(__name__)

MAX_SUMMANDS = 16


# ----------------------
# Unbounded neighbourhoods
# ----------------------

@dataclass(frozen=True)
class EscalationRequest:
    n0: int
    c_squared: Fraction
    m: int
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c_squared", to_rational(self.c_squared))
        object.__setattr__(self, "r", to_rational(self.r))
        if not isinstance(self.n0, int) or self.n0 < 1:
            raise DomainError(f"n0 must be a positive integer; got {self.n0!r}")
        if self.c_squared <= 1:
            raise DomainError(f"c_squared must exceed 1; got {self.c_squared}")
        if self.c_squared != self.n0 * self.n0:
            # oracles act on Q with the ordinary absolute value
            raise DomainError(f"c_squared must equal n0^2 = {self.n0 * self.n0}; got {self.c_squared}")
        if not isinstance(self.m, int) or self.m < 0:
            raise DomainError(f"m must be a non-negative integer; got {self.m!r}")
        if self.r <= 0:
            raise DomainError(f"r must be positive; got {self.r}")

    @classmethod
    def for_integer(cls, n0: int, m: int, r: RationalLike) -> "EscalationRequest":
        return cls(n0, Fraction(n0 * n0), m, to_rational(r))

    @classmethod
    def from_descriptor(cls, desc: AbsValueDescriptor, m: int, r: RationalLike,
                        bound: int) -> "EscalationRequest":
        """Seed n0 with the least integer of absolute value above 1."""
        if desc.kind is not AbsKind.EUCLIDEAN_CD:
            raise PreconditionError("escalation needs an archimedean absolute value",
                                    {"descriptor": desc.describe()})
        n0 = archimedean_witness(desc, bound)
        if n0 is None:
            raise PreconditionError("no integer with absolute value above 1",
                                    {"descriptor": desc.describe(), "bound": bound})
        return cls.for_integer(n0, m, r)


@dataclass(frozen=True)
class Escalation:
    x: Fraction
    x0: Fraction
    k: int
    neighborhood: Any
    norm_squared: Fraction
    lower_bound: Fraction

    def to_dict(self, oracle: NeighborhoodOracle) -> dict:
        return {
            "x": format_rational(self.x),
            "x0": format_rational(self.x0),
            "k": self.k,
            "neighborhood": oracle.describe(self.neighborhood),
            "norm_sq": format_rational(self.norm_squared),
            "lower_bound": format_rational(self.lower_bound),
        }


def escalate_unbounded(oracle: NeighborhoodOracle, neighborhood: Any,
                       req: EscalationRequest) -> Escalation:
    """
    x = n0^m * escape(shrink(V, n0^m), r). As an n0^m-fold sum of a point of the
    shrunk neighbourhood it stays in V, and A(x)^2 >= c^(2m) * r^2.
    """
    k = req.n0 ** req.m
    shrunk = oracle.shrink(neighborhood, k)
    x0 = to_rational(oracle.escape(shrunk, req.r))
    if not oracle.contains(shrunk, x0):
        raise OracleContractError("escape returned a point outside the neighbourhood", x0)
    if x0 * x0 < req.r * req.r:
        raise OracleContractError(f"escape returned a point of norm below r = {req.r}", x0)
    x = k * x0
    if not oracle.contains(neighborhood, x):
        raise OracleContractError("shrink contract violated: multiple left the neighbourhood", x)
    norm_squared = x * x
    lower_bound = req.c_squared ** req.m * req.r * req.r
    if norm_squared < lower_bound:
        raise OracleContractError("escalated point misses the norm lower bound", x)
    logger.debug("escalate m=%d k=%d x0=%s", req.m, k, x0)
    return Escalation(x, x0, k, shrunk, norm_squared, lower_bound)


def check_shrink_contract(oracle: NeighborhoodOracle, neighborhood: Any, k: int, rng,
                          samples: int, result: PropertyResult = None) -> PropertyResult:
    """Sums of k sampled members of shrink(V, k), spread over at most MAX_SUMMANDS points, stay in V."""
    if result is None:
        result = PropertyResult(f"shrink_contract_k{k}")
    start = result.checked
    shrunk = oracle.shrink(neighborhood, k)
    for index in range(samples):
        count = min(k, MAX_SUMMANDS)
        cuts = sorted({int(c) for c in rng.integers(1, k, size=count - 1)}) if k > 1 else []
        parts = [b - a for a, b in zip([0] + cuts, cuts + [k])]
        members = [oracle.sample_member(shrunk, rng) for _ in parts]
        total = sum((p * y for p, y in zip(parts, members)), Fraction(0))
        result.record(oracle.contains(neighborhood, total),
                      lambda: {"k": k, "members": [format_rational(y) for y in members],
                               "multiplicities": parts, "sum": format_rational(total)}, start + index)
    return result


# ----------------------
# Breaking compatibility
# ----------------------

@dataclass(frozen=True)
class CompatibilityWitness:
    vector: Vector
    index: int
    w_value: CDElement
    max_abs_sq: Fraction


def _escaping_index(v: Vector, eps0: Fraction) -> int:
    if eps0 <= 0:
        raise DomainError(f"eps0 must be positive; got {eps0}")
    threshold = 1 / (eps0 * eps0)
    norms = [cd_norm_form(c) for c in v]
    for i, norm in enumerate(norms):
        if norm > threshold:
            return i
    raise PreconditionError("no escaping coordinate", {
        "largest_abs_sq": format_rational(max(norms)),
        "threshold": format_rational(threshold),
    })


def _inverse_at(w: BiadditiveMap, v: Vector, i: int) -> Vector:
    zero = CDElement.zero(w.scalar_level)
    inv = cd_invert(v[i])
    return tuple(inv if k == i else zero for k in range(w.dim))


def break_compatibility(w: BiadditiveMap, xbar: Sequence[CDElement], eps0: RationalLike) -> CompatibilityWitness:
    """
    abar = x_i^-1 e_i for the first i with A(x_i) > 1/eps0. Then
    max_k A(a_k) < eps0 and w(xbar, abar) = x_i x_i^-1 = 1 in either pairing order.
    """
    xbar = w.check_vector(xbar, "x")
    eps0 = to_rational(eps0)
    i = _escaping_index(xbar, eps0)
    abar = _inverse_at(w, xbar, i)
    return CompatibilityWitness(abar, i, w_eval(w, xbar, abar), cd_norm_form(abar[i]))


def break_compatibility_dual(w: BiadditiveMap, fbar: Sequence[CDElement], eps0: RationalLike) -> CompatibilityWitness:
    """The same construction on the E side: w(xbar, fbar) = 1 with xbar small."""
    fbar = w.check_vector(fbar, "f")
    eps0 = to_rational(eps0)
    i = _escaping_index(fbar, eps0)
    xbar = _inverse_at(w, fbar, i)
    return CompatibilityWitness(xbar, i, w_eval(w, xbar, fbar), cd_norm_form(xbar[i]))


# ----------------------
# Products and cosets
# ----------------------

def _check_index(g: Sequence, j: int) -> None:
    if not isinstance(j, int) or not 1 <= j <= len(g):
        raise IndexRangeError(f"need 1 <= j <= {len(g)}; got {j!r}")


def coset_projection_eq(g: Sequence, g2: Sequence, j: int) -> bool:
    """g and g2 agree modulo H = {v : v_j = 0}, i.e. g_j == g2_j (j is 1-based)."""
    if len(g) != len(g2):
        raise ShapeError(f"length mismatch: {len(g)} vs {len(g2)}")
    _check_index(g, j)
    return g[j - 1] == g2[j - 1]


def project(g: Sequence, j: int):
    _check_index(g, j)
    return g[j - 1]


def _zero_like(c):
    if isinstance(c, CDElement):
        return CDElement.zero(c.level)
    return Fraction(0)


def coset_representative(g: Sequence, j: int) -> tuple:
    """The member of g + H that vanishes off coordinate j."""
    _check_index(g, j)
    return tuple(c if k == j - 1 else _zero_like(c) for k, c in enumerate(g))


def escalation_chain(oracle: NeighborhoodOracle, neighborhood: Any, n0: int, r: RationalLike,
                     levels: Sequence[int]) -> List[Escalation]:
    return [escalate_unbounded(oracle, neighborhood, EscalationRequest.for_integer(n0, m, r))
            for m in levels]
