from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from relmin.algebra.cayley_dickson import CDElement
from relmin.groups.heisenberg import BiadditiveMap, HeisenbergElement, SubgroupFamily, Vector
from relmin.groups.unitriangular import UniTriMatrix, from_entries


class Sampler:
    """
    Seeded source of exact test data. Rationals have numerator uniform in
    {-M..M} and denominator uniform in {1..M}; Fraction keeps them in lowest terms.
    """

    def __init__(self, seed: int, coeff_magnitude: int):
        self.rng = np.random.default_rng(seed)
        self.magnitude = coeff_magnitude

    def integer(self, low: int, high: int) -> int:
        """Uniform in low..high inclusive."""
        return int(self.rng.integers(low, high + 1))

    def rational(self) -> Fraction:
        m = self.magnitude
        return Fraction(int(self.rng.integers(-m, m + 1)), int(self.rng.integers(1, m + 1)))

    def nonzero_rational(self) -> Fraction:
        while True:
            q = self.rational()
            if q != 0:
                return q

    def cd(self, level: int) -> CDElement:
        m = self.magnitude
        size = 2 ** level
        numerators = self.rng.integers(-m, m + 1, size=size)
        denominators = self.rng.integers(1, m + 1, size=size)
        return CDElement(level, tuple(Fraction(int(p), int(q)) for p, q in zip(numerators, denominators)))

    def nonzero_cd(self, level: int) -> CDElement:
        while True:
            x = self.cd(level)
            if not x.is_zero():
                return x

    def vector(self, level: int, n: int) -> Vector:
        return tuple(self.cd(level) for _ in range(n))

    def nonzero_vector(self, level: int, n: int) -> Vector:
        while True:
            v = self.vector(level, n)
            if any(not c.is_zero() for c in v):
                return v

    def heisenberg(self, w: BiadditiveMap, family: Optional[SubgroupFamily] = None) -> HeisenbergElement:
        level = w.scalar_level
        a = self.cd(level)
        x = self.vector(level, w.dim)
        f = self.vector(level, w.dim)
        if family is not None:
            zero = CDElement.zero(level)
            if family in (SubgroupFamily.E_ONLY, SubgroupFamily.F_ONLY, SubgroupFamily.E_CROSS_F):
                a = zero
            if family in (SubgroupFamily.CENTER_A, SubgroupFamily.A_CROSS_F, SubgroupFamily.F_ONLY):
                x = w.zero_vector()
            if family in (SubgroupFamily.CENTER_A, SubgroupFamily.A_CROSS_E, SubgroupFamily.E_ONLY):
                f = w.zero_vector()
        return HeisenbergElement(w, a, x, f)

    def unitriangular(self, level: int, size: int, first_free_row: int = 0) -> UniTriMatrix:
        """Random entries above the diagonal from row `first_free_row` (0-based) on."""
        entries = {(r, c): self.cd(level)
                   for r in range(first_free_row, size) for c in range(r + 1, size)}
        return from_entries(level, size, entries)

    def tilde(self, size: int, i: int) -> UniTriMatrix:
        """A level-0 member of the subgroup with rows 1..i-1 trivial."""
        return self.unitriangular(0, size, first_free_row=i - 1)

    def escaping_vector(self, level: int, n: int) -> Tuple[Vector, Fraction]:
        """(v, eps0) with some coordinate of squared norm above 1/eps0^2."""
        eps0 = Fraction(1, self.integer(1, self.magnitude))
        threshold = 1 / (eps0 * eps0)
        v = list(self.vector(level, n))
        i = self.integer(0, n - 1)
        c = self.nonzero_cd(level)
        scale = 2
        while scale * scale * c.norm_form() <= threshold:
            scale *= 2
        v[i] = c.scale(scale)
        return tuple(v), eps0
