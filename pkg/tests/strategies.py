from hypothesis import strategies as st

from relmin.algebra.cayley_dickson import CDElement
from relmin.groups.heisenberg import BiadditiveMap, HeisenbergElement

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda q: q != 0)


def cd_elements(level: int):
    return st.tuples(*([rationals] * 2 ** level)).map(lambda cs: CDElement(level, cs))


def nonzero_cd_elements(level: int):
    return cd_elements(level).filter(lambda x: not x.is_zero())


def vectors(level: int, n: int):
    return st.tuples(*([cd_elements(level)] * n))


def heisenberg_elements(w: BiadditiveMap):
    level, n = w.scalar_level, w.dim
    return st.builds(lambda a, x, f: HeisenbergElement(w, a, x, f),
                     cd_elements(level), vectors(level, n), vectors(level, n))


