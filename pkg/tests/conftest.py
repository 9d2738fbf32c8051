from fractions import Fraction

from hypothesis import settings, strategies as st

from flagdeg.quiver import RepClass, intervals

settings.register_profile("flagdeg", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("flagdeg")

rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


def rational_matrices(rows, cols):
    return st.lists(st.lists(rationals, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda m: tuple(tuple(r) for r in m)
    )


@st.composite
def rep_classes(draw, max_n=5, max_mult=2):
    n = draw(st.integers(1, max_n))
    mult = {iv: draw(st.integers(0, max_mult)) for iv in intervals(n)}
    return RepClass(n, mult)


@st.composite
def rep_pairs(draw, max_n=6, max_mult=2):
    n = draw(st.integers(1, max_n))
    a = RepClass(n, {iv: draw(st.integers(0, max_mult)) for iv in intervals(n)})
    b = RepClass(n, {iv: draw(st.integers(0, max_mult)) for iv in intervals(n)})
    return a, b
