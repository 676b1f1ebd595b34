from fractions import Fraction

from hypothesis import given, strategies as st

from cherednik.ratlinalg import (
    ALL,
    INFINITE_RATIO,
    NONE,
    ConstraintSet,
    ParamQuad,
    QMatrix,
    QuadNum,
    char_poly,
    det,
    mat_rank,
    quad_solve,
    squarefree_split,
)

small_ints = st.integers(min_value=-30, max_value=30)
fracs = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)


@given(st.integers(min_value=-10**6, max_value=10**6))
def test_squarefree_split(n):
    s, d = squarefree_split(n)
    assert s * s * d == n
    if n:
        f = 2
        while f * f <= abs(d):
            assert d % (f * f) != 0
            f += 1


@given(fracs, fracs, st.integers(min_value=-50, max_value=50))
def test_quadnum_canonical(e, f, d):
    if d == 0:
        d = 1
    q = QuadNum.make(e, f, d)
    # squarefree radicand, rational part absorbed
    s, dd = squarefree_split(q.D)
    assert s == 1 and dd == q.D
    if q.f == 0:
        assert q.D == 1
    # equal values compare equal after renormalizing
    assert q == QuadNum.make(q.e, q.f, q.D)


def test_quadnum_str():
    assert str(QuadNum.make(Fraction(3, 2))) == "3/2"
    assert str(QuadNum.make(0, 1, -1)) == "sqrt(-1)"
    assert str(QuadNum.make(0, -1, -1)) == "-sqrt(-1)"
    assert str(QuadNum.make(1, 2, 8)) == "1+4*sqrt(2)"


@given(
    st.lists(
        st.lists(fracs, min_size=3, max_size=3), min_size=1, max_size=4
    )
)
def test_rank_transpose(rows):
    m = QMatrix.from_rows(rows)
    assert mat_rank(m) == mat_rank(m.transpose())
    assert mat_rank(m) <= min(m.rows, m.cols)


@given(st.lists(st.lists(fracs, min_size=3, max_size=3), min_size=3, max_size=3))
def test_char_poly_trace_det(rows):
    m = QMatrix.from_rows(rows)
    cp = char_poly(m)
    assert cp[3] == 1
    assert cp[2] == -m.trace()
    # determinant from the constant coefficient
    assert det(m) == -cp[0]
    # rank deficiency iff det = 0
    assert (mat_rank(m) < 3) == (det(m) == 0)


def test_char_poly_identity():
    cp = char_poly(QMatrix.identity(4))
    assert cp == (1, -4, 6, -4, 1)


@given(small_ints, small_ints, small_ints, small_ints, small_ints, small_ints)
def test_quad_solve_membership(a1, b1, d1, a2, b2, d2):
    q1 = ParamQuad.make(a1, b1, d1)
    q2 = ParamQuad.make(a2, b2, d2)
    cset = quad_solve(q1, q2)
    # rational probe points: (cl, cs) = (1, r) for small rationals r
    for num in range(-6, 7):
        for den in (1, 2, 3):
            r = Fraction(num, den)
            both = q1.evaluate(1, r) == 0 and q2.evaluate(1, r) == 0
            assert cset.contains_ratio(QuadNum.make(r)) == both
    # and cl = 0
    both_inf = q1.evaluate(0, 1) == 0 and q2.evaluate(0, 1) == 0
    assert cset.contains_ratio(INFINITE_RATIO) == both_inf


def test_quad_solve_kinds():
    assert quad_solve(ParamQuad.make(0, 0, 0), ParamQuad.make(0, 0, 0)).kind == ALL
    # cl*cs = 0 and cs^2 = 0: only cs = 0
    cset = quad_solve(ParamQuad.make(0, 1, 0), ParamQuad.make(0, 0, 1))
    assert cset.kind == "CS_ZERO"
    # cl^2 + cs^2 = 0: the two imaginary ratios
    cset = quad_solve(ParamQuad.make(1, 0, 1), ParamQuad.make(0, 0, 0))
    assert str(cset) == "cs/cl in {-sqrt(-1), sqrt(-1)}"
    assert not cset.contains_ratio(QuadNum.make(1))
    # incompatible quadratics
    cset = quad_solve(ParamQuad.make(1, 0, 0), ParamQuad.make(0, 0, 1))
    assert cset.kind == NONE


def test_constraint_set_strings():
    cs = ConstraintSet.from_points(
        frozenset({QuadNum.make(2), QuadNum.make(-2), INFINITE_RATIO})
    )
    assert str(cs) == "cs/cl in {-2, 2, inf}"
    assert cs.contains_ratio(2) and cs.contains_ratio(INFINITE_RATIO)
    assert not cs.contains_ratio(0)
