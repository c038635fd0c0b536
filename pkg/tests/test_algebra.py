"""Exact arithmetic: polynomials, the rational-function field, brackets,
canonical text and JSON round-trips."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crtasep.algebra import (
    MultiPoly,
    QtxExpr,
    RatFunc,
    canonical_string,
    from_json,
    parse,
    poly_divexact,
    poly_gcd,
    qt_bracket,
    qt_factorial,
    qt_factorial_ratio,
    qtx_sum,
    ratfunc_sum,
    t_bracket,
    t_factorial,
    to_json,
)
from crtasep.errors import ParseError, PoleError

Q = MultiPoly.q
T = MultiPoly.t
X = MultiPoly.x


# -- strategies --------------------------------------------------------------

coeffs = st.fractions(
    min_value=Fraction(-9), max_value=Fraction(9), max_denominator=4
).filter(lambda c: c != 0)


@st.composite
def qt_polys(draw, max_terms=4, max_exp=4):
    terms = draw(
        st.dictionaries(
            st.tuples(st.integers(0, max_exp), st.integers(0, max_exp)),
            coeffs,
            min_size=1,
            max_size=max_terms,
        )
    )
    return MultiPoly({(eq, et, ()): c for (eq, et), c in terms.items()})


@st.composite
def ratfuncs(draw):
    num = draw(qt_polys())
    den = draw(qt_polys().filter(lambda p: not p.is_zero()))
    return RatFunc(num, den)


@st.composite
def qtx_exprs(draw, nvars=3):
    n_terms = draw(st.integers(0, 4))
    coeffs_map = {}
    for _ in range(n_terms):
        xs = tuple(draw(st.integers(0, 3)) for _ in range(nvars))
        coeffs_map[xs] = draw(ratfuncs())
    return QtxExpr(coeffs_map)


# -- brackets ----------------------------------------------------------------


def test_qt_bracket_values():
    assert qt_bracket(1) == RatFunc(MultiPoly.one() - Q() * T(), MultiPoly.one() - T())
    assert qt_bracket(0) == RatFunc.one()
    # q = 1 recovers the t-bracket
    assert qt_bracket(3).subs_q(1) == RatFunc(t_bracket(3))


def test_qt_bracket_q1_matches_t_bracket_up_to_20():
    for i in range(1, 21):
        assert qt_bracket(i).subs_q(1) == RatFunc(t_bracket(i))


def test_t_bracket_values():
    assert t_bracket(1) == MultiPoly.one()
    assert t_bracket(4) == MultiPoly.one() + T() + T(2) + T(3)
    assert t_bracket(3).evaluate(1, 1) == 3
    assert t_bracket(0).is_zero()


def test_qt_factorial():
    assert qt_factorial(0) == RatFunc.one()
    want = RatFunc(
        (MultiPoly.one() - Q() * T()) * (MultiPoly.one() - Q() * T(2)),
        (MultiPoly.one() - T()) ** 2,
    )
    assert qt_factorial(2) == want
    # at q = t = 1 the factorial degenerates to the ordinary one
    assert qt_factorial(4).subs_q(1).evaluate(1, 1) == 24
    assert t_factorial(4).evaluate(1, 1) == 24


def test_qt_factorial_ratio():
    assert qt_factorial_ratio(2, 4) == qt_factorial(2) / qt_factorial(4)
    assert qt_factorial_ratio(0, 3) == qt_factorial(3).inverse()


# -- polynomial and field arithmetic ------------------------------------------


@settings(max_examples=60, deadline=None)
@given(qt_polys(), qt_polys(), qt_polys())
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=50, deadline=None)
@given(qt_polys(), qt_polys().filter(lambda p: not p.is_zero()))
def test_gcd_divides_and_divexact(a, b):
    g = poly_gcd(a, b)
    if not a.is_zero():
        assert poly_divexact(a, g) * g == a
    assert poly_divexact(b, g) * g == b


@settings(max_examples=40, deadline=None)
@given(qt_polys(), qt_polys(), qt_polys(max_terms=2))
def test_gcd_absorbs_common_factor(a, b, m):
    if a.is_zero() or b.is_zero() or m.is_zero():
        return
    g = poly_gcd(a * m, b * m)
    # m divides the gcd of (am, bm)
    assert poly_divexact(g, poly_gcd(g, m)) is not None
    poly_divexact(a * m, g)
    poly_divexact(b * m, g)


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + (b + c) == (a + b) + c
    assert (a - a).is_zero()
    if not b.is_zero():
        assert (a / b) * b == a
        assert b * b.inverse() == RatFunc.one()


@settings(max_examples=80, deadline=None)
@given(ratfuncs(), ratfuncs())
def test_canonical_equality_is_cross_multiplication(a, b):
    assert (a == b) == (a.num * b.den == b.num * a.den)


def test_canonical_sign_convention():
    r = RatFunc(MultiPoly.one(), MultiPoly.one() - T())
    # denominator leading coefficient (graded lex) is positive: t - 1
    assert r.den == T() - MultiPoly.one()
    assert r.num == -MultiPoly.one()


def test_ratfunc_rejects_x():
    with pytest.raises(ValueError):
        RatFunc(X(1))


def test_ratfunc_sum_matches_sequential():
    rs = [qt_bracket(i) for i in (1, 2, 2, 3)] + [RatFunc.const(Fraction(1, 2))]
    seq = RatFunc.zero()
    for r in rs:
        seq = seq + r
    assert ratfunc_sum(rs) == seq


# -- evaluation, specialisation ------------------------------------------------


def test_evaluate_expr():
    e = QtxExpr.one()
    assert e.evaluate(5, 7) == 1
    b = QtxExpr.from_ratfunc(qt_bracket(1))
    assert b.evaluate(1, Fraction(1, 2)) == 1
    with pytest.raises(PoleError):
        b.evaluate(2, 1)


def test_evaluate_multiplicative():
    e1 = parse("x1^2+q*t*x2")
    e2 = parse("(1-t)/(1-q*t^2)*x1*x2+3")
    pt = (Fraction(2, 3), Fraction(1, 5), (Fraction(4), Fraction(-2)))
    assert (e1 * e2).evaluate(*pt) == e1.evaluate(*pt) * e2.evaluate(*pt)


def test_specialize():
    e = parse("q*x1")
    assert e.specialize(q_to=1, x_to_one=True) == QtxExpr.one()
    e = parse("1/(1-q*t)")
    assert e.specialize(q_to=0) == QtxExpr.one()
    with pytest.raises(PoleError):
        parse("1/(1-q)").specialize(q_to=1)


def test_pole_on_vanishing_denominator():
    e = parse("(1-q*t)/(1-t)")
    assert e.evaluate(1, Fraction(1, 2)) == 1
    with pytest.raises(PoleError):
        e.evaluate(Fraction(1, 3), 1)


# -- canonical text and JSON ---------------------------------------------------


def test_canonical_string_zero_and_golden():
    assert canonical_string(QtxExpr.zero()) == "0"
    e = parse("x1^2 + q*x1*x2*(1-t)/(1-q*t)")
    golden = "(1)*x1^2+(q*t-q)/(q*t-1)*x1*x2"
    assert canonical_string(e) == golden
    assert parse(golden) == e


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse("x1 + ")
    assert err.value.pos == 5
    with pytest.raises(ParseError):
        parse("x1/x2")  # denominator involves x
    with pytest.raises(ParseError):
        parse("1/(q-q)")
    with pytest.raises(ParseError):
        parse("x0")


@settings(max_examples=150, deadline=None)
@given(qtx_exprs())
def test_text_round_trip(e):
    assert parse(canonical_string(e)) == e


def test_text_round_trip_bulk():
    rng = random.Random(20260809)
    for _ in range(1000):
        coeffs_map = {}
        for _ in range(rng.randint(0, 4)):
            xs = tuple(rng.randint(0, 3) for _ in range(rng.randint(0, 3)))
            num = MultiPoly(
                {
                    (rng.randint(0, 4), rng.randint(0, 4), ()): Fraction(
                        rng.randint(-9, 9) or 1, rng.randint(1, 4)
                    )
                    for _ in range(rng.randint(1, 3))
                }
            )
            den = MultiPoly.one() - MultiPoly.q(rng.randint(1, 3)) * MultiPoly.t(rng.randint(0, 3))
            coeffs_map[xs] = RatFunc(num, den if rng.random() < 0.5 else MultiPoly.one())
        e = QtxExpr(coeffs_map)
        assert parse(canonical_string(e)) == e


@settings(max_examples=100, deadline=None)
@given(qtx_exprs())
def test_json_round_trip(e):
    assert from_json(to_json(e)) == e
    assert from_json(to_json(e, nvars=6)) == e


def test_qtx_sum_matches_sequential():
    rng = random.Random(3)
    exprs = []
    for _ in range(12):
        exprs.append(
            QtxExpr.x_monomial(
                (rng.randint(0, 2), rng.randint(0, 2)),
                qt_factorial_ratio(rng.randint(0, 2), rng.randint(2, 4)),
            )
        )
    seq = QtxExpr.zero()
    for e in exprs:
        seq = seq + e
    assert qtx_sum(exprs) == seq


def test_swap_x():
    e = parse("x1^2*x2+q*x3")
    assert e.swap_x(1) == parse("x2^2*x1+q*x3")
    assert e.swap_x(1).swap_x(1) == e
