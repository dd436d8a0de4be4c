"""Randomized algebraic laws; every suite runs at least 500 derandomized cases."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigidcalc.algebra import ParamPoly, ThetaPoly, rational_roots, substitute_affine
from rigidcalc.errors import InconsistentProfile
from rigidcalc.expr import parse_operator, print_operator
from rigidcalc.hodge import HodgeProfile, NearbyData, derive_counts
from rigidcalc.operators import (
    DeltaFormOperator,
    ThetaFormOperator,
    ft_raw,
    indicial_at,
    kummer_pullback,
    left_factor_divide,
    left_multiply,
    newton_slopes_at_infinity,
    op_mul,
    to_delta_form,
    to_theta_form,
    twist_shift,
)

SUITE = settings(max_examples=500)

small = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 6))
wide = st.integers(min_value=-(10**6), max_value=10**6)


@st.composite
def params(draw, max_terms=2):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono = tuple(draw(st.integers(0, 1)) for _ in range(4))
        terms[mono] = draw(small)
    terms[(0, 0, 0, 0)] = draw(small)
    return ParamPoly(terms)


PARAM = params(1)
CONST = small.map(ParamPoly.const)


def theta_polys(max_degree=3, symbolic=True):
    coeff = PARAM if symbolic else CONST
    return st.lists(coeff, min_size=1, max_size=max_degree + 1).map(ThetaPoly)


def int_theta_polys():
    return st.lists(wide, min_size=1, max_size=5).map(ThetaPoly)


def operators(max_x=2, max_degree=2, symbolic=True):
    coeffs = st.lists(theta_polys(max_degree, symbolic), min_size=1, max_size=max_x + 1)
    return coeffs.map(lambda cs: ThetaFormOperator(dict(enumerate(cs))))


@st.composite
def delta_operators(draw):
    terms = {}
    for _ in range(draw(st.integers(1, 4))):
        terms[(draw(st.integers(0, 3)), draw(st.integers(0, 3)))] = draw(PARAM)
    return DeltaFormOperator(terms)


# -- commutative algebra ----------------------------------------------------


@settings(max_examples=1000)
@given(int_theta_polys(), int_theta_polys(), int_theta_polys())
def test_theta_poly_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@SUITE
@given(theta_polys(), small.filter(bool), params(1))
def test_affine_substitution_inverts(p, u, v):
    back = substitute_affine(substitute_affine(p, u, v), 1 / u, -v * (1 / u))
    assert back == p


@SUITE
@given(theta_polys(), theta_polys(), st.fixed_dictionaries({s: small for s in ("a", "b", "t", "mu")}))
def test_evaluate_commutes_with_product(f, g, values):
    assert (f * g).evaluate(values) == f.evaluate(values) * g.evaluate(values)
    assert (f + g).evaluate(values) == f.evaluate(values) + g.evaluate(values)


@SUITE
@given(st.lists(small, min_size=1, max_size=5), st.integers(0, 2), small.filter(bool))
def test_rational_roots_are_complete(roots, extra, lead):
    p = ThetaPoly.from_roots(roots, lead) * (ThetaPoly.theta() ** 2 + 1) ** extra
    found = rational_roots(p)
    assert sorted(found) == sorted(roots)
    rest = p
    for r in found:
        rest = rest.exact_div(ThetaPoly([-r, 1]))
    assert rest.degree == 2 * extra


# -- operator laws ----------------------------------------------------------


@SUITE
@given(delta_operators())
def test_fourier_twice_is_sign_inversion(D):
    assert ft_raw(ft_raw(D)) == D.negate_generators()


@SUITE
@given(operators(max_x=1), operators(max_x=1), operators(max_x=1))
def test_op_mul_associative(A, B, C):
    assert op_mul(op_mul(A, B), C) == op_mul(A, op_mul(B, C))


@SUITE
@given(operators())
def test_op_mul_units(A):
    one = ThetaFormOperator.one()
    assert op_mul(A, one) == A == op_mul(one, A)


@SUITE
@given(operators())
def test_theta_delta_round_trip(A):
    e, back = to_theta_form(to_delta_form(A))
    assert e == 0 and back == A


@SUITE
@given(theta_polys(2).filter(lambda q: not q.is_zero()), operators())
def test_left_division_round_trip(Q, H):
    assert left_factor_divide(left_multiply(Q, H), Q) == H


@SUITE
@given(operators(), st.integers(1, 4), st.integers(1, 4))
def test_pullback_multiplicative(A, k, m):
    assert kummer_pullback(kummer_pullback(A, k), m) == kummer_pullback(A, k * m)


@SUITE
@given(operators(), params(1), params(1))
def test_twist_group_action(A, s1, s2):
    assert twist_shift(twist_shift(A, s1), s2) == twist_shift(A, s1 + s2)


@SUITE
@given(st.lists(small, min_size=1, max_size=4), operators(max_x=2, symbolic=False), st.integers(1, 4))
def test_pullback_scales_exponents_at_zero(roots, rest, k):
    terms = dict(rest.terms)
    terms[0] = ThetaPoly.from_roots(roots)
    A = ThetaFormOperator(terms)
    got = sorted(rational_roots(indicial_at(kummer_pullback(A, k), 0)))
    assert got == sorted(k * r for r in roots)


@SUITE
@given(st.lists(small, min_size=1, max_size=4), small)
def test_twist_shifts_exponents_at_zero(roots, s):
    A = ThetaFormOperator({0: ThetaPoly.from_roots(roots), 1: ThetaPoly([1, 1])})
    got = sorted(rational_roots(indicial_at(twist_shift(A, s), 0)))
    assert got == sorted(r - s for r in roots)


@st.composite
def fuchsian_like(draw):
    n = draw(st.integers(1, 5))
    terms = {0: ThetaPoly([draw(small) for _ in range(n)] + [draw(small.filter(bool))])}
    for i in range(1, draw(st.integers(1, 4)) + 1):
        d = draw(st.integers(0, n))
        terms[i] = ThetaPoly([draw(small) for _ in range(d + 1)])
    return ThetaFormOperator(terms)


@SUITE
@given(fuchsian_like())
def test_slope_multiplicities_sum_to_rank(A):
    assert sum(m for _, m in newton_slopes_at_infinity(A)) == A.coeff(0).degree


# -- Hodge profiles ---------------------------------------------------------


@st.composite
def point_data(draw, h):
    """Random nearby data whose full graded dimensions equal ``h``."""
    remaining = list(h)
    entries = []
    classes = ["0", "1/2", "1/3", "a", "b"]
    while any(remaining):
        tops = [p for p in range(len(remaining)) if remaining[p]]
        top = draw(st.sampled_from(tops))
        level = 0
        while top - level - 1 >= 0 and remaining[top - level - 1] and draw(st.booleans()):
            level += 1
        for q in range(top - level, top + 1):
            remaining[q] -= 1
        entries.append((draw(st.sampled_from(classes)), level, top, 1))
    return NearbyData.of(entries)


@st.composite
def consistent_profiles(draw):
    h = draw(st.lists(st.integers(0, 3), min_size=1, max_size=4).filter(lambda v: v[0] and v[-1]))
    labels = ["0", "1", "inf"][: draw(st.integers(1, 3))]
    return HodgeProfile(sum(h), tuple((l, draw(point_data(h))) for l in labels)), tuple(h)


@SUITE
@given(consistent_profiles(), st.integers(0, 3))
def test_profile_point_independence(data, bump):
    P, h = data
    assert derive_counts(P).h == h
    label, local = P.points[0]
    extra = NearbyData(local.counts + ((("0", 0, bump), 1),))
    broken = HodgeProfile(P.rank + 1, ((label, extra),) + P.points[1:])
    if len(P.points) > 1:
        with pytest.raises(InconsistentProfile):
            derive_counts(broken)


# -- text syntax ------------------------------------------------------------


@SUITE
@given(operators(max_x=3, max_degree=3))
def test_print_parse_round_trip(A):
    assert parse_operator(print_operator(A)) == A
