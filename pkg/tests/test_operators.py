from fractions import Fraction

import pytest

from rigidcalc import fixtures as F
from rigidcalc.algebra import ParameterWitness, ThetaPoly, rational_roots
from rigidcalc.errors import NotLeftDivisible, NotSingular, UncertifiedExponent, ZeroOperator
from rigidcalc.expr import parse_delta, parse_operator, parse_param, parse_theta_poly
from rigidcalc.operators import (
    INF,
    RiemannScheme,
    ThetaFormOperator,
    fourier_quotient,
    ft_raw,
    ft_theta,
    indicial_at,
    inversion_normalized,
    kummer_pullback,
    left_factor_divide,
    left_multiply,
    match_up_to_twist,
    minimality_certificate,
    newton_slopes_at_infinity,
    op_mul,
    riemann_scheme,
    to_delta_form,
    to_theta_form,
    twist_shift,
)

op = parse_operator
g = F.get


def roots(poly):
    return sorted(rational_roots(poly))


def values(exps):
    return sorted(e.constant_value() for e in exps)


def w(**values):
    return ParameterWitness({k: Fraction(v) for k, v in values.items()})


def test_theta_times_x():
    assert op_mul(op("T"), op("x")) == op("x*(T+1)")


def test_unit():
    P = g("op.P13")
    assert op_mul(P, ThetaFormOperator.one()) == P
    assert op_mul(ThetaFormOperator.one(), P) == P


def test_falling_product_matches_delta_power():
    assert op_mul(op("T"), op("T-1")) == op("x^2*d^2")


def test_delta_form_of_theta():
    assert to_delta_form(op("T")) == parse_delta("x*d")
    assert to_delta_form(op("T*(T-1)")) == parse_delta("x^2*d^2")


def test_theta_form_of_d_records_x_power():
    e, form = to_theta_form(parse_delta("d"))
    assert e == 1 and form == op("T")


def test_ft_raw_of_theta():
    assert ft_raw(parse_delta("x*d")) == parse_delta("-x*d - 1")


def test_ft_raw_twice_on_x():
    assert ft_raw(ft_raw(parse_delta("x"))) == parse_delta("-x")


def test_ft_raw_mixed():
    assert ft_raw(parse_delta("d^2 + x")) == parse_delta("x^2 + d")


def test_ft_theta_of_x_is_d():
    # x^1 * FT(x) = x*d = T
    assert ft_theta(op("x")) == op("T")


def test_ft_of_pprime_top_coefficient():
    H = fourier_quotient(g("op.Pprime.E1E3"), 6)
    assert H.coeff(6) == parse_theta_poly("4*(T+mu+1)")


def test_ft_of_pprime_e2_top_coefficient():
    H = fourier_quotient(g("op.Pprime.E2"), 6)
    assert H.coeff(6) == parse_theta_poly("-256*(2*T+3)")


def test_fourier_quotient_displayed_h0():
    H = fourier_quotient(g("op.Pprime.E1E3"), 6)
    assert H.coeff(0) == parse_theta_poly(
        "-(mu-4+T)*(mu+T)*(mu-2+T)*(mu-3-2*b+T)*(mu-3+2*b+T)*(mu-1-2*b+T)*(mu-1+2*b+T)"
    )


def test_pullback_identity():
    assert kummer_pullback(g("op.P13"), 1) == g("op.P13")


def test_pullback_of_l_top_term():
    assert kummer_pullback(g("op.L.E1E3"), 2).coeff(6) == parse_theta_poly("-2*(T+3)")


def test_pullback_doubles_exponents_at_zero():
    assert roots(indicial_at(kummer_pullback(g("op.P13"), 2), 0)) == [-2, 0, 0, 2]


def test_inversion_involution():
    P = g("op.Pprime.E1E3")
    assert inversion_normalized(inversion_normalized(P)) == P


def test_inversion_exponents_of_p13():
    ind = indicial_at(inversion_normalized(g("op.P13")), 0)
    want = [parse_param(s) for s in ("1-b", "1+b", "2-b", "2+b")]
    from rigidcalc.operators import certify_exponents

    assert certify_exponents(ind, want).degree == 0


def test_inversion_exponents_of_pprime():
    ind = indicial_at(inversion_normalized(g("op.Pprime.E1E3")), 0)
    from rigidcalc.operators import certify_exponents

    want = ["2*b+4-mu", "2*b+2-mu", "5-mu", "3-mu", "1-mu", "-2*b+2-mu", "-2*b+4-mu"]
    assert certify_exponents(ind, [parse_param(s) for s in want]).degree == 0


def test_twist_zero_and_inverse():
    P = g("op.L.E1E3")
    s = parse_param("mu-2")
    assert twist_shift(P, 0) == P
    assert twist_shift(twist_shift(P, s), -s) == P


def test_twisted_pullback_gives_h():
    L2 = kummer_pullback(g("op.L.E1E3"), 2)
    assert twist_shift(L2, parse_param("mu-2")).scale(-2) == g("op.H.E1E3")


def test_left_factor_divide_displayed():
    H = left_factor_divide(ft_theta(g("op.Pprime.E1E3")), ThetaPoly.falling(6))
    assert H == g("op.H.E1E3")


def test_left_factor_divide_round_trip():
    Q = parse_theta_poly("(T-2)*(T+a)")
    H = op("T^2 + x*(T-b) + x^3*mu")
    assert left_factor_divide(left_multiply(Q, H), Q) == H


def test_left_factor_divide_failure():
    with pytest.raises(NotLeftDivisible):
        left_factor_divide(op("x*(T+1)"), parse_theta_poly("T-5"))


def test_indicial_examples():
    P = g("op.P13")
    assert roots(indicial_at(P, 0)) == [-1, 0, 0, 1]
    assert roots(indicial_at(P, 4, w(a="2/3", b="3/5"))) == [0, 1, 1, 2]
    assert roots(indicial_at(P, 1, w(a="2/3", b="3/5"))) == [0, Fraction(1, 3), Fraction(2, 3), 1]


def test_indicial_of_zero_operator():
    with pytest.raises(ZeroOperator):
        indicial_at(ThetaFormOperator(), 0)


def test_scheme_of_p2():
    S = riemann_scheme(g("op.P2"), [0, 1, 4, INF], w(a="2/3"))
    assert values(S.at(INF)) == [1, 2]
    assert values(S.at(1)) == [Fraction(-2, 3), Fraction(-1, 3)]


def test_scheme_of_pprime_e2():
    S = riemann_scheme(g("op.Pprime.E2"), [-2, -1, 0, 1, 2, INF], w(a="2/3"))
    want = sorted([Fraction(1, 2), 5, 4, 3, 2, 1, 0])
    for pt in (-2, 0, 2):
        assert values(S.at(pt)) == want


def test_scheme_of_p4():
    S = riemann_scheme(g("op.P4"), [0, 1, 4, 9, INF], w(t=2))
    assert values(S.at(INF)) == [Fraction(1, 2), Fraction(3, 2), Fraction(3, 2), Fraction(5, 2)]


def test_scheme_rejects_regular_point():
    with pytest.raises(NotSingular):
        riemann_scheme(g("op.P13"), [2], w(a="2/3", b="3/5"))


def test_slopes():
    half, zero = Fraction(1, 2), Fraction(0)
    assert newton_slopes_at_infinity(g("op.L.E1E3")) == [(zero, 1), (half, 6)]
    assert newton_slopes_at_infinity(kummer_pullback(g("op.L.E1E3"), 2)) == [(zero, 1), (Fraction(1), 6)]
    assert newton_slopes_at_infinity(g("op.P13")) == [(zero, 4)]


def test_match_e1e3():
    m = match_up_to_twist(g("op.H.E1E3"), kummer_pullback(g("op.L.E1E3"), 2))
    assert m.scale == -2 and m.shift == parse_param("mu-2")


def test_match_self():
    P = g("op.P4")
    m = match_up_to_twist(P, P)
    assert m.scale == 1 and m.shift == 0


def test_match_e4():
    m = match_up_to_twist(g("op.H.E4"), kummer_pullback(g("op.L.E4"), 2))
    assert m.scale == -128 and m.shift == Fraction(5, 2)


def test_match_absent():
    assert match_up_to_twist(g("op.H.E4"), kummer_pullback(g("op.L.E1E3"), 2)) is None


def test_minimality_pprime():
    rep = minimality_certificate(g("op.Pprime.E1E3"), g("scheme.Pprime.E1E3"), [g("case.E1")], 6)
    assert rep.no_negative_integer_exponents and rep.no_integer_roots_at_zero and rep.ok


def test_minimality_negative_exponent():
    P = op("(T+1)*(T-2) + x*(T+3)")
    rep = minimality_certificate(P, RiemannScheme({0: [-1, 2]}), factor_degree=0)
    assert not rep.no_negative_integer_exponents


def test_minimality_rejects_bad_claim():
    with pytest.raises(UncertifiedExponent):
        minimality_certificate(g("op.P13"), RiemannScheme({0: [-1, 0, 0, 2]}))
