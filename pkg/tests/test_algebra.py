from fractions import Fraction

import pytest

from rigidcalc.algebra import (
    Constraint,
    ParameterWitness,
    ParamPoly,
    ThetaPoly,
    evaluate,
    poly_arith,
    rational_roots,
    substitute_affine,
)
from rigidcalc.errors import DivisionNotExact, UnassignedSymbol, WitnessViolation, ZeroDivisor, ZeroPolynomial
from rigidcalc.expr import parse_param, parse_theta_poly

T = ThetaPoly.theta()
a, b = ParamPoly.symbol("a"), ParamPoly.symbol("b")


def P(src):
    return parse_theta_poly(src)


def test_difference_of_squares():
    assert poly_arith(T - 1, T + 1, "mul") == T**2 - 1


def test_exact_div_inverts_product():
    assert poly_arith(T**2 - 1, T - 1, "exact_div") == T + 1


def test_exact_div_with_remainder():
    with pytest.raises(DivisionNotExact):
        poly_arith(T**2 - 1, T, "exact_div")


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisor):
        poly_arith(T, ThetaPoly(), "exact_div")


def test_fourier_substitution_of_theta():
    assert substitute_affine(T, -1, -1) == P("-1-T")


def test_halving_substitution():
    assert substitute_affine(P("-6-4*T"), Fraction(1, 2), 0) == P("-6-2*T")


def test_identity_substitution():
    p = P("T^3 - 2*a*T + b")
    assert substitute_affine(p, 1, 0) == p


def test_constant_substitution():
    assert substitute_affine(P("T^2+3"), 0, 2) == ThetaPoly.const(7)


def test_evaluate_param():
    assert evaluate(parse_param("2*b-1"), {"b": Fraction(3, 4)}) == Fraction(1, 2)


def test_evaluate_theta_poly():
    assert evaluate(P("T+1-2*b"), {"b": Fraction(3, 4)}) == P("T-1/2")


def test_evaluate_mixed_quadratic():
    w = {"a": Fraction(2, 3), "b": Fraction(3, 4)}
    assert evaluate(parse_param("12*a^2-16*b^2-12*a+43"), w) == Fraction(94, 3)


def test_evaluate_missing_symbol():
    with pytest.raises(UnassignedSymbol):
        evaluate(parse_param("a+b"), {"a": 1})


def test_roots_of_indicial_at_zero():
    assert sorted(rational_roots(P("T^2*(T-1)*(T+1)"))) == [-1, 0, 0, 1]


def test_no_rational_roots():
    assert rational_roots(P("T^2+1")) == []


def test_roots_with_denominator():
    assert sorted(rational_roots(P("(2*T-1)*(T-3)"))) == [Fraction(1, 2), 3]


def test_roots_of_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        rational_roots(ThetaPoly())


def test_roots_high_multiplicity_and_large_coefficients():
    p = P("(2*T+5)^2*(2*T-3)^2*(2*T+1)^3*(T^2+T+1)")
    assert sorted(rational_roots(p)) == sorted(
        [Fraction(-5, 2)] * 2 + [Fraction(3, 2)] * 2 + [Fraction(-1, 2)] * 3
    )


def test_roots_close_together():
    p = ThetaPoly.from_roots([Fraction(97, 100), Fraction(98, 100), Fraction(-3, 100)])
    assert sorted(rational_roots(p)) == [Fraction(-3, 100), Fraction(97, 100), Fraction(49, 50)]


def test_param_poly_canonical_printing():
    assert str(parse_param("b*a - a*b + 2*mu - 1/2")) == str(parse_param("2*mu-1/2"))


def test_param_exact_div():
    num = parse_param("a^2-b^2")
    assert num.exact_div(parse_param("a-b")) == parse_param("a+b")
    with pytest.raises(DivisionNotExact):
        num.exact_div(parse_param("a+1"))


def test_affine_parts():
    const, coeffs = parse_param("2*b+4-mu").affine_parts()
    assert const == 4 and coeffs == {"b": 2, "mu": -1}


def test_witness_rejects_violated_constraint():
    with pytest.raises(WitnessViolation):
        ParameterWitness(
            {"b": Fraction(3, 4)}, (Constraint(parse_param("b"), "!=", parse_param("3/4"), text="b != 3/4"),)
        )


def test_witness_nonint_constraint():
    with pytest.raises(WitnessViolation):
        ParameterWitness({"b": Fraction(1, 2)}, (Constraint(parse_param("2*b"), "nonint", text="2b"),))
    w = ParameterWitness({"b": Fraction(3, 5)}, (Constraint(parse_param("2*b"), "nonint", text="2b"),))
    assert w.value("b") == Fraction(3, 5)


def test_falling_factorial():
    assert ThetaPoly.falling(3) == P("T*(T-1)*(T-2)")
