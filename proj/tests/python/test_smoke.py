from fractions import Fraction

import pytest

import superspace as ss


def test_parse_and_format():
    p = ss.poly("3/2*x1^2*e1*e2 - x2", 2, 1)
    assert str(p) == "3/2*x1^2*e1*e2 - x2"
    assert ss.Polynomial.from_json(p.to_json()) == p
    assert str(ss.poly("e2*e1", 0, 1)) == "-e1*e2"


def test_parse_error_has_position():
    with pytest.raises(ss.ParseError, match="position 5"):
        ss.poly("x1 + x3", 2, 0)


def test_laplace_of_x_squared():
    for m, n in [(3, 1), (2, 2), (0, 1)]:
        s = ss.SpaceParams(m, n)
        assert ss.laplace(ss.r2(s)) == ss.Polynomial.constant(s, 2 * s.M)


def test_dimensions():
    s = ss.SpaceParams(2, 1)
    assert ss.dim_Pk(s, 2) == 8
    assert ss.dim_Hk(s, 2) == 7
    assert len(ss.harmonic_basis(s, 2)) == 7
    assert ss.dim_check(s, 2) == (7, 7)


def test_fischer():
    s = ss.SpaceParams(3, 1)
    R = ss.poly("x1^2*x2 + x3*e1*e2", 3, 1)
    parts = ss.fischer_decompose(R)
    total = ss.Polynomial.constant(s, 0)
    for i, h in parts:
        assert ss.is_harmonic(h)
        total = total + ss.r2(s) ** i * h
    assert total == R
    with pytest.raises(ss.PoleError):
        ss.fischer_decompose(ss.poly("x1*x2", 2, 1))


def test_irreps_and_f():
    s = ss.SpaceParams(2, 1)
    f = ss.f_poly(1, 0, 0, s)
    assert ss.f_coefficients(1, 0, 0, s) == [Fraction(1), Fraction(1)]
    assert ss.irrep_decompose(f) == [((1, 0, 0), f)]


def test_integrals():
    one = ss.poly("1", 3, 0)
    assert ss.pizzetti(one) == ss.PiScaledValue(4, 2)
    R = ss.poly("e1*e2", 0, 1)
    assert ss.berezin(R) == ss.superspace_pizzetti(R) == ss.PiScaledValue(1, -2)
    f = ss.f_poly(1, 0, 0, ss.SpaceParams(3, 1))
    assert ss.integral_one(f) == 1
    assert ss.general_integral([0, 1], f) == 1
    assert ss.basis_integral(0, f) == 0
    assert ss.invariant_functional_space_dim(ss.SpaceParams(2, 1)) == 2


def test_acceptance_criterion_from_python():
    passed, line = ss.run_criterion(12)
    assert passed, line
