from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from equideriv.errors import ParseError
from equideriv.literal import parse_polynomial, parse_scalar
from equideriv.scalar import CyclotomicScalar, ONE, ZERO, cyclotomic_polynomial, euler_phi, zeta


def test_zeta4_squared_is_minus_one():
    assert zeta(4) ** 2 == CyclotomicScalar.rational(-1)


def test_root_of_unity_sum_vanishes():
    assert ONE + zeta(3) + zeta(3) ** 2 == ZERO
    for m in range(2, 13):
        assert sum((zeta(m, k) for k in range(m)), ZERO).is_zero()


def test_inverse_cancellation():
    a = ONE + zeta(8)
    assert a * a.inverse() == ONE
    assert a / a == ONE


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        zeta(5) / (zeta(5) - zeta(5))


def test_conjugate_examples():
    assert zeta(5).conjugate() == zeta(5, 4)
    q = CyclotomicScalar.rational(Fraction(3, 7))
    assert q.conjugate() == q
    x = zeta(12) + 2
    assert x.conjugate().conjugate() == x


@pytest.mark.parametrize("m", range(1, 30))
def test_cyclotomic_polynomial_matches_sympy(m):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(m)) == [int(c) for c in expected]
    assert euler_phi(m) == sympy.totient(m)


def test_zeta_to_the_m_is_one():
    for m in range(1, 13):
        assert zeta(m) ** m == ONE
        assert zeta(m, m) == ONE


def test_canonical_form_is_unique():
    # 1 + z + z^2 + z^3 + z^4 = 0 in Q(z_5), so -z^4 has two spellings
    a = -zeta(5, 4)
    b = ONE + zeta(5) + zeta(5, 2) + zeta(5, 3)
    assert a == b
    assert a.coeffs == b.coeffs
    assert hash(a) == hash(b)


def test_mixed_orders_lift():
    # zeta_4 lifted into Q(zeta_12) is zeta_12^3
    assert zeta(4) == zeta(12, 3)
    assert zeta(4) * zeta(3) == zeta(12, 7)
    assert hash(zeta(4)) == hash(zeta(12, 3))


def test_norm_and_trace_are_rational():
    a = ONE + 2 * zeta(7)
    assert isinstance(a.norm(), Fraction) and a.norm() != 0
    # trace of zeta_p over Q is -1 for prime p; norm of 1 + 2 zeta_7 is (2^7 + 1) / 3
    assert zeta(7).trace() == -1
    assert a.norm() == Fraction(2 ** 7 + 1, 3)


def test_literal_examples():
    assert parse_scalar("1/2*z^3 - 2", 4) == CyclotomicScalar.rational(Fraction(1, 2)) * zeta(4, 3) - 2
    assert parse_scalar("z^-1", 6) == zeta(6, 5)
    assert parse_scalar("(1+z)/(1+z)", 8) == ONE
    with pytest.raises(ParseError) as err:
        parse_scalar("1 + * 2")
    assert err.value.column is not None
    with pytest.raises(ParseError):
        parse_scalar("x0", 1)
    with pytest.raises(ParseError, match="division by zero"):
        parse_scalar("1/(z - z)", 3)


def test_literal_round_trip_polynomial():
    f = parse_polynomial("(1/2)*x0^2 - z*x1 + 3", 2, 3)
    assert parse_polynomial(f.to_literal(), 2, 3) == f


ORDERS = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])


@st.composite
def scalars(draw, order=None):
    m = draw(ORDERS) if order is None else order
    n = euler_phi(m)
    nums = draw(st.lists(st.integers(-9, 9), min_size=n, max_size=n))
    den = draw(st.integers(1, 6))
    out = ZERO
    for k, c in enumerate(nums):
        out = out + CyclotomicScalar.rational(Fraction(c, den)) * zeta(m, k)
    return out


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == ZERO
    if not a.is_zero():
        assert a * a.inverse() == ONE


@given(scalars(), scalars())
def test_conjugation_is_an_automorphism(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert a.conjugate().conjugate() == a


@given(scalars())
def test_literal_round_trip(a):
    m = a.order
    assert parse_scalar(a.to_literal(), m) == a


@given(scalars(order=12), st.integers(-6, 6))
def test_integer_powers(a, k):
    if a.is_zero() and k < 0:
        return
    p = a ** k
    if k >= 0:
        expected = ONE
        for _ in range(k):
            expected = expected * a
    else:
        expected = ONE
        for _ in range(-k):
            expected = expected / a
    assert p == expected
