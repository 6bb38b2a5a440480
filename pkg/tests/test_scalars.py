import random
from fractions import Fraction

import pytest

from qball.scalars import DomainError, GaussianRational, Scalar, scalar_eval


def test_eval_one_minus_q2():
    assert scalar_eval(Scalar.one_minus_q2(), 0.5) == pytest.approx(0.75)


def test_eval_negative_exponent():
    assert scalar_eval(Scalar.q(-1), 0.5) == pytest.approx(2.0)


def test_eval_conjugate_of_iq():
    s = (Scalar.i() * Scalar.q()).conjugate()
    assert scalar_eval(s, 0.5) == pytest.approx(-0.5j)


def test_eval_domain_error():
    with pytest.raises(DomainError):
        Scalar.q().evaluate(1.0)
    with pytest.raises(DomainError):
        Scalar.q().evaluate(-0.1)


def test_zero_coefficients_dropped():
    s = Scalar.q(3) - Scalar.q(3)
    assert s.is_zero()
    assert s == Scalar.zero()


def test_conjugation_fixes_exponents():
    s = Scalar({2: GaussianRational(1, 3), -1: GaussianRational(0, -2)})
    c = s.conjugate()
    assert dict(c.items()) == {
        2: GaussianRational(1, -3), -1: GaussianRational(0, 2)}
    assert c.conjugate() == s


def _random_scalar(rng):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        k = rng.randint(-3, 3)
        terms[k] = GaussianRational(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
    return Scalar(terms)


def test_eval_is_ring_homomorphism():
    rng = random.Random(5)
    for _ in range(200):
        s, t = _random_scalar(rng), _random_scalar(rng)
        q = rng.uniform(0.05, 0.95)
        prod = (s * t).evaluate(q)
        expected = s.evaluate(q) * t.evaluate(q)
        assert prod == pytest.approx(expected, rel=1e-12, abs=1e-12)
        assert (s + t).evaluate(q) == pytest.approx(
            s.evaluate(q) + t.evaluate(q), rel=1e-12, abs=1e-12)


def test_exact_arithmetic_associativity():
    rng = random.Random(6)
    for _ in range(100):
        a, b, c = (_random_scalar(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_monomial_inverse():
    s = Scalar({-2: GaussianRational(Fraction(3, 2), 1)})
    assert s * s.inverse() == Scalar.one()
    with pytest.raises(ZeroDivisionError):
        (Scalar.one() + Scalar.q()).inverse()


def test_immutable():
    s = Scalar.one()
    with pytest.raises(AttributeError):
        s._coeffs = {}
