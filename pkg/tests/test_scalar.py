import random

import pytest

from sixvertex.rational import Q
from sixvertex.scalar import (
    GaussianRational,
    I,
    ONE,
    SQRT2,
    Scalar,
    ScalarParseError,
    ZERO,
    approx_complex,
    format_scalar,
    parse_scalar,
    ratio_power_of_i,
)

POOL_COMPONENTS = (0, 1, -1, 2, -3, Q(1, 2), Q(-2, 7), Q(5, 3))


def random_scalar(rng):
    return Scalar(*(rng.choice(POOL_COMPONENTS) for _ in range(4)))


def test_definition_examples():
    assert ONE + SQRT2 == Scalar(1, 0, 1, 0)
    assert SQRT2 * SQRT2 == Scalar(2)
    inv = (ONE + SQRT2).inverse()
    assert inv == Scalar(-1, 0, 1, 0)
    assert inv * (ONE + SQRT2) == ONE


def test_field_arith_dispatch():
    from sixvertex.scalar import field_arith

    assert field_arith(ONE, SQRT2, "add") == ONE + SQRT2
    assert field_arith(SQRT2, SQRT2, "mul") == Scalar(2)
    assert field_arith(ONE, ONE + SQRT2, "div") == Scalar(-1, 0, 1, 0)
    assert field_arith(ONE, SQRT2, "sub") == Scalar(1, 0, -1, 0)
    with pytest.raises(ZeroDivisionError):
        field_arith(ONE, ZERO, "div")
    with pytest.raises(ValueError):
        field_arith(ONE, ONE, "pow")


def test_field_axioms_randomized():
    rng = random.Random(2024)
    for _ in range(10_000):
        a, b, c = (random_scalar(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == ONE


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_pow_and_negative_exponents():
    s = Scalar(1, 1, Q(1, 2), 0)
    assert s**0 == ONE
    assert s**3 == s * s * s
    assert s**-2 == (s * s).inverse()


def test_ratio_power_of_i():
    assert ratio_power_of_i(I, ONE) == 1
    assert ratio_power_of_i(Scalar(-3), Scalar(3)) == 2
    assert ratio_power_of_i(ONE + SQRT2, ONE) is None
    with pytest.raises(ZeroDivisionError):
        ratio_power_of_i(ONE, ZERO)


def test_ratio_power_exhaustive_consistency():
    rng = random.Random(7)
    powers = (ONE, I, Scalar(-1), Scalar(0, -1))
    for _ in range(500):
        v = random_scalar(rng)
        if not v:
            continue
        e = rng.randrange(4)
        assert ratio_power_of_i(powers[e] * v, v) == e
        u = random_scalar(rng)
        got = ratio_power_of_i(u, v)
        if got is None:
            assert all(u != powers[k] * v for k in range(4))
        else:
            assert u == powers[got] * v


def test_parse_format_round_trip():
    rng = random.Random(11)
    for _ in range(500):
        s = random_scalar(rng)
        text = format_scalar(s)
        assert parse_scalar(text) == s
        assert format_scalar(parse_scalar(text)) == text


def test_grammar_examples():
    assert parse_scalar("1/2+3i+(0+1i)r2") == Scalar(Q(1, 2), 3, 0, 1)
    assert format_scalar(Scalar(Q(1, 2), 3, 0, 1)) == "1/2+3i+(0+1i)r2"
    assert parse_scalar("0") == ZERO
    assert parse_scalar("-i") == Scalar(0, -1)
    assert parse_scalar("(1)r2") == SQRT2
    assert parse_scalar("-3/4") == Scalar(Q(-3, 4))


@pytest.mark.parametrize("bad", ["", "1+", "r2", "1+(2r2", "x", "(1)r3"])
def test_parse_rejects(bad):
    with pytest.raises(ScalarParseError):
        parse_scalar(bad)


def test_approx_complex():
    v = approx_complex(ONE + SQRT2)
    assert abs(float(v.real) - 2.414213562373095) < 1e-12
    assert float(v.imag) == 0.0
    v = approx_complex(I)
    assert float(v.real) == 0.0 and float(v.imag) == 1.0
    with pytest.raises(ValueError):
        approx_complex(ONE, precision_bits=8)


def test_approx_precision_scales():
    import mpmath

    s = Scalar(Q(1, 3), 0, Q(1, 7), 0)
    hi = approx_complex(s, precision_bits=200)
    with mpmath.workprec(260):
        want = mpmath.mpf(1) / 3 + mpmath.mpf(1) / 7 * mpmath.sqrt(2)
        assert abs(hi.real - want) < mpmath.mpf(2) ** (-190)


def test_gaussian_rational_arithmetic():
    g = GaussianRational(2, 3)
    assert g * g.inverse() == GaussianRational(1)
    assert g.norm() == 13
    assert (g**3) == g * g * g
    with pytest.raises(ZeroDivisionError):
        GaussianRational(0).inverse()


def test_immutability_and_hash():
    s = Scalar(1, 2, 3, 4)
    with pytest.raises(AttributeError):
        s.re0 = Q(5)
    assert hash(Scalar(1, 2, 3, 4)) == hash(s)
    assert len({Scalar(1), Scalar(1), Scalar(2)}) == 2
