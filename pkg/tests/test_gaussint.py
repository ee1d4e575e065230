import random

import pytest

from sixvertex.gaussint import factor_gaussian, gaussian_valuations
from sixvertex.rational import Q
from sixvertex.scalar import GaussianRational


def test_factor_two():
    f = factor_gaussian(GaussianRational(2))
    assert f.factors == ((GaussianRational(1, 1), 2),)
    assert f.unit_exponent == 3  # 2 = -i * (1+i)^2
    assert f.value() == GaussianRational(2)


def test_factor_unit():
    f = factor_gaussian(GaussianRational(0, 1))
    assert f.factors == ()
    assert f.unit == GaussianRational(0, 1)


def test_factor_three_fifths():
    f = factor_gaussian(GaussianRational(Q(3, 5)))
    primes = {(p.re, p.im): e for p, e in f.factors}
    assert primes[(3, 0)] == 1
    assert primes[(2, 1)] == -1
    assert primes[(1, 2)] == -1
    assert f.value() == GaussianRational(Q(3, 5))


def test_factor_rejects_zero():
    with pytest.raises(ZeroDivisionError):
        factor_gaussian(GaussianRational(0))


def test_round_trip_randomized():
    rng = random.Random(5)
    for _ in range(200):
        re = Q(rng.randint(-30, 30), rng.randint(1, 12))
        im = Q(rng.randint(-30, 30), rng.randint(1, 12))
        if not re and not im:
            continue
        q = GaussianRational(re, im)
        f = factor_gaussian(q)
        assert f.value() == q
        # canonical associates: first quadrant, or rational inert primes
        for p, e in f.factors:
            assert e != 0
            assert (p.re > 0 and p.im >= 0) or (p.im == 0 and p.re > 0)


def test_deterministic():
    q = GaussianRational(Q(-7, 4), Q(3, 2))
    assert factor_gaussian(q) == factor_gaussian(q)


def test_valuations_match_exponent_arithmetic():
    rng = random.Random(13)
    for _ in range(50):
        a = GaussianRational(rng.randint(1, 20), rng.randint(0, 20))
        if not a:
            continue
        ua, va = gaussian_valuations(a)
        ub, vb = gaussian_valuations(a * a)
        assert ub == (2 * ua) % 4
        assert vb == {p: 2 * e for p, e in va.items()}
