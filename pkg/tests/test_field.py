import random
from fractions import Fraction

import pytest

from parcoh.errors import InputFormatError, NonRealInput
from parcoh.field import (
    FieldDescriptor,
    format_element,
    parse_element,
    sign_real,
    sqrt_bounds,
)
from helpers import fe, random_element, random_real_element


def test_descriptor_rejects_non_squarefree():
    FieldDescriptor(1)
    FieldDescriptor(2)
    FieldDescriptor(10)
    with pytest.raises(InputFormatError):
        FieldDescriptor(4)
    with pytest.raises(InputFormatError):
        FieldDescriptor(12)
    with pytest.raises(InputFormatError):
        FieldDescriptor(-2)


def test_basic_identities():
    d = 2
    r = fe(d, 0, 1)
    i = fe(d, 0, 0, 1)
    assert r * r == fe(d, 2)
    assert i * i == fe(d, -1)
    assert (i * r) * (i * r) == fe(d, -2)
    alpha = fe(d, 3, 2)
    assert alpha * fe(d, 3, -2) == fe(d, 1)
    assert alpha.inverse() == fe(d, 3, -2)
    x = fe(d, Fraction(1, 2), 3, Fraction(-2, 7), 5)
    assert x * x.inverse() == fe(d, 1)


def test_degenerate_d_normalisation():
    # d = 1: √1 folds onto the rational part, d = 0: the radical vanishes
    assert fe(1, 1, 2, 3, 4) == fe(1, 3, 0, 7, 0)
    assert fe(0, 1, 5, 3, 7) == fe(0, 1, 0, 3, 0)
    assert fe(1, 0, 1) == fe(1, 1)


def test_arithmetic_agrees_with_interval_embedding():
    rng = random.Random(7)
    for _ in range(1000):
        d = rng.choice([2, 3, 5, 7])
        x = random_element(rng, d)
        y = random_element(rng, d)
        for val, a, b, op in ((x + y, x, y, "add"), (x * y, x, y, "mul")):
            lo_re, hi_re, lo_im, hi_im = val.interval(80)
            approx = a.approx() + b.approx() if op == "add" else a.approx() * b.approx()
            assert lo_re - Fraction(1, 10**6) <= Fraction(approx.real).limit_denominator(10**12) <= hi_re + Fraction(1, 10**6)
            assert lo_im - Fraction(1, 10**6) <= Fraction(approx.imag).limit_denominator(10**12) <= hi_im + Fraction(1, 10**6)


def test_sign_real_examples():
    assert sign_real(fe(2, 1)) == 1
    assert sign_real(fe(2, 1, -1)) == -1       # 1 - √2 < 0
    assert sign_real(fe(2, 3, -2)) == 1        # 9 > 2·4
    assert sign_real(fe(2, 0)) == 0
    assert sign_real(fe(5, -3, 2)) == 1        # 2√5 > 3
    with pytest.raises(NonRealInput):
        sign_real(fe(2, 1, 0, 1))


def test_sign_real_is_order_embedding():
    rng = random.Random(11)
    for _ in range(300):
        d = rng.choice([2, 3, 5])
        x = random_real_element(rng, d)
        y = random_real_element(rng, d)
        s = sign_real(x - y)
        ax, ay = x.approx().real, y.approx().real
        if abs(ax - ay) > 1e-9:
            assert s == (1 if ax > ay else -1)


def test_sqrt_bounds_tight():
    for d in (2, 3, 5, 10):
        lo, hi = sqrt_bounds(d, 50)
        assert lo * lo <= d <= hi * hi
        assert hi - lo <= Fraction(1, 2**50)


def test_sqrt_in_field():
    assert fe(2, 32).sqrt() == fe(2, 0, 4)
    assert fe(2, 9).sqrt() in (fe(2, 3), fe(2, -3))
    assert fe(2, -4).sqrt() == fe(2, 0, 0, 2)
    assert fe(2, -2).sqrt() == fe(2, 0, 0, 0, 1)
    assert fe(2, 3).sqrt() is None
    s = fe(2, 3, 2).sqrt()                     # (1+√2)² = 3+2√2
    assert s is not None and s * s == fe(2, 3, 2)
    z = fe(2, 0, 0, 2)                         # 2i = (1+i)²
    s = z.sqrt()
    assert s is not None and s * s == z
    rng = random.Random(3)
    for _ in range(100):
        d = rng.choice([2, 3, 5])
        x = random_element(rng, d, span=3)
        sq = x * x
        s = sq.sqrt()
        assert s is not None and s * s == sq


def test_parse_format_roundtrip():
    rng = random.Random(5)
    for _ in range(200):
        d = rng.choice([1, 2, 3, 10])
        x = random_element(rng, d)
        assert parse_element(d, format_element(x)) == x
    assert format_element(fe(2, 0)) == "0"
    assert parse_element(2, "3+2*r") == fe(2, 3, 2)
    assert parse_element(2, "-i") == fe(2, 0, 0, -1)
    assert parse_element(2, "1/2*i*r") == fe(2, 0, 0, 0, Fraction(1, 2))
    assert parse_element(2, "r") == fe(2, 0, 1)
    with pytest.raises(InputFormatError):
        parse_element(2, "")
    with pytest.raises(InputFormatError):
        parse_element(2, "2**r")
    with pytest.raises(InputFormatError):
        parse_element(2, "x+1")


def test_mixed_field_parameters_rejected():
    with pytest.raises(ValueError):
        fe(2, 1) + fe(3, 1)
