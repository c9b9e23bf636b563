import random

import pytest

from leibnizalg.scalars import I, ONE, ZERO, Scalar, as_scalar, rational


def test_parse_and_print_canonical_forms():
    cases = ["0", "2", "-2", "1/2", "-3/2", "i", "-i", "2i", "-1/4i",
             "-3/2+1/4i", "2-i", "1/3-2/5i"]
    for text in cases:
        s = Scalar.parse(text)
        assert str(s) == text
        assert Scalar.parse(str(s)) == s


def test_parser_accepts_unnormalized_input():
    assert Scalar.parse("2/4") == rational(1, 2)
    assert Scalar.parse("1i") == I
    assert Scalar.parse("0+0i") == ZERO
    assert str(Scalar.parse("3/3")) == "1"


@pytest.mark.parametrize("bad", ["", "i+i", "1+2", "x", "1/0", "2++3i"])
def test_parser_rejects_garbage(bad):
    with pytest.raises(ValueError):
        Scalar.parse(bad)


def test_basic_arithmetic():
    a = Scalar.parse("-3/2+1/4i")
    b = Scalar.parse("2-i")
    assert a + b == Scalar.parse("1/2-3/4i")
    assert a - a == ZERO
    assert I * I == as_scalar(-1)
    assert (a * b) / b == a
    assert b ** 3 == b * b * b
    assert ONE / I == -I


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_field_axioms_on_random_values():
    rng = random.Random(7)

    def rand():
        return Scalar(rational(rng.randint(-9, 9), rng.randint(1, 9)).re,
                      rational(rng.randint(-9, 9), rng.randint(1, 9)).re)

    for _ in range(200):
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if b:
            assert (a / b) * b == a


def test_equality_and_hash():
    assert as_scalar(2) == 2
    assert rational(4, 2) == 2
    assert hash(rational(1, 2)) == hash(Scalar.parse("2/4"))
    assert as_scalar("1/2") != as_scalar("1/3")
    assert not Scalar(0, 0)
    assert Scalar(0, 1)


def test_conjugate_and_inverse():
    z = Scalar.parse("3/5+4/5i")
    assert z * z.conjugate() == ONE
    assert z.inverse() == z.conjugate()
