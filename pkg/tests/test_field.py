import random
from fractions import Fraction

import pytest

from wcit.errors import FieldMismatchError
from wcit.field import QQ, PrimeField, field_from_spec


def test_rational_arithmetic_examples():
    assert QQ.add(QQ(1, 2), QQ(1, 3)) == Fraction(5, 6)
    assert QQ.inv(QQ(1)) == 1
    assert QQ.mul(QQ(2, 3), QQ(3, 2)) == 1


def test_rationals_canonical_form():
    a = QQ(2, -4)
    assert a.numerator == -1 and a.denominator == 2


def test_prime_field_example():
    F101 = PrimeField(101)
    assert F101.mul(F101(50), F101(50)) == F101(76)
    assert F101(2500) == F101(76)


def test_prime_field_inverse_and_division():
    F = PrimeField(65537)
    a = F(12345)
    assert a * F.inv(a) == F.one
    with pytest.raises(ZeroDivisionError):
        F.inv(F.zero)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ(0))


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(65536)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_mixed_field_operands_rejected():
    F101 = PrimeField(101)
    F7 = PrimeField(7)
    with pytest.raises(FieldMismatchError):
        F101(3) + F7(4)
    with pytest.raises(FieldMismatchError):
        F101.add(F101(3), Fraction(1, 2))


def test_from_fraction():
    F = PrimeField(101)
    half = F.from_fraction(Fraction(1, 2))
    assert half + half == F.one


def test_field_axioms_randomized():
    rng = random.Random(20240801)
    F = PrimeField(65537)
    for _ in range(200):
        a = F(rng.randrange(65537))
        b = F(rng.randrange(65537))
        c = F(rng.randrange(65537))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * F.inv(a) == F.one
        qa = QQ(rng.randrange(-50, 50), rng.randrange(1, 20))
        qb = QQ(rng.randrange(-50, 50), rng.randrange(1, 20))
        qc = QQ(rng.randrange(-50, 50), rng.randrange(1, 20))
        assert (qa + qb) + qc == qa + (qb + qc)
        if qa != 0:
            assert QQ.inv(qa) * qa == 1


def test_field_from_spec():
    assert field_from_spec("q") is QQ or field_from_spec("q") == QQ
    assert field_from_spec("fp:65537") == PrimeField(65537)
    with pytest.raises(ValueError):
        field_from_spec("fp:not-a-number")
    with pytest.raises(ValueError):
        field_from_spec("gf2")
