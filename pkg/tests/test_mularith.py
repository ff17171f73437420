import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mulgeo.errors import DomainError, MulZeroDivisionError, PoleError, RangeError
from mulgeo.mularith import (
    ONE,
    ZERO,
    MulScalar,
    compare,
    format_logval,
    is_mpositive,
    mabs,
    madd,
    marccos,
    mcos,
    mdiv,
    minv,
    mmul,
    mneg,
    mpow,
    msin,
    msqrt,
    msub,
    mtan,
)

E = MulScalar


def close(a: MulScalar, logval: float, tol: float = 1e-12) -> bool:
    return abs(a.logval - logval) <= tol


logs = st.floats(-8.0, 8.0, allow_nan=False)


# Table 1 values, checked against the raw positive-real formulas.
def test_madd_examples():
    assert close(madd(E(2), E(3)), 5)
    a = MulScalar.from_positive_real(7.25)
    assert madd(a, MulScalar.from_positive_real(1.0)) == a
    assert madd(E(-2), E(2)) == ZERO


def test_table_one_examples():
    assert close(mmul(E(2), E(3)), 6)
    assert close(mdiv(E(6), E(3)), 2)
    assert close(minv(E(2)), 0.5)
    assert close(mneg(E(3)), -3)
    assert close(msub(E(5), E(3)), 2)


@given(logs, logs.filter(lambda x: abs(x) > 1e-3))
def test_raw_table_one(a, b):
    x, y = math.exp(a), math.exp(b)
    assert math.isclose(madd(E(a), E(b)).value, x * y, rel_tol=1e-12)
    assert math.isclose(msub(E(a), E(b)).value, x / y, rel_tol=1e-12)
    assert math.isclose(mmul(E(a), E(b)).value, x ** math.log(y), rel_tol=1e-9)
    assert math.isclose(mdiv(E(a), E(b)).value, x ** (1.0 / math.log(y)), rel_tol=1e-9)


def test_division_by_zero_star():
    with pytest.raises(MulZeroDivisionError):
        mdiv(E(2), ZERO)
    with pytest.raises(MulZeroDivisionError):
        minv(ZERO)


def test_mabs():
    assert mabs(E(-2)) == E(2)
    assert mabs(ZERO) == ZERO
    assert mabs(E(3)) == E(3)


def test_powers():
    assert close(mpow(E(3), 2), 9)
    assert close(msqrt(E(4)), 2)
    a = E(-1.7)
    assert mpow(a, 1) == a
    assert close(mpow(E(-2), 3), -8)
    assert close(mpow(E(4), 1.5), 8)
    with pytest.raises(DomainError):
        mpow(E(-2), 0.5)
    with pytest.raises(DomainError):
        msqrt(E(-1))


def test_trig():
    assert close(msin(E(math.pi / 2)), 1)
    assert mcos(ZERO) == ONE
    th = E(0.7)
    assert close(madd(mpow(msin(th), 2), mpow(mcos(th), 2)), 1)
    assert close(marccos(E(0.0)), math.pi / 2)
    with pytest.raises(PoleError):
        mtan(E(math.pi / 2))
    with pytest.raises(DomainError):
        marccos(E(1.5))


def test_order():
    assert is_mpositive(E(0.1))
    assert not is_mpositive(E(-0.1))
    assert compare(E(2), E(3)) == -1
    assert compare(E(3), E(3)) == 0
    assert E(2) < E(3)


def test_round_trip_and_domain():
    for x in (1e-300, 0.5, 1.0, math.e, 1e300):
        assert MulScalar.from_positive_real(MulScalar.from_positive_real(x).value) == MulScalar.from_positive_real(x)
    for bad in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(DomainError):
            MulScalar.from_positive_real(bad)
    with pytest.raises(RangeError):
        E(math.inf)
    with pytest.raises(RangeError):
        E(1000.0).value


def test_format():
    assert format_logval(6.0) == "e^6"
    assert format_logval(0.0) == "e^0"
    assert format_logval(0.5) == "e^0.5"
    assert format_logval(1.0, raw=True) == repr(math.e)
    assert str(mmul(E(2), E(3))) == "e^6"


def test_operators_follow_r_star():
    assert E(2) + E(3) == E(5)
    assert E(2) * E(3) == E(6)
    assert -E(2) == E(-2)
    assert abs(E(-2)) == E(2)
    assert E(3) ** 2 == E(9)


@given(logs, logs, logs)
def test_field_laws(a, b, c):
    A, B, C = E(a), E(b), E(c)
    tol = 1e-12 * max(1.0, abs(a * b * c))
    assert close(madd(madd(A, B), C), madd(A, madd(B, C)).logval, tol)
    assert close(mmul(mmul(A, B), C), mmul(A, mmul(B, C)).logval, tol)
    assert madd(A, B) == madd(B, A)
    assert mmul(A, B) == mmul(B, A)
    assert close(mmul(A, madd(B, C)), madd(mmul(A, B), mmul(A, C)).logval, tol)
    assert madd(A, ZERO) == A and mmul(A, ONE) == A
    assert madd(A, mneg(A)) == ZERO


@given(logs.filter(lambda x: abs(x) > 1e-6))
def test_multiplicative_inverse(a):
    assert close(mmul(E(a), minv(E(a))), 1.0)


@settings(max_examples=1000)
@given(st.floats(-50.0, 50.0))
def test_pythagorean_identity(t):
    th = E(t)
    assert close(madd(mpow(msin(th), 2), mpow(mcos(th), 2)), 1.0)
