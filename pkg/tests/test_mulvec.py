import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mulgeo.errors import PreconditionError
from mulgeo.mularith import MulScalar
from mulgeo.mulvec import MulVec3, ZERO_VEC, is_morthogonal, mangle, mcross, minner, mnorm, smul, vadd, vneg, vsub

U = MulVec3.from_logs((0.5, -0.75, 1.5))
V = MulVec3.from_logs((0.75, 1.0, 0.25))

comp = st.floats(-5.0, 5.0, allow_nan=False)
vecs = st.tuples(comp, comp, comp)


def logs(v):
    return np.array(v.logvec)


def test_add_and_scale():
    e = math.e
    assert vadd(MulVec3.from_positive_reals((e, 1, 1)), MulVec3.from_positive_reals((1, e, 1))).logvec == (1.0, 1.0, 0.0)
    assert smul(MulScalar(2.0), MulVec3.from_logs((1, 3, 0))).logvec == (2.0, 6.0, 0.0)
    assert smul(MulScalar(1.0), U) == U
    assert vsub(U, U) == ZERO_VEC
    assert vneg(U).logvec == (-0.5, 0.75, -1.5)


def test_fig5_orthogonal():
    assert abs(minner(U, V).logval) <= 1e-15
    assert is_morthogonal(U, V)


def test_inner_examples():
    ex = MulVec3.from_logs((1, 0, 0))
    assert minner(ex, ex).logval == 1.0
    assert minner(U, ZERO_VEC).logval == 0.0


def test_norm():
    assert mnorm(MulVec3.from_logs((3, 0, 4))).logval == 5.0
    assert mnorm(ZERO_VEC).logval == 0.0


def test_fig4_cross():
    w = mcross(U, V)
    assert np.allclose(w.logvec, (-27 / 16, 1.0, 17 / 16), atol=1e-12, rtol=0)
    assert mcross(U, U) == ZERO_VEC


def test_angle():
    ex, ey = MulVec3.from_logs((1, 0, 0)), MulVec3.from_logs((0, 1, 0))
    assert math.isclose(mangle(ex, ey).logval, math.pi / 2)
    assert mangle(ex, ex).logval == 0.0
    assert math.isclose(mangle(ex, vneg(ex)).logval, math.pi)
    with pytest.raises(PreconditionError):
        mangle(U, V)


@settings(max_examples=1000)
@given(vecs, vecs)
def test_isometric_isomorphism(a, b):
    u, v = MulVec3.from_logs(a), MulVec3.from_logs(b)
    x, y = np.array(a), np.array(b)
    assert abs(minner(u, v).logval - float(x @ y)) <= 1e-12
    assert abs(mnorm(u).logval - float(np.linalg.norm(x))) <= 1e-12
    assert np.allclose(logs(mcross(u, v)), np.cross(x, y), atol=1e-12, rtol=0)
    w = mcross(u, v)
    assert abs(minner(w, u).logval) <= 1e-12
    assert abs(minner(w, v).logval) <= 1e-12


@given(vecs, st.floats(-3.0, 3.0))
def test_cross_vanishes_on_collinear(a, k):
    u = MulVec3.from_logs(a)
    assert np.allclose(logs(mcross(u, smul(MulScalar(k), u))), 0.0, atol=1e-12)


def test_cross_nonzero_on_independent():
    assert mcross(U, V) != ZERO_VEC
    ex, ey = MulVec3.from_logs((1, 0, 0)), MulVec3.from_logs((0, 1, 0))
    assert mcross(ex, ey).logvec == (0.0, 0.0, 1.0)
