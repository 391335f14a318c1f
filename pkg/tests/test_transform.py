from __future__ import annotations

import random
from fractions import Fraction

import gmpy2
import pytest

from thetagroup5.arith import RootOfUnity, SL2Matrix, random_sl2
from thetagroup5.gamma5 import ResidueCase, sample_members
from thetagroup5.theta import ThetaChar, reduce_char
from thetagroup5.transform import (
    ODD_CHAR,
    elliptic_ratio,
    extra_exponent,
    transform_11,
    transform_general,
    transformed_char,
    verify_transform,
)

F = Fraction
FIFTHS = [ThetaChar(F(1, 5), F(1, 5)), ThetaChar(F(1, 5), F(9, 5)),
          ThetaChar(F(3, 5), F(3, 5)), ThetaChar(F(3, 5), F(7, 5))]
T, S, I = SL2Matrix.T(), SL2Matrix.S(), SL2Matrix.identity()


def test_transform_11_spot():
    assert transform_11(I).phase.is_one()
    assert transform_11(T).eta_cube == RootOfUnity(1, 4)
    assert transform_11(S).eta_cube == RootOfUnity(-3, 4)
    assert verify_transform(S, ODD_CHAR, "0.2", "0+1i", 128) < 1e-25


def test_identity_is_trivial():
    for char in FIFTHS + [ThetaChar(F(2, 7), F(-5, 3))]:
        data = transform_general(I, char)
        assert data.new_char == char and data.extra_phase.is_one() and data.eta_cube.is_one()


def test_linear_action():
    eps, epsp = F(2, 5), F(-7, 3)
    assert transformed_char(S, ThetaChar(eps, epsp)) == ThetaChar(epsp, -eps)
    data = transform_general(SL2Matrix.T(5), FIFTHS[0])
    assert data.new_char == ThetaChar(F(1, 5), F(-19, 5))
    assert reduce_char(data.new_char).char == FIFTHS[0]
    assert verify_transform(SL2Matrix.T(5), FIFTHS[0], "0.1+0.05i", "0+1i", 128) < 1e-25


def test_general_reproduces_11():
    rng = random.Random(2)
    for _ in range(300):
        m = random_sl2(rng, 10**4)
        data = transform_general(m, ODD_CHAR)
        r = reduce_char(data.new_char)
        assert r.char == ODD_CHAR
        assert data.extra_phase * r.phase == RootOfUnity(0)


def test_extra_phase_denominator():
    rng = random.Random(4)
    for _ in range(300):
        m = random_sl2(rng, 10**4)
        for char in FIFTHS:
            assert 50 % extra_exponent(m, char).denominator == 0


@pytest.mark.parametrize("case", list(ResidueCase))
def test_law_on_members(case):
    for m in sample_members(case, 3, 80, seed=17):
        for char in FIFTHS:
            for v in ("0.1+0.05i", "-0.23+0.11i"):
                assert verify_transform(m, char, v, "0.05+1.1i", 128) < 1e-25


def test_law_for_arbitrary_rationals():
    rng = random.Random(8)
    for _ in range(10):
        m = random_sl2(rng, 200)
        char = ThetaChar(F(rng.randint(-9, 9), 7), F(rng.randint(-9, 9), 3))
        assert verify_transform(m, char, "0.31-0.07i", "-0.2+0.9i", 128) < 1e-25


def test_wrong_extra_phase_would_fail():
    # a perturbed characteristic gives a visibly different right-hand side
    m = SL2Matrix(2, 1, 1, 1)
    good = verify_transform(m, FIFTHS[1], "0.1+0.05i", "0+1i", 128)
    bad = verify_transform(m, ThetaChar(F(1, 5), F(8, 5)), "0.1+0.05i", "0+1i", 128)
    assert good < 1e-25 and good < bad


def test_elliptic_ratio_is_constant():
    m = SL2Matrix(3, 2, 7, 5)
    values = [elliptic_ratio(m, v, "0.1+0.9i", 128) for v in ("0.1", "0.23+0.05i", "-0.4+0.2i", "0.05-0.1i", "0.37")]
    with gmpy2.context(gmpy2.get_context(), precision=128):
        spread = max(abs(x - values[0]) for x in values) / abs(values[0])
    assert spread < 1e-22
