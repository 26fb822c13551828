import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from conftest import hyp_waves, nonzero_rationals, rationals, tanh_polys
from susyqm import (
    GammaDeformed, HypWave, LadderParam, PoschlTeller, TanhPoly, apply_ladder,
    apply_lowering, differentiate_z, eigen_residual_symbolic, eval_wave,
    eval_wave_array, ladder_chain, poschl_teller_energy,
)

SECH = HypWave.sech_power(1)
T = TanhPoly.t()


# ---------------------------------------------------------------------------
# TanhPoly basics


def test_poly_trim_and_degree():
    assert TanhPoly((1, 2, 0, 0)).coeffs == (Fraction(1), Fraction(2))
    assert TanhPoly().degree == -1
    assert TanhPoly((0,)).is_zero


def test_poly_deflate():
    # (1 - t)(1 + t) = 1 - t^2
    p = TanhPoly((1, 0, -1))
    q = p.deflate(+1)
    assert q == TanhPoly((1, 1))
    assert q.deflate(-1) == TanhPoly((1,))
    assert TanhPoly((1, 1)).deflate(+1) is None


def test_poly_primitive():
    prim, content = TanhPoly((Fraction(-3, 4), 0, Fraction(9, 4))).primitive()
    assert prim == TanhPoly((-1, 0, 3))
    assert content == Fraction(3, 4)
    prim, content = TanhPoly((0, Fraction(-2, 5))).primitive()
    assert prim == TanhPoly((0, 1)) and content == Fraction(-2, 5)


@given(p=tanh_polys(), q=tanh_polys())
def test_poly_ring_axioms(p, q):
    assert p + q == q + p
    assert p * q == q * p
    assert (p - q) + q == p


@given(p=tanh_polys(), q=tanh_polys())
def test_poly_derivative_product_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


# ---------------------------------------------------------------------------
# HypWave canonical form


def test_canonical_divides_out_weight_factors():
    w = HypWave(0, 0, TanhPoly((1, 0, -1)))  # (1 - t^2) -> pure weight
    assert (w.a, w.b) == (Fraction(1), Fraction(1))
    assert w.poly == TanhPoly.one()


def test_canonical_zero():
    w = HypWave(Fraction(1, 2), Fraction(3), TanhPoly(), Fraction(7))
    assert w.is_zero and w.prefactor == 0 and (w.a, w.b) == (0, 0)
    assert HypWave(1, 1, TanhPoly.one(), 0).is_zero


@given(w=hyp_waves())
def test_canonical_idempotent(w):
    again = HypWave(w.a, w.b, w.poly, w.prefactor)
    assert again == w


@given(w=hyp_waves())
def test_poly_not_divisible_by_weight_factors(w):
    assert w.poly.deflate(+1) is None
    assert w.poly.deflate(-1) is None


def test_add_aligns_integer_shifts():
    total = HypWave.sech_power(2) + HypWave.sech_power(4)
    # sech^2 (1 + sech^2) = (1-t)(1+t) * (2 - t^2)
    assert total == HypWave(1, 1, TanhPoly((2, 0, -1)))
    with pytest.raises(ValueError):
        HypWave.sech_power(1) + HypWave.sech_power(2)


# ---------------------------------------------------------------------------
# eval_wave


def test_eval_examples():
    assert eval_wave(SECH, 0.0) == 1.0
    assert abs(eval_wave(SECH, math.log(2)) - 0.8) <= 1e-14 * 0.8
    odd = HypWave(Fraction(1, 2), Fraction(1, 2), T, 3)  # 3 t sech z
    assert eval_wave(odd, 0.0) == 0.0


def test_eval_rejects_non_finite():
    with pytest.raises(ValueError):
        eval_wave(SECH, math.nan)
    with pytest.raises(ValueError):
        eval_wave(SECH, math.inf)


def test_eval_deep_tail_accuracy():
    # 1 - tanh z underflows catastrophically if formed naively
    w = HypWave(Fraction(1), Fraction(0), TanhPoly.one())  # (1 - t)
    z = 18.0
    exact = 2.0 * math.exp(-2.0 * z) / (1.0 + math.exp(-2.0 * z))
    assert abs(eval_wave(w, z) - exact) <= 1e-14 * exact


@given(w=hyp_waves(), z=st.floats(-8, 8))
@settings(max_examples=60)
def test_eval_array_matches_scalar(w, z):
    arr = eval_wave_array(w, np.array([z]))
    assert math.isclose(arr[0], eval_wave(w, z), rel_tol=1e-12, abs_tol=1e-300)


# ---------------------------------------------------------------------------
# differentiation and ladder operators


def test_differentiate_examples():
    assert differentiate_z(SECH) == HypWave(Fraction(1, 2), Fraction(1, 2), T, -1)
    assert differentiate_z(HypWave.constant(1)).is_zero
    assert differentiate_z(HypWave(0, 0, T)) == HypWave(1, 1, TanhPoly.one())


def test_apply_ladder_examples():
    assert apply_ladder(1, SECH) == HypWave(Fraction(1, 2), Fraction(1, 2), T, 2)
    assert apply_ladder(0, HypWave.constant(1)).is_zero
    assert apply_ladder(2, SECH) == HypWave(Fraction(1, 2), Fraction(1, 2), T, 3)
    assert apply_ladder(LadderParam(Fraction(2)), SECH) == apply_ladder(2, SECH)


@given(w=hyp_waves(), k=rationals)
@settings(max_examples=80)
def test_ladder_is_minus_derivative_plus_k_t(w, k):
    direct = apply_ladder(k, w)
    assembled = -differentiate_z(w) + k * w.times_poly(T)
    assert direct == assembled


@given(w=hyp_waves(), k=rationals)
@settings(max_examples=40)
def test_lowering_plus_raising_is_2kt(w, k):
    total = apply_lowering(k, w) + apply_ladder(k, w)
    assert total == (2 * k) * w.times_poly(T)


def test_ladder_chain_examples():
    assert ladder_chain(2, 1) == HypWave(Fraction(1, 2), Fraction(1, 2), T, 3)
    assert ladder_chain(2, 0) == HypWave.sech_power(2)
    top = ladder_chain(2, 2)  # zero-energy edge state, proportional to 3t^2 - 1
    assert (top.a, top.b) == (0, 0)
    assert top.poly == TanhPoly((-1, 0, 3))


def test_ladder_chain_rejects_impossible_levels():
    with pytest.raises(ValueError):
        ladder_chain(2, 3)
    with pytest.raises(ValueError):
        ladder_chain(Fraction(3, 2), -1)


@pytest.mark.parametrize("l", [1, 2, 3, 5, 8])
def test_ladder_chain_degree_and_parity(l):
    for n in range(l + 1):
        w = ladder_chain(l, n)
        assert w.a == w.b == Fraction(l - n, 2)
        assert w.poly.degree == n
        assert w.poly.reflected() == ((-1) ** n) * w.poly


def test_ladder_chain_large_tower_needs_bigints():
    # raw coefficients (content times primitive part) overflow 64-bit ints
    # around n' ~ 20, so exact arithmetic must be arbitrary precision
    w = ladder_chain(20, 19)
    assert max(abs((w.prefactor * c).numerator) for c in w.poly.coeffs) > 2 ** 63
    assert eigen_residual_symbolic(w, PoschlTeller(20), -1).is_zero


# ---------------------------------------------------------------------------
# symbolic eigen-residuals


def test_residual_examples():
    assert eigen_residual_symbolic(SECH, PoschlTeller(1), -1).is_zero
    w = HypWave(Fraction(1, 2), Fraction(1, 2), T, 3)
    assert eigen_residual_symbolic(w, PoschlTeller(2), -1).is_zero
    # wrong energy: residual is (E_true - E) w = -1 * w
    assert eigen_residual_symbolic(SECH, PoschlTeller(1), 0) == TanhPoly((-1,))


def test_residual_rejects_deformed_family():
    with pytest.raises(ValueError):
        eigen_residual_symbolic(SECH, GammaDeformed(1.0, 2.0), 0)


@pytest.mark.parametrize("l", [1, 2, 3, 4, 6])
def test_tower_residuals_zero(l):
    for n in range(l):
        w = ladder_chain(l, n)
        assert eigen_residual_symbolic(w, PoschlTeller(l), poschl_teller_energy(l, n)).is_zero


# ---------------------------------------------------------------------------
# numeric/symbolic consistency


@pytest.mark.parametrize("w", [
    SECH,
    ladder_chain(3, 2),
    ladder_chain(Fraction(7, 2), 1),
    HypWave(Fraction(7, 8), Fraction(9, 8), TanhPoly.one()),
])
def test_derivative_matches_finite_difference(w):
    d = differentiate_z(w)
    h = 1e-4
    for z in np.linspace(-5.0, 5.0, 41):
        fd = (eval_wave(w, z + h) - eval_wave(w, z - h)) / (2.0 * h)
        assert abs(eval_wave(d, z) - fd) <= 1e-6
