"""Factorization engine: superpotentials, partner potentials, shape invariance.

With c = hbar/sqrt(2m) = 1 a superpotential W generates the partner pair
V1 = W^2 - W', V2 = W^2 + W'.  For the closed family W = k tanh z + s both
partners are polynomials in t = tanh z, the pair is shape invariant for every
rational k, and the algebraic spectrum follows from the x-independent
remainders R(k) = V2(.;k) - V1(.;k-1) = k^2 - (k-1)^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .fd_oracle import Grid
from .potentials import CustomPotential
from .tanh_algebra import HypWave, TanhPoly, apply_lowering, as_fraction


@dataclass(frozen=True)
class ClosedFormSuperpotential:
    """W(z) = k tanh z + s with exact rational k, s."""

    k: Fraction
    s: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "k", as_fraction(self.k))
        object.__setattr__(self, "s", as_fraction(self.s))

    def tanh_poly(self) -> TanhPoly:
        return TanhPoly((self.s, self.k))

    def derivative_tanh_poly(self) -> TanhPoly:
        return TanhPoly((self.k, 0, -self.k))  # k (1 - t^2)

    def values(self, z: np.ndarray) -> np.ndarray:
        return float(self.k) * np.tanh(np.asarray(z, dtype=float)) + float(self.s)


@dataclass(frozen=True)
class SampledSuperpotential:
    """W given by samples on a uniform grid."""

    grid: Grid
    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if len(vals) != self.grid.points:
            raise ValueError("sample count does not match the grid")
        if not all(np.isfinite(vals)):
            raise ValueError("superpotential samples must be finite")
        object.__setattr__(self, "values", vals)


Superpotential = Union[ClosedFormSuperpotential, SampledSuperpotential]


@dataclass(frozen=True)
class PartnerPair:
    """V1 = W^2 - W' and V2 = W^2 + W', plus the sech-well offset when closed.

    For W = k tanh z + s the first partner can be read as the sech^2 well
    shifted upward: V1 = -k(k+1) sech^2 z + 2 k s tanh z + ground_offset with
    ground_offset = k^2 + s^2.  The offset is carried explicitly instead of
    re-zeroing energies, since both conventions (ground state at 0 versus well
    asymptote at 0) are in routine use.
    """

    v1: Union[TanhPoly, CustomPotential]
    v2: Union[TanhPoly, CustomPotential]
    ground_offset: Union[Fraction, None] = None


def _fd_derivative(values: np.ndarray, h: float) -> np.ndarray:
    """Centered first derivative with one-sided second-order stencils at the ends."""
    v = np.asarray(values, dtype=float)
    d = np.empty_like(v)
    d[1:-1] = (v[2:] - v[:-2]) / (2.0 * h)
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h)
    d[-1] = (3.0 * v[-1] - 4.0 * v[-2] + v[-3]) / (2.0 * h)
    return d


def partner_potentials(w: Superpotential) -> PartnerPair:
    """Build the partner pair; exact polynomials for closed-form input."""
    if isinstance(w, ClosedFormSuperpotential):
        wp = w.tanh_poly()
        dwp = w.derivative_tanh_poly()
        return PartnerPair(
            v1=wp * wp - dwp,
            v2=wp * wp + dwp,
            ground_offset=w.k * w.k + w.s * w.s,
        )
    zs = w.grid.zs()
    vals = np.asarray(w.values)
    dvals = _fd_derivative(vals, w.grid.h)
    return PartnerPair(
        v1=CustomPotential.from_arrays(zs, vals * vals - dvals),
        v2=CustomPotential.from_arrays(zs, vals * vals + dvals),
        ground_offset=None,
    )


def riccati_residual(v1: CustomPotential, w: Superpotential) -> float:
    """Sup-norm over the sample grid of V1 - (W^2 - W').

    Closed-form W is evaluated exactly; sampled W is differenced on its grid,
    which must coincide with the potential's.
    """
    zs = np.asarray(v1.z)
    if isinstance(w, ClosedFormSuperpotential):
        wv = w.values(zs)
        dv = float(w.k) / np.cosh(zs) ** 2
    else:
        gz = w.grid.zs()
        if gz.shape != zs.shape or not np.allclose(gz, zs, rtol=0.0, atol=1e-12):
            raise ValueError("superpotential grid does not match the potential samples")
        wv = np.asarray(w.values)
        dv = _fd_derivative(wv, w.grid.h)
    return float(np.max(np.abs(np.asarray(v1.v) - (wv * wv - dv))))


def shape_invariance_remainder(k) -> tuple[Fraction, float]:
    """Remainder and z-dependence of V2(.;k) - V1(.;k-1) for W = k tanh z.

    Returns (remainder, constancy): the tanh family is shape invariant for
    every rational k, so constancy is exactly zero and the remainder equals
    k^2 - (k-1)^2.
    """
    kf = as_fraction(k)
    v2 = partner_potentials(ClosedFormSuperpotential(kf)).v2
    v1_shifted = partner_potentials(ClosedFormSuperpotential(kf - 1)).v1
    diff = v2 - v1_shifted
    remainder = diff.coefficient(0)
    z_dependent = TanhPoly(diff.coeffs[1:]) if diff.degree >= 1 else TanhPoly.zero()
    constancy = 0.0 if z_dependent.is_zero else float(max(abs(c) for c in z_dependent.coeffs))
    return remainder, constancy


def si_level_energy(k, n: int) -> Fraction:
    """Level n of V1(.;k) from the shape-invariance recursion: sum of remainders.

    E_n = sum_{j=0}^{n-1} R(k - j) telescopes to k^2 - (k-n)^2, i.e. the
    sech-well tower shifted so the ground state sits at zero.
    """
    kf = as_fraction(k)
    total = Fraction(0)
    for j in range(int(n)):
        total += shape_invariance_remainder(kf - j)[0]
    return total


def annihilation_check(k) -> TanhPoly:
    """Residual polynomial of (d/dz + k tanh z) sech^k z; zero iff annihilated."""
    kf = as_fraction(k)
    result = apply_lowering(kf, HypWave.sech_power(kf))
    return result.prefactor * result.poly
