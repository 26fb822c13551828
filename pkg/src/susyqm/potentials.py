"""Potential families shared by the exact algebra, the spectra and the grid oracles.

Sign conventions, fixed once for the whole package (c = hbar/sqrt(2m) = 1):

  sech well          V(z) = -l(l+1) sech^2 z                         (continuum edge 0)
  tanh-tilted well   V(z) = n'(n'+1) tanh^2 z - 2B tanh z            (edges n'(n'+1) -+ 2B)
  log-deformed       zero-energy family over w = ln(gamma z + 1)/gamma; it has no
                     level-independent potential, so it is rejected by the exact
                     residual and by the grid discretization and is verified
                     per level in spectra.gamma_deformed_residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .tanh_algebra import TanhPoly, as_fraction


@dataclass(frozen=True)
class PoschlTeller:
    """Attractive sech^2 well with depth parameter l: V = -l(l+1) sech^2 z."""

    l: Fraction

    def __post_init__(self):
        object.__setattr__(self, "l", as_fraction(self.l))
        if self.l < 0:
            raise ValueError(f"depth parameter must be >= 0, got {self.l}")

    def tanh_poly(self) -> TanhPoly:
        c = self.l * (self.l + 1)
        return TanhPoly((-c, 0, c))  # -l(l+1)(1 - t^2)

    def values(self, z: np.ndarray) -> np.ndarray:
        c = float(self.l * (self.l + 1))
        return -c / np.cosh(np.asarray(z, dtype=float)) ** 2

    @property
    def asymptotes(self) -> tuple[float, float]:
        return (0.0, 0.0)

    @property
    def continuum_edge(self) -> float:
        return 0.0


@dataclass(frozen=True)
class RosenMorseII:
    """Shape-invariant well V = n'(n'+1) tanh^2 z - 2B tanh z, |B| < n'^2."""

    n_prime: Fraction
    B: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "n_prime", as_fraction(self.n_prime))
        object.__setattr__(self, "B", as_fraction(self.B))
        if self.n_prime <= 0:
            raise ValueError(f"n' must be positive, got {self.n_prime}")
        if abs(self.B) >= self.n_prime ** 2:
            raise ValueError(
                f"|B| = {abs(self.B)} must be below n'^2 = {self.n_prime ** 2} "
                "for the well to hold bound states"
            )

    def tanh_poly(self) -> TanhPoly:
        c = self.n_prime * (self.n_prime + 1)
        return TanhPoly((0, -2 * self.B, c))

    def values(self, z: np.ndarray) -> np.ndarray:
        t = np.tanh(np.asarray(z, dtype=float))
        return float(self.n_prime * (self.n_prime + 1)) * t * t - 2.0 * float(self.B) * t

    @property
    def asymptotes(self) -> tuple[float, float]:
        c = float(self.n_prime * (self.n_prime + 1))
        return (c + 2.0 * float(self.B), c - 2.0 * float(self.B))

    @property
    def continuum_edge(self) -> float:
        return float(self.n_prime * (self.n_prime + 1) - 2 * abs(self.B))


@dataclass(frozen=True)
class GammaDeformed:
    """Parameters of the zero-energy deformed family; gamma = beta - alpha."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise ValueError("alpha and beta must both exceed -1")

    @property
    def gamma(self) -> float:
        return self.beta - self.alpha

    @property
    def m(self) -> float:
        return 0.5 * (self.alpha + self.beta)


@dataclass(frozen=True)
class CustomPotential:
    """Grid-sampled potential; z strictly increasing, values finite."""

    z: tuple[float, ...]
    v: tuple[float, ...]

    def __post_init__(self):
        z = tuple(float(x) for x in self.z)
        v = tuple(float(x) for x in self.v)
        if len(z) != len(v):
            raise ValueError("sample arrays differ in length")
        if any(b <= a for a, b in zip(z, z[1:])):
            raise ValueError("sample abscissae must be strictly increasing")
        if not all(np.isfinite(v)):
            raise ValueError("potential samples must be finite")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "v", v)

    @classmethod
    def from_arrays(cls, z, v) -> "CustomPotential":
        return cls(tuple(np.asarray(z, dtype=float)), tuple(np.asarray(v, dtype=float)))

    def values(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=float)
        zs = np.asarray(self.z)
        if z.shape != zs.shape or not np.allclose(z, zs, rtol=0.0, atol=1e-12):
            raise ValueError("requested points do not match the sampled abscissae")
        return np.asarray(self.v, dtype=float)

    @property
    def asymptotes(self) -> tuple[float, float]:
        return (self.v[0], self.v[-1])


PotentialFamily = Union[PoschlTeller, RosenMorseII, GammaDeformed, CustomPotential]


def potential_values(fam: PotentialFamily, z: np.ndarray) -> np.ndarray:
    """Evaluate a family on given points; rejects families without one."""
    if isinstance(fam, GammaDeformed):
        raise ValueError(
            "the log-deformed family is a zero-energy family without a "
            "level-independent potential; use spectra.gamma_deformed_residual"
        )
    return fam.values(z)
