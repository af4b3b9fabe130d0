"""Two-polarization field fluctuation formalism.

The state of each polarization mode is carried as a 2x2 spectral
correlation matrix in the (a, a+) operator ordering,

    S(Omega) = FT [[<da(t)da+(0)>, <da(t)da(0)>],
                   [<da+(t)da+(0)>, <da+(t)da(0)>]],

normalized so a coherent state gives S11 = 1 (shot noise) and all other
entries 0. Quadrature noise at angle theta is the combination
S11 + S12 e^{-2i theta} + S21 e^{+2i theta} + S22.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .angular import dipole_component
from .errors import ArgumentError


class PolarizationMode(enum.Enum):
    CIRCULAR = "circular"
    LINEAR = "linear"


@dataclass(frozen=True)
class PolarizationBasis:
    """Driven (e1) and orthogonal (e2) polarization components.

    CIRCULAR: drive on the sigma+ component (quantization axis along the
    wavevector); e1 couples q=+1, e2 couples q=-1.

    LINEAR: drive on the pi component (quantization axis along the drive
    polarization); e1 couples q=0, e2 couples i(d_{-1} - d_{+1})/sqrt(2).
    The +i mode phase fixes the otherwise free quadrature reference of the
    undriven component (see CONVENTIONS.md) and is flagged in run metadata.
    """

    mode: PolarizationMode

    def driven_operator(self, scheme):
        if self.mode is PolarizationMode.CIRCULAR:
            return dipole_component(scheme, +1).astype(complex)
        return dipole_component(scheme, 0).astype(complex)

    def orthogonal_operator(self, scheme):
        if self.mode is PolarizationMode.CIRCULAR:
            return dipole_component(scheme, -1).astype(complex)
        return (
            1j
            / np.sqrt(2.0)
            * (dipole_component(scheme, -1) - dipole_component(scheme, +1))
        )

    def operator(self, scheme, component):
        if component == 1:
            return self.driven_operator(scheme)
        if component == 2:
            return self.orthogonal_operator(scheme)
        raise ArgumentError(f"polarization component must be 1 or 2, got {component}")


@dataclass
class SpectralMatrix:
    """Entries of the 2x2 spectral correlation matrix.

    Entries are scalars (frequency-independent inputs) or arrays over the
    frequency grid carried in `grid` (pipeline outputs).
    """

    s11: np.ndarray
    s12: np.ndarray
    s21: np.ndarray
    s22: np.ndarray
    grid: np.ndarray = field(default=None, repr=False)

    def quadrature_combination(self, theta):
        """Complex quadrature spectrum at angle theta (realness is the
        caller's consistency check)."""
        return (
            self.s11
            + self.s22
            + self.s12 * np.exp(-2j * theta)
            + self.s21 * np.exp(+2j * theta)
        )

    def __add__(self, other):
        grid = self.grid if self.grid is not None else other.grid
        return SpectralMatrix(
            self.s11 + other.s11,
            self.s12 + other.s12,
            self.s21 + other.s21,
            self.s22 + other.s22,
            grid=grid,
        )


@dataclass(frozen=True)
class InputNoise:
    """White excess noise of the driven input component above vacuum.

    eps_a / eps_p are the fractional excesses of the amplitude and phase
    quadrature variances; both zero reproduces the coherent state.
    """

    eps_a: float = 0.0
    eps_p: float = 0.0

    def __post_init__(self):
        if self.eps_a < 0 or self.eps_p < 0:
            raise ArgumentError("excess-noise fractions must be >= 0")

    def matrix(self):
        return excess_noise_input(self.eps_a, self.eps_p)


def coherent_input_matrix():
    """Shot-noise-normalized coherent-state input: [[1,0],[0,0]]."""
    return SpectralMatrix(1.0 + 0j, 0j, 0j, 0j)


def excess_noise_input(eps_a, eps_p):
    """Coherent matrix plus white quadrature excess (eps_a, eps_p >= 0)."""
    if eps_a < 0 or eps_p < 0:
        raise ArgumentError("excess-noise fractions must be >= 0")
    s = (eps_a + eps_p) / 4.0
    d = (eps_a - eps_p) / 4.0
    return SpectralMatrix(1.0 + s + 0j, d + 0j, d + 0j, s + 0j)
