"""Thin-medium propagation: atomic fluctuation response and output spectra.

Fourier-transforming the linearized atomic equations gives the fluctuation
response to the Langevin forces through the resolvent R(Omega) =
(-i Omega I - M)^{-1}; the stationary fluctuation kernel is

    C(Omega) = R(Omega) . 2D . R(-Omega)^T,

from which any two-operator fluctuation spectrum FT<dA(t) dB(0)> is the
projection a^T C(Omega) b. The mean field is taken z-independent across the
(optically thin) sample and back-action of field fluctuations on the atoms
is neglected, so the output spectral matrix is the input plus an atomic term
linear in b0, with no input/force cross terms.

The atomic term is assembled in normally ordered form,

    S11_at(Omega) = k2 * FT<dD+(t) dD(0)>(-Omega)
    S22_at(Omega) = k2 * FT<dD+(t) dD(0)>(+Omega)
    S12_at(Omega) = -k2 * FT<dD (t) dD(0)>(Omega)
    S21_at(Omega) = -k2 * FT<dD+(t) dD+(0)>(Omega),      k2 = b0*gamma/4,

the quadrature form in which squeezing appears as negativity of the added
part while S11 - S22 (the commutator) passes through unchanged. The carrier
is multiplied by exp(i chi) with chi = (b0*gamma/2) <D>/Omega1, which makes
the weak resonant two-level intensity transmission exactly exp(-b0)
(Beer-Lambert anchor) and the dephasing Phi = Re chi exactly linear in b0.
"""

from dataclasses import dataclass

import numpy as np

from .conventions import operator_projection
from .errors import ArgumentError, NumericalError
from .field import SpectralMatrix, coherent_input_matrix

_POLARIZATION_COMPONENTS = (1, 2)


@dataclass(frozen=True)
class MediumParams:
    """Reduced on-resonance optical density b0 (validity domain b0 <~ 0.5)."""

    b0: float

    def __post_init__(self):
        if self.b0 < 0:
            raise ArgumentError("b0 must be >= 0")


@dataclass
class OutputField:
    """Carrier amplitude, dephasing, and spectral matrices after the medium."""

    grid: np.ndarray
    carrier: dict          # component -> complex mean amplitude
    phi: dict              # component -> dephasing angle (radians)
    spectra: dict          # component -> SpectralMatrix (arrays over grid)
    atomic: dict           # component -> atomic contribution alone
    cross: SpectralMatrix = None  # e1 x e2 correlation block, on request


def _resolvent(drift, omega):
    n2 = drift.shape[0]
    a = -1j * omega * np.eye(n2) - drift
    try:
        r = np.linalg.inv(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(
            f"fluctuation resolvent is singular at Omega = {omega!r}"
        ) from exc
    # Omega = 0 hits the steady-state zero mode exactly; the LU solve may
    # then return garbage instead of raising, so screen by conditioning
    cond_proxy = np.linalg.norm(a, np.inf) * np.linalg.norm(r, np.inf)
    if not np.isfinite(cond_proxy) or cond_proxy > 1e12:
        raise NumericalError(
            f"fluctuation resolvent is singular at Omega = {omega!r} "
            "(the zero-frequency response on the steady-state manifold "
            "is undefined; exclude Omega = 0 from the grid)"
        )
    return r


def atomic_response(liouvillian, diffusion, omega):
    """Resolvent R(Omega) and fluctuation kernel C(Omega) at one frequency."""
    r_plus = _resolvent(liouvillian.drift, omega)
    r_minus = _resolvent(liouvillian.drift, -omega)
    c = r_plus @ diffusion.two_d @ r_minus.T
    return r_plus, c


def propagate(
    input_matrix,
    medium,
    liouvillian,
    diffusion,
    steady,
    grid,
    include_cross=False,
):
    """Push the input field through the thin atomic sample.

    `input_matrix` is the spectral matrix of the driven component (the
    orthogonal input component is always vacuum). Returns an OutputField
    with per-component spectra on `grid`; at b0 = 0 the output equals the
    input exactly.
    """
    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    if grid.size == 0:
        raise ArgumentError("frequency grid is empty")
    rho = getattr(steady, "rho", steady)
    scheme = liouvillian.scheme
    drive = liouvillian.drive
    b0 = medium.b0
    k2 = 0.25 * b0 * scheme.gamma

    ops = {c: drive.basis.operator(scheme, c) for c in _POLARIZATION_COMPONENTS}
    proj_low = {c: operator_projection(ops[c]) for c in ops}
    proj_dag = {c: operator_projection(ops[c].conj().T) for c in ops}

    shape = grid.shape
    at = {
        c: [np.zeros(shape, dtype=complex) for _ in range(4)]
        for c in _POLARIZATION_COMPONENTS
    }
    cross_entries = [np.zeros(shape, dtype=complex) for _ in range(4)] if include_cross else None

    if b0 > 0:
        kernel_cache = {}

        def kernel(w):
            if w not in kernel_cache:
                kernel_cache[w] = atomic_response(liouvillian, diffusion, w)[1]
            return kernel_cache[w]

        for i, w in enumerate(grid):
            c_plus = kernel(w)
            c_minus = kernel(-w)
            for comp in _POLARIZATION_COMPONENTS:
                lo, dg = proj_low[comp], proj_dag[comp]
                at[comp][0][i] = k2 * (dg @ c_minus @ lo)   # S11
                at[comp][1][i] = -k2 * (lo @ c_plus @ lo)   # S12
                at[comp][2][i] = -k2 * (dg @ c_plus @ dg)   # S21
                at[comp][3][i] = k2 * (dg @ c_plus @ lo)    # S22
            if include_cross:
                lo1, dg1 = proj_low[1], proj_dag[1]
                lo2, dg2 = proj_low[2], proj_dag[2]
                cross_entries[0][i] = k2 * (dg2 @ c_minus @ lo1)
                cross_entries[1][i] = -k2 * (lo1 @ c_plus @ lo2)
                cross_entries[2][i] = -k2 * (dg1 @ c_plus @ dg2)
                cross_entries[3][i] = k2 * (dg1 @ c_plus @ lo2)

    atomic = {
        c: SpectralMatrix(*(at[c][k] for k in range(4)), grid=grid)
        for c in _POLARIZATION_COMPONENTS
    }
    inputs = {1: input_matrix, 2: coherent_input_matrix()}
    spectra = {c: inputs[c] + atomic[c] for c in _POLARIZATION_COMPONENTS}

    carrier = {}
    phi = {}
    for comp in _POLARIZATION_COMPONENTS:
        chi = _carrier_susceptibility(rho, ops[comp], drive, b0, scheme)
        carrier[comp] = np.exp(1j * chi) if comp == 1 else 0.0j
        phi[comp] = float(chi.real)

    cross = (
        SpectralMatrix(*cross_entries, grid=grid) if include_cross else None
    )
    return OutputField(
        grid=grid,
        carrier=carrier,
        phi=phi,
        spectra=spectra,
        atomic=atomic,
        cross=cross,
    )


def _carrier_susceptibility(rho, op, drive, b0, scheme):
    if b0 == 0:
        return 0.0j
    if drive.rabi == 0:
        raise ArgumentError("carrier update undefined at zero Rabi frequency")
    mean_dipole = np.trace(rho @ op)
    return 0.5 * b0 * scheme.gamma * mean_dipole / drive.rabi


def dephasing(steady, drive, b0, scheme):
    """Carrier dephasing angle Phi of the driven component (radians).

    Phi = Re[(b0*gamma/2) <D1>/Omega1]; exactly linear in b0, zero for a
    resonantly driven two-level system (purely absorptive response).
    """
    if b0 < 0:
        raise ArgumentError("b0 must be >= 0")
    if drive.rabi == 0:
        raise ArgumentError("dephasing undefined at zero Rabi frequency")
    rho = getattr(steady, "rho", steady)
    op = drive.basis.driven_operator(scheme)
    return float(
        (0.5 * b0 * scheme.gamma * np.trace(rho @ op) / drive.rabi).real
    )
