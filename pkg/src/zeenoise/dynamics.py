"""Optical Bloch generator for the driven degenerate transition.

Works in the frame rotating at the laser frequency, rotating-wave
approximation, with the Hamiltonian

    H = -Delta * P_excited - (Omega1/2) * (D1 + D1+)

(Delta = laser minus atomic frequency, D1 the driven dipole-lowering
combination) and relaxation through the three spherical jump channels
sqrt(gamma) * d_q, q in {-1, 0, +1}.

Two representations of the same dynamics are built independently:

- `generator` G: d vec(rho)/dt = G vec(rho), assembled from Kronecker
  products (column-major vec, see conventions module);
- `drift` M: d<sigma>/dt = M <sigma> for the expectation vector
  s[a + n*b] = <sigma_ab>, assembled row by row from the adjoint
  (Heisenberg) action on each basis operator.

Their mutual consistency under the trace pairing is a tested invariant,
not an assumption.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .angular import dipole_component
from .conventions import unvec, vec
from .errors import ArgumentError, DegenerateSteadyStateError, NumericalError
from .field import PolarizationBasis

_NULL_SPACE_CUTOFF = 1e-9


@dataclass(frozen=True)
class DriveConfig:
    """Drive parameters: polarization geometry, Rabi frequency, detuning.

    All rates in units of the scheme's gamma. Omega1 is defined through the
    reduced dipole matrix element, so the stretched two-level coupling at
    CIRCULAR drive is exactly Omega1 (unit Clebsch-Gordan coefficient).
    Omega1 = 0 is accepted at construction; a unique steady state then does
    not exist and steady_state raises.
    """

    basis: PolarizationBasis
    rabi: float
    detuning: float = 0.0

    def __post_init__(self):
        if self.rabi < 0:
            raise ArgumentError("Rabi frequency must be >= 0")


@dataclass(frozen=True)
class Liouvillian:
    generator: np.ndarray  # G, acts on vec(rho)
    drift: np.ndarray      # M, acts on <sigma_ab> expectation vector
    scheme: object
    drive: DriveConfig

    @property
    def n(self):
        return self.scheme.n


@dataclass(frozen=True)
class SteadyState:
    rho: np.ndarray


def hamiltonian(scheme, drive):
    d1 = drive.basis.driven_operator(scheme)
    h = -drive.detuning * scheme.excited_projector().astype(complex)
    h -= 0.5 * drive.rabi * (d1 + d1.conj().T)
    return h


def build_generator(scheme, drive):
    """Assemble the Liouvillian (G and M) for a scheme and drive."""
    if not isinstance(drive.basis, PolarizationBasis):
        raise ArgumentError("drive.basis must be a PolarizationBasis")
    n = scheme.n
    h = hamiltonian(scheme, drive)
    eye = np.eye(n)
    jumps = [dipole_component(scheme, q) for q in (-1, 0, +1)]

    g = -1j * (np.kron(eye, h) - np.kron(h.T, eye))
    for c in jumps:
        cdc = c.T @ c
        g += scheme.gamma * (
            np.kron(c, c)  # c real: conj(c) = c
            - 0.5 * np.kron(eye, cdc)
            - 0.5 * np.kron(cdc.T, eye)
        )

    m = np.zeros((n * n, n * n), dtype=complex)
    for a in range(n):
        for b in range(n):
            basis_op = np.zeros((n, n), dtype=complex)
            basis_op[a, b] = 1.0
            lx = 1j * (h @ basis_op - basis_op @ h)
            for c in jumps:
                cdc = c.T @ c
                lx += scheme.gamma * (
                    c.T @ basis_op @ c
                    - 0.5 * (cdc @ basis_op + basis_op @ cdc)
                )
            m[a + n * b, :] = lx.flatten(order="F")

    return Liouvillian(generator=g, drift=m, scheme=scheme, drive=drive)


def steady_state(liouvillian):
    """Unique trace-1 Hermitian null vector of the generator.

    Raises DegenerateSteadyStateError when the null space has dimension
    other than one (for example Omega1 = 0, where ground coherences and
    populations are all stationary).
    """
    g = liouvillian.generator
    n = liouvillian.n
    svals = scipy.linalg.svdvals(g)
    scale = svals[0] if svals[0] > 0 else 1.0
    null_dim = int(np.sum(svals < _NULL_SPACE_CUTOFF * scale))
    if null_dim != 1:
        raise DegenerateSteadyStateError(null_dim)

    trace_row = vec(np.eye(n)).reshape(1, -1)
    stacked = np.vstack([g, trace_row])
    rhs = np.zeros(n * n + 1, dtype=complex)
    rhs[-1] = 1.0
    sol, _, rank, _ = np.linalg.lstsq(stacked, rhs, rcond=None)
    if rank < n * n:
        raise NumericalError("steady-state solve is rank deficient")

    rho = unvec(sol)
    rho = 0.5 * (rho + rho.conj().T)
    rho = rho / np.trace(rho).real
    residual = np.abs(g @ vec(rho)).max()
    if residual > 1e-8:
        raise NumericalError(f"steady-state residual {residual:.2e} too large")
    return SteadyState(rho=rho)


def evolve(liouvillian, rho0, t):
    """rho(t) = exp(G t) applied to rho0 (trace preserved by construction)."""
    if t < 0:
        raise ArgumentError("evolution time must be >= 0")
    rho0 = np.asarray(rho0, dtype=complex)
    propagator = scipy.linalg.expm(liouvillian.generator * t)
    return unvec(propagator @ vec(rho0))
