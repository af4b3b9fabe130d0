"""Langevin diffusion matrix from the generalized Einstein relation.

At steady state the noise-force correlations <f_mu(t) f_nu(t')> =
2 D_{mu,nu} delta(t - t') follow from the drift alone:

    2D_{mu,nu} = <L+(sigma_mu sigma_nu)> - <L+(sigma_mu)> sigma_nu-paired
                 - sigma_mu-paired <L+(sigma_nu)>

with the operator-product contraction sigma_ab sigma_cd = delta_bc
sigma_ad, so every product is again a basis operator and its drift is a
row of M. No ordering is imposed: negativity of normally-ordered blocks
is physical (it is what produces squeezing downstream).
"""

from dataclasses import dataclass

import numpy as np

from .conventions import expectation_vector, vec
from .errors import StationarityError

_STATIONARITY_TOL = 1e-8


@dataclass(frozen=True)
class DiffusionMatrix:
    """d holds D_{mu,nu}; force correlations correspond to 2*d."""

    d: np.ndarray

    @property
    def two_d(self):
        return 2.0 * self.d


def diffusion_matrix(liouvillian, steady, scheme=None):
    """Einstein-relation diffusion matrix at the given steady state.

    `steady` may be a SteadyState or a bare density matrix; it must be
    stationary under the Liouvillian's generator.
    """
    rho = getattr(steady, "rho", steady)
    n = liouvillian.n
    g = liouvillian.generator
    m = liouvillian.drift

    residual = np.abs(g @ vec(rho)).max()
    if residual > _STATIONARITY_TOL:
        raise StationarityError(
            f"state is not stationary: |G rho| = {residual:.2e}"
        )

    s = expectation_vector(rho)
    ms = m @ s
    m4 = m.reshape(n, n, n, n, order="F")
    ms2 = ms.reshape(n, n, order="F")
    sm = s.reshape(n, n, order="F")

    # 2D[a+nb, c+nd] for the force pair (f_ab, f_cd):
    #   <L+(sigma_ab sigma_cd)> = delta_bc <L+(sigma_ad)>
    #   <L+(sigma_ab)> sigma_cd and sigma_ab <L+(sigma_cd)> contract through
    #   the same delta rule applied inside the drift rows.
    t1 = np.einsum("bc,ad->abcd", np.eye(n), ms2)
    t2 = np.einsum("abmc,md->abcd", m4, sm)
    t3 = np.einsum("cdbm,am->abcd", m4, sm)
    two_d = (t1 - t2 - t3).reshape(n * n, n * n, order="F")
    return DiffusionMatrix(d=0.5 * two_d)
