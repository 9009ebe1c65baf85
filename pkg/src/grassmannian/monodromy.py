"""Monodromy data of G(r, k) at small quantum points, as exterior powers of P^{k-1} data.

G(r, k) at t sigma_1 is paired with P^{k-1} at (t + (r-1) pi i) sigma, which
moves the chamber index by r - 1: chamber m of G(r, k) is the r-th exterior
power of chamber m + r - 1 of P^{k-1}.
"""
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
from mpmath import mp
from sympy import Matrix

from cohomology.classes import eta_matrix, exp_pi_i_nilpotent, m0_matrix, mu_operator, r_operator
from config import QMONO_PRECISION
from core.backend import ScalarBackend, get_backend
from core.braid import BraidWord
from core.errors import ArgumentError
from core.matrices import additive_compound, binomial, compound_matrix, mat_mul, subsets
from core.types import Space
from grassmannian.spectrum import shifted_point
from monodromy.data import MonodromyData, MonodromyMeta
from mukai.lattice import braid_gram, sign_gram
from mukai.wedge_lift import lift_word
from projective.canonical import chamber_data, chamber_stokes, crossing_word
from projective.coords import chamber_index, psi_matrix
from logger import get_logger

logger = get_logger()


def _check(r: int, k: int):
    if not 0 < r < k:
        raise ArgumentError(f"G(r,k) needs 0 < r < k, got r={r}, k={k}")


@dataclass(frozen=True)
class GrassOperators:
    mu: tuple
    R: Matrix
    eta: Matrix
    p1: Matrix  # classical sigma_1 u

    def m0(self, backend: ScalarBackend = None) -> np.ndarray:
        return m0_matrix(self.mu, self.R, backend or get_backend())


def grass_operators(r: int, k: int) -> GrassOperators:
    """mu_G, R_G, eta_G on the lexicographic wedge basis."""
    _check(r, k)
    mu_p = mu_operator(k)
    mu = tuple(sum((mu_p[i] for i in I), Fraction(0)) for I in subsets(k, r))
    R = additive_compound(r_operator(k), r)
    eta = (-1) ** binomial(r, 2) * compound_matrix(eta_matrix(k), r)
    return GrassOperators(mu, R, eta, R / k)


def grass_stokes(r: int, k: int, m: int = 0) -> Matrix:
    _check(r, k)
    return compound_matrix(chamber_stokes(k, m + r - 1), r)


def grass_chamber(r: int, k: int, t=0, phi=None, precision: int = QMONO_PRECISION) -> int:
    """Chamber of G(r, k) at (t, phi), read off the paired P^{k-1} point."""
    _check(r, k)
    return chamber_index(k, shifted_point(r, t, precision), phi, precision) - (r - 1)


def grass_monodromy(r: int, k: int, chamber: int = None, t=0, phi=None, backend: ScalarBackend = None) -> MonodromyData:
    """S_G = Lambda^r S_P and C_G = i^{-C(r,2)} e^{pi i (r-1) sigma_1 u} Lambda^r C_P."""
    _check(r, k)
    backend = backend or get_backend()
    if chamber is None:
        chamber = grass_chamber(r, k, t, phi, backend.precision)
    return wedge_data(r, chamber_data(k, chamber + r - 1, backend))


def wedge_data(r: int, projective: MonodromyData) -> MonodromyData:
    """G(r, k) data from the P^{k-1} data of the paired chamber."""
    k = projective.n
    _check(r, k)
    backend = projective.backend
    ops = grass_operators(r, k)
    S = compound_matrix(projective.S, r)
    twist = exp_pi_i_nilpotent(ops.p1, r - 1, backend)
    C = mat_mul(twist, compound_matrix(projective.C, r)) * backend.i_power(-binomial(r, 2))
    source = projective.meta.chamber
    chamber = None if source is None else source - (r - 1)
    meta = MonodromyMeta(Space.GRASSMANNIAN, k, r, chamber, None, "exterior power")
    logger.debug(f"[CHAMBER] G({r},{k}) chamber {chamber} from P^{k - 1} chamber {source}")
    return MonodromyData(ops.mu, ops.R, ops.eta, S, C, backend, meta)


# ----------------------------------------------------------------------
# PSI AND ISOMETRY
# ----------------------------------------------------------------------
def psi_grass(r: int, k: int, t=0, precision: int = QMONO_PRECISION) -> mpmath.matrix:
    """Psi_G = i^{C(r,2)} Lambda^r Psi_P(t + (r-1) pi i)."""
    _check(r, k)
    with mp.workprec(precision):
        Psi = psi_matrix(k, shifted_point(r, t, precision), precision)
        W = compound_matrix(np.array(Psi.tolist(), dtype=object), r)
        factor = 1j ** binomial(r, 2)
        return mpmath.matrix([[factor * x for x in row] for row in W])


def psi_isometry_residual(r: int, k: int, t=0, precision: int = QMONO_PRECISION):
    """max |Psi_G^T Psi_G - eta_G|."""
    eta = grass_operators(r, k).eta
    with mp.workprec(precision):
        Psi = psi_grass(r, k, t, precision)
        P = Psi.T * Psi
        return max(abs(P[a, b] - int(eta[a, b])) for a in range(P.rows) for b in range(P.cols))


# ----------------------------------------------------------------------
# WEDGE FUNCTORIALITY
# ----------------------------------------------------------------------
def wedge_functoriality_check(r: int, k: int, m: int = 0) -> bool:
    """Lambda^r of the P Gram walked across one chamber equals the lifted walk of the wedge Gram."""
    _check(r, k)
    G = chamber_stokes(k, m + r - 1).inv()
    word: BraidWord = crossing_word(k, m + r - 1)
    lifted, signs = lift_word(word, r)
    expected = compound_matrix(braid_gram(G, word), r)
    got = braid_gram(sign_gram(compound_matrix(G, r), signs), lifted)
    ok = got == expected
    logger.debug(f"[WEDGE] G({r},{k}) chamber {m} via {word}: {'ok' if ok else 'mismatch'}")
    return ok
