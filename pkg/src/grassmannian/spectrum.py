"""Spectrum of c1 * on the small quantum locus of G(r, k) and its coalescence."""
import mpmath
from mpmath import mp, mpc
from sympy import primefactors

from config import QMONO_PRECISION
from core.errors import ArgumentError
from core.matrices import subsets
from projective.coords import canonical_coords
from logger import get_logger

logger = get_logger()


def shifted_point(r: int, t=0, precision: int = QMONO_PRECISION) -> mpc:
    """t + (r - 1) pi i, the point of P^{k-1} paired with t sigma_1 on G(r, k)."""
    with mp.workprec(precision):
        return mpc(t) + (r - 1) * mp.pi * 1j


def grass_spectrum(r: int, k: int, t=0, precision: int = QMONO_PRECISION) -> list:
    """u_I = sum of u_i over i in I, I running over r-subsets in lexicographic order."""
    if not 0 < r < k:
        raise ArgumentError(f"G(r,k) needs 0 < r < k, got r={r}, k={k}")
    u = canonical_coords(k, shifted_point(r, t, precision), precision)
    with mp.workprec(precision):
        return [mpmath.fsum(u[i] for i in I) for I in subsets(k, r)]


def smallest_prime_factor(k: int) -> int:
    if k < 2:
        raise ArgumentError(f"k must be >= 2, got {k}")
    return primefactors(k)[0]


def coalescence(r: int, k: int) -> bool:
    """The spectrum at small quantum points is not simple iff P1(k) <= r <= k - P1(k)."""
    if not 0 < r < k:
        raise ArgumentError(f"G(r,k) needs 0 < r < k, got r={r}, k={k}")
    p = smallest_prime_factor(k)
    return p <= r <= k - p


def spectrum_multiplicities(r: int, k: int, t=0, precision: int = QMONO_PRECISION) -> list[int]:
    """Sizes of the clusters of coinciding eigenvalues, largest first."""
    values = grass_spectrum(r, k, t, precision)
    with mp.workprec(precision):
        tol = mpmath.mpf(2) ** (-(precision // 2)) * k
        clusters = []
        for v in values:
            for cluster in clusters:
                if abs(cluster[0] - v) <= tol:
                    cluster.append(v)
                    break
            else:
                clusters.append([v])
    sizes = sorted((len(c) for c in clusters), reverse=True)
    logger.debug(f"[CHAMBER] G({r},{k}): eigenvalue multiplicities {sizes}")
    return sizes


def is_simple_spectrum(r: int, k: int, t=0, precision: int = QMONO_PRECISION) -> bool:
    return max(spectrum_multiplicities(r, k, t, precision)) == 1
