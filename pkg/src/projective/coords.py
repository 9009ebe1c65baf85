"""Small quantum locus of P^{k-1}: canonical coordinates, Psi, Stokes rays and chambers.

Points are t sigma with q = e^t; the principal branch is used for q^{1/k}
and every other fractional power of q, i.e. q^a = e^{a t}.
"""
from dataclasses import dataclass
from fractions import Fraction
import re

import mpmath
from mpmath import mp, mpc, mpf

from config import QMONO_PRECISION
from core.errors import ArgumentError, NotAdmissibleError
from logger import get_logger

logger = get_logger()


@dataclass(frozen=True)
class SmallQHPoint:
    k: int
    t: complex = 0

    def __post_init__(self):
        if self.k < 2:
            raise ArgumentError(f"P^(k-1) needs k >= 2, got {self.k}")

    def q(self, precision: int = QMONO_PRECISION) -> mpc:
        with mp.workprec(precision):
            return mpmath.exp(mpc(self.t))

    def q_power(self, a: Fraction, precision: int = QMONO_PRECISION) -> mpc:
        """q^a = e^{a t}."""
        a = Fraction(a)
        with mp.workprec(precision):
            return mpmath.exp(mpf(a.numerator) / a.denominator * mpc(self.t))

    def coords(self, precision: int = QMONO_PRECISION) -> list:
        return canonical_coords(self.k, self.t, precision)


def parse_complex(text: str) -> complex:
    """Reads "a+bi" forms such as "0.5+3.1i", "-2i" or "i"."""
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    if not cleaned:
        raise ArgumentError("empty complex number")
    cleaned = re.sub(r"(^|[+-])j", r"\g<1>1j", cleaned)
    try:
        return complex(cleaned)
    except ValueError as exc:
        raise ArgumentError(f"malformed complex number {text!r}") from exc


# ----------------------------------------------------------------------
# CANONICAL COORDINATES AND PSI
# ----------------------------------------------------------------------
def canonical_coords(k: int, t=0, precision: int = QMONO_PRECISION) -> list:
    """u_h = k e^{2 pi i (h-1)/k} e^{t/k}, h = 1..k."""
    SmallQHPoint(k, t)
    with mp.workprec(precision):
        root = mpmath.exp(mpc(t) / k)
        return [k * mpmath.expjpi(mpf(2 * h) / k) * root for h in range(k)]


def _frame_entry(k: int, h: int, ell: int, t):
    # f_h^ell, h and ell 1-based
    q_part = mpmath.exp(mpf(k + 1 - 2 * ell) / (2 * k) * mpc(t))
    phase = mpmath.expjpi(mpf((1 - 2 * ell) * (h - 1)) / k)
    return q_part * phase / mpmath.sqrt(k)


def idempotent_frame(k: int, t=0, precision: int = QMONO_PRECISION) -> mpmath.matrix:
    """Columns are the normalized idempotents f_h in the basis sigma^0 .. sigma^{k-1}."""
    with mp.workprec(precision):
        F = mpmath.matrix(k, k)
        for ell in range(1, k + 1):
            for h in range(1, k + 1):
                F[ell - 1, h - 1] = _frame_entry(k, h, ell, t)
        return F


def psi_matrix(k: int, t=0, precision: int = QMONO_PRECISION) -> mpmath.matrix:
    """Psi = F^-1 = F^T eta; Psi^T Psi = eta and Psi^-1 U Psi is the companion form of c1."""
    with mp.workprec(precision):
        F = idempotent_frame(k, t, precision)
        Psi = mpmath.matrix(k, k)
        for h in range(k):
            for ell in range(k):
                Psi[h, ell] = F[k - 1 - ell, h]
        return Psi


def companion_u(k: int, t=0, precision: int = QMONO_PRECISION) -> mpmath.matrix:
    """Matrix of c1 * - in the basis sigma^p: subdiagonal k, corner k q."""
    with mp.workprec(precision):
        U = mpmath.matrix(k, k)
        for p in range(k - 1):
            U[p + 1, p] = k
        U[0, k - 1] = k * mpmath.exp(mpc(t))
        return U


def eigenvector_norms(k: int, t=0, precision: int = QMONO_PRECISION) -> list:
    """eta(x_h, x_h) for the eigenvectors x_h with components (u_h / k)^{k-ell}."""
    with mp.workprec(precision):
        out = []
        for u in canonical_coords(k, t, precision):
            x = [(u / k) ** (k - ell) for ell in range(1, k + 1)]
            out.append(mpmath.fsum(x[a] * x[k - 1 - a] for a in range(k)))
        return out


# ----------------------------------------------------------------------
# STOKES RAYS AND CHAMBERS
# ----------------------------------------------------------------------
def _tie_tolerance(precision: int):
    return mpf(2) ** (-(precision // 2))


def stokes_rays(k: int, t=0, precision: int = QMONO_PRECISION) -> dict:
    """Angle in [0, 2 pi) of R_rs = {-i rho conj(u_r - u_s), rho > 0} for every ordered pair r != s."""
    u = canonical_coords(k, t, precision)
    rays = {}
    with mp.workprec(precision):
        for r in range(k):
            for s in range(k):
                if r == s:
                    continue
                direction = -1j * mpmath.conj(u[r] - u[s])
                rays[(r + 1, s + 1)] = mpmath.arg(direction) % (2 * mp.pi)
    return rays


def lex_order(k: int, t=0, phi=None, precision: int = QMONO_PRECISION) -> tuple[int, ...]:
    """0-based permutation listing u's by increasing Re(u e^{i phi}).

    Two coordinates tie exactly when the line of slope phi contains R_rs; that
    raises NotAdmissibleError naming the pair (1-based).
    """
    if phi is None:
        with mp.workprec(precision):
            phi = mp.pi / (2 * k)
    u = canonical_coords(k, t, precision)
    with mp.workprec(precision):
        rotation = mpmath.expj(mpf(phi))
        keys = [(u[h] * rotation).real for h in range(k)]
        order = tuple(sorted(range(k), key=lambda h: keys[h]))
        tol = _tie_tolerance(precision) * k
        for a, b in zip(order, order[1:]):
            if abs(keys[a] - keys[b]) <= tol:
                r, s = sorted((a + 1, b + 1))
                raise NotAdmissibleError(r, s)
    return order


def chamber_index(k: int, t=0, phi=None, precision: int = QMONO_PRECISION) -> int:
    """m with m pi < Im t + k phi < (m+1) pi."""
    if phi is None:
        with mp.workprec(precision):
            phi = mp.pi / (2 * k)
    lex_order(k, t, phi, precision)
    with mp.workprec(precision):
        m = int(mpmath.floor((mpc(t).imag + k * mpf(phi)) / mp.pi))
    logger.debug(f"[CHAMBER] k={k} t={t} phi={phi}: chamber {m}")
    return m


def chamber_slope(k: int, m: int, precision: int = QMONO_PRECISION):
    """Slope at the middle of chamber m for t = 0."""
    with mp.workprec(precision):
        return (m + mpf(1) / 2) * mp.pi / k
