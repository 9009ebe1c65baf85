"""Gamma class of G(r, k) through Chern roots, compared with the wedge of P^{k-1} Gamma classes.

Classes of G(r, k) are symmetric series in the Chern roots x_1..x_r of S^v.
Multiplying by Delta = prod_{i<h} (x_i - x_h) and reducing x_i^k = 0 lands in
the antisymmetric part of H(P^{k-1})^{(x)r}; the coefficient of the monomial
x_1^{i_1} ... x_r^{i_r}, i_1 < ... < i_r, is the coordinate on the ascending
wedge sigma^{i_1} ^ ... ^ sigma^{i_r}.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

import mpmath

from cohomology.classes import CohClass, chern_line, class_matrix, gamma_class
from core.backend import ScalarBackend, get_backend
from core.errors import ArgumentError, DimensionMismatchError
from core.matrices import binomial, compound_matrix, permutation_sign, subsets
from core.types import Backend, Sign
from grassmannian.schubert import Partition
from logger import get_logger

logger = get_logger()


# ----------------------------------------------------------------------
# TRUNCATED SERIES IN r VARIABLES
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class RootSeries:
    """Polynomial in x_1..x_r modulo x_i^k, stored as {exponents: coefficient}."""

    r: int
    k: int
    terms: dict = field(default_factory=dict)

    @classmethod
    def constant(cls, r: int, k: int, c) -> "RootSeries":
        return cls(r, k, {(0,) * r: c})

    @classmethod
    def linear(cls, r: int, k: int, coeffs, one=1) -> "RootSeries":
        """sum_i coeffs[i] x_i."""
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exps = tuple(1 if j == i else 0 for j in range(r))
                terms[exps] = one * c
        return cls(r, k, terms)

    def _check(self, other: "RootSeries"):
        if (self.r, self.k) != (other.r, other.k):
            raise DimensionMismatchError(f"series in ({self.r},{self.k}) and ({other.r},{other.k}) variables")

    def __add__(self, other: "RootSeries") -> "RootSeries":
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms[exps] + c if exps in terms else c
        return RootSeries(self.r, self.k, terms)

    def __sub__(self, other: "RootSeries") -> "RootSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "RootSeries":
        return RootSeries(self.r, self.k, {exps: v * c for exps, v in self.terms.items()})

    def __mul__(self, other: "RootSeries") -> "RootSeries":
        self._check(other)
        terms = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                exps = tuple(p + q for p, q in zip(a, b))
                if max(exps) >= self.k:
                    continue
                terms[exps] = terms[exps] + x * y if exps in terms else x * y
        return RootSeries(self.r, self.k, terms)

    @property
    def top_degree(self) -> int:
        return self.r * (self.k - 1)

    def exp(self, one=1) -> "RootSeries":
        if (0,) * self.r in self.terms and not _vanishes(self.terms[(0,) * self.r]):
            raise ArgumentError("exp is only truncated for series without constant term")
        result = RootSeries.constant(self.r, self.k, one)
        term = RootSeries.constant(self.r, self.k, one)
        for p in range(1, self.top_degree + 1):
            term = (term * self).scale(Fraction(1, p))
            if not term.terms:
                break
            result = result + term
        return result

    def coefficient(self, exps, zero=0):
        return self.terms.get(tuple(exps), zero)


def _vanishes(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def _log_gamma(t: RootSeries, sign: Sign, backend: ScalarBackend) -> RootSeries:
    """log Gamma(1 + sign t) = -gamma (sign t) + sum_{n>=2} (-1)^n zeta(n) (sign t)^n / n."""
    s = int(sign)
    out = t.scale(backend.gamma() * (-s))
    power = t
    for n in range(2, t.top_degree + 1):
        power = power * t
        if not power.terms:
            break
        out = out + power.scale(backend.zeta(n) * Fraction((-s) ** n, n))
    return out


def _root_difference(r: int, k: int, i: int, h: int, one) -> RootSeries:
    coeffs = [0] * r
    coeffs[i], coeffs[h] = 1, -1
    return RootSeries.linear(r, k, coeffs, one)


def grass_gamma_series(r: int, k: int, sign: Sign, backend: ScalarBackend) -> RootSeries:
    """Gamma_G = prod_i Gamma(1 +- x_i)^k / prod_{i != h} Gamma(1 +- (x_i - x_h))."""
    one = backend.one()
    log = RootSeries(r, k, {})
    for i in range(r):
        unit = [1 if j == i else 0 for j in range(r)]
        log = log + _log_gamma(RootSeries.linear(r, k, unit, one), sign, backend).scale(k)
    for i in range(r):
        for h in range(r):
            if i != h:
                log = log - _log_gamma(_root_difference(r, k, i, h, one), sign, backend)
    return log.exp(one)


def _h_series(m: int, r: int, k: int, backend: ScalarBackend) -> RootSeries:
    """h_m(e^{2 pi i x_1}, ..., e^{2 pi i x_r})."""
    one = backend.one()
    if m < 0:
        return RootSeries(r, k, {})
    if m == 0:
        return RootSeries.constant(r, k, one)
    two_pi_i = backend.i() * backend.pi() * 2
    total = RootSeries(r, k, {})
    for a in product(range(m + 1), repeat=r):
        if sum(a) != m:
            continue
        total = total + RootSeries.linear(r, k, a, one).scale(two_pi_i).exp(one)
    return total


def schur_chern_series(mu: Partition, r: int, k: int, backend: ScalarBackend) -> RootSeries:
    """Ch(S^mu S^v) = det(h_{mu_i - i + j}) by Jacobi-Trudi."""
    parts = mu.padded(r)
    entries = [[_h_series(parts[i] - i + j, r, k, backend) for j in range(r)] for i in range(r)]
    det = RootSeries(r, k, {})
    for perm in permutations(range(r)):
        term = RootSeries.constant(r, k, backend.one()).scale(permutation_sign(perm))
        for i, j in enumerate(perm):
            term = term * entries[i][j]
        det = det + term
    return det


def vandermonde_series(r: int, k: int, one=1) -> RootSeries:
    out = RootSeries.constant(r, k, one)
    for i in range(r):
        for h in range(i + 1, r):
            out = out * _root_difference(r, k, i, h, one)
    return out


# ----------------------------------------------------------------------
# THE TWO SIDES
# ----------------------------------------------------------------------
def grass_side(r: int, k: int, mu: Partition, sign: Sign, backend: ScalarBackend) -> list:
    """Wedge coordinates of (Gamma_G u Ch(S^mu S^v)) Delta."""
    series = grass_gamma_series(r, k, sign, backend) * schur_chern_series(mu, r, k, backend) * vandermonde_series(r, k, backend.one())
    return [series.coefficient(I, backend.zero()) for I in subsets(k, r)]


def wedge_side(r: int, k: int, mu: Partition, sign: Sign, backend: ScalarBackend) -> list:
    """(2 pi i)^{-C(r,2)} e^{-pi i (r-1) sigma_1} of the wedge of Gamma_P u Ch(O(mu_h + r - h))."""
    parts = mu.padded(r)
    gamma = gamma_class(k, sign, backend)
    twist = CohClass.sigma_power(k, 1, backend.i() * backend.pi() * (1 - r)).exp(backend.one())
    columns = [gamma.cup(chern_line(k, parts[h] + r - 1 - h, backend)).cup(twist) for h in range(r)]
    W = compound_matrix(class_matrix(columns), r)
    m = binomial(r, 2)
    prefactor = backend.i_power(-m) * backend.two_pi_power(-2 * m)
    return [W[a, 0] * prefactor for a in range(W.shape[0])]


@dataclass
class GammaIdentityReport:
    r: int
    k: int
    mu: Partition
    sign: Sign
    passed: bool
    residual: object = 0

    def to_json(self) -> dict:
        return {"r": self.r, "k": self.k, "mu": list(self.mu.parts), "sign": int(self.sign), "pass": self.passed}


def gamma_class_G(r: int, k: int, mu: Partition = None, sign: Sign = Sign.MINUS, backend: ScalarBackend = None, tol=None) -> GammaIdentityReport:
    """Compares both sides of the Gamma class identity on every wedge coordinate."""
    if not 0 < r < k:
        raise ArgumentError(f"G(r,k) needs 0 < r < k, got r={r}, k={k}")
    mu = mu or Partition(())
    if not mu.fits(r, k):
        raise ArgumentError(f"partition {mu} does not fit in {r}x{k - r}")
    backend = backend or get_backend()
    sign = Sign(sign)
    lhs, rhs = grass_side(r, k, mu, sign, backend), wedge_side(r, k, mu, sign, backend)
    if backend.kind == Backend.SYMBOLIC:
        passed = all(_vanishes(a - b) for a, b in zip(lhs, rhs))
        residual = 0
    else:
        residual = max(abs(backend.to_mpc(a - b)) for a, b in zip(lhs, rhs))
        limit = tol if tol is not None else mpmath.mpf(2) ** (-(backend.precision // 2))
        passed = residual <= limit
    logger.debug(f"[VERIFY] Gamma class G({r},{k}) mu={mu} sign={int(sign)}: {'ok' if passed else 'mismatch'}")
    return GammaIdentityReport(r, k, mu, sign, passed, residual)
