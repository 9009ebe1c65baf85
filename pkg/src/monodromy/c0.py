"""The group C0 of P^{k-1}: polynomials in the shift J_1 with alternating constraints, and K+-."""
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from cohomology.classes import CohClass, cup_operator, exp_pi_i_diag, exp_pi_i_nilpotent, mu_operator, r_operator
from core.backend import ScalarBackend
from core.errors import ArgumentError
from core.matrices import identity_object, mat_mul
from core.types import Sign


@dataclass(frozen=True)
class C0Element:
    """C = sum_i alphas[i] J_i, alphas[0] = 1."""

    k: int
    alphas: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))
        if len(self.alphas) != self.k:
            raise ArgumentError(f"C0 element of size {self.k} needs {self.k} coefficients")

    def as_class(self) -> CohClass:
        return CohClass(self.k, self.alphas)

    def matrix(self) -> np.ndarray:
        return cup_operator(self.as_class())

    def inverse_matrix(self, backend: ScalarBackend) -> np.ndarray:
        """(1 + N)^-1 = sum (-N)^p, N nilpotent."""
        N = self.matrix() - identity_object(self.k, backend.one())
        result = identity_object(self.k, backend.one())
        term = identity_object(self.k, backend.one())
        for _ in range(1, self.k):
            term = mat_mul(term, -N)
            result = result + term
        return result

    def __mul__(self, other: "C0Element") -> "C0Element":
        return C0Element(self.k, self.as_class().cup(other.as_class()).coeffs)


def _vanishes(x, tol) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    if tol and hasattr(x, "close"):
        return x.close(0, tol)
    return x.is_zero()


def c0_constraints(x: C0Element) -> list:
    """2 a_{2n} + sum_{i+j=2n, i,j>=1} (-1)^i a_i a_j for 2 <= 2n <= k-1."""
    a = x.alphas
    out = []
    for two_n in range(2, x.k, 2):
        value = a[two_n] * 2
        for i in range(1, two_n):
            value = value + a[i] * a[two_n - i] * (-1) ** i
        out.append(value)
    return out


def c0_check(x: C0Element, tol=0) -> bool:
    if not _vanishes(x.alphas[0] - 1, tol):
        return False
    return all(_vanishes(v, tol) for v in c0_constraints(x))


def c0_exp(odd_part, one=1) -> C0Element:
    """exp(sum_{i odd} a_i J_i) read back as alphas; odd_part has length k."""
    k = len(odd_part)
    for i in range(0, k, 2):
        if not _vanishes(odd_part[i], 0):
            raise ArgumentError(f"Lie algebra of C0 is spanned by odd shifts, index {i} is nonzero")
    coeffs = tuple(one * 0 if i % 2 == 0 else odd_part[i] for i in range(k))
    return C0Element(k, CohClass(k, coeffs).exp(one).coeffs)


def c0_from_series(k: int, f_coeffs, one=1) -> C0Element:
    """Cup operator of prod_j f(delta_j) = f(sigma)^k on P^{k-1}."""
    coeffs = list(f_coeffs)[:k]
    if len(coeffs) < k:
        coeffs += [one * 0] * (k - len(coeffs))
    f = CohClass(k, tuple(coeffs))
    result = CohClass.constant(k, one)
    for _ in range(k):
        result = result.cup(f)
    return C0Element(k, result.coeffs)


def _f_series(k: int, log_coeffs, backend: ScalarBackend) -> list:
    log_class = CohClass(k, tuple(log_coeffs))
    return list(log_class.exp(backend.one()).coeffs)


def a_minus(k: int, backend: ScalarBackend) -> C0Element:
    """f(t) = e^{pi i t}."""
    logs = [backend.zero()] * k
    if k > 1:
        logs[1] = backend.i() * backend.pi()
    return c0_from_series(k, _f_series(k, logs, backend), backend.one())


def a_plus(k: int, backend: ScalarBackend) -> C0Element:
    """f(t) = e^{pi i t} Gamma(1+t) / Gamma(1-t): log f = (pi i - 2 gamma) t - 2 sum_{n odd} zeta(n) t^n / n."""
    logs = [backend.zero()] * k
    for n in range(1, k, 2):
        if n == 1:
            logs[1] = backend.i() * backend.pi() - backend.gamma() * 2
        else:
            logs[n] = backend.zeta(n) * Fraction(-2, n)
    return c0_from_series(k, _f_series(k, logs, backend), backend.one())


# ----------------------------------------------------------------------
# K+-
# ----------------------------------------------------------------------
def k_pm(k: int, sign: Sign, backend: ScalarBackend) -> np.ndarray:
    """K+- = e^{-+ i pi mu} e^{+- i pi R}."""
    s = int(Sign(sign))
    return mat_mul(exp_pi_i_diag(mu_operator(k), -s, backend), exp_pi_i_nilpotent(r_operator(k), s, backend))


def k_pm_inverse(k: int, sign: Sign, backend: ScalarBackend) -> np.ndarray:
    s = int(Sign(sign))
    return mat_mul(exp_pi_i_nilpotent(r_operator(k), -s, backend), exp_pi_i_diag(mu_operator(k), s, backend))
