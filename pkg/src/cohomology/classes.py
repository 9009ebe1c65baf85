"""Classes in H(P^{k-1}) = C[sigma]/(sigma^k) and the operators mu, R, eta.

Coefficient vectors hold the coefficient of sigma^p at index p. Scalars come
from a ScalarBackend so the same code produces exact or numeric classes.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import mpmath
import numpy as np
from sympy import Matrix

from core.backend import ScalarBackend
from core.errors import ArgumentError, DimensionMismatchError
from core.matrices import antidiagonal, shift_matrix, exp_nilpotent, diag_object, mat_mul, to_object
from core.types import Backend, Sign


@dataclass(frozen=True)
class KClass:
    """Element of K_0(P^{k-1}) in the basis [O], [O(1)], ..., [O(k-1)]."""

    k: int
    coords: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != self.k:
            raise DimensionMismatchError(f"KClass of rank {self.k} needs {self.k} coordinates, got {len(self.coords)}")

    @classmethod
    def zero(cls, k: int) -> "KClass":
        return cls(k, (0,) * k)

    @classmethod
    def basis(cls, k: int, j: int) -> "KClass":
        if not 0 <= j < k:
            raise ArgumentError(f"[O({j})] is not a basis element of K_0(P^{k - 1})")
        return cls(k, tuple(1 if i == j else 0 for i in range(k)))

    def _check(self, other: "KClass"):
        if self.k != other.k:
            raise DimensionMismatchError(f"K-classes of ranks {self.k} and {other.k}")

    def __add__(self, other: "KClass") -> "KClass":
        self._check(other)
        return KClass(self.k, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "KClass") -> "KClass":
        self._check(other)
        return KClass(self.k, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "KClass":
        return KClass(self.k, tuple(-a for a in self.coords))

    def __rmul__(self, c) -> "KClass":
        return KClass(self.k, tuple(c * a for a in self.coords))


@dataclass(frozen=True)
class CohClass:
    k: int
    coeffs: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.k:
            raise DimensionMismatchError(f"class in C[sigma]/(sigma^{self.k}) needs {self.k} coefficients")

    @classmethod
    def constant(cls, k: int, c) -> "CohClass":
        return cls(k, (c,) + tuple(c * 0 for _ in range(k - 1)))

    @classmethod
    def sigma_power(cls, k: int, p: int, c=1) -> "CohClass":
        return cls(k, tuple(c if i == p else c * 0 for i in range(k)))

    def _check(self, other: "CohClass"):
        if self.k != other.k:
            raise DimensionMismatchError(f"classes of ranks {self.k} and {other.k}")

    def __add__(self, other: "CohClass") -> "CohClass":
        self._check(other)
        return CohClass(self.k, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CohClass") -> "CohClass":
        self._check(other)
        return CohClass(self.k, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "CohClass":
        return CohClass(self.k, tuple(c * a for a in self.coeffs))

    def cup(self, other: "CohClass") -> "CohClass":
        """Truncated convolution, sigma^k = 0."""
        self._check(other)
        out = []
        for p in range(self.k):
            acc = self.coeffs[0] * other.coeffs[p]
            for i in range(1, p + 1):
                acc = acc + self.coeffs[i] * other.coeffs[p - i]
            out.append(acc)
        return CohClass(self.k, tuple(out))

    __mul__ = cup

    def exp(self, one=1) -> "CohClass":
        """exp of a class with vanishing constant term: at most k terms."""
        if not _is_zero(self.coeffs[0]):
            raise ArgumentError("exp is only truncated for classes without constant term")
        result = CohClass.constant(self.k, one)
        term = CohClass.constant(self.k, one)
        for p in range(1, self.k):
            term = term.cup(self).scale(Fraction(1, p))
            result = result + term
        return result

    def integrate(self):
        """Coefficient of the point class sigma^{k-1}."""
        return self.coeffs[-1]

    def vector(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=object)


def _is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


# ----------------------------------------------------------------------
# CHARACTERISTIC CLASSES
# ----------------------------------------------------------------------
def gamma_class(k: int, sign: Sign, backend: ScalarBackend) -> CohClass:
    """Gamma(1 + sign sigma)^k with log Gamma(1 - t) = gamma t + sum_{n>=2} zeta(n) t^n / n."""
    if k < 2:
        raise ArgumentError(f"gamma_class needs k >= 2, got {k}")
    sign = Sign(sign)
    coeffs = [backend.zero()]
    for n in range(1, k):
        s = (-int(sign)) ** n  # t = -sign * sigma
        c = backend.gamma() if n == 1 else backend.zeta(n) * Fraction(1, n)
        coeffs.append(c * (s * k))
    return CohClass(k, tuple(coeffs)).exp(backend.one())


def chern_line(k: int, j: int, backend: ScalarBackend, graded: bool = True) -> CohClass:
    """Ch(O(j)) = exp(2 pi i j sigma), or ch(O(j)) = exp(j sigma) when not graded."""
    x = backend.i() * backend.pi() * (2 * j) if graded else backend.scalar(j)
    return CohClass.sigma_power(k, 1, x).exp(backend.one())


def graded_chern(E, backend: ScalarBackend, graded: bool = True) -> CohClass:
    total = CohClass.constant(E.k, backend.zero())
    for j, c in enumerate(E.coords):
        if c:
            total = total + chern_line(E.k, j, backend, graded).scale(c)
    return total


def c1_class(k: int, backend: ScalarBackend) -> CohClass:
    return CohClass.sigma_power(k, 1, backend.scalar(k))


def d_morphism(E, gamma: CohClass, c1: CohClass, d: int, sign: Sign, backend: ScalarBackend) -> CohClass:
    """i^{d mod 2} (2 pi)^{-d/2} Gamma_+- u exp(+-pi i c1) u Ch(E)."""
    if not (E.k == gamma.k == c1.k):
        raise DimensionMismatchError(f"d_morphism on ranks {E.k}, {gamma.k}, {c1.k}")
    sign = Sign(sign)
    prefactor = backend.i_power(d % 2) * backend.two_pi_power(-d)
    twist = c1.scale(backend.i() * backend.pi() * int(sign)).exp(backend.one())
    return gamma.cup(twist).cup(graded_chern(E, backend)).scale(prefactor)


def d_minus(E, backend: ScalarBackend) -> CohClass:
    k = E.k
    return d_morphism(E, gamma_class(k, Sign.MINUS, backend), c1_class(k, backend), k - 1, Sign.MINUS, backend)


# ----------------------------------------------------------------------
# OPERATORS
# ----------------------------------------------------------------------
def mu_operator(k: int) -> list[Fraction]:
    """Diagonal of mu: p - (k-1)/2."""
    return [Fraction(2 * p - (k - 1), 2) for p in range(k)]


def r_operator(k: int) -> Matrix:
    """R = c1 u = k sigma u as a matrix on coefficient vectors."""
    return shift_matrix(k) * k


def eta_matrix(k: int) -> Matrix:
    return antidiagonal(k)


def exp_pi_i(x: Fraction, backend: ScalarBackend):
    """e^{pi i x}; exact powers of i when 2x is an integer."""
    x = Fraction(x)
    if (2 * x).denominator == 1:
        return backend.i_power(int(2 * x))
    if backend.kind == Backend.SYMBOLIC:
        raise ArgumentError(f"e^(pi i {x}) is outside the symbolic ring")
    with mpmath.mp.workprec(backend.precision):
        return backend.scalar(0) + mpmath.expjpi(mpmath.mpf(x.numerator) / x.denominator)


def exp_pi_i_diag(mu, c, backend: ScalarBackend) -> np.ndarray:
    """diag(e^{c pi i mu_p})."""
    return diag_object([exp_pi_i(Fraction(c) * m, backend) for m in mu])


def exp_pi_i_nilpotent(N, c, backend: ScalarBackend) -> np.ndarray:
    """e^{c pi i N} for a nilpotent integer matrix N."""
    return exp_nilpotent(N, backend.i() * backend.pi() * Fraction(c), backend.one())


def m0_matrix(mu, R, backend: ScalarBackend) -> np.ndarray:
    """M0 = e^{2 pi i mu} e^{2 pi i R}."""
    return mat_mul(exp_pi_i_diag(mu, 2, backend), exp_pi_i_nilpotent(R, 2, backend))


def m0_inverse(mu, R, backend: ScalarBackend) -> np.ndarray:
    return mat_mul(exp_pi_i_nilpotent(R, -2, backend), exp_pi_i_diag(mu, -2, backend))


def class_matrix(classes: list[CohClass]) -> np.ndarray:
    """Matrix whose columns are the coefficient vectors of ``classes``."""
    return np.array([list(c.coeffs) for c in classes], dtype=object).T.copy()


def cup_operator(x: CohClass) -> np.ndarray:
    """Matrix of v -> x u v."""
    k = x.k
    out = np.empty((k, k), dtype=object)
    for i in range(k):
        for j in range(k):
            out[i, j] = x.coeffs[i - j] if i >= j else x.coeffs[0] * 0
    return out
