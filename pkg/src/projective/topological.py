"""Topological-enumerative solution of the quantum differential equation of P^{k-1}.

Phi(z) = z^{k sigma} sum_n f(n) z^{kn}, f(n) in Q[sigma]/(sigma^k), solves
theta^k Phi = (kz)^k Phi with theta = z d/dz exactly when
(sigma + n)^k f(n) = f(n - 1).
"""
from fractions import Fraction
from math import factorial

import mpmath
from mpmath import mp
import sympy
from sympy import Poly, Rational, symbols

from config import QMONO_PRECISION
from core.errors import ArgumentError
from core.matrices import binomial
from logger import get_logger

logger = get_logger()

_Z, _LOGZ = symbols("z logz")


# ----------------------------------------------------------------------
# COEFFICIENTS
# ----------------------------------------------------------------------
def _bounded_compositions(total: int, parts: int, bound: int):
    """Tuples of ``parts`` integers in [0, bound] summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for h in range(min(total, bound) + 1):
        for rest in _bounded_compositions(total - h, parts - 1, bound):
            yield (h,) + rest


def _inverse_power_coeff(k: int, j: int, h: int) -> Fraction:
    # coefficient of sigma^h in (j + sigma)^{-k}
    return Fraction((-1) ** h * binomial(k - 1 + h, h), j ** (k + h))


def alpha(k: int, n: int, l: int) -> Fraction:
    """alpha_{n,l} as a sum over compositions h_1 + ... + h_n = l, 0 <= h_j <= k-1."""
    if n == 0:
        return Fraction(1 if l == 0 else 0)
    total = Fraction(0)
    for hs in _bounded_compositions(l, n, k - 1):
        term = Fraction(1)
        for j, h in enumerate(hs, start=1):
            term *= _inverse_power_coeff(k, j, h)
        total += term
    return total


def top_solution_coeffs(k: int, n_max: int) -> list[list[Fraction]]:
    """Table alpha[n][l], n = 0..n_max, l = 0..k-1, from the closed formula."""
    if k < 2:
        raise ArgumentError(f"P^(k-1) needs k >= 2, got {k}")
    if n_max < 0:
        raise ArgumentError(f"n_max must be >= 0, got {n_max}")
    return [[alpha(k, n, l) for l in range(k)] for n in range(n_max + 1)]


def _truncated_mul(a: list, b: list) -> list:
    k = len(a)
    return [sum((a[i] * b[p - i] for i in range(p + 1)), Fraction(0)) for p in range(k)]


def _truncated_inverse(a: list) -> list:
    """1/a in Q[sigma]/(sigma^k), a[0] != 0."""
    k = len(a)
    out = [Fraction(1) / a[0]]
    for p in range(1, k):
        acc = sum((a[i] * out[p - i] for i in range(1, p + 1)), Fraction(0))
        out.append(-acc / a[0])
    return out


def recursion_coeffs(k: int, n_max: int) -> list[list[Fraction]]:
    """f(n) = (sigma + n)^{-k} f(n-1), f(0) = 1, by inverting (sigma + n)^k."""
    f = [Fraction(1)] + [Fraction(0)] * (k - 1)
    out = [f]
    for n in range(1, n_max + 1):
        power = [Fraction(binomial(k, h) * n ** (k - h)) for h in range(k)]
        f = _truncated_mul(_truncated_inverse(power), f)
        out.append(f)
    return out


# ----------------------------------------------------------------------
# TRUNCATED SOLUTION
# ----------------------------------------------------------------------
def truncated_solution(k: int, n_max: int) -> list:
    """Components Phi_p (coefficient of sigma^p) as polynomials in z and logz."""
    table = top_solution_coeffs(k, n_max)
    a = [sum(Rational(table[n][l].numerator, table[n][l].denominator) * _Z ** (k * n) for n in range(n_max + 1)) for l in range(k)]
    components = []
    for p in range(k):
        expr = sum((k * _LOGZ) ** (p - l) / factorial(p - l) * a[l] for l in range(p + 1))
        components.append(sympy.expand(expr))
    return components


def _theta(expr):
    # z d/dz with d(logz)/dz = 1/z
    return sympy.expand(_Z * sympy.diff(expr, _Z) + sympy.diff(expr, _LOGZ))


def equation_residual(k: int, n_max: int) -> list:
    """theta^k Phi - (kz)^k Phi, componentwise."""
    out = []
    for phi in truncated_solution(k, n_max):
        lhs = phi
        for _ in range(k):
            lhs = _theta(lhs)
        out.append(sympy.expand(lhs - (k * _Z) ** k * phi))
    return out


def residual_order(k: int, n_max: int) -> int:
    """Smallest z-degree present in the residual; the truncation is exact below k (n_max + 1)."""
    lowest = None
    for residual in equation_residual(k, n_max):
        if residual == 0:
            continue
        degrees = [monom[0] for monom in Poly(residual, _Z, _LOGZ).monoms()]
        lowest = min(degrees) if lowest is None else min(lowest, min(degrees))
    return lowest if lowest is not None else -1


def solution_check(k: int, n_max: int) -> bool:
    order = residual_order(k, n_max)
    ok = order == -1 or order >= k * (n_max + 1)
    logger.debug(f"[VERIFY] k={k} n_max={n_max}: residual starts at z^{order}")
    return ok


# ----------------------------------------------------------------------
# GAMMA QUOTIENT
# ----------------------------------------------------------------------
def gamma_quotient_coeffs(k: int, n: int, sign: int = 1, precision: int = QMONO_PRECISION) -> list:
    """Taylor coefficients in sigma of Gamma(-sigma-n)^k / Gamma(-sigma)^k e^{+-k pi i n}."""
    with mp.workprec(precision):
        # Gamma(-s-n) / Gamma(-s) = 1 / rf(-s-n, n) is regular at s = 0
        def quotient(s):
            return (1 / mpmath.rf(-s - n, n)) ** k * mpmath.expjpi(sign * k * n)

        return mpmath.taylor(quotient, 0, k - 1)


def gamma_quotient_check(k: int, n: int, precision: int = QMONO_PRECISION, tol=None) -> bool:
    """Both sign choices of the Gamma quotient reproduce alpha_{n, l}."""
    with mp.workprec(precision):
        tol = tol if tol is not None else mpmath.mpf(10) ** (-(precision // 8))
        expected = [alpha(k, n, l) for l in range(k)]
        for sign in (1, -1):
            got = gamma_quotient_coeffs(k, n, sign, precision)
            for value, exact in zip(got, expected):
                if abs(value - mpmath.mpf(exact.numerator) / exact.denominator) > tol:
                    return False
    return True
