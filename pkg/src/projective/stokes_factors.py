"""Factorization of the chamber-0 Stokes matrix of P^{k-1} into two Stokes factors.

Indices in the entry formulas are 1-based, as the factors are usually written.
"""
from dataclasses import dataclass

from sympy import Matrix, eye, zeros

from core.errors import ArgumentError
from core.matrices import binomial, permutation_matrix, sign_equivalence
from projective.canonical import chamber0_stokes
from projective.coords import lex_order


@dataclass(frozen=True)
class StokesFactors:
    k: int
    k_minus2: Matrix  # K_{k-2}
    k_minus1: Matrix  # K_{k-1}
    t_f: Matrix
    S: Matrix  # assembled, in the order of the factors

    def lex_stokes(self) -> Matrix:
        """S conjugated into the lexicographical order of chamber 0."""
        P = permutation_matrix(lex_order(self.k))
        return P * self.S * P.T

    def matches_chamber0(self):
        """Sign vector relating lex_stokes() to the chamber-0 Stokes matrix, or None."""
        return sign_equivalence(self.lex_stokes(), chamber0_stokes(self.k))


def _set(M: Matrix, i: int, j: int, value: int):
    M[i - 1, j - 1] = value


def cyclic_factor(k: int) -> Matrix:
    """T_F: (1, k) entry 1, subdiagonal -1."""
    T = zeros(k, k)
    _set(T, 1, k, 1)
    for j in range(2, k + 1):
        _set(T, j, j - 1, -1)
    return T


def factor_k_minus2(k: int) -> Matrix:
    K = eye(k)
    _set(K, 2, 1, -binomial(k, 1))
    top = k // 2 + 1 if k % 2 == 0 else (k + 1) // 2
    for j in range(3, top + 1):
        _set(K, j, k - j + 3, binomial(k, 2 * j - 3))
    return K


def factor_k_minus1(k: int) -> Matrix:
    K = eye(k)
    top = k // 2 if k % 2 == 0 else (k + 1) // 2
    for j in range(2, top + 1):
        _set(K, j, k - j + 2, binomial(k, 2 * (j - 1)))
    return K


def shifted_factor(k: int, m: int) -> Matrix:
    """K_m for any m, from K_{m+2q} = T_F^{-q} K_m T_F^q with m = k-2 or k-1."""
    T = cyclic_factor(k)
    base, q = (k - 2, (m - k + 2) // 2) if (m - k) % 2 == 0 else (k - 1, (m - k + 1) // 2)
    K = factor_k_minus2(k) if base == k - 2 else factor_k_minus1(k)
    return _power(T, -q) * K * _power(T, q)


def _power(T: Matrix, q: int) -> Matrix:
    return T ** q if q >= 0 else T.T ** (-q)


def stokes_factors(k: int) -> StokesFactors:
    """K_{k-2}, K_{k-1}, T_F and the assembled Stokes matrix."""
    if k < 2:
        raise ArgumentError(f"P^(k-1) needs k >= 2, got {k}")
    T = cyclic_factor(k)
    K2, K1 = factor_k_minus2(k), factor_k_minus1(k)
    block = T.T * K2 * K1
    if k % 2 == 0:
        S = T ** (k // 2) * block ** (k // 2)
    else:
        half = (k - 1) // 2
        S = T ** half * K1 * block ** half
    return StokesFactors(k, K2, K1, T, S)
