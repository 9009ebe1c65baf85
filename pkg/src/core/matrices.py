"""Exact integer/rational matrices (sympy) and scalar matrices (numpy object arrays).

Integer matrices (Stokes, Gram, eta, R, permutation and sign matrices) are
``sympy.Matrix`` instances treated as immutable. Matrices over SymScalar or
ApproxComplex are numpy arrays of dtype object.
"""
from collections import deque
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from itertools import combinations, permutations
from math import comb
import random

import mpmath
import numpy as np
import sympy
from sympy import Matrix, eye, zeros
from sympy.combinatorics import Permutation

from core.errors import ArgumentError, NilpotencyError


# ----------------------------------------------------------------------
# INTEGER / RATIONAL MATRICES
# ----------------------------------------------------------------------
def antidiagonal(n: int) -> Matrix:
    return Matrix(n, n, lambda i, j: 1 if i + j == n - 1 else 0)


def shift_matrix(n: int, power: int = 1) -> Matrix:
    """J_power: e_p -> e_{p+power} on coefficient vectors (lower shift)."""
    return Matrix(n, n, lambda i, j: 1 if i - j == power else 0)


def permutation_matrix(perm) -> Matrix:
    """P with (P S P^-1)_{ij} = S_{perm[i], perm[j]}, perm 0-based."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ArgumentError(f"{perm} is not a permutation of 0..{n - 1}")
    return Matrix(n, n, lambda i, j: 1 if perm[i] == j else 0)


def sign_matrix(signs) -> Matrix:
    if any(s not in (1, -1) for s in signs):
        raise ArgumentError(f"signs must be +1 or -1, got {list(signs)}")
    return sympy.diag(*signs)


def is_upper_unipotent(S: Matrix) -> bool:
    n = S.rows
    return S.is_square and all(S[i, i] == 1 for i in range(n)) and all(S[i, j] == 0 for i in range(n) for j in range(i))


def random_unipotent(n: int, rng: random.Random, bound: int = 6) -> Matrix:
    return Matrix(n, n, lambda i, j: 1 if i == j else (rng.randint(-bound, bound) if j > i else 0))


def sign_equivalence(A: Matrix, B: Matrix):
    """Returns signs e with B_ij = e_i e_j A_ij, or None when A and B are not sign conjugate."""
    if A.shape != B.shape:
        return None
    n = A.rows
    for i in range(n):
        for j in range(n):
            if abs(A[i, j]) != abs(B[i, j]):
                return None
    signs = [0] * n
    for start in range(n):
        if signs[start]:
            continue
        signs[start] = 1
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if i == j or A[i, j] == 0 and A[j, i] == 0:
                    continue
                a, b = (A[i, j], B[i, j]) if A[i, j] != 0 else (A[j, i], B[j, i])
                want = signs[i] * (1 if a == b else -1)
                if not signs[j]:
                    signs[j] = want
                    queue.append(j)
                elif signs[j] != want:
                    return None
    # diagonal entries are fixed by e_i^2 = 1
    if any(A[i, i] != B[i, i] for i in range(n)):
        return None
    return tuple(signs)


def triangularizing_permutation(S: Matrix):
    """Permutation perm (0-based) with S[perm[i], perm[j]] = 0 for i > j, or None."""
    n = S.rows
    sorter = TopologicalSorter({j: {i for i in range(n) if i != j and S[i, j] != 0} for j in range(n)})
    try:
        return tuple(sorter.static_order())
    except CycleError:
        return None


def permutation_sign(perm) -> int:
    return Permutation(list(perm)).signature()


def nilpotency_order(N: Matrix) -> int:
    """Smallest m with N^m = 0."""
    n = N.rows
    power = eye(n)
    for m in range(1, n + 1):
        power = power * N
        if power.is_zero_matrix:
            return m
    raise NilpotencyError(f"matrix is not nilpotent: N^{n} != 0")


# ----------------------------------------------------------------------
# COMPOUND MATRICES
# ----------------------------------------------------------------------
def subsets(n: int, r: int) -> list[tuple[int, ...]]:
    """r-subsets of {0..n-1} in lexicographical order."""
    return list(combinations(range(n), r))


def _leibniz_det(block):
    r = len(block)
    total = 0
    for perm in permutations(range(r)):
        term = permutation_sign(perm)
        for i, j in enumerate(perm):
            term = term * block[i][j]
        total = term + total
    return total


def compound_matrix(M, r: int):
    """Matrix of r x r minors, rows and columns indexed by lexicographically ordered r-subsets."""
    if isinstance(M, Matrix):
        n, m = M.shape
    else:
        n, m = np.shape(M)
    if not 1 <= r <= min(n, m):
        raise ArgumentError(f"compound order r={r} outside 1..{min(n, m)}")
    rows, cols = subsets(n, r), subsets(m, r)
    if isinstance(M, Matrix):
        return Matrix(len(rows), len(cols), lambda a, b: M.extract(list(rows[a]), list(cols[b])).det(method="bareiss"))
    out = np.empty((len(rows), len(cols)), dtype=object)
    for a, I in enumerate(rows):
        for b, J in enumerate(cols):
            out[a, b] = _leibniz_det([[M[i, j] for j in J] for i in I])
    return out


def additive_compound(A: Matrix, r: int) -> Matrix:
    """Derivation A^[r] induced by A on Lambda^r: sum over factors of A acting on one factor."""
    n = A.rows
    if not 1 <= r <= n:
        raise ArgumentError(f"compound order r={r} outside 1..{n}")
    basis = subsets(n, r)
    position = {I: a for a, I in enumerate(basis)}
    out = zeros(len(basis), len(basis))
    for b, J in enumerate(basis):
        for p in range(r):
            for i in range(n):
                if A[i, J[p]] == 0:
                    continue
                image = J[:p] + (i,) + J[p + 1:]
                if len(set(image)) < r:
                    continue
                order = sorted(range(r), key=lambda s: image[s])
                out[position[tuple(sorted(image))], b] += permutation_sign(order) * A[i, J[p]]
    return out


# ----------------------------------------------------------------------
# NILPOTENT FUNCTIONS
# ----------------------------------------------------------------------
def exp_nilpotent(N, a, one=1):
    """exp(a N) = sum_p a^p N^p / p! for nilpotent N; ``a`` any scalar, result an object matrix."""
    N = to_object(N)
    n = N.shape[0]
    result = identity_object(n, one)
    term = identity_object(n, one)
    for p in range(1, n + 1):
        term = (term @ N) * a * Fraction(1, p)
        if all(_is_zero(x) for x in term.flat):
            return result
        result = result + term
    raise NilpotencyError(f"matrix is not nilpotent: N^{n} != 0")


def nilpotent_power_matrix(N, z=None, log_z=None, one=1):
    """z^N = exp(log(z) N); pass ``log_z`` for symbolic logarithms such as 2 pi i."""
    if log_z is None:
        if z is None:
            raise ArgumentError("nilpotent_power_matrix needs z or log_z")
        log_z = mpmath.log(z)
    return exp_nilpotent(N, log_z, one)


def _is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)) or isinstance(x, sympy.Basic):
        return x == 0
    return x.is_zero()


# ----------------------------------------------------------------------
# OBJECT (SCALAR) MATRICES
# ----------------------------------------------------------------------
def to_object(M) -> np.ndarray:
    if isinstance(M, np.ndarray):
        return M
    rows = M.tolist() if isinstance(M, Matrix) else M
    return np.array([[_plain(x) for x in row] for row in rows], dtype=object)


def _plain(x):
    if isinstance(x, sympy.Integer):
        return int(x)
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    return x


def identity_object(n: int, one=1) -> np.ndarray:
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = one if i == j else one * 0
    return out


def diag_object(values) -> np.ndarray:
    n = len(values)
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = values[i] if i == j else values[i] * 0
    return out


def mat_mul(*matrices) -> np.ndarray:
    out = to_object(matrices[0])
    for M in matrices[1:]:
        out = out @ to_object(M)
    return out


def max_residual(A, B, backend) -> object:
    """max |A_ij - B_ij| as an mpmath number."""
    A, B = to_object(A), to_object(B)
    worst = 0
    for a, b in zip(A.flat, B.flat):
        worst = max(worst, abs(backend.to_mpc(a - b)))
    return worst


def exactly_equal(A, B) -> bool:
    A, B = to_object(A), to_object(B)
    return A.shape == B.shape and all(_is_zero(a - b) for a, b in zip(A.flat, B.flat))


def column_sign_equivalence(A, B, backend, tol=0):
    """Per-column signs e with B[:, j] = e_j A[:, j], or None."""
    A, B = to_object(A), to_object(B)
    if A.shape != B.shape:
        return None
    signs = []
    for j in range(A.shape[1]):
        for s in (1, -1):
            diffs = [b - s * a for a, b in zip(A[:, j], B[:, j])]
            if tol:
                ok = all(abs(backend.to_mpc(d)) <= tol for d in diffs)
            else:
                ok = all(_is_zero(d) for d in diffs)
            if ok:
                signs.append(s)
                break
        else:
            return None
    return tuple(signs)


def object_transpose(A) -> np.ndarray:
    return to_object(A).T.copy()


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 for k < 0 or k > n >= 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
