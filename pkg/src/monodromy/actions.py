"""Group actions on monodromy data: braids, signs, permutations, C0 and the Galois shift."""
import numpy as np
from sympy import Matrix

from core.braid import BraidWord, Letter
from core.errors import ArgumentError
from core.matrices import mat_mul, permutation_matrix, sign_matrix, to_object
from monodromy.data import MonodromyData
from logger import get_logger

logger = get_logger()


def braid_matrix(S: Matrix, letter: Letter) -> Matrix:
    """A^beta(S): identity off the pair (i-1, i), where it is [[0,1],[1,-s]] or [[-s,1],[1,0]]."""
    n = S.rows
    i = letter.index
    if not 1 <= i <= n - 1:
        raise ArgumentError(f"letter {letter} outside B_{n}")
    s = S[i - 1, i]
    A = Matrix.eye(n)
    if letter.exp > 0:
        A[i - 1, i - 1], A[i - 1, i], A[i, i - 1], A[i, i] = 0, 1, 1, -s
    else:
        A[i - 1, i - 1], A[i - 1, i], A[i, i - 1], A[i, i] = -s, 1, 1, 0
    return A


def braid_stokes(S: Matrix, word: BraidWord) -> Matrix:
    for letter in word:
        A = braid_matrix(S, letter)
        S = A * S * A.T
    return S


def _act_letter(S: Matrix, C: np.ndarray, letter: Letter):
    i = letter.index
    s = int(S[i - 1, i])
    A = braid_matrix(S, letter)
    C = C.copy()
    a, b = C[:, i - 1].copy(), C[:, i].copy()
    # C A^-1 as two column operations
    if letter.exp > 0:
        C[:, i - 1], C[:, i] = a * s + b, a
    else:
        C[:, i - 1], C[:, i] = b, a + b * s
    return A * S * A.T, C


def braid_act(data: MonodromyData, word: BraidWord) -> MonodromyData:
    """(S, C) -> (A S A^T, C A^-1) letter by letter, A rebuilt from the current S."""
    if word.n != data.n:
        raise ArgumentError(f"word on {word.n} strands acting on data of size {data.n}")
    S, C = data.S, data.C
    for letter in word:
        S, C = _act_letter(S, C, letter)
        logger.debug(f"[BRAID] {letter}: superdiagonal {[int(S[j, j + 1]) for j in range(data.n - 1)]}")
    return data.with_(S=S, C=C)


def sign_act(data: MonodromyData, signs) -> MonodromyData:
    """S -> I S I, C -> C I."""
    if len(signs) != data.n:
        raise ArgumentError(f"{len(signs)} signs for data of size {data.n}")
    I = sign_matrix(signs)
    C = data.C.copy()
    for j, e in enumerate(signs):
        if e == -1:
            C[:, j] = -C[:, j]
    return data.with_(S=I * data.S * I, C=C)


def perm_act(data: MonodromyData, perm) -> MonodromyData:
    """S -> P S P^-1, C -> C P^-1 with (P S P^-1)_ij = S_{perm i, perm j}."""
    P = permutation_matrix(perm)
    C = data.C[:, list(perm)].copy()
    return data.with_(S=P * data.S * P.T, C=C)


def c0_act(data: MonodromyData, element) -> MonodromyData:
    """C -> A^-1 C for A in C0."""
    return data.with_(C=mat_mul(element.inverse_matrix(data.backend), data.C))


def rotate_shift(data: MonodromyData, m: int) -> MonodromyData:
    """C -> M0^-m C."""
    step = data.m0_inverse() if m >= 0 else data.m0()
    C = to_object(data.C)
    for _ in range(abs(m)):
        C = mat_mul(step, C)
    return data.with_(C=C)
