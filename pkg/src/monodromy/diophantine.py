"""Integer invariants of Stokes matrices: characteristic polynomial, Markov triples, the N=4 pair."""
from collections import deque
from dataclasses import dataclass, field

from sympy import Matrix, Symbol

from core.errors import ArgumentError
from core.matrices import binomial


def p_invariants(S: Matrix) -> list[int]:
    """Coefficients p_0..p_N of det(t - S^T S^-1), p_j the coefficient of t^j."""
    if S.det() == 0:
        raise ArgumentError("p-invariants need an invertible Stokes matrix")
    t = Symbol("t")
    coeffs = (S.T * S.inv()).charpoly(t).all_coeffs()
    return [int(c) for c in reversed(coeffs)]


def expected_p_invariants(N: int, d: int) -> list[int]:
    """(t - (-1)^d)^N: p_j = (-1)^{(d+1)(N-j)} C(N, j)."""
    return [(-1) ** ((d + 1) * (N - j)) * binomial(N, j) for j in range(N + 1)]


def check_p_invariants(S: Matrix, d: int) -> bool:
    return p_invariants(S) == expected_p_invariants(S.rows, d)


# ----------------------------------------------------------------------
# MARKOV
# ----------------------------------------------------------------------
def is_markov(a: int, b: int, c: int) -> bool:
    return a * a + b * b + c * c == a * b * c


def stokes_triple(S: Matrix) -> tuple[int, int, int]:
    if S.shape != (3, 3):
        raise ArgumentError(f"Markov triple of a {S.shape} matrix")
    return int(S[0, 1]), int(S[0, 2]), int(S[1, 2])


@dataclass
class MarkovDescent:
    start: tuple
    path: list = field(default_factory=list)  # (before, after) per Vieta exchange
    reached: bool = False


def markov_descend(a: int, b: int, c: int) -> MarkovDescent:
    """Vieta exchanges z -> x y - z on the sorted absolute triple down to (3, 3, 3)."""
    if not is_markov(a, b, c):
        raise ArgumentError(f"({a}, {b}, {c}) does not satisfy a^2 + b^2 + c^2 = abc")
    current = tuple(sorted(abs(v) for v in (a, b, c)))
    descent = MarkovDescent(start=(a, b, c))
    if current == (0, 0, 0) or any(v % 3 for v in current):
        return descent
    while current != (3, 3, 3):
        x, y, z = current
        nxt = tuple(sorted((x, y, x * y - z)))
        if nxt[2] >= z:
            return descent
        descent.path.append((current, nxt))
        current = nxt
    descent.reached = True
    return descent


def markov_solutions(bound: int) -> list[tuple[int, int, int]]:
    """Sorted positive triples with a^2 + b^2 + c^2 = abc and entries <= bound, by ascent from (3, 3, 3)."""
    seen = set()
    queue = deque([(3, 3, 3)])
    while queue:
        triple = queue.popleft()
        if triple in seen or max(triple) > bound:
            continue
        seen.add(triple)
        x, y, z = triple
        for swapped in ((y * z - x, y, z), (x, x * z - y, z), (x, y, x * y - z)):
            nxt = tuple(sorted(swapped))
            if min(nxt) > 0 and nxt not in seen:
                queue.append(nxt)
    return sorted(seen)


# ----------------------------------------------------------------------
# N = 4
# ----------------------------------------------------------------------
def n4_constraints(S: Matrix) -> tuple[int, int]:
    if S.shape != (4, 4):
        raise ArgumentError(f"N=4 constraints of a {S.shape} matrix")
    a, b, c = (int(S[0, j]) for j in (1, 2, 3))
    d, e = int(S[1, 2]), int(S[1, 3])
    f = int(S[2, 3])
    first = a * a + b * b + c * c + d * d + e * e + f * f - a * b * d - a * c * e - b * c * f - d * e * f + a * c * d * f
    second = (a * f - b * e + c * d) ** 2
    return first, second


def n4_expected(d: int) -> tuple[int, int]:
    return 4 * (1 - (-1) ** d), 8 * (1 - (-1) ** d)
