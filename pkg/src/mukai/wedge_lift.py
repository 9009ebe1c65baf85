"""Lifting an elementary mutation of V to the lexicographic basis of Lambda^r V."""
from dataclasses import dataclass

from sympy import Matrix, prime

from core.braid import BraidWord, Letter
from core.errors import ArgumentError, QmonoError
from core.matrices import compound_matrix, subsets
from mukai.lattice import braid_gram, mutation_matrix, sign_gram
from core.types import MutationDir
from logger import get_logger

logger = get_logger()


@dataclass(frozen=True)
class WedgeLift:
    letter: Letter
    r: int
    lifted: BraidWord  # wedge of the mutated basis -> wedge of the original, up to signs
    completion: BraidWord  # swaps of mutually orthogonal neighbours restoring lex order
    signs: tuple

    @property
    def forward(self) -> BraidWord:
        """Word taking the signed wedge of the original basis to the wedge of the mutated one."""
        return (self.lifted * self.completion).inverse()

    def apply(self, wedge_gram: Matrix) -> Matrix:
        return braid_gram(sign_gram(wedge_gram, self.signs), self.forward)


def generic_gram(n: int) -> Matrix:
    """Exceptional Gram matrix without accidental vanishing pairings."""
    return Matrix(n, n, lambda i, j: 1 if i == j else (prime(i * n + j + 1) if j > i else 0))


def _pairing(W: Matrix, x: Matrix, y: Matrix):
    return (x.T * W * y)[0, 0]


def _basis_position(x: Matrix):
    """(index, sign) when x is +-(basis vector), else None."""
    support = [(j, v) for j, v in enumerate(x) if v != 0]
    if len(support) == 1 and abs(support[0][1]) == 1:
        return support[0][0], int(support[0][1])
    return None


def wedge_braid_lift(letter: Letter, r: int, n: int, gram: Matrix = None) -> WedgeLift:
    """Braid and signs on C(n, r) strands realizing ``letter`` on Lambda^r V.

    Follows the constructive argument: every wedge containing the mutated
    vector, other than the one pairing it with its partner, is moved past
    its neighbours until it meets the partner, one letter per transposition.
    """
    if not 1 <= r <= n:
        raise ArgumentError(f"wedge order r={r} outside 1..{n}")
    if not 1 <= letter.index <= n - 1:
        raise ArgumentError(f"letter {letter} outside B_{n}")
    G = generic_gram(n) if gram is None else gram
    direction = MutationDir.LEFT if letter.exp > 0 else MutationDir.RIGHT
    M = mutation_matrix(G, letter.index, direction)
    X = compound_matrix(M, r)
    W = compound_matrix(G, r)
    N = X.cols
    cols = [X.col(j) for j in range(N)]
    letters = []

    # right mutations leave the new vector in front of its partner, left ones behind it
    moving_left = letter.exp < 0
    order = range(N) if moving_left else range(N - 1, -1, -1)
    done = False
    while not done:
        done = True
        for q in order:
            if _basis_position(cols[q]) is not None:
                continue
            letters.extend(_carry(cols, W, q, moving_left))
            done = False
            break
    lifted = BraidWord(N, tuple(letters))

    completion = []
    positions = [_basis_position(c) for c in cols]
    for _ in range(N):
        swapped = False
        for q in range(1, N):
            if positions[q - 1][0] > positions[q][0]:
                if _pairing(W, cols[q - 1], cols[q]) != 0:
                    raise QmonoError(f"[WEDGE] neighbours {q - 1}, {q} are not orthogonal")
                cols[q - 1], cols[q] = cols[q], cols[q - 1]
                positions[q - 1], positions[q] = positions[q], positions[q - 1]
                completion.append(Letter(q, 1))
                swapped = True
        if not swapped:
            break
    signs = tuple(p[1] for p in positions)
    logger.debug(f"[WEDGE] {letter} r={r}: lifted {lifted}, completion {' '.join(map(str, completion))}")
    return WedgeLift(letter, r, lifted, BraidWord(N, tuple(completion)), signs)


def _carry(cols: list, W: Matrix, q: int, moving_left: bool) -> list:
    """Moves cols[q] until a non-orthogonal neighbour absorbs it; returns the letters used."""
    letters = []
    while True:
        if moving_left:
            if q == 0:
                raise QmonoError("[WEDGE] mutated wedge reached the front without meeting its partner")
            a, b = cols[q - 1], cols[q]
            c = _pairing(W, a, b)
            cols[q - 1], cols[q] = b - c * a, a
            letters.append(Letter(q, 1))
            q -= 1
            moved = cols[q]
        else:
            if q == len(cols) - 1:
                raise QmonoError("[WEDGE] mutated wedge reached the end without meeting its partner")
            a, b = cols[q], cols[q + 1]
            c = _pairing(W, a, b)
            cols[q], cols[q + 1] = b, a - c * b
            letters.append(Letter(q + 1, -1))
            q += 1
            moved = cols[q]
        if c != 0:
            if _basis_position(moved) is None:
                raise QmonoError("[WEDGE] mutation did not recover a wedge of the original basis")
            return letters


def lift_word(word: BraidWord, r: int, gram: Matrix = None) -> tuple[BraidWord, tuple]:
    """Word and signs on C(n, r) strands with Lambda^r(G^word) = (signs, then word) acting on Lambda^r G."""
    n = word.n
    G = generic_gram(n) if gram is None else gram
    total = BraidWord(len(subsets(n, r)))
    signs = (1,) * total.n
    for letter in word:
        lift = wedge_braid_lift(letter, r, n, G)
        # a sign vector applied after ``total`` equals its pull-back applied before it
        pulled = permute_signs(lift.signs, total.inverse())
        signs = tuple(a * b for a, b in zip(signs, pulled))
        total = total * lift.forward
        G = braid_gram(G, BraidWord(n, (letter,)))
    return total, signs


def permute_signs(signs: tuple, word: BraidWord) -> tuple:
    """Signs carried through ``word``: each letter swaps the two positions it mutates."""
    out = list(signs)
    for letter in word:
        i = letter.index
        out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)
