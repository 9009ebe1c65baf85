"""Mukai lattices, exceptional bases and their mutations.

Letters act on the right: the letter b_i (BraidWord index i) is the left
mutation of the pair at 0-based positions (i-1, i), its inverse the right
mutation of the same pair.
"""
from dataclasses import dataclass, field

from sympy import Matrix, eye

from core.braid import BraidWord, Letter
from core.errors import ArgumentError, SingularMatrixError
from core.matrices import antidiagonal, compound_matrix, is_upper_unipotent, sign_matrix
from core.types import DualKind, MutationDir


# ----------------------------------------------------------------------
# GRAM MATRIX ACTIONS
# ----------------------------------------------------------------------
def mutation_matrix(G: Matrix, i: int, direction: MutationDir) -> Matrix:
    """H^i (left) or K^i (right): the change of basis of the mutation at pair (i-1, i)."""
    n = G.rows
    if not 1 <= i <= n - 1:
        raise ArgumentError(f"mutation index {i} outside 1..{n - 1}")
    g = G[i - 1, i]
    M = eye(n)
    if MutationDir(direction) == MutationDir.LEFT:
        M[i - 1, i - 1], M[i - 1, i], M[i, i - 1], M[i, i] = -g, 1, 1, 0
    else:
        M[i - 1, i - 1], M[i - 1, i], M[i, i - 1], M[i, i] = 0, 1, 1, -g
    return M


def mutate_gram(G: Matrix, i: int, direction: MutationDir) -> Matrix:
    M = mutation_matrix(G, i, direction)
    return M.T * G * M


def braid_gram(G: Matrix, word: BraidWord) -> Matrix:
    """Gram matrix of the basis acted on by ``word``, letters left to right."""
    if word.n != G.rows:
        raise ArgumentError(f"word on {word.n} strands acting on a rank {G.rows} lattice")
    for letter in word:
        G = mutate_gram(G, letter.index, MutationDir.LEFT if letter.exp > 0 else MutationDir.RIGHT)
    return G


def sign_gram(G: Matrix, signs) -> Matrix:
    I = sign_matrix(signs)
    return I * G * I


def dual_braid_words(n: int) -> tuple[BraidWord, BraidWord]:
    """(b', b): the words giving the left and right dual bases of a rank n basis."""
    if n < 2:
        raise ArgumentError(f"dual bases need rank >= 2, got {n}")
    left = []
    for top in range(n - 1, 0, -1):
        left.extend(-j for j in range(1, top + 1))
    right = []
    for low in range(1, n):
        right.extend(range(n - 1, low - 1, -1))
    return BraidWord.of(n, *left), BraidWord.of(n, *right)


def dual_basis_gram(G: Matrix, kind: DualKind) -> Matrix:
    """J G^-T J for the left and right duals, J G^T J for the geometric dual."""
    J = antidiagonal(G.rows)
    if DualKind(kind) == DualKind.GEOMETRIC:
        return J * G.T * J
    if G.det() == 0:
        raise SingularMatrixError("dual basis of a degenerate Gram matrix")
    return J * G.T.inv() * J


def canonical_operator(G: Matrix) -> Matrix:
    """kappa = G^-1 G^T, so that <x, y> = <y, kappa x>."""
    if G.det() == 0:
        raise SingularMatrixError("canonical operator of a degenerate Gram matrix")
    return G.inv() * G.T


def is_unipotent_of_type(kappa: Matrix, eigenvalue: int, order: int) -> bool:
    """True when (kappa - eigenvalue) is nilpotent of order exactly ``order``."""
    n = kappa.rows
    N = kappa - eigenvalue * eye(n)
    power = eye(n)
    for m in range(1, order + 1):
        power = power * N
        if power.is_zero_matrix:
            return m == order
    return False


def wedge_lattice(G: Matrix, r: int) -> Matrix:
    return compound_matrix(G, r)


# ----------------------------------------------------------------------
# LATTICE AND BASIS STATE
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class MukaiLattice:
    n: int
    gram: Matrix

    def __post_init__(self):
        if self.gram.shape != (self.n, self.n):
            raise ArgumentError(f"Gram matrix of shape {self.gram.shape} for a rank {self.n} lattice")

    def pairing(self, x, y) -> int:
        return (Matrix(x).T * self.gram * Matrix(y))[0, 0]

    def is_unimodular(self) -> bool:
        return abs(self.gram.det()) == 1

    def is_exceptional_basis(self) -> bool:
        return is_upper_unipotent(self.gram)

    def canonical_operator(self) -> Matrix:
        return canonical_operator(self.gram)

    def is_isometry(self, phi: Matrix) -> bool:
        return phi.T * self.gram * phi == self.gram

    def wedge(self, r: int) -> "MukaiLattice":
        W = wedge_lattice(self.gram, r)
        return MukaiLattice(W.rows, W)


@dataclass(frozen=True)
class ExceptionalBasisState:
    n: int
    gram: Matrix
    labels: tuple = field(default_factory=tuple)
    signs: tuple = field(default_factory=tuple)
    history: BraidWord = None

    def __post_init__(self):
        if not is_upper_unipotent(self.gram) or self.gram.rows != self.n:
            raise ArgumentError("Gram matrix of an exceptional basis must be unipotent upper triangular")
        object.__setattr__(self, "labels", tuple(self.labels) or tuple(f"e{j}" for j in range(self.n)))
        object.__setattr__(self, "signs", tuple(self.signs) or (1,) * self.n)
        if self.history is None:
            object.__setattr__(self, "history", BraidWord(self.n))
        if len(self.labels) != self.n or len(self.signs) != self.n:
            raise ArgumentError(f"labels and signs must have length {self.n}")

    def mutate(self, i: int, direction: MutationDir = MutationDir.LEFT) -> "ExceptionalBasisState":
        direction = MutationDir(direction)
        gram = mutate_gram(self.gram, i, direction)
        labels, signs = list(self.labels), list(self.signs)
        a, b = labels[i - 1], labels[i]
        if direction == MutationDir.LEFT:
            labels[i - 1], labels[i] = f"L_{a}({b})", a
        else:
            labels[i - 1], labels[i] = b, f"R_{b}({a})"
        signs[i - 1], signs[i] = signs[i], signs[i - 1]
        letter = Letter(i, 1 if direction == MutationDir.LEFT else -1)
        history = BraidWord(self.n, self.history.letters + (letter,))
        return ExceptionalBasisState(self.n, gram, tuple(labels), tuple(signs), history)

    def act(self, word: BraidWord) -> "ExceptionalBasisState":
        state = self
        for letter in word:
            state = state.mutate(letter.index, MutationDir.LEFT if letter.exp > 0 else MutationDir.RIGHT)
        return state

    def flip(self, signs) -> "ExceptionalBasisState":
        """Replaces e_j by signs[j] e_j."""
        new_signs = tuple(s * t for s, t in zip(self.signs, signs))
        return ExceptionalBasisState(self.n, sign_gram(self.gram, signs), self.labels, new_signs, self.history)

    def dual(self, kind: DualKind = DualKind.RIGHT) -> "ExceptionalBasisState":
        kind = DualKind(kind)
        if kind == DualKind.GEOMETRIC:
            labels = tuple(f"{label}*" for label in reversed(self.labels))
            return ExceptionalBasisState(self.n, dual_basis_gram(self.gram, kind), labels)
        left, right = dual_braid_words(self.n)
        return self.act(left if kind == DualKind.LEFT else right)

    def lattice(self) -> MukaiLattice:
        return MukaiLattice(self.n, self.gram)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "gram": [[int(x) for x in self.gram.row(i)] for i in range(self.n)],
            "labels": list(self.labels),
            "signs": list(self.signs),
            "history": self.history.to_history(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ExceptionalBasisState":
        n = data["n"]
        return cls(
            n,
            Matrix(data["gram"]),
            tuple(data.get("labels", ())),
            tuple(data.get("signs", ())),
            BraidWord.from_history(data.get("history", []), n),
        )


__all__ = [
    "ExceptionalBasisState",
    "MukaiLattice",
    "braid_gram",
    "canonical_operator",
    "dual_basis_gram",
    "dual_braid_words",
    "is_unipotent_of_type",
    "mutate_gram",
    "mutation_matrix",
    "sign_gram",
    "wedge_lattice",
]
