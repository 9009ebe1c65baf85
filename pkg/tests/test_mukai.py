import pytest
from sympy import Matrix

from cohomology.ktheory import beilinson_gram
from core.braid import BraidWord, Letter
from core.errors import ArgumentError, SingularMatrixError
from core.matrices import compound_matrix, random_unipotent
from core.types import DualKind, MutationDir
from mukai.lattice import (
    ExceptionalBasisState,
    MukaiLattice,
    braid_gram,
    canonical_operator,
    dual_basis_gram,
    dual_braid_words,
    is_unipotent_of_type,
    mutate_gram,
    sign_gram,
    wedge_lattice,
)
from mukai.wedge_lift import generic_gram, lift_word, wedge_braid_lift


def test_left_mutation_p1():
    G = beilinson_gram(2)
    assert mutate_gram(G, 1, MutationDir.LEFT) == Matrix([[1, -2], [0, 1]])


def test_inverse_word_undoes_mutations(rng):
    for _ in range(20):
        G = random_unipotent(5, rng)
        word = BraidWord.of(5, *(rng.choice([1, -1]) * rng.randint(1, 4) for _ in range(6)))
        assert braid_gram(braid_gram(G, word), word.inverse()) == G


def test_mutations_keep_exceptional_form():
    G = beilinson_gram(4)
    word = BraidWord.of(4, 1, 3, -2, 2, 1)
    assert MukaiLattice(4, braid_gram(G, word)).is_exceptional_basis()


def test_word_and_gram_sizes_must_agree():
    with pytest.raises(ArgumentError):
        braid_gram(beilinson_gram(3), BraidWord.of(4, 1))


def test_mutation_index_range():
    with pytest.raises(ArgumentError):
        mutate_gram(beilinson_gram(3), 3, MutationDir.LEFT)


@pytest.mark.parametrize("kind", [DualKind.LEFT, DualKind.RIGHT])
def test_dual_words_match_dual_gram_p2(kind):
    state = ExceptionalBasisState(3, beilinson_gram(3))
    assert state.dual(kind).gram == dual_basis_gram(beilinson_gram(3), kind)


def test_dual_words_p1():
    G = Matrix([[1, 7], [0, 1]])
    left, right = dual_braid_words(2)
    assert left == BraidWord.of(2, -1)
    assert right == BraidWord.of(2, 1)
    assert braid_gram(G, right) == dual_basis_gram(G, DualKind.RIGHT) == Matrix([[1, -7], [0, 1]])


def test_geometric_dual_reverses():
    G = beilinson_gram(3)
    assert dual_basis_gram(G, DualKind.GEOMETRIC) == Matrix([[1, 3, 6], [0, 1, 3], [0, 0, 1]])


def test_singular_gram_has_no_canonical_operator():
    with pytest.raises(SingularMatrixError):
        canonical_operator(Matrix([[1, 1], [1, 1]]))


@pytest.mark.parametrize("k", range(2, 9))
def test_beilinson_canonical_operator_is_one_jordan_block(k):
    kappa = canonical_operator(beilinson_gram(k))
    assert is_unipotent_of_type(kappa, (-1) ** (k - 1), k)
    assert not is_unipotent_of_type(kappa, (-1) ** (k - 1), k - 1)


def test_canonical_operator_is_an_isometry():
    lattice = MukaiLattice(4, beilinson_gram(4))
    assert lattice.is_unimodular()
    assert lattice.is_isometry(lattice.canonical_operator())


def test_wedge_lattice_is_unimodular():
    assert MukaiLattice(4, beilinson_gram(4)).wedge(2).is_unimodular()


def test_wedge_lattice_of_p2_gram():
    assert wedge_lattice(beilinson_gram(3), 2) == Matrix([[1, 3, 3], [0, 1, 3], [0, 0, 1]])


def test_basis_state_labels_and_history():
    state = ExceptionalBasisState(3, beilinson_gram(3), ("O", "O(1)", "O(2)"))
    left = state.mutate(1, MutationDir.LEFT)
    assert left.labels == ("L_O(O(1))", "O", "O(2)")
    right = state.mutate(2, MutationDir.RIGHT)
    assert right.labels == ("O", "O(2)", "R_O(2)(O(1))")
    assert left.history == BraidWord.of(3, 1)
    assert right.history == BraidWord.of(3, -2)


def test_basis_state_json():
    state = ExceptionalBasisState(3, beilinson_gram(3)).act(BraidWord.of(3, 2, -1)).flip((1, -1, 1))
    restored = ExceptionalBasisState.from_json(state.to_json())
    assert restored.gram == state.gram
    assert restored.labels == state.labels
    assert restored.signs == state.signs
    assert restored.history == state.history


def test_basis_state_needs_unipotent_gram():
    with pytest.raises(ArgumentError):
        ExceptionalBasisState(2, Matrix([[1, 0], [2, 1]]))


def test_flip_conjugates_by_signs():
    state = ExceptionalBasisState(3, beilinson_gram(3)).flip((1, -1, 1))
    assert state.gram == sign_gram(beilinson_gram(3), (1, -1, 1))


# ----------------------------------------------------------------------
# WEDGE LIFT
# ----------------------------------------------------------------------
def test_single_letter_lift_on_three_strands():
    G = generic_gram(3)
    lift = wedge_braid_lift(Letter(1, 1), 2, 3, G)
    assert lift.lifted == BraidWord.of(3, -2)
    assert lift.signs == (-1, 1, 1)
    assert lift.forward == BraidWord.of(3, 2)
    expected = compound_matrix(braid_gram(G, BraidWord.of(3, 1)), 2)
    assert lift.apply(compound_matrix(G, 2)) == expected
    assert expected == Matrix([[1, 5, -13], [0, 1, -3], [0, 0, 1]])


@pytest.mark.parametrize("r, n", [(2, 4), (2, 5), (3, 5)])
def test_lifted_letters_reproduce_wedge_gram(r, n):
    G = generic_gram(n)
    for i in range(1, n):
        for word in (BraidWord.of(n, i), BraidWord.of(n, -i)):
            lifted, signs = lift_word(word, r, G)
            assert braid_gram(sign_gram(compound_matrix(G, r), signs), lifted) == compound_matrix(braid_gram(G, word), r)


def test_lift_order_out_of_range():
    with pytest.raises(ArgumentError):
        wedge_braid_lift(Letter(1, 1), 4, 3)
