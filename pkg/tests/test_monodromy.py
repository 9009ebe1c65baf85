from fractions import Fraction

import mpmath
import pytest
from sympy import Matrix

from cohomology.classes import m0_inverse, mu_operator, r_operator
from core.braid import BraidWord
from core.errors import ArgumentError
from core.matrices import exactly_equal, mat_mul
from core.types import Constraint, Sign
from monodromy.actions import braid_act, braid_matrix, braid_stokes, c0_act, perm_act, rotate_shift, sign_act
from monodromy.c0 import C0Element, a_minus, a_plus, c0_check, c0_constraints, c0_exp, k_pm, k_pm_inverse
from monodromy.diophantine import (
    check_p_invariants,
    expected_p_invariants,
    is_markov,
    markov_descend,
    markov_solutions,
    n4_constraints,
    n4_expected,
    p_invariants,
    stokes_triple,
)
from monodromy.validate import stokes_from_connection, validate
from projective.canonical import chamber_data, chamber_stokes


@pytest.fixture
def p2(symbolic):
    return chamber_data(3, 0, symbolic)


# ----------------------------------------------------------------------
# BRAID ACTION
# ----------------------------------------------------------------------
def test_braid_matrix_shape():
    S = chamber_stokes(3, 0)
    assert braid_matrix(S, BraidWord.of(3, 1).letters[0]) == Matrix([[0, 1, 0], [1, -3, 0], [0, 0, 1]])
    assert braid_matrix(S, BraidWord.of(3, -2).letters[0]) == Matrix([[1, 0, 0], [0, 3, 1], [0, 1, 0]])


def test_braid_relations_on_stokes():
    S = chamber_stokes(4, 0)
    assert braid_stokes(S, BraidWord.of(4, 1, 2, 1)) == braid_stokes(S, BraidWord.of(4, 2, 1, 2))
    assert braid_stokes(S, BraidWord.of(4, 1, 3)) == braid_stokes(S, BraidWord.of(4, 3, 1))


def test_word_then_inverse_is_identity(p2):
    word = BraidWord.of(3, 1, -2, 2, 1)
    back = braid_act(braid_act(p2, word), word.inverse())
    assert back.S == p2.S
    assert exactly_equal(back.C, p2.C)


def test_braid_action_keeps_constraints(p2):
    moved = braid_act(p2, BraidWord.of(3, 2, -1))
    assert moved.is_triangular()
    assert validate(moved).passed


def test_braid_action_strand_mismatch(p2):
    with pytest.raises(ArgumentError):
        braid_act(p2, BraidWord.of(4, 1))


def test_sign_action_keeps_constraints(p2):
    assert validate(sign_act(p2, (1, -1, -1))).passed


def test_sign_action_size(p2):
    with pytest.raises(ArgumentError):
        sign_act(p2, (1, -1))


def test_permutation_breaks_only_triangularity(p2):
    report = validate(perm_act(p2, (2, 0, 1)))
    assert not report[Constraint.C3].passed
    assert report[Constraint.C5].passed
    assert report[Constraint.C6].passed


def test_galois_shift_round_trip(p2):
    back = rotate_shift(rotate_shift(p2, 2), -2)
    assert exactly_equal(back.C, p2.C)


# ----------------------------------------------------------------------
# C0
# ----------------------------------------------------------------------
def test_c0_exp_of_odd_shifts():
    x = c0_exp((0, Fraction(1, 2), 0, 3))
    assert x.alphas == (1, Fraction(1, 2), Fraction(1, 8), Fraction(1, 48) + 3)
    assert c0_check(x)


def test_c0_exp_rejects_even_shifts():
    with pytest.raises(ArgumentError):
        c0_exp((0, 1, 2, 0))


def test_c0_constraint_detects_violation():
    x = C0Element(4, (1, 1, 0, 0))
    assert c0_constraints(x) == [-1]
    assert not c0_check(x)


def test_c0_element_size():
    with pytest.raises(ArgumentError):
        C0Element(3, (1, 0))


def test_c0_products_stay_in_c0():
    x = c0_exp((0, 2, 0, Fraction(-1, 3), 0))
    y = c0_exp((0, Fraction(5, 7), 0, 1, 0))
    assert c0_check(x * y)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_a_minus_lies_in_c0(symbolic, k):
    assert c0_check(a_minus(k, symbolic))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_a_plus_lies_in_c0(symbolic, k):
    assert c0_check(a_plus(k, symbolic))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_k_plus_over_k_minus_is_m0_inverse(symbolic, k):
    lhs = mat_mul(k_pm(k, Sign.PLUS, symbolic), k_pm_inverse(k, Sign.MINUS, symbolic))
    assert exactly_equal(lhs, m0_inverse(mu_operator(k), r_operator(k), symbolic))


def test_c0_action_keeps_constraints(p2):
    moved = c0_act(p2, c0_exp((0, 4, 0)))
    assert moved.S == p2.S
    assert validate(moved).passed


# ----------------------------------------------------------------------
# INTEGER INVARIANTS
# ----------------------------------------------------------------------
def test_expected_p_invariants():
    # (t - 1)^3 for d even, (t + 1)^3 for d odd
    assert expected_p_invariants(3, 2) == [-1, 3, -3, 1]
    assert expected_p_invariants(3, 1) == [1, 3, 3, 1]


@pytest.mark.parametrize("k", range(2, 7))
def test_projective_p_invariants(k):
    for m in range(k):
        assert check_p_invariants(chamber_stokes(k, m), k - 1)


def test_p_invariants_are_braid_invariant():
    S = chamber_stokes(4, 0)
    assert p_invariants(braid_stokes(S, BraidWord.of(4, 3, -1, 2, 2))) == p_invariants(S)


def test_markov_triples_of_p2():
    for m in range(3):
        assert is_markov(*stokes_triple(chamber_stokes(3, m)))


def test_markov_solutions_and_descent():
    solutions = markov_solutions(30)
    assert solutions == [(3, 3, 3), (3, 3, 6), (3, 6, 15)]
    descent = markov_descend(-15, -6, 3)
    assert descent.reached
    assert len(descent.path) == 2


def test_markov_descent_rejects_non_solutions():
    with pytest.raises(ArgumentError):
        markov_descend(1, 1, 1)


def test_n4_constraints_of_p3():
    assert n4_constraints(chamber_stokes(4, 0)) == n4_expected(3) == (8, 16)
    assert n4_expected(2) == (0, 0)


def test_stokes_recovered_from_connection(p2):
    recovered = stokes_from_connection(p2)
    with mpmath.mp.workprec(256):
        for i in range(3):
            for j in range(3):
                assert abs(recovered[i, j] - int(p2.S[i, j])) < mpmath.mpf(10) ** -40
