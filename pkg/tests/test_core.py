"""Exact scalars, constants, matrices and braid words."""
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from sympy import Matrix, eye

from core.approx import ApproxComplex
from core.backend import check_symbolic_size, get_backend
from core.braid import BraidWord, Letter, central_braid
from core.constants import SeriesConstants, MpmathConstants, TableConstants
from core.errors import ArgumentError, DimensionMismatchError, NilpotencyError
from core.matrices import (
    additive_compound,
    antidiagonal,
    column_sign_equivalence,
    compound_matrix,
    exp_nilpotent,
    nilpotency_order,
    nilpotent_power_matrix,
    permutation_matrix,
    shift_matrix,
    sign_equivalence,
    sign_matrix,
    subsets,
    triangularizing_permutation,
)
from core.sym_scalar import SymScalar, zeta_even_reduce
from core.types import Backend


# ----------------------------------------------------------------------
# SCALARS
# ----------------------------------------------------------------------
def test_zeta_even_reduce():
    assert zeta_even_reduce(2) == Fraction(1, 6)
    assert zeta_even_reduce(4) == Fraction(1, 90)
    assert zeta_even_reduce(6) == Fraction(1, 945)


@pytest.mark.parametrize("n", [0, 3, -2])
def test_zeta_even_reduce_rejects(n):
    with pytest.raises(ArgumentError):
        zeta_even_reduce(n)


def test_even_zeta_is_a_pi_power():
    assert SymScalar.zeta(2) == SymScalar.pi(2) * Fraction(1, 6)


def test_pi_and_its_inverse_cancel():
    assert SymScalar.pi(3) * SymScalar.pi(-3) == 1
    assert SymScalar.pi(2) * SymScalar.pi(-1) == SymScalar.pi()


def test_rt_squares_to_half_inverse_pi():
    assert SymScalar.rt() ** 2 == SymScalar.pi(-1) / 2


def test_i_squared():
    assert SymScalar.i() * SymScalar.i() == -1


def test_from_expr_reads_fixture_strings():
    x = SymScalar.from_expr("1/(4*pi**2)")
    assert x == SymScalar.pi(-2) * Fraction(1, 4)
    y = SymScalar.from_expr("(10*gamma + I*pi)/(2*pi**2)")
    assert y == SymScalar.gamma() * SymScalar.pi(-2) * 5 + SymScalar.i() * SymScalar.pi(-1) / 2


def test_from_json_restores_terms():
    x = SymScalar.gamma() * 3 + SymScalar.i() * SymScalar.zeta(3) - SymScalar.pi(-1) * Fraction(1, 7)
    assert SymScalar.from_json(x.to_json()) == x


def test_evaluate_matches_mpmath():
    x = SymScalar.gamma() + SymScalar.zeta(3) * SymScalar.pi(-1)
    with mpmath.mp.workprec(128):
        expected = mpmath.euler + mpmath.zeta(3) / mpmath.pi
        assert abs(x.evaluate(128).value - expected) < mpmath.mpf(2) ** -120


def test_gamma_is_not_invertible():
    with pytest.raises(ArgumentError):
        SymScalar.gamma().inverse()


def test_approx_json_keeps_precision():
    x = ApproxComplex.exact(3, -2, prec=128) / 7
    y = ApproxComplex.from_json(x.to_json())
    assert y.prec == 128
    assert abs(y.value - x.value) < mpmath.mpf(2) ** -120


def test_negation_and_arithmetic_keep_precision():
    with mpmath.mp.workprec(256):
        x = ApproxComplex(mpmath.mpc(mpmath.mp.pi, mpmath.mp.e), 256)
        reference = mpmath.mpc(mpmath.mp.pi, mpmath.mp.e)
    tol = mpmath.mpf(2) ** -240
    negated = -x
    assert negated.prec == 256
    with mpmath.mp.workprec(300):
        assert abs(negated.value + reference) < tol
        assert abs((x * x).value - reference ** 2) < tol * 16
        assert abs((x - 1).value - (reference - 1)) < tol
        assert abs((x / 3).value - reference / 3) < tol
        assert abs((2 ** 80 + 1 + x).value - (2 ** 80 + 1 + reference)) < tol * 2 ** 81
    assert (x * x).prec == (x + 1).prec == 256


# ----------------------------------------------------------------------
# CONSTANTS AND BACKENDS
# ----------------------------------------------------------------------
def test_series_constants_agree_with_mpmath():
    series, reference = SeriesConstants(), MpmathConstants()
    tol = mpmath.mpf(2) ** -190
    assert abs(series.gamma(200) - reference.gamma(200)) < tol
    assert abs(series.pi(200) - reference.pi(200)) < tol
    for n in (3, 5, 7):
        assert abs(series.zeta(n, 200) - reference.zeta(n, 200)) < tol


def test_table_constants_pin_values():
    table = TableConstants({"gamma": "0.5", "pi": "3", **{f"zeta{n}": "1" for n in range(3, 22, 2)}})
    backend = get_backend(Backend.NUMERIC, 64, table)
    assert abs(backend.to_mpc(SymScalar.gamma() * 2) - 1) < mpmath.mpf(2) ** -60


def test_low_precision_is_rejected():
    with pytest.raises(ArgumentError):
        get_backend(Backend.NUMERIC, 32)


def test_symbolic_size_limit(symbolic):
    check_symbolic_size(symbolic, 5)
    with pytest.raises(ArgumentError):
        check_symbolic_size(symbolic, 100)


def test_two_pi_power_half_exponent(symbolic, numeric):
    # (2 pi)^(3/2) squared is (2 pi)^3
    x = symbolic.two_pi_power(3)
    assert x * x == symbolic.two_pi_power(6)
    with mpmath.mp.workprec(256):
        assert abs(numeric.to_mpc(numeric.two_pi_power(-1)) - 1 / mpmath.sqrt(2 * mpmath.pi)) < mpmath.mpf(10) ** -60


def test_numeric_constants_carry_full_precision(numeric):
    tol = mpmath.mpf(10) ** -70
    with mpmath.mp.workprec(300):
        assert abs(numeric.to_mpc(numeric.gamma()) - mpmath.mp.euler) < tol
        assert abs(numeric.to_mpc(numeric.zeta(3)) - mpmath.zeta(3)) < tol
        assert abs(numeric.to_mpc(-numeric.pi()) + mpmath.mp.pi) < tol
        assert abs(numeric.to_mpc(numeric.i_power(3)) + 1j) < tol
        assert abs(numeric.to_mpc(numeric.scalar(Fraction(1, 3))) - mpmath.mpf(1) / 3) < tol


# ----------------------------------------------------------------------
# MATRICES
# ----------------------------------------------------------------------
def test_sign_equivalence_finds_signs():
    A = Matrix([[1, 3, -3], [0, 1, -3], [0, 0, 1]])
    signs = (1, -1, 1)
    B = sign_matrix(signs) * A * sign_matrix(signs)
    found = sign_equivalence(A, B)
    assert found is not None
    assert sign_matrix(found) * A * sign_matrix(found) == B


def test_sign_equivalence_rejects_inconsistent_signs():
    A = Matrix([[1, 1, 1], [0, 1, 1], [0, 0, 1]])
    B = Matrix([[1, -1, 1], [0, 1, 1], [0, 0, 1]])
    assert sign_equivalence(A, B) is None


def test_triangularizing_permutation():
    S = Matrix([[1, 0, 0], [2, 1, 0], [5, 3, 1]])
    perm = triangularizing_permutation(S)
    P = permutation_matrix(perm)
    T = P * S * P.T
    assert all(T[i, j] == 0 for i in range(3) for j in range(i))


def test_triangularizing_permutation_of_a_cycle():
    S = Matrix([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert triangularizing_permutation(S) is None


def test_compound_is_multiplicative(rng):
    A = Matrix(4, 4, lambda i, j: rng.randint(-3, 3))
    B = Matrix(4, 4, lambda i, j: rng.randint(-3, 3))
    assert compound_matrix(A * B, 2) == compound_matrix(A, 2) * compound_matrix(B, 2)


def test_compound_of_object_matrix_matches_sympy(rng):
    A = Matrix(4, 4, lambda i, j: rng.randint(-5, 5))
    obj = np.array(A.tolist(), dtype=object)
    assert Matrix(compound_matrix(obj, 3).tolist()) == compound_matrix(A, 3)


def test_compound_order_out_of_range():
    with pytest.raises(ArgumentError):
        compound_matrix(eye(3), 4)


def test_additive_compound_is_derivative_of_compound():
    # Lambda^2(1 + e N) = 1 + e N^[2] + e^2 Lambda^2 N
    N = shift_matrix(4) * 3
    first_order = compound_matrix(eye(4) + N, 2) - eye(6)
    second_order = compound_matrix(eye(4) + 2 * N, 2) - eye(6)
    assert additive_compound(N, 2) == 2 * first_order - second_order / 2


def test_subsets_are_lexicographic():
    assert subsets(4, 2) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_exp_nilpotent_of_shift():
    E = exp_nilpotent(shift_matrix(3), 2)
    assert E.tolist() == [[1, 0, 0], [2, 1, 0], [2, 2, 1]]


def test_exp_nilpotent_rejects_non_nilpotent():
    with pytest.raises(NilpotencyError):
        exp_nilpotent(eye(2), 1)


def test_nilpotency_order():
    assert nilpotency_order(shift_matrix(5)) == 5
    with pytest.raises(NilpotencyError):
        nilpotency_order(antidiagonal(2))


def test_nilpotent_power_matrix_with_symbolic_log(symbolic):
    two_pi_i = symbolic.i() * symbolic.pi() * 2
    M = nilpotent_power_matrix(shift_matrix(2), log_z=two_pi_i, one=symbolic.one())
    assert M[1, 0] == two_pi_i
    with pytest.raises(ArgumentError):
        nilpotent_power_matrix(shift_matrix(2))


def test_column_sign_equivalence(symbolic):
    A = np.array([[SymScalar.gamma(), 1], [2, SymScalar.pi()]], dtype=object)
    B = A.copy()
    B[:, 1] = -B[:, 1]
    assert column_sign_equivalence(A, B, symbolic) == (1, -1)
    B[0, 0] = SymScalar.gamma() * 2
    assert column_sign_equivalence(A, B, symbolic) is None


# ----------------------------------------------------------------------
# BRAID WORDS
# ----------------------------------------------------------------------
def test_parse_word():
    word = BraidWord.parse("b2 b1 B3", 4)
    assert word.letters == (Letter(2, 1), Letter(1, 1), Letter(3, -1))
    assert str(word) == "b2 b1 B3"


def test_parse_empty_word():
    assert len(BraidWord.parse("", 3)) == 0


@pytest.mark.parametrize("text", ["b0", "x2", "b", "b4"])
def test_parse_rejects(text):
    with pytest.raises(ArgumentError):
        BraidWord.parse(text, 4)


def test_inverse_word_reverses_letters():
    word = BraidWord.of(4, 1, -3, 2)
    assert word.inverse() == BraidWord.of(4, -2, 3, -1)


def test_history_round_trip():
    word = BraidWord.of(5, 4, -1, 2)
    assert BraidWord.from_history(word.to_history(), 5) == word


def test_concatenation_needs_same_strands():
    with pytest.raises(ArgumentError):
        BraidWord.of(3, 1) * BraidWord.of(4, 1)


def test_central_braid_length():
    assert len(central_braid(4)) == 12


def test_dimension_mismatch_is_an_argument_error():
    assert issubclass(DimensionMismatchError, ArgumentError)
