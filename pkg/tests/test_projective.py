from fractions import Fraction

import mpmath
import pytest
from sympy import Matrix

from cohomology.ktheory import beilinson_gram, collection_gram
from core.braid import BraidWord
from core.errors import ArgumentError, NotAdmissibleError
from core.matrices import sign_equivalence
from monodromy.actions import braid_act, rotate_shift, sign_act
from monodromy.validate import validate
from projective.canonical import (
    beilinson_braid,
    canonical_data,
    canonical_stokes,
    chamber0_objects,
    chamber_data,
    chamber_stokes,
    chamber_walk,
    collection_classes,
    collection_labels,
    collection_state,
    omega_braids,
    rotation_stokes,
    rotation_word,
)
from projective.coords import (
    canonical_coords,
    chamber_index,
    chamber_slope,
    companion_u,
    eigenvector_norms,
    lex_order,
    parse_complex,
    psi_matrix,
    stokes_rays,
)
from projective.quasi_periodicity import beilinson_reachable, quasi_periodicity_check, shift_invariant
from projective.stokes_factors import factor_k_minus2, shifted_factor, stokes_factors
from projective.topological import alpha, gamma_quotient_check, recursion_coeffs, solution_check, top_solution_coeffs
from storage.file_manager import p2_collection_rows


# ----------------------------------------------------------------------
# CANONICAL FORM AND CHAMBERS
# ----------------------------------------------------------------------
@pytest.mark.parametrize("k", range(2, 9))
def test_canonical_stokes_inverts_beilinson(k):
    assert canonical_stokes(k).inv() == beilinson_gram(k)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_canonical_data_satisfies_constraints(symbolic, k):
    data = canonical_data(k, symbolic)
    assert data.S == canonical_stokes(k)
    assert validate(data).passed


def test_beilinson_braid_words():
    assert str(beilinson_braid(4)) == "b1 b3 b2 b1"
    assert str(beilinson_braid(5)) == "b2 b1 b4 b3 b2 b1"
    w1, w2 = omega_braids(4)
    assert str(w1) == "b1 b3"
    assert str(w2) == "b2"


def test_p2_chambers():
    assert chamber_stokes(3, 0) == Matrix([[1, 3, -3], [0, 1, -3], [0, 0, 1]])
    assert chamber_stokes(3, 1) == Matrix([[1, -3, -6], [0, 1, 3], [0, 0, 1]])
    assert chamber_stokes(3, 2) == Matrix([[1, 3, 3], [0, 1, 3], [0, 0, 1]])


def test_tabulated_projective_chambers(tabulated):
    for (r, k, m), expected in tabulated.items():
        if r == 1 and k <= 5:
            assert sign_equivalence(chamber_stokes(k, m), expected) is not None, (k, m)


def test_p2_collections_match_table():
    for row in p2_collection_rows():
        S = chamber_stokes(3, row.chamber)
        assert sign_equivalence(S, row.S) is not None
        gram = collection_gram(collection_classes(3, row.chamber))
        assert sign_equivalence(gram, S.inv()) is not None


def test_chamber0_collection_names():
    assert [str(obj) for obj in chamber0_objects(3)] == ["O(1)", "O(2)", "Lambda^2T"]
    assert [str(obj) for obj in collection_labels(3, 0)] == ["O(1)", "O(2)", "Lambda^2T"]
    assert [str(obj) for obj in chamber0_objects(4)] == ["O(2)", "T(1)", "O(3)", "Lambda^3T"]


def test_unnamed_collection_needs_state():
    with pytest.raises(ArgumentError):
        collection_labels(4, 3)
    state = collection_state(3, 7)
    assert sign_equivalence(state.gram, chamber_stokes(3, 7).inv()) is not None


@pytest.mark.parametrize("k", [2, 3, 4])
def test_chamber_data_satisfies_constraints(symbolic, k):
    for m in (-1, 0, 1, 2):
        assert validate(chamber_data(k, m, symbolic)).passed, m


NUMERIC_TOL = mpmath.mpf(10) ** -40


@pytest.mark.parametrize("k", [2, 3, 4])
def test_numeric_data_satisfies_constraints(numeric, k):
    assert validate(canonical_data(k, numeric), NUMERIC_TOL).passed
    for m in (-1, 0, 1, 2):
        data = chamber_data(k, m, numeric)
        assert validate(data, NUMERIC_TOL).passed, m
        flipped = sign_act(data, tuple((-1) ** j for j in range(k)))
        assert validate(flipped, NUMERIC_TOL).passed, m
        moved = braid_act(data, BraidWord.of(k, 1, -(k - 1)))
        assert validate(moved, NUMERIC_TOL).passed, m


def test_symbolic_data_evaluated_numerically(symbolic):
    data = canonical_data(3, symbolic).numeric(256)
    assert data.backend.precision == 256
    assert validate(data, NUMERIC_TOL).passed
    assert validate(chamber_data(4, 1, symbolic).numeric(256), NUMERIC_TOL).passed


def test_walk_there_and_back(symbolic):
    start = chamber_data(3, 0, symbolic)
    there = chamber_walk(3, start, 4)[-1]
    assert there.meta.chamber == 4
    back = chamber_walk(3, there, -4)[-1]
    assert back.meta.chamber == 0
    assert back.S == start.S


def test_walk_size_mismatch(symbolic):
    with pytest.raises(ArgumentError):
        chamber_walk(4, chamber_data(3, 0, symbolic), 1)


@pytest.mark.parametrize("k", [2, 3])
def test_full_rotation_is_the_galois_shift(symbolic, k):
    data = chamber_data(k, 0, symbolic)
    rotated = braid_act(data, rotation_word(k))
    assert rotated.S == data.S
    assert validate(rotate_shift(data, 1)).passed


def test_rotation_has_2k_chambers():
    walk = rotation_stokes(3)
    assert len(walk) == 6
    assert walk[:3] == [chamber_stokes(3, m) for m in range(3)]


# ----------------------------------------------------------------------
# COORDINATES
# ----------------------------------------------------------------------
@pytest.mark.parametrize(
    "text, value",
    [("0.5+3.1i", 0.5 + 3.1j), ("-2i", -2j), ("i", 1j), ("-i", -1j), ("4", 4 + 0j)],
)
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1+"])
def test_parse_complex_rejects(text):
    with pytest.raises(ArgumentError):
        parse_complex(text)


def test_canonical_coords_at_origin():
    u = canonical_coords(2)
    assert abs(u[0] - 2) < mpmath.mpf(10) ** -50
    assert abs(u[1] + 2) < mpmath.mpf(10) ** -50


def test_psi_is_orthogonal_for_eta():
    k = 4
    with mpmath.mp.workprec(256):
        Psi = psi_matrix(k, 0.3 + 0.2j)
        gram = Psi.T * Psi
        for i in range(k):
            for j in range(k):
                expected = 1 if i + j == k - 1 else 0
                assert abs(gram[i, j] - expected) < mpmath.mpf(10) ** -50


def test_psi_diagonalizes_first_chern_product():
    k, t = 3, 0.3 + 0.2j
    with mpmath.mp.workprec(256):
        Psi = psi_matrix(k, t)
        U = mpmath.diag(canonical_coords(k, t))
        residual = Psi ** -1 * U * Psi - companion_u(k, t)
        assert mpmath.mnorm(residual, 1) < mpmath.mpf(10) ** -50


def test_eigenvector_norms_are_nonzero():
    assert all(abs(x) > 1 for x in eigenvector_norms(3))


def test_stokes_ray_of_p1():
    rays = stokes_rays(2)
    with mpmath.mp.workprec(256):
        assert abs(rays[(1, 2)] - 3 * mpmath.pi / 2) < mpmath.mpf(10) ** -50
        assert abs(rays[(2, 1)] - mpmath.pi / 2) < mpmath.mpf(10) ** -50


def test_chamber_index():
    assert chamber_index(3) == 0
    for m in range(-2, 6):
        assert chamber_index(3, 0, chamber_slope(3, m)) == m
    with mpmath.mp.workprec(256):
        assert chamber_index(3, 1j * mpmath.pi, chamber_slope(3, 0)) == 1


def test_line_through_a_stokes_ray():
    with pytest.raises(NotAdmissibleError) as info:
        lex_order(3, 0, 0)
    assert info.value.pair == (2, 3)


def test_lex_order_of_chamber0():
    assert lex_order(3) == (1, 2, 0)
    assert lex_order(2) == (1, 0)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_shift_invariance(k):
    assert shift_invariant(k, 0, chamber_slope(k, 0), 0.25)


# ----------------------------------------------------------------------
# QUASI-PERIODICITY
# ----------------------------------------------------------------------
@pytest.mark.parametrize("k", [2, 4, 6])
def test_even_quasi_periodicity(k):
    report = quasi_periodicity_check(k)
    assert report.passed, report.failures
    assert report.to_json()["chambers"] == 2 * k


def test_beilinson_form_reachability():
    assert beilinson_reachable(2)
    assert beilinson_reachable(3)
    assert beilinson_reachable(4) == []


# ----------------------------------------------------------------------
# STOKES FACTORS
# ----------------------------------------------------------------------
@pytest.mark.parametrize("k", [2, 3])
def test_factors_assemble_chamber0(k):
    assert stokes_factors(k).matches_chamber0() is not None


def test_factors_p2():
    factors = stokes_factors(3)
    assert factors.S == Matrix([[1, 0, 0], [-3, 1, 3], [-3, 0, 1]])
    assert factors.lex_stokes() == chamber_stokes(3, 0)


def test_shifted_factor_base_case():
    assert shifted_factor(5, 3) == factor_k_minus2(5)


# ----------------------------------------------------------------------
# TOPOLOGICAL SOLUTION
# ----------------------------------------------------------------------
def test_alpha_first_terms():
    assert alpha(2, 0, 0) == 1
    assert alpha(2, 1, 0) == 1
    assert alpha(2, 1, 1) == -2
    assert alpha(2, 2, 0) == Fraction(1, 4)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_closed_form_matches_recursion(k):
    assert top_solution_coeffs(k, 6) == recursion_coeffs(k, 6)


@pytest.mark.parametrize("k", [2, 3])
def test_truncated_solution_solves_equation(k):
    assert solution_check(k, 3)


@pytest.mark.parametrize("k", [2, 3])
def test_gamma_quotient(k):
    assert all(gamma_quotient_check(k, n, 128) for n in (1, 2))
