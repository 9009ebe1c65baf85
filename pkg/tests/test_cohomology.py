from fractions import Fraction

import mpmath
import pytest
from sympy import Matrix

from cohomology.classes import (
    CohClass,
    KClass,
    chern_line,
    d_minus,
    exp_pi_i,
    gamma_class,
    m0_inverse,
    m0_matrix,
    mu_operator,
    r_operator,
)
from cohomology.ktheory import (
    beilinson_gram,
    bott_dim,
    bundle_kclass,
    euler_pairing_int,
    ghrr_pairing,
    kclass_pairing,
    lambda_cotangent_kclass,
    lambda_tangent_kclass,
    line_bundle_kclass,
)
from core.errors import ArgumentError, DimensionMismatchError
from core.matrices import exactly_equal, identity_object, mat_mul
from core.sym_scalar import SymScalar
from core.types import BundleKind, Sign


def test_beilinson_gram_p2():
    assert beilinson_gram(3) == Matrix([[1, 3, 6], [0, 1, 3], [0, 0, 1]])


def test_euler_pairing_of_line_bundles():
    assert euler_pairing_int(0, 2, 3) == 6
    assert euler_pairing_int(1, 1, 4) == 1
    assert euler_pairing_int(2, 0, 3) == 0


def test_line_bundles_outside_the_basis():
    assert line_bundle_kclass(3, 3).coords == (1, -3, 3)
    assert line_bundle_kclass(-1, 3).coords == (3, -3, 1)


def test_pairing_is_twist_invariant():
    # chi(O(-1), O) = chi(O(1)) = 3 on P^2
    assert kclass_pairing(line_bundle_kclass(-1, 3), KClass.basis(3, 0)) == 3


def test_tangent_class_from_euler_sequence():
    T = lambda_tangent_kclass(1, 0, 3)
    assert T.coords == (-1, 3, 0)
    assert kclass_pairing(KClass.basis(3, 0), T) == bott_dim(2, 1, 0, 0, "tangent") == 8


def test_cotangent_class():
    omega = lambda_cotangent_kclass(1, 0, 3)
    # Omega = 3 O(-1) - O
    assert omega == 3 * line_bundle_kclass(-1, 3) - KClass.basis(3, 0)
    assert bundle_kclass(BundleKind.COTANGENT, 1, 0, 3) == omega


def test_bott_cotangent_middle_cohomology():
    assert bott_dim(2, 1, 0, 1, "cotangent") == 1
    assert bott_dim(2, 1, 0, 0, "cotangent") == 0


def test_bott_rejects_unknown_variant():
    with pytest.raises(ArgumentError):
        bott_dim(2, 1, 0, 0, "symmetric")


def test_ghrr_matches_exact_pairing():
    for a, b in ((1, 2), (0, 2), (2, 0)):
        E, F = KClass.basis(3, a), KClass.basis(3, b)
        value = ghrr_pairing(E, F, 128)
        assert abs(value.value - kclass_pairing(E, F)) < mpmath.mpf(10) ** -30


def test_kclass_ranks_must_agree():
    with pytest.raises(DimensionMismatchError):
        KClass(3, (1, 2))
    with pytest.raises(DimensionMismatchError):
        KClass.basis(2, 0) + KClass.basis(3, 0)


def test_gamma_class_p1(symbolic):
    gamma = gamma_class(2, Sign.MINUS, symbolic)
    assert gamma.coeffs == (1, SymScalar.gamma() * 2)
    plus = gamma_class(2, Sign.PLUS, symbolic)
    assert plus.coeffs[1] == SymScalar.gamma() * -2


def test_gamma_class_second_order(symbolic):
    # Gamma(1 - s)^3 = 1 + 3 gamma s + (9 gamma^2 + 3 zeta(2)) s^2 / 2
    gamma = gamma_class(3, Sign.MINUS, symbolic)
    g = SymScalar.gamma()
    assert gamma.coeffs[2] == g * g * Fraction(9, 2) + SymScalar.pi(2) * Fraction(1, 4)


def test_graded_chern_character(symbolic):
    ch = chern_line(2, 1, symbolic)
    assert ch.coeffs == (1, SymScalar.i() * SymScalar.pi() * 2)


def test_d_minus_structure_sheaf_p1(symbolic):
    col = d_minus(KClass.basis(2, 0), symbolic).coeffs
    rt, i = SymScalar.rt(), SymScalar.i()
    assert col[0] == i * rt
    assert col[1] == (i * SymScalar.gamma() * 2 + SymScalar.pi() * 2) * rt


def test_mu_and_r():
    assert mu_operator(3) == [Fraction(-1), Fraction(0), Fraction(1)]
    assert r_operator(2) == Matrix([[0, 0], [2, 0]])


@pytest.mark.parametrize("k", [2, 3, 4])
def test_m0_inverse(symbolic, k):
    M = m0_matrix(mu_operator(k), r_operator(k), symbolic)
    Minv = m0_inverse(mu_operator(k), r_operator(k), symbolic)
    assert exactly_equal(mat_mul(M, Minv), identity_object(k))


def test_exp_pi_i_is_exact_on_half_integers(symbolic, numeric):
    assert exp_pi_i(Fraction(1, 2), symbolic) == SymScalar.i()
    assert exp_pi_i(Fraction(-3), symbolic) == -1
    with pytest.raises(ArgumentError):
        exp_pi_i(Fraction(1, 3), symbolic)
    value = exp_pi_i(Fraction(1, 3), numeric)
    with mpmath.mp.workprec(256):
        assert abs(value.value - mpmath.expjpi(mpmath.mpf(1) / 3)) < mpmath.mpf(10) ** -60


def test_exp_needs_vanishing_constant_term():
    with pytest.raises(ArgumentError):
        CohClass(2, (1, 1)).exp()


def test_cup_truncates():
    sigma = CohClass.sigma_power(3, 1)
    assert sigma.cup(sigma).cup(sigma).coeffs == (0, 0, 0)
    assert sigma.cup(sigma).integrate() == 1
