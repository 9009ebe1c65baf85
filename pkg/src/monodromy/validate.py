from dataclasses import dataclass, field

import mpmath
from mpmath import mp

from cohomology.classes import exp_pi_i_diag, exp_pi_i_nilpotent
from core.matrices import exactly_equal, is_upper_unipotent, mat_mul, max_residual, object_transpose, to_object
from core.types import Backend, Constraint
from config import PrecisionCfg
from monodromy.data import MonodromyData
from logger import get_logger

logger = get_logger()


@dataclass
class ConstraintResult:
    constraint: Constraint
    passed: bool
    residual: object = 0

    def to_json(self) -> dict:
        residual = self.residual
        if not isinstance(residual, (int, str)):
            residual = mpmath.nstr(residual, 8)
        return {"constraint": self.constraint.value, "pass": self.passed, "residual": residual}


@dataclass
class ValidationReport:
    results: list[ConstraintResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, constraint) -> ConstraintResult:
        constraint = Constraint(constraint)
        return next(r for r in self.results if r.constraint == constraint)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.results]


def _compare(constraint: Constraint, lhs, rhs, data: MonodromyData, tol) -> ConstraintResult:
    backend = data.backend
    if backend.kind == Backend.SYMBOLIC:
        ok = exactly_equal(lhs, rhs)
        residual = 0 if ok else max_residual(lhs, rhs, backend)
    else:
        residual = max_residual(lhs, rhs, backend)
        ok = residual <= tol * data.n
    logger.debug(f"[VALIDATE] {constraint.value}: residual {mpmath.nstr(residual, 5) if residual else 0}")
    return ConstraintResult(constraint, bool(ok), residual)


def _is_singular(data: MonodromyData, tol) -> bool:
    backend = data.backend
    with mp.workprec(backend.precision):
        M = mpmath.matrix([[backend.to_mpc(x) for x in row] for row in to_object(data.C)])
        return abs(mpmath.det(M)) <= tol


def validate(data: MonodromyData, tol=None) -> ValidationReport:
    """Checks the constraints of a semisimple point on (S, C).

    c3: S unipotent upper triangular
    c4: C S^T S^-1 = M0 C
    c5: C S C^T = e^{-pi i R} e^{-pi i mu} eta^-1
    c6: C S^T C^T = e^{pi i R} e^{pi i mu} eta^-1
    Equivalent to the usual statements with C^-1, without inverting C.
    """
    if tol is None:
        tol = mpmath.mpf(10) ** (-PrecisionCfg().toleranceExp)
    backend = data.backend
    report = ValidationReport()
    report.results.append(ConstraintResult(Constraint.C3, is_upper_unipotent(data.S)))

    C = to_object(data.C)
    Ct = object_transpose(C)
    S = data.S
    eta_inv = data.eta.inv()
    if _is_singular(data, tol):
        logger.warning("[VALIDATE] central connection matrix is singular")
        report.results.append(ConstraintResult(Constraint.C4, False, "singular"))
    else:
        lhs = mat_mul(C, S.T * S.inv())
        report.results.append(_compare(Constraint.C4, lhs, mat_mul(data.m0(), C), data, tol))

    minus = mat_mul(exp_pi_i_nilpotent(data.R, -1, backend), exp_pi_i_diag(data.mu, -1, backend), eta_inv)
    report.results.append(_compare(Constraint.C5, mat_mul(C, S, Ct), minus, data, tol))
    plus = mat_mul(exp_pi_i_nilpotent(data.R, 1, backend), exp_pi_i_diag(data.mu, 1, backend), eta_inv)
    report.results.append(_compare(Constraint.C6, mat_mul(C, S.T, Ct), plus, data, tol))
    return report


def stokes_from_connection(data: MonodromyData):
    """C^-1 e^{-pi i R} e^{-pi i mu} eta^-1 C^-T evaluated numerically, for integer recovery."""
    numeric = data.numeric()
    backend = numeric.backend
    with mp.workprec(backend.precision):
        C = mpmath.matrix([[backend.to_mpc(x) for x in row] for row in numeric.C])
        X = to_object(mat_mul(exp_pi_i_nilpotent(data.R, -1, backend), exp_pi_i_diag(data.mu, -1, backend), data.eta.inv()))
        X = mpmath.matrix([[backend.to_mpc(x) for x in row] for row in X])
        Cinv = C ** -1
        return Cinv * X * Cinv.T
