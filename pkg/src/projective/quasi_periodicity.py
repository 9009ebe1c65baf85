from dataclasses import dataclass, field

from mpmath import mp, mpf

from config import QMONO_PRECISION
from core.matrices import binomial, sign_equivalence
from projective.canonical import canonical_stokes, chamber_stokes, crossing_word
from projective.coords import chamber_index, lex_order
from monodromy.actions import braid_stokes
from logger import get_logger

logger = get_logger()


@dataclass
class QuasiPeriodicityReport:
    k: int
    chambers: int
    rotation_sign_equivalent: bool = True  # S(m) ~ S(m + 2)
    superdiagonal_signs_only: bool = True  # |S(m)_{j,j+1}| = |S(m+1)_{j,j+1}|
    binomial_superdiagonal: bool = True  # |S_{j,j+1}| = C(k, j)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.rotation_sign_equivalent and self.superdiagonal_signs_only and self.binomial_superdiagonal

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "chambers": self.chambers,
            "rotation_sign_equivalent": self.rotation_sign_equivalent,
            "superdiagonal_signs_only": self.superdiagonal_signs_only,
            "binomial_superdiagonal": self.binomial_superdiagonal,
            "pass": self.passed,
            "failures": list(self.failures),
        }


def superdiagonal(S) -> list[int]:
    return [int(S[j, j + 1]) for j in range(S.rows - 1)]


def _walk(k: int, count: int) -> list:
    S = chamber_stokes(k, 0)
    out = [S]
    for m in range(count - 1):
        S = braid_stokes(S, crossing_word(k, m))
        out.append(S)
    return out


def quasi_periodicity_check(k: int) -> QuasiPeriodicityReport:
    """Checks the chambers of one full rotation (2k of them) against the quasi-periodic pattern."""
    chambers = 2 * k
    walk = _walk(k, chambers + 2)
    report = QuasiPeriodicityReport(k, chambers)
    expected = [binomial(k, j) for j in range(1, k)]
    for m in range(chambers):
        if sign_equivalence(walk[m], walk[m + 2]) is None:
            report.rotation_sign_equivalent = False
            report.failures.append(f"S({m}) and S({m + 2}) are not sign conjugate")
        if [abs(x) for x in superdiagonal(walk[m])] != [abs(x) for x in superdiagonal(walk[m + 1])]:
            report.superdiagonal_signs_only = False
            report.failures.append(f"superdiagonals of S({m}) and S({m + 1}) differ beyond signs")
        if [abs(x) for x in superdiagonal(walk[m])] != expected:
            report.binomial_superdiagonal = False
            report.failures.append(f"superdiagonal of S({m}) is {superdiagonal(walk[m])}")
    for failure in report.failures:
        parity = "odd" if k % 2 else "even"
        logger.warning(f"[CHAMBER] quasi-periodicity fails for {parity} k={k}: {failure}")
    return report


def shift_invariant(k: int, t, phi, delta, precision: int = QMONO_PRECISION) -> bool:
    """(t + i delta, phi - delta / k) lies in the same chamber with the same lexicographical order."""
    with mp.workprec(precision):
        shifted_t = complex(t) + 1j * float(delta)
        shifted_phi = mpf(phi) - mpf(delta) / k
        return chamber_index(k, t, phi, precision) == chamber_index(k, shifted_t, shifted_phi, precision) and lex_order(
            k, t, phi, precision
        ) == lex_order(k, shifted_t, shifted_phi, precision)


def beilinson_reachable(k: int) -> list[int]:
    """Chambers of one full rotation whose Stokes matrix is sign conjugate to the Beilinson form."""
    target = canonical_stokes(k)
    found = [m for m, S in enumerate(_walk(k, 2 * k)) if sign_equivalence(S, target) is not None]
    logger.debug(f"[CHAMBER] k={k}: Beilinson form in chambers {found}")
    return found
