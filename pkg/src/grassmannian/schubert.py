"""Schubert calculus of G(r, k) on the wedge model Lambda^r H(P^{k-1}).

The Schubert class sigma_lambda corresponds to sigma^{lambda_1 + r - 1} ^ ... ^ sigma^{lambda_r}.
Wedge classes are stored over r-subsets of {0..k-1} in lexicographic order; a
subset stands for the wedge of its exponents written in decreasing order, so
that sigma_lambda has coefficient +1 on its own subset.
"""
from dataclasses import dataclass, field
from itertools import product

import mpmath
from mpmath import mp

from config import QMONO_PRECISION
from core.errors import ArgumentError
from core.matrices import permutation_sign, subsets


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ArgumentError(f"{parts} is not a partition")
        object.__setattr__(self, "parts", parts)

    def padded(self, r: int) -> tuple[int, ...]:
        trimmed = tuple(p for p in self.parts if p)
        if len(trimmed) > r:
            raise ArgumentError(f"partition {self.parts} has more than {r} parts")
        return trimmed + (0,) * (r - len(trimmed))

    def fits(self, r: int, k: int) -> bool:
        trimmed = tuple(p for p in self.parts if p)
        return len(trimmed) <= r and (not trimmed or trimmed[0] <= k - r)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def _check(r: int, k: int):
    if not 0 < r < k:
        raise ArgumentError(f"G(r,k) needs 0 < r < k, got r={r}, k={k}")


def satake_exponents(lam: Partition, r: int, k: int) -> tuple[int, ...]:
    """(lambda_j + r - j)_j, strictly decreasing."""
    _check(r, k)
    if not lam.fits(r, k):
        raise ArgumentError(f"partition {lam} does not fit in {r}x{k - r}")
    parts = lam.padded(r)
    return tuple(parts[j] + r - 1 - j for j in range(r))


def satake_index(lam: Partition, r: int, k: int) -> tuple[tuple[int, ...], int]:
    """(ascending subset, lexicographic position) of sigma_lambda."""
    subset = tuple(sorted(satake_exponents(lam, r, k)))
    return subset, subsets(k, r).index(subset)


def partition_of(subset, r: int) -> Partition:
    exps = sorted(subset, reverse=True)
    return Partition(tuple(exps[j] - (r - 1 - j) for j in range(r)))


def schubert_basis(r: int, k: int) -> list[Partition]:
    """Partitions in r x (k-r), in the lexicographic order of their subsets."""
    _check(r, k)
    return [partition_of(subset, r) for subset in subsets(k, r)]


# ----------------------------------------------------------------------
# WEDGE ARITHMETIC
# ----------------------------------------------------------------------
def _normal_form(exponents):
    """(sign, ascending subset) of sigma^{e_1} ^ ... ^ sigma^{e_r} relative to decreasing order, or None."""
    if len(set(exponents)) != len(exponents):
        return None
    order = sorted(range(len(exponents)), key=lambda j: -exponents[j])
    return permutation_sign(order), tuple(sorted(exponents))


def _add(out: dict, key, value):
    total = out.get(key, 0) + value
    if total == 0:
        out.pop(key, None)
    else:
        out[key] = total


def classical_pieri_wedge(ell: int, lam: Partition, r: int, k: int) -> dict:
    """sigma_ell u sigma_lambda: h_ell(x_1..x_r) acting factorwise, sigma^m = 0 for m >= k."""
    if ell < 0:
        raise ArgumentError(f"special class index must be >= 0, got {ell}")
    exps = satake_exponents(lam, r, k)
    out = {}
    for shifts in product(range(ell + 1), repeat=r):
        if sum(shifts) != ell:
            continue
        raised = tuple(e + s for e, s in zip(exps, shifts))
        if max(raised) >= k:
            continue
        normal = _normal_form(raised)
        if normal is not None:
            _add(out, normal[1], normal[0])
    return {partition_of(subset, r): c for subset, c in out.items()}


def pieri_oracle(ell: int, lam: Partition, r: int, k: int) -> dict:
    """Partitions nu in r x (k-r) with nu / lambda a horizontal strip of size ell."""
    _check(r, k)
    base = lam.padded(r)
    out = {}
    for nu in schubert_basis(r, k):
        parts = nu.padded(r)
        if nu.size - lam.size != ell:
            continue
        interlaced = all(parts[j] >= base[j] for j in range(r)) and all(
            base[j] >= parts[j + 1] for j in range(r - 1)
        )
        if interlaced:
            out[nu] = 1
    return out


def p_class_mult(ell: int, lam: Partition, r: int, k: int, q=None) -> dict:
    """p_ell * sigma_lambda: sigma^ell cupped into one factor at a time.

    With ``q`` the product is quantum: sigma^m = q' sigma^{m-k} for m >= k with
    q' = (-1)^{r-1} q.
    """
    if not 0 <= ell <= k - 1:
        raise ArgumentError(f"p_ell needs 0 <= ell <= {k - 1}, got {ell}")
    exps = satake_exponents(lam, r, k)
    twisted_q = None if q is None else (-1) ** (r - 1) * q
    out = {}
    for i in range(r):
        raised = list(exps)
        raised[i] += ell
        coeff = 1
        if raised[i] >= k:
            if twisted_q is None:
                continue
            raised[i] -= k
            coeff = twisted_q
        normal = _normal_form(tuple(raised))
        if normal is not None:
            _add(out, normal[1], normal[0] * coeff)
    return {partition_of(subset, r): c for subset, c in out.items()}


def quantum_p_matrix(ell: int, r: int, k: int, q=1, precision: int = QMONO_PRECISION) -> mpmath.matrix:
    """Matrix of p_ell * in the Schubert basis (columns are images)."""
    basis = schubert_basis(r, k)
    position = {lam: a for a, lam in enumerate(basis)}
    with mp.workprec(precision):
        M = mpmath.matrix(len(basis), len(basis))
        for b, lam in enumerate(basis):
            for nu, c in p_class_mult(ell, lam, r, k, mpmath.mpc(q)).items():
                M[position[nu], b] += c
        return M


def quantum_p_eigenvalues(ell: int, r: int, k: int, q=1, precision: int = QMONO_PRECISION) -> list:
    with mp.workprec(precision):
        values, _ = mpmath.eig(quantum_p_matrix(ell, r, k, q, precision))
        return list(values)
