"""K-theory of P^{k-1}: Euler pairing, Euler-sequence classes, Bott formulas, GHRR."""
from fractions import Fraction
from functools import lru_cache

import sympy
from sympy import Matrix

from cohomology.classes import KClass, CohClass, graded_chern
from core.backend import NumericBackend
from core.errors import ArgumentError
from core.matrices import binomial
from core.types import BundleKind
from config import QMONO_PRECISION


def euler_pairing_int(a: int, b: int, k: int) -> int:
    """chi(O(a), O(b)) on P^{k-1} = C(k-1+b-a, b-a), zero when b-a < 0."""
    return binomial(k - 1 + b - a, b - a)


def kclass_pairing(E: KClass, F: KClass) -> int:
    if E.k != F.k:
        raise ArgumentError(f"pairing of K-classes of ranks {E.k} and {F.k}")
    k = E.k
    return sum(e * f * euler_pairing_int(a, b, k) for a, e in enumerate(E.coords) if e for b, f in enumerate(F.coords) if f)


def beilinson_gram(k: int) -> Matrix:
    return Matrix(k, k, lambda a, b: euler_pairing_int(a, b, k))


def collection_gram(classes: list[KClass]) -> Matrix:
    n = len(classes)
    return Matrix(n, n, lambda i, j: kclass_pairing(classes[i], classes[j]))


# ----------------------------------------------------------------------
# KOSZUL REDUCTION
# ----------------------------------------------------------------------
def reduce_twists(k: int, extended: dict[int, int]) -> KClass:
    """Projects sum c_j [O(j)], any integers j, onto the basis with sum_j (-1)^j C(k,j) [O(j+s)] = 0."""
    coeffs = {j: c for j, c in extended.items() if c}
    while coeffs and max(coeffs) >= k:
        top = max(coeffs)
        c = coeffs.pop(top)
        s = top - k
        for j in range(k):
            coeffs[j + s] = coeffs.get(j + s, 0) + c * (-1) ** (k + j + 1) * binomial(k, j)
    while coeffs and min(coeffs) < 0:
        low = min(coeffs)
        c = coeffs.pop(low)
        for j in range(1, k + 1):
            coeffs[j + low] = coeffs.get(j + low, 0) - c * (-1) ** j * binomial(k, j)
        coeffs = {j: v for j, v in coeffs.items() if v}
    return KClass(k, tuple(coeffs.get(j, 0) for j in range(k)))


def line_bundle_kclass(j: int, k: int) -> KClass:
    return reduce_twists(k, {j: 1})


def lambda_tangent_kclass(p: int, q: int, k: int) -> KClass:
    """[Lambda^p T (q)] = sum_{h<=p} (-1)^{p-h} C(k,h) [O(h+q)] from the Euler sequence."""
    if not 0 <= p <= k - 1:
        raise ArgumentError(f"exterior power p={p} outside 0..{k - 1}")
    return reduce_twists(k, {h + q: (-1) ** (p - h) * binomial(k, h) for h in range(p + 1)})


def lambda_cotangent_kclass(p: int, q: int, k: int) -> KClass:
    """[Lambda^p Omega (q)] = sum_{h<=p} (-1)^{p-h} C(k,h) [O(q-h)] from the dual Euler sequence."""
    if not 0 <= p <= k - 1:
        raise ArgumentError(f"exterior power p={p} outside 0..{k - 1}")
    return reduce_twists(k, {q - h: (-1) ** (p - h) * binomial(k, h) for h in range(p + 1)})


def bundle_kclass(kind: BundleKind, p: int, twist: int, k: int) -> KClass:
    kind = BundleKind(kind)
    if kind == BundleKind.LINE:
        return line_bundle_kclass(twist, k)
    if kind == BundleKind.TANGENT:
        return lambda_tangent_kclass(p, twist, k)
    return lambda_cotangent_kclass(p, twist, k)


# ----------------------------------------------------------------------
# GHRR
# ----------------------------------------------------------------------
@lru_cache(maxsize=None)
def todd_coefficients(k: int) -> tuple[Fraction, ...]:
    """Coefficients of (x / (1 - e^{-x}))^k up to x^{k-1}."""
    x = sympy.Symbol("x")
    series = sympy.series((x / (1 - sympy.exp(-x))) ** k, x, 0, k).removeO()
    out = []
    for p in range(k):
        c = sympy.Rational(series.coeff(x, p))
        out.append(Fraction(int(c.p), int(c.q)))
    return tuple(out)


def ghrr_pairing(E: KClass, F: KClass, precision: int = QMONO_PRECISION):
    """chi(E, F) = int ch(E^*) ch(F) td(P^{k-1}), evaluated numerically."""
    if E.k != F.k:
        raise ArgumentError(f"pairing of K-classes of ranks {E.k} and {F.k}")
    k = E.k
    backend = NumericBackend(precision)
    ch_dual = CohClass.constant(k, backend.zero())
    for j, c in enumerate(E.coords):
        if c:
            ch_dual = ch_dual + CohClass.sigma_power(k, 1, backend.scalar(-j)).exp(backend.one()).scale(c)
    ch_f = graded_chern(F, backend, graded=False)
    td = CohClass(k, tuple(backend.scalar(c) for c in todd_coefficients(k)))
    return ch_dual.cup(ch_f).cup(td).integrate()


# ----------------------------------------------------------------------
# BOTT
# ----------------------------------------------------------------------
def bott_dim(n: int, p: int, twist: int, q: int, variant: str = "tangent") -> int:
    """dim H^q(P^n, Lambda^p T(twist)) or, for variant 'cotangent', of Lambda^p Omega(twist)."""
    if not 0 <= p <= n:
        raise ArgumentError(f"exterior power p={p} outside 0..{n}")
    k = twist
    if variant == "tangent":
        if q == 0 and k > -p - 1:
            return binomial(k + n + p + 1, p) * binomial(k + n, n - p)
        if q == n - p and k == -n - 1:
            return 1
        if q == n and k < -n - p - 1:
            return binomial(-k - p - 1, -k - n - 1) * binomial(-k - n - 2, p)
        return 0
    if variant == "cotangent":
        if q == 0 and k > p:
            return binomial(k + n - p, k) * binomial(k - 1, p)
        if k == 0 and q == p:
            return 1
        if q == n and k < p - n:
            return binomial(-k + p, -k) * binomial(-k - 1, n - p)
        return 0
    raise ArgumentError(f"unknown Bott variant {variant!r}")
