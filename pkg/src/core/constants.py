"""High precision values of the constants gamma, pi and zeta(n).

Providers return ``mpmath.mpf`` values correct to the requested number of bits.
``MpmathConstants`` delegates to mpmath, ``SeriesConstants`` evaluates
rapidly converging series independently of it (Brent-McMillan for gamma,
Gauss-Legendre for pi, Borwein's alternating series for zeta), and
``TableConstants`` serves fixed values so that tests can pin them.
"""
import math
from functools import lru_cache
import mpmath
from mpmath import mp, mpf

from core.errors import ArgumentError

GUARD_BITS = 32


class ConstantProvider:
    name = "abstract"

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash((type(self).__name__, self.name))

    def gamma(self, prec: int) -> mpf:
        raise NotImplementedError

    def pi(self, prec: int) -> mpf:
        raise NotImplementedError

    def zeta(self, n: int, prec: int) -> mpf:
        raise NotImplementedError


class MpmathConstants(ConstantProvider):
    name = "mpmath"

    def gamma(self, prec: int) -> mpf:
        with mp.workprec(prec + GUARD_BITS):
            return +mp.euler

    def pi(self, prec: int) -> mpf:
        with mp.workprec(prec + GUARD_BITS):
            return +mp.pi

    def zeta(self, n: int, prec: int) -> mpf:
        with mp.workprec(prec + GUARD_BITS):
            return mpmath.zeta(n)


class SeriesConstants(ConstantProvider):
    name = "series"

    def gamma(self, prec: int) -> mpf:
        return _brent_mcmillan(prec)

    def pi(self, prec: int) -> mpf:
        return _gauss_legendre(prec)

    def zeta(self, n: int, prec: int) -> mpf:
        if n < 2:
            raise ArgumentError(f"zeta({n}) is not a convergent value")
        return _borwein_zeta(n, prec)


class TableConstants(ConstantProvider):
    """Constants read from a table of decimal strings: {"gamma": ..., "pi": ..., "zeta3": ...}."""

    name = "table"

    def __init__(self, table: dict[str, str]):
        self.table = dict(table)

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)

    def _get(self, key: str, prec: int) -> mpf:
        if key not in self.table:
            raise ArgumentError(f"constant {key} missing from table")
        with mp.workprec(prec + GUARD_BITS):
            return mpf(self.table[key])

    def gamma(self, prec: int) -> mpf:
        return self._get("gamma", prec)

    def pi(self, prec: int) -> mpf:
        return self._get("pi", prec)

    def zeta(self, n: int, prec: int) -> mpf:
        return self._get(f"zeta{n}", prec)


# ----------------------------------------------------------------------
# SERIES
# ----------------------------------------------------------------------
@lru_cache(maxsize=16)
def _brent_mcmillan(prec: int) -> mpf:
    # error of the B1 scheme is O(exp(-4n))
    n = int(math.ceil((prec + GUARD_BITS) * math.log(2) / 4)) + 1
    big_n = int(math.ceil(3.5911 * n)) + 1
    with mp.workprec(prec + 2 * GUARD_BITS):
        n2 = mpf(n) ** 2
        a = -mpmath.log(n)
        b = mpf(1)
        u, v = a, b
        for k in range(1, big_n + 1):
            b = b * n2 / (k * k)
            a = (a * n2 / k + b) / k
            u += a
            v += b
        return u / v


@lru_cache(maxsize=16)
def _gauss_legendre(prec: int) -> mpf:
    with mp.workprec(prec + 2 * GUARD_BITS):
        a = mpf(1)
        b = 1 / mpmath.sqrt(2)
        t = mpf(1) / 4
        p = mpf(1)
        for _ in range(int(math.log2(prec + GUARD_BITS)) + 3):
            a_next = (a + b) / 2
            b = mpmath.sqrt(a * b)
            t -= p * (a - a_next) ** 2
            p *= 2
            a = a_next
        return (a + b) ** 2 / (4 * t)


@lru_cache(maxsize=64)
def _borwein_zeta(s: int, prec: int) -> mpf:
    # Borwein's algorithm 2: error below 3 / (3 + sqrt 8)^n
    n = int(0.39 * (prec + GUARD_BITS)) + 5
    with mp.workprec(prec + 2 * GUARD_BITS):
        d = []
        acc = mpf(0)
        for i in range(n + 1):
            acc += mpmath.factorial(n + i - 1) * mpf(4) ** i / (mpmath.factorial(n - i) * mpmath.factorial(2 * i))
            d.append(n * acc)
        total = mpf(0)
        for k in range(n):
            total += (-1) ** k * (d[k] - d[n]) / mpf(k + 1) ** s
        return -total / (d[n] * (1 - mpf(2) ** (1 - s)))


def get_constant_provider(name: str = "mpmath") -> ConstantProvider:
    if name == MpmathConstants.name:
        return MpmathConstants()
    if name == SeriesConstants.name:
        return SeriesConstants()
    raise ArgumentError(f"unknown constant provider: {name}")
