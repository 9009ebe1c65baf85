"""Two interchangeable coefficient backends.

Both hand out scalars that support ``+ - *`` with each other and with Python
integers and Fractions, so matrix code is written once and run on either.
"""
from fractions import Fraction

from mpmath import mp, mpc, mpf

from config import QMONO_PRECISION, QMONO_CONSTANTS, QMONO_SYMBOLIC_KMAX, MIN_PRECISION
from core.types import Backend
from core.errors import ArgumentError
from core.constants import ConstantProvider, get_constant_provider
from core.sym_scalar import SymScalar
from core.approx import ApproxComplex


class ScalarBackend:
    kind: Backend = None

    def __init__(self, precision: int = QMONO_PRECISION, provider: ConstantProvider = None):
        if precision < MIN_PRECISION:
            raise ArgumentError(f"precision must be at least {MIN_PRECISION} bits, got {precision}")
        self.precision = precision
        self.provider = provider or get_constant_provider(QMONO_CONSTANTS)

    def zero(self):
        return self.scalar(0)

    def one(self):
        return self.scalar(1)

    def scalar(self, x):
        raise NotImplementedError

    def gaussian(self, re_part, im_part=0):
        raise NotImplementedError

    def i(self):
        return self.gaussian(0, 1)

    def i_power(self, n: int):
        return [self.one(), self.i(), self.scalar(-1), -self.i()][n % 4]

    def gamma(self):
        raise NotImplementedError

    def zeta(self, n: int):
        raise NotImplementedError

    def pi(self, power: int = 1):
        raise NotImplementedError

    def rt(self):
        """(2 pi)^(-1/2)"""
        raise NotImplementedError

    def two_pi_power(self, half_exponent: int):
        """(2 pi)^(half_exponent / 2), half-integer powers through rt."""
        n, odd = divmod(half_exponent, 2)
        out = self.scalar(Fraction(2) ** n) * self.pi(n)
        if odd:
            # (2 pi)^(1/2) = 2 pi rt
            out = out * 2 * self.pi() * self.rt()
        return out

    def to_mpc(self, x) -> mpc:
        if isinstance(x, (int, Fraction)):
            with mp.workprec(self.precision):
                return mpc(mpf(Fraction(x).numerator) / Fraction(x).denominator)
        return x.evaluate(self.precision, self.provider).value if isinstance(x, SymScalar) else x.value

    def evaluate(self, x) -> ApproxComplex:
        return ApproxComplex(self.to_mpc(x), self.precision)

    def is_zero(self, x, tol=0) -> bool:
        if isinstance(x, int):
            return x == 0
        if isinstance(x, ApproxComplex):
            return abs(x) <= tol
        return x.is_zero()


class SymbolicBackend(ScalarBackend):
    kind = Backend.SYMBOLIC

    def scalar(self, x):
        return SymScalar.coerce(x)

    def gaussian(self, re_part, im_part=0):
        return SymScalar.gaussian(re_part, im_part)

    def gamma(self):
        return SymScalar.gamma()

    def zeta(self, n: int):
        return SymScalar.zeta(n)

    def pi(self, power: int = 1):
        return SymScalar.pi(power)

    def rt(self):
        return SymScalar.rt()


class NumericBackend(ScalarBackend):
    kind = Backend.NUMERIC

    def _wrap(self, value) -> ApproxComplex:
        with mp.workprec(self.precision):
            return ApproxComplex(mpc(value), self.precision)

    def scalar(self, x):
        if isinstance(x, ApproxComplex):
            return x
        if isinstance(x, SymScalar):
            return x.evaluate(self.precision, self.provider)
        with mp.workprec(self.precision):
            q = Fraction(x)
            return self._wrap(mpf(q.numerator) / q.denominator)

    def gaussian(self, re_part, im_part=0):
        with mp.workprec(self.precision):
            re_q, im_q = Fraction(re_part), Fraction(im_part)
            return self._wrap(mpc(mpf(re_q.numerator) / re_q.denominator, mpf(im_q.numerator) / im_q.denominator))

    def gamma(self):
        return self._wrap(self.provider.gamma(self.precision))

    def zeta(self, n: int):
        return self._wrap(self.provider.zeta(n, self.precision))

    def pi(self, power: int = 1):
        with mp.workprec(self.precision + 32):
            return self._wrap(self.provider.pi(self.precision) ** power)

    def rt(self):
        with mp.workprec(self.precision + 32):
            return self._wrap(1 / mp.sqrt(2 * self.provider.pi(self.precision)))


def get_backend(kind=Backend.SYMBOLIC, precision: int = QMONO_PRECISION, provider: ConstantProvider = None) -> ScalarBackend:
    kind = Backend(kind)
    if kind == Backend.SYMBOLIC:
        return SymbolicBackend(precision, provider)
    return NumericBackend(precision, provider)


def check_symbolic_size(backend: ScalarBackend, k: int):
    if backend.kind == Backend.SYMBOLIC and k > QMONO_SYMBOLIC_KMAX:
        raise ArgumentError(f"symbolic backend is limited to k <= {QMONO_SYMBOLIC_KMAX}, got k={k}")
