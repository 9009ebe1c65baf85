from dataclasses import dataclass
from fractions import Fraction
import math

import mpmath
from mpmath import mp, mpc, mpf

from core.errors import ArgumentError


@dataclass(frozen=True)
class ApproxComplex:
    """Complex number carried at ``prec`` bits; results keep the smaller precision of the operands."""

    value: mpc
    prec: int

    # ----------------------------------------------------------------------
    # COERCION
    # ----------------------------------------------------------------------
    def _other(self, other):
        if isinstance(other, ApproxComplex):
            return other.value, other.prec
        if isinstance(other, bool):
            raise ArgumentError("booleans are not scalars")
        if isinstance(other, int):
            with mp.workprec(self.prec):
                return mpc(other), self.prec
        if isinstance(other, Fraction):
            with mp.workprec(self.prec):
                return mpc(mpf(other.numerator) / other.denominator), self.prec
        if isinstance(other, (float, complex, mpf, mpc)):
            with mp.workprec(self.prec):
                return mpc(other), self.prec
        # SymScalar and anything else that knows how to evaluate itself
        evaluate = getattr(other, "evaluate", None)
        if evaluate is None:
            raise ArgumentError(f"cannot combine ApproxComplex with {type(other).__name__}")
        approx = evaluate(self.prec)
        return approx.value, approx.prec

    def _binary(self, other, op):
        try:
            value, prec = self._other(other)
        except ArgumentError:
            return NotImplemented
        prec = min(self.prec, prec)
        with mp.workprec(prec):
            return ApproxComplex(op(self.value, value), prec)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: b / a)

    def __neg__(self):
        with mp.workprec(self.prec):
            return ApproxComplex(-self.value, self.prec)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        with mp.workprec(self.prec):
            return ApproxComplex(self.value ** n, self.prec)

    def __abs__(self):
        with mp.workprec(self.prec):
            return abs(self.value)

    def __eq__(self, other):
        try:
            value, _ = self._other(other)
        except ArgumentError:
            return NotImplemented
        return self.value == value

    def __hash__(self):
        return hash((self.value.real, self.value.imag, self.prec))

    def is_zero(self) -> bool:
        return self.value == 0

    def close(self, other, tol) -> bool:
        value, _ = self._other(other)
        with mp.workprec(self.prec):
            return abs(self.value - value) <= tol

    def evaluate(self, precision: int = None):
        if precision is None or precision >= self.prec:
            return self
        return ApproxComplex(self.value, precision)

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    def nearest_gaussian_integer(self) -> tuple[int, int]:
        return int(mpmath.nint(self.value.real)), int(mpmath.nint(self.value.imag))

    # ----------------------------------------------------------------------
    # WIRE FORMAT
    # ----------------------------------------------------------------------
    def digits(self) -> int:
        return int(math.ceil(self.prec * math.log10(2))) + 1

    def to_json(self) -> dict:
        with mp.workprec(self.prec):
            return {
                "re": mpmath.nstr(self.value.real, self.digits(), strip_zeros=False),
                "im": mpmath.nstr(self.value.imag, self.digits(), strip_zeros=False),
                "precision": self.prec,
            }

    @classmethod
    def from_json(cls, data: dict) -> "ApproxComplex":
        prec = int(data["precision"])
        with mp.workprec(prec):
            return cls(mpc(mpf(data["re"]), mpf(data["im"])), prec)

    @classmethod
    def exact(cls, re_part, im_part=0, prec: int = 256) -> "ApproxComplex":
        with mp.workprec(prec):
            return cls(mpc(mpf(re_part), mpf(im_part)), prec)

    def __repr__(self):
        return f"ApproxComplex({mpmath.nstr(self.value, 20)}, prec={self.prec})"
