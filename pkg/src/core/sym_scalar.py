"""Exact scalars: rational combinations (with i) of monomials in gamma, zeta(odd), pi^{+-1}.

Elements live in a sparse sympy polynomial ring over QQ<I> whose generators are
``gamma, zeta3, ..., zeta21, pi, pinv, rt``. ``pinv`` stands for 1/pi and
``rt`` for (2 pi)^(-1/2). Every element is kept in normal form:

- ``pi`` and ``pinv`` never occur in the same monomial,
- ``rt`` occurs with exponent 0 or 1 (rt^2 = pinv / 2).

Even zeta values are rewritten as rational multiples of pi^n on construction.
"""
import re
from fractions import Fraction
from functools import lru_cache

import sympy
from sympy import Rational, Symbol, bernoulli, factorial
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.polyerrors import PolynomialError, CoercionFailed, GeneratorsNeeded
from sympy.polys.rings import ring
from mpmath import mp, mpc, mpf

from config import MAX_ZETA
from core.errors import ArgumentError
from core.constants import ConstantProvider, MpmathConstants

ZETA_ARGS = tuple(range(3, MAX_ZETA + 1, 2))
GEN_NAMES = ("gamma",) + tuple(f"zeta{n}" for n in ZETA_ARGS) + ("pi", "pinv", "rt")
GAMMA = 0
PI = GEN_NAMES.index("pi")
PINV = GEN_NAMES.index("pinv")
RT = GEN_NAMES.index("rt")

_RING, *_GENS = ring(",".join(GEN_NAMES), QQ_I)
_ONE_MONOM = (0,) * len(GEN_NAMES)

_COEFF_RE = re.compile(r"^\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)\*i\s*$")


def zeta_even_reduce(n: int) -> Fraction:
    """Returns q with zeta(n) = q * pi^n, n even and at least 2."""
    if not isinstance(n, int) or n < 2 or n % 2:
        raise ArgumentError(f"zeta_even_reduce needs an even integer >= 2, got {n}")
    q = (-1) ** (n // 2 + 1) * bernoulli(n) * Rational(2) ** (n - 1) / factorial(n)
    return Fraction(int(q.p), int(q.q))


def _qq(x) -> object:
    if isinstance(x, bool):
        raise ArgumentError("booleans are not scalars")
    if isinstance(x, int):
        return QQ(x)
    if isinstance(x, Fraction):
        return QQ(x.numerator, x.denominator)
    if isinstance(x, sympy.Rational):
        return QQ(int(x.p), int(x.q))
    raise ArgumentError(f"cannot read {x!r} as a rational number")


def _gaussian(re_part, im_part=0):
    return QQ_I(_qq(re_part), _qq(im_part))


def _normalize(poly):
    out = {}
    for monom, coeff in poly.items():
        m = list(monom)
        q, m[RT] = divmod(m[RT], 2)
        net = m[PI] - m[PINV] - q
        m[PI], m[PINV] = max(net, 0), max(-net, 0)
        if q:
            coeff = coeff * QQ_I(QQ(1, 2 ** q))
        key = tuple(m)
        out[key] = out.get(key, QQ_I.zero) + coeff
    return _RING.from_dict({m: c for m, c in out.items() if c})


def _fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


class SymScalar:
    __slots__ = ("poly",)

    def __init__(self, poly=None):
        self.poly = _RING.zero if poly is None else poly

    # ----------------------------------------------------------------------
    # CONSTRUCTORS
    # ----------------------------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "SymScalar":
        if isinstance(x, SymScalar):
            return x
        if isinstance(x, complex):
            if x.real != int(x.real) or x.imag != int(x.imag):
                raise ArgumentError(f"only Gaussian integers coerce from complex, got {x}")
            return cls(_RING.ground_new(_gaussian(int(x.real), int(x.imag))))
        return cls(_RING.ground_new(_gaussian(x)))

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.coerce(1)

    @classmethod
    def gaussian(cls, re_part, im_part=0):
        return cls(_RING.ground_new(_gaussian(re_part, im_part)))

    @classmethod
    def i(cls):
        return cls.gaussian(0, 1)

    @classmethod
    def gamma(cls):
        return cls(_GENS[GAMMA])

    @classmethod
    def zeta(cls, n: int):
        if n >= 2 and n % 2 == 0:
            return cls.coerce(zeta_even_reduce(n)) * cls.pi(n)
        if n not in ZETA_ARGS:
            raise ArgumentError(f"zeta({n}) is outside the symbolic ring")
        return cls(_GENS[GEN_NAMES.index(f"zeta{n}")])

    @classmethod
    def pi(cls, power: int = 1):
        if power >= 0:
            return cls(_GENS[PI] ** power)
        return cls(_GENS[PINV] ** (-power))

    @classmethod
    def rt(cls):
        """(2 pi)^(-1/2)"""
        return cls(_GENS[RT])

    @classmethod
    def from_expr(cls, expr) -> "SymScalar":
        """Reads a sympy expression (or string) in gamma, zeta3, ..., pi and I."""
        symbols = {name: Symbol(name) for name in GEN_NAMES if name not in ("pinv", "rt")}
        if isinstance(expr, str):
            expr = sympy.sympify(expr, locals=dict(symbols))
        pi_sym = symbols["pi"]
        shift = 4 * MAX_ZETA
        gens = [symbols[name] for name in GEN_NAMES if name in symbols]
        try:
            poly = sympy.Poly(sympy.expand(expr * pi_sym ** shift), *gens, domain=QQ_I)
        except (PolynomialError, CoercionFailed, GeneratorsNeeded) as e:
            raise ArgumentError(f"cannot read {expr} as a constant expression: {e}")
        pi_pos = gens.index(pi_sym)
        out = {}
        for exps, coeff in poly.terms():
            m = [0] * len(GEN_NAMES)
            for g, e in zip(gens, exps):
                m[GEN_NAMES.index(g.name)] = e
            net = exps[pi_pos] - shift
            m[PI], m[PINV] = max(net, 0), max(-net, 0)
            out[tuple(m)] = coeff
        return cls(_RING.from_dict(out))

    # ----------------------------------------------------------------------
    # ARITHMETIC
    # ----------------------------------------------------------------------
    def __add__(self, other):
        try:
            other = SymScalar.coerce(other)
        except ArgumentError:
            return NotImplemented
        return SymScalar(self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return SymScalar(-self.poly)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = SymScalar.coerce(other)
        except ArgumentError:
            return NotImplemented
        return SymScalar(self.poly - other.poly)

    def __rsub__(self, other):
        return SymScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            other = SymScalar.coerce(other)
        except ArgumentError:
            return NotImplemented
        return SymScalar(_normalize(self.poly * other.poly))

    __rmul__ = __mul__

    def inverse(self) -> "SymScalar":
        """Inverse of a single-term element; gamma and zeta are not invertible here."""
        if len(self.poly) != 1:
            raise ArgumentError(f"only monomials are invertible, got {self}")
        (monom, coeff), = self.poly.items()
        if any(monom[j] for j in range(PI)):
            raise ArgumentError(f"{self} is not invertible in the constant ring")
        inv = SymScalar(_RING.ground_new(QQ_I.quo(QQ_I.one, coeff)))
        inv = inv * SymScalar.pi(monom[PINV] - monom[PI])
        if monom[RT]:
            # 1/rt = 2 pi rt
            inv = inv * 2 * SymScalar.pi() * SymScalar.rt()
        return inv

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a SymScalar by zero")
            return self * (Fraction(1) / Fraction(other))
        return self * SymScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return SymScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return SymScalar(_normalize(self.poly ** n)) if n else SymScalar.one()

    def __eq__(self, other):
        try:
            other = SymScalar.coerce(other)
        except ArgumentError:
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(frozenset(self.poly.items()))

    def is_zero(self) -> bool:
        return not self.poly

    def is_rational(self) -> bool:
        if not self.poly:
            return True
        if len(self.poly) != 1:
            return False
        (monom, coeff), = self.poly.items()
        return monom == _ONE_MONOM and not coeff.y

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ArgumentError(f"{self} is not rational")
        if not self.poly:
            return Fraction(0)
        return _fraction(self.poly.get(_ONE_MONOM, QQ_I.zero).x)

    def terms(self):
        """Yields (Fraction re, Fraction im, monomial dict) per term, pi exponent signed."""
        for monom, coeff in sorted(self.poly.items(), reverse=True):
            mono = {}
            for j, e in enumerate(monom):
                if not e or j == PINV:
                    continue
                mono[GEN_NAMES[j]] = e
            if monom[PI] or monom[PINV]:
                mono["pi"] = monom[PI] - monom[PINV]
            yield _fraction(coeff.x), _fraction(coeff.y), mono

    # ----------------------------------------------------------------------
    # EVALUATION / CONVERSION
    # ----------------------------------------------------------------------
    def evaluate(self, precision: int, provider: ConstantProvider = None):
        from core.approx import ApproxComplex

        values = _generator_values(provider or MpmathConstants(), precision)
        with mp.workprec(precision + 32):
            total = mpc(0)
            for monom, coeff in self.poly.items():
                term = mpc(mpf(int(coeff.x.numerator)) / int(coeff.x.denominator),
                           mpf(int(coeff.y.numerator)) / int(coeff.y.denominator))
                for j, e in enumerate(monom):
                    if e:
                        term *= values[j] ** e
                total += term
        return ApproxComplex(total, precision)

    def to_expr(self):
        expr = sympy.Integer(0)
        pi_sym = Symbol("pi")
        for re_part, im_part, mono in self.terms():
            term = sympy.Rational(re_part.numerator, re_part.denominator) + sympy.I * sympy.Rational(
                im_part.numerator, im_part.denominator
            )
            for name, e in mono.items():
                if name == "rt":
                    term *= 1 / sympy.sqrt(2 * pi_sym)
                else:
                    term *= Symbol(name) ** e
            expr += term
        return expr

    def to_json(self) -> list[dict]:
        return [{"coeff": format_coeff(re_part, im_part), "monomial": mono} for re_part, im_part, mono in self.terms()]

    @classmethod
    def from_json(cls, terms: list[dict]) -> "SymScalar":
        total = cls.zero()
        for term in terms:
            re_part, im_part = parse_coeff(term["coeff"])
            x = cls.gaussian(re_part, im_part)
            for name, e in term.get("monomial", {}).items():
                if name == "pi":
                    x = x * cls.pi(e)
                elif name == "rt":
                    x = x * cls.rt() ** e
                elif name == "gamma":
                    x = x * cls.gamma() ** e
                elif name.startswith("zeta"):
                    x = x * cls.zeta(int(name[4:])) ** e
                else:
                    raise ArgumentError(f"unknown monomial symbol {name}")
            total = total + x
        return total

    def __repr__(self):
        return f"SymScalar({self.to_expr()})"

    def __str__(self):
        return str(self.to_expr())


def format_coeff(re_part: Fraction, im_part: Fraction) -> str:
    sign = "-" if im_part < 0 else "+"
    return f"{re_part}{sign}{abs(im_part)}*i"


def parse_coeff(text: str) -> tuple[Fraction, Fraction]:
    match = _COEFF_RE.match(text)
    if not match:
        raise ArgumentError(f"malformed coefficient {text!r}, expected 'a/b+c/d*i'")
    re_part = Fraction(match.group(1))
    im_part = Fraction(match.group(3))
    return re_part, (-im_part if match.group(2) == "-" else im_part)


@lru_cache(maxsize=32)
def _cached_values(provider, precision: int):
    prec = precision + 32
    with mp.workprec(prec):
        pi = provider.pi(prec)
        values = [provider.gamma(prec)]
        values += [provider.zeta(n, prec) for n in ZETA_ARGS]
        values += [pi, 1 / pi, 1 / mp.sqrt(2 * pi)]
    return tuple(values)


def _generator_values(provider: ConstantProvider, precision: int):
    return _cached_values(provider, precision)
