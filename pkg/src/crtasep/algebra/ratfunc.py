"""The field Q(q, t): reduced fractions of bivariate polynomials.

Canonical form: numerator and denominator are coprime, have integer
coefficients with joint content 1, and the denominator's leading
coefficient (graded lex, q > t) is positive.  Two rational functions are
equal as field elements iff their canonical forms coincide, so ``==`` is
exact field equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import PoleError
from .poly import MultiPoly, poly_divexact, poly_gcd

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RatFunc:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.has_x() or den.has_x():
            raise ValueError("rational functions live in q and t only")
        if num.is_zero():
            self.num, self.den = MultiPoly.zero(), MultiPoly.one()
        else:
            if not den.is_one():
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = poly_divexact(num, g)
                    den = poly_divexact(den, g)
            num, den = _normalise_pair(num, den)
            self.num, self.den = num, den
        self._hash = None

    @staticmethod
    def _reduced(num: MultiPoly, den: MultiPoly) -> "RatFunc":
        """Construct from an already coprime pair (normalisation only)."""
        out = RatFunc.__new__(RatFunc)
        if num.is_zero():
            out.num, out.den = MultiPoly.zero(), MultiPoly.one()
        else:
            out.num, out.den = _normalise_pair(num, den)
        out._hash = None
        return out

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero() -> "RatFunc":
        return _RF_ZERO

    @staticmethod
    def one() -> "RatFunc":
        return _RF_ONE

    @staticmethod
    def const(c) -> "RatFunc":
        c = Fraction(c)
        return RatFunc(MultiPoly.const(c.numerator), MultiPoly.const(c.denominator))

    @staticmethod
    def from_poly(p: MultiPoly) -> "RatFunc":
        return RatFunc(p)

    # -- structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_poly(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> MultiPoly:
        if not self.den.is_one():
            raise ValueError(f"{self!r} is not a polynomial")
        return self.num

    def as_fraction(self) -> Fraction:
        """The constant value, if constant."""
        if self.num.degree_q() or self.num.degree_t() or self.den.degree_q() or self.den.degree_t():
            raise ValueError(f"{self!r} is not constant")
        n = self.num.terms.get((0, 0, ()), _ZERO)
        return n / self.den.terms[(0, 0, ())]

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- field arithmetic ----------------------------------------------

    def __add__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        # Henrici: only factors of gcd(den, den') can survive in the sum
        g0 = poly_gcd(self.den, other.den)
        if g0.is_one():
            return RatFunc._reduced(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        d2 = poly_divexact(other.den, g0)
        num = self.num * d2 + other.num * poly_divexact(self.den, g0)
        den = self.den * d2
        g1 = poly_gcd(num, g0)
        if not g1.is_one():
            num = poly_divexact(num, g1)
            den = poly_divexact(den, g1)
        return RatFunc._reduced(num, den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        out.num, out.den, out._hash = -self.num, self.den, None
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return _RF_ZERO
        # cross-cancel; reduced inputs then give a reduced product
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not d2.is_one():
            g = poly_gcd(n1, d2)
            if not g.is_one():
                n1, d2 = poly_divexact(n1, g), poly_divexact(d2, g)
        if not d1.is_one():
            g = poly_gcd(n2, d1)
            if not g.is_one():
                n2, d1 = poly_divexact(n2, g), poly_divexact(d1, g)
        return RatFunc._reduced(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * RatFunc._reduced(other.den, other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self) -> "RatFunc":
        return _RF_ONE / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return _RF_ONE
        return RatFunc._reduced(self.num**n, self.den**n)

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, q0, t0) -> Fraction:
        d = self.den.evaluate(q0, t0)
        if d == 0:
            raise PoleError(f"denominator vanishes at q={q0}, t={t0}")
        return self.num.evaluate(q0, t0) / d

    def subs_q(self, q0) -> "RatFunc":
        den = self.den.subs_q(q0)
        if den.is_zero():
            raise PoleError(f"denominator vanishes identically at q={q0}")
        return RatFunc(self.num.subs_q(q0), den)

    def subs_t_recip(self) -> "RatFunc":
        """Substitute t -> 1/t."""
        dn, dd = self.num.degree_t(), self.den.degree_t()
        d = max(dn, dd)
        num = self.num.t_reversed() * MultiPoly.t(d - dn) if not self.num.is_zero() else self.num
        den = self.den.t_reversed() * MultiPoly.t(d - dd)
        return RatFunc(num, den)

    def __repr__(self) -> str:
        from .qtx import poly_string

        if self.den.is_one():
            return f"RatFunc({poly_string(self.num)})"
        return f"RatFunc(({poly_string(self.num)})/({poly_string(self.den)}))"


def _normalise_pair(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    mult = 1
    for c in list(num.terms.values()) + list(den.terms.values()):
        mult = mult * c.denominator // _gcd_int(mult, c.denominator)
    content = 0
    for c in num.terms.values():
        content = _gcd_int(content, abs(c.numerator * (mult // c.denominator)))
    for c in den.terms.values():
        content = _gcd_int(content, abs(c.numerator * (mult // c.denominator)))
    scale = Fraction(mult, content)
    if den.leading_coeff() < 0:
        scale = -scale
    return num.scale(scale), den.scale(scale)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _coerce(value) -> "RatFunc":
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, MultiPoly):
        return RatFunc(value)
    if isinstance(value, (int, Fraction)):
        return RatFunc.const(value)
    return NotImplemented


_RF_ZERO = RatFunc(MultiPoly.zero())
_RF_ONE = RatFunc(MultiPoly.one())


# ----------------------------------------------------------------------
# q,t-brackets and factorials
# ----------------------------------------------------------------------


def ratfunc_sum(values) -> RatFunc:
    """Sum many rational functions, grouping numerators over equal
    denominators so each distinct denominator is reduced once."""
    by_den: dict[MultiPoly, MultiPoly] = {}
    for v in values:
        if v.num.is_zero():
            continue
        acc = by_den.get(v.den)
        by_den[v.den] = v.num if acc is None else acc + v.num
    total = _RF_ZERO
    for den, num in by_den.items():
        total = total + RatFunc(num, den)
    return total


@lru_cache(maxsize=None)
def t_bracket(i: int) -> MultiPoly:
    """[i]_t = 1 + t + ... + t^(i-1); the empty sum 0 for i = 0."""
    if i < 0:
        raise ValueError("bracket index must be nonnegative")
    return MultiPoly({(0, e, ()): _ONE for e in range(i)})


@lru_cache(maxsize=None)
def t_factorial(i: int) -> MultiPoly:
    """[i]_t! = [1][2]...[i]; empty product 1."""
    if i == 0:
        return MultiPoly.one()
    return t_factorial(i - 1) * t_bracket(i)


@lru_cache(maxsize=None)
def qt_bracket(i: int) -> RatFunc:
    """[i]_qt = (1 - q t^i)/(1 - t) for i >= 1; the convention [0] = 1."""
    if i < 0:
        raise ValueError("bracket index must be nonnegative")
    if i == 0:
        return _RF_ONE
    num = MultiPoly.one() - MultiPoly.q() * MultiPoly.t(i)
    den = MultiPoly.one() - MultiPoly.t()
    return RatFunc(num, den)


@lru_cache(maxsize=None)
def qt_factorial(i: int) -> RatFunc:
    """[i]_qt! = [i][i-1]...[1]; empty product 1."""
    if i == 0:
        return _RF_ONE
    return qt_factorial(i - 1) * qt_bracket(i)


@lru_cache(maxsize=None)
def qt_factorial_ratio(a: int, b: int) -> RatFunc:
    """[a]_qt! / [b]_qt! for a <= b, i.e. 1 / ([a+1][a+2]...[b])."""
    if a > b:
        raise ValueError("ratio expects a <= b")
    out = _RF_ONE
    for j in range(a + 1, b + 1):
        out = out / qt_bracket(j)
    return out


@lru_cache(maxsize=None)
def t_factorial_ratio(a: int, b: int) -> RatFunc:
    """[a]_t! / [b]_t! for a <= b."""
    if a > b:
        raise ValueError("ratio expects a <= b")
    out = _RF_ONE
    for j in range(a + 1, b + 1):
        out = out / RatFunc(t_bracket(j))
    return out
