"""Exact arithmetic in Q(q).

A nonzero value is stored as ``c * q**s * N(q) / D(q)`` where ``N`` and ``D``
are coprime primitive integer polynomials with positive constant terms and
``c`` is a nonzero Fraction.  This form is unique, so equality and hashing are
structural.  The "public" numerator/denominator pair exposes the same value
with the denominator scaled to constant term 1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from . import polyz
from .laurent import LaurentPoly


class PoleError(ArithmeticError):
    """Evaluation at a point where the function has a pole."""


class RatFunc:
    __slots__ = ("_c", "_s", "_n", "_d", "_hash")

    def __init__(self, value=0):
        if isinstance(value, RatFunc):
            self._set(value._c, value._s, value._n, value._d)
        elif isinstance(value, (int, Fraction)) or isinstance(value, Rational):
            v = Fraction(value)
            if v == 0:
                self._set(Fraction(0), 0, polyz.ONE, polyz.ONE)
            else:
                self._set(v, 0, polyz.ONE, polyz.ONE)
        elif isinstance(value, LaurentPoly):
            r = RatFunc.from_laurent(value)
            self._set(r._c, r._s, r._n, r._d)
        else:
            raise TypeError(f"cannot build RatFunc from {type(value).__name__}")

    def _set(self, c, s, n, d):
        self._c = c
        self._s = s
        self._n = n
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, c, s, n, d) -> "RatFunc":
        obj = cls.__new__(cls)
        obj._set(c, s, n, d)
        return obj

    @classmethod
    def _make(cls, c: Fraction, s: int, n, d, reduce: bool = True) -> "RatFunc":
        n = polyz.trim(n)
        if c == 0 or not n:
            return ZERO
        d = polyz.trim(d)
        k = polyz.low_order(n)
        if k:
            n = n[k:]
            s += k
        k = polyz.low_order(d)
        if k:
            d = d[k:]
            s -= k
        u, n = polyz.primitive(n)
        if u != 1:
            c = c * u
        u, d = polyz.primitive(d)
        if u != 1:
            c = c / u
        if reduce and len(d) > 1 and len(n) > 1:
            g = polyz.pgcd(n, d)
            if g != polyz.ONE:
                n = polyz.divexact(n, g)
                d = polyz.divexact(d, g)
        return cls._raw(Fraction(c), s, n, d)

    # -- constructors -----------------------------------------------------
    @classmethod
    def q_power(cls, k: int, coeff=1) -> "RatFunc":
        coeff = Fraction(coeff)
        if coeff == 0:
            return ZERO
        return cls._raw(coeff, k, polyz.ONE, polyz.ONE)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RatFunc":
        if not p.terms:
            return ZERO
        lo = min(p.terms)
        hi = max(p.terms)
        den = 1
        for v in p.terms.values():
            den = den * v.denominator // _gcd(den, v.denominator)
        coeffs = [0] * (hi - lo + 1)
        for e, v in p.terms.items():
            coeffs[e - lo] = int(v * den)
        return cls._make(Fraction(1, den), lo, tuple(coeffs), polyz.ONE, reduce=False)

    @classmethod
    def from_coefficients(cls, num: dict, den: dict | None = None) -> "RatFunc":
        """Build from exponent -> coefficient maps for numerator and denominator."""
        n = cls.from_laurent(LaurentPoly(num))
        if den is None:
            return n
        return n / cls.from_laurent(LaurentPoly(den))

    # -- basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return self._c == 0

    def __bool__(self) -> bool:
        return self._c != 0

    def is_laurent(self) -> bool:
        return self._d == polyz.ONE

    def is_rational(self) -> bool:
        return self._n == polyz.ONE and self._d == polyz.ONE and (self._s == 0 or self._c == 0)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not a constant")
        return self._c

    @property
    def numerator(self) -> LaurentPoly:
        """Numerator with the denominator normalized to constant term 1."""
        c = self._c / self._d[0]
        return LaurentPoly({self._s + k: c * x for k, x in enumerate(self._n) if x})

    @property
    def denominator(self) -> LaurentPoly:
        d0 = self._d[0]
        return LaurentPoly({k: Fraction(x, d0) for k, x in enumerate(self._d) if x})

    def size(self) -> int:
        """Total numerator + denominator degree; pivot-choice heuristic."""
        return len(self._n) + len(self._d) - 2

    def order_at_zero(self) -> int:
        if self._c == 0:
            raise ValueError("order of zero is +infinity")
        return self._s

    def in_A0(self) -> bool:
        return self._c == 0 or self._s >= 0

    def eval_at_zero(self) -> Fraction:
        if self._c == 0 or self._s > 0:
            return Fraction(0)
        if self._s < 0:
            raise PoleError(f"{self} has a pole of order {-self._s} at q=0")
        return self._c * self._n[0] / self._d[0]

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        if self._c == 0:
            return Fraction(0)
        dv = polyz.evaluate(self._d, x)
        if dv == 0:
            raise PoleError(f"{self} has a pole at q={x}")
        if x == 0:
            return self.eval_at_zero()
        return self._c * x ** self._s * polyz.evaluate(self._n, x) / dv

    def series(self, upto: int) -> dict[int, Fraction]:
        """Laurent expansion at q=0 through the q**upto term."""
        if self._c == 0:
            return {}
        n, d = self._n, self._d
        length = upto - self._s + 1
        if length <= 0:
            return {}
        d0 = Fraction(d[0])
        out = []
        for k in range(length):
            acc = Fraction(n[k]) if k < len(n) else Fraction(0)
            for j in range(1, min(k, len(d) - 1) + 1):
                acc -= d[j] * out[k - j]
            out.append(acc / d0)
        return {self._s + k: self._c * v for k, v in enumerate(out) if v}

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc(x)
        if isinstance(x, LaurentPoly):
            return RatFunc.from_laurent(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._c == 0:
            return other
        if other._c == 0:
            return self
        c1, c2 = self._c, other._c
        a1, b1 = c1.numerator, c1.denominator
        a2, b2 = c2.numerator, c2.denominator
        s = min(self._s, other._s)
        n1 = polyz.shift(self._n, self._s - s)
        n2 = polyz.shift(other._n, other._s - s)
        d1, d2 = self._d, other._d
        if d1 == d2:
            p = polyz.add(polyz.scale(n1, a1 * b2), polyz.scale(n2, a2 * b1))
            if not p:
                return ZERO
            # gcd(p, d) can be nontrivial only when d1 == d2 != 1
            return RatFunc._make(Fraction(1, b1 * b2), s, p, d1, reduce=d1 != polyz.ONE)
        g = polyz.pgcd(d1, d2)
        if g == polyz.ONE:
            p = polyz.add(polyz.scale(polyz.mul(n1, d2), a1 * b2), polyz.scale(polyz.mul(n2, d1), a2 * b1))
            return RatFunc._make(Fraction(1, b1 * b2), s, p, polyz.mul(d1, d2), reduce=False)
        d1g = polyz.divexact(d1, g)
        d2g = polyz.divexact(d2, g)
        p = polyz.add(polyz.scale(polyz.mul(n1, d2g), a1 * b2), polyz.scale(polyz.mul(n2, d1g), a2 * b1))
        if not p:
            return ZERO
        k = polyz.low_order(p)
        p = p[k:]
        s += k
        h = polyz.pgcd(p, g)
        den = polyz.mul(d1, d2g)
        if h != polyz.ONE:
            p = polyz.divexact(p, h)
            den = polyz.divexact(den, h)
        return RatFunc._make(Fraction(1, b1 * b2), s, p, den, reduce=False)

    __radd__ = __add__

    def __neg__(self):
        if self._c == 0:
            return self
        return RatFunc._raw(-self._c, self._s, self._n, self._d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0 or self._c == 0:
                return ZERO
            return RatFunc._raw(self._c * other, self._s, self._n, self._d)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._c == 0 or other._c == 0:
            return ZERO
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        if d2 != polyz.ONE and len(n1) > 1:
            g = polyz.pgcd(n1, d2)
            if g != polyz.ONE:
                n1 = polyz.divexact(n1, g)
                d2 = polyz.divexact(d2, g)
        if d1 != polyz.ONE and len(n2) > 1:
            g = polyz.pgcd(n2, d1)
            if g != polyz.ONE:
                n2 = polyz.divexact(n2, g)
                d1 = polyz.divexact(d1, g)
        return RatFunc._raw(self._c * other._c, self._s + other._s, polyz.mul(n1, n2), polyz.mul(d1, d2))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self._c == 0:
            raise ZeroDivisionError("RatFunc division by zero")
        return RatFunc._raw(1 / self._c, -self._s, self._d, self._n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def bar(self) -> "RatFunc":
        """Substitute q -> q^{-1}."""
        if self._c == 0:
            return self
        n, d = polyz.reverse(self._n), polyz.reverse(self._d)
        s = -self._s - (len(self._n) - 1) + (len(self._d) - 1)
        c = self._c
        if n[0] < 0:
            n = polyz.scale(n, -1)
            c = -c
        if d[0] < 0:
            d = polyz.scale(d, -1)
            c = -c
        return RatFunc._raw(c, s, n, d)

    # -- comparison -------------------------------------------------------
    def _key(self):
        return (self._c, self._s, self._n, self._d)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self._key() == other._key()
        if isinstance(other, (int, Fraction)):
            return self._key() == RatFunc(other)._key()
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    # -- text -------------------------------------------------------------
    def __str__(self):
        return to_string(self)

    def __repr__(self):
        return f"RatFunc({to_string(self)!r})"


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


ZERO = RatFunc._raw(Fraction(0), 0, polyz.ONE, polyz.ONE)
ONE = RatFunc._raw(Fraction(1), 0, polyz.ONE, polyz.ONE)
Q = RatFunc.q_power(1)


def q_pow(k: int) -> RatFunc:
    if k == 0:
        return ONE
    return RatFunc._raw(Fraction(1), k, polyz.ONE, polyz.ONE)


def _terms_string(p: LaurentPoly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for e in sorted(p.terms):
        c = p.terms[e]
        parts.append(f"{c}*q^{e}")
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def to_string(x: RatFunc) -> str:
    """Canonical text ``(num)/(den)`` with explicit exponents."""
    return f"({_terms_string(x.numerator)})/({_terms_string(x.denominator)})"


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)\*q\^(-?\d+)")


def _parse_terms(text: str) -> dict:
    text = text.strip()
    if text == "0":
        return {}
    out = {}
    pos = 0
    for m in _TERM.finditer(text):
        if text[pos : m.start()].strip():
            raise ValueError(f"bad term list {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        out[int(m.group(3))] = sign * Fraction(m.group(2))
        pos = m.end()
    if text[pos:].strip() or not out:
        raise ValueError(f"bad term list {text!r}")
    return out


def parse(text: str) -> RatFunc:
    """Inverse of :func:`to_string`."""
    m = re.fullmatch(r"\s*\((.*)\)\s*/\s*\((.*)\)\s*", text)
    if not m:
        raise ValueError(f"not a RatFunc string: {text!r}")
    return RatFunc.from_coefficients(_parse_terms(m.group(1)), _parse_terms(m.group(2)))
