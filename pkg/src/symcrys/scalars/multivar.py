"""Rational functions in the two Hecke parameters p0, p1.

Every computation in the Hecke layer produces Laurent polynomials in
(p0, p1); a general denominator is supported but left unreduced (no
multivariate gcd).  Equality is decided by cross-multiplication, so values
with a non-monomial denominator still compare correctly.
"""

from __future__ import annotations

from fractions import Fraction

_UNIT = {(0, 0): Fraction(1)}


def _clean(terms) -> dict:
    out = {}
    for e, c in terms.items():
        c = Fraction(c)
        if c:
            out[(int(e[0]), int(e[1]))] = c
    return out


def _padd(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (x0, x1), c in a.items():
        for (y0, y1), d in b.items():
            e = (x0 + y0, x1 + y1)
            out[e] = out.get(e, 0) + c * d
    return {e: c for e, c in out.items() if c}


class MultiRatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None):
        num = _clean(num or {})
        den = _clean(den) if den is not None else dict(_UNIT)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if len(den) == 1:
            ((e, c),) = den.items()
            num = {(k[0] - e[0], k[1] - e[1]): v / c for k, v in num.items()}
            den = dict(_UNIT)
        elif not num:
            den = dict(_UNIT)
        else:
            lead = den[max(den)]
            if lead != 1:
                num = {k: v / lead for k, v in num.items()}
                den = {k: v / lead for k, v in den.items()}
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c) -> "MultiRatFunc":
        return cls({(0, 0): c})

    @classmethod
    def var(cls, which: int, power: int = 1) -> "MultiRatFunc":
        e = (power, 0) if which == 0 else (0, power)
        return cls({e: 1})

    def is_polynomial(self) -> bool:
        return self.den == _UNIT

    def __bool__(self):
        return bool(self.num)

    @staticmethod
    def _coerce(x):
        if isinstance(x, MultiRatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return MultiRatFunc.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return MultiRatFunc(_padd(self.num, other.num), self.den)
        return MultiRatFunc(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)), _pmul(self.den, other.den)
        )

    __radd__ = __add__

    def __neg__(self):
        return MultiRatFunc({e: -c for e, c in self.num.items()}, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == _UNIT and other.den == _UNIT:
            return MultiRatFunc(_pmul(self.num, other.num))
        return MultiRatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "MultiRatFunc":
        if not self.num:
            raise ZeroDivisionError("MultiRatFunc division by zero")
        return MultiRatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return self.num == other.num
        return _pmul(self.num, other.den) == _pmul(other.num, self.den)

    def __hash__(self):
        if self.den == _UNIT:
            return hash(frozenset(self.num.items()))
        return 0

    def specialize(self, p0, p1) -> Fraction:
        p0, p1 = Fraction(p0), Fraction(p1)

        def ev(t):
            return sum((c * p0 ** e[0] * p1 ** e[1] for e, c in t.items()), Fraction(0))

        d = ev(self.den)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the specialization")
        return ev(self.num) / d

    def __repr__(self):
        def fmt(t):
            if not t:
                return "0"
            return " + ".join(f"{c}*p0^{e[0]}*p1^{e[1]}" for e, c in sorted(t.items()))

        if self.den == _UNIT:
            return f"MultiRatFunc({fmt(self.num)})"
        return f"MultiRatFunc(({fmt(self.num)})/({fmt(self.den)}))"
