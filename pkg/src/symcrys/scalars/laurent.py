"""Laurent polynomials in q with rational coefficients, and quantum integers."""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """Finite map exponent -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[int(e)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentPoly":
        return cls({e: c})

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def bar(self) -> "LaurentPoly":
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x**e for e, c in self.terms.items()), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        body = " + ".join(f"{c}*q^{e}" for e, c in sorted(self.terms.items()))
        return f"LaurentPoly({body})"


def _lift(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


def quantum_integer(k: int, d: int = 1) -> LaurentPoly:
    """[k]_i = (q_i^k - q_i^-k)/(q_i - q_i^-1) with q_i = q^d."""
    if k < 0:
        raise ValueError("quantum integer needs k >= 0")
    if d < 1:
        raise ValueError("symmetrizer d must be positive")
    return LaurentPoly({d * (k - 1 - 2 * j): 1 for j in range(k)})


def quantum_factorial(k: int, d: int = 1) -> LaurentPoly:
    out = LaurentPoly({0: 1})
    for j in range(1, k + 1):
        out = out * quantum_integer(j, d)
    return out
