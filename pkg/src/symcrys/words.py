"""Finite linear combinations of words with RatFunc coefficients."""

from __future__ import annotations

from collections import Counter

from .scalars import ZERO, RatFunc


class WordCombination:
    """Immutable map word -> nonzero RatFunc, homogeneous in letter content.

    Subclasses decide what "homogeneous" means via :meth:`_grade`.
    """

    __slots__ = ("terms", "grade")

    def __init__(self, terms=None, grade=None):
        clean = {}
        for w, c in (terms or {}).items():
            c = RatFunc._coerce(c)
            if c:
                w = tuple(w)
                clean[w] = clean.get(w, ZERO) + c
                if not clean[w]:
                    del clean[w]
        grades = {self._grade(w) for w in clean}
        if len(grades) > 1:
            raise ValueError(f"{type(self).__name__} must be homogeneous; got grades {sorted(grades)}")
        if grades:
            grade = grades.pop()
        self.terms = clean
        self.grade = grade

    @staticmethod
    def _grade(word):
        return tuple(sorted(Counter(word).items()))

    @classmethod
    def word(cls, w, coeff=1):
        return cls({tuple(w): coeff})

    @classmethod
    def one(cls):
        return cls({(): 1})

    def _new(self, terms):
        return type(self)(terms, self.grade)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, WordCombination):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return self._new(out)

    def __neg__(self):
        return self._new({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = RatFunc._coerce(c)
        if not c:
            return self._new({})
        return self._new({w: c * x for w, x in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def bar(self):
        """Conjugate every coefficient by q -> q^-1, words fixed."""
        return self._new({w: c.bar() for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, WordCombination):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return f"{type(self).__name__}(0)"
        parts = [f"({c})*{list(w)}" for w, c in sorted(self.terms.items())]
        return f"{type(self).__name__}(" + " + ".join(parts) + ")"
