"""The negative half U_q^-(g): free words in the f_i modulo the radical of the Kashiwara form.

Word convention: the word ``(i1, ..., ik)`` is the monomial f_{i1} ... f_{ik}.
Weights are recorded as nonnegative letter counts; the actual weight of a
word is minus the sum of the alpha's of its letters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .crystal.carrier import DecompositionError, QuotientCarrier
from .rootdata import RootDatum, Weight
from .scalars import ONE, ZERO, RatFunc, q_pow
from .scalars.laurent import quantum_factorial
from .scalars.linalg import column_basis, kernel_basis, solve_linear
from .words import WordCombination


class FreeElement(WordCombination):
    """Homogeneous combination of f-monomials."""

    __slots__ = ()

    def weight(self) -> Weight:
        if self.grade is None:
            return Weight()
        return Weight.from_map({a: -n for a, n in self.grade})

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, ZERO) + c1 * c2
            return FreeElement(out)
        return self.scale(other)


def _qfact(rd: RootDatum, i, n) -> RatFunc:
    return RatFunc.from_laurent(quantum_factorial(n, rd.d(i)))


def _weight_pair(rd: RootDatum, i, grade) -> int:
    """(alpha_i, wt) for an element whose letter counts are ``grade``."""
    if grade is None:
        return 0
    return -sum(n * rd.pair(i, a) for a, n in grade)


def ad_t(rd: RootDatum, i, a: FreeElement) -> FreeElement:
    """Ad(t_i) on a homogeneous element: the scalar q^{(alpha_i, wt a)}."""
    return a.scale(q_pow(_weight_pair(rd, i, a.grade)))


def mul_f(i, a: FreeElement) -> FreeElement:
    return FreeElement({(i,) + w: c for w, c in a.terms.items()})


def mul_f_right(a: FreeElement, i) -> FreeElement:
    return FreeElement({w + (i,): c for w, c in a.terms.items()})


def mul_f_divided(rd: RootDatum, i, n: int, a: FreeElement) -> FreeElement:
    """f_i^{(n)} a."""
    if n < 0:
        raise ValueError("divided power needs n >= 0")
    inv = _qfact(rd, i, n).inverse()
    return FreeElement({(i,) * n + w: c * inv for w, c in a.terms.items()})


@lru_cache(maxsize=None)
def _e_prime_word(rd: RootDatum, i, word: tuple) -> tuple:
    out = []
    shift = 0
    for k, a in enumerate(word):
        if a == i:
            out.append((word[:k] + word[k + 1 :], -shift))
        shift += rd.pair(i, a)
    return tuple(out)


@lru_cache(maxsize=None)
def _e_star_word(rd: RootDatum, i, word: tuple) -> tuple:
    out = []
    shift = 0
    for k in range(len(word) - 1, -1, -1):
        a = word[k]
        if a == i:
            out.append((word[:k] + word[k + 1 :], -shift))
        shift += rd.pair(i, a)
    return tuple(out)


def _apply_wordwise(table, rd, i, a: FreeElement) -> FreeElement:
    out: dict = {}
    for w, c in a.terms.items():
        for w2, e in table(rd, i, w):
            out[w2] = out.get(w2, ZERO) + c * q_pow(e)
    return FreeElement(out)


def e_prime(rd: RootDatum, i, a: FreeElement) -> FreeElement:
    """e'_i, via e'_i(f_j w) = delta_ij w + q^{-(a_i,a_j)} f_j e'_i(w)."""
    return _apply_wordwise(_e_prime_word, rd, i, a)


def e_star(rd: RootDatum, i, a: FreeElement) -> FreeElement:
    """e*_i, via e*_i(w f_j) = delta_ij w + q^{-(a_i,a_j)} e*_i(w) f_j."""
    return _apply_wordwise(_e_star_word, rd, i, a)


@lru_cache(maxsize=None)
def _form_words(rd: RootDatum, w1: tuple, w2: tuple) -> RatFunc:
    if len(w1) != len(w2) or sorted(w1, key=rd.position) != sorted(w2, key=rd.position):
        return ZERO
    if not w1:
        return ONE
    acc = ZERO
    for rest, e in _e_prime_word(rd, w1[0], w2):
        v = _form_words(rd, w1[1:], rest)
        if v:
            acc = acc + q_pow(e) * v
    return acc


def kashiwara_form(rd: RootDatum, a: FreeElement, b: FreeElement) -> RatFunc:
    """(f_i a', b) = (a', e'_i b), (1, 1) = 1; zero across different weights."""
    if a.grade != b.grade:
        return ZERO
    acc = ZERO
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            v = _form_words(rd, w1, w2)
            if v:
                acc = acc + c1 * c2 * v
    return acc


def words_of_weight(rd: RootDatum, counts: dict) -> list:
    """All words with the given letter counts, lexicographic in index order."""
    letters = []
    for a in rd.indices:
        letters.extend([a] * counts.get(a, 0))
    words = set(permutations(letters))
    return sorted(words, key=lambda w: tuple(rd.position(a) for a in w))


def _counts_of(w: Weight) -> dict:
    out = {}
    for k, v in w.coords:
        if v > 0:
            raise ValueError("weight spaces of U_q^- need nonpositive weights")
        out[k] = -v
    return out


@dataclass
class WeightBasis:
    """Pivot words spanning U_q^- in one weight, found by brute-force Gram rank."""

    rd: RootDatum
    weight: Weight
    words: list  # every word of this weight
    gram_full: list
    pivot_words: list
    gram: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.pivot_words)

    def coordinates(self, a: FreeElement) -> list:
        """Pivot coordinates c with a = sum c_p p in U_q^-."""
        if a.is_zero():
            return [ZERO] * self.dim
        if a.weight() != self.weight:
            raise ValueError("element has a different weight")
        if not self.dim:
            return []
        b = [kashiwara_form(self.rd, FreeElement.word(p), a) for p in self.pivot_words]
        return solve_linear(self.gram, b).solution

    def element(self, coords) -> FreeElement:
        return FreeElement({p: c for p, c in zip(self.pivot_words, coords) if c})

    def reduce(self, a: FreeElement) -> FreeElement:
        return self.element(self.coordinates(a))

    def is_zero(self, a: FreeElement) -> bool:
        return all(not kashiwara_form(self.rd, FreeElement.word(p), a) for p in self.pivot_words)


@lru_cache(maxsize=None)
def weight_basis(w: Weight, rd: RootDatum) -> WeightBasis:
    """Enumerate the words of weight w, build their Gram matrix, pick pivots.

    Kernel vectors of the Gram matrix are the zero elements of U_q^-.
    """
    words = words_of_weight(rd, _counts_of(w))
    n = len(words)
    gram = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            v = _form_words(rd, words[a], words[b])
            gram[a][b] = gram[b][a] = v
    piv = column_basis(gram) if n else []
    pw = [words[c] for c in piv]
    gpp = [[gram[a][b] for b in piv] for a in piv]
    return WeightBasis(rd, w, words, gram, pw, gpp)


def gram_kernel(wb: WeightBasis) -> list:
    """Kernel of the full Gram matrix, as FreeElements."""
    if not wb.words:
        return []
    return [FreeElement(dict(zip(wb.words, v))) for v in kernel_basis(wb.gram_full)]


# -- modified root operators -------------------------------------------------


def _shift_weight(w: Weight, i, n: int) -> Weight:
    return w + Weight.simple(i, n)


def string_components(rd: RootDatum, i, a: FreeElement) -> list:
    """Components a_n with e'_i a_n = 0 and a = sum_n f_i^{(n)} a_n (reduced forms)."""
    w = a.weight()
    wb = weight_basis(w, rd)
    target = wb.coordinates(a)
    columns, labels = [], []
    n = 0
    while True:
        wn = _shift_weight(w, i, n)
        if any(v > 0 for _, v in wn.coords):
            break
        wbn = weight_basis(wn, rd)
        if wbn.dim:
            up = weight_basis(_shift_weight(wn, i, 1), rd) if -wn.as_dict().get(i, 0) > 0 else None
            if up is None:
                kern = [[ONE if r == c else ZERO for r in range(wbn.dim)] for c in range(wbn.dim)]
            else:
                emat = [up.coordinates(e_prime(rd, i, FreeElement.word(p))) for p in wbn.pivot_words]
                if up.dim:
                    rows = [[emat[c][r] for c in range(wbn.dim)] for r in range(up.dim)]
                    kern = kernel_basis(rows)
                else:
                    kern = [[ONE if r == c else ZERO for r in range(wbn.dim)] for c in range(wbn.dim)]
            for k in kern:
                elt = wbn.element(k)
                columns.append(wb.coordinates(mul_f_divided(rd, i, n, elt)))
                labels.append((n, elt))
        n += 1
    if not columns:
        if any(target):
            raise DecompositionError("no string candidates for a nonzero element")
        return []
    rows = [[col[r] for col in columns] for r in range(wb.dim)]
    res = solve_linear(rows, target, kernel=True)
    if not res.unique:
        raise DecompositionError(f"string decomposition for i={i} is not unique")
    comps: dict = {}
    for x, (n, elt) in zip(res.solution, labels):
        if x:
            comps[n] = comps.get(n, FreeElement()) + elt.scale(x)
    top = max(comps, default=-1)
    return [comps.get(n, FreeElement()) for n in range(top + 1)]


def ftilde(rd: RootDatum, i, a: FreeElement) -> FreeElement:
    """sum_n f_i^{(n+1)} a_n."""
    out = FreeElement()
    for n, an in enumerate(string_components(rd, i, a)):
        if an:
            out = out + mul_f_divided(rd, i, n + 1, an)
    if out.is_zero():
        return out
    return weight_basis(out.weight(), rd).reduce(out)


def etilde(rd: RootDatum, i, a: FreeElement) -> FreeElement:
    """sum_{n>=1} f_i^{(n-1)} a_n; may be zero."""
    out = FreeElement()
    for n, an in enumerate(string_components(rd, i, a)):
        if n >= 1 and an:
            out = out + mul_f_divided(rd, i, n - 1, an)
    if out.is_zero():
        return out
    return weight_basis(out.weight(), rd).reduce(out)


# -- carrier for the crystal engine ------------------------------------------


class UqMinusCarrier(QuotientCarrier):
    """U_q^- with raise = e'_i, lower = f_i; blocks are weights (letter counts per index)."""

    name = "uqminus"

    def key_length(self) -> int:
        return len(self.rd.indices)

    def step(self, i) -> int:
        return self._pos[i]

    def t_exponent(self, i, key) -> int:
        return 0

    def make_element(self, terms) -> FreeElement:
        return FreeElement(terms)

    def weight_of_key(self, key) -> Weight:
        return Weight.from_map({a: -n for a, n in zip(self.letters, key)})

    def key_of_weight(self, w: Weight) -> tuple:
        c = _counts_of(w)
        return tuple(c.get(a, 0) for a in self.letters)


def binfty_graph(rd: RootDatum, depth: int):
    """Crystal graph of B(infinity) up to ``depth`` arrows from 1."""
    from .crystal.graph import build_graph

    return build_graph(UqMinusCarrier(rd), depth)
