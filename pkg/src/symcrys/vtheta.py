"""The module V_theta(lambda): F-words applied to vac, modulo the radical of its form.

A word ``(j1, ..., jn)`` stands for F_{j1} ... F_{jn} vac.  The E_i act by
pushing through the F's with

    E_i F_j = q^{-(a_i,a_j)} F_j E_i + delta_ij + delta_{theta(i),j} T_i,

E_i vac = 0 and T_i vac = q^{(a_i,lambda)} vac.  Only the letter count per
theta-orbit is a grading, so blocks are keyed by those counts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .crystal.carrier import QuotientCarrier
from .rootdata import DominantWeight, RootDatum, _orbit_lookup
from .scalars import ONE, ZERO, RatFunc, q_pow
from .scalars.linalg import column_basis, kernel_basis, solve_linear
from .uqminus import FreeElement, ad_t, e_prime, e_star, mul_f, mul_f_right
from .words import WordCombination


class VElement(WordCombination):
    """Combination of F-words on vac, homogeneous in (length, orbit counts)."""

    __slots__ = ("rd",)

    def __init__(self, rd: RootDatum, terms=None, grade=None):
        self.rd = rd
        super().__init__(terms, grade)

    def _grade(self, word):
        return block_key(self.rd, word)

    def _new(self, terms):
        return VElement(self.rd, terms, self.grade)

    @classmethod
    def word(cls, rd, w, coeff=1):
        return cls(rd, {tuple(w): coeff})

    @classmethod
    def vac(cls, rd):
        return cls(rd, {(): 1})

    @property
    def length(self) -> int:
        return None if self.grade is None else sum(self.grade)


def block_key(rd: RootDatum, word) -> tuple:
    """Letter counts per theta-orbit; the symmetrized weight of the word, up to sign."""
    look = _orbit_lookup(rd)
    k = [0] * len(rd.orbits())
    for a in word:
        k[look[a]] += 1
    return tuple(k)


def _t_exp(rd: RootDatum, lam: DominantWeight, i, word) -> int:
    """T_i on F_word vac is the scalar q^{this}."""
    ti = rd.th(i)
    return lam(i) - sum(rd.pair(i, a) + rd.pair(ti, a) for a in word)


@lru_cache(maxsize=None)
def _act_E_word(rd: RootDatum, lam: DominantWeight, i, word: tuple) -> tuple:
    """E_i F_word vac as ((word', exponent), ...); each term drops one letter."""
    ti = rd.th(i)
    out = []
    shift = 0
    for k, a in enumerate(word):
        rest = word[k + 1 :]
        if a == i:
            out.append((word[:k] + rest, -shift))
        elif a == ti:
            out.append((word[:k] + rest, -shift + _t_exp(rd, lam, i, rest)))
        shift += rd.pair(i, a)
    return tuple(out)


def act_F(i, u: VElement) -> VElement:
    return VElement(u.rd, {(i,) + w: c for w, c in u.terms.items()})


def act_E(i, u: VElement, lam: DominantWeight) -> VElement:
    out: dict = {}
    for w, c in u.terms.items():
        for w2, e in _act_E_word(u.rd, lam, i, w):
            out[w2] = out.get(w2, ZERO) + c * q_pow(e)
    return VElement(u.rd, out)


def act_T(i, u: VElement, lam: DominantWeight) -> VElement:
    # one scalar per block, but evaluated per word so mixed input is still handled
    return VElement(u.rd, {w: c * q_pow(_t_exp(u.rd, lam, i, w)) for w, c in u.terms.items()})


@lru_cache(maxsize=None)
def _v_form_words(rd: RootDatum, lam: DominantWeight, w1: tuple, w2: tuple) -> RatFunc:
    if len(w1) != len(w2):
        return ZERO
    if not w1:
        return ONE
    acc = ZERO
    for rest, e in _act_E_word(rd, lam, w1[0], w2):
        v = _v_form_words(rd, lam, w1[1:], rest)
        if v:
            acc = acc + q_pow(e) * v
    return acc


def v_form(u: VElement, v: VElement, lam: DominantWeight) -> RatFunc:
    """(F_i u', v) = (u', E_i v), (vac, vac) = 1.

    No block shortcut is taken: orthogonality across blocks is a consequence
    that the tests check.
    """
    acc = ZERO
    for w1, c1 in u.terms.items():
        for w2, c2 in v.terms.items():
            x = _v_form_words(u.rd, lam, w1, w2)
            if x:
                acc = acc + c1 * c2 * x
    return acc


def words_of_block(rd: RootDatum, key: tuple) -> list:
    orbits = rd.orbits()
    n = sum(key)
    look = _orbit_lookup(rd)
    out = []
    for w in product(rd.indices, repeat=n):
        c = Counter(look[a] for a in w)
        if all(c.get(o, 0) == key[o] for o in range(len(orbits))):
            out.append(w)
    return out


@dataclass
class VBlockBasis:
    rd: RootDatum
    lam: DominantWeight
    key: tuple
    words: list
    gram_full: list
    pivot_words: list
    gram: list

    @property
    def dim(self) -> int:
        return len(self.pivot_words)

    def coordinates(self, u: VElement) -> list:
        if u.is_zero():
            return [ZERO] * self.dim
        if u.grade != self.key:
            raise ValueError("element lies in a different block")
        b = [v_form(VElement.word(self.rd, p), u, self.lam) for p in self.pivot_words]
        return solve_linear(self.gram, b).solution

    def element(self, coords) -> VElement:
        return VElement(self.rd, {p: c for p, c in zip(self.pivot_words, coords) if c}, self.key)

    def reduce(self, u: VElement) -> VElement:
        return self.element(self.coordinates(u))

    def is_zero(self, u: VElement) -> bool:
        return not any(self.coordinates(u))

    def kernel(self) -> list:
        if not self.words:
            return []
        return [VElement(self.rd, dict(zip(self.words, v))) for v in kernel_basis(self.gram_full)]


@lru_cache(maxsize=None)
def v_block_basis(key: tuple, rd: RootDatum, lam: DominantWeight) -> VBlockBasis:
    """Brute force: every word of the block, full Gram matrix, leftmost pivots."""
    words = sorted(words_of_block(rd, key), key=lambda w: tuple(rd.position(a) for a in w))
    n = len(words)
    gram = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            gram[a][b] = gram[b][a] = _v_form_words(rd, lam, words[a], words[b])
    piv = column_basis(gram) if n else []
    pw = [words[c] for c in piv]
    gpp = [[gram[a][b] for b in piv] for a in piv]
    return VBlockBasis(rd, lam, key, words, gram, pw, gpp)


# -- the vac' / vac'' models -------------------------------------------------


def model_E_vacprime(rd: RootDatum, i, a: FreeElement, lam: DominantWeight) -> FreeElement:
    """E_i(a vac') = (e'_i a + q^{(a_i,lambda)} Ad(t_i)(e*_{theta i} a)) vac'."""
    second = ad_t(rd, i, e_star(rd, rd.th(i), a)).scale(q_pow(lam(i)))
    first = e_prime(rd, i, a)
    if first.is_zero():
        return second
    if second.is_zero():
        return first
    # the two pieces live in different U^- weights; keep them as one word map
    return _merge(first, second)


def model_F_vacdoubleprime(rd: RootDatum, i, a: FreeElement, lam: DominantWeight) -> FreeElement:
    """F_i(a vac'') = (f_i a + q^{(a_i,lambda)} (Ad(t_i)a) f_{theta i}) vac''."""
    first = mul_f(i, a)
    second = mul_f_right(ad_t(rd, i, a), rd.th(i)).scale(q_pow(lam(i)))
    return _merge(first, second)


class _MixedElement(FreeElement):
    """A FreeElement that skips the homogeneity check (model images mix weights)."""

    __slots__ = ()

    @staticmethod
    def _grade(word):
        return len(word)


def _merge(a: FreeElement, b: FreeElement) -> FreeElement:
    out = dict(a.terms)
    for w, c in b.terms.items():
        out[w] = out.get(w, ZERO) + c
    return _MixedElement(out)


def free_to_v(rd: RootDatum, a: FreeElement) -> VElement:
    """a vac' -> a(F) vac, the map psi on the vac' side."""
    return VElement(rd, dict(a.terms))


def psi_crosscheck(word, i, rd: RootDatum, lam: DominantWeight) -> bool:
    """E_i on F_word vac two ways: commutation versus the vac' model pushed through psi."""
    word = tuple(word)
    direct = act_E(i, VElement.word(rd, word), lam)
    model = free_to_v(rd, model_E_vacprime(rd, i, FreeElement.word(word), lam))
    diff = direct - model
    if diff.is_zero():
        return True
    if not word:
        return False
    return v_block_basis(diff.grade, rd, lam).is_zero(diff)


# -- carrier for the crystal engine ------------------------------------------


class VThetaCarrier(QuotientCarrier):
    """V_theta(lambda) with raise = E_i, lower = F_i; blocks are per-orbit counts."""

    name = "vtheta"

    def __init__(self, rd: RootDatum, lam: DominantWeight):
        if not rd.has_theta:
            raise ValueError("V_theta needs a root datum with an involution")
        self.lam = lam
        self._orbit = _orbit_lookup(rd)
        self._reps = [orb[0] for orb in rd.orbits()]
        super().__init__(rd)

    def key_length(self) -> int:
        return len(self._reps)

    def step(self, i) -> int:
        return self._orbit[i]

    def theta_term(self, i, j) -> bool:
        return self.rd.th(i) == j

    def t_exponent(self, i, key) -> int:
        ti = self.rd.th(i)
        return self.lam(i) - sum(n * (self.rd.pair(i, r) + self.rd.pair(ti, r)) for n, r in zip(key, self._reps))

    def make_element(self, terms) -> VElement:
        return VElement(self.rd, terms)
