"""Cyclic modules realized as words in lowering operators modulo a form's radical.

Both U_q^-(g) (lowering f_i, raising e'_i) and V_theta(lambda) (lowering
F_i, raising E_i) have the same shape: a vacuum vector, raising operators
that commute past lowering ones as

    raise_i lower_j = q^{-(a_i,a_j)} lower_j raise_i + delta_ij + [theta(i)=j] T_i,

and a symmetric form with (vac, vac) = 1 for which lower_i is adjoint to
raise_i.  The module is the free word module modulo the radical of that form.

The engine builds it one level (word length) at a time.  At level k the
spanning candidates are ``lower_j p`` for pivot words p of level k-1; their
Gram matrix is computed from level k-1 data, the leftmost independent
candidates become the pivots of level k, and every candidate is expressed in
pivot coordinates.  Blocks within a level are keyed by a vector of letter
counts (the grading seen by T_i): per index for U_q^-, per theta-orbit for
V_theta(lambda).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..scalars import ONE, ZERO, RatFunc, q_pow
from ..scalars.laurent import quantum_factorial
from ..scalars.linalg import column_basis, solve_linear


@dataclass
class Block:
    key: tuple
    level: int
    words: list  # pivot words, each a tuple of labels (leftmost letter applied last)
    gram: list  # Gram matrix on pivots
    E: dict = field(default_factory=dict)  # i -> list of images (coords in key - step(i))
    F: dict = field(default_factory=dict)  # i -> list of images (coords in key + step(i))
    candidates: dict = field(default_factory=dict)  # candidate word -> coords

    @property
    def dim(self) -> int:
        return len(self.words)


class DecompositionError(ArithmeticError):
    """A string decomposition does not exist or is not unique."""


class QuotientCarrier:
    """Base engine.  Subclasses provide the grading and the T-term."""

    name = "carrier"

    def __init__(self, rd):
        self.rd = rd
        self.letters = tuple(rd.indices)
        self._pos = {a: k for k, a in enumerate(self.letters)}
        zero_key = (0,) * self.key_length()
        self._zero_key = zero_key
        vac = Block(zero_key, 0, [()], [[ONE]])
        self._levels: list[dict] = [{zero_key: vac}]
        self._blocks: dict = {zero_key: vac}
        self._qfact: dict = {}

    # -- to override ------------------------------------------------------
    def key_length(self) -> int:
        raise NotImplementedError

    def step(self, i) -> int:
        """Coordinate of the block key incremented by lower_i."""
        raise NotImplementedError

    def theta_term(self, i, j) -> bool:
        return False

    def t_exponent(self, i, key) -> int:
        """T_i acts on block ``key`` by q^{t_exponent}."""
        raise NotImplementedError

    def make_element(self, terms):
        """Word-level element (FreeElement / VElement) for export."""
        raise NotImplementedError

    # -- keys -------------------------------------------------------------
    @property
    def zero_key(self) -> tuple:
        return self._zero_key

    def shift_key(self, key, i, n=1):
        k = list(key)
        k[self.step(i)] += n
        return tuple(k) if k[self.step(i)] >= 0 else None

    def word_key(self, word):
        k = [0] * self.key_length()
        for a in word:
            k[self.step(a)] += 1
        return tuple(k)

    def word_sort_key(self, word):
        return tuple(self._pos[a] for a in word)

    # -- level construction ----------------------------------------------
    @property
    def depth_built(self) -> int:
        return len(self._levels) - 1

    def ensure_level(self, k: int):
        while self.depth_built < k:
            self._build_next_level()

    def block(self, key) -> Block | None:
        if key is None:
            return None
        self.ensure_level(sum(key))
        return self._blocks.get(key)

    def blocks_at(self, level: int) -> list:
        self.ensure_level(level)
        return [self._levels[level][k] for k in sorted(self._levels[level])]

    def dim(self, key) -> int:
        b = self.block(key)
        return 0 if b is None else b.dim

    def _zero_vec(self, key):
        b = self._blocks.get(key) if key is not None else None
        return [ZERO] * (0 if b is None else b.dim)

    def _build_next_level(self):
        k = self.depth_built + 1
        prev = self._levels[k - 1]
        targets: dict = {}
        for key in sorted(prev):
            blk = prev[key]
            for j in self.letters:
                blk.F.setdefault(j, [None] * blk.dim)
                tkey = self.shift_key(key, j)
                for p, w in enumerate(blk.words):
                    targets.setdefault(tkey, []).append((j, key, p, (j,) + w))
        level: dict = {}
        for tkey in sorted(targets):
            cands = sorted(targets[tkey], key=lambda c: self.word_sort_key(c[3]))
            level[tkey] = self._build_block(tkey, k, cands)
        self._levels.append(level)
        self._blocks.update(level)

    def _raise_candidate(self, i, j, src_key, p):
        """Coordinates of raise_i(lower_j p) where p is pivot ``p`` of ``src_key``."""
        ekey = self.shift_key(self.shift_key(src_key, j), i, -1)
        if ekey is None:
            return None, []
        if ekey not in self._blocks:
            return ekey, []
        out = [ZERO] * self._blocks[ekey].dim
        if not out:
            return ekey, out
        src = self._blocks[src_key]
        # q^{-(i,j)} lower_j (raise_i p)
        lower_key = self.shift_key(src_key, i, -1)
        if lower_key is not None and lower_key in self._blocks and i in src.E:
            ep = src.E[i][p]
            if any(ep):
                fj = self._blocks[lower_key].F[j]
                c = q_pow(-self.rd.pair(i, j))
                for m, x in enumerate(ep):
                    if x:
                        img = fj[m]
                        xc = c * x
                        for t, y in enumerate(img):
                            if y:
                                out[t] = out[t] + xc * y
        if i == j:
            out[p] = out[p] + ONE
        if self.theta_term(i, j):
            out[p] = out[p] + q_pow(self.t_exponent(i, src_key))
        return ekey, out

    def _build_block(self, tkey, level, cands) -> Block:
        n = len(cands)
        raised = []  # per candidate: {i: coords}
        for j, src, p, w in cands:
            r = {}
            for i in self.letters:
                ekey, vec = self._raise_candidate(i, j, src, p)
                if ekey is not None:
                    r[i] = vec
            raised.append(r)
        gram = [[ZERO] * n for _ in range(n)]
        for a, (j, src, p, _) in enumerate(cands):
            grow = self._blocks[src].gram[p]
            for b in range(a, n):
                vec = raised[b].get(j)
                acc = ZERO
                if vec:
                    for x, y in zip(grow, vec):
                        if x and y:
                            acc = acc + x * y
                gram[a][b] = acc
                gram[b][a] = acc
        piv = column_basis(gram) if n else []
        words = [cands[c][3] for c in piv]
        gpp = [[gram[a][b] for b in piv] for a in piv]
        blk = Block(tkey, level, words, gpp)
        for i in self.letters:
            if self.shift_key(tkey, i, -1) is not None and all(i in raised[c] for c in piv):
                blk.E[i] = [raised[c][i] for c in piv]
        if piv:
            rhs = [[gram[a][c] for a in piv] for c in range(n)]
            coords = solve_linear(gpp, rhs=rhs).solutions
        else:
            coords = [[] for _ in range(n)]
        for c, (j, src, p, w) in enumerate(cands):
            self._blocks[src].F[j][p] = coords[c]
            blk.candidates[w] = coords[c]
        return blk

    # -- operators on coordinate vectors ---------------------------------
    def vacuum(self):
        return (self.zero_key, [ONE])

    def lower(self, i, elem):
        key, vec = elem
        tkey = self.shift_key(key, i)
        self.ensure_level(sum(tkey))
        blk = self._blocks[key]
        out = self._zero_vec(tkey)
        imgs = blk.F[i]
        for m, x in enumerate(vec):
            if x:
                for t, y in enumerate(imgs[m]):
                    if y:
                        out[t] = out[t] + x * y
        return (tkey, out)

    def qfactorial(self, i, n) -> RatFunc:
        k = (self.rd.d(i), n)
        if k not in self._qfact:
            self._qfact[k] = RatFunc.from_laurent(quantum_factorial(n, self.rd.d(i)))
        return self._qfact[k]

    def lower_divided(self, i, n, elem):
        for _ in range(n):
            elem = self.lower(i, elem)
        if n > 1:
            inv = self.qfactorial(i, n).inverse()
            elem = (elem[0], [x * inv if x else x for x in elem[1]])
        return elem

    def raise_(self, i, elem):
        key, vec = elem
        ekey = self.shift_key(key, i, -1)
        if ekey is None:
            return None
        blk = self._blocks[key]
        out = self._zero_vec(ekey)
        if not out:
            return (ekey, out)
        imgs = blk.E[i]
        for m, x in enumerate(vec):
            if x:
                for t, y in enumerate(imgs[m]):
                    if y:
                        out[t] = out[t] + x * y
        return (ekey, out)

    def apply_T(self, i, elem):
        key, vec = elem
        c = q_pow(self.t_exponent(i, key))
        return (key, [c * x for x in vec])

    def form(self, u, v) -> RatFunc:
        if u[0] != v[0]:
            return ZERO
        g = self._blocks[u[0]].gram
        acc = ZERO
        for a, x in enumerate(u[1]):
            if x:
                row = g[a]
                for b, y in enumerate(v[1]):
                    if y and row[b]:
                        acc = acc + x * row[b] * y
        return acc

    def coords_of_word(self, word):
        """(key, coords) of the word applied to the vacuum."""
        elem = self.vacuum()
        for a in reversed(word):
            elem = self.lower(a, elem)
        return elem

    def coords_of_terms(self, terms: dict, key=None):
        """Coordinates of a word combination (all words in one block)."""
        out = None
        for w, c in terms.items():
            k, v = self.coords_of_word(w)
            if out is None:
                out = (k, [c * x for x in v])
            else:
                if k != out[0]:
                    raise ValueError("word combination spans several blocks")
                out = (k, [a + c * x for a, x in zip(out[1], v)])
        if out is None:
            if key is None:
                raise ValueError("empty combination needs an explicit block key")
            self.ensure_level(sum(key))
            return (key, self._zero_vec(key))
        return out

    def to_terms(self, elem) -> dict:
        key, vec = elem
        words = self._blocks[key].words
        return {words[m]: x for m, x in enumerate(vec) if x}

    def bar(self, elem):
        """Coefficient conjugation in the pivot-word frame."""
        return (elem[0], [x.bar() if x else x for x in elem[1]])

    def radical_is_bar_stable(self, key) -> bool:
        """Well-definedness of the bar map on one block.

        Every candidate word is bar-invariant, so its pivot coordinates must
        be too; otherwise coefficient conjugation does not descend to the
        quotient.
        """
        blk = self.block(key)
        if blk is None:
            return True
        return all(x == x.bar() for coords in blk.candidates.values() for x in coords)
