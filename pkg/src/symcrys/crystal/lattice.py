"""A0-lattices per block, kept in Hermite form over the valuation ring A0.

A0 is the ring of rational functions without a pole at q=0.  A block's
lattice is stored as rows r_1, ..., r_m with strictly increasing pivot
columns; the pivot entry of each row is exactly q^e and the entries before
it vanish.  Reduction against a row only ever uses A0 multiples, and rows
are never rescaled by non-units, so the stored rows always generate exactly
the A0-module that was inserted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..scalars import ZERO, RatFunc, q_pow


class NotInLatticeError(ArithmeticError):
    """A vector has a lattice coordinate with a pole at q=0."""

    def __init__(self, message, order=None, coordinate=None):
        super().__init__(message)
        self.order = order
        self.coordinate = coordinate


def _unit_part(x: RatFunc):
    """(e, u) with x = q^e u and u a unit of A0."""
    e = x.order_at_zero()
    return e, x * q_pow(-e)


@dataclass
class BlockLattice:
    dim: int
    rows: list = field(default_factory=list)  # (pivot column, exponent, vector)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _row_at(self, col):
        for k, (c, _, _) in enumerate(self.rows):
            if c == col:
                return k
        return None

    def insert(self, vec) -> bool:
        """Add ``vec`` to the generating set; returns True if the lattice grew."""
        v = list(vec)
        grew = False
        while True:
            c = next((t for t, x in enumerate(v) if x), None)
            if c is None:
                return grew
            e, u = _unit_part(v[c])
            k = self._row_at(c)
            if k is None:
                inv = u.inverse()
                self.rows.append((c, e, [y * inv if y else y for y in v]))
                self.rows.sort(key=lambda r: r[0])
                return True
            _, pe, prow = self.rows[k]
            if e >= pe:
                f = v[c] * q_pow(-pe)
                v = [a - f * b if b else a for a, b in zip(v, prow)]
                continue
            # smaller valuation: v takes over the pivot and the old row is
            # reduced against it on the next pass
            inv = u.inverse()
            self.rows[k] = (c, e, [y * inv if y else y for y in v])
            grew = True
            v = list(prow)

    def coordinates(self, vec) -> list:
        """x with vec = sum x_k rows[k]; raises if vec is outside the K-span."""
        v = list(vec)
        out = [ZERO] * len(self.rows)
        for k, (c, e, row) in enumerate(self.rows):
            for t in range(c):
                if v[t]:
                    raise NotInLatticeError("vector is outside the K-span of the lattice", coordinate=t)
            x = v[c]
            if x:
                f = x * q_pow(-e)
                out[k] = f
                v = [a - f * b if b else a for a, b in zip(v, row)]
        if any(v):
            raise NotInLatticeError("vector is outside the K-span of the lattice")
        return out

    def contains(self, vec) -> bool:
        try:
            return all(x.in_A0() for x in self.coordinates(vec))
        except NotInLatticeError:
            return False

    def reduce_mod_q(self, vec) -> tuple:
        """Lattice coordinates of vec at q=0 (exact rationals)."""
        xs = self.coordinates(vec)
        for k, x in enumerate(xs):
            if x and x.order_at_zero() < 0:
                raise NotInLatticeError(
                    f"lattice coordinate {k} has order {x.order_at_zero()} at q=0",
                    order=x.order_at_zero(),
                    coordinate=k,
                )
        return tuple(x.eval_at_zero() if x else Fraction(0) for x in xs)

    def matrix(self) -> list:
        return [r[2] for r in self.rows]


class Lattice:
    """Block key -> BlockLattice."""

    def __init__(self):
        self.blocks: dict = {}

    def block(self, key, dim=None) -> BlockLattice:
        if key not in self.blocks:
            if dim is None:
                raise KeyError(key)
            self.blocks[key] = BlockLattice(dim)
        return self.blocks[key]

    def insert(self, elem) -> bool:
        key, vec = elem
        return self.block(key, len(vec)).insert(vec)

    def reduce_mod_q(self, elem) -> tuple:
        key, vec = elem
        if key not in self.blocks:
            if not any(vec):
                return ()
            raise NotInLatticeError(f"no lattice recorded for block {key}")
        return self.blocks[key].reduce_mod_q(vec)

    def contains(self, elem) -> bool:
        key, vec = elem
        if not any(vec):
            return True
        return key in self.blocks and self.blocks[key].contains(vec)
