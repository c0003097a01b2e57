"""Root data with an involution: index set, symmetric pairing, theta, weights.

Labels are plain integers.  The multiplicative index sets coming from Hecke
parameters (orbits of p1^2 inside C^*) only matter through their Dynkin
structure and the involution a -> a^{-1}, so they are realized on integer
labels with theta acting by negation where possible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class RootDatumError(ValueError):
    """Invalid root datum or weight data."""


@dataclass(frozen=True)
class RootDatum:
    indices: tuple
    pairing: tuple  # square matrix of ints, rows/cols in ``indices`` order
    theta: tuple | None = None  # theta[k] is the image label of indices[k]
    kind: str = "custom"
    marked: tuple = ()  # labels carrying the preset dominant weight
    _pos: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _theta: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        pos = {a: k for k, a in enumerate(self.indices)}
        if len(pos) != len(self.indices):
            raise RootDatumError("duplicate index labels")
        object.__setattr__(self, "_pos", pos)
        n = len(self.indices)
        if len(self.pairing) != n or any(len(r) != n for r in self.pairing):
            raise RootDatumError("pairing must be a square matrix over the index set")
        for a in range(n):
            d = self.pairing[a][a]
            if d <= 0 or d % 2:
                raise RootDatumError(f"(alpha_i, alpha_i)/2 must be a positive integer (index {self.indices[a]})")
            for b in range(n):
                if self.pairing[a][b] != self.pairing[b][a]:
                    raise RootDatumError("pairing is not symmetric")
                if a != b:
                    c2 = 2 * self.pairing[a][b]
                    if c2 % d or c2 > 0:
                        raise RootDatumError(
                            f"(alpha_i^vee, alpha_j) must be a nonpositive integer "
                            f"(i={self.indices[a]}, j={self.indices[b]})"
                        )
        if self.theta is not None:
            th = dict(zip(self.indices, self.theta))
            if len(self.theta) != n or set(self.theta) != set(self.indices):
                raise RootDatumError("theta must be a permutation of the index set")
            for a in self.indices:
                if th[th[a]] != a:
                    raise RootDatumError("theta is not an involution")
                if th[a] == a:
                    raise RootDatumError(f"theta fixes the index {a}")
            for a in self.indices:
                for b in self.indices:
                    if self.pair(th[a], th[b]) != self.pair(a, b):
                        raise RootDatumError("theta is not an isometry of the pairing")
            object.__setattr__(self, "_theta", th)
        for m in self.marked:
            if m not in pos:
                raise RootDatumError(f"marked label {m} is not an index")

    # -- queries ----------------------------------------------------------
    def __contains__(self, i) -> bool:
        return i in self._pos

    def position(self, i) -> int:
        try:
            return self._pos[i]
        except KeyError:
            raise RootDatumError(f"{i} is not an index of this root datum") from None

    def pair(self, i, j) -> int:
        """(alpha_i, alpha_j)."""
        return self.pairing[self.position(i)][self.position(j)]

    def d(self, i) -> int:
        """(alpha_i, alpha_i)/2, the exponent in q_i = q^d."""
        return self.pair(i, i) // 2

    def th(self, i):
        if self._theta is None:
            raise RootDatumError("this root datum carries no involution")
        return self._theta[i]

    @property
    def has_theta(self) -> bool:
        return self._theta is not None

    def orbits(self) -> list[tuple]:
        """theta-orbits {i, theta(i)}, each listed in index order."""
        seen, out = set(), []
        for a in self.indices:
            if a in seen:
                continue
            orb = (a,) if self._theta is None else tuple(sorted({a, self._theta[a]}, key=self.position))
            seen.update(orb)
            out.append(orb)
        return out

    def neighbors(self, i) -> list:
        return [j for j in self.indices if j != i and self.pair(i, j) != 0]

    def restrict(self, labels: Iterable) -> "RootDatum":
        """Full sub-datum on ``labels``; theta is kept only if it preserves them."""
        labels = [a for a in self.indices if a in set(labels)]
        pairing = tuple(tuple(self.pair(a, b) for b in labels) for a in labels)
        theta = None
        if self._theta is not None and all(self._theta[a] in labels for a in labels):
            theta = tuple(self._theta[a] for a in labels)
        marked = tuple(m for m in self.marked if m in labels)
        return RootDatum(tuple(labels), pairing, theta, kind=f"{self.kind}|restricted", marked=marked)

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "indices": list(self.indices),
            "theta": None if self.theta is None else list(self.theta),
            "marked": list(self.marked),
        }


def _from_successor(labels, succ, theta, kind, marked=()) -> RootDatum:
    """Dynkin rule (a_i, a_j) = 2 delta_ij - [i = succ(j)] - [succ(i) = j]."""
    labels = list(labels)
    pairing = tuple(
        tuple(2 * (a == b) - (a == succ(b)) - (succ(a) == b) for b in labels) for a in labels
    )
    th = None if theta is None else tuple(theta(a) for a in labels)
    return RootDatum(tuple(labels), pairing, th, kind=kind, marked=tuple(marked))


def make_odd_window(radius: int) -> RootDatum:
    """Odd integers in [-radius, radius]: path graph with theta(i) = -i."""
    if radius < 1 or radius % 2 == 0:
        raise RootDatumError("radius must be a positive odd integer")
    labels = [i for i in range(-radius, radius + 1) if i % 2]
    return _from_successor(labels, lambda a: a + 2, lambda a: -a, "odd-window")


def make_from_multiplicative_orbit(
    kind: str,
    ell: int | None = None,
    window: int = 3,
    coincidence: int | None = None,
    involution: bool = True,
) -> RootDatum:
    """Index sets cut out of C^* by the Hecke parameters.

    ``kind="z-orbit"``: I = {p1^n : n odd}.  With ``ell=None`` (p1 of infinite
    order) this is the odd window of the given radius; with ``ell`` (p1^2 a
    primitive ell-th root of unity) the labels are odd residues mod 2*ell,
    forming an ell-cycle.

    ``kind="doubled"``: I = {p0 p1^{2n}} u {p0^{-1} p1^{2n}}.  ``coincidence=m``
    records a relation p0^2 = p1^{2m}; even ``m`` puts a theta-fixed point in
    I and is rejected, odd ``m`` merges the two orbits into one.  Without a
    relation the orbits are disjoint chains (windowed to |n| <= window) or
    cycles.  The labels of p0 and p0^{-1} are stored in ``marked``.

    With ``involution=False`` theta is omitted (only the Dynkin structure is
    built, e.g. to inspect an odd-length cycle where theta has a fixed point).
    """
    if kind == "z-orbit":
        if ell is None:
            return make_odd_window(window)
        if ell < 2:
            raise RootDatumError("affine kind needs ell >= 2")
        labels = [r if r <= ell else r - 2 * ell for r in range(1, 2 * ell, 2)]
        labels.sort()

        def red(a):
            a %= 2 * ell
            return a if a <= ell else a - 2 * ell

        theta = (lambda a: red(-a)) if involution else None
        if involution and ell % 2:
            raise RootDatumError(f"theta fixes p1^{ell} = -1 when ell = {ell} is odd")
        return _from_successor(labels, lambda a: red(a + 2), theta, f"affine-cycle-{ell}")

    if kind == "doubled":
        if coincidence is not None:
            m = coincidence
            if m % 2 == 0:
                raise RootDatumError(f"p0^2 = p1^{2 * m} = p1^(4n) with n = {m // 2}: theta would fix a vertex")
            if ell is None:
                radius = window if window % 2 else window + 1
                radius = max(radius, abs(m))
                rd = make_odd_window(radius)
                return RootDatum(rd.indices, rd.pairing, rd.theta, kind="doubled-merged", marked=(m, -m))
            rd = make_from_multiplicative_orbit("z-orbit", ell=ell, involution=involution)
            mm = m % (2 * ell)
            mm = mm if mm <= ell else mm - 2 * ell
            marked = (mm, -mm if -mm > -ell else -mm + 2 * ell)
            return RootDatum(rd.indices, rd.pairing, rd.theta, kind=f"doubled-merged-cycle-{ell}", marked=marked)
        if ell is None:
            ns = range(-window, window + 1)
            labels = sorted([4 * n + 1 for n in ns] + [4 * n - 1 for n in ns])
            return _from_successor(
                labels, lambda a: a + 4, (lambda a: -a) if involution else None, "doubled-chains", marked=(1, -1)
            )
        if ell < 2:
            raise RootDatumError("affine kind needs ell >= 2")
        plus = {n: 4 * n + 1 for n in range(ell)}
        minus = {n: 4 * n - 1 for n in range(ell)}
        inv_plus = {v: n for n, v in plus.items()}
        inv_minus = {v: n for n, v in minus.items()}

        def succ(a):
            if a in inv_plus:
                return plus[(inv_plus[a] + 1) % ell]
            return minus[(inv_minus[a] + 1) % ell]

        def theta(a):
            if a in inv_plus:
                return minus[(-inv_plus[a]) % ell]
            return plus[(-inv_minus[a]) % ell]

        labels = sorted(list(plus.values()) + list(minus.values()))
        return _from_successor(
            labels, succ, theta if involution else None, f"doubled-cycles-{ell}", marked=(plus[0], minus[0])
        )
    raise RootDatumError(f"unknown orbit kind {kind!r}")


def disjoint_union(a: RootDatum, b: RootDatum, offset: int) -> RootDatum:
    """Disjoint union, relabelling ``b`` by adding ``offset``."""
    lb = [x + offset for x in b.indices]
    if set(lb) & set(a.indices):
        raise RootDatumError("labels overlap; choose a larger offset")
    labels = list(a.indices) + lb
    n, m = len(a.indices), len(lb)
    pairing = tuple(
        tuple(
            a.pairing[i][j] if i < n and j < n else b.pairing[i - n][j - n] if i >= n and j >= n else 0
            for j in range(n + m)
        )
        for i in range(n + m)
    )
    theta = None
    if a.theta is not None and b.theta is not None:
        theta = tuple(a.theta) + tuple(t + offset for t in b.theta)
    marked = tuple(a.marked) + tuple(x + offset for x in b.marked)
    return RootDatum(tuple(labels), pairing, theta, kind=f"{a.kind}+{b.kind}", marked=marked)


# -- weights ---------------------------------------------------------------


@dataclass(frozen=True)
class Weight:
    """An element sum n_i alpha_i of the root lattice (finitely supported)."""

    coords: tuple = ()  # sorted (label, coefficient) pairs, no zeros

    @classmethod
    def from_map(cls, m: Mapping) -> "Weight":
        return cls(tuple(sorted((k, v) for k, v in m.items() if v)))

    @classmethod
    def simple(cls, i, n: int = 1) -> "Weight":
        return cls.from_map({i: n})

    def as_dict(self) -> dict:
        return dict(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        out = self.as_dict()
        for k, v in other.coords:
            out[k] = out.get(k, 0) + v
        return Weight.from_map(out)

    def __neg__(self) -> "Weight":
        return Weight(tuple((k, -v) for k, v in self.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __mul__(self, n: int) -> "Weight":
        return Weight.from_map({k: n * v for k, v in self.coords})

    __rmul__ = __mul__

    def pair(self, other: "Weight", rd: RootDatum) -> int:
        return sum(a * b * rd.pair(i, j) for i, a in self.coords for j, b in other.coords)

    def theta(self, rd: RootDatum) -> "Weight":
        return Weight.from_map({rd.th(k): v for k, v in self.coords})

    def height(self) -> int:
        return sum(v for _, v in self.coords)


@dataclass(frozen=True)
class SymWeight:
    """The class of beta + theta(beta), stored as its coefficient per theta-orbit."""

    counts: tuple  # one integer per orbit of the root datum, in orbit order

    def __add__(self, other: "SymWeight") -> "SymWeight":
        return SymWeight(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def is_zero(self) -> bool:
        return not any(self.counts)


def symmetrize(w: Weight, rd: RootDatum) -> SymWeight:
    """beta -> beta + theta(beta); the coefficient on each orbit {i, theta i} is n_i + n_theta(i)."""
    counts = [0] * len(rd.orbits())
    lookup = _orbit_lookup(rd)
    for k, v in w.coords:
        counts[lookup[k]] += v
    return SymWeight(tuple(counts))


def _orbit_lookup(rd: RootDatum) -> dict:
    return {a: o for o, orb in enumerate(rd.orbits()) for a in orb}


@dataclass(frozen=True)
class DominantWeight:
    """A theta-invariant dominant weight, known only through (alpha_i, lambda)."""

    pairings: tuple = ()  # sorted (label, value) pairs, zeros dropped

    @classmethod
    def from_map(cls, m: Mapping, rd: RootDatum) -> "DominantWeight":
        for k, v in m.items():
            if k not in rd:
                raise RootDatumError(f"lambda pairing given for {k}, which is not an index")
            if v < 0:
                raise RootDatumError(f"lambda is not dominant at index {k}: (alpha_{k}, lambda) = {v}")
            if (2 * v) % rd.pair(k, k):
                raise RootDatumError(f"lambda is not integral at index {k}")
        if rd.has_theta:
            for k in rd.indices:
                if m.get(k, 0) != m.get(rd.th(k), 0):
                    raise RootDatumError(
                        f"lambda is not theta-invariant at index {k}: "
                        f"(alpha_{k}, lambda) = {m.get(k, 0)} but "
                        f"(alpha_{rd.th(k)}, lambda) = {m.get(rd.th(k), 0)}"
                    )
        return cls(tuple(sorted((k, v) for k, v in m.items() if v)))

    def __call__(self, i) -> int:
        """(alpha_i, lambda)."""
        for k, v in self.pairings:
            if k == i:
                return v
        return 0

    def as_dict(self) -> dict:
        return dict(self.pairings)


def lambda_zero() -> DominantWeight:
    return DominantWeight()


def lambda_doubled(rd: RootDatum) -> DominantWeight:
    """Lambda_{p0} + Lambda_{p0^-1}: pairing 1 at the two marked vertices.

    On an unmarked odd window the p0 = p1 case applies, i.e. the vertices +-1.
    """
    marked = rd.marked or (1, -1)
    return DominantWeight.from_map({m: 1 for m in marked}, rd)
