"""Affine Hecke algebra of type B on Laurent polynomials in X_1, ..., X_n.

Generators T_0, ..., T_{n-1} act by the Bernstein-type formula

    T_i a = p_i (s_i a) + (p_i - p_i^{-1}) (a - s_i a) / (1 - X^{-a_i^vee}),

with p_0 for i = 0, p_1 otherwise, X^{-a_0^vee} = X_1^{-2} and
X^{-a_i^vee} = X_i X_{i+1}^{-1}.  s_0 inverts X_1 and s_i swaps X_i, X_{i+1}.
Coefficients live in Q(p0, p1); a specialized configuration plugs in
rationals instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .scalars.multivar import MultiRatFunc

_ONE = MultiRatFunc.const(1)


class HeckeConfigError(ValueError):
    pass


@dataclass(frozen=True)
class HeckeConfig:
    n: int
    p0: Fraction | None = None  # None means the indeterminate
    p1: Fraction | None = None

    def __post_init__(self):
        if self.n < 1:
            raise HeckeConfigError("n must be >= 1")
        for name in ("p0", "p1"):
            v = getattr(self, name)
            if v is None:
                continue
            v = Fraction(v)
            object.__setattr__(self, name, v)
            if v == 0:
                raise HeckeConfigError(f"{name} must be nonzero")
            if v * v == 1:
                raise HeckeConfigError(f"{name}^2 = 1 is excluded")

    @property
    def generic(self) -> bool:
        return self.p0 is None and self.p1 is None

    def p(self, i) -> MultiRatFunc:
        if i == 0:
            return MultiRatFunc.var(0) if self.p0 is None else MultiRatFunc.const(self.p0)
        return MultiRatFunc.var(1) if self.p1 is None else MultiRatFunc.const(self.p1)

    def check_index(self, i):
        if not 0 <= i < self.n:
            raise HeckeConfigError(f"T_{i} does not exist for n = {self.n}")


class XPoly:
    """Laurent polynomial in X_1..X_n with MultiRatFunc coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for e, c in (terms or {}).items():
            if not isinstance(c, MultiRatFunc):
                c = MultiRatFunc.const(c)
            if c:
                e = tuple(e)
                if len(e) != n:
                    raise ValueError("exponent vector has the wrong length")
                clean[e] = c
        self.terms = clean

    @classmethod
    def monomial(cls, exps, coeff=1) -> "XPoly":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def constant(cls, n, c=1) -> "XPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n, k, power=1) -> "XPoly":
        """X_k^power, with k counted from 1."""
        e = [0] * n
        e[k - 1] = power
        return cls(n, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return XPoly(self.n, out)

    def __neg__(self):
        return XPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "XPoly":
        return XPoly(self.n, {e: c * x for e, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return self.scale(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return XPoly(self.n, out)

    def __rmul__(self, c):
        return self.scale(c)

    def substitute(self, f) -> "XPoly":
        """Apply an exponent-vector map to every monomial."""
        out: dict = {}
        for e, c in self.terms.items():
            e2 = f(e)
            out[e2] = out[e2] + c if e2 in out else c
        return XPoly(self.n, out)

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def max_abs_exponent(self) -> int:
        return max((abs(x) for e in self.terms for x in e), default=0)

    def __repr__(self):
        if not self.terms:
            return "XPoly(0)"
        return "XPoly(" + " + ".join(f"{c!r}*X^{e}" for e, c in sorted(self.terms.items())) + ")"


def s_action(i: int, a: XPoly) -> XPoly:
    if i == 0:
        return a.substitute(lambda e: (-e[0],) + e[1:])
    if not 1 <= i < a.n:
        raise HeckeConfigError(f"s_{i} does not exist for n = {a.n}")

    def swap(e):
        e = list(e)
        e[i - 1], e[i] = e[i], e[i - 1]
        return tuple(e)

    return a.substitute(swap)


def coroot_monomial(i: int, n: int) -> tuple:
    """Exponent vector of X^{-a_i^vee}."""
    e = [0] * n
    if i == 0:
        e[0] = -2
    else:
        e[i - 1], e[i] = 1, -1
    return tuple(e)


def divide_one_minus(a: XPoly, m: tuple) -> XPoly:
    """a / (1 - X^m), which must be exact.

    Monomials are grouped into classes modulo Z*m; inside a class a is a
    Laurent polynomial in z = X^m, and (1 - z) divides it iff the
    coefficients sum to zero.  The quotient has partial sums as coefficients.
    """
    k = next(t for t, x in enumerate(m) if x)
    mk = m[k]
    classes: dict = {}
    for e, c in a.terms.items():
        r = e[k] % abs(mk)
        t = (e[k] - r) // mk
        base = tuple(x - t * y for x, y in zip(e, m))
        classes.setdefault(base, {})[t] = c
    out: dict = {}
    for base, coeffs in classes.items():
        ts = sorted(coeffs)
        acc = MultiRatFunc.const(0)
        for t in range(ts[0], ts[-1] + 1):
            if t in coeffs:
                acc = acc + coeffs[t]
            if acc:
                out[tuple(x + t * y for x, y in zip(base, m))] = acc
        if acc:
            raise ArithmeticError("internal error: inexact division by 1 - X^m")
    return XPoly(a.n, out)


def act_T(i: int, a: XPoly, cfg: HeckeConfig) -> XPoly:
    cfg.check_index(i)
    p = cfg.p(i)
    sa = s_action(i, a)
    diff = a - sa
    out = sa.scale(p)
    if diff:
        out = out + divide_one_minus(diff, coroot_monomial(i, a.n)).scale(p - p.inverse())
    return out


def mul_X(k: int, a: XPoly, power: int = 1) -> XPoly:
    return XPoly.var(a.n, k, power) * a


# -- the localization ---------------------------------------------------------


class XFrac:
    """num/den with XPoly parts; equality by cross-multiplication, no gcd."""

    __slots__ = ("num", "den")

    def __init__(self, num: XPoly, den: XPoly | None = None):
        if den is None:
            den = XPoly.constant(num.n)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @property
    def n(self) -> int:
        return self.num.n

    def __add__(self, other):
        if self.den == other.den:
            return XFrac(self.num + other.num, self.den)
        return XFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return XFrac(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "XFrac":
        return XFrac(self.num.scale(c), self.den)

    def __mul__(self, other):
        if isinstance(other, XFrac):
            return XFrac(self.num * other.num, self.den * other.den)
        if isinstance(other, XPoly):
            return XFrac(self.num * other, self.den)
        return self.scale(other)

    def divide(self, p: XPoly) -> "XFrac":
        return XFrac(self.num, self.den * p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, XPoly):
            other = XFrac(other)
        if not isinstance(other, XFrac):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __repr__(self):
        return f"XFrac({self.num!r} / {self.den!r})"


def s_action_frac(i: int, a: XFrac) -> XFrac:
    return XFrac(s_action(i, a.num), s_action(i, a.den))


def act_T_frac(i: int, a: XFrac, cfg: HeckeConfig) -> XFrac:
    """Same formula on the quotient field, with an honest fraction for the quotient."""
    cfg.check_index(i)
    p = cfg.p(i)
    n = a.n
    sa = s_action_frac(i, a)
    one_minus = XPoly.constant(n) - XPoly.monomial(coroot_monomial(i, n))
    return sa.scale(p) + (a - sa).divide(one_minus).scale(p - p.inverse())


def intertwiner(i: int, a, cfg: HeckeConfig, normalized: bool = True) -> XFrac:
    """phi_i = (1 - X^{-a_i^vee}) T_i - (p_i - p_i^{-1}); the normalized one divides by p_i^{-1} - p_i X^{-a_i^vee}."""
    if isinstance(a, XPoly):
        a = XFrac(a)
    p = cfg.p(i)
    n = a.n
    y = XPoly.monomial(coroot_monomial(i, n))
    one_minus = XPoly.constant(n) - y
    phi = act_T_frac(i, a, cfg) * one_minus - a.scale(p - p.inverse())
    if not normalized:
        return phi
    den = XPoly.constant(n, p.inverse()) - y.scale(p)
    if den.is_zero():
        raise ZeroDivisionError("p_i^{-1} - p_i X^{-a_i^vee} vanishes")
    return phi.divide(den)


# -- exhaustive relation checks -----------------------------------------------


def monomial_box(n: int, d: int) -> list:
    return [XPoly.monomial(e) for e in itertools.product(range(-d, d + 1), repeat=n)]


def _compose(*ops):
    def run(a):
        for op in reversed(ops):
            a = op(a)
        return a

    return run


def relation_list(cfg: HeckeConfig) -> list:
    """(name, lhs operator, rhs operator) for every defining relation."""
    n = cfg.n

    def T(i):
        return lambda a: act_T(i, a, cfg)

    def X(k, power=1):
        return lambda a: mul_X(k, a, power)

    def lin(op, c):
        return lambda a: op(a) + a.scale(c)

    rels = []
    for i in range(n):
        p = cfg.p(i)
        quad = _compose(lin(T(i), -p), lin(T(i), p.inverse()))
        rels.append((f"quadratic T{i}", quad, lambda a: XPoly(a.n)))
    if n >= 2:
        rels.append(("braid T0T1T0T1 = T1T0T1T0", _compose(T(0), T(1), T(0), T(1)), _compose(T(1), T(0), T(1), T(0))))
    for i in range(1, n - 1):
        rels.append((f"braid T{i}T{i+1}T{i} = T{i+1}T{i}T{i+1}",
                     _compose(T(i), T(i + 1), T(i)), _compose(T(i + 1), T(i), T(i + 1))))
    for i in range(n):
        for j in range(i + 2, n):
            rels.append((f"commute T{i}T{j}", _compose(T(i), T(j)), _compose(T(j), T(i))))
    rels.append(("T0 X1^-1 T0 = X1", _compose(T(0), X(1, -1), T(0)), X(1)))
    for i in range(1, n):
        rels.append((f"T{i} X{i} T{i} = X{i+1}", _compose(T(i), X(i), T(i)), X(i + 1)))
    for j in range(2, n + 1):
        rels.append((f"commute T0 X{j}", _compose(T(0), X(j)), _compose(X(j), T(0))))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append((f"commute T{i} X{j}", _compose(T(i), X(j)), _compose(X(j), T(i))))
    return rels


def verify_relations(cfg: HeckeConfig, degree_bound: int) -> list:
    """Apply both sides of each relation to every monomial in [-d, d]^n."""
    box = monomial_box(cfg.n, degree_bound)
    report = []
    for name, lhs, rhs in relation_list(cfg):
        witness = None
        for m in box:
            if lhs(m) != rhs(m):
                witness = next(iter(m.terms))
                break
        report.append({"relation": name, "status": "pass" if witness is None else "fail",
                       "witness": None if witness is None else list(witness)})
    # T_i keeps the box: needed for the minimal-polynomial reading of the quadratic relation
    for i in range(cfg.n):
        bad = None
        for m in box:
            if act_T(i, m, cfg).max_abs_exponent() > degree_bound:
                bad = next(iter(m.terms))
                break
        report.append({"relation": f"T{i} preserves the box", "status": "pass" if bad is None else "fail",
                       "witness": None if bad is None else list(bad)})
    return report


def intertwiner_sample(n: int, size: int = 50, seed: int = 0) -> list:
    """Deterministic sample of XFracs: fixed small cases first, then random ones."""
    import random

    rng = random.Random(seed)
    out = [XFrac(XPoly.var(n, 1)), XFrac(XPoly.var(n, 1, -1))]
    if n >= 2:
        out.append(XFrac(XPoly.var(n, 1) * XPoly.var(n, 2)))
    while len(out) < size:
        num = XPoly(n, {tuple(rng.randint(-2, 2) for _ in range(n)): rng.randint(-3, 3) or 1 for _ in range(2)})
        if rng.random() < 0.3:
            den = XPoly(n, {(0,) * n: 1, tuple(rng.randint(-1, 1) for _ in range(n)): rng.choice([2, 3, -2])})
            if den.is_zero():
                den = XPoly.constant(n)
            out.append(XFrac(num, den))
        else:
            out.append(XFrac(num))
    return out


def verify_intertwiners(cfg: HeckeConfig, sample=None) -> list:
    sample = intertwiner_sample(cfg.n) if sample is None else sample
    report = []
    for i in range(cfg.n):
        bad = None
        for a in sample:
            if intertwiner(i, a, cfg) != s_action_frac(i, a):
                bad = a
                break
        report.append({"relation": f"phi~{i} = s{i}", "status": "pass" if bad is None else "fail",
                       "witness": None if bad is None else repr(bad)})
        bad = None
        for a in sample[:10]:
            if intertwiner(i, intertwiner(i, a, cfg), cfg) != a:
                bad = a
                break
        report.append({"relation": f"phi~{i} squared = id", "status": "pass" if bad is None else "fail",
                       "witness": None if bad is None else repr(bad)})
    return report
