"""Dense univariate polynomials over Z stored as int tuples, constant term first.

These helpers are the hot path under ``RatFunc``; they avoid Fractions entirely
and keep every polynomial they hand back trimmed (no zero leading coefficient).
"""

from __future__ import annotations

from math import gcd

Poly = tuple  # tuple[int, ...]

ONE: Poly = (1,)


def trim(p) -> Poly:
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def low_order(p: Poly) -> int:
    """Index of the first nonzero coefficient (len(p) if p == 0)."""
    for k, c in enumerate(p):
        if c:
            return k
    return len(p)


def add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return trim(out)


def sub(a: Poly, b: Poly) -> Poly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for k, c in enumerate(b):
        out[k] -= c
    return trim(out)


def scale(p: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    return tuple(c * x for x in p)


def shift(p: Poly, k: int) -> Poly:
    """Multiply by q^k, k >= 0."""
    if k == 0 or not p:
        return p
    return (0,) * k + tuple(p)


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def content(p: Poly) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(p: Poly) -> tuple[int, Poly]:
    """Return (u, p/u) where p/u is primitive with positive constant term.

    The constant term of ``p`` must be nonzero.
    """
    g = content(p)
    if p[0] < 0:
        g = -g
    if g == 1:
        return 1, p
    return g, tuple(c // g for c in p)


def divexact(a: Poly, b: Poly) -> Poly:
    """Exact quotient a / b in Z[q]; raises ArithmeticError on a remainder."""
    if len(b) == 1:
        d = b[0]
        if d == 1:
            return a
        out = []
        for c in a:
            qt, r = divmod(c, d)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out.append(qt)
        return tuple(out)
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    nq = len(a) - db
    if nq <= 0:
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return ()
    quot = [0] * nq
    for k in range(nq - 1, -1, -1):
        c, r = divmod(rem[k + db], lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return trim(quot)


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b (deg a >= deg b)."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(rem) - 1 >= db and rem:
        k = len(rem) - 1 - db
        lr = rem[-1]
        rem = [lb * c for c in rem]
        for j, y in enumerate(b):
            rem[k + j] -= lr * y
        rem = list(trim(rem))
    return tuple(rem)


def pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd with positive constant term.

    Both inputs must have nonzero constant terms (true for every stored
    numerator/denominator), so the gcd does too.
    """
    if a == ONE or b == ONE:
        return ONE
    if a == b:
        return primitive(a)[1]
    if len(a) == 1 or len(b) == 1:
        return ONE
    if len(a) < len(b):
        a, b = b, a
    a = primitive(a)[1]
    b = primitive(b)[1]
    while len(b) > 1:
        r = _prem(a, b)
        if not r:
            break
        a, b = b, r
        g = content(b)
        if g != 1:
            b = tuple(c // g for c in b)
    else:
        return ONE
    # b divides a: b is the gcd up to a unit.  Drop any factor q^k (cannot
    # appear in a true gcd of polynomials with nonzero constant terms).
    k = low_order(b)
    if k:
        b = b[k:]
    return primitive(b)[1]


def reverse(p: Poly) -> Poly:
    return tuple(reversed(p))


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc
