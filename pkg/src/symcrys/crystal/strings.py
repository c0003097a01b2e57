"""i-string decompositions and the modified operators, on carrier coordinates.

Elements are pairs ``(key, coords)`` as produced by a QuotientCarrier.  A
vanishing result of Etilde is returned as ``None``.
"""

from __future__ import annotations

from ..scalars import ONE, ZERO
from ..scalars.linalg import InconsistentSystemError, kernel_basis, solve_linear
from .carrier import DecompositionError, QuotientCarrier


def _identity(n):
    return [[ONE if r == c else ZERO for r in range(n)] for c in range(n)]


def raise_kernel(carrier: QuotientCarrier, i, key) -> list:
    """Basis (coordinate vectors) of ker(raise_i) on the block ``key``."""
    cache = carrier.__dict__.setdefault("_kernel_cache", {})
    ck = (i, key)
    if ck in cache:
        return cache[ck]
    blk = carrier.block(key)
    if blk is None or not blk.dim:
        out = []
    else:
        ekey = carrier.shift_key(key, i, -1)
        target_dim = carrier.dim(ekey) if ekey is not None else 0
        if not target_dim:
            out = _identity(blk.dim)
        else:
            imgs = blk.E[i]
            rows = [[imgs[c][r] for c in range(blk.dim)] for r in range(target_dim)]
            out = kernel_basis(rows)
    cache[ck] = out
    return out


def string_decompose(carrier: QuotientCarrier, i, u) -> list:
    """Components (u_0, ..., u_N) with raise_i u_n = 0 and u = sum lower_i^{(n)} u_n.

    Each u_n is an element of block key - n*step(i), or None when zero.
    """
    key, vec = u
    if not any(vec):
        return []
    top = key[carrier.step(i)]
    columns, labels = [], []
    for n in range(top + 1):
        kn = carrier.shift_key(key, i, -n)
        for k in raise_kernel(carrier, i, kn):
            img = carrier.lower_divided(i, n, (kn, k))
            columns.append(img[1])
            labels.append((n, kn, k))
    if not columns:
        raise DecompositionError(f"no i={i} string candidates in block {key}")
    rows = [[col[r] for col in columns] for r in range(len(vec))]
    try:
        res = solve_linear(rows, vec, kernel=True)
    except InconsistentSystemError:
        raise DecompositionError(f"i={i} strings do not span block {key}") from None
    if not res.unique:
        raise DecompositionError(f"i={i} string decomposition in block {key} is not unique")
    comps: dict = {}
    for x, (n, kn, k) in zip(res.solution, labels):
        if not x:
            continue
        cur = comps.get(n)
        scaled = [x * y if y else y for y in k]
        comps[n] = (kn, scaled) if cur is None else (kn, [a + b for a, b in zip(cur[1], scaled)])
    length = max(comps, default=-1) + 1
    return [comps.get(n) for n in range(length)]


def _accumulate(acc, elem):
    if acc is None:
        return elem
    return (acc[0], [a + b for a, b in zip(acc[1], elem[1])])


def Ftilde(carrier: QuotientCarrier, i, u):
    """sum_n lower_i^{(n+1)} u_n."""
    out = None
    for n, un in enumerate(string_decompose(carrier, i, u)):
        if un is not None:
            out = _accumulate(out, carrier.lower_divided(i, n + 1, un))
    if out is None:
        key = carrier.shift_key(u[0], i)
        carrier.ensure_level(sum(key))
        return (key, [ZERO] * carrier.dim(key))
    return out


def Etilde(carrier: QuotientCarrier, i, u):
    """sum_{n>=1} lower_i^{(n-1)} u_n, or None when this vanishes."""
    out = None
    for n, un in enumerate(string_decompose(carrier, i, u)):
        if n >= 1 and un is not None:
            out = _accumulate(out, carrier.lower_divided(i, n - 1, un))
    if out is None or not any(out[1]):
        return None
    return out


def Ftilde_word(carrier: QuotientCarrier, word, u=None):
    """F~_{i1} ... F~_{ik} u (rightmost letter first); u defaults to the vacuum."""
    u = carrier.vacuum() if u is None else u
    for i in reversed(tuple(word)):
        u = Ftilde(carrier, i, u)
    return u
