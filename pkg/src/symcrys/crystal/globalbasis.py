"""Lower and upper global bases on one block, by a finite linear search.

The A-form of a block is spanned by divided-power monomials
lower_{i1}^{(a1)} ... lower_{ik}^{(ak)} vac, which are bar-invariant.  A
bar-invariant element of the A-form is therefore sum_j c_j m_j with each c_j
a bar-symmetric Laurent polynomial.  Requiring G(b) = b mod qL is linear in
the coefficients of the c_j (over Q), so for a degree bound D we solve one
rational linear system; D grows until the system is solvable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby, product

from ..scalars import ONE, ZERO, RatFunc, q_pow
from ..scalars.linalg import InconsistentSystemError, inverse, solve_linear
from ..scalars.linalg import rank as matrix_rank
from .carrier import QuotientCarrier
from .graph import CrystalGraph
from .lattice import NotInLatticeError


class GlobalBasisError(ArithmeticError):
    """No solution within the degree bound, or the solution is not unique."""


@dataclass
class GlobalBasisBlock:
    key: tuple
    nodes: list  # node ids, in graph order
    lower: list = field(default_factory=list)  # pivot-frame vectors G^low(b)
    upper: list = field(default_factory=list)  # pivot-frame vectors G^up(b)
    coefficients: list = field(default_factory=list)  # per node: {monomial: RatFunc}
    lattice_coords: list = field(default_factory=list)  # G^low(b) in the lattice frame
    degree: int = 0
    unique: bool = True
    report: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["status"] == "pass" for r in self.report)


def divided_monomials(carrier: QuotientCarrier, key) -> list:
    """Run-length forms ((i, a), ...) of all words in the block, deduplicated, sorted."""
    level = sum(key)
    seen = set()
    out = []
    for w in product(carrier.letters, repeat=level):
        if carrier.word_key(w) != key:
            continue
        runs = tuple((a, len(list(g))) for a, g in groupby(w))
        if runs not in seen:
            seen.add(runs)
            out.append(runs)
    out.sort(key=lambda r: tuple((carrier._pos[a], -n) for a, n in r))
    return out


def monomial_element(carrier: QuotientCarrier, runs):
    elem = carrier.vacuum()
    for a, n in reversed(runs):
        elem = carrier.lower_divided(a, n, elem)
    return elem


def _sym(e: int) -> RatFunc:
    return ONE if e == 0 else q_pow(e) + q_pow(-e)


def _entry(check, key, ok, detail=""):
    return {"check": check, "block": list(key), "status": "pass" if ok else "fail", "detail": detail}


def global_basis(carrier: QuotientCarrier, graph: CrystalGraph, key, max_degree: int = 12) -> GlobalBasisBlock:
    """Solve for G^low(b), b in the block's nodes, then dualize for G^up."""
    lat = graph.lattice
    nodes = graph.nodes_in(key)
    gb = GlobalBasisBlock(key, [n.id for n in nodes])
    dim = carrier.dim(key)
    if not nodes:
        return gb
    if sum(key) == 0:
        gb.lower = [[ONE]]
        gb.upper = [[ONE]]
        gb.coefficients = [{(): ONE}]
        gb.lattice_coords = [lat.blocks[key].coordinates([ONE])]
        gb.report.extend(check_balanced(carrier, graph, gb))
        return gb

    bl = lat.blocks[key]
    monos = divided_monomials(carrier, key)
    mvec = [monomial_element(carrier, m)[1] for m in monos]
    mu = [bl.coordinates(v) for v in mvec]  # lattice coordinates of each monomial
    m = bl.rank
    lows = [min((x.order_at_zero() for x in col if x), default=0) for col in zip(*mu)] if mu else []

    solution = None
    for D in range(0, max_degree + 1):
        unknowns = [(j, e) for j in range(len(monos)) for e in range(D + 1)]
        rows, labels = [], []
        for r in range(m):
            tmin = min(lows[r] - D, 0)
            series = [x.series(D) if x else {} for x in (mu[j][r] for j in range(len(monos)))]
            for t in range(tmin, 1):
                row = []
                for j, e in unknowns:
                    s = series[j]
                    v = s.get(t - e, Fraction(0))
                    if e:
                        v += s.get(t + e, Fraction(0))
                    row.append(v)
                rows.append(row)
                labels.append((r, t))
        rhs = [[n.rep[r] if t == 0 else Fraction(0) for r, t in labels] for n in nodes]
        try:
            res = solve_linear(rows, rhs=rhs, kernel=True, zero=Fraction(0))
        except InconsistentSystemError:
            continue
        solution = (D, unknowns, res)
        break
    if solution is None:
        gb.report.append(_entry("global-basis-exists", key, False, f"no solution with degree <= {max_degree}"))
        return gb
    D, unknowns, res = solution
    gb.degree = D

    def assemble(xs):
        coeff = {}
        for (j, e), x in zip(unknowns, xs):
            if x:
                coeff[j] = coeff.get(j, ZERO) + _sym(e) * RatFunc(x)
        vec = [ZERO] * dim
        for j, c in coeff.items():
            vec = [a + c * b if b else a for a, b in zip(vec, mvec[j])]
        return coeff, vec

    for xs in res.solutions:
        coeff, vec = assemble(xs)
        gb.coefficients.append({monos[j]: c for j, c in sorted(coeff.items())})
        gb.lower.append(vec)
        gb.lattice_coords.append(bl.coordinates(vec))
    # kernel directions must all give the zero element
    gb.unique = all(not any(assemble(k)[1]) for k in res.kernel)
    gb.report.append(_entry("global-basis-exists", key, True, f"degree {D}"))

    gram = [[carrier.form((key, a), (key, b)) for b in gb.lower] for a in gb.lower]
    if matrix_rank(gram) == len(gram):
        ginv = inverse(gram)
        n = len(gb.lower)
        gb.upper = [
            [sum((ginv[a][b] * gb.lower[a][t] for a in range(n) if gb.lower[a][t]), ZERO) for t in range(dim)]
            for b in range(n)
        ]
    gb.report.extend(check_balanced(carrier, graph, gb))
    return gb


def check_balanced(carrier: QuotientCarrier, graph: CrystalGraph, gb: GlobalBasisBlock) -> list:
    """Balanced-triple conditions on one block, as report entries."""
    key = gb.key
    out = []
    dim = carrier.dim(key)
    nodes = [graph.nodes[i] for i in gb.nodes]
    out.append(_entry("crystal-basis-size", key, len(nodes) == dim, f"{len(nodes)} nodes, dim {dim}"))
    r = matrix_rank(gb.lower) if gb.lower else 0
    out.append(_entry("lower-spans-block", key, r == dim, f"rank {r}"))
    bar_ok = all(carrier.bar((key, v))[1] == v for v in gb.lower)
    out.append(_entry("lower-bar-invariant", key, bar_ok))
    modq_ok = True
    for n, v in zip(nodes, gb.lower):
        try:
            modq_ok &= graph.lattice.reduce_mod_q((key, v)) == n.rep
        except NotInLatticeError:
            modq_ok = False
    out.append(_entry("lower-lifts-crystal", key, modq_ok))
    out.append(_entry("lower-unique", key, gb.unique))
    dual_ok = len(gb.upper) == len(gb.lower)
    if dual_ok:
        for a, u in enumerate(gb.lower):
            for b, w in enumerate(gb.upper):
                if carrier.form((key, u), (key, w)) != (ONE if a == b else ZERO):
                    dual_ok = False
    out.append(_entry("upper-is-dual", key, dual_ok))
    return out


def all_global_bases(carrier: QuotientCarrier, graph: CrystalGraph, max_degree: int = 12) -> list:
    keys = sorted({n.key for n in graph.nodes}, key=lambda k: (sum(k), k))
    return [global_basis(carrier, graph, k, max_degree) for k in keys]


def dim_formula_eval(carrier: QuotientCarrier, gb: GlobalBasisBlock, node_id: int, word) -> Fraction:
    """(vac, E_{a1} ... E_{an} G^up(b)) at q=1; E_{an} is applied first."""
    word = tuple(word)
    if len(word) != sum(gb.key):
        raise ValueError("the word length must equal the level of the node")
    idx = gb.nodes.index(node_id)
    elem = (gb.key, gb.upper[idx])
    for a in reversed(word):
        elem = carrier.raise_(a, elem)
        if elem is None or not elem[1]:
            return Fraction(0)
    value = carrier.form(carrier.vacuum(), elem)
    return value.evaluate(1)
