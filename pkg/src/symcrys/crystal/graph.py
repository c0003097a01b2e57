"""Crystal lattices and crystal graphs by breadth-first closure under F~_i."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..scalars.linalg import rank as matrix_rank
from .carrier import DecompositionError, QuotientCarrier
from .lattice import Lattice, NotInLatticeError
from .strings import Etilde, Ftilde


@dataclass
class CrystalNode:
    id: int
    key: tuple
    level: int
    rep: tuple  # lattice coordinates at q=0
    witness: tuple  # F~ word, leftmost letter applied last
    lift: tuple = field(default=None, repr=False, compare=False)

    @property
    def name(self) -> str:
        return f"n{self.id}"


@dataclass
class CrystalGraph:
    carrier: str
    depth: int
    nodes: list = field(default_factory=list)
    arrows: list = field(default_factory=list)  # (source id, color, target id)
    report: list = field(default_factory=list)  # dicts: check, block, status, detail
    lattice: Lattice = field(default=None, repr=False, compare=False)

    def node(self, nid) -> CrystalNode:
        return self.nodes[nid]

    def nodes_in(self, key) -> list:
        return [n for n in self.nodes if n.key == key]

    def successor(self, nid, color):
        for s, c, t in self.arrows:
            if s == nid and c == color:
                return t
        return None

    def follow(self, word):
        """Node reached by the F~ word from the vacuum (rightmost letter first)."""
        nid = 0
        for c in reversed(tuple(word)):
            nid = self.successor(nid, c)
            if nid is None:
                return None
        return nid

    def counts_by_block(self) -> dict:
        out: dict = {}
        for n in self.nodes:
            out[n.key] = out.get(n.key, 0) + 1
        return out

    @property
    def ok(self) -> bool:
        return all(r["status"] == "pass" for r in self.report)

    def failures(self) -> list:
        return [r for r in self.report if r["status"] != "pass"]


def _entry(check, block, ok, detail=""):
    return {"check": check, "block": list(block) if block is not None else None,
            "status": "pass" if ok else "fail", "detail": detail}


def build_lattice(carrier: QuotientCarrier, depth: int) -> Lattice:
    """Lattice generated by all F~ words of length <= depth on the vacuum."""
    lat = Lattice()
    frontier = [carrier.vacuum()]
    lat.insert(frontier[0])
    for _ in range(depth):
        nxt = []
        for key in sorted({e[0] for e in frontier}):
            rows = lat.blocks[key].matrix()
            for r in rows:
                for i in carrier.letters:
                    img = Ftilde(carrier, i, (key, r))
                    lat.insert(img)
                    nxt.append(img)
        frontier = nxt
    return lat


def _is_zero_rep(rep) -> bool:
    return not any(rep)


def build_graph(carrier: QuotientCarrier, depth: int) -> CrystalGraph:
    """BFS from the vacuum; nodes are lattice classes at q=0, arrows are F~_i."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    g = CrystalGraph(carrier.name, depth)
    lat = build_lattice(carrier, depth)
    g.lattice = lat
    vac = carrier.vacuum()
    g.nodes.append(CrystalNode(0, vac[0], 0, lat.reduce_mod_q(vac), (), vac))
    index = {(vac[0], g.nodes[0].rep): 0}
    level_nodes = [0]
    for level in range(1, depth + 1):
        new = []
        for nid in level_nodes:
            src = g.nodes[nid]
            for i in carrier.letters:
                img = Ftilde(carrier, i, src.lift)
                try:
                    rep = lat.reduce_mod_q(img)
                except NotInLatticeError as exc:
                    g.report.append(_entry("ftilde-in-lattice", img[0], False, f"{src.name} color {i}: {exc}"))
                    continue
                if _is_zero_rep(rep):
                    g.report.append(_entry("ftilde-nonzero", img[0], False, f"{src.name} color {i} is 0 mod qL"))
                    continue
                ident = (img[0], rep)
                if ident not in index:
                    node = CrystalNode(len(g.nodes), img[0], level, rep, (i,) + src.witness, img)
                    g.nodes.append(node)
                    index[ident] = node.id
                    new.append(node.id)
                g.arrows.append((nid, i, index[ident]))
        level_nodes = new
    _check_graph(carrier, g, lat)
    return g


def _check_graph(carrier, g: CrystalGraph, lat: Lattice):
    # E~ undoes every arrow
    bad = []
    for s, i, t in g.arrows:
        back = Etilde(carrier, i, g.nodes[t].lift)
        src = g.nodes[s]
        try:
            ok = back is not None and back[0] == src.key and lat.reduce_mod_q(back) == src.rep
        except NotInLatticeError:
            ok = False
        if not ok:
            bad.append(f"n{t} -E{i}-> not n{s}")
    g.report.append(_entry("etilde-inverts-ftilde", None, not bad, "; ".join(bad[:5])))

    # per-block: rank of L, node count, independence of representatives
    for key in sorted(lat.blocks):
        bl = lat.blocks[key]
        level = sum(key)
        if level > g.depth:
            continue
        dim = carrier.dim(key)
        g.report.append(_entry("lattice-full-rank", key, bl.rank == dim, f"rank {bl.rank}, dim {dim}"))
        reps = [list(n.rep) for n in g.nodes_in(key)]
        r = matrix_rank([[Fraction(x) for x in rep] for rep in reps]) if reps else 0
        g.report.append(
            _entry("nodes-form-basis", key, len(reps) == dim and r == dim, f"{len(reps)} nodes, rank {r}, dim {dim}")
        )

    # E~ stability of the lattice rows, one level down
    for key in sorted(lat.blocks):
        level = sum(key)
        if level == 0 or level > g.depth:
            continue
        problems = []
        for row in lat.blocks[key].matrix():
            for i in carrier.letters:
                if carrier.shift_key(key, i, -1) is None:
                    continue
                try:
                    img = Etilde(carrier, i, (key, row))
                except DecompositionError as exc:
                    problems.append(str(exc))
                    continue
                if img is not None and not lat.contains(img):
                    problems.append(f"E~_{i} leaves the lattice")
        g.report.append(_entry("etilde-lattice-stable", key, not problems, "; ".join(problems[:3])))

    # bar well-definedness on every block reached
    for key in sorted(lat.blocks):
        if sum(key) <= g.depth:
            ok = carrier.radical_is_bar_stable(key)
            g.report.append(_entry("bar-preserves-radical", key, ok, ""))
