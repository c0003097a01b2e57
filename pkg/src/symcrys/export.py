"""DOT and JSON serialization of crystal graphs and reports."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .crystal.graph import CrystalGraph

# renderer-friendly edge colours; the crystal colour itself is the edge label
_PALETTE = ["black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan4", "magenta", "gray40"]


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def witness_label(word) -> str:
    if not word:
        return "vac"
    return " ".join(str(a) for a in word)


@dataclass
class GraphDocument:
    metadata: dict = field(default_factory=dict)
    nodes: list = field(default_factory=list)  # dicts: id, block, level, witness, rep
    arrows: list = field(default_factory=list)  # dicts: source, color, target
    report: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "GraphDocument":
        data = json.loads(text)
        return cls(data["metadata"], data["nodes"], data["arrows"], data["report"])


def graph_document(g: CrystalGraph, config: dict | None = None) -> GraphDocument:
    meta = {"tool": "symcrys", "version": __version__, "carrier": g.carrier, "depth": g.depth,
            "config": dict(sorted((config or {}).items()))}
    nodes = [
        {"id": n.name, "block": list(n.key), "level": n.level, "witness": list(n.witness),
         "rep": [fraction_str(x) for x in n.rep]}
        for n in sorted(g.nodes, key=lambda n: n.id)
    ]
    arrows = [{"source": f"n{s}", "color": c, "target": f"n{t}"} for s, c, t in _sorted_arrows(g)]
    return GraphDocument(meta, nodes, arrows, list(g.report))


def _sorted_arrows(g: CrystalGraph) -> list:
    return sorted(g.arrows, key=lambda a: (a[0], a[1], a[2]))


def export_dot(g: CrystalGraph) -> str:
    colors = sorted({c for _, c, _ in g.arrows})
    pal = {c: _PALETTE[k % len(_PALETTE)] for k, c in enumerate(colors)}
    lines = [f"digraph {g.carrier} {{", "  rankdir=LR;"]
    for n in sorted(g.nodes, key=lambda n: n.id):
        lines.append(f'  {n.name} [label="{witness_label(n.witness)}"];')
    for s, c, t in _sorted_arrows(g):
        lines.append(f'  n{s} -> n{t} [label="{c}", color="{pal[c]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(obj) -> str:
    if isinstance(obj, CrystalGraph):
        return graph_document(obj).to_json()
    if isinstance(obj, GraphDocument):
        return obj.to_json()
    return json.dumps(obj, sort_keys=True, indent=2, default=_default) + "\n"


def _default(x):
    if isinstance(x, Fraction):
        return fraction_str(x)
    if isinstance(x, tuple):
        return list(x)
    return str(x)


def parse_dot_edges(text: str) -> list:
    """(source, label, target) triples from DOT produced by :func:`export_dot`."""
    import re

    out = []
    for m in re.finditer(r'^\s*(n\d+) -> (n\d+) \[label="(-?\d+)"', text, re.M):
        out.append((m.group(1), int(m.group(3)), m.group(2)))
    return out
