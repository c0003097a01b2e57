"""Command-line front end.

Options come from flags and, optionally, a ``key=value`` config file given
with ``--config``; a flag overrides the file.  Exit status: 0 when every
check passes, 1 on a computation error or a failed check, 2 on a bad
configuration.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from itertools import product
from pathlib import Path

from . import __version__
from .crystal.globalbasis import all_global_bases, dim_formula_eval
from .crystal.graph import build_graph
from .export import export_dot, export_json, fraction_str, graph_document
from .heckeb import HeckeConfig, HeckeConfigError, verify_intertwiners, verify_relations
from .rootdata import (
    DominantWeight,
    RootDatumError,
    lambda_doubled,
    lambda_zero,
    make_from_multiplicative_orbit,
    make_odd_window,
)
from .scalars import PoleError, to_string
from .suites import uq_suite, v_suite
from .uqminus import UqMinusCarrier
from .vtheta import VThetaCarrier

log = logging.getLogger("symcrys")

COMMANDS = ("binfty", "crystal-b", "global-basis", "verify-uq", "verify-vtheta", "verify-hecke", "dim-formula")
KINDS = ("odd-window", "affine", "doubled")
FORMATS = ("dot", "json", "text")

DEFAULTS = {
    "kind": "odd-window",
    "radius": "3",
    "lambda": "zero",
    "depth": "2",
    "format": "json",
    "n": "2",
    "degree": "2",
    "window": "3",
    "samples": "200",
    "seed": "1",
}


class ConfigError(ValueError):
    pass


def read_config_file(path) -> dict:
    """``key = value`` lines; ``#`` starts a comment; keys use flag spelling without dashes."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        k, v = (s.strip() for s in line.split("=", 1))
        out[k.replace("_", "-")] = v
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symcrys", description="Symmetric crystals and type B affine Hecke checks.")
    ap.add_argument("--command", choices=COMMANDS)
    ap.add_argument("--config", help="key=value file; flags win over it")
    ap.add_argument("--kind", choices=KINDS)
    ap.add_argument("--radius", type=int, help="odd window radius")
    ap.add_argument("--ell", type=int, help="order of p1^2 for affine/doubled kinds")
    ap.add_argument("--window", type=int, help="truncation for the doubled kind")
    ap.add_argument("--coincidence", type=int, help="m with p0^2 = p1^(2m) for the doubled kind")
    ap.add_argument("--labels", help="comma-separated sub-window, e.g. 1,3 (binfty only)")
    ap.add_argument("--lambda", dest="lambda_", metavar="LAMBDA", help="zero | doubled | i:v,j:v,...")
    ap.add_argument("--depth", type=int)
    ap.add_argument("--n", type=int, help="Hecke rank")
    ap.add_argument("--degree", type=int, help="Hecke monomial box [-d, d]^n")
    ap.add_argument("--samples", type=int, help="random cases for verify-uq / verify-vtheta")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--out", help="output file (stdout when omitted)")
    ap.add_argument("--format", choices=FORMATS)
    ap.add_argument("--version", action="version", version=f"symcrys {__version__}")
    return ap


def resolve_config(args: argparse.Namespace) -> dict:
    cfg = dict(DEFAULTS)
    if args.config:
        cfg.update(read_config_file(args.config))
    for k, v in vars(args).items():
        if k == "config" or v is None:
            continue
        cfg["lambda" if k == "lambda_" else k] = str(v)
    if cfg.get("command") not in COMMANDS:
        raise ConfigError(f"--command must be one of {', '.join(COMMANDS)}")
    if cfg["kind"] not in KINDS:
        raise ConfigError(f"unknown kind {cfg['kind']!r}")
    if cfg["format"] not in FORMATS:
        raise ConfigError(f"unknown format {cfg['format']!r}")
    for key in ("radius", "depth", "n", "degree", "window", "samples", "seed", "ell", "coincidence"):
        if key in cfg:
            try:
                cfg[key] = int(cfg[key])
            except ValueError:
                raise ConfigError(f"{key} must be an integer") from None
    if cfg["depth"] < 0:
        raise ConfigError("depth must be >= 0")
    return cfg


def make_rootdatum(cfg: dict):
    kind = cfg["kind"]
    if kind == "odd-window":
        rd = make_odd_window(cfg["radius"])
    elif kind == "affine":
        if "ell" not in cfg:
            raise ConfigError("the affine kind needs --ell")
        rd = make_from_multiplicative_orbit("z-orbit", ell=cfg["ell"])
    else:
        rd = make_from_multiplicative_orbit(
            "doubled", ell=cfg.get("ell"), window=cfg["window"], coincidence=cfg.get("coincidence")
        )
    if cfg.get("labels"):
        try:
            labels = [int(x) for x in str(cfg["labels"]).split(",")]
        except ValueError:
            raise ConfigError("labels must be comma-separated integers") from None
        missing = [x for x in labels if x not in rd]
        if missing:
            raise ConfigError(f"labels {missing} are not indices")
        rd = rd.restrict(labels)
    return rd


def make_lambda(cfg: dict, rd) -> DominantWeight:
    raw = str(cfg["lambda"]).strip()
    if raw == "zero":
        return lambda_zero()
    if raw == "doubled":
        return lambda_doubled(rd)
    pairs = {}
    for part in raw.split(","):
        try:
            k, v = part.split(":")
            pairs[int(k)] = int(v)
        except ValueError:
            raise ConfigError(f"cannot parse lambda entry {part!r}; expected i:v") from None
    return DominantWeight.from_map(pairs, rd)


def _failed(entries) -> bool:
    return any(e.get("status") != "pass" for e in entries)


def _emit(text: str, cfg: dict):
    if cfg.get("out"):
        Path(cfg["out"]).write_text(text)
    else:
        sys.stdout.write(text)


def _text_report(title: str, entries) -> str:
    lines = [title]
    for e in entries:
        name = e.get("check") or e.get("relation")
        block = f" block {e['block']}" if e.get("block") is not None else ""
        extra = f" [{e['detail']}]" if e.get("detail") else ""
        lines.append(f"  {e['status'].upper():4} {name}{block}{extra}")
    return "\n".join(lines) + "\n"


def _config_echo(cfg: dict) -> dict:
    return {k: v for k, v in cfg.items() if k not in ("out",)}


def _graph_job(cfg, carrier) -> int:
    g = build_graph(carrier, cfg["depth"])
    if cfg["format"] == "dot":
        _emit(export_dot(g), cfg)
    elif cfg["format"] == "json":
        _emit(graph_document(g, _config_echo(cfg)).to_json(), cfg)
    else:
        counts = g.counts_by_block()
        lines = [f"{g.carrier} to depth {g.depth}: {len(g.nodes)} nodes, {len(g.arrows)} arrows"]
        lines += [f"  block {list(k)}: {v}" for k, v in sorted(counts.items(), key=lambda kv: (sum(kv[0]), kv[0]))]
        _emit("\n".join(lines) + "\n" + _text_report("checks", g.report), cfg)
    return 1 if _failed(g.report) else 0


def _global_basis_job(cfg, rd, lam) -> int:
    carrier = VThetaCarrier(rd, lam)
    g = build_graph(carrier, cfg["depth"])
    blocks = all_global_bases(carrier, g)
    report = list(g.report)
    out_blocks = []
    for b in blocks:
        report.extend(b.report)
        out_blocks.append({
            "block": list(b.key),
            "degree": b.degree,
            "nodes": [f"n{i}" for i in b.nodes],
            "lower": [{" ".join(f"{a}^({n})" for a, n in m) or "vac": to_string(c) for m, c in coeffs.items()}
                      for coeffs in b.coefficients],
            "upper": [[to_string(x) for x in v] for v in b.upper],
        })
    doc = {"metadata": {"tool": "symcrys", "version": __version__, "config": _config_echo(cfg)},
           "blocks": out_blocks, "report": report}
    _emit(_text_report("global basis", report) if cfg["format"] == "text" else export_json(doc), cfg)
    return 1 if _failed(report) else 0


def _dim_formula_job(cfg, rd, lam) -> int:
    carrier = VThetaCarrier(rd, lam)
    g = build_graph(carrier, cfg["depth"])
    blocks = all_global_bases(carrier, g)
    rows, report = [], list(g.report)
    for b in blocks:
        report.extend(b.report)
        if not b.upper:
            continue
        level = sum(b.key)
        words = [w for w in product(carrier.letters, repeat=level) if carrier.word_key(w) == b.key]
        for nid in b.nodes:
            for w in words:
                try:
                    val = fraction_str(dim_formula_eval(carrier, b, nid, w))
                except PoleError as exc:
                    report.append({"check": "no-pole-at-1", "block": list(b.key), "status": "fail", "detail": str(exc)})
                    continue
                rows.append({"node": f"n{nid}", "word": list(w), "value": val})
    report.append({"check": "no-pole-at-1", "block": None,
                   "status": "fail" if any(r.get("check") == "no-pole-at-1" for r in report) else "pass", "detail": ""})
    doc = {"metadata": {"tool": "symcrys", "version": __version__, "config": _config_echo(cfg)},
           "values": rows, "report": report}
    _emit(_text_report("dimension formula", report) if cfg["format"] == "text" else export_json(doc), cfg)
    return 1 if _failed(report) else 0


def _report_job(cfg, title, entries) -> int:
    if cfg["format"] == "text":
        _emit(_text_report(title, entries), cfg)
    else:
        doc = {"metadata": {"tool": "symcrys", "version": __version__, "config": _config_echo(cfg)},
               "report": entries}
        _emit(export_json(doc), cfg)
    return 1 if _failed(entries) else 0


def run(cfg: dict) -> int:
    cmd = cfg["command"]
    threads = os.environ.get("SYMCRYS_THREADS")
    if threads:
        log.debug("SYMCRYS_THREADS=%s (computation is single-threaded)", threads)
    if cmd == "verify-hecke":
        try:
            hc = HeckeConfig(cfg["n"])
        except HeckeConfigError as exc:
            raise ConfigError(str(exc)) from None
        entries = verify_relations(hc, cfg["degree"]) + verify_intertwiners(hc)
        return _report_job(cfg, f"Hecke relations, n={hc.n}, d={cfg['degree']}", entries)
    rd = make_rootdatum(cfg)
    if cmd == "binfty":
        return _graph_job(cfg, UqMinusCarrier(rd))
    if cmd == "verify-uq":
        return _report_job(cfg, "U_q^- identities", uq_suite(rd, cfg["samples"], cfg["seed"]))
    if not rd.has_theta:
        raise ConfigError("this command needs a root datum with an involution")
    lam = make_lambda(cfg, rd)
    if cmd == "crystal-b":
        return _graph_job(cfg, VThetaCarrier(rd, lam))
    if cmd == "verify-vtheta":
        return _report_job(cfg, "V_theta identities", v_suite(rd, lam, cfg["samples"], cfg["depth"]))
    if cmd == "global-basis":
        return _global_basis_job(cfg, rd, lam)
    return _dim_formula_job(cfg, rd, lam)


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("SYMCRYS_LOGLEVEL", "WARNING"))
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = resolve_config(args)
        return run(cfg)
    except (ConfigError, RootDatumError, OSError) as exc:
        print(f"symcrys: configuration error: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
