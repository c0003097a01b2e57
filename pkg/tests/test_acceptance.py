"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line with its wall
time, then asserts both the result and the time budget.  Run alone with
``pytest tests/test_acceptance.py -v``.
"""

import time
from itertools import product

import pytest

from symcrys.cli import main
from symcrys.crystal.globalbasis import all_global_bases, dim_formula_eval
from symcrys.crystal.graph import build_graph
from symcrys.crystal.strings import Ftilde_word
from symcrys.heckeb import HeckeConfig, intertwiner_sample, verify_intertwiners, verify_relations
from symcrys.rootdata import lambda_zero, make_odd_window
from symcrys.scalars import PoleError
from symcrys.suites import check_psi, check_qboson, check_serre, check_v_form, check_v_relation
from symcrys.uqminus import UqMinusCarrier, binfty_graph, weight_basis
from symcrys.vtheta import VThetaCarrier


def _report(capsys, n, title, ok, elapsed, limit, detail=""):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    with capsys.disabled():
        print(f"\nACCEPTANCE {n:2d} {status} {title} ({elapsed:.2f}s, limit {limit}s){' ' + detail if detail else ''}")
    assert ok, detail
    assert elapsed < limit, f"took {elapsed:.1f}s"


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def test_criterion_01_q_boson(capsys):
    rd = make_odd_window(5)
    res, dt = _timed(lambda: check_qboson(rd, samples=200, max_len=5, seed=1))
    _report(capsys, 1, "q-boson identity, radius 5", res["status"] == "pass" and res["cases"] >= 200, dt, 10,
            f"{res['cases']} cases")


def test_criterion_02_serre(capsys):
    rd = make_odd_window(3)
    res, dt = _timed(lambda: check_serre(rd))
    _report(capsys, 2, "Serre radical, radius 3", res["status"] == "pass", dt, 5, f"{res['cases']} pairings")


def test_criterion_03_binfty_counts(capsys):
    rd = make_odd_window(3).restrict([1, 3])

    def job():
        g = binfty_graph(rd, 5)
        carrier = UqMinusCarrier(rd)
        bad = []
        for key, n in g.counts_by_block().items():
            d = weight_basis(carrier.weight_of_key(key), rd).dim
            if d != n:
                bad.append((key, n, d))
        # every weight up to height 5 must be reached
        expected = {(a, h - a) for h in range(6) for a in range(h + 1)}
        missing = expected - set(g.counts_by_block())
        return g.ok and not bad and not missing, f"{len(g.nodes)} nodes, mismatches {bad}, missing {sorted(missing)}"

    (ok, detail), dt = _timed(job)
    _report(capsys, 3, "B(infinity) node counts = Gram ranks, rank-2 window, height 5", ok, dt, 120, detail)


def test_criterion_04_figure_one(capsys):
    def job():
        g = build_graph(VThetaCarrier(make_odd_window(3), lambda_zero()), 4)
        a = g.follow((1,))
        single = a == g.follow((-1,))
        b, c = g.follow((1, 1)), g.follow((-1, 1))
        branch = b != c
        d, e = g.successor(b, 1), g.successor(c, 1)
        paired = d == g.successor(b, -1) and e == g.successor(c, -1) and d != e
        branch3 = g.successor(d, 1) != g.successor(d, -1) and g.successor(e, 1) != g.successor(e, -1)
        level4 = {g.successor(x, s) for x in (d, e) for s in (1, -1)}
        remerge = len(level4) == 3
        ok = single and branch and paired and branch3 and remerge and g.ok
        return ok, f"single={single} branch={branch} paired={paired} branch3={branch3} remerge={remerge}"

    (ok, detail), dt = _timed(job)
    _report(capsys, 4, "first figure: +-1 subgraph to depth 4", ok, dt, 120, detail)


def test_criterion_05_figure_two(capsys):
    def job():
        c = VThetaCarrier(make_odd_window(3), lambda_zero())
        return all(Ftilde_word(c, (3,) * k) == Ftilde_word(c, (-3,) + (3,) * (k - 1)) for k in (1, 2, 3))

    ok, dt = _timed(job)
    _report(capsys, 5, "second figure: paired +-3 chain, k = 1..3", ok, dt, 60)


def test_criterion_06_main_theorem_desk_check(capsys):
    def job():
        c = VThetaCarrier(make_odd_window(3), lambda_zero())
        g = build_graph(c, 3)
        blocks = all_global_bases(c, g)
        entries = list(g.report) + [r for b in blocks for r in b.report]
        fails = [r for r in entries if r["status"] != "pass"]
        names = {r["check"] for r in entries}
        needed = {"etilde-lattice-stable", "etilde-inverts-ftilde", "global-basis-exists", "lower-bar-invariant",
                  "lower-lifts-crystal", "lower-spans-block", "upper-is-dual", "lower-unique"}
        return not fails and needed <= names, f"{len(blocks)} blocks, {len(entries)} checks, failures {fails[:2]}"

    (ok, detail), dt = _timed(job)
    _report(capsys, 6, "crystal and global basis of V_theta(0), depth 3", ok, dt, 300, detail)


def test_criterion_07_v_relations(capsys):
    def job():
        rd, lam = make_odd_window(3), lambda_zero()
        res = [check_v_relation(rd, lam, 200, 4, 4), check_v_form(rd, lam, 200, 3, 5), check_psi(rd, lam, 4)]
        ok = all(r["status"] == "pass" for r in res) and res[0]["cases"] >= 200 and res[1]["cases"] >= 200
        return ok, ", ".join(f"{r['check']} {r['cases']}" for r in res)

    (ok, detail), dt = _timed(job)
    _report(capsys, 7, "V_theta relation suite and psi cross-check", ok, dt, 120, detail)


def test_criterion_08_hecke(capsys):
    def job():
        entries = []
        for n in (2, 3):
            cfg = HeckeConfig(n)
            entries += verify_relations(cfg, 2)
            entries += verify_intertwiners(cfg, intertwiner_sample(n, 50))
        fails = [e for e in entries if e["status"] != "pass"]
        return not fails, f"{len(entries)} relations, failures {fails[:2]}"

    (ok, detail), dt = _timed(job)
    _report(capsys, 8, "Hecke relations on [-2,2]^n, n = 2, 3, and intertwiners", ok, dt, 120, detail)


def test_criterion_09_dimension_formula(capsys):
    def job():
        c = VThetaCarrier(make_odd_window(3), lambda_zero())
        g = build_graph(c, 3)
        blocks = all_global_bases(c, g)
        lvl1 = next(b for b in blocks if b.key == (0, 1))
        node = lvl1.nodes[0]
        values = [dim_formula_eval(c, lvl1, node, (a,)) for a in (1, -1)]
        poles = 0
        for b in blocks:
            words = [w for w in product(c.letters, repeat=sum(b.key)) if c.word_key(w) == b.key]
            for nid in b.nodes:
                for w in words:
                    try:
                        dim_formula_eval(c, b, nid, w)
                    except PoleError:
                        poles += 1
        return values == [1, 1] and poles == 0, f"values {[str(v) for v in values]}, poles {poles}"

    (ok, detail), dt = _timed(job)
    _report(capsys, 9, "dimension formula at q=1", ok, dt, 60, detail)


def test_criterion_10_determinism(capsys, tmp_path):
    def job():
        outs = []
        for k in range(2):
            for fmt in ("dot", "json"):
                dest = tmp_path / f"run{k}.{fmt}"
                code = main(["--command", "crystal-b", "--radius", "3", "--depth", "4", "--format", fmt,
                             "--out", str(dest)])
                outs.append((code, dest.read_bytes()))
        same = outs[0] == outs[2] and outs[1] == outs[3]
        return same and all(code == 0 for code, _ in outs), f"{len(outs[0][1])} DOT bytes, {len(outs[1][1])} JSON bytes"

    (ok, detail), dt = _timed(job)
    _report(capsys, 10, "byte-identical DOT and JSON across runs", ok, dt, 120, detail)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(pytest.main([__file__, "-v"]))
