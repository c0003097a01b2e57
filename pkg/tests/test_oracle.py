"""Live cross-check against the independent sympy oracle in tests/oracles/."""

import sys
from pathlib import Path

import pytest

sp = pytest.importorskip("sympy")
sys.path.insert(0, str(Path(__file__).parent / "oracles"))
import derive_values as oracle  # noqa: E402

from symcrys.rootdata import lambda_zero, make_odd_window  # noqa: E402
from symcrys.scalars import to_string  # noqa: E402
from symcrys.uqminus import FreeElement, kashiwara_form  # noqa: E402
from symcrys.vtheta import VElement, v_form  # noqa: E402

RD3 = make_odd_window(3)


def _value(x, at):
    return x.evaluate(at)


@pytest.mark.parametrize("w1, w2", [((1, 1, 3), (3, 1, 1)), ((1, 3, -1), (-1, 3, 1)), ((3, 1, 3, 1), (1, 3, 3, 1))])
def test_kashiwara_form_against_oracle(w1, w2):
    ours = kashiwara_form(RD3, FreeElement.word(w1), FreeElement.word(w2))
    theirs = oracle.form(w1, w2)
    for at in (sp.Rational(3, 7), sp.Rational(-5, 2)):
        assert _value(ours, at) == theirs.subs(oracle.q, at), to_string(ours)


@pytest.mark.parametrize("w1, w2", [((1, -1), (-1, 1)), ((3, 1, -1), (-1, 1, -3)), ((1, 1, -3), (-3, -1, -1))])
def test_v_form_against_oracle(w1, w2):
    ours = v_form(VElement.word(RD3, w1), VElement.word(RD3, w2), lambda_zero())
    theirs = oracle.vform(w1, w2, {})
    for at in (sp.Rational(3, 7), sp.Rational(-5, 2)):
        assert _value(ours, at) == theirs.subs(oracle.q, at)
