import pytest
from hypothesis import given
from hypothesis import strategies as st

from symcrys.crystal.graph import build_graph
from symcrys.rootdata import (
    DominantWeight,
    RootDatumError,
    Weight,
    disjoint_union,
    lambda_doubled,
    lambda_zero,
    make_from_multiplicative_orbit,
    make_odd_window,
    symmetrize,
)
from symcrys.vtheta import VThetaCarrier


def test_radius_one(rd1):
    assert rd1.indices == (-1, 1)
    assert rd1.pair(1, -1) == -1
    assert rd1.pair(1, 1) == 2
    assert rd1.th(1) == -1 and rd1.th(-1) == 1


def test_radius_three_is_a_path(rd3):
    assert len(rd3.indices) == 4
    edges = {(i, j) for i in rd3.indices for j in rd3.indices if i < j and rd3.pair(i, j)}
    assert edges == {(-3, -1), (-1, 1), (1, 3)}
    assert all(rd3.pair(i, j) == -1 for i, j in edges)


@pytest.mark.parametrize("radius", [0, 2, 4, -1])
def test_bad_radius_rejected(radius):
    with pytest.raises(RootDatumError):
        make_odd_window(radius)


def test_unwindowed_orbit_is_the_odd_window(rd3):
    assert make_from_multiplicative_orbit("z-orbit", window=3) == rd3


def test_affine_three_cycle():
    rd = make_from_multiplicative_orbit("z-orbit", ell=3, involution=False)
    assert len(rd.indices) == 3
    for i in rd.indices:
        assert len(rd.neighbors(i)) == 2
    # with an involution the vertex p1^3 = -1 would be fixed
    with pytest.raises(RootDatumError):
        make_from_multiplicative_orbit("z-orbit", ell=3)


def test_affine_even_cycle_has_free_involution():
    rd = make_from_multiplicative_orbit("z-orbit", ell=4)
    assert len(rd.indices) == 4
    assert all(rd.th(i) != i for i in rd.indices)


def test_doubled_even_coincidence_rejected():
    with pytest.raises(RootDatumError):
        make_from_multiplicative_orbit("doubled", coincidence=2)
    make_from_multiplicative_orbit("doubled", coincidence=3)


def test_doubled_chains_marked_pair():
    rd = make_from_multiplicative_orbit("doubled", window=1)
    a, b = rd.marked
    assert rd.th(a) == b
    lam = lambda_doubled(rd)
    assert lam(a) == lam(b) == 1


def test_symmetrize_examples(rd3):
    # one unit on the orbit {-1, 1}: the class of alpha_1 + alpha_-1
    assert rd3.orbits() == [(-3, 3), (-1, 1)]
    assert symmetrize(Weight.simple(1), rd3).counts == (0, 1)
    assert symmetrize(Weight.from_map({1: 1, -1: -1}), rd3).is_zero()
    assert symmetrize(Weight.simple(3), rd3) == symmetrize(Weight.simple(-3), rd3)


def test_lambda_must_be_theta_invariant(rd3):
    with pytest.raises(RootDatumError, match="index -1"):
        DominantWeight.from_map({1: 1}, rd3)
    with pytest.raises(RootDatumError):
        DominantWeight.from_map({1: -1, -1: -1}, rd3)
    assert DominantWeight.from_map({1: 2, -1: 2}, rd3)(1) == 2


def test_disjoint_union_pairs_nothing_across(rd1):
    u = disjoint_union(rd1, rd1, 10)
    assert u.indices == (-1, 1, 9, 11)
    assert u.pair(1, 9) == 0 and u.pair(9, 11) == -1
    assert u.th(9) == 11


@given(st.integers(0, 3).map(lambda k: 2 * k + 1), st.data())
def test_theta_is_an_isometry(radius, data):
    rd = make_odd_window(radius)
    i = data.draw(st.sampled_from(rd.indices))
    j = data.draw(st.sampled_from(rd.indices))
    assert rd.pair(rd.th(i), rd.th(j)) == rd.pair(i, j)
    assert rd.th(rd.th(i)) == i


def _counts_by_letters(rd, g):
    """Node counts keyed by orbit -> count, so windows of different size compare."""
    orbits = rd.orbits()
    out = {}
    for key, n in g.counts_by_block().items():
        out[frozenset((orbits[o], c) for o, c in enumerate(key) if c)] = n
    return out


def test_window_consistency(rd3):
    big = make_odd_window(5)
    small = _counts_by_letters(rd3, build_graph(VThetaCarrier(rd3, lambda_zero()), 3))
    large = _counts_by_letters(big, build_graph(VThetaCarrier(big, lambda_zero()), 3))
    for key, n in small.items():
        assert large[key] == n
