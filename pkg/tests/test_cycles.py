import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspcalc.covers import dual_class_of_matrix
from cuspcalc.cycles import (
    AnticanSeq,
    CuspCycle,
    blocks,
    canonical_form,
    charge,
    dual_cycle,
    embdim,
    is_hyperbolic,
    lambda_rank,
    minimal_period,
    monodromy,
    multiplicity,
    same_cycle,
    torsion_group,
    trace,
)
from cuspcalc.errors import AllTwos, NotHyperbolic
from cuspcalc.exact_arith import IntMat2

from conftest import cycle_corpus

CORPUS = cycle_corpus(seed=3, count=1000, max_len=12, max_entry=12)


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

def test_canonical_form_examples():
    assert canonical_form([2, 5]).d == (2, 5)
    assert canonical_form([5, 2]).d == (2, 5)
    w = (3, 2, 2, 4, 2, 2, 2, 2, 2, 2, 2, 2)
    # oracle: minimum over all twelve rotations
    expected = min(w[i:] + w[:i] for i in range(12))
    assert canonical_form(w).d == expected == (2, 2, 2, 2, 2, 2, 2, 2, 3, 2, 2, 4)


def test_canonical_form_reflection_flag():
    assert canonical_form([2, 3, 4]).d == (2, 3, 4)
    assert canonical_form([4, 3, 2]).d == (2, 4, 3)
    assert canonical_form([4, 3, 2], reflection=True).d == (2, 3, 4)
    assert same_cycle([2, 3, 4], [4, 3, 2]) is False
    assert same_cycle([2, 3, 4], [4, 3, 2], reflection=True) is True


def test_cusp_cycle_validation():
    assert CuspCycle((5, 2)).d == (2, 5)
    assert CuspCycle((5, 2)).display() == (5, 2)
    with pytest.raises(AllTwos):
        CuspCycle((2, 2))
    with pytest.raises(ValueError):
        CuspCycle((3, 1))


# ---------------------------------------------------------------------------
# blocks and duality
# ---------------------------------------------------------------------------

def test_blocks_examples():
    assert blocks((5, 2)).blocks == ((2, 1),)
    assert blocks((9, 6)).blocks == ((6, 0), (3, 0))
    with pytest.raises(AllTwos):
        blocks((2, 2))


@given(st.lists(st.integers(2, 9), min_size=1, max_size=12))
@settings(max_examples=300, deadline=None)
def test_blocks_expand_roundtrip(w):
    if all(x == 2 for x in w):
        w[0] = 3
    bf = blocks(tuple(w))
    assert same_cycle(bf.expand(), tuple(w))


def test_dual_examples():
    assert same_cycle(dual_cycle((5, 2)), (4, 2, 2))
    assert same_cycle(dual_cycle((52,)), (3,) + (2,) * 49)
    assert same_cycle(dual_cycle((9, 6)), (3, 2, 2, 2, 3, 2, 2, 2, 2, 2, 2))
    for t in range(3, 61):
        assert same_cycle(dual_cycle((t,)), (3,) + (2,) * (t - 3))


def test_dual_multi_block_order():
    # three asymmetric blocks: the block order must be reversed for the
    # dual to carry the same trace
    c = (4, 3, 2, 3, 2, 2, 2)
    d = dual_cycle(c)
    assert same_cycle(d, (6, 4, 3, 2))
    assert trace(d) == trace(c) == 92
    assert same_cycle(dual_cycle(d), c)


def test_dual_properties_on_corpus():
    for w in CORPUS:
        d = dual_cycle(w)
        assert same_cycle(dual_cycle(d), w), w            # involution
        assert charge(w) + charge(d) == 24, w             # charge pairing
        assert trace(d) == trace(w), w                    # trace invariance
        assert torsion_group(d).factors == torsion_group(w).factors, w


def test_dual_matches_fixed_point_oracle():
    # independent oracle: the expansion at the second fixed point of the
    # monodromy is the dual class, orientation included
    for w in cycle_corpus(seed=5, count=200, max_len=9, max_entry=8):
        assert dual_cycle(w).d == dual_class_of_matrix(monodromy(w)).d, w


# ---------------------------------------------------------------------------
# charge / monodromy / trace
# ---------------------------------------------------------------------------

def test_charge_examples():
    assert charge((9, 6)) == 21
    assert charge((0, -2, 0, 2)) == 0
    assert charge((5, 2)) == 13 and charge((4, 2, 2)) == 11


def test_monodromy_examples():
    assert monodromy((3, 2, 2, 2, 3, 2, 2, 2, 2, 2, 2)) == IntMat2(-34, -75, 39, 86)
    assert monodromy((7,)) == IntMat2(0, -1, 1, 7)
    assert monodromy((5, 2)) == IntMat2(-1, -5, 2, 9)


def test_monodromy_det_one_on_corpus():
    for w in CORPUS[:300]:
        assert monodromy(w).det == 1


def test_trace_examples():
    assert trace((3, 2, 2, 2, 3, 2, 2, 2, 2, 2, 2)) == 52
    assert trace((5, 11, 2)) == 92
    for k in range(1, 13):
        assert trace((2,) * k) == 2
        assert not is_hyperbolic((2,) * k)


# ---------------------------------------------------------------------------
# minimal period, torsion, multiplicity, rank
# ---------------------------------------------------------------------------

def test_minimal_period():
    assert minimal_period((5, 2)) == 2
    assert minimal_period((3, 2, 3, 2)) == 2
    assert minimal_period((5, 2, 5, 2, 5, 2)) == 2
    assert minimal_period((5, 2, 2)) == 3


def test_torsion_examples():
    assert torsion_group((5, 2)).factors == (6,)
    assert torsion_group((2, 2, 3, 2, 2, 2, 2, 2, 2, 2, 2, 4)).factors == (3, 30)
    assert torsion_group((52,)).factors == (50,)
    with pytest.raises(NotHyperbolic):
        torsion_group((2, 2, 2))


def test_torsion_order_matches_trace_on_corpus():
    for w in CORPUS[:400]:
        assert torsion_group(w).order == abs(2 - trace(w))


def test_multiplicity_and_embdim():
    assert multiplicity((5, 2)) == 3 and embdim((5, 2)) == 3
    assert multiplicity((4, 3, 2, 3, 2, 2, 2)) == 4
    assert multiplicity((5, 11, 2)) == 12
    assert multiplicity((8,)) == 4
    assert multiplicity((52,)) == 48
    assert embdim((3, 2, 2)) == 3


def test_lambda_rank():
    assert lambda_rank((5, 2)) == 9
    assert lambda_rank((52,)) == -39
    assert lambda_rank((9, 6)) == 1
