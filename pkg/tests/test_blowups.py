import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspcalc.blowups import (
    MoveScript,
    apply_script,
    corner_blow_down,
    corner_blow_up,
    has_rational_dual,
    internal_blow_down,
    internal_blow_up,
    is_toric,
    reduce_ones,
    toric_model_search,
    RATIONAL_DUAL_EXCEPTIONS,
)
from cuspcalc.cycles import charge, min_rotation, monodromy, same_cycle
from cuspcalc.errors import IndexOutOfRange, NotExceptional, NotFound
from cuspcalc.exact_arith import IntMat2


# ---------------------------------------------------------------------------
# single moves
# ---------------------------------------------------------------------------

def test_internal_moves():
    assert internal_blow_up((2, 2), 0).d == (3, 2)
    assert internal_blow_up((3, 1, 2), 1).d == (3, 2, 2)
    assert internal_blow_down((3, 2, 2), 1).d == (3, 1, 2)
    with pytest.raises(IndexOutOfRange):
        internal_blow_up((2, 2), 5)


def test_corner_moves():
    assert corner_blow_up((8,), 0).d == (10, 1)
    assert corner_blow_up((8,), 0, nodal_increment=4).d == (12, 1)
    assert corner_blow_up((5, 2), 0).d == (6, 1, 3)
    assert corner_blow_down((4, 1, 3), 1).d == (3, 2)
    assert corner_blow_down((10, 1), 1).d == (8,)
    with pytest.raises(NotExceptional):
        corner_blow_down((3, 2, 2), 0)


seqs = st.lists(st.integers(-3, 9), min_size=1, max_size=9)


@given(seqs, st.integers(0, 8))
@settings(max_examples=400, deadline=None)
def test_corner_up_down_identity(w, i):
    w = tuple(w)
    i %= len(w)
    up = corner_blow_up(w, i)
    pos = 1 if len(w) == 1 else i + 1
    assert up.d[pos] == 1
    back = corner_blow_down(up, pos)
    assert back.d == w


def test_charge_bookkeeping_1000_random_moves(rng):
    for _ in range(1000):
        n = rng.randint(1, 10)
        w = tuple(rng.randint(-3, 9) for _ in range(n))
        q = charge(w)
        i = rng.randrange(n)
        move = rng.choice(["iu", "id", "cu"])
        if move == "iu":
            assert charge(internal_blow_up(w, i)) == q + 1
        elif move == "id":
            assert charge(internal_blow_down(w, i)) == q - 1
        else:
            assert charge(corner_blow_up(w, i)) == q


# ---------------------------------------------------------------------------
# reduce_ones
# ---------------------------------------------------------------------------

def test_reduce_ones_examples():
    assert reduce_ones((1, 2, 11)).d == (8,)
    assert same_cycle(reduce_ones((1, 7, 10)), (9, 6))
    assert reduce_ones((2, 2, 4)).d == (2, 2, 4)


def _reduce_rightmost(w):
    w = tuple(w)
    while len(w) >= 2 and 1 in w:
        i = len(w) - 1 - w[::-1].index(1)
        w = corner_blow_down(w, i).d
    return w


def test_reduce_ones_order_independent_exhaustive():
    # all words of length <= 5 over [1, 9]; length 6 is sampled below
    from itertools import product

    for n in range(1, 6):
        for w in product(range(1, 10), repeat=n):
            if 1 not in w:
                continue
            a = reduce_ones(w).d
            b = _reduce_rightmost(w)
            assert min_rotation(a) == min_rotation(b), w


def test_reduce_ones_order_independent_length6_sample(rng):
    for _ in range(20000):
        w = tuple(rng.randint(1, 9) for _ in range(6))
        if 1 not in w:
            continue
        assert min_rotation(reduce_ones(w).d) == min_rotation(_reduce_rightmost(w)), w


# ---------------------------------------------------------------------------
# toric recognition and model search
# ---------------------------------------------------------------------------

def test_is_toric_examples():
    assert is_toric((0, -2, 0, 2))
    assert is_toric((-1, -1, -1))
    assert not is_toric((5, 2))
    # charge 0 alone is not enough; the monodromy must close up
    assert monodromy((0, -2, 0, 2)) == IntMat2.identity()


def test_toric_model_search_example3_chain():
    c = (3, 2, 2, 2, 3, 2, 2, 2, 2, 2, 2)
    script = toric_model_search(c, max_corner_ops=0)
    assert script.internal_downs() == 3 == charge(c)
    final = apply_script(c, script)
    assert is_toric(final)
    assert monodromy(final) == IntMat2.identity() and charge(final) == 0


def test_toric_model_search_charge12():
    script = toric_model_search((6, 2, 1, 3), max_corner_ops=0)
    assert script.internal_downs() == 12
    assert is_toric(apply_script((6, 2, 1, 3), script))


def test_toric_model_search_trivial_and_not_found():
    assert toric_model_search((0, -2, 0, 2)).moves == ()
    with pytest.raises(NotFound):
        toric_model_search((5, 2), max_corner_ops=0, max_depth=6)


def test_move_script_json_roundtrip():
    script = toric_model_search((6, 2, 1, 3), max_corner_ops=0)
    again = MoveScript.from_json(script.to_json())
    assert again == script
    assert is_toric(apply_script((6, 2, 1, 3), again))


# ---------------------------------------------------------------------------
# rational dual predicate
# ---------------------------------------------------------------------------

def test_has_rational_dual():
    assert has_rational_dual((9, 6)) is True
    assert has_rational_dual((4, 11)) is False
    assert has_rational_dual((5, 11, 2)) is True
    assert has_rational_dual((30, 2)) is False          # charge 36 > 21
    assert has_rational_dual((3, 3, 3, 3)) is None      # length 4, charge 12
    for w in RATIONAL_DUAL_EXCEPTIONS:
        assert has_rational_dual(w) is False
