from itertools import combinations_with_replacement

import pytest

from cuspcalc.cycles import dual_cycle, multiplicity, same_cycle, trace
from cuspcalc.errors import AllTwos, InvalidQuadruple, InvalidTriple
from cuspcalc.lci import (
    COMPLETE_INTERSECTION,
    HYPERSURFACE,
    NOT_LCI,
    LciEquation,
    Pi,
    T,
    classify,
    is_lci,
    pi_cycle,
    t_cycle,
)

# the eight verified equation <-> cycle pairs
T_PAIRS = [
    ((3, 3, 5), (5, 2)),
    ((2, 4, 7), (4, 2, 2)),
    ((2, 3, 12), (3, 2, 2, 2, 2, 2)),
    ((2, 8, 11), (3, 2, 2, 2, 3, 2, 2, 2, 2, 2, 2)),
    ((2, 3, 56), (3,) + (2,) * 49),
    ((3, 12, 6), (2, 2, 3) + (2,) * 8 + (4,)),
]
PI_PAIRS = [
    ((2, 2, 2, 3), (8,)),
    ((2, 3, 4, 6), (4, 3, 2, 3, 2, 2, 2)),
]


def test_t_cycle_paper_pairs():
    for params, cyc in T_PAIRS:
        assert same_cycle(t_cycle(*params), cyc), params


def test_pi_cycle_table():
    for params, cyc in PI_PAIRS:
        assert same_cycle(pi_cycle(*params), cyc), params
    assert pi_cycle(3, 3, 3, 3) is None


def test_constraint_boundaries():
    with pytest.raises(InvalidTriple):
        T(2, 3, 6)  # 1/2 + 1/3 + 1/6 = 1 exactly
    with pytest.raises(InvalidTriple):
        T(2, 2, 9)
    with pytest.raises(InvalidTriple):
        t_cycle(3, 3, 1)
    with pytest.raises(InvalidQuadruple):
        Pi(2, 2, 2, 2)  # (1/2+1/2)(1/2+1/2) = 1 exactly
    T(2, 3, 7)
    Pi(2, 2, 2, 3)


def test_equation_pretty_printing():
    assert str(T(2, 8, 11)) == "x^2+y^8+z^11-xyz=0"
    assert str(Pi(2, 3, 4, 6)) == "x^2+w^4=yz, y^3+z^6=xw"


def test_classify_examples():
    res = classify((5, 2))
    assert res.kind == HYPERSURFACE and res.equation == T(3, 3, 5)
    res = classify((4, 3, 2, 3, 2, 2, 2))
    assert res.kind == COMPLETE_INTERSECTION and res.equation == Pi(2, 3, 4, 6)
    assert classify((5, 11, 2)).kind == NOT_LCI
    with pytest.raises(AllTwos):
        classify((2, 2))


def test_classify_recovers_all_t_pairs():
    for params, cyc in T_PAIRS:
        res = classify(cyc)
        assert res.kind == HYPERSURFACE
        assert res.equation is not None
        assert same_cycle(t_cycle(*res.equation.params), cyc), params


def test_is_lci():
    assert not is_lci((2, 3, 4, 6))         # multiplicity 7
    assert is_lci((8,))                      # multiplicity 4
    assert not is_lci((52,))                 # length-1 rule: 48
    assert is_lci((3,) + (2,) * 49)          # multiplicity 1
    assert not is_lci((5, 11, 2))


def test_t_family_duality_properties():
    # every admissible triple up to 12 gives a low-multiplicity cycle whose
    # dual carries the same trace
    for p, q, r in combinations_with_replacement(range(2, 13), 3):
        try:
            c = t_cycle(p, q, r)
        except InvalidTriple:
            continue
        assert multiplicity(c) <= 3, (p, q, r)
        assert trace(dual_cycle(c)) == trace(c), (p, q, r)
