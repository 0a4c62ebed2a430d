"""Classification of local complete intersection cusps.

A cusp is lci exactly when it is a hypersurface T(p,q,r) with
x^p + y^q + z^r - xyz = 0, or a codimension-two complete intersection
Pi(p,q,r,s) with x^p + w^r = yz, y^q + z^s = xw.  The combinatorial shadow
used here: multiplicity <= 3 means hypersurface, 4 means complete
intersection, 5 or more means not lci.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .blowups import reduce_ones
from .cycles import CuspCycle, SeqLike, dual_cycle, multiplicity, same_cycle, seq_of
from .errors import AllTwos, Degenerate, InvalidQuadruple, InvalidTriple

HYPERSURFACE = "hypersurface"
COMPLETE_INTERSECTION = "complete_intersection"
NOT_LCI = "not_lci"


@dataclass(frozen=True)
class LciEquation:
    """Normal form of an lci cusp equation: kind 'T' with (p,q,r) or 'Pi'
    with (p,q,r,s), all parameters integers >= 2."""

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind == "T":
            p, q, r = self.params
            if min(p, q, r) < 2:
                raise InvalidTriple(f"parameters must be >= 2: {self.params}")
            if Fraction(1, p) + Fraction(1, q) + Fraction(1, r) >= 1:
                raise InvalidTriple(f"1/{p} + 1/{q} + 1/{r} is not < 1")
        elif self.kind == "Pi":
            p, q, r, s = self.params
            if min(p, q, r, s) < 2:
                raise InvalidQuadruple(f"parameters must be >= 2: {self.params}")
            lhs = (Fraction(1, p) + Fraction(1, r)) * (Fraction(1, q) + Fraction(1, s))
            if lhs >= 1:
                raise InvalidQuadruple(f"(1/{p}+1/{r})(1/{q}+1/{s}) is not < 1")
        else:
            raise ValueError(f"kind must be 'T' or 'Pi', got {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "T":
            p, q, r = self.params
            return f"x^{p}+y^{q}+z^{r}-xyz=0"
        p, q, r, s = self.params
        return f"x^{p}+w^{r}=yz, y^{q}+z^{s}=xw"


def T(p: int, q: int, r: int) -> LciEquation:
    return LciEquation("T", (p, q, r))


def Pi(p: int, q: int, r: int, s: int) -> LciEquation:
    return LciEquation("Pi", (p, q, r, s))


def t_cycle(p: int, q: int, r: int) -> CuspCycle:
    """Resolution cycle of the hypersurface cusp T(p,q,r).

    Computed as the dual of the reduction of (p-1, q-1, r-1): blowing the
    1-entries down yields the cycle of the dual cusp, and duality flips
    back.  The parameter order matters up to reflection of the result.
    """
    T(p, q, r)  # validates the triple
    try:
        reduced = reduce_ones((p - 1, q - 1, r - 1))
        return dual_cycle(reduced)
    except (Degenerate, AllTwos, ValueError) as exc:
        raise InvalidTriple(f"T({p},{q},{r}) does not reduce to a cusp cycle: {exc}")


# Verified equation <-> cycle pairs for the codimension-two case.  No general
# rule is applied: quadruples outside this table give None.
PI_TABLE: dict[tuple[int, int, int, int], tuple[int, ...]] = {
    (2, 2, 2, 3): (8,),
    (2, 3, 4, 6): (4, 3, 2, 3, 2, 2, 2),
}


def pi_cycle(p: int, q: int, r: int, s: int) -> CuspCycle | None:
    """Cycle of Pi(p,q,r,s) from the verified table, or None when unknown."""
    Pi(p, q, r, s)  # validates the quadruple
    hit = PI_TABLE.get((p, q, r, s))
    return CuspCycle(hit) if hit is not None else None


@dataclass(frozen=True)
class LciClass:
    """Classification verdict plus the witnessing equation when one is known."""

    kind: str
    equation: LciEquation | None = None


def is_lci(c: SeqLike) -> bool:
    """Multiplicity at most 4."""
    return multiplicity(c) <= 4


def _hypersurface_witness(c: SeqLike) -> LciEquation | None:
    w = seq_of(c)
    bound = multiplicity(w) + len(w) + 8
    for p, q, r in combinations_with_replacement(range(2, bound + 1), 3):
        # both orderings, since swapping two parameters reflects the cycle
        for triple in ((p, q, r), (p, r, q)):
            try:
                cand = t_cycle(*triple)
            except InvalidTriple:
                continue
            if same_cycle(cand, w):
                return T(*triple)
    return None


def classify(c: SeqLike) -> LciClass:
    """Hypersurface, complete intersection, or not lci, with witness search.

    The multiplicity rule decides the verdict; the bounded witness search
    only attaches an equation.  A missing hypersurface witness within the
    bound leaves the verdict intact with equation None.
    """
    w = seq_of(c)
    CuspCycle(w)  # validates (raises AllTwos on degenerate input)
    m = multiplicity(w)
    if m <= 3:
        return LciClass(HYPERSURFACE, _hypersurface_witness(w))
    if m == 4:
        for params, cyc in PI_TABLE.items():
            if same_cycle(cyc, w):
                return LciClass(COMPLETE_INTERSECTION, Pi(*params))
        return LciClass(COMPLETE_INTERSECTION, None)
    return LciClass(NOT_LCI, None)
