"""Cusp cycles and their intrinsic invariants.

A cusp cycle is a cyclic word (d_0, ..., d_{n-1}) of negative
self-intersection numbers: all entries >= 2 and at least one >= 3.  For a
one-component cycle (a nodal curve) the convention is d = 2 - D^2, so the
single-factor matrix [[0,-1],[1,d]] still has the right trace.  General
anticanonical boundary sequences carry no positivity constraint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import AllTwos, NotHyperbolic
from .exact_arith import AbelianInvariants, IntMat2, smith_normal_form

SeqLike = Union["CuspCycle", "AnticanSeq", Sequence[int]]


def seq_of(s: SeqLike) -> tuple[int, ...]:
    """Coerce a cycle, sequence object or plain iterable to a tuple of ints."""
    if isinstance(s, (CuspCycle, AnticanSeq)):
        return s.d
    t = tuple(int(x) for x in s)
    if not t:
        raise ValueError("empty sequence")
    return t


def min_rotation(word: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically minimal rotation of a cyclic word."""
    n = len(word)
    return min(word[i:] + word[:i] for i in range(n))


def same_cycle(a: SeqLike, b: SeqLike, reflection: bool = False) -> bool:
    """Equality of cyclic words up to rotation (and optionally reflection)."""
    wa, wb = seq_of(a), seq_of(b)
    if len(wa) != len(wb):
        return False
    if min_rotation(wa) == min_rotation(wb):
        return True
    return reflection and min_rotation(wa) == min_rotation(wb[::-1])


@dataclass(frozen=True)
class AnticanSeq:
    """Cyclic integer word for a general anticanonical boundary; any entries."""

    d: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", seq_of(self.d))

    def __len__(self) -> int:
        return len(self.d)

    def __iter__(self):
        return iter(self.d)

    def __getitem__(self, i):
        return self.d[i]


@dataclass(frozen=True)
class CuspCycle:
    """Valid cusp cycle, stored in its lexicographically minimal rotation."""

    d: tuple[int, ...]

    def __post_init__(self):
        w = seq_of(self.d)
        if any(x < 2 for x in w):
            raise ValueError(f"cusp cycle entries must be >= 2: {w}")
        if all(x == 2 for x in w):
            raise AllTwos(f"cusp cycle needs an entry >= 3: {w}")
        object.__setattr__(self, "d", min_rotation(w))

    def __len__(self) -> int:
        return len(self.d)

    def __iter__(self):
        return iter(self.d)

    def __getitem__(self, i):
        return self.d[i]

    def display(self) -> tuple[int, ...]:
        """Rotation starting at the first entry >= 3, the usual way to print."""
        w = self.d
        i = next(k for k, x in enumerate(w) if x >= 3)
        return w[i:] + w[:i]


def canonical_form(s: SeqLike, reflection: bool = False) -> AnticanSeq:
    """Minimal rotation; with reflection=True, minimal over both orientations."""
    w = seq_of(s)
    best = min_rotation(w)
    if reflection:
        best = min(best, min_rotation(w[::-1]))
    return AnticanSeq(best)


# ---------------------------------------------------------------------------
# Block form and duality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockForm:
    """Cyclic word split as (a_0+3, 2^{b_0}, ..., a_k+3, 2^{b_k}), a_i, b_i >= 0.

    `start` is the rotation offset applied to the input before splitting, so
    expand() reproduces that rotation of the original word.
    """

    blocks: tuple[tuple[int, int], ...]
    start: int = 0

    def expand(self) -> tuple[int, ...]:
        out: list[int] = []
        for a, b in self.blocks:
            out.append(a + 3)
            out.extend([2] * b)
        return tuple(out)


def blocks(c: SeqLike) -> BlockForm:
    """Split a valid cusp cycle into its block form; raises AllTwos otherwise."""
    w = seq_of(c)
    if all(x == 2 for x in w):
        raise AllTwos(f"no entry >= 3 in {w}")
    if any(x < 2 for x in w):
        raise ValueError(f"not a cusp cycle: {w}")
    start = next(i for i, x in enumerate(w) if x >= 3)
    rot = w[start:] + w[:start]
    out: list[tuple[int, int]] = []
    i = 0
    while i < len(rot):
        a = rot[i] - 3
        j = i + 1
        while j < len(rot) and rot[j] == 2:
            j += 1
        out.append((a, j - i - 1))
        i = j
    return BlockForm(tuple(out), start)


def dual_cycle(c: SeqLike) -> CuspCycle:
    """Dual cusp cycle: swap the block parameters and reverse the block order.

    Blocks (a_0,b_0),...,(a_k,b_k) map to the word
    (b_k+3, 2^{a_k}, ..., b_0+3, 2^{a_0}).  Reversing the block order is what
    makes the map an involution with trace(dual) = trace; applying it twice
    returns the original cycle up to rotation.
    """
    bf = blocks(c)
    out: list[int] = []
    for a, b in reversed(bf.blocks):
        out.append(b + 3)
        out.extend([2] * a)
    return CuspCycle(tuple(out))


# ---------------------------------------------------------------------------
# Charge, monodromy, torsion
# ---------------------------------------------------------------------------


def charge(s: SeqLike) -> int:
    """12 + sum(d_i - 3); zero exactly for toric boundaries."""
    w = seq_of(s)
    return 12 + sum(x - 3 for x in w)


def monodromy(s: SeqLike) -> IntMat2:
    """Product [[0,-1],[1,d_{n-1}]] * ... * [[0,-1],[1,d_0]]; always det 1."""
    m = IntMat2.identity()
    for d in seq_of(s):
        m = IntMat2(0, -1, 1, d) * m
    return m


def trace(s: SeqLike) -> int:
    return monodromy(s).trace


def is_hyperbolic(s: SeqLike) -> bool:
    return abs(trace(s)) > 2


def minimal_period(c: SeqLike) -> int:
    """Smallest k dividing n such that the cyclic shift by k fixes the word."""
    w = seq_of(c)
    n = len(w)
    for k in range(1, n + 1):
        if n % k == 0 and w == w[k:] + w[:k]:
            return k
    return n


def torsion_group(c: SeqLike) -> AbelianInvariants:
    """Torsion of the first homology of the link: cokernel of monodromy - I.

    The order always equals |2 - trace|.
    """
    m = monodromy(c)
    if abs(m.trace) <= 2:
        raise NotHyperbolic(f"sequence {seq_of(c)} has trace {m.trace}")
    return smith_normal_form(m - IntMat2.identity())


def multiplicity(c: SeqLike) -> int:
    """sum(d_i - 2) for cycles of length >= 2, and d - 4 for a nodal curve."""
    w = seq_of(c)
    if len(w) == 1:
        return w[0] - 4
    return sum(x - 2 for x in w)


def embdim(c: SeqLike) -> int:
    """Local embedding dimension: max(3, multiplicity)."""
    return max(3, multiplicity(c))


def lambda_rank(c: SeqLike) -> int:
    """10 + n - s, where s is the length of the dual cycle.

    Can be negative, in which case no negative-definite anticanonical pair
    exists at this rank; the value is reported as computed.
    """
    w = seq_of(c)
    return 10 + len(w) - len(dual_cycle(w))
