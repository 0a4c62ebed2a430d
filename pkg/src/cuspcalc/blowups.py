"""Sequence-level blow-up calculus on anticanonical boundaries.

Internal blow-ups raise one entry by 1 (charge +1); corner blow-ups insert
a 1 between two raised neighbors (charge fixed).  On a one-component
boundary the corner move is (d) <-> (d+2, 1) in the d = 2 - D^2 convention;
the raw-self-intersection variant (d) <-> (d+4, 1) is available behind the
`nodal_increment` switch.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .cycles import (
    AnticanSeq,
    SeqLike,
    canonical_form,
    charge,
    min_rotation,
    monodromy,
    seq_of,
)
from .errors import (
    Degenerate,
    IndexOutOfRange,
    NotExceptional,
    NotFound,
)
from .exact_arith import IntMat2


def _check_index(w: tuple[int, ...], i: int) -> int:
    if not -len(w) <= i < len(w):
        raise IndexOutOfRange(f"index {i} for length {len(w)}")
    return i % len(w)


def internal_blow_up(s: SeqLike, i: int) -> AnticanSeq:
    """Blow up an interior point of component i: d_i -> d_i + 1."""
    w = seq_of(s)
    i = _check_index(w, i)
    return AnticanSeq(w[:i] + (w[i] + 1,) + w[i + 1:])


def internal_blow_down(s: SeqLike, i: int) -> AnticanSeq:
    """Inverse of internal_blow_up; purely combinatorial, no geometric check."""
    w = seq_of(s)
    i = _check_index(w, i)
    return AnticanSeq(w[:i] + (w[i] - 1,) + w[i + 1:])


def corner_blow_up(s: SeqLike, i: int, nodal_increment: int = 2) -> AnticanSeq:
    """Blow up the corner between components i and i+1 (cyclically).

    Length >= 2: (..., d_i, d_{i+1}, ...) -> (..., d_i+1, 1, d_{i+1}+1, ...).
    Length 1: (d) -> (d + nodal_increment, 1); the node of the nodal curve
    has multiplicity two, which is why the default increment is 2.
    """
    w = seq_of(s)
    i = _check_index(w, i)
    if len(w) == 1:
        return AnticanSeq((w[0] + nodal_increment, 1))
    j = (i + 1) % len(w)
    out = list(w)
    out[i] += 1
    out[j] += 1
    out.insert(i + 1, 1)
    return AnticanSeq(tuple(out))


def corner_blow_down(s: SeqLike, i: int, nodal_increment: int = 2) -> AnticanSeq:
    """Contract the exceptional entry at position i (must equal 1).

    Length 2 -> 1: (e, 1) -> (e - nodal_increment).  Otherwise both cyclic
    neighbors lose 1 and the entry is removed.
    """
    w = seq_of(s)
    i = _check_index(w, i)
    if w[i] != 1:
        raise NotExceptional(f"entry at {i} is {w[i]}, not 1")
    if len(w) == 1:
        raise Degenerate("cannot blow down a one-component boundary")
    if len(w) == 2:
        return AnticanSeq((w[1 - i] - nodal_increment,))
    out = list(w)
    out[(i - 1) % len(w)] -= 1
    out[(i + 1) % len(w)] -= 1
    del out[i]
    return AnticanSeq(tuple(out))


def reduce_ones(s: SeqLike) -> AnticanSeq:
    """Blow down 1-entries (leftmost first) until none remain or length 1.

    Each step shortens the word, so the process always terminates; the
    result class is independent of which 1 is processed first.
    """
    w = seq_of(s)
    while len(w) >= 2 and 1 in w:
        i = w.index(1)
        w = corner_blow_down(w, i).d
    return AnticanSeq(w)


def is_toric(s: SeqLike) -> bool:
    """Charge zero and identity boundary monodromy (the fan closes up)."""
    return charge(s) == 0 and monodromy(s) == IntMat2.identity()


# ---------------------------------------------------------------------------
# Toric-model search
# ---------------------------------------------------------------------------

OP_INTERNAL_DOWN = "internal_down"
OP_CORNER_DOWN = "corner_down"
OP_CORNER_UP = "corner_up"

_APPLY = {
    OP_INTERNAL_DOWN: internal_blow_down,
    OP_CORNER_DOWN: corner_blow_down,
    OP_CORNER_UP: corner_blow_up,
}


@dataclass(frozen=True)
class Move:
    op: str
    index: int

    def to_json(self) -> dict:
        return {"op": self.op, "index": self.index}


@dataclass(frozen=True)
class MoveScript:
    """Replayable sequence of moves; indices refer to the sequence obtained by
    applying the previous moves to the original input, in its given rotation."""

    moves: tuple[Move, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)

    def internal_downs(self) -> int:
        return sum(1 for m in self.moves if m.op == OP_INTERNAL_DOWN)

    def to_json(self) -> list[dict]:
        return [m.to_json() for m in self.moves]

    @staticmethod
    def from_json(data: Sequence[dict]) -> "MoveScript":
        return MoveScript(tuple(Move(d["op"], int(d["index"])) for d in data))


def apply_script(s: SeqLike, script: MoveScript) -> AnticanSeq:
    w = AnticanSeq(seq_of(s))
    for mv in script.moves:
        if mv.op not in _APPLY:
            raise ValueError(f"unknown op {mv.op!r}")
        w = _APPLY[mv.op](w, mv.index)
    return w


def toric_model_search(c: SeqLike, max_corner_ops: int = 2,
                       max_depth: int = 64) -> MoveScript:
    """Breadth-first search for a move script reaching a toric boundary.

    Exactly charge(c) internal blow-downs are needed, since corner moves
    preserve the charge and the target has charge 0; that bound prunes the
    search.  States are deduplicated by canonical rotation.  Raises NotFound
    when the bounds are exhausted, which proves nothing about existence.
    """
    start = seq_of(c)
    q0 = charge(start)
    if q0 < 0:
        raise NotFound(f"charge {q0} < 0; internal blow-downs cannot reach 0")
    if is_toric(start):
        return MoveScript(())
    # queue entries: (word, moves so far, corner blow-ups used)
    queue: deque[tuple[tuple[int, ...], tuple[Move, ...], int]] = deque()
    queue.append((start, (), 0))
    seen = {(min_rotation(start), 0)}
    while queue:
        w, path, ups = queue.popleft()
        if len(path) >= max_depth:
            continue
        cand: list[tuple[Move, tuple[int, ...], int]] = []
        if charge(w) > 0:
            for i in range(len(w)):
                cand.append((Move(OP_INTERNAL_DOWN, i),
                             internal_blow_down(w, i).d, ups))
        if len(w) >= 2:
            for i in range(len(w)):
                if w[i] == 1:
                    cand.append((Move(OP_CORNER_DOWN, i),
                                 corner_blow_down(w, i).d, ups))
        if ups < max_corner_ops:
            for i in range(len(w)):
                cand.append((Move(OP_CORNER_UP, i),
                             corner_blow_up(w, i).d, ups + 1))
        for mv, nxt, nups in sorted(cand, key=lambda t: (t[0].op, t[0].index)):
            key = (min_rotation(nxt), nups)
            if key in seen:
                continue
            seen.add(key)
            npath = path + (mv,)
            if is_toric(nxt):
                script = MoveScript(npath)
                assert is_toric(apply_script(c, script))
                return script
            queue.append((nxt, npath, nups))
    raise NotFound(f"no toric model within depth {max_depth}, "
                   f"corner blow-up budget {max_corner_ops}")


# ---------------------------------------------------------------------------
# Rational-dual predicate
# ---------------------------------------------------------------------------

RATIONAL_DUAL_EXCEPTIONS: frozenset[tuple[int, ...]] = frozenset(
    min_rotation(w) for w in [
        (4, 11), (7, 8),
        (2, 4, 12), (2, 8, 8), (3, 3, 12), (3, 4, 11), (3, 7, 8),
        (4, 4, 10), (4, 6, 8), (4, 7, 7), (5, 5, 8),
    ]
)


def has_rational_dual(c: SeqLike) -> bool | None:
    """True/False when decidable, None for unknown.

    Charge above 21 rules a rational dual out.  For length <= 3 with charge
    <= 21 the answer is known: False exactly on eleven exceptional cycles.
    Longer cycles with small charge are undecided here.
    """
    w = seq_of(c)
    if charge(w) > 21:
        return False
    if len(w) <= 3:
        return min_rotation(w) not in RATIONAL_DUAL_EXCEPTIONS
    return None
