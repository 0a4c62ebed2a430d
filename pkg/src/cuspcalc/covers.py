"""Covers and lattice quotients of cusps.

Contains the one-vertex lci cover determined by the monodromy trace, the
conjugacy-class recognizer sending a hyperbolic SL2(Z) matrix back to its
cyclic word, cyclic lattice quotients of a cusp (translation subgroups of
the torsion of the link), trace-family enumeration, and the chart matrices
of the coordinate action.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import (
    CuspCycle,
    SeqLike,
    dual_cycle,
    monodromy,
    seq_of,
    torsion_group,
    trace,
)
from .errors import (
    BadOrder,
    IndexOutOfRange,
    NegativeTrace,
    NonCyclicTorsion,
    NotHyperbolic,
    NotSL2,
    TraceTooSmall,
)
from .exact_arith import (
    IntMat2,
    QuadModule,
    QuadSurd,
    eigen_unit,
    hj_expansion,
    snf_transforms,
    surd_from_cycle,
)


# ---------------------------------------------------------------------------
# Matrix -> cycle (conjugacy-class recognition)
# ---------------------------------------------------------------------------


def _expanding_fixed_surd(m: IntMat2) -> QuadSurd:
    """Fixed point x of the matrix with c*x + a equal to the eigenvalue > 1.

    The two fixed points of a hyperbolic matrix correspond to the two dual
    cusps; this picks the one whose expansion is the matrix's own cycle.
    """
    t = m.trace
    disc = t * t - 4
    # x = ((d - a) + sqrt(t^2-4)) / (2c); then c*x + a = (t + sqrt(t^2-4))/2.
    return QuadSurd(m.d - m.a, 1, 2 * m.c, disc)


def _contracting_fixed_surd(m: IntMat2) -> QuadSurd:
    t = m.trace
    disc = t * t - 4
    return QuadSurd(m.d - m.a, -1, 2 * m.c, disc)


def _repeat_to_trace(period: list[int], target: int) -> tuple[int, ...]:
    """Repeat the primitive period until the monodromy trace matches.

    A matrix sharing fixed points with the primitive word is a power of its
    monodromy, and the trace of powers is strictly increasing, so exactly
    one repetition count fits.
    """
    prim = monodromy(period)
    acc = prim
    j = 1
    while acc.trace < target:
        acc = acc * prim
        j += 1
    if acc.trace != target:
        raise NotHyperbolic(f"trace {target} is not a power of the primitive class")
    return tuple(period) * j


def matrix_to_cycle(m: IntMat2) -> CuspCycle:
    """Cyclic word of the SL2(Z) conjugacy class of a hyperbolic matrix.

    The period of the minus continued fraction of the expanding fixed point
    is the primitive cycle, repeated to match the trace when the matrix is
    a proper power; matrix_to_cycle(monodromy(c)) recovers c up to rotation.
    """
    if m.det != 1:
        raise NotSL2(f"determinant {m.det} != 1")
    t = m.trace
    if abs(t) <= 2:
        raise NotHyperbolic(f"trace {t} is not hyperbolic")
    if t < 0:
        raise NegativeTrace(f"trace {t} < 0; negate the matrix first")
    if m.c == 0:
        # hyperbolic SL2(Z) matrices never fix infinity
        raise NotHyperbolic(f"{m!r} fixes infinity")
    _, period = hj_expansion(_expanding_fixed_surd(m))
    return CuspCycle(_repeat_to_trace(period, t))


def dual_class_of_matrix(m: IntMat2) -> CuspCycle:
    """Cycle attached to the other fixed point: the dual cusp's class."""
    if m.det != 1:
        raise NotSL2(f"determinant {m.det} != 1")
    if abs(m.trace) <= 2:
        raise NotHyperbolic(f"trace {m.trace} is not hyperbolic")
    _, period = hj_expansion(_contracting_fixed_surd(m))
    return CuspCycle(_repeat_to_trace(period, m.trace))


# ---------------------------------------------------------------------------
# One-vertex covers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NWCoverResult:
    """Finite lci cover of a cusp with a one-vertex resolution cycle.

    The covering cusp is (t) for t the monodromy trace; its dual is the
    hypersurface cycle (3, 2^{t-3}).  sublattice_index is the index of the
    invariant sublattice spanned by (a, c) and (0, 1) for the monodromy
    [[a, b], [c, d]] of the stored rotation; orientation_case records the
    sign of a, which decides whether the direct cover is (t) or its dual
    (the two are mutual fiberwise covers either way).
    """

    trace: int
    cover_cycle: CuspCycle
    cover_dual: CuspCycle
    sublattice_index: int
    orientation_case: str


def nw_cover(c: SeqLike) -> NWCoverResult:
    m = monodromy(c)
    t = m.trace
    if abs(t) <= 2:
        raise NotHyperbolic(f"trace {t} is not hyperbolic")
    if t < 3:
        raise TraceTooSmall(f"trace {t} < 3 leaves no one-vertex cusp cycle")
    cover = CuspCycle((t,))
    a = m.a
    case = "a=0" if a == 0 else ("a<0" if a < 0 else "a>0")
    return NWCoverResult(
        trace=t,
        cover_cycle=cover,
        cover_dual=dual_cycle(cover),
        sublattice_index=abs(a) if a != 0 else 1,
        orientation_case=case,
    )


def cover_compatible(cover: SeqLike, base: SeqLike) -> bool:
    """Necessary condition for mutual fiberwise covers: equal traces."""
    tc, tb = trace(cover), trace(base)
    if abs(tc) <= 2 or abs(tb) <= 2:
        raise NotHyperbolic("both cycles must be hyperbolic")
    return tc == tb


# ---------------------------------------------------------------------------
# Lattice quotients
# ---------------------------------------------------------------------------


def quotient_cycle(c: SeqLike, k: int,
                   generator: tuple[int, int] | None = None) -> CuspCycle:
    """Cycle of the quotient cusp by the order-k translation subgroup.

    Mechanism: with M = Z*omega + Z and the eigen-unit eps of the trace,
    the overlattice Mbar = M/(eps - 1) satisfies Mbar/M = torsion of the
    link.  The unique order-k subgroup of a cyclic torsion group enlarges M
    to an intermediate module M', and the cycle of multiplication by eps on
    M' (in a positively oriented basis) is the quotient cusp.  The scalar
    1/(eps - 1) has negative norm, which flips the orientation; that flip
    is what lands the full-torsion quotient on the dual cycle.

    For non-cyclic torsion pass `generator`, coordinates in the basis of
    Mbar, to select the subgroup generated by that element plus M.
    """
    w = seq_of(c)
    t = trace(w)
    if abs(t) <= 2:
        raise NotHyperbolic(f"trace {t} is not hyperbolic")
    if t < 3:
        raise TraceTooSmall(f"trace {t} < 3")
    omega = surd_from_cycle(w)
    eps = eigen_unit(t)
    one = QuadSurd(1, 0, 1, eps.D)
    m_mod = QuadModule(omega, one)
    delta = (eps - 1).inverse()
    mbar = m_mod.scaled(delta)

    if generator is None:
        tor = torsion_group(w)
        if not tor.is_cyclic():
            raise NonCyclicTorsion(
                f"torsion {tor} is not cyclic; pass an explicit generator")
        n = tor.order or 0
        if k < 1 or n % k != 0:
            raise BadOrder(f"k = {k} does not divide the torsion order {n}")
        if k == 1:
            return matrix_to_cycle(m_mod.multiplication_matrix(eps))
        # coordinates of M inside Mbar, then a generator of the cyclic
        # cokernel via the Smith transforms
        cmat = m_mod.basis_matrix_in(mbar)
        _, s, v = snf_transforms(cmat)
        assert s.a == 1 and abs(s.d) == n
        det_v = v.det
        assert abs(det_v) == 1
        # classes in Mbar/M are read off through y -> y*V, so the class
        # mapping to (0, 1) generates; its coordinates are row 2 of V^{-1}
        gen_coords = (-v.c * det_v, v.a * det_v)
        step = n // k
        vk = mbar.element(gen_coords[0] * step, gen_coords[1] * step)
    else:
        vk = mbar.element(int(generator[0]), int(generator[1]))
    mprime = m_mod.with_generator(vk)
    return matrix_to_cycle(mprime.multiplication_matrix(eps))


def subgroup_order(c: SeqLike, generator: tuple[int, int]) -> int:
    """Order of the class of the given Mbar-coordinates in Mbar/M."""
    w = seq_of(c)
    t = trace(w)
    omega = surd_from_cycle(w)
    eps = eigen_unit(t)
    one = QuadSurd(1, 0, 1, eps.D)
    m_mod = QuadModule(omega, one)
    mbar = m_mod.scaled((eps - 1).inverse())
    v = mbar.element(int(generator[0]), int(generator[1]))
    order = 1
    acc = v
    while not m_mod.contains(acc):
        acc = acc + v
        order += 1
    return order


# ---------------------------------------------------------------------------
# Trace families
# ---------------------------------------------------------------------------


def enumerate_cycles_with_trace(t: int, max_len: int) -> set[CuspCycle]:
    """All canonical cusp cycles of length <= max_len with monodromy trace t.

    Entries are bounded by t: the trace is strictly increasing in each
    entry (the completion lemma below), and the one-vertex cycle (t)
    already attains the target, so d_i > t overshoots.  Partial words are
    pruned when even the all-2 completion exceeds t, which is the minimal
    completion by the same monotonicity.
    """
    if t < 3:
        return set()
    out: set[CuspCycle] = set()
    id2 = IntMat2.identity()
    m2 = IntMat2(0, -1, 1, 2)

    def min_completion_trace(prod: IntMat2, rem: int) -> int:
        best = None
        cur = prod
        for _ in range(rem + 1):
            if best is None or cur.trace < best:
                best = cur.trace
            cur = m2 * cur
        return best  # type: ignore[return-value]

    def extend(prod: IntMat2, word: tuple[int, ...], length: int) -> None:
        if len(word) == length:
            if prod.trace == t and any(x >= 3 for x in word):
                out.add(CuspCycle(word))
            return
        rem = length - len(word) - 1
        for d in range(2, t + 1):
            nxt = IntMat2(0, -1, 1, d) * prod
            if min_completion_trace(nxt, rem) > t:
                break  # larger d only increases the trace
            extend(nxt, word + (d,), length)

    for length in range(1, max_len + 1):
        extend(id2, (), length)
    return out


# ---------------------------------------------------------------------------
# Chart action matrices
# ---------------------------------------------------------------------------


def chart_action_matrix(c: SeqLike, r: int) -> IntMat2:
    """N_r = [[d_{r-1},1],[-1,0]] * ... * [[d_0,1],[-1,0]], with N_0 = I.

    Satisfies the recurrence N_{r+1} = [[d_r,1],[-1,0]] * N_r and, at
    r = n, the eigen relation (omega, 1) * N_n = eps * (omega, 1) for
    omega the cycle's surd and eps the eigen-unit of the trace.
    """
    w = seq_of(c)
    if not 0 <= r <= len(w):
        raise IndexOutOfRange(f"chart index {r} outside 0..{len(w)}")
    m = IntMat2.identity()
    for i in range(r):
        m = IntMat2(w[i], 1, -1, 0) * m
    return m
