"""Triangulated integral-affine spheres carrying per-directed-edge d-values.

The complex is stored as oriented triangles plus an explicit side-gluing
map: side s of face f is the directed edge faces[f][s] -> faces[f][(s+1)%3]
and is glued to the unique side running the opposite way.  The explicit
gluing keeps quotient complexes representable even when they have parallel
edges (a two-vertex link is a double edge), which plain vertex-pair data
cannot express.

The only per-edge datum is the integer d-value of each directed edge; by
the uniqueness of the integral-affine structure given those numbers, no
charts are stored.  Interior edges must satisfy d_ij + d_ji = 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .blowups import is_toric
from .cycles import AnticanSeq, SeqLike, charge, monodromy, same_cycle, seq_of
from .errors import IndexOutOfRange, MalformedComplex, NotAutomorphism, TooShort
from .exact_arith import IntMat2

Side = tuple[int, int]  # (face index, side index 0..2)


# ---------------------------------------------------------------------------
# Pseudo-fans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PseudoFan:
    """Cone over the dual complex of a boundary: rays with d-values in
    cyclic order around the cone point."""

    rays: tuple[int, ...]
    apex: str = "v"

    def __len__(self) -> int:
        return len(self.rays)


def pseudo_fan(s: SeqLike, apex: str = "v") -> PseudoFan:
    return PseudoFan(seq_of(s), apex)


def vertex_is_toric(f: PseudoFan) -> bool:
    """The affine structure extends over the cone point exactly for toric
    boundaries: charge 0 and identity monodromy."""
    return is_toric(f.rays)


# ---------------------------------------------------------------------------
# Boundary surgeries (bookkeeping level)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SurgeryRecord:
    op: str
    index: int
    size: int


def boundary_internal_blow_up(b: SeqLike, i: int, size: int = 1,
                              log: list[SurgeryRecord] | None = None) -> AnticanSeq:
    """Internal surgery on boundary segment i: d_i -> d_i + 1, charge +1.

    The surgery size is recorded in the log only; it does not change the
    boundary numbers.
    """
    w = seq_of(b)
    if not -len(w) <= i < len(w):
        raise IndexOutOfRange(f"index {i} for length {len(w)}")
    if size < 1:
        raise ValueError("surgery size must be >= 1")
    i %= len(w)
    if log is not None:
        log.append(SurgeryRecord("internal_blow_up", i, size))
    return AnticanSeq(w[:i] + (w[i] + 1,) + w[i + 1:])


def boundary_node_smoothing(b: SeqLike, i: int, size: int = 1,
                            log: list[SurgeryRecord] | None = None) -> AnticanSeq:
    """Smooth the node between segments i and i+1: merge to d_i + d_{i+1} - 2.

    Shortens the boundary by one and raises the charge by exactly one.
    """
    w = seq_of(b)
    if len(w) < 2:
        raise TooShort("node smoothing needs at least two boundary segments")
    if not -len(w) <= i < len(w):
        raise IndexOutOfRange(f"index {i} for length {len(w)}")
    if size < 1:
        raise ValueError("surgery size must be >= 1")
    i %= len(w)
    j = (i + 1) % len(w)
    out = list(w)
    out[i] = w[i] + w[j] - 2
    del out[j]
    if log is not None:
        log.append(SurgeryRecord("node_smoothing", i, size))
    return AnticanSeq(tuple(out))


# ---------------------------------------------------------------------------
# The complex
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IAComplex:
    """Oriented triangulated surface with an integer on every directed edge."""

    n_vertices: int
    faces: tuple[tuple[int, int, int], ...]
    glue: dict[Side, Side]
    d: dict[Side, int]
    v0: int | None = None

    # -- construction ---------------------------------------------------------

    @staticmethod
    def from_data(n_vertices: int,
                  faces: Sequence[Sequence[int]],
                  directed_d: Mapping[tuple[int, int], int],
                  v0: int | None = None) -> "IAComplex":
        """Build a simple complex: every ordered vertex pair in one face only.

        Faces must be consistently oriented, so the two faces along an
        undirected edge traverse it in opposite directions.
        """
        fs = tuple(tuple(int(x) for x in tri) for tri in faces)
        for t, tri in enumerate(fs):
            if len(tri) != 3 or len(set(tri)) != 3:
                raise MalformedComplex(f"face {t} is not a vertex triple: {tri}")
            if any(not 0 <= v < n_vertices for v in tri):
                raise MalformedComplex(f"face {t} uses an unknown vertex: {tri}")
        by_pair: dict[tuple[int, int], Side] = {}
        for f, tri in enumerate(fs):
            for s in range(3):
                pair = (tri[s], tri[(s + 1) % 3])
                if pair in by_pair:
                    raise MalformedComplex(
                        f"directed edge {pair} lies in two faces; the complex "
                        "is not a consistently oriented simple surface")
                by_pair[pair] = (f, s)
        glue: dict[Side, Side] = {}
        for (i, j), side in by_pair.items():
            back = by_pair.get((j, i))
            if back is not None:
                glue[side] = back
        d: dict[Side, int] = {}
        for (i, j), side in by_pair.items():
            if (i, j) not in directed_d:
                raise MalformedComplex(f"missing d-value for directed edge ({i},{j})")
            d[side] = int(directed_d[(i, j)])
        for pair in directed_d:
            if pair not in by_pair:
                raise MalformedComplex(f"d-value given for non-edge {pair}")
        return IAComplex(n_vertices, fs, glue, d, v0)

    # -- serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        """Vertex-pair serialization; only valid for simple complexes."""
        edges = []
        seen = set()
        for (f, s), val in sorted(self.d.items()):
            i, j = self.side_vertices((f, s))
            if (i, j) in seen:
                raise MalformedComplex(
                    f"parallel edges between {i} and {j}; not serializable "
                    "in the vertex-pair format")
            seen.add((i, j))
            edges.append({"from": i, "to": j, "d": val})
        out = {
            "vertices": list(range(self.n_vertices)),
            "edges": edges,
            "faces": [list(t) for t in self.faces],
        }
        if self.v0 is not None:
            out["v0"] = self.v0
        return out

    @staticmethod
    def from_json(data: dict) -> "IAComplex":
        try:
            verts = list(data["vertices"])
            edges = list(data["edges"])
            faces = [tuple(f) for f in data["faces"]]
        except (KeyError, TypeError) as exc:
            raise MalformedComplex(f"missing or malformed field: {exc}")
        if verts != list(range(len(verts))):
            raise MalformedComplex("vertices must be the list 0..n-1")
        dd: dict[tuple[int, int], int] = {}
        for k, e in enumerate(edges):
            try:
                pair = (int(e["from"]), int(e["to"]))
                val = int(e["d"])
            except (KeyError, TypeError, ValueError) as exc:
                raise MalformedComplex(f"edge record {k} malformed: {exc}")
            if pair in dd:
                raise MalformedComplex(f"duplicate edge record for {pair}")
            dd[pair] = val
        return IAComplex.from_data(len(verts), faces, dd, data.get("v0"))

    @staticmethod
    def load(path: str) -> "IAComplex":
        with open(path, "r", encoding="utf-8") as fh:
            return IAComplex.from_json(json.load(fh))

    # -- local combinatorics ----------------------------------------------------

    def side_vertices(self, side: Side) -> tuple[int, int]:
        f, s = side
        tri = self.faces[f]
        return tri[s], tri[(s + 1) % 3]

    def sides(self) -> Iterable[Side]:
        for f in range(len(self.faces)):
            for s in range(3):
                yield (f, s)

    def n_edges(self) -> int:
        glued = sum(1 for side in self.sides() if side in self.glue)
        unglued = 3 * len(self.faces) - glued
        return glued // 2 + unglued

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges() + len(self.faces)

    def _corner_walk(self, v: int) -> tuple[list[Side], bool]:
        """Corners of v in cyclic order; bool marks a complete single cycle."""
        corners = [(f, c) for f, tri in enumerate(self.faces)
                   for c in range(3) if tri[c] == v]
        if not corners:
            return [], False
        start = min(corners)
        walk = [start]
        cur = start
        for _ in range(len(corners)):
            f, c = cur
            incoming = (f, (c + 2) % 3)
            nxt_side = self.glue.get(incoming)
            if nxt_side is None:
                return walk, False
            cur = nxt_side  # partner side starts at v
            if cur == start:
                return walk, len(walk) == len(corners)
            walk.append(cur)
        return walk, False

    def star(self, v: int) -> AnticanSeq:
        """d-values of the directed edges out of v, in link order."""
        walk, ok = self._corner_walk(v)
        if not ok:
            raise MalformedComplex(f"vertex {v} has no single-cycle link")
        return AnticanSeq(tuple(self.d[side] for side in walk))

    def star_fan(self, v: int) -> PseudoFan:
        return PseudoFan(self.star(v).d, apex=f"v{v}")


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass
class ValidationReport:
    """Outcome of each check; `passed` requires every executed check to hold."""

    checks: dict[str, tuple[bool, str]] = field(default_factory=dict)

    def record(self, name: str, ok: bool, message: str = "") -> None:
        self.checks[name] = (ok, message)

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.checks.values())

    def failures(self) -> list[str]:
        return [f"{name}: {msg}" for name, (ok, msg) in self.checks.items() if not ok]

    def __str__(self) -> str:
        lines = []
        for name, (ok, msg) in self.checks.items():
            mark = "pass" if ok else "FAIL"
            lines.append(f"{name}: {mark}" + (f" ({msg})" if msg and not ok else ""))
        return "\n".join(lines)


def _connected(g: IAComplex) -> bool:
    if not g.faces:
        return False
    seen = {0}
    stack = [0]
    while stack:
        f = stack.pop()
        for s in range(3):
            partner = g.glue.get((f, s))
            if partner and partner[0] not in seen:
                seen.add(partner[0])
                stack.append(partner[0])
    return len(seen) == len(g.faces)


def validate_type_iii(g: IAComplex,
                      expected_v0_star: SeqLike | None = None) -> ValidationReport:
    """Run the combinatorial checks for a degeneration dual complex.

    (a) sphere topology, (b) d_ij + d_ji = 2 on interior edges, (c) the star
    of the distinguished vertex matches the expected cycle up to rotation,
    (d) charge-0 vertex stars have identity monodromy, (e) all vertex
    charges are nonnegative except at the distinguished vertex.
    """
    rep = ValidationReport()

    unglued = [side for side in g.sides() if side not in g.glue]
    closed = not unglued
    if closed:
        involution_ok = all(g.glue[g.glue[s]] == s and
                            g.side_vertices(g.glue[s]) == g.side_vertices(s)[::-1]
                            for s in g.sides())
    else:
        involution_ok = False
    used = sorted({v for tri in g.faces for v in tri})
    links_ok = True
    bad_link = ""
    for v in range(g.n_vertices):
        _, ok = g._corner_walk(v)
        if not ok:
            links_ok = False
            bad_link = f"vertex {v}"
            break
    euler = g.euler_characteristic()
    topo_ok = (closed and involution_ok and links_ok and _connected(g)
               and used == list(range(g.n_vertices)) and euler == 2)
    detail = []
    if unglued:
        detail.append(f"edge {g.side_vertices(unglued[0])} lies in one face")
    if not links_ok:
        detail.append(f"broken link at {bad_link}")
    if euler != 2:
        detail.append(f"Euler characteristic {euler}")
    rep.record("sphere_topology", topo_ok, "; ".join(detail))

    bad_pairs = []
    for side in g.sides():
        partner = g.glue.get(side)
        if partner is None or side > partner:
            continue
        if g.d[side] + g.d[partner] != 2:
            i, j = g.side_vertices(side)
            bad_pairs.append(f"d({i}->{j}) + d({j}->{i}) = "
                             f"{g.d[side] + g.d[partner]}")
    rep.record("triple_point_formula", not bad_pairs,
               bad_pairs[0] if bad_pairs else "")

    stars: dict[int, tuple[int, ...]] = {}
    if links_ok and closed:
        for v in range(g.n_vertices):
            stars[v] = g.star(v).d

    if expected_v0_star is not None:
        if g.v0 is None:
            rep.record("v0_star", False, "no distinguished vertex set")
        elif g.v0 in stars:
            ok = same_cycle(stars[g.v0], expected_v0_star)
            rep.record("v0_star", ok,
                       "" if ok else f"star {stars[g.v0]} does not match")
        else:
            rep.record("v0_star", False, "star not defined")

    if stars:
        bad_toric = [v for v, st in stars.items()
                     if charge(st) == 0 and monodromy(st) != IntMat2.identity()]
        rep.record("toric_vertices", not bad_toric,
                   f"vertex {bad_toric[0]} has charge 0 but non-identity "
                   "monodromy" if bad_toric else "")
        bad_charge = [v for v, st in stars.items()
                      if v != g.v0 and charge(st) < 0]
        rep.record("vertex_charges", not bad_charge,
                   f"vertex {bad_charge[0]} has negative charge" if bad_charge else "")
    else:
        rep.record("toric_vertices", False, "stars unavailable")
        rep.record("vertex_charges", False, "stars unavailable")
    return rep


def total_charge(g: IAComplex) -> int:
    """Sum of vertex-star charges; 24 for the standard closed complexes.

    Diagnostic only, never a validation failure.
    """
    return sum(charge(g.star(v)) for v in range(g.n_vertices))


# ---------------------------------------------------------------------------
# Cyclic symmetry and quotients
# ---------------------------------------------------------------------------


@dataclass
class SymmetryReport:
    order: int
    fixed_vertices: tuple[int, ...]
    fixed_edges: int
    fixed_faces: tuple[int, ...]
    rotation_like: bool
    quotient: IAComplex
    quotient_euler: int
    quotient_euler_ok: bool | None


def _face_map(g: IAComplex, perm: Sequence[int]) -> dict[int, tuple[int, int]]:
    """Map each face to (image face, rotation offset) under the permutation.

    Side s of f corresponds to side (s + offset) % 3 of the image.  Raises
    NotAutomorphism naming the first face or edge that breaks.
    """
    index: dict[tuple[int, int, int], list[int]] = {}
    for f, tri in enumerate(g.faces):
        index.setdefault(tri, []).append(f)

    def candidates(f: int) -> list[tuple[int, int]]:
        tri = g.faces[f]
        img = (perm[tri[0]], perm[tri[1]], perm[tri[2]])
        out = []
        for off in range(3):
            rot = (img[(0 - off) % 3], img[(1 - off) % 3], img[(2 - off) % 3])
            for f2 in index.get(rot, []):
                out.append((f2, off))
        return out

    # rot above is chosen so that img[i] == faces[f2][(i + off) % 3]
    cands = {}
    for f in range(len(g.faces)):
        cs = candidates(f)
        if not cs:
            raise NotAutomorphism(
                f"face {f} = {g.faces[f]} has no image under the permutation")
        # prefer the identity assignment when available, for determinism
        if (f, 0) in cs:
            cs = [(f, 0)] + [c for c in cs if c != (f, 0)]
        cands[f] = cs

    chosen: dict[int, tuple[int, int]] = {}

    def consistent(f: int, choice: tuple[int, int]) -> bool:
        f2, off = choice
        for s in range(3):
            if g.d[(f, s)] != g.d[(f2, (s + off) % 3)]:
                return False
            partner = g.glue.get((f, s))
            img_partner = g.glue.get((f2, (s + off) % 3))
            if (partner is None) != (img_partner is None):
                return False
            if partner is not None and partner[0] in chosen:
                pf, poff = chosen[partner[0]]
                if img_partner != (pf, (partner[1] + poff) % 3):
                    return False
        return True

    order = sorted(cands, key=lambda f: len(cands[f]))

    def backtrack(k: int) -> bool:
        if k == len(order):
            return True
        f = order[k]
        used = {c[0] for c in chosen.values()}
        for choice in cands[f]:
            if choice[0] in used and choice[0] not in {c[0] for c in [chosen.get(f, (None,))]}:
                continue
            chosen[f] = choice
            if consistent(f, choice) and backtrack(k + 1):
                return True
            del chosen[f]
        return False

    if not backtrack(0):
        # identify a concrete violation for the error message
        for f in range(len(g.faces)):
            for (f2, off) in cands[f]:
                for s in range(3):
                    if g.d[(f, s)] != g.d[(f2, (s + off) % 3)]:
                        i, j = g.side_vertices((f, s))
                        raise NotAutomorphism(
                            f"d-value on edge ({i},{j}) is not preserved")
        raise NotAutomorphism("no consistent face mapping exists")
    return chosen


def cyclic_symmetry(g: IAComplex, perm: Sequence[int] | Mapping[int, int]) -> SymmetryReport:
    """Check a vertex permutation is a d-preserving automorphism and quotient.

    The permutation must send oriented faces to oriented faces and preserve
    every directed d-value.  The quotient identifies orbit cells with
    explicit side gluing, so parallel edges in the quotient are fine.  When
    the action is rotation-like (exactly two fixed vertices) the quotient
    Euler characteristic is checked to be 2.
    """
    if isinstance(perm, Mapping):
        p = [perm[v] for v in range(g.n_vertices)]
    else:
        p = [int(x) for x in perm]
    if sorted(p) != list(range(g.n_vertices)):
        raise NotAutomorphism(f"not a vertex bijection: {p}")

    fmap = _face_map(g, p)

    # group order = smallest m with perm^m = identity
    order = 1
    q = p[:]
    while q != list(range(g.n_vertices)):
        q = [p[v] for v in q]
        order += 1
        if order > g.n_vertices + 1:
            raise NotAutomorphism("permutation order exceeds vertex count bound")

    # vertex orbits
    vrep: dict[int, int] = {}
    for v in range(g.n_vertices):
        orbit = [v]
        while p[orbit[-1]] != v:
            orbit.append(p[orbit[-1]])
        vrep[v] = min(orbit)

    # face orbits with side-offset bookkeeping
    frep: dict[int, tuple[int, int]] = {}
    for f in range(len(g.faces)):
        orbit = [(f, 0)]
        cur, off = f, 0
        while True:
            nf, noff = fmap[cur]
            cur, off = nf, (off + noff) % 3
            if cur == f:
                break
            orbit.append((cur, off))
        rep_face = min(x for x, _ in orbit)
        # offset carrying side s of f to the matching side of rep_face
        # walk again until rep_face is reached
        cur, off = f, 0
        while cur != rep_face:
            nf, noff = fmap[cur]
            cur, off = nf, (off + noff) % 3
        frep[f] = (rep_face, off)

    reps = sorted({r for r, _ in frep.values()})
    new_face_index = {r: i for i, r in enumerate(reps)}
    new_vertex_ids = sorted({vrep[v] for v in range(g.n_vertices)})
    new_vid = {v: i for i, v in enumerate(new_vertex_ids)}

    q_faces = []
    for r in reps:
        q_faces.append(tuple(new_vid[vrep[v]] for v in g.faces[r]))
    q_glue: dict[Side, Side] = {}
    q_d: dict[Side, int] = {}
    for r in reps:
        fr = new_face_index[r]
        for s in range(3):
            q_d[(fr, s)] = g.d[(r, s)]
            partner = g.glue.get((r, s))
            if partner is None:
                continue
            pf, ps = partner
            rp, roff = frep[pf]
            q_glue[(fr, s)] = (new_face_index[rp], (ps + roff) % 3)
    for side, partner in q_glue.items():
        if q_glue.get(partner) != side:
            raise NotAutomorphism(
                f"gluing is not equivariant at quotient side {side}")

    v0_new = new_vid[vrep[g.v0]] if g.v0 is not None else None
    quotient = IAComplex(len(new_vertex_ids), tuple(q_faces), q_glue, q_d, v0_new)

    fixed_vertices = tuple(v for v in range(g.n_vertices) if p[v] == v)
    fixed_faces = tuple(f for f in range(len(g.faces)) if fmap[f][0] == f and order > 1)
    fixed_edges = 0
    for side in g.sides():
        partner = g.glue.get(side)
        if partner is not None and side > partner:
            continue
        f, s = side
        f2, off = fmap[f]
        img = (f2, (s + off) % 3)
        if order > 1 and (img == side or img == partner):
            fixed_edges += 1

    rotation_like = order > 1 and len(fixed_vertices) == 2
    q_euler = quotient.euler_characteristic()
    euler_ok = (q_euler == 2) if rotation_like else None
    return SymmetryReport(
        order=order,
        fixed_vertices=fixed_vertices,
        fixed_edges=fixed_edges,
        fixed_faces=fixed_faces,
        rotation_like=rotation_like,
        quotient=quotient,
        quotient_euler=q_euler,
        quotient_euler_ok=euler_ok,
    )
