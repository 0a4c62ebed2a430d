"""Golden example corpus and its runner.

Each corpus row is {"kind", "input", "expected", "note", ...}; the note
records which worked example the row encodes.  Cycles may be flat integer
lists or run-length encoded as {"rle": [[value, count], ...]}.  Cycle
comparisons are rotation-insensitive unless strict rotation is requested;
rows flagged "reflection": true also allow the reflected word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .blowups import (
    corner_blow_up,
    has_rational_dual,
    is_toric,
    reduce_ones,
    toric_model_search,
    apply_script,
)
from .covers import nw_cover, quotient_cycle
from .cycles import (
    charge,
    dual_cycle,
    minimal_period,
    monodromy,
    multiplicity,
    same_cycle,
    torsion_group,
    trace,
)
from .errors import CuspError
from .exact_arith import QuadSurd, eigen_unit, surd_from_cycle
from .lci import classify, pi_cycle, t_cycle


def decode_cycle(obj) -> tuple[int, ...]:
    if isinstance(obj, dict) and "rle" in obj:
        out: list[int] = []
        for val, count in obj["rle"]:
            out.extend([int(val)] * int(count))
        return tuple(out)
    return tuple(int(x) for x in obj)


@dataclass
class RowResult:
    index: int
    kind: str
    label: str
    ok: bool
    detail: str = ""


def default_corpus_path() -> str:
    return str(resources.files("cuspcalc").joinpath("_data/corpus.json"))


def load_rows(path: str | None = None) -> list[dict]:
    if path is None:
        path = default_corpus_path()
    with open(path, "r", encoding="utf-8") as fh:
        rows = json.load(fh)
    if not isinstance(rows, list):
        raise ValueError("corpus must be a JSON array of rows")
    for i, row in enumerate(rows):
        for key in ("kind", "input", "expected"):
            if key not in row:
                raise ValueError(f"corpus row {i} is missing {key!r}")
    return rows


def _cycles_equal(got, expected, strict: bool, reflection: bool) -> bool:
    g, e = tuple(got), decode_cycle(expected)
    if strict:
        return g == e
    return same_cycle(g, e, reflection=reflection)


def _surd_matches(x: QuadSurd, spec: dict) -> bool:
    y = QuadSurd(int(spec["p"]), int(spec["q"]), int(spec["r"]), int(spec["D"]))
    return x == y


def run_row(row: dict, strict_rotation: bool = False) -> tuple[bool, str]:
    kind = row["kind"]
    inp = row["input"]
    expected = row["expected"]
    reflection = bool(row.get("reflection", False))

    if kind == "dual":
        got = dual_cycle(decode_cycle(inp))
        ok = _cycles_equal(got.d, expected, strict_rotation, reflection)
        return ok, f"got {list(got.d)}"
    if kind == "charge":
        got = charge(decode_cycle(inp))
        return got == expected, f"got {got}"
    if kind == "charge_sum":
        w = decode_cycle(inp)
        got = charge(w) + charge(dual_cycle(w))
        return got == expected, f"got {got}"
    if kind == "monodromy":
        m = monodromy(decode_cycle(inp))
        got = [[m.a, m.b], [m.c, m.d]]
        return got == expected, f"got {got}"
    if kind == "trace":
        got = trace(decode_cycle(inp))
        return got == expected, f"got {got}"
    if kind == "torsion":
        got = list(torsion_group(decode_cycle(inp)).factors)
        return got == list(expected), f"got {got}"
    if kind == "minimal_period":
        got = minimal_period(decode_cycle(inp))
        return got == expected, f"got {got}"
    if kind == "multiplicity":
        got = multiplicity(decode_cycle(inp))
        return got == expected, f"got {got}"
    if kind == "surd":
        got = surd_from_cycle(decode_cycle(inp))
        return _surd_matches(got, expected), f"got {got!r}"
    if kind == "unit":
        got = eigen_unit(int(inp))
        return _surd_matches(got, expected), f"got {got!r}"
    if kind == "unit_norm_minus_one":
        got = (eigen_unit(int(inp)) - 1).norm()
        return got == expected, f"got {got}"
    if kind == "quotient":
        got = quotient_cycle(decode_cycle(inp["cycle"]), int(inp["k"]))
        ok = _cycles_equal(got.d, expected, strict_rotation, reflection)
        return ok, f"got {list(got.d)}"
    if kind == "t_cycle":
        got = t_cycle(*[int(x) for x in inp])
        ok = _cycles_equal(got.d, expected, strict_rotation, reflection)
        return ok, f"got {list(got.d)}"
    if kind == "pi_cycle":
        got = pi_cycle(*[int(x) for x in inp])
        if got is None:
            return expected is None, "got unknown"
        ok = _cycles_equal(got.d, expected, strict_rotation, reflection)
        return ok, f"got {list(got.d)}"
    if kind == "classify":
        res = classify(decode_cycle(inp))
        ok = res.kind == expected["class"]
        if ok and "params" in expected:
            ok = (res.equation is not None
                  and res.equation.kind == expected["family"]
                  and list(res.equation.params) == list(expected["params"]))
        eq = str(res.equation) if res.equation else None
        return ok, f"got {res.kind} {eq or ''}".rstrip()
    if kind == "nw_cover":
        res = nw_cover(decode_cycle(inp))
        ok = (res.trace == expected["trace"]
              and _cycles_equal(res.cover_cycle.d, expected["cover"],
                                strict_rotation, False)
              and _cycles_equal(res.cover_dual.d, expected["dual"],
                                strict_rotation, False))
        return ok, f"got trace {res.trace}"
    if kind == "corner_blow_up":
        got = corner_blow_up(decode_cycle(inp["seq"]), int(inp["index"]))
        return _cycles_equal(got.d, expected, strict_rotation, reflection), \
            f"got {list(got.d)}"
    if kind == "reduce_ones":
        got = reduce_ones(decode_cycle(inp))
        return _cycles_equal(got.d, expected, strict_rotation, reflection), \
            f"got {list(got.d)}"
    if kind == "rational_dual":
        got = has_rational_dual(decode_cycle(inp))
        want = None if expected == "unknown" else bool(expected)
        return got is want if want is None else got == want, f"got {got}"
    if kind == "is_toric":
        got = is_toric(decode_cycle(inp))
        return got == bool(expected), f"got {got}"
    if kind == "toric_model":
        w = decode_cycle(inp["cycle"])
        script = toric_model_search(
            w, max_corner_ops=int(inp.get("max_corner_ops", 2)),
            max_depth=int(inp.get("max_depth", 64)))
        final = apply_script(w, script)
        ok = (is_toric(final)
              and script.internal_downs() == int(expected["internal_downs"]))
        return ok, f"{script.internal_downs()} internal downs -> {list(final.d)}"
    return False, f"unknown corpus kind {kind!r}"


def run_rows(rows: list[dict], strict_rotation: bool = False) -> list[RowResult]:
    out = []
    for i, row in enumerate(rows):
        label = row.get("note", "")
        try:
            ok, detail = run_row(row, strict_rotation)
        except CuspError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        except Exception as exc:  # corpus rows must never crash the runner
            ok, detail = False, f"error: {exc}"
        out.append(RowResult(i, row["kind"], label, ok, detail))
    return out
