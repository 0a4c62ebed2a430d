"""Command line front end.

Exit codes: 0 success, 1 usage error or failed verification, 2 domain error
(the error class name is printed).  `--json` switches machine-readable
output on.  Cycles are written as comma-separated integers, e.g. `5,2`.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

from . import corpus
from .blowups import (
    MoveScript,
    apply_script,
    corner_blow_up,
    has_rational_dual,
    is_toric,
    reduce_ones,
    toric_model_search,
)
from .covers import enumerate_cycles_with_trace, nw_cover, quotient_cycle
from .cycles import (
    CuspCycle,
    canonical_form,
    charge,
    dual_cycle,
    minimal_period,
    monodromy,
    torsion_group,
    trace,
)
from .errors import CuspError
from .iasurface import IAComplex, validate_type_iii
from .lci import classify

USAGE_EXIT = 1
DOMAIN_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(USAGE_EXIT)


def parse_seq(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def fmt_seq(seq) -> str:
    return ",".join(str(x) for x in seq)


def _display(cycle: CuspCycle) -> tuple[int, ...]:
    return cycle.display()


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_dual(args) -> int:
    d = dual_cycle(args.cycle)
    _emit(args, {"dual": list(d.d), "display": list(_display(d))},
          fmt_seq(_display(d)))
    return 0


def _cmd_charge(args) -> int:
    q = charge(args.cycle)
    _emit(args, {"charge": q}, str(q))
    return 0


def _cmd_monodromy(args) -> int:
    m = monodromy(args.cycle)
    payload = {"matrix": [[m.a, m.b], [m.c, m.d]], "trace": m.trace, "det": m.det}
    _emit(args, payload, f"[[{m.a},{m.b}],[{m.c},{m.d}]] trace={m.trace}")
    return 0


def _cmd_torsion(args) -> int:
    t = torsion_group(args.cycle)
    _emit(args, {"invariants": list(t.factors), "order": t.order}, str(t))
    return 0


def _cmd_lci(args) -> int:
    res = classify(args.cycle)
    eq = str(res.equation) if res.equation else None
    payload = {"class": res.kind, "equation": eq}
    if res.equation:
        payload["family"] = res.equation.kind
        payload["params"] = list(res.equation.params)
    _emit(args, payload, f"{res.kind}" + (f": {eq}" if eq else ""))
    return 0


def _cmd_nwcover(args) -> int:
    res = nw_cover(args.cycle)
    payload = {
        "trace": res.trace,
        "cover": list(res.cover_cycle.d),
        "cover_dual": list(res.cover_dual.d),
        "sublattice_index": res.sublattice_index,
        "orientation_case": res.orientation_case,
    }
    _emit(args, payload,
          f"trace={res.trace} cover={fmt_seq(_display(res.cover_cycle))} "
          f"dual={fmt_seq(_display(res.cover_dual))} case[{res.orientation_case}]")
    return 0


def _cmd_quotient(args) -> int:
    q = quotient_cycle(args.cycle, args.k)
    _emit(args, {"quotient": list(q.d), "display": list(_display(q))},
          fmt_seq(_display(q)))
    return 0


def _cmd_toricmodel(args) -> int:
    script = toric_model_search(args.cycle, max_corner_ops=args.max_corner_ops,
                                max_depth=args.max_depth)
    final = apply_script(args.cycle, script)
    payload = {"script": script.to_json(), "final": list(final.d),
               "internal_downs": script.internal_downs()}
    _emit(args, payload,
          f"{len(script)} moves ({script.internal_downs()} internal blow-downs) "
          f"-> {fmt_seq(final.d)}")
    return 0


def _cmd_enumerate(args) -> int:
    fams = sorted(c.d for c in enumerate_cycles_with_trace(args.trace, args.max_len))
    _emit(args, {"trace": args.trace, "cycles": [list(c) for c in fams]},
          "\n".join(fmt_seq(c) for c in fams))
    return 0


def _cmd_validate_typeiii(args) -> int:
    g = IAComplex.load(args.path)
    expected = args.star
    report = validate_type_iii(g, expected)
    if args.json:
        print(json.dumps({"passed": report.passed,
                          "checks": {k: {"ok": ok, "detail": msg}
                                     for k, (ok, msg) in report.checks.items()}},
                         sort_keys=True))
    else:
        print(report)
    return 0 if report.passed else DOMAIN_EXIT


def _cmd_verify(args) -> int:
    rows = corpus.load_rows(args.corpus)
    results = corpus.run_rows(rows, strict_rotation=args.strict_rotation)
    failures = 0
    for res in results:
        status = "pass" if res.ok else "FAIL"
        line = f"[{res.index:3d}] {status}  {res.kind:<16} {res.label}"
        if not res.ok:
            line += f"  ({res.detail})"
            failures += 1
        print(line)
    if not rows:
        print("warning: empty corpus")
        return 0
    print(f"{len(rows) - failures}/{len(rows)} rows passed")
    return 0 if failures == 0 else 1


def _cmd_diagram(args) -> int:
    svg = cycle_diagram_svg(args.cycle)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(args.out)
    return 0


def cycle_diagram_svg(cycle) -> str:
    """Deterministic SVG of the cycle graph with nodes labeled -d_i.

    A one-component cycle is drawn as a single node with a loop.
    """
    from math import cos, pi, sin

    w = tuple(int(x) for x in cycle)
    n = len(w)
    size = 360
    cx = cy = size / 2
    rad = size / 2 - 60
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        '<style>circle{fill:white;stroke:black;stroke-width:1.5}'
        'path,line{stroke:black;stroke-width:1.5;fill:none}'
        'text{font-family:monospace;font-size:14px;text-anchor:middle}</style>',
    ]
    if n == 1:
        parts.append(f'<path d="M {cx - 18:.1f} {cy - 10:.1f} '
                     f'C {cx - 70:.1f} {cy - 90:.1f} {cx + 70:.1f} {cy - 90:.1f} '
                     f'{cx + 18:.1f} {cy - 10:.1f}"/>')
        parts.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="22"/>')
        parts.append(f'<text x="{cx:.1f}" y="{cy + 5:.1f}">{-w[0]}</text>')
    else:
        pts = []
        for i in range(n):
            ang = -pi / 2 + 2 * pi * i / n
            pts.append((cx + rad * cos(ang), cy + rad * sin(ang)))
        for i in range(n):
            x1, y1 = pts[i]
            x2, y2 = pts[(i + 1) % n]
            parts.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" '
                         f'x2="{x2:.1f}" y2="{y2:.1f}"/>')
        for i, (x, y) in enumerate(pts):
            parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="22"/>')
            parts.append(f'<text x="{x:.1f}" y="{y + 5:.1f}">{-w[i]}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def build_parser() -> _Parser:
    p = _Parser(prog="cuspcalc",
                description="exact calculus of cusp cycles, their duals, "
                            "monodromy, covers and quotients")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(func=func)
        return sp

    sp = add("dual", _cmd_dual, help="dual cusp cycle")
    sp.add_argument("cycle", type=parse_seq)
    sp = add("charge", _cmd_charge, help="charge 12 + sum(d_i - 3)")
    sp.add_argument("cycle", type=parse_seq)
    sp = add("monodromy", _cmd_monodromy, help="SL2(Z) boundary monodromy")
    sp.add_argument("cycle", type=parse_seq)
    sp = add("torsion", _cmd_torsion, help="torsion of the link homology")
    sp.add_argument("cycle", type=parse_seq)
    sp = add("lci", _cmd_lci, help="complete-intersection classification")
    sp.add_argument("cycle", type=parse_seq)
    sp = add("nwcover", _cmd_nwcover, help="one-vertex lci cover")
    sp.add_argument("cycle", type=parse_seq)
    sp = add("quotient", _cmd_quotient, help="cyclic lattice quotient cycle")
    sp.add_argument("cycle", type=parse_seq)
    sp.add_argument("k", type=int)
    sp = add("toricmodel", _cmd_toricmodel, help="search a toric model script")
    sp.add_argument("cycle", type=parse_seq)
    sp.add_argument("--max-corner-ops", type=int, default=2)
    sp.add_argument("--max-depth", type=int, default=64)
    sp = add("enumerate", _cmd_enumerate, help="all cycles with a given trace")
    sp.add_argument("trace", type=int)
    sp.add_argument("--max-len", type=int, default=6)
    sp = add("validate-typeiii", _cmd_validate_typeiii,
             help="validate a triangulated sphere complex")
    sp.add_argument("path")
    sp.add_argument("--star", type=parse_seq, default=None,
                    help="expected star of the distinguished vertex")
    sp = add("verify", _cmd_verify, help="run the golden example corpus")
    sp.add_argument("--corpus", default=None, help="corpus JSON path")
    sp.add_argument("--strict-rotation", action="store_true",
                    help="compare cycles without rotation normalization")
    sp = add("diagram", _cmd_diagram, help="SVG diagram of a cycle")
    sp.add_argument("cycle", type=parse_seq)
    sp.add_argument("--out", required=True)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = os.environ.get("CUSPCALC_SEED")
    if seed is not None:
        import random

        random.seed(int(seed))
    try:
        return args.func(args)
    except CuspError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return DOMAIN_EXIT


if __name__ == "__main__":
    sys.exit(main())
