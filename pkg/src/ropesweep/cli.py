"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 resource limit, 4 invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from .arrangement import (
    WiringDiagram,
    canonicalize,
    enumerate_arrangements,
    reflect_horizontal,
)
from .constructions import (
    lower_bound_family,
    verify_lower_bound,
    verify_worst_case,
    worst_case_family,
)
from .cutwidth import (
    SmallGraph,
    cutwidth_exact,
    directed_cutwidth_exact,
    make_order,
    order_g_to_h,
    order_h_to_g,
    reduce_to_dcw,
)
from .errors import InputError, InvariantViolation, ParseError, ResourceLimit, RopeSweepError
from .graph import ArrangementGraph, build_dual, build_graph
from .io import (
    format_arrangement,
    parse_inline,
    read_arrangement,
    records_to_csv,
    sidecar_path,
    write_arrangement,
    write_json,
)
from .optimal import DEFAULT_BUDGET_IDEALS, optimal_rope_length, rope_flip_search
from .render import render_svg
from .sweep import flip_face, flip_vertex, initial_state, primal_dual_sweep

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE, EXIT_INVARIANT = 0, 2, 3, 4
LONG_N, VERY_LONG_N, MAX_N = 8, 9, 9


def _dump(obj: object) -> str:
    return json.dumps(obj, sort_keys=True)


def _load_arrangement(args: argparse.Namespace) -> WiringDiagram:
    if args.seed_format == "word":
        return parse_inline(args.arrangement)
    try:
        return read_arrangement(args.arrangement)
    except OSError as exc:
        raise InputError(f"cannot read {args.arrangement}: {exc.strerror}") from exc


def _check_size(n: int, args: argparse.Namespace) -> None:
    if n < 2:
        raise InputError(f"need at least 2 pseudolines, got n={n}")
    if n > MAX_N:
        raise InputError(f"n={n} is beyond the supported exhaustive range (at most {MAX_N})")
    if n >= VERY_LONG_N and not args.very_long:
        raise InputError(f"n={n} needs --very-long")
    if n >= LONG_N and not (args.long or args.very_long):
        raise InputError(f"n={n} needs --long")


# -- subcommands ------------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    _check_size(args.n, args)
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        if args.count_only:
            visitor = None
        else:
            def visitor(swaps: tuple[int, ...]) -> None:
                out.write(" ".join(map(str, swaps)) + "\n")
        count = enumerate_arrangements(
            args.n, visitor, max_seconds=args.budget_seconds, raw=True
        )
    finally:
        if args.output:
            out.close()
    if args.count_only or args.output:
        print(count)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    wd = _load_arrangement(args)
    g = build_graph(wd)
    trace = primal_dual_sweep(g, verify=args.verify)
    if args.trace:
        Path(args.trace).write_text("\n".join(trace.jsonl_lines(g)) + "\n", encoding="utf-8")
    print(_dump({"n": wd.n, "max_rope": trace.max_rope_length, "moves": len(trace.moves)}))
    return EXIT_OK


def cmd_optimal(args: argparse.Namespace) -> int:
    wd = _load_arrangement(args)
    g = build_graph(wd)
    res = optimal_rope_length(
        g, budget_ideals=args.budget_ideals, budget_seconds=args.budget_seconds
    )
    rec = {
        "n": wd.n,
        "optimal": res.optimal,
        "witness": list(res.witness),
        "lower_bound": res.lower_bound,
        "primal_dual": res.primal_dual,
        "ideals_explored": res.ideals_explored,
    }
    status = EXIT_OK
    if args.oracle:
        dual = build_dual(g)
        dg = SmallGraph(dual.num_vertices, tuple(dual.edge_pairs()), directed=True)
        dcw = directed_cutwidth_exact(
            dg, max_vertices=dual.num_vertices, budget_seconds=args.budget_seconds
        ).width
        ropes = rope_flip_search(g)
        rec["oracle"] = {"directed_cutwidth": dcw, "rope_search": ropes}
        rec["agree"] = res.optimal == dcw == ropes
        if not rec["agree"]:
            status = EXIT_INVARIANT
    print(_dump(rec))
    return status


def cmd_experiments(args: argparse.Namespace) -> int:
    from .experiments import CSV_FIELDS, run_row
    from .report import plot_histograms

    lo, hi = args.n_min, args.n_max
    if lo > hi:
        raise InputError("--n-min exceeds --n-max")
    for n in range(lo, hi + 1):
        _check_size(n, args)
    rows = []
    for n in range(lo, hi + 1):
        row = run_row(
            n, jobs=args.jobs, budget_ideals=args.budget_ideals, budget_seconds=args.budget_seconds
        )
        rows.append(row)
        print(_dump(row.record()), file=sys.stderr)
    text = records_to_csv([r.record() for r in rows], CSV_FIELDS)
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.figure:
        plot_histograms(rows, args.figure)
    if any(r.status != "ok" for r in rows):
        return EXIT_RESOURCE
    return EXIT_OK


def _replay(g: ArrangementGraph, moves: Sequence[tuple[str, int]]) -> list[tuple[int, ...]]:
    rope, dual, _ = initial_state(g)
    ropes = [rope]
    for kind, ident in moves:
        if kind == "face":
            rope = flip_face(g, rope, ident)
        else:
            dual = flip_vertex(g, dual, ident)
        ropes.append(rope)
    return ropes


def _read_trace(path: str) -> list[tuple[str, int]]:
    moves = []
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    for i, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            kind = rec["kind"]
            if kind != "init":
                moves.append((kind, int(rec["id"])))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad trace record: {exc}", i) from exc
    return moves


def _resolve_step(sel: str, moves: Sequence[tuple[str, int]], ropes: Sequence[tuple[int, ...]]) -> int:
    if sel == "last":
        return len(moves)
    if sel == "max":
        longest = max(map(len, ropes))
        return next(i for i, r in enumerate(ropes) if len(r) == longest)
    if sel.startswith("face:"):
        f = int(sel[5:])
        for i, (kind, ident) in enumerate(moves, 1):
            if kind == "face" and ident == f:
                return i
        raise InputError(f"face {f} is never flipped")
    k = int(sel)
    if not 0 <= k <= len(moves):
        raise InputError(f"step {k} outside 0..{len(moves)}")
    return k


def cmd_render(args: argparse.Namespace) -> int:
    wd = _load_arrangement(args)
    g = build_graph(wd)
    faces = None
    if args.sidecar:
        try:
            side = json.loads(Path(args.sidecar).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read sidecar {args.sidecar}: {exc}") from exc
        faces = {k: v for k, v in side.get("faces", {}).items() if v is not None}
        for name, f in faces.items():
            if not (isinstance(f, int) and 0 <= f < g.num_inner_faces):
                raise InputError(f"sidecar face {name}={f!r} is not an inner face")
    out = Path(args.output)
    if not args.step:
        out.write_text(render_svg(g, faces=faces), encoding="utf-8")
        print(out)
        return EXIT_OK
    if args.trace:
        moves = _read_trace(args.trace)
    else:
        moves = [(m.kind, m.id) for m in primal_dual_sweep(g).moves]
    try:
        ropes = _replay(g, moves)
    except RopeSweepError as exc:
        raise InputError(f"trace does not replay on this arrangement: {exc}") from exc
    for sel in args.step:
        try:
            k = _resolve_step(sel, moves, ropes)
        except ValueError as exc:
            raise InputError(f"bad step selector {sel!r}") from exc
        path = out if len(args.step) == 1 else out.with_name(f"{out.stem}-step{k}{out.suffix}")
        path.write_text(
            render_svg(g, rope=ropes[k], faces=faces, title=f"step {k}"), encoding="utf-8"
        )
        print(path)
    return EXIT_OK


def _parse_order(text: str, n: int) -> list[int]:
    try:
        order = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"bad vertex order {text!r}") from exc
    if sorted(order) != list(range(n)):
        raise InputError(f"order must be a permutation of 0..{n - 1}")
    return order


def cmd_cutwidth(args: argparse.Namespace) -> int:
    try:
        text = Path(args.graph).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {args.graph}: {exc.strerror}") from exc
    g = SmallGraph.parse(text)
    rec: dict = {"n": g.n, "edges": len(g.edges), "directed": g.directed}
    if args.to_h or args.to_g:
        if g.directed:
            raise InputError("order conversion takes the undirected graph G")
        if args.to_h:
            sigma_h = order_g_to_h(g, _parse_order(args.to_h, g.n))
            rec["order_h"], rec["cuts"], rec["width"] = list(sigma_h.order), list(sigma_h.cuts), sigma_h.width
        else:
            h = reduce_to_dcw(g)
            h_order = _parse_order(args.to_g, h.n)
            try:
                make_order(h, h_order)
            except ValueError as exc:
                raise InputError(str(exc)) from exc
            log: list = []
            sigma_g = order_h_to_g(g, h_order, log)
            rec["order_g"], rec["cuts"], rec["width"] = list(sigma_g.order), list(sigma_g.cuts), sigma_g.width
            rec["exchanges"] = [[x.position, x.cut_before, x.cut_after] for x in log]
        print(_dump(rec))
        return EXIT_OK
    if args.reduce:
        if g.directed:
            raise InputError("--reduce takes an undirected graph")
        g = reduce_to_dcw(g)
        rec.update(reduced_n=g.n, reduced_edges=len(g.edges))
    if g.directed:
        sol = directed_cutwidth_exact(
            g, budget_states=args.budget_ideals, budget_seconds=args.budget_seconds
        )
        rec["directed_cutwidth"] = sol.width
    else:
        sol = cutwidth_exact(g)
        rec["cutwidth"] = sol.width
    rec["order"], rec["cuts"] = list(sol.order), list(sol.cuts)
    print(_dump(rec))
    return EXIT_OK


def _write_family(path: str, wd: WiringDiagram, sidecar: dict, comment: str) -> None:
    write_arrangement(path, wd, [comment])
    write_json(sidecar_path(path), sidecar)


def cmd_gen_lower_bound(args: argparse.Namespace) -> int:
    if args.K < 1:
        raise InputError("K must be at least 1")
    inst = lower_bound_family(args.K)
    cert = verify_lower_bound(inst)
    if not cert:
        raise InvariantViolation(f"generated instance fails its certificate: {cert.violation}")
    side = inst.sidecar() | {"certificate": cert.values}
    if args.output:
        _write_family(args.output, inst.wd, side, f"lower-bound family K={args.K}")
        print(args.output)
    else:
        sys.stdout.write(format_arrangement(inst.wd))
    return EXIT_OK


def cmd_gen_worst_case(args: argparse.Namespace) -> int:
    if args.n < 3:
        raise InputError("worst-case family needs n >= 3")
    inst = worst_case_family(args.n)
    cert = verify_worst_case(inst)
    if not cert:
        raise InvariantViolation(f"generated instance fails its certificate: {cert.violation}")
    wd, side = inst.wd, inst.sidecar()
    if args.reflect:
        wd = canonicalize(reflect_horizontal(wd))
        side = {"family": "worst_case_reflected", "n": args.n, "faces": {}}
    if args.output:
        _write_family(args.output, wd, side, f"worst-case family n={args.n}")
        print(args.output)
    else:
        sys.stdout.write(format_arrangement(wd))
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed-format", choices=("file", "word"), default="file",
                        help="read the arrangement argument as a file path or as inline 'n:word'")
    common.add_argument("--budget-ideals", type=int, default=DEFAULT_BUDGET_IDEALS,
                        help="state budget for the exact solvers")
    common.add_argument("--budget-seconds", type=float, default=None)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--oracle", action="store_true",
                        help="cross-check with the independent solvers")
    common.add_argument("--verify", action="store_true",
                        help="check hugging and the structural claims at every sweep step")
    common.add_argument("--long", action="store_true", help="allow n = 8")
    common.add_argument("--very-long", action="store_true", help="allow n = 9")

    p = argparse.ArgumentParser(prog="ropesweep", description="Sweeping pseudoline arrangements with a rope.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[common], help="list one canonical word per arrangement")
    s.add_argument("n", type=int)
    s.add_argument("-o", "--output")
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("sweep", parents=[common], help="run the primal-dual sweep")
    s.add_argument("arrangement")
    s.add_argument("--trace", help="write the JSON-lines trace here")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("optimal", parents=[common], help="exact minimum rope-length")
    s.add_argument("arrangement")
    s.set_defaults(func=cmd_optimal)

    s = sub.add_parser("experiments", parents=[common], help="exhaustive statistics per n")
    s.add_argument("--n-min", type=int, default=2)
    s.add_argument("--n-max", type=int, default=7)
    s.add_argument("--csv", help="CSV output path (default stdout)")
    s.add_argument("--figure", help="histogram figure path (.svg, .png or .pdf)")
    s.set_defaults(func=cmd_experiments)

    s = sub.add_parser("render", parents=[common], help="draw the wiring diagram as SVG")
    s.add_argument("arrangement")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--trace", help="trace to replay (default: run the primal-dual sweep)")
    s.add_argument("--step", action="append",
                   help="step to draw: an integer, 'last', 'max' or 'face:F'; repeatable")
    s.add_argument("--sidecar", help="JSON sidecar whose faces are highlighted")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("cutwidth", parents=[common], help="exact (directed) cutwidth of a graph file")
    s.add_argument("graph")
    s.add_argument("--reduce", action="store_true", help="solve the reduced directed instance")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--to-h", metavar="ORDER", help="convert an order of G to an order of the reduced graph")
    g.add_argument("--to-g", metavar="ORDER", help="convert an order of the reduced graph back to G")
    s.set_defaults(func=cmd_cutwidth)

    s = sub.add_parser("gen-lower-bound", parents=[common], help="lower-bound family instance")
    s.add_argument("K", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen_lower_bound)

    s = sub.add_parser("gen-worst-case", parents=[common], help="worst case of the primal-dual sweep")
    s.add_argument("n", type=int)
    s.add_argument("--reflect", action="store_true", help="emit the horizontal reflection")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen_worst_case)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantViolation as exc:
        print(f"error: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (InputError, RopeSweepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
