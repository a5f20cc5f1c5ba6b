"""Command-line front-end.

Subcommands: solve, oracle, sub, gamma, enum, dcs2, dcs3, p5.  Exit codes:
0 success, 1 no-instance answers, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .connsets import enumerate_small_connected
from .dcs import p5_contract, solve_2dcs, solve_3dcs
from .driver import Constants, solve
from .errors import ParseError, PathContractError
from .graph import Graph, bits, mask_of, parse_graph
from .oracle import oracle_path_contraction
from .subroutines import bpc, nsoepc, soepc, tdcpc
from .table import compute_gamma


def _fraction(text):
    """Exact rational from a decimal or a/b string."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None


def _vertex_list(text):
    try:
        values = [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise ParseError(f"not a comma-separated vertex list: {text!r}") from None
    if not values:
        raise ParseError("vertex list is empty")
    return values


def _load_graph(path) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _terminal_mask(g, text):
    values = _vertex_list(text)
    for v in values:
        if not 0 <= v < g.n:
            raise ParseError(f"terminal vertex {v} out of range for n={g.n}")
    return mask_of(values)


def _witness_lists(w):
    return [list(bits(p)) for p in w.parts]


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="pathcontract",
        description="Longest path contraction solver",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("graph", help="graph file (header 'n m', then edges 'u v')")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("solve", help="run the full solver")
    common(p)
    p.add_argument("--timing", action="store_true", help="report stage times")
    p.add_argument("--alpha", type=_fraction, default=None)
    p.add_argument("--beta", type=_fraction, default=None)
    p.add_argument("--gamma", type=_fraction, default=None)
    p.add_argument("--epsilon", type=_fraction, default=None)
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("oracle", help="brute-force referee answer")
    common(p)

    p = sub.add_parser("sub", help="run a single subroutine")
    p.add_argument("name", choices=["soepc", "bpc", "tdcpc", "nsoepc"])
    common(p)
    p.add_argument("--param", type=_fraction, required=True)

    p = sub.add_parser("gamma", help="dump the anchored-path table")
    common(p)
    p.add_argument("--rho", type=_fraction, required=True)

    p = sub.add_parser("enum", help="list small connected sets")
    common(p)
    p.add_argument("--rho", type=_fraction, required=True)

    for name in ("dcs2", "dcs3"):
        p = sub.add_parser(name, help=f"{name[-1]}-disjoint connected subgraphs")
        common(p)
        p.add_argument("--z1", required=True)
        p.add_argument("--z2", required=True)

    p = sub.add_parser("p5", help="is the graph contractible to the 5-path")
    common(p)
    return parser


def _cmd_solve(args, out):
    g = _load_graph(args.graph)
    overrides = {}
    for name in ("alpha", "beta", "gamma", "epsilon"):
        value = getattr(args, name)
        if value is not None:
            overrides[name] = value
    constants = Constants(**overrides)
    t0 = time.perf_counter()
    report = solve(g, constants, threads=args.threads)
    wall = time.perf_counter() - t0
    if args.json:
        payload = {
            "t": report.t,
            "witness": _witness_lists(report.witness),
            "subroutines": report.per_subroutine,
        }
        if args.timing:
            payload["elapsed"] = dict(report.elapsed, wall=wall)
        json.dump(payload, out)
        out.write("\n")
    else:
        out.write(f"t = {report.t}\n")
        for i, part in enumerate(_witness_lists(report.witness), start=1):
            out.write(f"  W{i}: {part}\n")
        for name, value in report.per_subroutine.items():
            out.write(f"{name}: {value}\n")
        if args.timing:
            for name, secs in report.elapsed.items():
                out.write(f"time {name}: {secs:.3f}s\n")
            out.write(f"time wall: {wall:.3f}s\n")
    return 0


def _cmd_oracle(args, out):
    g = _load_graph(args.graph)
    t, witness = oracle_path_contraction(g)
    if args.json:
        json.dump({"t": t, "witness": _witness_lists(witness)}, out)
        out.write("\n")
    else:
        out.write(f"t = {t}\n")
        for i, part in enumerate(_witness_lists(witness), start=1):
            out.write(f"  W{i}: {part}\n")
    return 0


def _cmd_sub(args, out):
    g = _load_graph(args.graph)
    fn = {"soepc": soepc, "bpc": bpc, "tdcpc": tdcpc, "nsoepc": nsoepc}[args.name]
    result = fn(g, args.param)
    if args.json:
        payload = {"t": result.t, "subroutine": result.subroutine}
        if result.witness is not None:
            payload["witness"] = _witness_lists(result.witness)
        json.dump(payload, out)
        out.write("\n")
    else:
        out.write(f"{result.subroutine}: t = {result.t}\n")
        if result.witness is not None:
            for i, part in enumerate(_witness_lists(result.witness), start=1):
                out.write(f"  W{i}: {part}\n")
    return 0


def _cmd_gamma(args, out):
    g = _load_graph(args.graph)
    table = compute_gamma(g, args.rho)
    rows = [
        {"set": list(bits(s)), "gamma": table.gamma(s)}
        for s in sorted(table.keys(), key=lambda s: (s.bit_count(), s))
    ]
    json.dump(rows, out)
    out.write("\n")
    return 0


def _cmd_enum(args, out):
    g = _load_graph(args.graph)
    sets = enumerate_small_connected(g, args.rho)
    if args.json:
        json.dump([list(bits(s)) for s in sets], out)
        out.write("\n")
    else:
        for s in sets:
            out.write(f"{list(bits(s))}\n")
    return 0


def _cmd_dcs2(args, out):
    g = _load_graph(args.graph)
    z1 = _terminal_mask(g, args.z1)
    z2 = _terminal_mask(g, args.z2)
    sol = solve_2dcs(g, z1, z2)
    if sol is None:
        out.write('{"answer": "no"}\n' if args.json else "no\n")
        return 1
    if args.json:
        json.dump({"answer": "yes", "v1": list(bits(sol.v1)), "v2": list(bits(sol.v2))}, out)
        out.write("\n")
    else:
        out.write(f"yes\nV1: {list(bits(sol.v1))}\nV2: {list(bits(sol.v2))}\n")
    return 0


def _cmd_dcs3(args, out):
    g = _load_graph(args.graph)
    z1 = _terminal_mask(g, args.z1)
    z2 = _terminal_mask(g, args.z2)
    sol = solve_3dcs(g, z1, z2)
    if sol is None:
        out.write('{"answer": "no"}\n' if args.json else "no\n")
        return 1
    if args.json:
        json.dump(
            {
                "answer": "yes",
                "v1": list(bits(sol.v1)),
                "u": list(bits(sol.u)),
                "v2": list(bits(sol.v2)),
            },
            out,
        )
        out.write("\n")
    else:
        out.write(
            f"yes\nV1: {list(bits(sol.v1))}\n"
            f"U: {list(bits(sol.u))}\nV2: {list(bits(sol.v2))}\n"
        )
    return 0


def _cmd_p5(args, out):
    g = _load_graph(args.graph)
    answer = p5_contract(g)
    if args.json:
        json.dump({"answer": "yes" if answer else "no"}, out)
        out.write("\n")
    else:
        out.write("yes\n" if answer else "no\n")
    return 0 if answer else 1


_COMMANDS = {
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "sub": _cmd_sub,
    "gamma": _cmd_gamma,
    "enum": _cmd_enum,
    "dcs2": _cmd_dcs2,
    "dcs3": _cmd_dcs3,
    "p5": _cmd_p5,
}


def run(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args, out)
    except PathContractError as exc:
        err.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
