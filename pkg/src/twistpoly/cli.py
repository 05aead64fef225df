"""Command-line interface.

    twistpoly dm poly --input pair.json
    twistpoly rg random --vertices 2 --edges 3 --seed 7
    twistpoly verify theorem5 --n 4

Exit status: 0 on success or a passing check, 1 on a property or hypothesis
violation, 2 on malformed input.  JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import documents as docs
from .errors import GuardError, HypothesisError, ImproperError, LabelError, TwistPolyError
from .gf2 import delta_matroid_of_matrix, is_binary, reconstruct_matrix
from .harness import CHECKS, UnknownCheckError, run_check
from .ribbon import delta_matroid_of_graph, graph_counts, partial_dual_polynomial, random_ribbon_graph
from .setsys import (
    MAX_ENUMERATION,
    element_flags,
    element_type,
    find_exchange_violation,
    is_delta_matroid,
    is_even,
    twist_width_data,
    width_profile,
)
from .widthpoly import classify, twist_polynomial


class InputError(Exception):
    pass


class Violation(Exception):
    """Raised to exit with status 1 after printing a result."""


def _read_json(path: str | None):
    if path is None:
        raise InputError("--input is required (use '-' for standard input)")
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _poly_json(p) -> dict:
    return {"coefficients": docs.render_polynomial(p), "category": classify(p).category}


def cmd_dm_poly(args):
    D = docs.parse_set_system(_read_json(args.input))
    return _poly_json(twist_polynomial(D))


def cmd_dm_classify(args):
    D = docs.parse_set_system(_read_json(args.input))
    p = twist_polynomial(D)
    out = {"coefficients": docs.render_polynomial(p), **docs.render_report(classify(p))}
    if D.n <= MAX_ENUMERATION and is_delta_matroid(D):
        out["binary"] = is_binary(D, assume_delta_matroid=True)
    else:
        out["binary"] = None
    return out


def cmd_dm_check_axioms(args):
    D = docs.parse_set_system(_read_json(args.input))
    out = {"proper": D.is_proper, "normal": D.is_normal, "is_delta_matroid": is_delta_matroid(D)}
    if D.is_proper:
        out["even"] = is_even(D)
        bad = find_exchange_violation(D)
        if bad is not None:
            X, Y, u = bad
            out["exchange_violation"] = {"X": D.names(X), "Y": D.names(Y), "u": D.labels[u]}
    return out


def cmd_dm_types(args):
    D = docs.parse_set_system(_read_json(args.input))
    types, flags = {}, {}
    for e in D.labels:
        types[e] = str(element_type(D, e))
        f = element_flags(D, e)
        flags[e] = {
            "coloop": f.coloop,
            "loop": f.loop,
            "ribbon_loop": f.ribbon_loop,
            "orientable_ribbon_loop": f.orientable_ribbon_loop,
        }
    return {"types": types, "flags": flags}


def cmd_dm_width(args):
    D = docs.parse_set_system(_read_json(args.input))
    prof = width_profile(D)
    out = {"r_min": prof.r_min, "r_max": prof.r_max, "width": prof.width}
    if D.n <= MAX_ENUMERATION:
        data = twist_width_data(D)
        out["twist_widths"] = sorted(data.width_set)
        out["w_M"] = data.w_M
    return out


def cmd_dm_from_matrix(args):
    C = docs.parse_matrix(_read_json(args.input))
    return docs.render_set_system(delta_matroid_of_matrix(C))


def cmd_dm_to_matrix(args):
    D = docs.parse_set_system(_read_json(args.input))
    C = reconstruct_matrix(D)
    if D.n <= MAX_ENUMERATION and delta_matroid_of_matrix(C) != D:
        print("warning: the input is not D(C) for the reconstructed matrix (not binary)", file=sys.stderr)
    return docs.render_matrix(C)


def cmd_dm_is_binary(args):
    D = docs.parse_set_system(_read_json(args.input))
    return {"is_binary": is_binary(D)}


def cmd_rg_counts(args):
    G = docs.parse_ribbon_graph(_read_json(args.input))
    c = graph_counts(G)
    return {"v": c.v, "e": c.e, "c": c.c, "f": c.f, "chi": c.chi, "euler_genus": c.euler_genus,
            "orientable": c.orientable}


def cmd_rg_delta_matroid(args):
    G = docs.parse_ribbon_graph(_read_json(args.input))
    return docs.render_set_system(delta_matroid_of_graph(G))


def cmd_rg_poly(args):
    G = docs.parse_ribbon_graph(_read_json(args.input))
    return _poly_json(partial_dual_polynomial(G))


def cmd_rg_random(args):
    try:
        G = random_ribbon_graph(args.vertices, args.edges, args.twist_probability, args.seed or 0)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return docs.render_ribbon_graph(G)


_VERIFY_FLAGS = {
    "n": "n",
    "seed": "seed",
    "matrix_n": "matrix_n",
    "samples": "samples",
    "twists": "twists",
    "max_v": "max_v",
    "max_e": "max_e",
}


def _verify_one(check_id: str, args) -> dict:
    defaults = CHECKS[check_id].defaults
    params = {}
    for flag, key in _VERIFY_FLAGS.items():
        value = getattr(args, flag, None)
        if value is not None and key in defaults:
            params[key] = value
    try:
        report = run_check(check_id, jobs=args.jobs, **params)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    verdict = "pass" if report.passed else "FAIL"
    print(f"{check_id}: {verdict} ({report.instances_checked} instances, {report.elapsed:.2f}s)", file=sys.stderr)
    return report.to_json(timing=args.timing)


def cmd_verify(args):
    check_id = args.check_id
    if check_id == "list":
        return {cid: {"description": c.description, "defaults": c.defaults} for cid, c in CHECKS.items()}
    if check_id == "all":
        reports = [_verify_one(cid, args) for cid in CHECKS]
        result = {"passed": all(r["passed"] for r in reports), "reports": reports}
        if not result["passed"]:
            raise Violation(result)
        return result
    if check_id not in CHECKS:
        raise InputError(f"unknown check {check_id!r}; known: {', '.join(CHECKS)}, all, list")
    report = _verify_one(check_id, args)
    if not report["passed"]:
        raise Violation(report)
    return report


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", metavar="PATH", help="input JSON document ('-' for stdin)")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--n", type=int, default=None, help="size / dimension of the verification domain")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verification sweeps")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    common.set_defaults(pretty=False)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="twistpoly", description=__doc__.split("\n\n")[0])
    groups = parser.add_subparsers(dest="group", required=True)

    dm = groups.add_parser("dm", help="set systems and delta-matroids").add_subparsers(dest="command", required=True)
    dm_cmds: dict[str, tuple[Callable, str]] = {
        "poly": (cmd_dm_poly, "twist polynomial and its category"),
        "classify": (cmd_dm_classify, "full even/odd/interpolating report"),
        "check-axioms": (cmd_dm_check_axioms, "symmetric exchange axiom, properness, evenness"),
        "types": (cmd_dm_types, "element types and loop flags"),
        "width": (cmd_dm_width, "width profile and twist widths"),
        "from-matrix": (cmd_dm_from_matrix, "D(C) of a symmetric GF(2) matrix"),
        "to-matrix": (cmd_dm_to_matrix, "reconstruct the matrix of a normal set system"),
        "is-binary": (cmd_dm_is_binary, "decide binaryness of a delta-matroid"),
    }
    for name, (fn, help_) in dm_cmds.items():
        dm.add_parser(name, parents=[common], help=help_).set_defaults(func=fn)

    rg = groups.add_parser("rg", help="ribbon graphs").add_subparsers(dest="command", required=True)
    rg.add_parser("counts", parents=[common], help="v, e, c, f, Euler genus").set_defaults(func=cmd_rg_counts)
    rg.add_parser("delta-matroid", parents=[common], help="delta-matroid of spanning quasi-trees").set_defaults(
        func=cmd_rg_delta_matroid)
    rg.add_parser("poly", parents=[common], help="partial-dual Euler-genus polynomial").set_defaults(func=cmd_rg_poly)
    rnd = rg.add_parser("random", parents=[common], help="seeded random ribbon graph")
    rnd.add_argument("--vertices", type=int, default=1)
    rnd.add_argument("--edges", type=int, default=0)
    rnd.add_argument("--twist-probability", type=float, default=0.5)
    rnd.set_defaults(func=cmd_rg_random)

    ver = groups.add_parser("verify", parents=[common], help="run a verification check ('list' shows all)")
    ver.add_argument("check_id")
    ver.add_argument("--matrix-n", type=int, default=None)
    ver.add_argument("--samples", type=int, default=None)
    ver.add_argument("--twists", type=int, default=None)
    ver.add_argument("--max-v", type=int, default=None)
    ver.add_argument("--max-e", type=int, default=None)
    ver.add_argument("--timing", action="store_true", help="include elapsed seconds in the report")
    ver.set_defaults(func=cmd_verify)
    return parser


def _emit(obj, pretty: bool) -> None:
    if pretty:
        text = json.dumps(obj, indent=2)
    else:
        text = json.dumps(obj, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        result = args.func(args)
    except Violation as exc:
        _emit(exc.args[0], args.pretty)
        return 1
    except (HypothesisError, ImproperError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InputError, docs.DocumentError, LabelError, GuardError, UnknownCheckError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TwistPolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(result, args.pretty)
    return 0


def main() -> None:
    sys.exit(run())
