"""Command-line entry point.

Exit codes: 0 finite/success, 1 infinite, 2 unknown, 3 usage error,
4 input error, 5 budget exceeded. Results go to stdout as JSON; diagnostics
go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from .algebra import SpecError, parse, scale, serialize, to_dict, validate
from .decide import Status, decide, decide_scaled
from .graphs import Graph, GraphError, classify, dynkin_graph
from .oracle import (
    DEFAULT_BUDGET,
    DEFAULT_MATRIX_BUDGET,
    BudgetExceeded,
    FFInstance,
    growth_probe,
    orbit_count_matrices,
    orbit_count_subspaces,
)
from .quiver import dimension_vector, ordinary_quiver, reverse, separated
from .tits import QuadraticForm, count_classes, format_count, positive_roots, tits_value

EXIT_OK, EXIT_INFINITE, EXIT_UNKNOWN = 0, 1, 2
EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 3, 4, 5

_STATUS_EXIT = {Status.FINITE: EXIT_OK, Status.INFINITE: EXIT_INFINITE, Status.UNKNOWN: EXIT_UNKNOWN}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_spec(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from exc
    return parse(data)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


# Each handler maps parsed args (+ a loaded spec where relevant) to (payload, exit code).


def _cmd_validate(args, spec):
    return {"valid": True, "spec": to_dict(spec)}, EXIT_OK


def _cmd_classify(args, spec):
    if spec is not None:
        graph = separated(spec).underlying_graph()
    else:
        try:
            obj = json.loads(Path(args.graph).read_text())
            graph = Graph(obj["n"], obj["edges"])
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise SpecError(f"bad graph file {args.graph}: {exc}") from exc
    return classify(graph).to_json(), EXIT_OK


def _cmd_decide(args, spec):
    verdict = decide_scaled(spec, args.scale) if args.scale else decide(spec)
    return verdict.to_json(), _STATUS_EXIT[verdict.status]


def _cmd_count(args, spec):
    return {"classes": format_count(count_classes(spec))}, EXIT_OK


def _cmd_tits(args, spec):
    x = _ints(args.dim)
    if args.quiver == "ordinary":
        form = QuadraticForm.of(ordinary_quiver(spec))
    else:
        form = QuadraticForm.of(separated(spec))
    try:
        return tits_value(form, x), EXIT_OK
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _cmd_roots(args, spec):
    try:
        graph = dynkin_graph(args.dynkin)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return [list(r) for r in positive_roots(graph)], EXIT_OK


def _cmd_scale(args, spec):
    if args.m < 1:
        raise UsageError("--m must be positive")
    return json.loads(serialize(scale(spec, args.m))), EXIT_OK


def _cmd_emit_quiver(args, spec):
    if args.which == "ordinary":
        q = ordinary_quiver(spec)
    elif args.which == "reversed":
        q = reverse(separated(spec))
    else:
        q = separated(spec)
    if args.format == "dot":
        return q.to_dot(), EXIT_OK
    out = q.to_json()
    if args.which != "ordinary":
        out["dimension_vector"] = list(dimension_vector(spec))
    return out, EXIT_OK


def _cmd_oracle(args, spec):
    inst = FFInstance(spec, args.q)
    out = {"ideals": inst.ideal_count(), "q": args.q, "mode": args.mode}
    if args.mode in ("subspaces", "both"):
        out["orbits"] = orbit_count_subspaces(inst, args.budget or DEFAULT_BUDGET)
    if args.mode in ("matrices", "both"):
        m = orbit_count_matrices(inst, args.budget or DEFAULT_MATRIX_BUDGET)
        if args.mode == "matrices":
            out["orbits"] = m
        else:
            out["orbits_matrices"] = m
            if m != out["orbits"]:
                print("warning: subspace and matrix orbit counts differ", file=sys.stderr)
    return out, EXIT_OK


def _cmd_oracle_growth(args, spec):
    qs = _ints(args.qs)
    return growth_probe(spec, qs, args.budget or DEFAULT_BUDGET).to_json(), EXIT_OK


COMMANDS = {
    "validate": _cmd_validate,
    "classify": _cmd_classify,
    "decide": _cmd_decide,
    "count": _cmd_count,
    "tits": _cmd_tits,
    "roots": _cmd_roots,
    "scale": _cmd_scale,
    "emit-quiver": _cmd_emit_quiver,
    "oracle": _cmd_oracle,
    "oracle-growth": _cmd_oracle_growth,
}
NEEDS_SPEC = set(COMMANDS) - {"roots", "classify"}
BATCHABLE = {"validate", "classify", "decide", "count", "scale", "emit-quiver"}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="radzero", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def spec_cmd(name, help_):
        c = sub.add_parser(name, help=help_)
        src = c.add_mutually_exclusive_group()
        src.add_argument("--spec", help="algebra spec JSON file")
        if name in BATCHABLE:
            src.add_argument("--batch", metavar="DIR", help="process every *.json in DIR (JSON lines)")
        return c

    spec_cmd("validate", "check a spec")
    c = spec_cmd("classify", "Dynkin/Euclidean classification of the separated graph")
    c._mutually_exclusive_groups[0].add_argument(
        "--graph", help='graph JSON file {"n": N, "edges": [[u, v], ...]}'
    )
    c = spec_cmd("decide", "decide finiteness of conjugacy classes of left ideals")
    c.add_argument("--scale", type=int, default=None, metavar="M", help="decide for M_m(A)")
    spec_cmd("count", "number of conjugacy classes of nilpotent left ideals")
    c = spec_cmd("tits", "evaluate the Tits form")
    c.add_argument("--dim", required=True, help="comma-separated dimension vector")
    c.add_argument("--quiver", choices=["separated", "ordinary"], default="separated")
    c = sub.add_parser("roots", help="positive roots of a Dynkin diagram")
    c.add_argument("--dynkin", required=True, help="A5, D4, E8, ...")
    c = spec_cmd("scale", "block data of M_m(A)")
    c.add_argument("--m", type=int, required=True)
    c = spec_cmd("emit-quiver", "export a quiver")
    c.add_argument("--which", choices=["separated", "ordinary", "reversed"], default="separated")
    c.add_argument("--format", choices=["json", "dot"], default="json")
    c = spec_cmd("oracle", "finite-field orbit count")
    c.add_argument("--q", type=int, default=2, choices=[2, 3, 4, 5])
    c.add_argument("--mode", choices=["subspaces", "matrices", "both"], default="subspaces")
    c.add_argument("--budget", type=int, default=None)
    c = spec_cmd("oracle-growth", "orbit counts over several fields")
    c.add_argument("--qs", default="2,3")
    c.add_argument("--budget", type=int, default=None)
    return p


def _emit(payload, stream) -> None:
    if isinstance(payload, str):
        stream.write(payload)
    else:
        stream.write(json.dumps(payload) + "\n")


def _run_one(args, spec_path):
    """Returns (payload, exit code, error message or None)."""
    try:
        spec = _load_spec(spec_path) if spec_path else None
        payload, code = COMMANDS[args.command](args, spec)
        return payload, code, None
    except SpecError as exc:
        return None, EXIT_INPUT, f"input error: {exc}"
    except GraphError as exc:
        return None, EXIT_INPUT, f"input error: {exc}"
    except BudgetExceeded as exc:
        return None, EXIT_BUDGET, f"budget exceeded: {exc}"


def _run_batch(args, out) -> int:
    files = sorted(Path(args.batch).glob("*.json"))
    with ThreadPoolExecutor() as pool:
        results = list(pool.map(lambda f: _run_one(args, str(f)), files))
    worst = EXIT_OK
    for path, (payload, code, err) in zip(files, results):
        line = {"file": path.name, "exit": code}
        if err is None:
            line["result"] = payload
        else:
            line["error"] = err
            worst = EXIT_INPUT
        out.write(json.dumps(line) + "\n")
    return worst


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if getattr(args, "batch", None):
            return _run_batch(args, out)
        if args.command in NEEDS_SPEC and not args.spec:
            raise UsageError(f"{args.command} needs --spec")
        if args.command == "classify" and not (args.spec or args.graph):
            raise UsageError("classify needs --spec or --graph")
        payload, code, msg = _run_one(args, getattr(args, "spec", None))
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"radzero: error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return exc.code or 0
    if msg is not None:
        err.write(msg + "\n")
        return code
    _emit(payload, out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
