"""Command-line surface: gen, reduce, solve, decide, oracle.

Output lines are stable key=value pairs so batch scripts can parse them;
for the decide subcommand the exit status encodes the outcome (0 case 1,
1 case 2, 3 promise violation, 2 usage/input error).
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass, field

from . import decider, oracles, reductions
from .graphs import GraphFormatError, generate_graph, parse_graph, serialize_graph
from .operators import LhamFormatError, parse_lham, serialize_lham

EXIT_CASE1 = 0
EXIT_CASE2 = 1
EXIT_ERROR = 2
EXIT_VIOLATION = 3


@dataclass
class RunReport:
    command: str
    input_digests: dict[str, str] = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)
    wall_time_s: float = 0.0

    def emit(self, out=None):
        for line in self.lines:
            print(line, file=out or sys.stdout)


def _digest(text):
    return hashlib.sha256(text.encode()).hexdigest()


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_gen(args):
    params = {}
    if args.m is not None:
        params["m"] = args.m
    if args.d is not None:
        params["d"] = args.d
    graph = generate_graph(args.kind, args.n, params, seed=args.seed)
    text = serialize_graph(graph)
    _write(args.output, text)
    return RunReport(
        command="gen",
        input_digests={},
        lines=[f"n={graph.n_vertices} m={graph.n_edges} out={args.output}"],
    )


def cmd_reduce(args):
    text = _read(args.input)
    graph = parse_graph(text)
    if args.kind == "maxcut":
        out = reductions.reduce_maxcut(graph, args.target,
                                       allow_weighted=args.weighted)
    else:
        out = reductions.reduce_independent_set(graph, args.target)
    sidecar = out.promise.sidecar_line(out.source_kind, out.target, out.offset)
    _write(args.output, serialize_lham(out.hamiltonian, trailer=sidecar))
    return RunReport(
        command="reduce",
        input_digests={args.input: _digest(text)},
        lines=[
            f"terms={len(out.hamiltonian.terms)} n={out.hamiltonian.n_qubits} "
            f"a_quarters={out.promise.a_quarters} "
            f"b_quarters={out.promise.b_quarters}"
        ],
    )


def cmd_solve(args):
    text = _read(args.input)
    hamiltonian, _ = parse_lham(text)
    report = RunReport(command="solve", input_digests={args.input: _digest(text)})
    if args.method == "enum":
        energy, witness = oracles.min_energy(
            hamiltonian, workers=args.workers, max_qubits=args.max_enum_qubits
        )
        if energy.is_exact:
            report.lines.append(
                f"min_energy_quarters={energy.quarters} "
                f"argmin={witness.bitstring()}"
            )
        else:
            report.lines.append(
                f"min_energy={energy.float_value:.17g} "
                f"argmin={witness.bitstring()}"
            )
    else:
        value = oracles.dense_min_eigenvalue(
            hamiltonian, max_qubits=args.max_dense_qubits
        )
        report.lines.append(f"min_eigenvalue={value:.17g}")
    return report


def cmd_decide(args):
    text = _read(args.input)
    hamiltonian, trailer = parse_lham(text)
    if trailer is None:
        raise CliError("no promise sidecar line in input")
    promise, _, _, _ = reductions.parse_promise_line(trailer)
    decision = decider.decide(
        hamiltonian,
        promise,
        workers=args.workers,
        max_enum_qubits=args.max_enum_qubits,
        max_dense_qubits=args.max_dense_qubits,
    )
    outcome = decision.outcome.replace("_", "-")
    if decision.min_energy.is_exact:
        energy_field = f"min_energy_quarters={decision.min_energy.quarters}"
    else:
        energy_field = f"min_energy={decision.min_energy.float_value:.17g}"
    report = RunReport(
        command="decide",
        input_digests={args.input: _digest(text)},
        lines=[f"outcome={outcome} {energy_field}"],
    )
    report.exit_status = {
        decider.CASE1: EXIT_CASE1,
        decider.CASE2: EXIT_CASE2,
        decider.PROMISE_VIOLATION: EXIT_VIOLATION,
    }[decision.outcome]
    return report


def cmd_oracle(args):
    text = _read(args.input)
    graph = parse_graph(text)
    if args.kind == "maxcut":
        result = oracles.brute_force_max_cut(
            graph, workers=args.workers, max_qubits=args.max_enum_qubits
        )
    else:
        result = oracles.brute_force_max_independent_set(
            graph, workers=args.workers, max_qubits=args.max_enum_qubits
        )
    return RunReport(
        command="oracle",
        input_digests={args.input: _digest(text)},
        lines=[f"optimum={result.optimum} witness={result.witness.bitstring()}"],
    )


class CliError(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="graph2ham",
        allow_abbrev=False,
        description="Compile MAX CUT / INDEPENDENT SET instances into "
        "2-local Hamiltonian promise problems, solve them exactly, and "
        "cross-check against brute-force graph oracles.",
    )
    parser.add_argument("--workers", type=int, default=None,
                        help="worker threads for exhaustive search")
    parser.add_argument("--max-enum-qubits", type=int, default=28)
    parser.add_argument("--max-dense-qubits", type=int, default=12)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen", help="generate a graph instance")
    p.add_argument("kind", choices=["cycle", "complete", "random_gnm",
                                    "random_regular"])
    p.add_argument("n", type=int)
    p.add_argument("--m", type=int, default=None, help="edge count (random_gnm)")
    p.add_argument("--d", type=int, default=None, help="degree (random_regular)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="compile a graph problem to a "
                                      "local Hamiltonian instance")
    p.add_argument("kind", choices=["maxcut", "indset"])
    p.add_argument("input")
    p.add_argument("target", type=int, help="cut weight w or set size v")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--weighted", action="store_true",
                   help="allow non-unit edge weights (maxcut only)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="minimum energy of an LHAM file")
    p.add_argument("input")
    p.add_argument("--method", choices=["enum", "dense"], default="enum")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decide", help="resolve a promise instance")
    p.add_argument("input")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", help="brute-force graph optimum")
    p.add_argument("kind", choices=["maxcut", "indset"])
    p.add_argument("input")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        report = args.func(args)
    except (GraphFormatError, LhamFormatError, ValueError, CliError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report.wall_time_s = time.monotonic() - started
    report.emit()
    return getattr(report, "exit_status", 0)


if __name__ == "__main__":
    sys.exit(main())
