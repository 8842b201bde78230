"""Command-line front end.

Three subcommands over check-matrix files (see :mod:`advshare.codefile`):

* ``advshare validate FILE`` prints the code parameters.
* ``advshare analyze FILE --max-size M`` lists advance-shareable share sets
  with their certificates.
* ``advshare demo FILE --J 4 --seed 1 --trials 2`` runs the whole protocol:
  plan, encoding circuit, access table, and erase/decode transcripts.

One JSON document goes to stdout (schema shipped as
``advshare/schema/report.schema.json``); a human summary goes to stderr
unless ``--json-only``.  Share indices are 1-based.  Exit codes: 0 success,
1 invalid input, 2 budget exceeded, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

import numpy as np

from . import advance, codefile, sim
from .clifford import encoding_circuit
from .errors import (
    AdvShareError,
    BudgetExceededError,
    CodeFileError,
    DependentRowsError,
    NotAdvanceShareableError,
    NotCommutativeError,
    UncorrectableErasureError,
)
from .gfp import DEFAULT_ENUM_BUDGET
from .pauli import StabilizerCode, code_distance, validate_stabilizer

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_BUDGET = 2
EXIT_INTERNAL = 3

_INPUT_ERRORS = (
    CodeFileError,
    NotCommutativeError,
    DependentRowsError,
    NotAdvanceShareableError,
    UncorrectableErasureError,
    ValueError,
    OSError,
)


def _parameters_string(code: StabilizerCode, distance: int | None) -> str:
    d = "?" if distance is None else str(distance)
    return f"[[{code.n},{code.k},{d}]]_{code.p}"


def _load(path: str) -> StabilizerCode:
    text = Path(path).read_text(encoding="utf-8")
    p, n, rows = codefile.parse_code_file(text)
    return validate_stabilizer(rows, p, n)


def _code_section(code: StabilizerCode, budget: int) -> dict:
    distance = code_distance(code, budget=budget) if code.k >= 1 else None
    return {
        "p": code.p,
        "n": code.n,
        "k": code.k,
        "distance": distance,
        "parameters": _parameters_string(code, distance),
        "check_matrix": [[int(v) for v in row] for row in code.check_matrix],
    }


def _analyze_section(code: StabilizerCode, max_size: int, budget: int) -> dict:
    threshold = advance.dual_min_weight(code, budget=budget)
    sets = advance.enumerate_advance_shareable(code, max_size, budget=budget)
    return {
        "max_size": max_size,
        "dual_min_weight": threshold,
        "sets": [
            {
                "shares": list(s.shares),
                "certificates": {
                    "theorem1": s.dimension_criterion,
                    "theorem2": s.weight_criterion,
                },
            }
            for s in sets
        ],
    }


def _access_table(code: StabilizerCode, mi: dict | None) -> list[dict]:
    table = []
    for size in range(code.n + 1):
        for subset in itertools.combinations(range(1, code.n + 1), size):
            entry = {
                "shares": list(subset),
                "size": size,
                "label": sim.classify_access(code, subset).value,
            }
            if mi is not None:
                value = float(mi[subset])
                entry["mutual_information"] = 0.0 if abs(value) < 1e-12 else value
            table.append(entry)
    return table


def _demo_section(
    code: StabilizerCode,
    shares: tuple[int, ...],
    seed: int,
    trials: int,
    enum_budget: int,
    budget: int,
) -> dict:
    if not advance.is_advance_shareable(code, shares):
        raise NotAdvanceShareableError(
            f"shares {shares} are not advance shareable for this code"
        )
    plan = advance.construct_eaqecc(code, shares)
    circuit = encoding_circuit(plan)
    nf = plan.normal
    distance = code_distance(code, budget=enum_budget) if code.k >= 1 else None
    d = "?" if distance is None else str(distance)
    section: dict = {
        "shares": list(shares),
        "seed": seed,
        "trials": trials,
        "normal_form": {
            "shares": list(nf.shares),
            "mu": list(nf.mu),
            "h_prime": [[int(v) for v in row] for row in nf.h_prime],
        },
        "plan": {
            "parameters": f"[[{code.n - plan.c},{code.k},{d};{plan.c}]]_{code.p}",
            "length": code.n - plan.c,
            "logical": code.k,
            "pairs": plan.c,
            "ancillas": plan.ell,
            "source_generators": [str(g) for g in plan.source_generators],
            "target_generators": [str(g) for g in plan.target_generators],
            "epr_pairs": [list(pair) for pair in plan.epr_pairs],
            "zero_shares": list(plan.zero_shares),
            "secret_shares": list(plan.secret_shares),
        },
        "circuit": {
            "wires": code.n - plan.c,
            "gates": [str(g) for g in circuit.gates],
        },
    }
    subsets = [
        subset
        for size in range(code.n + 1)
        for subset in itertools.combinations(range(1, code.n + 1), size)
    ]
    mi = None
    if trials > 0:
        mi = sim.mutual_information_table(
            code, shares, subsets, plan=plan, circuit=circuit, budget=budget
        )
    section["access_table"] = _access_table(code, mi)
    if trials > 0:
        qualified = [
            subset
            for subset in subsets
            if sim.classify_access(code, subset) is sim.AccessLabel.QUALIFIED
        ]
        transcript = sim.simulate_protocol(
            code, shares, plan, circuit, seed, trials, qualified, budget=budget
        )
        section["syndrome"] = list(transcript.syndrome)
        grouped: dict[tuple[int, ...], list] = {}
        for rec in transcript.trials:
            grouped.setdefault(rec.accessible, []).append(rec)
        section["transcripts"] = [
            {
                "accessible": list(acc),
                "erased": list(records[0].erased),
                "trials": len(records),
                "fidelities": [r.fidelity for r in records],
                "min_fidelity": min(r.fidelity for r in records),
                "measured_syndromes": [list(r.measured_syndrome) for r in records],
                "corrections": [list(r.correction) for r in records],
            }
            for acc, records in grouped.items()
        ]
    return section


def _summarize(report: dict, stream) -> None:
    code = report["code"]
    print(f"code: {code['parameters']}", file=stream)
    if "advance_shareable" in report:
        section = report["advance_shareable"]
        names = [",".join(map(str, s["shares"])) for s in section["sets"]]
        print(
            f"advance-shareable sets up to size {section['max_size']} "
            f"(dual min weight {section['dual_min_weight']}): "
            + (" ".join("{" + t + "}" for t in names) or "none"),
            file=stream,
        )
    if "demo" in report:
        demo = report["demo"]
        print(
            f"demo: J={{{','.join(map(str, demo['shares']))}}} "
            f"plan {demo['plan']['parameters']} circuit {len(demo['circuit']['gates'])} gates",
            file=stream,
        )
        counts: dict[str, int] = {}
        for entry in demo["access_table"]:
            counts[entry["label"]] = counts.get(entry["label"], 0) + 1
        print(
            "access table: "
            + ", ".join(f"{v} {k}" for k, v in sorted(counts.items())),
            file=stream,
        )
        if "transcripts" in demo:
            worst = min(t["min_fidelity"] for t in demo["transcripts"])
            print(
                f"reconstruction over {len(demo['transcripts'])} qualified sets: "
                f"min fidelity {worst:.12f}",
                file=stream,
            )


def _parse_shares(text: str | None) -> tuple[int, ...]:
    if not text or text.lower() == "none":
        return ()
    try:
        return tuple(sorted({int(t) for t in text.replace(",", " ").split()}))
    except ValueError:
        raise ValueError(f"cannot parse share list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="advshare",
        description="Advance-sharing analysis for stabilizer-based quantum secret sharing",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("validate", "analyze", "demo"):
        cmd = sub.add_parser(name)
        cmd.add_argument("file", help="check matrix file (see docs for format)")
        cmd.add_argument(
            "--budget",
            type=int,
            default=None,
            help="cap on exhaustive scans and dense state sizes",
        )
        cmd.add_argument("--json-only", action="store_true")
        if name == "analyze":
            cmd.add_argument("--max-size", type=int, default=1)
        if name == "demo":
            cmd.add_argument("--J", default="", help="comma-separated advance shares")
            cmd.add_argument("--seed", type=int, default=0)
            cmd.add_argument("--trials", type=int, default=1)
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    enum_budget = args.budget if args.budget is not None else DEFAULT_ENUM_BUDGET
    state_budget = args.budget if args.budget is not None else sim.DEFAULT_STATE_BUDGET
    report: dict = {"schema_version": SCHEMA_VERSION, "command": args.command}
    try:
        code = _load(args.file)
        report["code"] = _code_section(code, enum_budget)
        if args.command == "analyze":
            report["advance_shareable"] = _analyze_section(
                code, args.max_size, enum_budget
            )
        elif args.command == "demo":
            shares = _parse_shares(args.J)
            report["demo"] = _demo_section(
                code, shares, args.seed, args.trials, enum_budget, state_budget
            )
    except BudgetExceededError as exc:
        report["error"] = {"type": "budget", "message": str(exc)}
        print(json.dumps(report, indent=2), file=stdout)
        print(f"budget exceeded: {exc}", file=stderr)
        return EXIT_BUDGET
    except _INPUT_ERRORS as exc:
        report["error"] = {"type": "invalid-input", "message": str(exc)}
        print(json.dumps(report, indent=2), file=stdout)
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except (AdvShareError, RuntimeError, AssertionError) as exc:
        report["error"] = {"type": "internal", "message": str(exc)}
        print(json.dumps(report, indent=2), file=stdout)
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    print(json.dumps(report, indent=2), file=stdout)
    if not args.json_only:
        _summarize(report, stderr)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
