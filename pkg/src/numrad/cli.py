"""Command-line interface: ``numrad {compute,check,check-vectors,suite,list}``.

Exit codes: 0 when every requested check is Satisfied (or every fixture
passes), 1 on a Violated/Inconclusive verdict or a failing fixture, 2 on a
usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import linalg, radii
from .catalog import VECTOR_CHECKS, Signature, Status, evaluate_relation, get_relation, list_relations
from .catalog.evaluate import DEFAULT_EQ_TOL, DEFAULT_TOL
from .catalog.vectors import VECTOR_TOL
from .errors import NumradError, UnknownRelationError
from .fileio import parse_matrix_file, parse_vector_file
from .harness import run_paper_examples, run_property_suite
from .harness.suite import SuiteReport

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

QUANTITIES = ("omega", "norm", "omega-e", "norm-e", "block-omega")

# vectors read from the --vectors file; mixed-schwarz also takes T via --input
VECTOR_COUNTS = {"gcs": 3, "eq4": 3, "angle": 3, "mixed-schwarz": 2}


class UsageError(Exception):
    """Arguments parse but do not make sense together."""


def _dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not dims or min(dims) < 1:
        raise argparse.ArgumentTypeError("dimensions must be positive integers")
    return dims


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _non_negative_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError("must be a non-negative number")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numrad",
        description="Numerical radius, Euclidean operator radius/norm, and a checked catalog of inequalities.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("compute", help="compute one quantity")
    p.add_argument("--quantity", required=True, choices=QUANTITIES)
    p.add_argument("--input", required=True, type=Path, help="matrix file (A)")
    p.add_argument("--input2", type=Path, help="second matrix file (B)")
    p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("check", help="check one registry relation on given matrices")
    p.add_argument("--relation", required=True, help="relation id, e.g. R01")
    p.add_argument("--input", required=True, type=Path, help="matrix file (A or T)")
    p.add_argument("--input2", type=Path, help="second matrix file (B)")
    p.add_argument("--tol", type=_non_negative_float, default=DEFAULT_TOL, help="relative inequality tolerance")
    p.add_argument("--eq-tol", type=_non_negative_float, default=DEFAULT_EQ_TOL, help="absolute equality tolerance")
    p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("check-vectors", help="check a vector-level inequality")
    p.add_argument("--relation", required=True, choices=sorted(VECTOR_CHECKS))
    p.add_argument("--vectors", required=True, type=Path, help='file {"vectors": [...]}')
    p.add_argument("--input", type=Path, help="matrix file T (mixed-schwarz only)")
    p.add_argument("--tol", type=_non_negative_float, default=VECTOR_TOL)
    p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("suite", help="run the printed-example fixtures and/or the property suite")
    p.add_argument("--paper-examples", action="store_true", help="recompute the printed example values")
    p.add_argument("--property", action="store_true", help="random-ensemble property suite")
    p.add_argument("--trials", type=_positive_int, default=1000)
    p.add_argument("--dims", type=_dims, default=(2, 3, 4), help="comma-separated, default 2,3,4")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--relations", help="comma-separated relation ids (default: all)")
    p.add_argument("--report", type=Path, help="write the JSON report to this file")
    p.add_argument("--json", action="store_true", help="print the JSON report instead of a summary")

    p = sub.add_parser("list", help="print the relation registry")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _read_pair(args) -> list[np.ndarray]:
    mats = [parse_matrix_file(args.input)]
    if args.input2 is not None:
        mats.append(parse_matrix_file(args.input2))
    return mats


def _cmd_compute(args, out) -> int:
    mats = _read_pair(args)
    q = args.quantity
    if q in ("omega", "norm") and len(mats) != 1:
        raise UsageError(f"--quantity {q} takes a single matrix; drop --input2")
    if q == "block-omega" and len(mats) != 2:
        raise UsageError("--quantity block-omega needs --input A and --input2 B")
    if q == "norm":
        value = linalg.operator_norm(mats[0])
        doc = {"value": value, "accuracy": radii._roundoff(mats[0].shape[0], value), "method": "singular_values"}
    else:
        if q == "omega":
            res = radii.numerical_radius(mats[0])
        elif q == "omega-e":
            res = radii.euclidean_radius(mats)
        elif q == "norm-e":
            res = radii.euclidean_norm(mats)
        else:
            res = radii.block_numerical_radius(mats[0], mats[1])
        doc = res.to_dict()
    doc["quantity"] = q
    if args.json:
        print(_dump(doc), file=out)
    else:
        print(f"{doc['value']:.12f}", file=out)
        print(f"  quantity {q}, accuracy {doc['accuracy']:.2e}", file=out)
    return EXIT_OK


def _verdict_code(status: Status) -> int:
    return EXIT_OK if status is Status.SATISFIED else EXIT_FAILED


def _print_report(rep, out) -> None:
    print(f"{rep.relation_id}: {rep.status.value}", file=out)
    for (name, value), err in zip(rep.term_values, rep.term_errors):
        print(f"  {name} = {value:.12g} (+/- {err:.1e})", file=out)
    for link in rep.links:
        print(f"  {link.left} {link.op} {link.right}: slack {link.slack:.3e}, {link.status.value}", file=out)


def _cmd_check(args, out) -> int:
    try:
        rel = get_relation(args.relation)
    except UnknownRelationError:
        raise UsageError(f"unknown relation {args.relation!r}; see `numrad list`") from None
    if rel.signature is Signature.SINGLE_MATRIX and args.input2 is not None:
        raise UsageError(f"{rel.id} takes a single matrix; drop --input2")
    if rel.signature is Signature.MATRIX_PAIR and args.input2 is None:
        raise UsageError(f"{rel.id} takes a matrix pair; give --input A and --input2 B")
    rep = evaluate_relation(rel.id, _read_pair(args), tol=args.tol, eq_tol=args.eq_tol)
    if args.json:
        print(_dump(rep.to_dict()), file=out)
    else:
        _print_report(rep, out)
    return _verdict_code(rep.status)


def _cmd_check_vectors(args, out) -> int:
    name = args.relation
    vectors = parse_vector_file(args.vectors, VECTOR_COUNTS[name])
    if name == "mixed-schwarz":
        if args.input is None:
            raise UsageError("mixed-schwarz needs the matrix T via --input")
        rep = VECTOR_CHECKS[name](parse_matrix_file(args.input), *vectors, tol=args.tol)
    else:
        if args.input is not None:
            raise UsageError(f"{name} takes vectors only; drop --input")
        rep = VECTOR_CHECKS[name](*vectors, tol=args.tol)
    if args.json:
        print(_dump(rep.to_dict()), file=out)
    else:
        _print_report(rep, out)
    return _verdict_code(rep.status)


def _cmd_suite(args, out) -> int:
    run_examples = args.paper_examples or not args.property
    run_property = args.property or not args.paper_examples
    relations = None
    if args.relations:
        relations = [r.strip() for r in args.relations.split(",") if r.strip()]
        try:
            relations = [get_relation(r).id for r in relations]
        except UnknownRelationError as exc:
            raise UsageError(str(exc.args[0])) from None

    report = SuiteReport(seed=args.seed)
    if run_property:

        def progress(rid, tally):
            print(
                f"{rid}: satisfied={tally.satisfied} violated={tally.violated} "
                f"inconclusive={tally.inconclusive}",
                file=sys.stderr,
            )

        report = run_property_suite(
            relations=relations, trials=args.trials, dims=args.dims, seed=args.seed, progress=progress
        )
    if run_examples:
        examples = run_paper_examples()
        report.examples = examples.examples
        report.wall_clock += examples.wall_clock
    if args.report is not None:
        args.report.write_text(report.to_json() + "\n", encoding="utf-8")
    print(report.to_json() if args.json else report.summary(), file=out)
    return EXIT_OK if report.ok else EXIT_FAILED


def _cmd_list(args, out) -> int:
    if args.json:
        print(_dump([rel.to_dict() for rel in list_relations()]), file=out)
        return EXIT_OK
    for rel in list_relations():
        links = " ".join(rel.links)
        print(
            f"{rel.id}  {rel.kind.value:<8} {rel.signature.value:<13} {rel.precondition:<21} "
            f"[{links}]  {rel.title}",
            file=out,
        )
    return EXIT_OK


COMMANDS = {
    "compute": _cmd_compute,
    "check": _cmd_check,
    "check-vectors": _cmd_check_vectors,
    "suite": _cmd_suite,
    "list": _cmd_list,
}


def main(argv=None, out=None) -> int:
    """Run one command and return its exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed usage and the error
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"numrad {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumradError as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"numrad {args.command}: error: {message}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())
