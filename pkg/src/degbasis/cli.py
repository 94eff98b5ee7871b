"""Command-line interface.

Subcommands: check, realize, basis, decompose, verify, wqo-pair,
probe-cor3. Inputs are degree sequences ({"degrees": [...]}) or regularity
sequences ({"k": ..., "counts": [...]}) as JSON (array or one object per
line) or CSV (one comma-separated degree sequence per line, blank line =
empty sequence). Outputs are deterministic: identical inputs and flags
produce byte-identical bytes.

Exit codes: 0 affirmative/complete, 2 negative/incomplete (not graphic,
basis gap, order does not hold), 1 usage or IO error, 3 a search budget
was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence, TextIO, Union

from .decomposition import (
    decompose,
    decompose_over_basis,
    max_component_bound,
    realize_decomposition,
)
from .errors import (
    BasisIncomplete,
    DegbasisError,
    DegreeExceedsCap,
    SearchLimitExceeded,
    SplitSpaceExceeded,
)
from .families import StructuredFamily, bipartite_family, graph_family
from .graphs import DEFAULT_SEARCH_BUDGET
from .semigroup import DEFAULT_BOUND, generating_set, verify_basis
from .sequences import (
    DegreeSequence,
    RegularitySequence,
    degree_to_regularity,
    regularity_to_degree,
)
from .testkit import (
    BIPARTITE_ENUM_CAP,
    bruteforce_is_bipartite_graphic,
    bruteforce_is_graphic,
)
from .wqo import pointwise_compare, rao_leq_bruteforce, Comparison

__all__ = ["main", "execute", "build_parser"]

PROBE_D1 = (3, 3, 3, 3)
PROBE_D2 = (3, 3, 3, 3, 3, 3)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


InputRecord = Union[DegreeSequence, RegularitySequence]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--family", choices=["graph", "bipartite"], default="graph",
        help="structured family (default graph)",
    )
    common.add_argument("-k", type=int, default=3, help="degree cap (default 3)")
    common.add_argument(
        "--bound", type=int, default=DEFAULT_BOUND,
        help="search bound for minimal class members (default 30)",
    )
    common.add_argument(
        "--verify-bound", dest="verify_bound", type=int, default=DEFAULT_BOUND,
        help="coverage verification bound (default 30)",
    )
    common.add_argument(
        "--budget", type=int, default=DEFAULT_SEARCH_BUDGET,
        help="node budget for embedding / split searches (default 10^7)",
    )
    common.add_argument(
        "--format", choices=["json", "csv"], default="json",
        help="input and output format (default json)",
    )
    common.add_argument("--in", dest="infile", default=None, help="input path (default stdin)")
    common.add_argument("--out", dest="outfile", default=None, help="output path (default stdout)")
    common.add_argument(
        "--no-fallback", action="store_true",
        help="decompose: fail on basis gaps instead of greedy fallback",
    )

    parser = argparse.ArgumentParser(
        prog="degbasis",
        description="Degree sequence realizability, generating bases, bounded decompositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="decide family realizability per sequence")
    sub.add_parser("realize", parents=[common], help="build a realization per sequence")
    sub.add_parser("basis", parents=[common], help="compute the generating set")
    sub.add_parser("decompose", parents=[common], help="decompose sequences over the basis")
    sub.add_parser("verify", parents=[common], help="oracle agreement and basis coverage checks")
    sub.add_parser("wqo-pair", parents=[common], help="brute-force realization-order check on a pair")
    sub.add_parser(
        "probe-cor3", parents=[common],
        help="probe whether pointwise dominance implies the realization order for a pair",
    )
    return parser


def _family_for(args: argparse.Namespace) -> StructuredFamily:
    if args.family == "bipartite":
        return bipartite_family(split_cap=args.budget)
    return graph_family()


def _parse_json_records(text: str) -> list[InputRecord]:
    def record(obj: Any, where: str) -> InputRecord:
        if not isinstance(obj, dict):
            raise UsageError(f"{where}: expected an object, got {type(obj).__name__}")
        if "degrees" in obj:
            try:
                return DegreeSequence.from_json(obj)
            except (TypeError, ValueError) as e:
                raise UsageError(f"{where}: bad 'degrees' field: {e}") from e
        if "counts" in obj:
            if "k" not in obj:
                raise UsageError(f"{where}: 'counts' record is missing field 'k'")
            try:
                return RegularitySequence.from_json(obj)
            except (TypeError, ValueError) as e:
                raise UsageError(f"{where}: bad 'k'/'counts' fields: {e}") from e
        raise UsageError(f"{where}: record needs a 'degrees' or 'counts' field")

    stripped = text.strip()
    if not stripped:
        return []
    try:
        data = json.loads(stripped)
    except json.JSONDecodeError:
        out = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise UsageError(f"line {lineno}: malformed JSON: {e.msg}") from e
            out.append(record(obj, f"line {lineno}"))
        return out
    if isinstance(data, list):
        return [record(obj, f"record {i + 1}") for i, obj in enumerate(data)]
    return [record(data, "record 1")]


def _parse_csv_records(text: str) -> list[InputRecord]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    out: list[InputRecord] = []
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            out.append(DegreeSequence(()))
            continue
        try:
            degrees = tuple(int(part.strip()) for part in line.split(","))
        except ValueError as e:
            raise UsageError(f"line {lineno}: malformed CSV degree sequence: {e}") from e
        try:
            out.append(DegreeSequence(degrees))
        except ValueError as e:
            raise UsageError(f"line {lineno}: {e}") from e
    return out


def _read_records(args: argparse.Namespace) -> list[InputRecord]:
    if args.infile is not None:
        try:
            with open(args.infile, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {args.infile}: {e}") from e
    else:
        text = sys.stdin.read()
    if args.format == "csv":
        return _parse_csv_records(text)
    return _parse_json_records(text)


def _as_pair(records: list[InputRecord]) -> tuple[DegreeSequence, DegreeSequence]:
    if len(records) != 2:
        raise UsageError(f"this subcommand takes exactly two sequences, got {len(records)}")
    out = [
        regularity_to_degree(rec) if isinstance(rec, RegularitySequence) else rec
        for rec in records
    ]
    return out[0], out[1]


def _to_regularity(rec: InputRecord, k: int) -> RegularitySequence:
    """Convert a record at cap exactly k; raises DegreeExceedsCap."""
    if isinstance(rec, RegularitySequence):
        if rec.k == k:
            return rec
        if rec.k < k:
            return RegularitySequence(k, rec.counts + (0,) * (k - rec.k))
        if any(rec.counts[k + 1 :]):
            raise DegreeExceedsCap(f"counts above degree {k} are nonzero")
        return RegularitySequence(k, rec.counts[: k + 1])
    return degree_to_regularity(rec, k)


def _fitting_k(rec: InputRecord, k: int) -> int:
    """The configured cap, widened to fit the record when needed."""
    if isinstance(rec, RegularitySequence):
        return max(k, rec.k)
    return max(k, rec.max_degree)


def _degrees_json(rec: InputRecord) -> dict:
    return rec.to_json()


def _write(out: TextIO, text: str):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _emit(args: argparse.Namespace, text: str):
    if args.outfile is not None:
        try:
            with open(args.outfile, "w", encoding="utf-8") as fh:
                _write(fh, text)
        except OSError as e:
            raise UsageError(f"cannot write {args.outfile}: {e}") from e
    else:
        _write(sys.stdout, text)


def _dumps_line(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _dumps_block(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _cmd_check(args: argparse.Namespace) -> int:
    family = _family_for(args)
    records = _read_records(args)
    lines = []
    exit_code = EXIT_OK
    for rec in records:
        entry: dict = _degrees_json(rec)
        try:
            R = _to_regularity(rec, _fitting_k(rec, args.k))
            verdict = family.membership(R)
            entry["graphic"] = verdict
            if not verdict:
                entry["reason"] = "no-realization-in-family"
                exit_code = max(exit_code, EXIT_NEGATIVE)
        except SplitSpaceExceeded:
            entry["graphic"] = "budget-exceeded"
            entry["reason"] = "split-space-exceeded"
            exit_code = EXIT_BUDGET
        lines.append(entry)
    if args.format == "csv":
        _emit(args, "\n".join(str(e["graphic"]).lower() for e in lines))
    else:
        _emit(args, "\n".join(_dumps_line(e) for e in lines))
    return exit_code


def _cmd_realize(args: argparse.Namespace) -> int:
    if args.format == "csv":
        raise UsageError("realize output is structured; --format csv is not supported")
    family = _family_for(args)
    records = _read_records(args)
    lines = []
    exit_code = EXIT_OK
    for rec in records:
        try:
            R = _to_regularity(rec, _fitting_k(rec, args.k))
            g = family.realize(R)
            lines.append(_dumps_line(g.to_json()))
        except DegbasisError as e:
            entry = _degrees_json(rec)
            if isinstance(e, (SplitSpaceExceeded, SearchLimitExceeded)):
                entry["error"] = "budget-exceeded"
                exit_code = EXIT_BUDGET
            else:
                entry["error"] = "not-realizable"
                entry["reason"] = str(e)
                exit_code = max(exit_code, EXIT_NEGATIVE)
            lines.append(_dumps_line(entry))
    _emit(args, "\n".join(lines))
    return exit_code


def _cmd_basis(args: argparse.Namespace) -> int:
    if args.format == "csv":
        raise UsageError("basis output is structured; --format csv is not supported")
    family = _family_for(args)
    basis = generating_set(family, args.k, args.bound)
    _emit(args, _dumps_block(basis.to_json()))
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    family = _family_for(args)
    records = _read_records(args)
    basis = generating_set(family, args.k, args.bound)
    lines = []
    csv_rows = []
    exit_code = EXIT_OK
    for rec in records:
        entry: dict = {"input": _degrees_json(rec)}
        try:
            R = _to_regularity(rec, args.k)
            try:
                dec = decompose_over_basis(R, basis)
            except BasisIncomplete:
                if args.no_fallback:
                    raise
                dec = decompose(R, family)
                entry["warning"] = "basis-incomplete; greedy decomposition used"
                exit_code = max(exit_code, EXIT_NEGATIVE)
            realized = realize_decomposition(dec, family, basis)
            entry["decomposition"] = dec.to_json()
            entry["realization"] = realized.to_json()
            entry["max_component"] = realized.max_component_size()
            csv_rows.append(
                " ".join(str(c) for c in dec.base.counts)
                + ","
                + " ".join(str(c) for c in dec.coefficients)
            )
        except (SplitSpaceExceeded, SearchLimitExceeded):
            entry["error"] = "budget-exceeded"
            exit_code = EXIT_BUDGET
            csv_rows.append("budget-exceeded,")
        except DegbasisError as e:
            entry["error"] = type(e).__name__
            entry["reason"] = str(e)
            exit_code = max(exit_code, EXIT_NEGATIVE)
            csv_rows.append("error,")
        lines.append(entry)
    if args.format == "csv":
        _emit(args, "\n".join(csv_rows))
    else:
        _emit(args, "\n".join(_dumps_line(e) for e in lines))
    return exit_code


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.format == "csv":
        raise UsageError("verify output is structured; --format csv is not supported")
    family = _family_for(args)
    # oracle agreement on every short sequence, exhaustively
    length_cap = 5
    disagreements = []
    checked = 0

    def all_nonincreasing(n: int, maxdeg: int):
        def rec(prefix: tuple[int, ...], lo: int):
            if len(prefix) == n:
                yield prefix
                return
            for d in range(lo, -1, -1):
                yield from rec(prefix + (d,), d)

        yield from rec((), maxdeg)

    for n in range(length_cap + 1):
        for degs in all_nonincreasing(n, min(n - 1 if n else 0, length_cap - 1)):
            D = DegreeSequence(degs)
            R = degree_to_regularity(D, _fitting_k(D, args.k))
            checked += 1
            if args.family == "bipartite":
                expected = bruteforce_is_bipartite_graphic(D, cap=BIPARTITE_ENUM_CAP)
            else:
                expected = bruteforce_is_graphic(D)
            if family.membership(R) != expected:
                disagreements.append(D.to_json())
    basis = generating_set(family, args.k, args.bound)
    report = verify_basis(basis, family, args.verify_bound)
    out = {
        "family": args.family,
        "k": args.k,
        "oracle_agreement": {
            "length_cap": length_cap,
            "checked": checked,
            "disagreements": disagreements,
        },
        "basis": report.to_json(),
    }
    _emit(args, _dumps_block(out))
    if disagreements or not report.complete:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_wqo_pair(args: argparse.Namespace) -> int:
    if args.format == "csv":
        raise UsageError("wqo-pair output is structured; --format csv is not supported")
    d1, d2 = _as_pair(_read_records(args))
    verdict = rao_leq_bruteforce(d1, d2, budget=args.budget)
    _emit(args, _dumps_block(verdict.to_json()))
    if verdict.result is None:
        return EXIT_BUDGET
    return EXIT_OK if verdict.result else EXIT_NEGATIVE


def _cmd_probe_cor3(args: argparse.Namespace) -> int:
    if args.format == "csv":
        raise UsageError("probe-cor3 output is structured; --format csv is not supported")
    if args.infile is not None:
        d1, d2 = _as_pair(_read_records(args))
    else:
        d1, d2 = DegreeSequence(PROBE_D1), DegreeSequence(PROBE_D2)
    k = max(d1.max_degree, d2.max_degree)
    r1 = degree_to_regularity(d1, k)
    r2 = degree_to_regularity(d2, k)
    cmp_result = pointwise_compare(r1, r2)
    applicable = cmp_result in (Comparison.LESS_OR_EQUAL, Comparison.EQUAL)
    verdict = rao_leq_bruteforce(d1, d2, budget=args.budget)
    if verdict.result is None:
        claim_holds: Any = None
    elif applicable:
        claim_holds = bool(verdict.result)
    else:
        claim_holds = True  # vacuous: the hypothesis does not hold for the pair
    out = {
        "probe": "pointwise-le-implies-rao-leq",
        "d1": d1.to_json(),
        "d2": d2.to_json(),
        "k": k,
        "pointwise": cmp_result.value,
        "rao": verdict.to_json(),
        "claim_applicable": applicable,
        "claim_holds": claim_holds,
    }
    _emit(args, _dumps_block(out))
    if verdict.result is None:
        return EXIT_BUDGET
    return EXIT_OK if claim_holds else EXIT_NEGATIVE


_COMMANDS = {
    "check": _cmd_check,
    "realize": _cmd_realize,
    "basis": _cmd_basis,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "wqo-pair": _cmd_wqo_pair,
    "probe-cor3": _cmd_probe_cor3,
}


def execute(args: argparse.Namespace) -> int:
    """Run one parsed invocation and return the exit code."""
    try:
        return _COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage problems; the contract wants 1
        return EXIT_USAGE if e.code not in (0, None) else 0
    return execute(args)


if __name__ == "__main__":
    sys.exit(main())
