"""Command-line front end: ``threshold-atlas {charpoly,samples,distribution,table,verify,bijection}``.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
error, 3 input outside the domain of the requested map.

JSON schemas (stable):

* polynomial   ``{"n": int, "coeffs_low_to_high": [int, ...]}``
* distribution ``{"n": int, "counts": {"j": int, ...}}``
* graph        ``{"n": int, "edges": [[i, j], ...]}`` with i < j, sorted
* signed permutation: a JSON array of nonzero ints
* (b, pi) pair ``{"b": int, "pi": [int, ...]}`` with pi written on [n] minus {b}
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Callable, Sequence

from threshold_atlas import arrangements as arr
from threshold_atlas import partitions_involution as pi_mod
from threshold_atlas import threshold_bijections as tb
from threshold_atlas import threshold_graphs as tg
from threshold_atlas.errors import AtlasError, DomainError
from threshold_atlas.exactmath import Polynomial, falling_odd_product
from threshold_atlas.parallel import STATISTICS, default_jobs, statistic_distribution
from threshold_atlas.signed_permutations import check_signed, format_signed, odd_cycle_count
from threshold_atlas.verification import run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

FINITE_FIELD_MAX = {"threshold": 6, "typeb": 4}
DISTRIBUTION_RANGE = (2, 9)
TABLES = ("1", "2", "3", "2g", "3g")


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _csv(rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def render_polynomial(p: Polynomial, n: int, fmt: str) -> str:
    if fmt == "json":
        return _dumps({"n": n, "coeffs_low_to_high": list(p.coeffs)})
    if fmt == "csv":
        return _csv([("power", "coefficient")] + [(i, c) for i, c in enumerate(p.coeffs)])
    return p.to_text()


def cmd_charpoly(args: argparse.Namespace) -> int:
    n, family = args.n, args.family
    if n < 1:
        raise UsageError("--n must be at least 1")
    limit = FINITE_FIELD_MAX[family]
    formula = arr.charpoly_threshold_formula(n) if family == "threshold" else falling_odd_product(n)
    if args.method == "finitefield" or args.cross_check:
        if n > limit:
            raise UsageError(f"finite field method is limited to n <= {limit} for {family}")
        a = arr.threshold_arrangement(n) if family == "threshold" else arr.typeb_arrangement(n)
        counted = arr.charpoly_finite_field(a)
        if args.cross_check and counted != formula:
            _emit(f"cross-check failed: finite field {counted} != formula {formula}")
            return EXIT_FAIL
        poly = counted if args.method == "finitefield" else formula
    else:
        poly = formula
    _emit(render_polynomial(poly, n, args.format))
    return EXIT_OK


def cmd_samples(args: argparse.Namespace) -> int:
    n, family = args.n, args.family
    if n < 1:
        raise UsageError("--n must be at least 1")
    a = arr.threshold_arrangement(n) if family == "threshold" else arr.typeb_arrangement(n)
    qs = args.q or arr.sample_moduli(n)
    samples = [arr.count_points_mod_q(a, q, args.method) for q in qs]
    if args.format == "json":
        _emit(_dumps([{"q": s.q, "count": s.count} for s in samples]))
    else:
        _emit("q,count\n" + "\n".join(s.to_csv_row() for s in samples))
    return EXIT_OK


def render_distribution(table: Any, n: int, fmt: str) -> str:
    counts = {j: table[j] for j in range(n + 1)}
    if fmt == "json":
        return _dumps({"n": n, "counts": {str(j): c for j, c in counts.items()}})
    if fmt == "csv":
        return _csv([("j", "count")] + list(counts.items()))
    return "\n".join(f"{j} {c}" for j, c in counts.items())


def cmd_distribution(args: argparse.Namespace) -> int:
    lo, hi = DISTRIBUTION_RANGE
    if not lo <= args.n <= hi:
        raise UsageError(f"--n must be between {lo} and {hi}")
    table = statistic_distribution(args.n, args.statistic, args.jobs)
    _emit(render_distribution(table, args.n, args.format))
    return EXIT_OK


def _sort_key(row_sp: Sequence[int], count: int) -> tuple:
    return (-count, tuple(abs(e) for e in row_sp), tuple(e < 0 for e in row_sp))


def table_rows(which: str) -> tuple[list[str], list[list[Any]]]:
    """Header and rows of a table, with plain values (tuples, ints, strings)."""
    if which == "1":
        rows = []
        for n in range(2, 11):
            p = arr.charpoly_threshold_formula(n)
            rows.append([n, p.to_text(), arr.region_count(p)])
        return ["n", "characteristic polynomial", "regions"], rows
    if which in ("2", "3"):
        n = int(which)
        rows = []
        for tp in tb.enumerate_threshold_pairs(n):
            tperm = tb.pair_to_threshold_perm(tp)
            rows.append([tp, tperm, odd_cycle_count(tperm)])
        rows.sort(key=lambda r: _sort_key(r[0], r[2]))
        return ["threshold pair", "threshold permutation", "odd cycles"], rows
    if which in ("2g", "3g"):
        n = int(which[0])
        rows = []
        for tp in tb.enumerate_threshold_pairs(n):
            c = tg.apply_convention(tp)
            rows.append([c, tuple(tg.graph_from_construction(c).sorted_edges()), tg.odd_anchor_count(c)])
        rows.sort(key=lambda r: _sort_key(r[0], r[2]))
        return ["construction", "edges", "odd anchors"], rows
    raise UsageError(f"unknown table {which!r}; choose from {', '.join(TABLES)}")


def _cell_text(value: Any) -> str:
    if isinstance(value, tuple) and value and isinstance(value[0], tuple):
        return " ".join(f"{i}{j}" for i, j in value)
    if isinstance(value, tuple):
        return format_signed(value) if value else "-"
    return str(value)


def _cell_json(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_cell_json(v) for v in value]
    return value


def render_table(which: str, fmt: str) -> str:
    header, rows = table_rows(which)
    if fmt == "json":
        return _dumps({"table": which, "columns": header, "rows": [[_cell_json(v) for v in r] for r in rows]})
    if fmt == "csv":
        return _csv([header] + [[_cell_text(v) for v in r] for r in rows])
    cells = [header] + [[_cell_text(v) for v in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = [" | ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "-+-".join("-" * w for w in widths))
    return "\n".join(lines)


def cmd_table(args: argparse.Namespace) -> int:
    _emit(render_table(args.which, args.format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if not 2 <= args.max_n <= 8:
        raise UsageError("--max-n must be between 2 and 8")
    failed = []
    total = 0
    for result in run_checks(args.max_n):
        total += 1
        _emit(result.line())
        sys.stdout.flush()
        if not result.passed:
            failed.append(result)
    if failed:
        _emit(f"{len(failed)} of {total} checks failed; first failure: {failed[0].name}")
        return EXIT_FAIL
    _emit(f"all {total} checks passed")
    return EXIT_OK


def _parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse input as JSON: {exc}") from None


def _signed(obj: Any) -> tuple[int, ...]:
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise UsageError("expected a JSON array of nonzero integers")
    return check_signed(obj)


def _graph(obj: Any) -> tg.LabeledThresholdGraph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise UsageError('expected a graph object {"n": int, "edges": [[i, j], ...]}')
    try:
        return tg.LabeledThresholdGraph.from_edges(int(obj["n"]), obj["edges"])
    except (TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise UsageError(f"malformed graph: {exc}") from None


def _pair(obj: Any) -> tuple[int, ...]:
    sp = _signed(obj)
    if len(sp) < 2 or not tb.is_threshold_pair(sp):
        raise DomainError(f"{list(sp)} is not a threshold pair in standard form")
    return sp


def _threshold_graph(obj: Any) -> tg.LabeledThresholdGraph:
    g = _graph(obj)
    if g.n < 2:
        raise DomainError("graphs need at least 2 vertices here")
    if not tg.is_threshold_graph(g):
        raise DomainError("graph is not a threshold graph: peeling isolated/universal vertices gets stuck")
    return g


def _special_pair(obj: Any) -> pi_mod.SpecialPair:
    if not isinstance(obj, dict) or "b" not in obj or "pi" not in obj:
        raise UsageError('expected {"b": int, "pi": [int, ...]} with pi written on [n] minus {b}')
    b = obj["b"]
    entries = obj["pi"]
    if not isinstance(b, int) or not isinstance(entries, list) or not all(isinstance(x, int) for x in entries):
        raise UsageError("b must be an int and pi an array of ints")
    n = len(entries) + 1
    if 0 in entries:
        raise DomainError("pi entries must be nonzero")
    if sorted([abs(x) for x in entries] + [b]) != list(range(1, n + 1)):
        raise DomainError(f"pi together with b={b} must use each of 1..{n} exactly once")
    return pi_mod.SpecialPair.from_relabeled(b, entries)


def _special_pair_out(p: pi_mod.SpecialPair) -> dict:
    return {"b": p.b, "pi": list(p.relabeled())}


BIJECTIONS: dict[str, tuple[Callable[[Any], Any], Callable[[Any], Any] | None]] = {
    "pair-perm": (
        lambda obj: list(tb.pair_to_threshold_perm(_pair(obj))),
        lambda obj: list(tb.threshold_perm_to_pair(_signed(obj))),
    ),
    "perm-graph": (
        lambda obj: json.loads(tg.graph_from_construction(tb.threshold_perm_to_pair(_signed(obj))).to_json()),
        lambda obj: list(tb.pair_to_threshold_perm(tg.canonical_pair(_threshold_graph(obj)))),
    ),
    "graph-pair": (
        lambda obj: list(tg.canonical_pair(_threshold_graph(obj))),
        lambda obj: json.loads(tg.graph_from_construction(_pair(obj)).to_json()),
    ),
    "lemma-bp": (
        lambda obj: list(pi_mod.lemma_bijection_forward(_special_pair(obj))),
        lambda obj: _special_pair_out(pi_mod.lemma_bijection_inverse(_signed(obj))),
    ),
    "standardize": (lambda obj: list(tb.standardize(_signed(obj))), None),
}


def cmd_bijection(args: argparse.Namespace) -> int:
    forward, backward = BIJECTIONS[args.kind]
    fn = backward if args.inverse else forward
    if fn is None:
        raise UsageError(f"{args.kind} has no inverse")
    _emit(_dumps(fn(_parse_json(args.input))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes (default: $THRESHOLD_ATLAS_JOBS or 1)")

    parser = argparse.ArgumentParser(
        prog="threshold-atlas",
        description="Characteristic polynomial of the threshold arrangement and its odd-cycle / odd-anchor statistics.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", parents=[common], help="print a characteristic polynomial")
    p.add_argument("--family", choices=("threshold", "typeb"), default="threshold")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("formula", "finitefield"), default="formula")
    p.add_argument("--cross-check", action="store_true", help="compute both ways and require equality")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("samples", parents=[common], help="point counts mod q as q,count")
    p.add_argument("--family", choices=("threshold", "typeb"), default="threshold")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, action="append", help="modulus (repeatable); default: the interpolation moduli")
    p.add_argument("--method", choices=("auto", "brute", "sweep", "formula"), default="auto")
    p.set_defaults(func=cmd_samples)

    p = sub.add_parser("distribution", parents=[common], help="odd-cycle or odd-anchor distribution")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--statistic", choices=STATISTICS, default="odd-anchors")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("table", parents=[common], help="reproduce a published table")
    p.add_argument("--which", choices=TABLES, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run every cross-check")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection", parents=[common], help="apply one of the bijections to a JSON input")
    p.add_argument("--kind", choices=tuple(BIJECTIONS), required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("input", help="JSON signed permutation, graph object or (b, pi) object")
    p.set_defaults(func=cmd_bijection)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "format"):
        args.format = "text"
    if not hasattr(args, "jobs"):
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"threshold-atlas: error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        sys.stderr.write(f"threshold-atlas: domain error: {exc}\n")
        return EXIT_DOMAIN
    except AtlasError as exc:
        sys.stderr.write(f"threshold-atlas: {type(exc).__name__}: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
