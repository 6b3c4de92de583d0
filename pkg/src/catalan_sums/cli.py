"""Command-line front end: ``verify``, ``scan``, ``table`` and ``qfactor``.

Exit codes: 0 pass, 1 failed check, 2 usage error, 3 conjecture counterexample.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field

from . import conjectures, modular, multiindex, qcatalan, suites, theta
from .reports import Record, Report
from .results import render
from .triangle import catalan_row

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3

FORMATS = ("json", "csv", "text")
TABLE_KINDS = ("catalan-row", "theta", "s-sum", "coprime-list")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    workers: int = 1
    fmt: str = "json"
    out: str | None = None
    seed: int = 0  # reserved for scan shuffling; no math depends on it
    ranges: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")
        for key, value in self.ranges.items():
            values = value if isinstance(value, (list, tuple)) else [value]
            if any(v is not None and v < 0 for v in values):
                raise UsageError(f"--{key.replace('_', '-')} must be nonnegative")


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _composition(text: str) -> tuple[int, ...]:
    values = _int_list(text)
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("composition entries must be positive")
    return tuple(values)


class _Parser(argparse.ArgumentParser):
    """Raise instead of exiting so ``main`` keeps control of the exit code."""

    def error(self, message):
        raise UsageError(message)


def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--seed", type=int, default=0, help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="catalan-sums", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help="shapiro, theta, powersum, multiindex, corollary[:<id>], modular, q or all")
    for flag in ("--n-max", "--m-max", "--r-max", "--s-max"):
        v.add_argument(flag, type=int)
    v.add_argument("--comp", type=_composition, help="composition, e.g. 3,3,2,3,3")
    _output_flags(v)

    s = sub.add_parser("scan", help="falsification scan of a conjecture")
    s.add_argument("conjecture", help="7.1 ... 7.9")
    for name in ("m", "n", "r", "s", "t"):
        s.add_argument(f"--{name}-max", type=int)
        s.add_argument(f"--{name}", type=_int_list, help=f"explicit comma list for {name}")
    _output_flags(s)

    t = sub.add_parser("table", help="print exact values")
    t.add_argument("kind", help=", ".join(TABLE_KINDS))
    for name in ("m", "n", "r"):
        t.add_argument(f"--{name}", type=_int_list)
    t.add_argument("--comp", type=_composition)
    t.add_argument("--limit", type=int, default=500)
    t.add_argument("--format", choices=FORMATS, default="text")
    t.add_argument("--out", metavar="PATH")

    q = sub.add_parser("qfactor", help="cyclotomic factorization of q-Catalan entries")
    q.add_argument("--n", type=_int_list, required=True)
    q.add_argument("--k", type=_int_list)
    _output_flags(q)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _elapsed(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


# -- verify -------------------------------------------------------------------

def cmd_verify(args) -> int:
    cfg = RunConfig("verify", args.workers, args.format, args.out, args.seed,
                    {"n_max": args.n_max, "m_max": args.m_max, "r_max": args.r_max, "s_max": args.s_max})
    rg = suites.Ranges(args.n_max, args.m_max, args.r_max, args.s_max, args.comp)
    try:
        params, tasks = suites.build_suite(args.suite, rg)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    start = time.perf_counter()
    records = suites.run_tasks(tasks, workers=cfg.workers)
    report = Report.from_records("verify", {"suite": args.suite, **params}, records, _elapsed(start))
    _emit(report.render(cfg.fmt), cfg.out)
    return EXIT_PASS if report.status == "pass" else EXIT_FAIL


# -- scan ---------------------------------------------------------------------

def _scan_ranges(args, conj) -> dict:
    ranges = {}
    for name in conj.params:
        explicit = getattr(args, name)
        top = getattr(args, f"{name}_max")
        if explicit is not None:
            ranges[name] = explicit
        elif top is not None:
            lo = conj.defaults[name][0]
            if top < lo:
                raise UsageError(f"--{name}-max {top} is below the smallest admissible {name} = {lo}")
            ranges[name] = (lo, top)
    return ranges


def cmd_scan(args) -> int:
    try:
        conj = conjectures.get_conjecture(args.conjecture)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    cfg = RunConfig("scan", args.workers, args.format, args.out, args.seed,
                    {n: getattr(args, n) for n in ("m", "n", "r", "s", "t")})
    ranges = _scan_ranges(args, conj)
    start = time.perf_counter()
    result = conjectures.scan(conj.id, ranges, workers=cfg.workers)
    elapsed = _elapsed(start)
    failures = [
        {"id": conj.id, "tuple": c["tuple"], "lhs": c["value"], "rhs": c["expected"]}
        for c in result.counterexamples
    ]
    rows = [
        Record(conj.id, tuple(t), value, expected, holds)
        for t, value, expected, holds in result.evaluations
    ]
    extra = {"conjecture": conj.id, "reading": result.reading, "skipped": result.skipped}
    if result.alternate_counterexamples is not None:
        extra["alternate_counterexamples"] = result.alternate_counterexamples
    report = Report(
        command="scan",
        params={"conjecture": conj.id, "ranges": result.ranges},
        checked=result.checked,
        failures=failures,
        status=result.status,
        elapsed_ms=elapsed,
        extra=extra,
        rows=rows,
    )
    _emit(report.render(cfg.fmt), cfg.out)
    return EXIT_PASS if result.status == conjectures.CONFIRMED else EXIT_COUNTEREXAMPLE


# -- table --------------------------------------------------------------------

def _one(values, flag):
    if not values:
        raise UsageError(f"{flag} is required")
    return values


def table_rows(args) -> list[tuple[dict, list[str]]]:
    kind = args.kind
    if kind == "catalan-row":
        return [({"n": n}, [str(v) for v in catalan_row(n)]) for n in _one(args.n, "--n")]
    if kind == "theta":
        rows = []
        for m in _one(args.m, "--m"):
            for n in _one(args.n, "--n"):
                for r in _one(args.r, "--r"):
                    check = theta.theta_check(m, n, r)
                    if not check:
                        raise AssertionError(f"closed form disagrees with the sum at {(m, n, r)}")
                    rows.append(({"m": m, "n": n, "r": r}, [render(check.rhs)]))
        return rows
    if kind == "s-sum":
        comp = args.comp
        if comp is None:
            raise UsageError("--comp is required")
        return [({"r": r, "comp": list(comp)}, [render(multiindex.s_value(r, comp))]) for r in _one(args.r, "--r")]
    if kind == "coprime-list":
        if args.limit < 0:
            raise UsageError("--limit must be nonnegative")
        return [({"limit": args.limit}, [str(v) for v in modular.scan_coprime_non_prime_powers(args.limit)])]
    raise UsageError(f"unknown table kind {kind!r}; expected one of {', '.join(TABLE_KINDS)}")


def cmd_table(args) -> int:
    for name in ("m", "n", "r"):
        if any(v < 0 for v in getattr(args, name) or ()):
            raise UsageError(f"--{name} must be nonnegative")
    try:
        rows = table_rows(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "text":
        text = "".join(" ".join(values) + "\n" for _, values in rows)
    elif args.format == "json":
        doc = {"command": "table", "kind": args.kind,
               "rows": [{"params": p, "values": v} for p, v in rows]}
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind", "params", "values"])
        for p, v in rows:
            writer.writerow([args.kind, json.dumps(p, sort_keys=True), " ".join(v)])
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_PASS


# -- qfactor ------------------------------------------------------------------

def cmd_qfactor(args) -> int:
    cfg = RunConfig("qfactor", args.workers, args.format, args.out, args.seed)
    start = time.perf_counter()
    records, lines, factorizations = [], [], []
    for n in args.n:
        if n < 1:
            raise UsageError("--n must be positive")
        ks = args.k or range(1, n + 1)
        for k in ks:
            if not 1 <= k <= n:
                raise UsageError(f"k={k} outside 1..{n}")
            fac = qcatalan.q_catalan_factorization(n, k)
            entry = qcatalan.q_catalan_entry(n, k)
            ok = fac.expand() == entry
            records.append(Record("q-factorization", (n, k), str(fac), str(entry), ok))
            factorizations.append({"n": n, "k": k, "factors": [list(f) for f in fac.factors],
                                   "overlap": qcatalan.factorization_overlap(n, k)})
            lines.append(f"B({n},{k})(q) = {fac}")
    report = Report.from_records("qfactor", {"n": args.n, "k": args.k}, records, _elapsed(start))
    report.extra["factorizations"] = factorizations
    if cfg.fmt == "text":
        text = "\n".join(lines) + "\n" + report.to_text()
    else:
        text = report.render(cfg.fmt)
    _emit(text, cfg.out)
    return EXIT_PASS if report.status == "pass" else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "scan": cmd_scan, "table": cmd_table, "qfactor": cmd_qfactor}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"catalan-sums: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
