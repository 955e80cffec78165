"""
Command-line front end: ``qbch code | thresholds | quantum | scan | verify``.

Every record carries ``schema: 1``. Exit codes: 0 success, 1 usage error,
2 hypothesis violation, 3 verification mismatch.

Precedence for options is command line, then ``--config`` JSON file, then
built-in defaults. Only parallelism (QBCH_JOBS) and oracle budget caps
(QBCH_MAX_MESSAGES, QBCH_MAX_WEIGHT, QBCH_TIME_BUDGET) are read from the
environment.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from . import __version__
from .bch import code_record, construct, consecutive_run_bound
from .duality import (
    euclidean_dual_containing,
    hermitian_dual_containing,
    hermitian_sufficient,
    threshold_report,
)
from .cyclotomic import multiplicative_order
from .errors import BchError, HypothesisViolated
from .oracle import CHECKS, GridSpec, OracleBudget, verify_grid
from .quantum import euclid_css, expanded_family, hermitian_family, nested_css

log = logging.getLogger("qbch")

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# output


def _emit(records: list[dict], fmt: str, out, columns: Sequence[str] | None = None) -> None:
    if fmt == "json":
        for r in records:
            out.write(json.dumps(r, separators=(",", ":")) + "\n")
        return
    columns = list(columns or (records[0].keys() if records else []))
    rows = [[_cell(r.get(c)) for c in columns] for r in records]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
        out.write(buf.getvalue())
        return
    widths = [max([len(c)] + [len(row[i]) for row in rows]) for i, c in enumerate(columns)]
    out.write("  ".join(c.rjust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, separators=(",", ":"), sort_keys=True)
    return str(v)


# ---------------------------------------------------------------------------
# ranges and config


def parse_range(text: str) -> list[int]:
    """'5' -> [5]; '2:7' -> [2..7]; '2,4,9:11' -> [2, 4, 9, 10, 11]."""
    out: list[int] = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            lo, hi = part.split(":", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty range {text!r}")
    return sorted(set(out))


@dataclass(frozen=True)
class ScanConfig:
    qs: tuple[int, ...]
    ns: tuple[int, ...]
    deltas: str = "auto"
    bs: tuple[int, ...] = (1,)
    flavor: str = "euclidean"
    fmt: str = "json"
    jobs: int = 1

    def __post_init__(self):
        if not self.qs or not self.ns or not self.bs:
            raise UsageError("q, n and b ranges must be nonempty")
        if self.jobs < 1:
            raise UsageError("parallelism must be at least 1")
        if self.flavor not in ("euclidean", "hermitian"):
            raise UsageError(f"unknown flavor {self.flavor!r}")

    def delta_range(self, n: int, q: int) -> list[int]:
        if self.deltas == "all":
            return list(range(2, n + 1))
        if self.deltas == "auto":
            if self.flavor == "hermitian":
                top = hermitian_sufficient(n, q)
            else:
                top = threshold_report(n, q).sufficient_delta_max
            return list(range(2, min(n, top + 1) + 1))
        return [d for d in parse_range(self.deltas) if 2 <= d <= n]


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path) as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        raise UsageError("config file must hold a JSON object")
    return {k.replace("-", "_"): v for k, v in cfg.items()}


def _env_int(name: str) -> int | None:
    v = os.environ.get(name)
    if v is None or v == "":
        return None
    try:
        return int(v)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {v!r}") from None


# ---------------------------------------------------------------------------
# commands


def cmd_code(args) -> int:
    if args.delta < 2:
        raise UsageError("designed distance must be at least 2")
    if args.flavor == "hermitian":
        code = construct(args.n, args.q * args.q, args.b, args.delta)
    else:
        code = construct(args.n, args.q, args.b, args.delta)
    rec = code_record(code, flavor=args.flavor, with_generator=args.with_generator)
    _emit([rec], args.format, sys.stdout)
    return EXIT_OK


def cmd_thresholds(args) -> int:
    rep = threshold_report(args.n, args.q, args.flavor)
    _emit([rep.to_json()], args.format, sys.stdout)
    return EXIT_OK


_FAMILY_ARITY = {"nested": 4, "euclid": 3, "hermitian": 3, "expanded": 4}
_FAMILY_HELP = {
    "nested": "n q delta1 delta2",
    "euclid": "n q delta",
    "hermitian": "n q delta (q is the base field; codes live over q^2)",
    "expanded": "n q l delta",
}


def cmd_quantum(args) -> int:
    want = _FAMILY_ARITY[args.family]
    if len(args.params) != want:
        raise UsageError(f"--family {args.family} takes {_FAMILY_HELP[args.family]}")
    p = args.params
    fn = {"nested": nested_css, "euclid": euclid_css,
          "hermitian": hermitian_family, "expanded": expanded_family}[args.family]
    res = fn(*p)
    rec = res.to_json()
    rec["label"] = res.label
    _emit([rec], args.format, sys.stdout)
    return EXIT_OK


SCAN_COLUMNS = (
    "schema", "flavor", "q", "alphabet", "n", "b", "delta", "m", "k", "d_bound",
    "contains_dual", "quantum_k", "quantum_d_low", "quantum_label",
)


def _scan_instance(job) -> list[dict]:
    cfg, q, n = job
    rows = []
    Q = q * q if cfg.flavor == "hermitian" else q
    m = multiplicative_order(Q, n)
    for b in cfg.bs:
        for delta in cfg.delta_range(n, q):
            code = construct(n, Q, b, delta)
            if cfg.flavor == "hermitian":
                contains = hermitian_dual_containing(code.Z, n, q)
            else:
                contains = euclidean_dual_containing(code.Z, n)
            qk = 2 * code.k - n if contains else None
            rows.append({
                "schema": 1,
                "flavor": cfg.flavor,
                "q": q,
                "alphabet": Q,
                "n": n,
                "b": b,
                "delta": delta,
                "m": m,
                "k": code.k,
                "d_bound": consecutive_run_bound(code.Z, n),
                "contains_dual": contains,
                "quantum_k": qk,
                "quantum_d_low": delta if contains else None,
                "quantum_label": f"[[{n},{qk},>={delta}]]_{q}" if contains else None,
            })
    return rows


def run_scan(cfg: ScanConfig) -> list[dict]:
    """All scan rows for a config, ordered by (q, n, b, delta) whatever the parallelism."""
    jobs = [(cfg, q, n) for q in cfg.qs for n in cfg.ns if n >= 2 and gcd(n, q) == 1]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            parts = list(pool.map(_scan_instance, jobs, chunksize=4))
    else:
        parts = [_scan_instance(j) for j in jobs]
    rows = [r for part in parts for r in part]
    rows.sort(key=lambda r: (r["q"], r["n"], r["b"], r["delta"]))
    return rows


def _jobs(args) -> int:
    if args.jobs is not None:
        return args.jobs
    return _env_int("QBCH_JOBS") or 1


def cmd_scan(args) -> int:
    cfg = ScanConfig(
        qs=tuple(parse_range(args.q)),
        ns=tuple(parse_range(args.n)),
        deltas=args.delta,
        bs=tuple(parse_range(args.b)),
        flavor=args.flavor,
        fmt=args.format,
        jobs=_jobs(args),
    )
    for q in cfg.qs:
        from .gf import prime_power

        prime_power(q)
    rows = run_scan(cfg)
    _emit(rows, cfg.fmt, sys.stdout, SCAN_COLUMNS)
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    if "all" in checks:
        checks = list(CHECKS)
    bad = set(checks) - set(CHECKS)
    if bad:
        raise UsageError(f"unknown checks {sorted(bad)}; choose from {', '.join(CHECKS)}")
    budget = OracleBudget.from_env(
        max_message_enumeration=args.max_messages,
        max_weight_enumeration=args.max_weight,
        time_budget=args.time_budget,
    )
    grid = GridSpec(
        qs=tuple(parse_range(args.q)),
        ns=tuple(parse_range(args.n)),
        bs=tuple(parse_range(args.b)),
        deltas=None if args.delta == "all" else tuple(parse_range(args.delta)),
        max_redundancy=args.max_redundancy,
    )
    report = verify_grid(grid, checks, budget=budget, workers=_jobs(args))
    for line in report.lines():
        sys.stdout.write(line + "\n")
    summary = {
        "schema": 1,
        "checked": dict(sorted(report.checked.items())),
        "mismatches": len(report.mismatches),
        "inconclusive": len(report.inconclusive),
    }
    sys.stderr.write(json.dumps(summary) + "\n")
    if args.show_inconclusive:
        for m in sorted(report.inconclusive):
            sys.stderr.write(m.to_json() + "\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "table"), default="json")
    fmt.add_argument("--config", help="JSON file whose keys override defaults")

    p = _Parser(prog="qbch", description="BCH codes, dual containment and quantum code parameters.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("code", parents=[fmt], help="describe one BCH code")
    c.add_argument("n", type=int)
    c.add_argument("q", type=int, help="field size (base field for --flavor hermitian)")
    c.add_argument("b", type=int)
    c.add_argument("delta", type=int)
    c.add_argument("--flavor", choices=("euclidean", "hermitian"), default="euclidean")
    c.add_argument("--with-generator", action="store_true")
    c.set_defaults(func=cmd_code)

    t = sub.add_parser("thresholds", parents=[fmt], help="dual-containment thresholds for (n, q)")
    t.add_argument("n", type=int)
    t.add_argument("q", type=int, help="base field size for both flavors")
    t.add_argument("--flavor", choices=("euclidean", "hermitian"), default="euclidean")
    t.set_defaults(func=cmd_thresholds)

    qc = sub.add_parser("quantum", parents=[fmt], help="quantum code parameters from a family")
    qc.add_argument("--family", choices=tuple(_FAMILY_ARITY), required=True)
    qc.add_argument("params", type=int, nargs="+",
                    help="; ".join(f"{k}: {v}" for k, v in _FAMILY_HELP.items()))
    qc.set_defaults(func=cmd_quantum)

    s = sub.add_parser("scan", parents=[fmt], help="table of codes over a parameter grid")
    s.add_argument("--q", default="2", help="field sizes, e.g. 2,3 or 2:5")
    s.add_argument("--n", default="3:63", help="lengths, e.g. 3:63")
    s.add_argument("--delta", default="auto",
                   help="'auto' (up to the sufficient threshold + 1), 'all', or a range")
    s.add_argument("--b", default="1")
    s.add_argument("--flavor", choices=("euclidean", "hermitian"), default="euclidean")
    s.add_argument("--jobs", type=int, default=None)
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify", parents=[fmt], help="oracle cross-check over a grid")
    v.add_argument("--q", default="2:5")
    v.add_argument("--n", default="1:63")
    v.add_argument("--delta", default="all")
    v.add_argument("--b", default="1")
    v.add_argument("--checks", default="euclidean",
                   help=f"comma list from {', '.join(CHECKS)} or 'all'")
    v.add_argument("--jobs", type=int, default=None)
    v.add_argument("--max-messages", type=int, default=None)
    v.add_argument("--max-weight", type=int, default=None)
    v.add_argument("--time-budget", type=float, default=None)
    v.add_argument("--max-redundancy", type=int, default=None)
    v.add_argument("--show-inconclusive", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def _parse(parser: argparse.ArgumentParser, argv) -> argparse.Namespace:
    args = parser.parse_args(argv)
    cfg = _load_config(getattr(args, "config", None))
    if cfg:
        # re-parse with config values as defaults so explicit flags still win
        sub = parser._subparsers._group_actions[0].choices[args.command]  # noqa: SLF001
        known = {a.dest for a in sub._actions}  # noqa: SLF001
        unknown = set(cfg) - known
        if unknown:
            raise UsageError(f"unknown config keys {sorted(unknown)}")
        sub.set_defaults(**cfg)
        args = parser.parse_args(argv)
    return args


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = _parse(parser, argv)
    except SystemExit as exc:  # argparse: --help, --version or a usage error
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except UsageError as exc:
        sys.stderr.write(f"qbch: error: {exc}\n")
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"qbch: error: cannot read config: {exc}\n")
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        sys.stderr.write("qbch: error: --jobs must be at least 1\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except HypothesisViolated as exc:
        sys.stderr.write(f"qbch: HypothesisViolated: {exc}\n")
        return EXIT_HYPOTHESIS
    except (UsageError, BchError, ValueError) as exc:
        sys.stderr.write(f"qbch: error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
