"""Command line interface.

Subcommands:
  analyze N    one-number report (text by default, --json for machines)
  verify       sweep a range, cross-checking formula vs oracle vs witness
  export N     edge-list or dot rendering of G(Z_n)
  witness N    print the constructed maximum clique

Exit codes: 0 success, 2 usage/domain/resource error, 3 a verified
discrepancy (invalid witness, oracle disagreement, or --exact finding
the degree prediction off).
"""

import argparse
import csv
import json
import sys
import time

from .brute import graph_stats
from .class_graph import delta_exact, omega_exact
from .errors import DomainError, ResourceLimitError
from .factorization import factorize
from .formulas import chromatic_identities, clique_number, max_degree_paper
from .graph import export_graph
from .sweep import summarize, verify_range
from .witness import build_witness, verify_clique


def build_report(n: int, exact: bool = False, brute: bool = False) -> dict:
    """The analyze payload; keys are stable, see README for the schema."""
    t0 = time.perf_counter()
    f = factorize(n)
    analysis = clique_number(f)
    report: dict = {
        "n": f.n,
        "factorization": [[p, a] for p, a in f.factors],
        "case": analysis.case.value,
        "k": analysis.k,
        "t": analysis.t,
        "omega_formula": analysis.omega,
    }
    try:
        w = build_witness(f)
        check = verify_clique(f.n, w.elements)
        report["witness"] = [int(x) for x in w.elements]
        report["witness_valid"] = bool(check) and w.size == analysis.omega
    except ResourceLimitError:
        # witness would have ~sqrt(n) elements; report stays usable
        report["witness"] = None
        report["witness_valid"] = None
    if exact:
        ex = omega_exact(f, expand_limit=None)
        report["omega_exact"] = ex.omega
        report["omega_match"] = ex.omega == analysis.omega
    dp = max_degree_paper(f)
    de, _ = delta_exact(f)
    report["delta_paper"] = dp
    report["delta_exact"] = de
    report["delta_match"] = dp == de
    chi, chi1 = chromatic_identities(analysis, de)
    report["chi_predicted"] = chi
    report["chi1_predicted"] = chi1
    if brute:
        stats = graph_stats(f.n)
        report["omega_brute"] = stats.omega_brute
        report["delta_brute"] = stats.delta_brute
        if stats.chi_brute is not None:
            report["chi_brute"] = stats.chi_brute
        if stats.chi1_brute is not None:
            report["chi1_brute"] = stats.chi1_brute
    report["timing_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)
    return report


def report_discrepancies(report: dict, exact: bool) -> list[str]:
    """Human-readable list of everything in the report that disagrees."""
    bad = []
    if report.get("witness_valid") is False:
        bad.append("constructed witness is not a valid clique")
    if report.get("omega_match") is False:
        bad.append(
            f"omega_exact={report['omega_exact']} "
            f"!= omega_formula={report['omega_formula']}"
        )
    if exact and not report["delta_match"]:
        bad.append(
            f"delta_exact={report['delta_exact']} "
            f"!= delta_paper={report['delta_paper']}"
        )
    if "omega_brute" in report and report["omega_brute"] != report["omega_formula"]:
        bad.append(f"omega_brute={report['omega_brute']} disagrees with formula")
    if "delta_brute" in report and report["delta_brute"] != report["delta_exact"]:
        bad.append(f"delta_brute={report['delta_brute']} disagrees with delta_exact")
    if "chi_brute" in report and report["chi_brute"] != report["chi_predicted"]:
        bad.append(f"chi_brute={report['chi_brute']} != predicted {report['chi_predicted']}")
    if "chi1_brute" in report and report["chi1_brute"] != report["chi1_predicted"]:
        bad.append(
            f"chi1_brute={report['chi1_brute']} != predicted {report['chi1_predicted']}"
        )
    return bad


def render_text(report: dict) -> str:
    f = factorize(report["n"])
    lines = [
        f"n = {report['n']} = {f}",
        f"case: {report['case']} (k={report['k']}, t={report['t']})",
        f"clique number (formula): {report['omega_formula']}",
    ]
    if report["witness"] is None:
        lines.append("witness: omitted (element count above limit)")
    else:
        shown = report["witness"]
        body = " ".join(str(x) for x in shown[:24])
        if len(shown) > 24:
            body += f" ... ({len(shown)} elements)"
        valid = "valid" if report["witness_valid"] else "INVALID"
        lines.append(f"witness: {body}  [{valid}]")
    if "omega_exact" in report:
        tag = "matches formula" if report["omega_match"] else "MISMATCH"
        lines.append(f"clique number (exact search): {report['omega_exact']}  [{tag}]")
    tag = "match" if report["delta_match"] else "MISMATCH (prediction counts a self-loop)"
    lines.append(
        f"max degree: predicted {report['delta_paper']}, "
        f"exact {report['delta_exact']}  [{tag}]"
    )
    lines.append(
        f"chromatic predictions: chi = {report['chi_predicted']}, "
        f"chi' = {report['chi1_predicted']}"
    )
    if "omega_brute" in report:
        parts = [f"omega={report['omega_brute']}", f"delta={report['delta_brute']}"]
        if "chi_brute" in report:
            parts.append(f"chi={report['chi_brute']}")
        if "chi1_brute" in report:
            parts.append(f"chi'={report['chi1_brute']}")
        lines.append("brute force: " + " ".join(parts))
    lines.append(f"time: {report['timing_ms']} ms")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    report = build_report(args.n, exact=args.exact, brute=args.brute)
    if args.json:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(report))
    bad = report_discrepancies(report, exact=args.exact)
    for line in bad:
        sys.stderr.write(f"discrepancy: {line}\n")
    return 3 if bad else 0


_CSV_COLUMNS = [
    "n",
    "omega_formula",
    "omega_exact",
    "omega_brute",
    "witness_ok",
    "delta_paper",
    "delta_exact",
    "delta_match",
]


def _csv_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def cmd_verify(args) -> int:
    rows = verify_range(
        args.start, args.stop, brute_max=args.brute_max, workers=args.workers
    )
    summary = summarize(rows)
    if args.out:
        sink = open(args.out, "w", newline="")
        close_sink, summary_stream = True, sys.stdout
    else:
        sink, close_sink, summary_stream = sys.stdout, False, sys.stderr
    try:
        writer = csv.writer(sink)
        writer.writerow(_CSV_COLUMNS)
        for r in rows:
            writer.writerow(
                [
                    _csv_value(v)
                    for v in (
                        r.n,
                        r.omega_formula,
                        r.omega_exact,
                        r.omega_brute,
                        r.witness_ok,
                        r.delta_paper,
                        r.delta_exact,
                        r.delta_match,
                    )
                ]
            )
    finally:
        if close_sink:
            sink.close()
    summary_stream.write(
        f"checked={summary.checked} range={args.start}..{args.stop} "
        f"omega_mismatches={len(summary.omega_mismatches)} "
        f"witness_failures={len(summary.witness_failures)} "
        f"delta_mismatches={summary.delta_mismatches}\n"
    )
    if not summary.clean:
        for n in summary.omega_mismatches[:10]:
            sys.stderr.write(f"discrepancy: omega disagreement at n={n}\n")
        for n in summary.witness_failures[:10]:
            sys.stderr.write(f"discrepancy: invalid witness at n={n}\n")
        return 3
    return 0


def cmd_export(args) -> int:
    text = export_graph(args.n, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_witness(args) -> int:
    w = build_witness(args.n)
    sys.stdout.write(" ".join(str(x) for x in w.elements) + "\n")
    if args.check:
        check = verify_clique(args.n, w.elements)
        expected = clique_number(args.n).omega
        if not check or w.size != expected:
            sys.stderr.write(
                f"discrepancy: witness check failed for n={args.n}: "
                f"{check.reason or 'size mismatch'}\n"
            )
            return 3
        sys.stderr.write(f"valid clique of size {w.size}\n")
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zdring",
        description="Clique number, witnesses and chromatic invariants of "
        "zero-divisor graphs of Z_n.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for one n")
    a.add_argument("n", type=int)
    fmt = a.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable output")
    fmt.add_argument("--text", action="store_true", help="human-readable (default)")
    a.add_argument(
        "--exact", action="store_true", help="also run the exact clique search"
    )
    a.add_argument(
        "--brute", action="store_true", help="also run brute force (small n only)"
    )
    a.set_defaults(fn=cmd_analyze)

    v = sub.add_parser("verify", help="cross-check a range of n")
    v.add_argument("--from", dest="start", type=int, required=True)
    v.add_argument("--to", dest="stop", type=int, required=True)
    v.add_argument(
        "--brute-max",
        dest="brute_max",
        type=int,
        default=0,
        help="also brute-force every n up to this value",
    )
    v.add_argument("--out", help="write CSV here instead of stdout")
    v.add_argument(
        "--workers", type=int, default=None, help="process count (default: auto)"
    )
    v.set_defaults(fn=cmd_verify)

    e = sub.add_parser("export", help="render the graph")
    e.add_argument("n", type=int)
    e.add_argument("--format", required=True, choices=["edge-list", "dot"])
    e.add_argument("--out", help="write here instead of stdout")
    e.set_defaults(fn=cmd_export)

    w = sub.add_parser("witness", help="print the constructed maximum clique")
    w.add_argument("n", type=int)
    w.add_argument("--check", action="store_true", help="verify it pairwise")
    w.set_defaults(fn=cmd_witness)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, ResourceLimitError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
