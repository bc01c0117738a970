"""Command-line front end: ``padicval analyze | ring-analyze | oracle``.

Exit codes: 0 on success, 1 on an internal error, 2 on rejected input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from padicval.hensel import HenselError
from padicval.numring import (
    MonogenicRing,
    RamificationError,
    RingAnalysis,
    ring_analyze,
    ring_poly,
    validate_ramified,
)
from padicval.poly import parse_poly
from padicval.sequence import SequenceAnalysis, analyze, fundamental_period, oracle_values
from padicval.valuation import INFINITE

SCHEMA_VERSION = 1

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID = 0, 1, 2


def _val(v):
    return "inf" if v is INFINITE else v


def analysis_report(a: SequenceAnalysis, options: dict, oracle: int | None = None,
                    seconds: float | None = None) -> dict:
    rep = {
        "schema_version": SCHEMA_VERSION,
        "input": {"polynomial": str(a.poly), "prime": a.prime, "options": options},
        "verdicts": {k: v.to_json() for k, v in a.verdicts.items()},
        "outcome": a.outcome.value,
        "degree": a.degree,
        "alpha": _val(a.alpha),
        "period_length": a.period_length,
        "period_source": a.period_source,
        "irreducibility": a.irreducibility,
        "fundamental_period": fundamental_period(a) if a.periodic else None,
        "profile": None,
        "factors": [],
        "roots": [
            {"residue": r.residue, "precision": r.root.precision, "digits": r.digits(),
             "possibly_unresolved": r.possibly_unresolved}
            for r in a.roots
        ],
        "oracle_window": None,
        "timings": {"analysis_seconds": seconds},
    }
    if a.profile is not None:
        pr = a.profile
        rep["profile"] = {"n0": pr.n0, "alpha": pr.alpha, "beta": pr.beta,
                          "degree": pr.degree, "shift": pr.shift, "cases": pr.cases()}
    for f in a.factors:
        rep["factors"].append({"polynomial": str(f.poly), "alpha": _val(f.alpha),
                               "period_length": f.period_length,
                               "fundamental_period": fundamental_period(f)})
    if a.evidence:
        rep["evidence"] = {k: (v if not isinstance(v, list) else [str(x) for x in v])
                           for k, v in a.evidence.items()}
    if oracle:
        rep["oracle_window"] = [_val(v) for v in oracle_values(a.poly, a.prime, oracle)]
    return rep


def ring_report(a: RingAnalysis, inputs: dict, seconds: float | None = None) -> dict:
    rep = {
        "schema_version": SCHEMA_VERSION,
        "input": inputs,
        "e": a.e,
        "degree": a.degree,
        "domain": a.domain,
        "outcome": a.outcome.value,
        "alpha": _val(a.alpha),
        "beta": a.beta,
        "period_length": a.period_length,
        "period_formula": None,
        "fundamental_period": a.fundamental_period,
        "n0": list(a.n0) if isinstance(a.n0, tuple) else a.n0,
        "case_map": a.case_map,
        "irreducible_over_completion": a.irreducible_over_completion,
        "norm_polynomial": str(a.norm_polynomial) if a.norm_polynomial is not None else None,
        "timings": {"analysis_seconds": seconds},
    }
    if a.domain == "Z" and a.period_length is not None:
        rep["period_formula"] = f"{a.p}^ceil({a.alpha}/({a.e}*{a.degree}))"
    return rep


def dump_json(report: dict, path: str) -> None:
    text = json.dumps(report, indent=2, ensure_ascii=False)
    if path == "-":
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _print_table(rows: list[tuple[str, object]]) -> None:
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        if isinstance(v, list):
            v = ", ".join(str(x) for x in v)
        print(f"{k:<{width}}  {v}")


def cmd_analyze(args) -> int:
    Q = parse_poly(args.poly, coeffs=args.coeffs)
    t0 = time.perf_counter()
    a = analyze(Q, args.prime, precision=args.precision)
    elapsed = time.perf_counter() - t0
    options = {"precision": args.precision, "oracle": args.oracle, "coeffs": args.coeffs}
    rep = analysis_report(a, options, args.oracle, elapsed)
    rows = [("polynomial", rep["input"]["polynomial"]), ("prime", a.prime),
            ("outcome", rep["outcome"]), ("alpha", rep["alpha"])]
    for name, v in rep["verdicts"].items():
        rows.append((name, v["status"]))
    if a.periodic:
        rows += [("irreducibility", a.irreducibility), ("period length", a.period_length),
                 ("period source", a.period_source), ("fundamental period", rep["fundamental_period"])]
        if a.profile is not None:
            rows.append(("n0", a.profile.n0))
    for i, r in enumerate(rep["roots"]):
        rows.append((f"root {i} digits", r["digits"]))
    if rep["oracle_window"] is not None:
        rows.append(("oracle", rep["oracle_window"]))
    _print_table(rows)
    if args.json:
        dump_json(rep, args.json)
    return EXIT_OK


def _parse_vectors(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"cannot parse {text!r} as a JSON list: {exc}") from None
    if not isinstance(data, list):
        raise ValueError(f"expected a JSON list, got {text!r}")
    return data


def cmd_ring_analyze(args) -> int:
    ring = MonogenicRing(parse_poly(args.defpoly))
    pi = ring.element(_parse_vectors(args.uniformizer))
    rp = validate_ramified(ring, args.prime, pi)
    Q = ring_poly(ring, _parse_vectors(args.poly))
    t0 = time.perf_counter()
    a = ring_analyze(rp, Q, domain=args.domain)
    elapsed = time.perf_counter() - t0
    inputs = {"defining_poly": str(ring.defining_poly), "prime": args.prime,
              "uniformizer": list(pi.coords), "polynomial": [list(c.coords) for c in Q],
              "domain": args.domain}
    rep = ring_report(a, inputs, elapsed)
    rows = [("ring", f"Z[x]/({ring.defining_poly})"), ("prime", args.prime),
            ("uniformizer", list(pi.coords)), ("e", a.e), ("domain", args.domain),
            ("outcome", rep["outcome"]), ("alpha", rep["alpha"])]
    if a.period_length is not None:
        rows += [("period length", a.period_length), ("fundamental period", a.fundamental_period)]
    if a.case_map is not None:
        by_value: dict = {}
        for c in a.case_map:
            by_value.setdefault(c["value"], 0)
            by_value[c["value"]] += 1
        rows.append(("case values", [f"{v} (x{n})" for v, n in sorted(by_value.items())]))
    _print_table(rows)
    if args.json:
        dump_json(rep, args.json)
    return EXIT_OK


def cmd_oracle(args) -> int:
    Q = parse_poly(args.poly, coeffs=args.coeffs)
    if args.count < 0:
        raise ValueError("--count must be non-negative")
    vals = oracle_values(Q, args.prime, args.count)
    rendered = [_val(v) for v in vals]
    print(",".join(str(v) for v in rendered))
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "valuation"])
            for n, v in enumerate(rendered):
                w.writerow([n, v])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="padicval", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="periodicity, period and closed form of nu_p(Q(n))")
    a.add_argument("poly", help='polynomial, e.g. "x^3+9x^2+81x+243"')
    a.add_argument("--prime", "-p", type=int, required=True)
    a.add_argument("--precision", type=int, default=None, help="digits for lifted roots")
    a.add_argument("--coeffs", action="store_true", help="read POLY as a low-to-high coefficient list")
    a.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    a.add_argument("--oracle", type=int, metavar="N", default=None,
                   help="include the first N directly computed valuations")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("ring-analyze", help="pi-adic valuations over a monogenic order Z[theta]")
    r.add_argument("defpoly", help='defining polynomial of theta, e.g. "x^3-2"')
    r.add_argument("poly", help="polynomial over Z[theta] as a JSON list of coordinate vectors, low degree first")
    r.add_argument("--prime", "-p", type=int, required=True)
    r.add_argument("--uniformizer", required=True, help='coordinates of pi, e.g. "[1,1,0]"')
    r.add_argument("--domain", choices=["Z", "ring"], default="Z")
    r.add_argument("--json", metavar="PATH")
    r.set_defaults(func=cmd_ring_analyze)

    o = sub.add_parser("oracle", help="list nu_p(Q(n)) for n = 0 .. N-1 by direct evaluation")
    o.add_argument("poly")
    o.add_argument("--prime", "-p", type=int, required=True)
    o.add_argument("--count", "-n", type=int, required=True)
    o.add_argument("--coeffs", action="store_true")
    o.add_argument("--csv", metavar="PATH")
    o.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    try:
        sys.stdout.reconfigure(line_buffering=True)
    except AttributeError:
        pass
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, HenselError, RamificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001 - stable exit code for harnesses
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
