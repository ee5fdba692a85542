"""``hand-length``: tail tables, spectral reports, simulation and checks.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import spectral
from .analysis import verify_interlacing, verify_positive_definite
from .exact import matrix_power_table
from .game import GameSpecError, compile_chain, game_to_dict, is_standard_craps, load_game
from .montecarlo import estimate_tail, z_scores
from .polynomial import CertificationError
from .report import ReportRow, format_decimal, tail_rows
from .verify import run_checks

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _positive(name):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be at least 1")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hand-length", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("text", "csv", "json")):
        p.add_argument("--game", default="craps", help="craps, crapless, or a JSON game file")
        p.add_argument("--format", choices=formats, default="text")

    p = sub.add_parser("tail", help="table of t(n) = P(L >= n) for n = 1..N")
    common(p, ("text", "csv", "json", "plot"))
    p.add_argument("--n", type=_positive("--n"), default=154)
    p.add_argument("--digits", type=_positive("--digits"), default=9)

    p = sub.add_parser("eigen", help="characteristic polynomial, eigenvalues, coefficients")
    common(p, ("text", "json"))
    p.add_argument("--digits", type=_positive("--digits"), default=18,
                   help="decimal places (default 18)")

    p = sub.add_parser("simulate", help="Monte Carlo estimate of the tail")
    common(p)
    p.add_argument("--trials", type=_positive("--trials"), default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=_positive("--n"), default=30, help="rows to compare (default 30)")
    p.add_argument("--digits", type=_positive("--digits"), default=6)
    p.add_argument("--workers", type=_positive("--workers"), default=1)

    p = sub.add_parser("verify", help="run every cross-method and structural check")
    p.add_argument("--game", default="craps")
    return parser


def _emit_table(fields, rows, fmt, meta=None):
    if fmt == "json":
        print(json.dumps({**(meta or {}), "rows": rows}, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        widths = {f: max(len(f), *(len(str(r[f])) for r in rows)) for f in fields}
        for key, value in (meta or {}).items():
            print(f"# {key}: {value}")
        print("  ".join(f.rjust(widths[f]) for f in fields))
        for r in rows:
            print("  ".join(str(r[f]).rjust(widths[f]) for f in fields))


def cmd_tail(args) -> int:
    spec = load_game(args.game)
    chain = compile_chain(spec)
    rows = tail_rows(chain, args.n, args.digits)
    if args.format == "plot":
        print("# x=n y=t_exact yscale=log")
        print("n,t_exact")
        for r in rows:
            print(f"{r.n},{r.t_exact}")
        return EXIT_OK
    meta = {"game": spec.name, "digits": args.digits}
    _emit_table(ReportRow.FIELDS, [r.as_dict() for r in rows], args.format, meta)
    return EXIT_OK


def _poly_str(coeffs) -> str:
    deg = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        k = deg - i
        if c == 0:
            continue
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        body = f"{abs(c)}{mono}" if abs(c) != 1 or k == 0 else mono
        terms.append(("- " if c < 0 else "+ ") + body)
    out = " ".join(terms)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def eigen_report(spec, digits: int) -> dict:
    chain = compile_chain(spec)
    spectrum = spectral.eigenvalues(chain)
    mix = spectral.mixture_coefficients(chain, spectrum)
    fmt = lambda x: format_decimal(x, digits, places=True)  # noqa: E731
    report = {
        "game": spec.name,
        "rules": game_to_dict(spec),
        "states": list(chain.states),
        "charpoly": list(spectrum.charpoly),
        "charpoly_text": _poly_str(spectrum.charpoly) + " = 0",
        "method": spectrum.method,
        "eigenvalues": [fmt(e) for e in spectrum.eigenvalues],
        "coefficients": [fmt(c) for c in mix.coefficients],
    }
    if is_standard_craps(chain):
        numeric = spectral.eigenvalues_numeric(chain)
        report["alpha"] = fmt(spectral.radical_alpha())
        report["eigenvalues_numeric"] = [fmt(e) for e in numeric.eigenvalues]
        report["coefficients_closed_form"] = [fmt(c) for c in spectral.craps_coefficients(spectrum.eigenvalues)]
    else:
        report["note"] = "no radical form attempted; eigenvalues from certified numeric roots"
    inter = verify_interlacing(chain, spectrum)
    pd = verify_positive_definite(chain)
    den = math.lcm(*(d.denominator for d in inter.diagonal_brackets)) if inter.diagonal_brackets else 1
    brackets = ["1"] + [f"{int(d * den)}/{den}" for d in inter.diagonal_brackets] + ["0"]
    chainstr = brackets[0]
    for i, b in enumerate(brackets[1:], start=1):
        chainstr += f" > e{i} > {b}"
    report["interlacing"] = chainstr
    report["structure"] = {**{f"interlacing: {k}": v for k, v in inter.verdicts.items()},
                           **{f"positive definite: {k}": v for k, v in pd.verdicts.items()}}
    report["symmetric_part_eigenvalues"] = [fmt(e) for e in pd.symmetric_part_eigenvalues]
    return report


def cmd_eigen(args) -> int:
    spec = load_game(args.game)
    report = eigen_report(spec, args.digits)
    if args.format == "json":
        print(json.dumps(report, indent=2))
        return EXIT_OK
    print(f"game: {report['game']}  rules: {json.dumps(report['rules'])}")
    print(f"states: {', '.join(report['states'])}")
    print(f"characteristic polynomial: {report['charpoly_text']}")
    if "note" in report:
        print(f"note: {report['note']}")
    else:
        print(f"alpha = {report['alpha']}")
    print(f"method: {report['method']}")
    w = max(len(x) for x in report["eigenvalues"] + report["coefficients"])
    for i, (e, c) in enumerate(zip(report["eigenvalues"], report["coefficients"]), start=1):
        print(f"e{i} = {e:>{w}}   c{i} = {c:>{w}}")
    if "eigenvalues_numeric" in report:
        print("numeric roots:        " + ", ".join(report["eigenvalues_numeric"]))
        print("closed-form c_i:      " + ", ".join(report["coefficients_closed_form"]))
    print(f"interlacing: {report['interlacing']}")
    print("symmetric part eigenvalues: " + ", ".join(report["symmetric_part_eigenvalues"]))
    for name, ok in report["structure"].items():
        print(f"  {'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_OK if all(report["structure"].values()) else EXIT_VERIFY


def cmd_simulate(args) -> int:
    spec = load_game(args.game)
    result = estimate_tail(spec, args.trials, args.seed, workers=args.workers)
    exact = matrix_power_table(compile_chain(spec), args.n)
    z = z_scores(result, {n: float(t) for n, t in enumerate(exact, start=1)})
    tails = result.tail_estimates
    rows = []
    for n, t in enumerate(exact, start=1):
        p, se = tails.get(n, (0.0, 0.0))
        rows.append({
            "n": n,
            "empirical": format_decimal(p, args.digits),
            "std_error": format_decimal(se, args.digits),
            "exact": format_decimal(t, args.digits),
            "z": f"{z[n]:.3f}",
        })
    meta = {
        "game": spec.name,
        "trials": result.trials,
        "seed": result.seed,
        "generator": "numpy Philox, SeedSequence(seed).spawn per 10^6-hand stream",
        "max_length_observed": result.max_length_observed,
        "mean_length": format_decimal(result.mean_length, args.digits),
        "mean_length_se": format_decimal(result.mean_length_se, 3),
    }
    _emit_table(["n", "empirical", "std_error", "exact", "z"], rows, args.format, meta)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = load_game(args.game)
    checks = run_checks(spec)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed for {spec.name}")
    return EXIT_OK if not failed else EXIT_VERIFY


COMMANDS = {"tail": cmd_tail, "eigen": cmd_eigen, "simulate": cmd_simulate, "verify": cmd_verify}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except GameSpecError as exc:
        print(f"hand-length: invalid game: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CertificationError, spectral.MixtureError, ArithmeticError) as exc:
        print(f"hand-length: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
