"""Batch command line front end.

Every command writes a deterministic byte stream for a given configuration:
JSON objects keep insertion order, CSV uses a fixed line terminator, maps
keyed by partitions iterate in the canonical reverse-lexicographic order.
LaTeX polynomial output lists monomials smallest-first, which is the layout
of the published low-degree tables.

Exit codes: 0 success, 1 verification mismatch or exceeded time budget,
2 invalid configuration.  Rationals print as num/den strings, never floats.
Set ORIGAMI_CACHE_DIR to persist the character/Jack memo tables between runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from . import cache as cache_store
from .characters import character
from .jack import jack
from .oracle import (
    oracle_complex_counts,
    oracle_mirror_counts,
    oracle_real_counts,
)
from .partitions import Partition, enumerate_partitions
from .qseries import (
    QSeries,
    bivariate_cover_series,
    connected_extract,
    eisenstein,
    linear_fit,
    q_bracket,
    quasimodular_basis,
    shifted_values,
)
from .series import (
    complex_series,
    genus_table,
    jack_series,
    n_real_h11,
    real_h22_series,
    real_series,
)
from .symfunc import SymFunc, convert, weighted_schur_sum

FORMATS = ("json", "csv", "latex")


def fmt_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def parse_partition(text: str) -> Partition:
    try:
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError
        return tuple(int(x) for x in data)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}") from exc


def latex_monomial(lam: Partition, symbol: str = "p") -> str:
    if not lam:
        return ""
    pieces = []
    for part in sorted(set(lam)):
        e = lam.count(part)
        pieces.append(f"{symbol}_{{{part}}}" + (f"^{{{e}}}" if e > 1 else ""))
    return " ".join(pieces)


def latex_term(coeff: Fraction, mono: str) -> str:
    num, den = coeff.numerator, coeff.denominator
    sign = "-" if num < 0 else ""
    num = abs(num)
    if not mono:
        return sign + (str(num) if den == 1 else f"\\frac{{{num}}}{{{den}}}")
    if den == 1:
        body = mono if num == 1 else f"{num} {mono}"
        return sign + body
    inner = mono if num == 1 else f"{num} {mono}"
    return sign + f"\\frac{{{inner}}}{{{den}}}"


def latex_polynomial(f: SymFunc) -> str:
    if not f.terms:
        return "0"
    # monomials smallest-first: the published layout for low degrees
    items = sorted(f.terms.items())
    out = "+".join(latex_term(c, latex_monomial(lam)) for lam, c in items)
    return out.replace("+-", "-")


def latex_qseries(series: QSeries) -> str:
    pieces = []
    for n, c in enumerate(series.coeffs):
        if c == 0:
            continue
        mono = "" if n == 0 else ("q" if n == 1 else f"q^{{{n}}}")
        pieces.append(latex_term(c, mono))
    return "+".join(pieces).replace("+-", "-") if pieces else "0"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _polynomial_output(args, command: str, f: SymFunc, extra: dict | None = None) -> str:
    if args.format == "latex":
        return latex_polynomial(f) + "\n"
    if args.format == "csv":
        rows = [
            [json.dumps(list(lam)), fmt_fraction(c)]
            for lam, c in sorted(f.terms.items(), reverse=True)
        ]
        return _csv_text(["partition", "coefficient"], rows)
    obj = {"command": command}
    obj.update(extra or {})
    obj["polynomial"] = f.to_json_dict()
    return _json_text(obj)


def _qseries_output(args, command: str, series: QSeries, extra: dict | None = None) -> str:
    if args.format == "latex":
        return latex_qseries(series) + "\n"
    if args.format == "csv":
        rows = [[str(n), fmt_fraction(c)] for n, c in enumerate(series.coeffs)]
        return _csv_text(["n", "coefficient"], rows)
    obj = {"command": command}
    obj.update(extra or {})
    obj["coefficients"] = [fmt_fraction(c) for c in series.coeffs]
    return _json_text(obj)


def _counts_json(counts) -> dict:
    return {json.dumps(list(lam)): fmt_fraction(c) for lam, c in sorted(counts.items(), reverse=True)}


# -- commands ------------------------------------------------------------------

def cmd_complex(args) -> int:
    layer = complex_series(args.n, args.connected).layer(args.n)
    extra = {"n": args.n, "connected": args.connected}
    _emit(_polynomial_output(args, "complex", layer, extra), args.out)
    return 0


def cmd_real(args) -> int:
    layer = real_series(args.n, args.connected).layer(args.n)
    extra = {"n": args.n, "cover_degree": 2 * args.n, "connected": args.connected}
    _emit(_polynomial_output(args, "real", layer, extra), args.out)
    return 0


def cmd_jack(args) -> int:
    basis = args.basis
    if args.partition is not None:
        jp = jack(args.partition, args.alpha)
        f = jp.expansion_m if basis == "m" else jp.expansion_p
        obj = {
            "command": "jack",
            "alpha": fmt_fraction(args.alpha),
            "index": list(args.partition),
            "polynomial": f.to_json_dict(),
        }
        _emit(_json_text(obj), args.out)
        return 0
    if args.n is None:
        print("error: jack needs --partition or --n", file=sys.stderr)
        return 2
    entries = []
    for lam in enumerate_partitions(args.n):
        jp = jack(lam, args.alpha)
        f = jp.expansion_m if basis == "m" else jp.expansion_p
        entries.append({"index": list(lam), "polynomial": f.to_json_dict()})
    obj = {"command": "jack", "alpha": fmt_fraction(args.alpha), "n": args.n, "family": entries}
    _emit(_json_text(obj), args.out)
    return 0


def cmd_tau(args) -> int:
    f = weighted_schur_sum(args.n, args.c)
    extra = {"n": args.n, "c": args.c}
    _emit(_polynomial_output(args, "tau", f, extra), args.out)
    return 0


def cmd_genus_table(args) -> int:
    rows = []
    deadline = getattr(args, "_deadline", None)
    for n in range(1, args.max_n + 1):
        if deadline is not None and time.monotonic() > deadline:
            print(f"error: --max-seconds budget exceeded at n={n}", file=sys.stderr)
            return 1
        for g, value in sorted(genus_table(n).items()):
            rows.append((n, g, value))
    if args.format == "csv":
        text = _csv_text(["n", "genus", "count"], [[str(n), str(g), fmt_fraction(v)] for n, g, v in rows])
    elif args.format == "latex":
        lines = [f"{n} & {g} & {fmt_fraction(v)} \\\\" for n, g, v in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = _json_text(
            {
                "command": "genus-table",
                "max_n": args.max_n,
                "entries": [{"n": n, "genus": g, "count": fmt_fraction(v)} for n, g, v in rows],
            }
        )
    _emit(text, args.out)
    return 0


def cmd_h11(args) -> int:
    _emit(f"{n_real_h11(args.n)}\n", args.out)
    return 0


def cmd_h22(args) -> int:
    series = real_h22_series(args.max_q)
    _emit(_qseries_output(args, "h22", series, {"max_q": args.max_q}), args.out)
    return 0


def cmd_qbracket(args) -> int:
    name = args.f.upper()
    if len(name) < 2 or name[0] not in "PR" or not name[1:].isdigit():
        print(f"error: unknown shifted function {args.f!r} (use P<k> or R<k>)", file=sys.stderr)
        return 2
    ell = int(name[1:])
    if ell < 1:
        print("error: exponent must be >= 1", file=sys.stderr)
        return 2
    variant = "complex" if name[0] == "P" else "real"
    values = shifted_values(ell, variant, args.max_q)
    series = q_bracket(values, args.max_q)
    _emit(_qseries_output(args, "qbracket", series, {"f": name, "max_q": args.max_q}), args.out)
    return 0


def cmd_fcover(args) -> int:
    variant = args.variant
    j = 2 * args.genus - 2 if variant == "complex" else args.genus - 1
    source = bivariate_cover_series(variant, args.max_q, jmax=max(j, 1))
    connected = connected_extract(source)
    coeffs = [connected.get((args.genus, d), Fraction(0)) for d in range(args.max_q + 1)]
    series = QSeries(tuple(coeffs))
    extra = {"variant": variant, "genus": args.genus, "max_q": args.max_q}
    _emit(_qseries_output(args, "fcover", series, extra), args.out)
    return 0


_FIT_TARGETS = ("h22", "h11", "t2complex", "t2real")


def _fit_target(name: str, N: int) -> QSeries:
    if name == "h22":
        return real_h22_series(N)
    if name == "h11":
        e2, e3 = eisenstein(2, N), eisenstein(3, N)
        return (e3 - e2).scale(Fraction(1, 2))
    variant = "complex" if name == "t2complex" else "real"
    j = 2 if variant == "complex" else 1
    connected = connected_extract(bivariate_cover_series(variant, N, jmax=j))
    return QSeries(tuple(connected.get((2, d), Fraction(0)) for d in range(N + 1)))


def _fit_basis(tokens: list[str], N: int) -> list[tuple[str, QSeries]]:
    out = []
    for token in tokens:
        if token == "qm6":
            out.extend(quasimodular_basis(N))
        elif token == "E2sq":
            e2 = eisenstein(2, N)
            out.append(("E2sq", e2 * e2))
        elif len(token) == 2 and token[0] == "E" and token[1].isdigit():
            out.append((token, eisenstein(int(token[1]), N)))
        else:
            raise ValueError(f"unknown basis token {token!r}")
    return out


def cmd_fit(args) -> int:
    N = args.max_q
    if args.n_train + args.n_test > N + 1:
        print("error: train+test window exceeds --max-q", file=sys.stderr)
        return 2
    target = _fit_target(args.target, N)
    try:
        basis = _fit_basis(args.basis.split(","), N)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    solution = linear_fit(target, [s for _, s in basis], args.n_train, args.n_test)
    obj = {
        "command": "fit",
        "target": args.target,
        "basis": [name for name, _ in basis],
        "n_train": args.n_train,
        "n_test": args.n_test,
        "coefficients": None
        if solution is None
        else {name: fmt_fraction(c) for (name, _), c in zip(basis, solution)},
    }
    _emit(_json_text(obj), args.out)
    return 0


def cmd_oracle(args) -> int:
    n, connected = args.n, args.connected
    if args.flavor == "complex":
        counts = oracle_complex_counts(n, connected)
        series_layer = complex_series(n, connected).layer(n)
    elif args.flavor == "real":
        counts = oracle_real_counts(n, connected)
        series_layer = real_series(n, connected).layer(n)
    else:
        counts = oracle_mirror_counts(n, connected)
        series_layer = real_series(n, connected).layer(n)  # mirror counts match real
    series_counts = dict(series_layer.terms)
    match = counts == series_counts
    obj = {
        "command": "oracle",
        "flavor": args.flavor,
        "n": n,
        "connected": connected,
        "counts": _counts_json(counts),
        "series": _counts_json(series_counts),
        "match": match,
    }
    _emit(_json_text(obj), args.out)
    return 0 if match else 1


def cmd_chartable(args) -> int:
    parts = enumerate_partitions(args.n)
    header = ["lambda\\mu"] + [json.dumps(list(mu)) for mu in parts]
    rows = []
    for lam in parts:
        rows.append([json.dumps(list(lam))] + [str(character(lam, mu)) for mu in parts])
    if args.format == "json":
        obj = {
            "command": "chartable",
            "n": args.n,
            "classes": [list(mu) for mu in parts],
            "rows": {json.dumps(list(lam)): [int(v) for v in row[1:]] for lam, row in zip(parts, rows)},
        }
        text = _json_text(obj)
    else:
        text = _csv_text(header, rows)
    _emit(text, args.out)
    return 0


# -- dispatcher ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # global flags live on a parent so they parse before or after the
    # subcommand; SUPPRESS keeps subparser defaults from clobbering values
    # already seen by the root parser
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="output format (default json)")
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS, help="write output to a file")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker threads (accepted; computation is single-threaded)")
    common.add_argument("--max-seconds", type=float, default=argparse.SUPPRESS, help="soft time budget; exceeding it fails the run")

    parser = argparse.ArgumentParser(
        prog="origami",
        parents=[common],
        description="Exact enumeration of complex and real origami (one-branch-point torus covers).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def sub_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    p = sub_parser("complex", "complex origami polynomial for one degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_complex)

    p = sub_parser("real", "real origami polynomial (cover degree 2n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_real)

    p = sub_parser("jack", "Jack polynomial expansion as JSON")
    p.add_argument("--alpha", type=parse_fraction, required=True, help='rational, e.g. "2" or "1/2"')
    p.add_argument("--partition", type=parse_partition, default=None, help="JSON array, e.g. [2,1]")
    p.add_argument("--n", type=int, default=None, help="dump the whole degree-n family")
    p.add_argument("--basis", choices=("m", "p"), default="p")
    p.set_defaults(func=cmd_jack)

    p = sub_parser("tau", "hook-power weighted Schur sum in the p basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, default=1, help="hook-product exponent")
    p.set_defaults(func=cmd_tau)

    p = sub_parser("genus-table", "connected complex counts by degree and genus")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_genus_table)

    p = sub_parser("h11", "genus-2 real origami count at cover degree 2n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_h11)

    p = sub_parser("h22", "genus-3 two-double-zero real origami q-series")
    p.add_argument("--max-q", type=int, required=True)
    p.set_defaults(func=cmd_h22)

    p = sub_parser("qbracket", "q-bracket of a shifted power sum (P<k> or R<k>)")
    p.add_argument("--f", required=True)
    p.add_argument("--max-q", type=int, required=True)
    p.set_defaults(func=cmd_qbracket)

    p = sub_parser("fcover", "connected simply ramified torus cover series")
    p.add_argument("--variant", choices=("complex", "real"), required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--max-q", type=int, required=True)
    p.set_defaults(func=cmd_fcover)

    p = sub_parser("fit", "exact linear fit of a target series against a basis")
    p.add_argument("--target", choices=_FIT_TARGETS, required=True)
    p.add_argument("--basis", required=True, help="comma list: E2,E3,E4,E5,E6,E2sq,qm6")
    p.add_argument("--n-train", type=int, default=10)
    p.add_argument("--n-test", type=int, default=10)
    p.add_argument("--max-q", type=int, default=25)
    p.set_defaults(func=cmd_fit)

    p = sub_parser("oracle", "exhaustive counts diffed against the series pipeline")
    p.add_argument("--flavor", choices=("real", "complex", "mirror"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub_parser("chartable", "symmetric group character table")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_chartable)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "json")
    args.out = getattr(args, "out", None)
    args.threads = getattr(args, "threads", 1)
    args.max_seconds = getattr(args, "max_seconds", None)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    start = time.monotonic()
    if args.max_seconds is not None:
        args._deadline = start + args.max_seconds

    cache_dir = os.environ.get("ORIGAMI_CACHE_DIR")
    if cache_dir:
        cache_store.load(cache_dir)

    try:
        code = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if cache_dir and code == 0:
        cache_store.save(cache_dir)
    if args.max_seconds is not None and time.monotonic() - start > args.max_seconds and code == 0:
        print("warning: soft time budget exceeded", file=sys.stderr)
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
