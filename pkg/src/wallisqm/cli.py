"""Command-line front end emitting reproduction tables as CSV or JSON.

Subcommands:

    pi           Wallis partial products 2·P_n against π with the
                 π/(4n+2) convergence envelope.
    sum          Gamma-ratio series partial sums: telescoped formula vs
                 direct summation vs the closed-form limit.
    variational  Variational energy levels against the exact spectrum.
    bounds       Double-inequality sandwiches (Kazarinoff, quartic-root,
                 Wendel) with per-row satisfied flags.
    integrals    Closed forms vs the quadrature engine, with residuals.
    verify       Runs every invariant suite; one pass/fail line each.

Global flags (before the subcommand): ``--format {csv,json}``,
``--tol <real>`` (quadrature tolerance for ``integrals``), ``--out <path>``.
Numeric cells are emitted with 17 significant digits so parsing them back
reproduces the doubles bit-for-bit; identical invocations produce
byte-identical output.

Exit status: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from . import verify as verify_mod
from . import wallis_series as ws
from .errors import ConvergenceError, DomainError
from .gamma_kit import kazarinoff_bounds, quartic_root_bounds, wendel_deviation
from .integral_kit import (G_rational, RationalMomentQuery, gaussian_moment,
                           lorentz_coulomb_integral, lorentz_norm_integral,
                           quad_semiinfinite, rational_moment)
from .variational_engine import Family, Method, Potential, variational_energy

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class ReportRow:
    """One table row: a value against its reference, plus an optional bound.

    ``abs_error`` is recomputed from value and reference at construction,
    i.e. at emission time.
    """

    label: str
    n_or_l: int
    value: float
    reference: float
    abs_error: float
    bound: float | None = None


def make_report_row(label: str, n_or_l: int, value: float, reference: float,
                    bound: float | None = None) -> ReportRow:
    return ReportRow(label=label, n_or_l=n_or_l, value=value, reference=reference,
                     abs_error=abs(value - reference), bound=bound)


@dataclass(frozen=True)
class BoundsRow:
    """One sandwich row; fields are None when the point was out of domain."""

    label: str
    x: float
    lower: float | None
    value: float | None
    upper: float | None
    satisfied: bool


_REPORT_FIELDS = ("label", "n_or_l", "value", "reference", "abs_error", "bound")
_BOUNDS_FIELDS = ("label", "x", "lower", "value", "upper", "satisfied")


def _fmt_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _emit_table(rows, fields, fmt: str) -> str:
    if fmt == "json":
        payload = [
            {f: getattr(r, f) for f in fields}
            for r in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for r in rows:
        writer.writerow([_fmt_cell(getattr(r, f)) for f in fields])
    return buf.getvalue()


def _write(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_int_spec(text: str) -> list[int]:
    """'5' | '1,10,100' | 'start:stop:step' (stop inclusive when hit)."""
    def one(tok: str) -> int:
        v = float(tok)
        if v != int(v):
            raise argparse.ArgumentTypeError(f"expected an integer, got {tok!r}")
        return int(v)

    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise argparse.ArgumentTypeError(f"bad range {text!r}, use start:stop[:step]")
        start, stop = one(parts[0]), one(parts[1])
        step = one(parts[2]) if len(parts) == 3 else 1
        if step <= 0 or stop < start:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        return list(range(start, stop + 1, step))
    return [one(tok) for tok in text.split(",") if tok]


def _parse_float_list(text: str) -> list[float]:
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"bad range {text!r}, use start:stop:step")
        start, stop, step = (float(p) for p in parts)
        if step <= 0 or stop < start:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        return [start + i * step for i in range(count)]
    return [float(tok) for tok in text.split(",") if tok]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_pi(args) -> int:
    rows = []
    failures = 0
    for n in args.n:
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        value = 2.0 * ws.wallis_partial_product(n)
        bound = math.pi / (4.0 * n + 2.0)
        row = make_report_row("wallis-pi", n, value, math.pi, bound)
        if not 0.0 < row.abs_error < bound:
            failures += 1
        rows.append(row)
    _write(_emit_table(rows, _REPORT_FIELDS, args.format), args.out)
    return EXIT_VERIFICATION_FAILURE if failures else EXIT_OK


def _cmd_sum(args) -> int:
    rows = []
    failures = 0
    if args.mode == "simple":
        for n in args.n:
            part = ws.sum_a_recurrence(n)
            direct = ws.sum_a_direct(n)
            limit = part.closed_form_limit
            rows.append(make_report_row("a-sum-recurrence", n, part.value, limit,
                                        part.tail_bound))
            rows.append(make_report_row("a-sum-direct", n, direct, limit,
                                        part.tail_bound))
            if abs(part.value - direct) > 1e-10 * abs(direct):
                failures += 1
    else:
        if args.m is None or args.k is None:
            raise DomainError("general mode requires --m and --k")
        params = ws.GeneralizedParams(args.m, args.k)
        for n in args.n:
            part = ws.sum_b_partial(params, n)
            direct = math.fsum(ws.b_seq(params, i) for i in range(1, n + 1))
            limit = part.closed_form_limit
            rows.append(make_report_row("b-sum-recurrence", n, part.value, limit,
                                        part.tail_bound))
            rows.append(make_report_row("b-sum-direct", n, direct, limit,
                                        part.tail_bound))
            if abs(part.value - direct) > 1e-10 * abs(direct):
                failures += 1
    _write(_emit_table(rows, _REPORT_FIELDS, args.format), args.out)
    return EXIT_VERIFICATION_FAILURE if failures else EXIT_OK


_FAMILIES = {"gaussian": Family.GAUSSIAN, "lorentz": Family.LORENTZ}
_POTENTIALS = {"coulomb": Potential.COULOMB, "oscillator": Potential.HARMONIC_OSCILLATOR}
_METHODS = {"closed": Method.CLOSED_FORM, "numeric": Method.NUMERIC}


def _cmd_variational(args) -> int:
    family = _FAMILIES[args.family]
    pot = _POTENTIALS[args.potential]
    method = _METHODS[args.method]
    ls = args.l_max if len(args.l_max) > 1 else list(range(args.l_min, args.l_max[0] + 1))
    if family is Family.LORENTZ and pot is Potential.HARMONIC_OSCILLATOR and min(ls) < 1:
        raise DomainError(
            "the Lorentz-oscillator combination diverges at l = 0; use --l-min 1")
    rows = []
    gaussian_coulomb = family is Family.GAUSSIAN and pot is Potential.COULOMB
    label = f"{args.family}-{args.potential}-{args.method}"
    for l in ls:
        est = variational_energy(family, pot, l, method)
        bound = None
        if gaussian_coulomb:
            # Kazarinoff envelope: 1 - ratio < 1/(4n+2), n = l+1, as an
            # absolute bound on |E_var - E_exact|
            bound = abs(est.exact_reference) / (4.0 * (l + 1.0) + 2.0)
        rows.append(make_report_row(label, l, est.value, est.exact_reference, bound))
    _write(_emit_table(rows, _REPORT_FIELDS, args.format), args.out)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    rows = []
    for x in args.grid:
        try:
            if args.kind == "kazarinoff":
                if x != int(x):
                    raise DomainError(f"kazarinoff grid points must be integers, got {x}")
                t = kazarinoff_bounds(int(x))
            elif args.kind == "quartic":
                t = quartic_root_bounds(x)
            else:
                dev = wendel_deviation(x, args.s)
                env = args.s * (1.0 - args.s) / x
                rows.append(BoundsRow("wendel", x, -env, dev, env,
                                      -env < dev < env))
                continue
            rows.append(BoundsRow(args.kind, x, t.lower, t.value, t.upper, t.satisfied))
        except DomainError:
            rows.append(BoundsRow(args.kind, x, None, None, None, False))
    _write(_emit_table(rows, _BOUNDS_FIELDS, args.format), args.out)
    violated = sum(1 for r in rows if not r.satisfied)
    return EXIT_VERIFICATION_FAILURE if violated else EXIT_OK


def _cmd_integrals(args) -> int:
    tol = max(args.tol, 1e-12)
    rows = []
    failures = 0

    def add(label: str, idx: int, closed: float, integrand) -> None:
        nonlocal failures
        res = quad_semiinfinite(integrand, tol)
        bound = max(1e-9, 10.0 * res.abs_error_estimate)
        row = make_report_row(label, idx, closed, res.value, bound)
        if row.abs_error > bound:
            failures += 1
        rows.append(row)

    for m in range(0, 13):
        add("gaussian-moment", m, gaussian_moment(m),
            lambda x, m=m: x ** m * math.exp(-x * x))
    for m, n in ((0.0, 1.0), (1.0, 2.0), (2.0, 2.0), (4.0, 4.0), (3.0, 5.0), (6.0, 5.0)):
        add("rational-moment", int(m), rational_moment(RationalMomentQuery(m, n)),
            lambda x, m=m, n=n: x ** m / (1.0 + x * x) ** n)
    for l in range(0, args.l_max + 1):
        add("rational-integral", l, G_rational(l),
            lambda x, l=l: (1.0 + x * x) ** -(l + 1.0))
        add("lorentz-norm", l, lorentz_norm_integral(l),
            lambda x, l=l: x ** (2 * l + 2) / (1.0 + x * x) ** (2 * l + 2))
        add("lorentz-coulomb", l, lorentz_coulomb_integral(l),
            lambda x, l=l: x ** (2 * l + 1) / (1.0 + x * x) ** (2 * l + 2))
    _write(_emit_table(rows, _REPORT_FIELDS, args.format), args.out)
    return EXIT_VERIFICATION_FAILURE if failures else EXIT_OK


def _cmd_verify(args) -> int:
    results = verify_mod.run(args.tol_profile)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.name}: {r.detail}")
    n_fail = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - n_fail}/{len(results)} invariant suites passed"
                 f" [{args.tol_profile}]")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_VERIFICATION_FAILURE if n_fail else EXIT_OK


# ---------------------------------------------------------------------------
# parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wallisqm",
        description="Reproduction tables for Wallis-product and variational-level numerics.",
    )
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="table output format (default csv)")
    parser.add_argument("--tol", type=float, default=1e-10,
                        help="quadrature tolerance for the integrals command")
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="write output to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pi", help="Wallis product convergence to π")
    p.add_argument("--n", type=_parse_int_spec, default=[1, 10, 100, 1000, 10000],
                   help="product lengths: value, comma list, or start:stop:step")
    p.set_defaults(handler=_cmd_pi)

    p = sub.add_parser("sum", help="gamma-ratio series partial sums")
    p.add_argument("--mode", choices=("simple", "general"), default="simple")
    p.add_argument("--m", type=float, default=None, help="first shift (general mode)")
    p.add_argument("--k", type=float, default=None, help="second shift (general mode)")
    p.add_argument("--n", type=_parse_int_spec, default=[1, 10, 100, 1000, 10000],
                   help="partial-sum lengths: value, comma list, or start:stop:step")
    p.set_defaults(handler=_cmd_sum)

    p = sub.add_parser("variational", help="variational energy levels")
    p.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    p.add_argument("--potential", choices=sorted(_POTENTIALS), required=True)
    p.add_argument("--l-max", type=_parse_int_spec, default=[10],
                   help="single value (range from --l-min), comma list, or start:stop:step")
    p.add_argument("--l-min", type=int, default=0)
    p.add_argument("--method", choices=sorted(_METHODS), default="closed")
    p.set_defaults(handler=_cmd_variational)

    p = sub.add_parser("bounds", help="gamma-ratio double inequalities")
    p.add_argument("--kind", choices=("kazarinoff", "quartic", "wendel"), required=True)
    p.add_argument("--grid", type=_parse_float_list,
                   default=[1.0, 10.0, 100.0, 1000.0, 1e6],
                   help="evaluation points: value, comma list, or start:stop:step")
    p.add_argument("--s", type=float, default=0.5,
                   help="shift for the wendel kind, in (0, 1)")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("integrals", help="closed forms vs quadrature residuals")
    p.add_argument("--l-max", type=int, default=15)
    p.set_defaults(handler=_cmd_integrals)

    p = sub.add_parser("verify", help="run every invariant suite")
    p.add_argument("--tol-profile", choices=("strict", "relaxed"), default="strict")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bounds" and args.kind == "wendel" and not 0.0 < args.s < 1.0:
        parser.error(f"--s must lie strictly inside (0, 1), got {args.s}")
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"wallisqm: domain error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"wallisqm: convergence error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILURE


if __name__ == "__main__":
    sys.exit(main())
