"""Command-line front end.

Every computation is exposed as a subcommand with explicit flags; all
rational output is printed as reduced fractions, never decimals.  The
machine format is a `frobdisc/1` header, `key=value` metadata lines,
and a single result block delimited by `---` lines.  Exit codes:
0 success, 2 input error, 3 uncertified / cap-exceeded result.
"""

from __future__ import annotations

import argparse
import shlex
import sys
from fractions import Fraction

from .cartier import CartierMap, parse_cartier
from .errors import (
    DegreeCapError,
    FrobdiscError,
    IterationCapError,
    UncertifiedResultError,
)
from .ideals import (
    Ideal,
    fedder_fpure_hypersurface,
    parse_ideal,
    splitting_prime,
    strongly_fregular_search,
)
from .logdisc import (
    logdisc_monomial,
    logdisc_oracle,
    logdisc_trivial,
    logdisc_twisted,
    mld_origin,
)
from .poly import PolyContext, parse_fraction_str, parse_poly
from .thresholds import (
    asymptotic_multiplier_ideal,
    fpt_approx,
    jumping_numbers,
    lct_graded,
    lct_monomial,
    multiplier_ideal_monomial,
    nu,
)
from .valuations import MonomialValuation, parse_graded_seq, parse_valuation

SCAN_ROW_CAP = 10000

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNCERTIFIED = 3


def parse_ring(spec: str) -> PolyContext:
    """Parse `p=7,vars=x,y`."""
    parts = [s.strip() for s in spec.split(",")]
    if not parts or not parts[0].startswith("p="):
        raise ValueError(f"ring spec must start with p=<prime>: '{spec}'")
    p = int(parts[0][2:])
    names = []
    seen_vars = False
    for part in parts[1:]:
        if part.startswith("vars="):
            seen_vars = True
            names.append(part[5:])
        elif seen_vars:
            names.append(part)
        else:
            raise ValueError(f"unexpected ring component '{part}'")
    if not names:
        raise ValueError("ring spec needs vars=<name>[,<name>...]")
    return PolyContext(p, tuple(names))


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    return str(value)


# -- subcommand handlers -------------------------------------------------
# each returns an ordered dict of result keys


def _cmd_apply(ctx, args):
    psi = parse_cartier(args.map, ctx)
    f = parse_poly(args.poly, ctx)
    return {"value": psi.apply(f)}


def _cmd_logdisc(ctx, args):
    psi = parse_cartier(args.map, ctx)
    v = parse_valuation(args.val, ctx)
    if args.seq:
        seq = parse_graded_seq(args.seq, ctx)
        t = parse_fraction_str(args.t) if args.t else None
        report = logdisc_twisted(psi, seq, v, args.bound, t)
    else:
        report = logdisc_monomial(psi, v)
    return {"value": report.value, "method": report.method, "exact": report.exact}


def _cmd_oracle(ctx, args):
    psi = parse_cartier(args.map, ctx)
    v = parse_valuation(args.val, ctx)
    report = logdisc_oracle(psi, v, args.degbound, args.nmax)
    result = {"value": report.value, "method": report.method}
    if report.witness is not None:
        u, n = report.witness
        result["witness_f"] = ctx.monomial(u)
        result["witness_n"] = n
    return result


def _cmd_fedder(ctx, args):
    return {"fpure": fedder_fpure_hypersurface(parse_poly(args.poly, ctx))}


def _cmd_fpure(ctx, args):
    psi = parse_cartier(args.map, ctx)
    return {"sharply_fpure": psi.is_surjective_at_origin()}


def _cmd_splitprime(ctx, args):
    psi = parse_cartier(args.map, ctx)
    return {"ideal": splitting_prime(psi)}


def _cmd_fregular(ctx, args):
    psi = parse_cartier(args.map, ctx)
    c = parse_poly(args.elem, ctx)
    e = strongly_fregular_search(psi, c, args.emax)
    if e is None:
        return {"result": "inconclusive"}
    return {"result": "witness", "witness_e": e}


def _cmd_trichotomy(ctx, args):
    psi = parse_cartier(args.map, ctx)
    return {"trivial_value": logdisc_trivial(psi).value}


def _cmd_nu(ctx, args):
    return {"nu": nu(parse_poly(args.poly, ctx), args.e)}


def _cmd_fpt(ctx, args):
    f = parse_poly(args.poly, ctx)
    result = {}
    for e, (n_e, lo, hi) in enumerate(fpt_approx(f, args.emax), start=1):
        result[f"nu{e}"] = n_e
        result[f"interval{e}"] = f"[{lo}, {hi}]"
    return result


def _default_map(ctx, text):
    return parse_cartier(text, ctx) if text else CartierMap.canonical(ctx)


def _default_q(ctx, text):
    return parse_ideal(text, ctx) if text else Ideal.unit(ctx)


def _cmd_lct(ctx, args):
    psi = _default_map(ctx, args.map)
    q_ideal = _default_q(ctx, args.q)
    if args.seq:
        report = lct_graded(parse_graded_seq(args.seq, ctx), q_ideal, psi, args.M)
    else:
        report = lct_monomial(parse_ideal(args.ideal, ctx), q_ideal, psi)
    result = {"value": report.value}
    if report.computing_valuation is not None:
        result["alpha"] = report.computing_valuation.alpha
    result["certificate"] = "-".join(str(x) for x in report.certificate)
    return result


def _cmd_mult_ideal(ctx, args):
    a = parse_ideal(args.ideal, ctx)
    report = multiplier_ideal_monomial(a, parse_fraction_str(args.t), args.degcap)
    return {"ideal": report.ideal, "t": report.t}


def _cmd_async_mult_ideal(ctx, args):
    seq = parse_graded_seq(args.seq, ctx)
    report = asymptotic_multiplier_ideal(seq, parse_fraction_str(args.t), args.M, args.degcap)
    return {
        "ideal": report.ideal,
        "t": report.t,
        "stabilized_at": "-" if report.stabilized_at is None else report.stabilized_at,
    }


def _cmd_jumping(ctx, args):
    a = parse_ideal(args.ideal, ctx)
    jumps = jumping_numbers(a, parse_fraction_str(args.bound))
    return {"jumps": tuple(jumps)}


def _cmd_mld(ctx, args):
    psi = _default_map(ctx, args.map)
    a = parse_ideal(args.ideal, ctx)
    return {"value": mld_origin(psi, a, parse_fraction_str(args.t))}


def _simplex_grid(n, density):
    """All alpha = k/density with k nonnegative integers summing to density."""

    def walk(prefix, remaining):
        if len(prefix) == n - 1:
            yield tuple(prefix + [remaining])
            return
        for k in range(remaining + 1):
            yield from walk(prefix + [k], remaining - k)

    for k in walk([], density):
        yield tuple(Fraction(e, density) for e in k)


def _cmd_scan(ctx, args):
    if ctx.n > 3:
        raise ValueError("scan supports at most 3 variables")
    psi = _default_map(ctx, args.map)
    a = parse_ideal(args.ideal, ctx)
    if not a.is_monomial or a.is_zero():
        raise ValueError("scan requires a nonzero monomial ideal")
    rows = []
    for alpha in _simplex_grid(ctx.n, args.density):
        if len(rows) >= SCAN_ROW_CAP:
            raise ValueError(f"density {args.density} exceeds the {SCAN_ROW_CAP}-row cap")
        v = MonomialValuation(ctx, alpha)
        A = logdisc_monomial(psi, v).value
        va = v.value_ideal(a)
        if va.is_finite and va.finite() > 0:
            integrand = A / va
        else:
            integrand = None
        rows.append((alpha, A, integrand))
    finite = [r[2] for r in rows if r[2] is not None and r[2].is_finite]
    minimum = min(finite) if finite else None
    result = {"density": args.density, "rows": len(rows)}
    for i, (alpha, A, integrand) in enumerate(rows):
        flag = " min" if minimum is not None and integrand == minimum else ""
        itext = "inf" if integrand is None else str(integrand)
        result[f"row{i}"] = f"{_fmt(alpha)} A={A} integrand={itext}{flag}"
    if minimum is not None:
        result["minimum"] = minimum
    return result


HANDLERS = {
    "apply": _cmd_apply,
    "logdisc": _cmd_logdisc,
    "oracle": _cmd_oracle,
    "fedder": _cmd_fedder,
    "fpure": _cmd_fpure,
    "splitprime": _cmd_splitprime,
    "fregular": _cmd_fregular,
    "trichotomy": _cmd_trichotomy,
    "nu": _cmd_nu,
    "fpt": _cmd_fpt,
    "lct": _cmd_lct,
    "mult-ideal": _cmd_mult_ideal,
    "async-mult-ideal": _cmd_async_mult_ideal,
    "jumping": _cmd_jumping,
    "mld": _cmd_mld,
    "scan": _cmd_scan,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobdisc",
        description="Exact F-singularity invariants on F_p[x_1,...,x_n].",
    )
    parser.add_argument("--jobs", help="batch file: one job per line, flag syntax")
    sub = parser.add_subparsers(dest="command")

    def cmd(name, **flags):
        s = sub.add_parser(name)
        s.add_argument("--ring", required=True, help="p=<prime>,vars=<v1>,<v2>,...")
        s.add_argument("--format", choices=("human", "machine"), default="human")
        for flag, options in flags.items():
            s.add_argument(f"--{flag}", **options)
        return s

    cmd("apply", map={"required": True}, poly={"required": True})
    cmd(
        "logdisc",
        map={"required": True},
        val={"required": True},
        seq={"default": None},
        bound={"type": int, "default": 8},
        t={"default": None},
    )
    cmd(
        "oracle",
        map={"required": True},
        val={"required": True},
        degbound={"type": int, "required": True},
        nmax={"type": int, "default": 1},
    )
    cmd("fedder", poly={"required": True})
    cmd("fpure", map={"required": True})
    cmd("splitprime", map={"required": True})
    cmd(
        "fregular",
        map={"required": True},
        elem={"required": True},
        emax={"type": int, "default": 6},
    )
    cmd("trichotomy", map={"required": True})
    cmd("nu", poly={"required": True}, e={"type": int, "default": 1})
    cmd("fpt", poly={"required": True}, emax={"type": int, "default": 2})
    cmd(
        "lct",
        ideal={"default": None},
        seq={"default": None},
        q={"default": None},
        map={"default": None},
        M={"type": int, "default": 4},
    )
    cmd(
        "mult-ideal",
        ideal={"required": True},
        t={"required": True},
        degcap={"type": int, "default": 16},
    )
    cmd(
        "async-mult-ideal",
        seq={"required": True},
        t={"required": True},
        M={"type": int, "default": 4},
        degcap={"type": int, "default": 16},
    )
    cmd("jumping", ideal={"required": True}, bound={"required": True})
    cmd("mld", map={"default": None}, ideal={"required": True}, t={"required": True})
    cmd(
        "scan",
        map={"default": None},
        ideal={"required": True},
        density={"type": int, "default": 4},
    )
    return parser


def _emit(args, result, out):
    if args.format == "machine":
        print("frobdisc/1", file=out)
        print(f"command={args.command}", file=out)
        print(f"ring={args.ring}", file=out)
        print("---", file=out)
        for key, value in result.items():
            print(f"{key}={_fmt(value)}", file=out)
        print("---", file=out)
    else:
        for key, value in result.items():
            print(f"{key}: {_fmt(value)}", file=out)


def parse_machine_output(text: str):
    """Re-parse machine output into (meta, result) dicts of strings."""
    lines = text.splitlines()
    if not lines or lines[0] != "frobdisc/1":
        raise ValueError("missing frobdisc/1 header")
    meta, result = {}, {}
    target = meta
    for line in lines[1:]:
        if line == "---":
            target = result if target is meta else None
            continue
        if target is None or "=" not in line:
            raise ValueError(f"unexpected machine-output line: {line!r}")
        key, _, value = line.partition("=")
        target[key] = value
    return meta, result


def run_job(argv, out) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return EXIT_INPUT
    if args.command is None:
        if args.jobs:
            return run_batch(args.jobs, out)
        parser.print_usage(out)
        return EXIT_INPUT
    if args.command == "lct" and not (args.ideal or args.seq):
        print("error: lct needs --ideal or --seq", file=out)
        return EXIT_INPUT
    try:
        ctx = parse_ring(args.ring)
        result = HANDLERS[args.command](ctx, args)
    except (UncertifiedResultError, IterationCapError, DegreeCapError) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_UNCERTIFIED
    except (FrobdiscError, ValueError, KeyError, AssertionError) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_INPUT
    _emit(args, result, out)
    return EXIT_OK


def run_batch(path, out) -> int:
    worst = EXIT_OK
    try:
        with open(path) as handle:
            lines = handle.readlines()
    except OSError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_INPUT
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        code = run_job(shlex.split(line), out)
        worst = max(worst, code)
    return worst


def main(argv=None):
    return run_job(sys.argv[1:] if argv is None else argv, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
