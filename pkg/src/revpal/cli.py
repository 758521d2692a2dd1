"""Command-line front end.  One subcommand per library operation; output is
JSON, CSV, or human-readable text with 12-significant-digit floats.

Exit codes: 0 success, 1 computational failure (e.g. certification failed),
2 usage error.
"""

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import densities, experiments, revgoldbach, sieve, verifier
from .digits import base_context, reverse
from .experiments import CountReport, reports_to_csv, reports_to_json
from .verifier import Certificate

CACHE_ENV = "REVPAL_SIEVE_CACHE"


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _get_table(limit: int) -> sieve.FactorTable:
    cache_dir = os.environ.get(CACHE_ENV)
    if cache_dir:
        path = Path(cache_dir) / f"sieve_{limit}.bin"
        if path.exists():
            return sieve.load_cache(path)
        table = sieve.build(limit)
        path.parent.mkdir(parents=True, exist_ok=True)
        sieve.save_cache(table, path)
        return table
    return sieve.build(limit)


def emit_report(records: list, fmt: str, path: str | None, out=sys.stdout):
    """Serialize CountReports or Certificates with a fixed field order."""
    if not records:
        raise UsageError("nothing to emit: empty record list")
    if isinstance(records[0], CountReport):
        if fmt == "csv":
            text = reports_to_csv(records)
        elif fmt == "json":
            text = reports_to_json(records) + "\n"
        else:
            lines = []
            for r in records:
                d = r.to_dict()
                lines.append(
                    f"{d['label']}: b={d['b']} k={d['k']} N_or_x={d['N_or_x']} d={d['d']} "
                    f"empirical={d['empirical']} main_term={_fmt(d['main_term'])} "
                    f"ratio={'-' if d['ratio'] is None else _fmt(d['ratio'])}"
                )
            text = "\n".join(lines) + "\n"
    elif isinstance(records[0], Certificate):
        if fmt == "csv":
            rows = ["b,K,max_bound,threshold,slack,passed,cb_estimate,alpha_estimate,worst_segment"]
            for c in records:
                rows.append(
                    f"{c.b},{c.K},{_fmt(c.max_bound)},{_fmt(c.threshold)},{_fmt(c.slack)},"
                    f"{c.passed},{_fmt(c.cb_estimate)},{_fmt(c.alpha_estimate)},{c.worst_segment}"
                )
            text = "\n".join(rows) + "\n"
        elif fmt == "json":
            text = "\n".join(c.to_json() for c in records) + "\n"
        else:
            text = "\n".join(
                f"b={c.b} K={c.K} max_bound={_fmt(c.max_bound)} "
                f"threshold={_fmt(c.threshold)} passed={c.passed} "
                f"alpha={_fmt(c.alpha_estimate)}"
                for c in records
            ) + "\n"
    else:
        raise UsageError(f"cannot emit records of type {type(records[0]).__name__}")
    if path:
        Path(path).write_text(text)
    else:
        out.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="revpal", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, base=True, limit=False):
        if base:
            sp.add_argument("--base", type=int, default=10)
        if limit:
            sp.add_argument("--limit", type=int, required=True)
        sp.add_argument("--format", choices=["json", "csv", "human"], default="json")
        sp.add_argument("--output", default=None)

    sp = sub.add_parser("reverse", help="digital reverse of n")
    sp.add_argument("--base", type=int, default=10)
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("palindromes", help="enumerate P_b(x) or P*_b(x)")
    common(sp)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--star", action="store_true")

    sp = sub.add_parser("count-rev-kfree", help="r_{b,k}(N) with main term")
    common(sp)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--N", type=int, required=True)

    sp = sub.add_parser("rev-pi-star", help="primes with d | reverse, with main term")
    common(sp)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)

    sp = sub.add_parser("count-palin-kfree", help="k-free members of P*_b(x)")
    common(sp)
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--x", type=int, required=True)

    sp = sub.add_parser("palin-div", help="palindromes <= x divisible by d")
    common(sp)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--star", action="store_true")

    sp = sub.add_parser("almost-prime", help="palindromes with few prime factors")
    common(sp)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--omega-max", type=int, required=True)
    sp.add_argument("--kfree-k", type=int, default=None)
    sp.add_argument("--rough-exponent", type=float, default=None)

    sp = sub.add_parser("sqrt-law", help="palindrome counts normalized by sqrt(x)")
    common(sp)
    sp.add_argument("--x", type=int, nargs="+", required=True)
    sp.add_argument("--star", action="store_true")

    sp = sub.add_parser("certify", help="certify one base")
    common(sp, base=False)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--K", type=int, required=True)
    sp.add_argument("--slack", type=float, default=verifier.DEFAULT_SLACK)

    sp = sub.add_parser("certify-range", help="certify every base in [b0, b1]")
    common(sp, base=False)
    sp.add_argument("--b0", type=int, required=True)
    sp.add_argument("--b1", type=int, required=True)
    sp.add_argument("--K", type=int, required=True)
    sp.add_argument("--slack", type=float, default=verifier.DEFAULT_SLACK)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--timing", action="store_true",
                    help="append wall-clock seconds to stderr")

    sp = sub.add_parser("find-min-k", help="smallest passing K for one base")
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--slack", type=float, default=verifier.DEFAULT_SLACK)

    sp = sub.add_parser("f-eval", help="evaluate the capped reciprocal-sine sum")
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--theta", type=float, required=True)

    sp = sub.add_parser("hcabdlog", help="scan for unrepresentable targets")
    common(sp, limit=True)

    sp = sub.add_parser("estermann", help="prime + squarefree representation count")
    common(sp)
    sp.add_argument("--M", type=int, required=True)

    sp = sub.add_parser("main-term", help="theoretical main terms")
    sp.add_argument("--base", type=int, default=10)
    sp.add_argument("--which", choices=["rev-kfree", "rev-pi", "kfree-density", "zeta"],
                    required=True)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--d", type=int, default=None)
    return p


def dispatch(args: argparse.Namespace, out=sys.stdout) -> int:
    cmd = args.cmd
    if cmd == "reverse":
        ctx = base_context(args.base)
        try:
            out.write(f"{reverse(args.n, ctx)}\n")
        except ValueError as e:
            raise UsageError(str(e))
        return 0

    if cmd == "palindromes":
        ctx = base_context(args.base)
        pal = experiments.enumerate_palindromes(ctx, args.x, star=args.star)
        text = json.dumps(pal) + "\n" if args.format != "human" else " ".join(map(str, pal)) + "\n"
        if args.output:
            Path(args.output).write_text(text)
        else:
            out.write(text)
        return 0

    if cmd == "count-rev-kfree":
        ctx = base_context(args.base)
        table = _get_table(ctx.b ** args.N)
        rep = experiments.count_rev_kfree_primes(ctx, args.k, args.N, table)
        emit_report([rep], args.format, args.output, out)
        return 0

    if cmd == "rev-pi-star":
        ctx = base_context(args.base)
        table = _get_table(ctx.b ** args.N)
        rep = experiments.rev_pi_star(ctx, args.N, args.d, table)
        emit_report([rep], args.format, args.output, out)
        return 0

    if cmd == "count-palin-kfree":
        ctx = base_context(args.base)
        table = _get_table(args.x)
        rep = experiments.count_kfree_palindromes(ctx, args.k, args.x, table)
        emit_report([rep], args.format, args.output, out)
        return 0

    if cmd == "palin-div":
        ctx = base_context(args.base)
        c = experiments.count_palindromes_div_by(ctx, args.x, args.d, star=args.star)
        out.write(f"{c}\n")
        return 0

    if cmd == "almost-prime":
        ctx = base_context(args.base)
        table = _get_table(args.x)
        c = experiments.count_almost_prime_palindromes(
            ctx, args.x, args.omega_max, kfree_k=args.kfree_k,
            rough_exponent=args.rough_exponent, table=table)
        out.write(f"{c}\n")
        return 0

    if cmd == "sqrt-law":
        ctx = base_context(args.base)
        rows = experiments.sqrt_law_check(ctx, args.x, star=args.star)
        if args.format == "csv":
            text = "x,count,count_over_sqrt_x\n" + "\n".join(
                f"{x},{c},{_fmt(r)}" for x, c, r in rows) + "\n"
        else:
            text = json.dumps([{"x": x, "count": c, "normalized": r} for x, c, r in rows]) + "\n"
        if args.output:
            Path(args.output).write_text(text)
        else:
            out.write(text)
        return 0

    if cmd == "certify":
        cert = verifier.certify_base(base_context(args.b), args.K, args.slack)
        emit_report([cert], args.format, args.output, out)
        return 0 if cert.passed else 1

    if cmd == "certify-range":
        t0 = time.monotonic()
        certs = verifier.certify_range(args.b0, args.b1, args.K,
                                       slack=args.slack, workers=args.workers)
        elapsed = time.monotonic() - t0
        if args.format == "csv":
            # summary row in the shape of the published table
            text = ("b0,b1,K,all_passed,wall_clock_seconds\n"
                    f"{args.b0},{args.b1},{args.K},{all(c.passed for c in certs)},{elapsed:.3f}\n")
            if args.output:
                Path(args.output).write_text(text)
            else:
                out.write(text)
        else:
            emit_report(certs, args.format, args.output, out)
        if args.timing:
            print(f"wall_clock_seconds={elapsed:.3f}", file=sys.stderr)
        return 0 if all(c.passed for c in certs) else 1

    if cmd == "find-min-k":
        k = verifier.find_min_K(base_context(args.b), args.k_max, args.slack)
        out.write(json.dumps({"b": args.b, "K_max": args.k_max, "min_K": k}) + "\n")
        return 0 if k is not None else 1

    if cmd == "f-eval":
        v = verifier.f_eval(base_context(args.b), args.theta)
        out.write(_fmt(v) + "\n")
        return 0

    if cmd == "hcabdlog":
        ctx = base_context(args.base)
        table = _get_table(args.limit)
        res = revgoldbach.scan_exceptions(ctx, args.limit, table)
        text = res.to_json() + "\n"
        if args.output:
            Path(args.output).write_text(text)
        else:
            out.write(text)
        return 0

    if cmd == "estermann":
        ctx = base_context(args.base)
        table = _get_table(args.M)
        c = revgoldbach.estermann_count(ctx, args.M, table)
        out.write(f"{c}\n")
        return 0

    if cmd == "main-term":
        ctx = base_context(args.base)
        if args.which == "zeta":
            v = densities.zeta(args.k)
        elif args.which == "kfree-density":
            v = densities.kfree_density(ctx, args.k)
        elif args.which == "rev-kfree":
            if args.N is None:
                raise UsageError("--N is required for rev-kfree")
            v = densities.rev_kfree_main_term(ctx, args.k, args.N)
        else:
            if args.N is None or args.d is None:
                raise UsageError("--N and --d are required for rev-pi")
            v = densities.rev_pi_main_term(ctx, args.d, args.N)
        out.write(_fmt(v) + "\n")
        return 0

    raise UsageError(f"unknown subcommand {cmd}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return dispatch(args)
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
