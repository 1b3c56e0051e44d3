"""Command-line front end: expression evaluation, root finding, square
roots and a benchmark table with verified results."""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from math import isqrt

from .algorithms import Complex, csqrt, ivt_trisect, real_max, real_pi, real_sqrt
from .creal import CReal, to_decimal
from .dyadic import Dyadic
from .errors import EffortExhausted, ParseError
from .expr import evaluate, parse
from .kleenean import DEFAULT_BUDGET, set_default_budget

# bits <-> decimal digits, using rational over/under-estimates of log2(10)
def _digits_for_bits(bits: int) -> int:
    return max(1, (bits - 2) * 30103 // 100000)


def _bits_for_digits(digits: int) -> int:
    return 3322 * digits // 1000 + 3


def _resolve_accuracy(args) -> tuple[int, int]:
    """Return (bits, digits) from --bits / --digits, deriving the other."""
    if args.digits is not None:
        if args.digits < 1:
            raise SystemExit("--digits must be >= 1")
        return _bits_for_digits(args.digits), args.digits
    bits = args.bits if args.bits is not None else 200
    if bits < 1:
        raise SystemExit("--bits must be >= 1")
    return bits, _digits_for_bits(bits)


def _print_value(value, digits: int):
    if isinstance(value, Complex):
        print(to_decimal(value.re, digits))
        print(to_decimal(value.im, digits))
    else:
        print(to_decimal(value, digits))


def _cmd_eval(args) -> int:
    bits, digits = _resolve_accuracy(args)
    ast = parse(args.expr)
    value = evaluate(ast, budget=args.budget)
    if isinstance(value, CReal):
        value.approx(bits)
    _print_value(value, digits)
    return 0


def _cmd_ivt(args) -> int:
    bits, digits = _resolve_accuracy(args)
    ast = parse(args.expr)

    def f(x: CReal) -> CReal:
        return evaluate(ast, env={"x": x}, budget=args.budget)

    root = ivt_trisect(f, Fraction(args.a), Fraction(args.b), budget=args.budget)
    root.approx(bits)
    _print_value(root, digits)
    return 0


def _cmd_sqrt(args) -> int:
    bits, digits = _resolve_accuracy(args)
    value = evaluate(parse(args.value), budget=args.budget)
    result = real_sqrt(value, budget=args.budget)
    result.approx(bits)
    _print_value(result, digits)
    return 0


def _cmd_csqrt(args) -> int:
    bits, digits = _resolve_accuracy(args)
    re = evaluate(parse(args.re), budget=args.budget)
    im = evaluate(parse(args.im), budget=args.budget)
    result = csqrt(Complex(re, im), budget=args.budget)
    result.re.approx(bits)
    result.im.approx(bits)
    _print_value(result, digits)
    return 0


# -- benchmark suite ---------------------------------------------------


def _verify_contains_zero(iv, bits):
    return iv.contains(Dyadic(0)) and iv.width() <= Dyadic(1, -bits)


def _verify_sqrt2(iv, bits):
    # the floor oracle sits up to one ulp below sqrt(2)
    oracle = Dyadic(isqrt(2 << (2 * bits)), -bits)
    pad = Dyadic(1, -bits)
    return iv.widen(pad).contains(oracle) and iv.width() <= pad


def _verify_sqrtsqrt2(iv, bits):
    # fourth-power check: the interval must bracket the fourth root of 2
    lo, hi = iv.lo, iv.hi
    lo4 = lo * lo * lo * lo
    hi4 = hi * hi * hi * hi
    return lo4 <= Dyadic(2) <= hi4 and iv.width() <= Dyadic(1, -bits)


def _verify_near(oracle_fn):
    def check(iv, bits):
        oracle = oracle_fn(bits + 2)
        mid = iv.midpoint()
        return abs(mid - oracle) <= Dyadic(1, -bits) and iv.width() <= Dyadic(1, -bits)

    return check


def _root_half(prec):
    return Dyadic(1, -1)


def _root_quadratic(prec):
    # 1 - sqrt(2)/2 to 2**-prec
    r = isqrt(2 << (2 * prec))  # floor(sqrt(2) * 2**prec)
    return Dyadic(1) - Dyadic(r, -(prec + 1))


_BENCH_ROWS = {
    "maxpi": {
        "bits": 1000,
        "build": lambda budget: real_max(0, real_pi() - real_pi(), budget),
        "verify": _verify_contains_zero,
    },
    "sqrt2": {
        "bits": 10_000,
        "build": lambda budget: real_sqrt(2, budget),
        "verify": _verify_sqrt2,
    },
    "sqrtsqrt2": {
        "bits": 10_000,
        "build": lambda budget: real_sqrt(real_sqrt(2, budget), budget),
        "verify": _verify_sqrtsqrt2,
    },
    "ivt-linear": {
        "bits": 1000,
        "build": lambda budget: ivt_trisect(
            lambda x: x - Fraction(1, 2), 0, 1, budget
        ),
        "verify": _verify_near(_root_half),
    },
    "ivt-quadratic": {
        "bits": 1000,
        "build": lambda budget: ivt_trisect(
            lambda x: x * (2 - x) - Fraction(1, 2), 0, 1, budget
        ),
        "verify": _verify_near(_root_quadratic),
    },
    "ivt-sqrt": {
        "bits": 1000,
        "build": lambda budget: ivt_trisect(
            lambda x: real_sqrt(x + Fraction(1, 2), budget) - 1, 0, 1, budget
        ),
        "verify": _verify_near(_root_half),
    },
}


def _cmd_bench(args) -> int:
    names = [args.seed_row] if args.seed_row else list(_BENCH_ROWS)
    unknown = [n for n in names if n not in _BENCH_ROWS]
    if unknown:
        raise SystemExit(f"unknown benchmark row(s): {', '.join(unknown)}")
    print(f"{'row':<15}{'bits':>8}{'mean_s':>12}{'verified':>10}")
    any_failed = False
    for name in names:
        row = _BENCH_ROWS[name]
        bits = args.bits if args.bits is not None else row["bits"]
        times = []
        verified = True
        for _ in range(args.repeats):
            start = time.perf_counter()
            iv = row["build"](args.budget).approx(bits)
            times.append(time.perf_counter() - start)
            if not row["verify"](iv, bits):
                verified = False
        if args.repeats == 0:
            continue
        mean = sum(times) / len(times)
        status = "ok" if verified else "FAILED"
        any_failed = any_failed or not verified
        print(f"{name:<15}{bits:>8}{mean:>12.4f}{status:>10}")
        if args.machine:
            print(
                f"name={name} bits={bits} seconds={mean:.6f} "
                f"verified={'true' if verified else 'false'}"
            )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactreal",
        description="Exact real evaluation, certified root finding and benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--bits", type=int, default=None, help="target accuracy in bits")
        p.add_argument("--digits", type=int, default=None, help="decimal digits to print")
        p.add_argument(
            "--budget", type=int, default=DEFAULT_BUDGET, help="effort budget"
        )

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("expr")
    common(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_ivt = sub.add_parser("ivt", help="find the unique zero of f(x) on [a, b]")
    p_ivt.add_argument("expr")
    p_ivt.add_argument("a")
    p_ivt.add_argument("b")
    common(p_ivt)
    p_ivt.set_defaults(func=_cmd_ivt)

    p_sqrt = sub.add_parser("sqrt", help="square root of a nonnegative value")
    p_sqrt.add_argument("value")
    common(p_sqrt)
    p_sqrt.set_defaults(func=_cmd_sqrt)

    p_csqrt = sub.add_parser("csqrt", help="complex square root of re + i*im")
    p_csqrt.add_argument("re")
    p_csqrt.add_argument("im")
    common(p_csqrt)
    p_csqrt.set_defaults(func=_cmd_csqrt)

    p_bench = sub.add_parser("bench", help="run the verified benchmark table")
    p_bench.add_argument("--bits", type=int, default=None)
    p_bench.add_argument("--repeats", type=int, default=1)
    p_bench.add_argument("--seed-row", default=None, help="run a single named row")
    p_bench.add_argument("--machine", action="store_true", help="key=value output")
    p_bench.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    set_default_budget(args.budget)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except EffortExhausted as exc:
        print(f"effort exhausted: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
