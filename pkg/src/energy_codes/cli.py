"""Command-line front end: one bitstring per line in, one per line out.

Exit codes: 0 ok, 1 bad or infeasible parameters, 2 malformed input line,
3 I/O failure, 4 decode failure, 5 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import List, Optional

from .bitseq import SUBBLOCK, WINDOW, CodeParams, bits, to_str
from .errors import BudgetExceeded, CodeError, InfeasibleParameters
from .oracle import (
    DEFAULT_BUDGET,
    count_by_enumeration,
    count_secc,
    count_swcc,
    enumerate_class,
    measure_rate,
    verify_halfspace_bound,
)
from .schemes import SCHEMES, make_codec

EXIT_OK, EXIT_PARAMS, EXIT_INPUT, EXIT_IO, EXIT_DECODE, EXIT_BUDGET = range(6)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _say(msg: str):
    print(msg, file=sys.stderr)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _params(args) -> CodeParams:
    """Build CodeParams from --n/--ell and either --a/--b or --p1/--p2."""
    if args.n is None or args.ell is None:
        raise CliError(EXIT_PARAMS, "--n and --ell are required")
    a, b = args.a, args.b
    if b is None and getattr(args, "scheme", None) == "polarity":
        b = args.ell
    try:
        if a is None and b is None:
            if args.p1 is None or args.p2 is None:
                raise CliError(EXIT_PARAMS, "give --a/--b or --p1/--p2")
            return CodeParams.from_profile(args.n, args.ell, args.p1, args.p2)
        if a is None or b is None:
            raise CliError(EXIT_PARAMS, "--a and --b go together")
        return CodeParams(args.n, args.ell, a, b, args.p1, args.p2)
    except ValueError as exc:
        raise CliError(EXIT_PARAMS, f"bad parameters: {exc}") from None


def _codec(args):
    params = _params(args)
    inner = None
    if args.inner_a is not None or args.inner_b is not None:
        if args.inner_a is None or args.inner_b is None:
            raise CliError(EXIT_PARAMS, "--inner-a and --inner-b go together")
        inner = (args.inner_a, args.inner_b)
    try:
        return make_codec(args.scheme, params, inner)
    except InfeasibleParameters as exc:
        raise CliError(EXIT_PARAMS, f"infeasible parameters, check '{exc.check}' failed: {exc.detail}")
    except ValueError as exc:
        raise CliError(EXIT_PARAMS, f"bad parameters: {exc}") from None


@contextmanager
def _open(path: Optional[str], mode: str):
    if path in (None, "-"):
        yield sys.stdin if "r" in mode else sys.stdout
        return
    try:
        fh = open(path, mode, newline="\n" if "w" in mode else None)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot open {path}: {exc.strerror}") from None
    with fh:
        yield fh


def _read_lines(path: Optional[str]) -> List[str]:
    try:
        with _open(path, "r") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise CliError(EXIT_IO, f"read failed: {exc}") from None


def _write_lines(path: Optional[str], lines: List[str]):
    try:
        with _open(path, "w") as fh:
            fh.writelines(line + "\n" for line in lines)
    except OSError as exc:
        raise CliError(EXIT_IO, f"write failed: {exc}") from None


def _parse(lines: List[str], length: int, what: str):
    out = []
    for no, line in enumerate(lines, start=1):
        try:
            x = bits(line)
        except ValueError:
            raise CliError(EXIT_INPUT, f"line {no}: not a bitstring") from None
        if len(x) != length:
            raise CliError(EXIT_INPUT, f"line {no}: {what} needs {length} bits, got {len(x)}")
        out.append(x)
    return out


def _accounting(codec) -> str:
    k, n = codec.payload_length, codec.codeword_length
    return f"payload {k} bits, codeword {n} bits, redundancy {n - k} bits, rate {k}/{n}"


def cmd_encode(args) -> int:
    codec = _codec(args)
    payloads = _parse(_read_lines(args.input), codec.payload_length, "payload")
    _say(_accounting(codec))
    _write_lines(args.output, [to_str(codec.encode(x)) for x in payloads])
    return EXIT_OK


def cmd_decode(args) -> int:
    codec = _codec(args)
    words = _parse(_read_lines(args.input), codec.codeword_length, "codeword")
    report = getattr(codec, "decode_report", None)
    out, status = [], EXIT_OK
    for no, y in enumerate(words, start=1):
        try:
            if report is not None:
                r = report(y)
                out.append(to_str(r.payload))
                _say(f"line {no}: {r.corrections} correction(s)")
            else:
                out.append(to_str(codec.decode(y)))
        except CodeError as exc:
            _say(f"line {no}: cannot decode: {exc}")
            if args.strict:
                _write_lines(args.output, out)
                return EXIT_DECODE
            out.append("")
            status = EXIT_DECODE
    _write_lines(args.output, out)
    return status


def _flips(length: int, block: int, ell: int, model: str, rate: float, rng: random.Random):
    if model == "per-block":
        picks = []
        for start in range(0, length, block):
            if rng.random() < rate:
                picks.append(start + rng.randrange(min(block, length - start)) + 1)
        return picks
    picks, last = [], None
    for pos in range(1, length + 1):
        if (last is None or pos - last >= ell) and rng.random() < rate:
            picks.append(pos)
            last = pos
    return picks


def cmd_corrupt(args) -> int:
    codec = _codec(args)
    if not 0 <= args.rate <= 1:
        raise CliError(EXIT_PARAMS, "--rate must lie in [0, 1]")
    words = _parse(_read_lines(args.input), codec.codeword_length, "codeword")
    rng = random.Random(args.seed)
    out, side = [], []
    for no, y in enumerate(words, start=1):
        picks = _flips(len(y), codec.block_length, codec.params.ell, args.model, args.rate, rng)
        z = list(y)
        for p in picks:
            z[p - 1] ^= 1
        out.append(to_str(z))
        side.append(f"{no}\t" + ",".join(map(str, picks)))
    _write_lines(args.output, out)
    if args.sidecar:
        _write_lines(args.sidecar, side)
    else:
        for line in side:
            _say(f"flipped {line}")
    return EXIT_OK


def _raw_band(args):
    for name in ("n", "ell", "a", "b"):
        if getattr(args, name) is None:
            raise CliError(EXIT_PARAMS, f"--{name} is required")
    n, ell, a, b = args.n, args.ell, args.a, args.b
    if not 0 <= a <= b <= ell <= n:
        raise CliError(EXIT_PARAMS, f"need 0 <= a <= b <= ell <= n, got a={a} b={b} ell={ell} n={n}")
    if args.mode == SUBBLOCK and n % ell:
        raise CliError(EXIT_PARAMS, f"subblock mode needs ell | n, got n={n} ell={ell}")
    return n, ell, a, b


def _emit(args, record: dict):
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        width = max(map(len, record))
        for key, value in record.items():
            print(f"{key:<{width}}  {value}")


def cmd_count(args) -> int:
    n, ell, a, b = _raw_band(args)
    if args.brute:
        count = count_by_enumeration(n, ell, a, b, args.mode, args.budget)
        method = "enumeration"
    elif args.mode == SUBBLOCK:
        count, method = count_secc(n, ell, a, b), "product formula"
    else:
        count, method = count_swcc(n, ell, a, b, args.budget), "dynamic program"
    _emit(args, {"mode": args.mode, "n": n, "ell": ell, "a": a, "b": b, "count": count, "method": method})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n, ell, a, b = _raw_band(args)
    words = [to_str(x) for x in enumerate_class(n, ell, a, b, args.mode, args.budget)]
    if args.json:
        print(json.dumps({"mode": args.mode, "count": len(words), "words": words}))
    else:
        _write_lines(args.output, words)
        _say(f"{len(words)} words")
    return EXIT_OK


def cmd_verify_bounds(args) -> int:
    args.mode = WINDOW
    n, ell, a, b = _raw_band(args)
    report = verify_halfspace_bound(n, ell, a, b)
    record = report.as_dict()
    record["verdict"] = "holds" if report.holds else "fails"
    _emit(args, record)
    return EXIT_OK


def cmd_rate(args) -> int:
    codec = _codec(args)
    _emit(args, measure_rate(codec, args.samples, args.seed).as_dict())
    return EXIT_OK


def _code_flags(p: argparse.ArgumentParser, scheme: bool = True):
    if scheme:
        p.add_argument("--scheme", required=True, choices=sorted(SCHEMES))
    p.add_argument("--n", type=int, help="codeword length before ECC tags")
    p.add_argument("--ell", type=int, help="subblock or window length")
    p.add_argument("--a", type=int, help="lowest allowed weight")
    p.add_argument("--b", type=int, help="highest allowed weight")
    p.add_argument("--p1", type=_fraction, help="lower profile as a rational, e.g. 1/4")
    p.add_argument("--p2", type=_fraction, help="upper profile as a rational, e.g. 3/4")
    if scheme:
        p.add_argument("--inner-a", type=int, help="w-ecc: inner band lower weight")
        p.add_argument("--inner-b", type=int, help="w-ecc: inner band upper weight")


def _io_flags(p: argparse.ArgumentParser):
    p.add_argument("-i", "--input", help="input file (default stdin)")
    p.add_argument("-o", "--output", help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="energy-codes", description="Energy-constrained binary codes: encode, decode, count."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode one payload per line")
    _code_flags(p)
    _io_flags(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode one codeword per line")
    _code_flags(p)
    _io_flags(p)
    p.add_argument("--strict", action="store_true", help="stop at the first bad line")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("corrupt", help="flip bits under an error model")
    _code_flags(p)
    _io_flags(p)
    p.add_argument("--model", choices=["per-block", "min-distance"], default="per-block")
    p.add_argument("--rate", type=float, default=1.0, help="flip probability per block/position")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sidecar", help="write flipped positions here instead of stderr")
    p.set_defaults(func=cmd_corrupt)

    for name, func, help_ in (
        ("count", cmd_count, "exact size of a code class"),
        ("enumerate", cmd_enumerate, "list every member of a code class"),
    ):
        p = sub.add_parser(name, help=help_)
        _code_flags(p, scheme=False)
        p.add_argument("--mode", choices=[SUBBLOCK, WINDOW], default=WINDOW)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--json", action="store_true")
        if name == "count":
            p.add_argument("--brute", action="store_true", help="count by enumeration")
        else:
            p.add_argument("-o", "--output")
        p.set_defaults(func=func)

    p = sub.add_parser("verify-bounds", help="check |W| >= 2^(n-1) by exact counting")
    _code_flags(p, scheme=False)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_bounds)

    p = sub.add_parser("rate", help="rate and round-trip sample for a scheme")
    _code_flags(p)
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rate)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        _say(f"error: {exc}")
        return exc.code
    except InfeasibleParameters as exc:
        _say(f"error: infeasible parameters, check '{exc.check}' failed: {exc.detail}")
        return EXIT_PARAMS
    except BudgetExceeded as exc:
        _say(f"error: budget exceeded: {exc}")
        return EXIT_BUDGET
    except ValueError as exc:
        _say(f"error: {exc}")
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
