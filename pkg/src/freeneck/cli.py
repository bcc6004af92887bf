"""Command line front end.

    freeneck count  --kind necklaces -g 2 -l 8
    freeneck gen    --kind bracelet -g 2 -l 6 [--aperiodic] [--format letters|ints]
    freeneck gen    --kind necklace -g 2 -l 8 --depth 2            # list shard prefixes
    freeneck gen    --kind necklace -g 2 -l 8 --prefix ab          # one shard
    freeneck bench  --kind necklace -g 2 --lmin 1 --lmax 16
    freeneck verify -g 2 --lmax 8

Exit status: 0 success, 1 verification failure or budget refusal, 2 usage error.
"""
import argparse
import sys

import numpy as np

from . import bench, counting, oracle
from .counting import CountKind
from .generate import KINDS, _Run, _mode, _subtree_run, generate, split_prefixes
from .symbols import MAX_LETTER_RANK, canonical_bracelet, default_style, format_word, parse_word


class UsageError(Exception):
    pass


class Refused(Exception):
    pass


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="freeneck",
        description="Reduced necklaces and bracelets in free groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print an exact count")
    p.add_argument("--kind", required=True, choices=[k.value for k in CountKind])
    p.add_argument("-g", type=_positive_int, required=True, help="rank of the free group")
    p.add_argument("-l", "--length", type=_positive_int, required=True)

    p = sub.add_parser("gen", help="stream necklaces or bracelets, one per line")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("-g", type=_positive_int, required=True)
    p.add_argument("-l", "--length", type=_positive_int, required=True)
    p.add_argument("--aperiodic", action="store_true", help="only aperiodic (prime) words")
    p.add_argument("--format", choices=("letters", "ints"), default=None)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--prefix", help="only the subtree under this prefix")
    p.add_argument("--depth", type=_positive_int,
                   help="shard depth; without --prefix, list the shard prefixes")
    p.add_argument("--budget", type=_positive_int, default=None,
                   help="refuse if the predicted number of words exceeds this")
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("bench", help="work-per-output table as CSV")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("-g", type=_positive_int, required=True, nargs="+")
    p.add_argument("--lmin", type=_positive_int, default=1)
    p.add_argument("--lmax", type=_positive_int, required=True)
    p.add_argument("--aperiodic", action="store_true")
    p.add_argument("--budget", type=_positive_int, default=bench.DEFAULT_OUTPUT_BUDGET)
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("verify", help="cross-check generators against brute force")
    p.add_argument("-g", type=_positive_int, required=True)
    p.add_argument("--lmin", type=_positive_int, default=1)
    p.add_argument("--lmax", type=_positive_int, required=True)
    p.add_argument("--budget", type=_positive_int, default=oracle.DEFAULT_BUDGET,
                   help="largest number of raw words the oracle may scan")
    return parser


class _WordWriter:
    """Formats whole chunks at once; letters go through a byte lookup table."""

    def __init__(self, fh, g, style):
        self.fh = fh
        self.style = style
        if style == "letters":
            letters = format_word(range(2 * g), "letters", g)
            self.table = np.frombuffer(letters.encode("ascii"), dtype=np.uint8)

    def write_block(self, block):
        if self.style == "letters":
            n, width = block.shape
            buf = np.empty((n, width + 1), dtype=np.uint8)
            buf[:, :width] = self.table[block]
            buf[:, width] = ord("\n")
            self.fh.write(buf.tobytes().decode("ascii"))
        else:
            self.fh.write("".join(",".join(map(str, row)) + "\n" for row in block.tolist()))


def _open_output(path):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", newline="\n"), True


def _resolve_style(args):
    style = args.format or default_style(args.g)
    if style == "letters" and args.g > MAX_LETTER_RANK:
        raise UsageError(f"letters format needs g <= {MAX_LETTER_RANK}; use --format ints")
    return style


def _cmd_count(args, out):
    out.write(f"{counting.count(args.kind, args.g, args.length)}\n")
    return 0


def _cmd_gen(args, out):
    style = _resolve_style(args)
    if args.budget is not None:
        predicted = counting.count(counting.enumeration_kind(args.kind, args.aperiodic), args.g, args.length)
        if predicted > args.budget:
            raise Refused(f"{predicted} words predicted, over the budget of {args.budget}")
    writer = _WordWriter(out, args.g, style)

    if args.prefix is None and args.depth is not None:
        if args.depth > args.length:
            raise UsageError(f"--depth must be at most the length {args.length}")
        for w in split_prefixes(args.g, args.length, args.depth, args.kind):
            out.write(format_word(w, style, args.g) + "\n")
        return 0

    if args.prefix is not None:
        try:
            prefix = parse_word(args.prefix, args.g, style)
        except ValueError as exc:
            raise UsageError(f"bad --prefix: {exc}") from None
        if args.depth is not None and args.depth != len(prefix):
            raise UsageError(f"--prefix has length {len(prefix)} but --depth is {args.depth}")
        try:
            run = _subtree_run(prefix, args.g, args.length, args.aperiodic, args.kind)
        except ValueError as exc:
            raise UsageError(f"prefix is not a shard of this enumeration: {exc}") from None
    else:
        run = _Run(args.kind, args.g, args.length, args.length, _mode(args.aperiodic)).start_full()

    if args.count_only:
        out.write(f"{run.run().outputs}\n")
        return 0
    for block in run.chunks():
        writer.write_block(block)
    return 0


def _cmd_bench(args, out):
    rows = []
    for g in sorted(set(args.g)):
        rows.extend(bench.measure(args.kind, g, args.lmin, args.lmax, args.budget, args.aperiodic))
    bench.write_csv(rows, out)
    return 0


def verify_instance(kind, aperiodic, g, length, budget=oracle.DEFAULT_BUDGET):
    """Compare one generator run with the oracle and the formula; ``(ok, message)``."""
    words = []
    counters = generate(kind, g, length, aperiodic, visitor=lambda w: words.append(tuple(w)))
    expected = oracle.brute_enumerate(oracle.oracle_kind(kind, aperiodic), g, length, budget).words
    formula = counting.count(counting.enumeration_kind(kind, aperiodic), g, length)
    problems = []
    if words != expected:
        problems.append(f"differs from brute force ({len(words)} vs {len(expected)} words)")
    if len(words) != formula:
        problems.append(f"count {len(words)} != formula {formula}")
    if counters.checkinv_zero:
        problems.append(f"inverse comparison returned 0 {counters.checkinv_zero} times")
    if kind == "bracelet" and any(canonical_bracelet(w) != w for w in words):
        problems.append("emitted a non-canonical bracelet")
    label = f"{kind:8s} g={g} len={length} aperiodic={str(aperiodic).lower():5s}"
    if problems:
        return False, f"FAIL {label} " + "; ".join(problems)
    return True, f"PASS {label} ({len(words)} words)"


def _cmd_verify(args, out):
    if args.lmin > args.lmax:
        raise UsageError("--lmin must not exceed --lmax")
    k = 2 * args.g
    if k**args.lmax > args.budget:
        raise Refused(f"{k}**{args.lmax} raw words exceeds the oracle budget of {args.budget}")
    all_ok = True
    for length in range(args.lmin, args.lmax + 1):
        for kind in KINDS:
            for aperiodic in (False, True):
                ok, message = verify_instance(kind, aperiodic, args.g, length, args.budget)
                all_ok &= ok
                out.write(message + "\n")
    return 0 if all_ok else 1


_COMMANDS = {"count": _cmd_count, "gen": _cmd_gen, "bench": _cmd_bench, "verify": _cmd_verify}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    out, close = _open_output(getattr(args, "output", "-"))
    try:
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"freeneck: error: {exc}", file=sys.stderr)
        return 2
    except (Refused, oracle.BudgetExceeded) as exc:
        print(f"freeneck: refused: {exc}", file=sys.stderr)
        return 1
    finally:
        out.flush()
        if close:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
