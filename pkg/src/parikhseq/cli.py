"""Command-line front end.

Subcommands: count, matrix, minor, witness, gsh (eval|linearize|equiv),
verify.  Words come from the positional argument, --file, or standard input
('-' or no argument); whitespace in piped input is ignored.  The matrix
subcommand consumes piped words letter by letter without buffering, so very
long words stream through the fold.

Exit codes: 0 success, 1 property violation or internal disagreement,
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator

from . import fuzz
from .counting import count_factor, count_gapped, count_subword
from .gsh import equivalent, equivalent_bounded, evaluate, linearize, parse_expr
from .intmat import IntMatrix
from .minors import (
    minor_index_set,
    special_minor,
    special_minor_from_matrix,
    verify_witness,
    witness_text,
)
from .parikh import ParikhContext, ParikhFold
from .seqmat import SeqFold, block_dim, seq_matrix, seq_matrix_direct
from .words import Alphabet, GapPattern, SYMBOL_CHARS, PatternError, parse_word

# buffered words up to these lengths are cross-checked against the direct
# construction; piped input streams through the fold unchecked
_SEQ_CHECK_LIMIT = 200_000
_PARIKH_CHECK_LIMIT = 2_000


def _stdin_letters(stream) -> Iterator[str]:
    while True:
        chunk = stream.read(65536)
        if not chunk:
            return
        for ch in chunk:
            if ch.isspace():
                continue
            if ch not in SYMBOL_CHARS:
                raise PatternError(f"invalid symbol {ch!r} in piped word")
            yield ch


def _word_input(args) -> tuple[str | None, Iterable[str]]:
    """Resolve the word source: (buffered word or None, letter iterable)."""
    word = getattr(args, "word", None)
    path = getattr(args, "file", None)
    if word is not None and path is not None:
        raise PatternError("give the word either as an argument or via --file")
    if path is not None:
        with open(path, "r", encoding="ascii") as fh:
            text = "".join(fh.read().split())
        word = parse_word(text)
        return word, word
    if word is None or word == "-":
        return None, _stdin_letters(sys.stdin)
    return parse_word(word), word


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _matrix_payload(matrix: IntMatrix) -> dict:
    return matrix.to_json_dict()


def _matrix_lines(matrix: IntMatrix) -> list[str]:
    return str(matrix).splitlines()


def cmd_count(args) -> int:
    word, letters = _word_input(args)
    if word is None:
        word = "".join(letters)
    if args.subword is not None:
        value = count_subword(word, parse_word(args.subword))
    elif args.factor is not None:
        value = count_factor(word, parse_word(args.factor))
    else:
        value = count_gapped(word, GapPattern.parse(args.genseq))
    _emit(args, {"count": str(value)}, [str(value)])
    return 0


def cmd_matrix(args) -> int:
    word, letters = _word_input(args)
    if args.kind in ("classic", "extended"):
        if args.alphabet is None:
            raise PatternError(f"matrix {args.kind} requires --alphabet")
        alphabet = Alphabet.parse(args.alphabet)
        if args.kind == "classic":
            ctx = ParikhContext.classic(alphabet)
        else:
            if args.inducing is None:
                raise PatternError("matrix extended requires --inducing")
            ctx = ParikhContext(alphabet, parse_word(args.inducing, alphabet))
        fold = ParikhFold(ctx)
        n = 0
        for ch in letters:
            fold.push(ch)
            n += 1
        matrix = fold.result()
        if word is not None and len(word) <= _PARIKH_CHECK_LIMIT:
            direct = _parikh_direct(ctx, word)
            if direct != matrix:
                print("internal error: fold disagrees with direct entries", file=sys.stderr)
                return 1
        payload = {"kind": args.kind, "alphabet": str(alphabet), "length": n}
        if args.kind == "extended":
            payload["inducing"] = ctx.inducing
        payload.update(_matrix_payload(matrix))
        _emit(args, payload, _matrix_lines(matrix))
        return 0

    if args.kind == "factor":
        if args.alphabet is None:
            raise PatternError("matrix factor requires --alphabet")
        sigma = Alphabet.parse(args.alphabet).concat()
        pattern = GapPattern((sigma,))
        if len(sigma) < 2:
            raise PatternError("matrix factor needs an alphabet of size >= 2")
    else:
        if args.pattern is None:
            raise PatternError("matrix sequence requires --pattern")
        pattern = GapPattern.parse(args.pattern)
    block_dim(pattern)  # reject flat length < 2 before consuming input
    fold = SeqFold(pattern)
    n = 0
    for ch in letters:
        fold.push(ch)
        n += 1
    result = fold.result()
    if word is not None and len(word) <= _SEQ_CHECK_LIMIT:
        if seq_matrix_direct(pattern, word) != result:
            print("internal error: fold disagrees with direct construction", file=sys.stderr)
            return 1
    payload = {
        "kind": args.kind,
        "pattern": pattern.render(),
        "length": n,
    }
    payload.update(_matrix_payload(result.matrix))
    payload["blocks"] = {
        name: block.to_json_dict()["rows"]
        for name, block in result.blocks().items()
    }
    lines = _matrix_lines(result.matrix)
    for name, block in result.blocks().items():
        lines.append(f"{name}:")
        lines.extend(_matrix_lines(block))
    _emit(args, payload, lines)
    return 0


def _parikh_direct(ctx: ParikhContext, w: str) -> IntMatrix:
    """Entry-by-entry oracle: above-diagonal cells are subword counts."""
    n = ctx.dim
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(1, n):
        for j in range(i, n):
            rows[i - 1][j] = count_subword(w, ctx.inducing[i - 1 : j])
    return IntMatrix(rows)


def cmd_minor(args) -> int:
    word, letters = _word_input(args)
    if word is None:
        word = "".join(letters)
    pattern = GapPattern.parse(args.pattern)
    minor = special_minor(pattern, word)
    indices: tuple[int, ...] = ()
    if pattern.flat_length >= 2:
        indices = minor_index_set(pattern)
        extracted = special_minor_from_matrix(seq_matrix(pattern, word))
        if extracted != minor:
            print("internal error: extracted minor disagrees with direct construction", file=sys.stderr)
            return 1
    payload = {"pattern": pattern.render(), "indices": list(indices)}
    payload.update(_matrix_payload(minor))
    _emit(args, payload, _matrix_lines(minor))
    return 0


def cmd_witness(args) -> int:
    word, letters = _word_input(args)
    if word is None:
        word = "".join(letters)
    pattern = GapPattern.parse(args.pattern)
    witness, minor, verified = verify_witness(pattern, word)
    text = witness_text(witness, len(pattern.factors))
    payload = {
        "pattern": pattern.render(),
        "witness": text,
        "verified": verified,
    }
    payload["minor"] = _matrix_payload(minor)
    _emit(args, payload, [text, f"verified: {str(verified).lower()}"])
    return 0 if verified else 1


def cmd_gsh(args) -> int:
    if args.action == "eval":
        word, letters = _word_input(args)
        if word is None:
            word = "".join(letters)
        value = evaluate(parse_expr(args.expr), word)
        _emit(args, {"value": str(value)}, [str(value)])
        return 0
    if args.action == "linearize":
        linear = linearize(parse_expr(args.expr))
        _emit(args, {"terms": linear.to_json_list()}, [linear.render()])
        return 0
    # equiv: canonical verdict plus the exhaustive bounded oracle
    e1 = parse_expr(args.expr)
    e2 = parse_expr(args.expr2)
    canonical = equivalent(e1, e2)
    alphabet = Alphabet.parse(args.alphabet)
    bounded, cex = equivalent_bounded(e1, e2, alphabet, args.maxlen)
    payload = {
        "canonical": canonical,
        "bounded": bounded,
        "maxlen": args.maxlen,
        "counterexample": cex,
    }
    lines = [
        f"canonical: {str(canonical).lower()}",
        f"bounded (maxlen={args.maxlen}): {str(bounded).lower()}",
    ]
    if cex is not None:
        lines.append(f"counterexample: {cex!r}")
    _emit(args, payload, lines)
    if canonical != bounded:
        print(
            "disagreement: canonical linear forms and bounded evaluation differ",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_verify(args) -> int:
    names = fuzz.SUITES if args.suite == "all" else (args.suite,)
    reports = [
        fuzz.run_suite(name, args.seed, args.iters, args.maxlen) for name in names
    ]
    payload = {
        "seed": args.seed,
        "suites": [
            {
                "name": r.suite,
                "cases": r.cases,
                "passed": r.passed,
                "counterexample": r.counterexample,
            }
            for r in reports
        ],
    }
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.suite}: {status} ({r.cases} cases)"
        if r.counterexample:
            line += f" counterexample: {r.counterexample}"
        lines.append(line)
    _emit(args, payload, lines)
    return 0 if all(r.passed for r in reports) else 1


def _add_word_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("word", nargs="?", help="word ('-' or omitted: stdin)")
    parser.add_argument("--file", help="read the word from a file")
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parikhseq",
        description="Parikh, factor, and sequence matrices; gapped subsequence "
        "counting; generalized subword histories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count occurrences in a word")
    kinds = p_count.add_mutually_exclusive_group(required=True)
    kinds.add_argument("--subword", help="scattered subword to count")
    kinds.add_argument("--factor", help="contiguous factor to count")
    kinds.add_argument("--genseq", help="gap pattern to count, e.g. ab.c")
    _add_word_args(p_count)
    p_count.set_defaults(func=cmd_count)

    p_matrix = sub.add_parser("matrix", help="compute a matrix image of a word")
    matrix_sub = p_matrix.add_subparsers(dest="kind", required=True)
    for kind, flags in (
        ("classic", ("--alphabet",)),
        ("extended", ("--alphabet", "--inducing")),
        ("factor", ("--alphabet",)),
        ("sequence", ("--pattern",)),
    ):
        p_kind = matrix_sub.add_parser(kind)
        for flag in flags:
            p_kind.add_argument(flag)
        _add_word_args(p_kind)
        p_kind.set_defaults(func=cmd_matrix, kind=kind)

    p_minor = sub.add_parser("minor", help="special minor of the sequence matrix")
    p_minor.add_argument("--pattern", required=True)
    _add_word_args(p_minor)
    p_minor.set_defaults(func=cmd_minor)

    p_witness = sub.add_parser(
        "witness", help="witness word reducing the special minor to a Parikh matrix"
    )
    p_witness.add_argument("--pattern", required=True)
    _add_word_args(p_witness)
    p_witness.set_defaults(func=cmd_witness)

    p_gsh = sub.add_parser("gsh", help="generalized subword histories")
    gsh_sub = p_gsh.add_subparsers(dest="action", required=True)
    g_eval = gsh_sub.add_parser("eval", help="evaluate an expression in a word")
    g_eval.add_argument("expr")
    _add_word_args(g_eval)
    g_eval.set_defaults(func=cmd_gsh)
    g_lin = gsh_sub.add_parser("linearize", help="equivalent linear form")
    g_lin.add_argument("expr")
    g_lin.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    g_lin.set_defaults(func=cmd_gsh)
    g_eq = gsh_sub.add_parser(
        "equiv", help="decide equivalence (canonical and bounded verdicts)"
    )
    g_eq.add_argument("expr")
    g_eq.add_argument("expr2")
    g_eq.add_argument("--alphabet", default="ab")
    g_eq.add_argument("--maxlen", type=int, default=6)
    g_eq.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    g_eq.set_defaults(func=cmd_gsh)

    p_verify = sub.add_parser("verify", help="run seeded property suites")
    p_verify.add_argument(
        "suite", nargs="?", default="all", choices=(*fuzz.SUITES, "all")
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--iters", type=int, default=200)
    p_verify.add_argument("--maxlen", type=int, default=5)
    p_verify.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PatternError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
