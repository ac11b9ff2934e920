"""Command-line interface.

Exit status by outcome:

====  ==========================================================
0     success (or: query entailed)
1     query not entailed
2     sentence outside the fragment
3     sortal clash (diagnostics printed)
4     Avm cannot be realized
5     missing/malformed file, bad rate, or unknown index
====  ==========================================================
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import kbfile
from .avmtext import AvmSyntaxError, canonical_text, parse_text
from .calculus import Kb, KbError, RateFact, entails
from .checker import check
from .grammar import IndexAllocator, ParseError, RealizeError, SortalError, paraphrases, parse_sentence, realize
from .lexicon import Lexicon, LexiconError

OK, NOT_ENTAILED, PARSE_ERROR, SORTAL_CLASH, UNREALIZABLE, BAD_INPUT = range(6)


class _Exit(Exception):
    def __init__(self, status: int, message: str = "") -> None:
        self.status = status
        self.message = message


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Exit(BAD_INPUT, f"cannot read {path}: {exc.strerror}") from None


def _load_kb(path: str, create: bool = False) -> Kb:
    if create and not Path(path).exists():
        return Kb()
    try:
        return kbfile.loads(_read(path))
    except kbfile.KbFormatError as exc:
        raise _Exit(BAD_INPUT, f"malformed KB {path}: {exc}") from None


def _load_avm(path: str):
    try:
        return parse_text(_read(path))
    except (AvmSyntaxError, ValueError) as exc:
        raise _Exit(BAD_INPUT, f"malformed AVM in {path}: {exc}") from None


def _sentence(text: str, lex: Lexicon, allocator: Optional[IndexAllocator] = None):
    try:
        return parse_sentence(text, lex, allocator=allocator)
    except ParseError as exc:
        raise _Exit(PARSE_ERROR, f"parse error: {exc}") from None
    except SortalError as exc:
        raise _Exit(SORTAL_CLASH, "\n".join(map(str, exc.diagnostics))) from None


def cmd_parse(args, lex: Lexicon) -> int:
    print(canonical_text(_sentence(args.sentence, lex)))
    return OK


def cmd_check(args, lex: Lexicon) -> int:
    diagnostics = check(_load_avm(args.avm_file), lex)
    for d in diagnostics:
        print(d)
    return SORTAL_CLASH if diagnostics else OK


def cmd_realize(args, lex: Lexicon) -> int:
    try:
        print(realize(_load_avm(args.avm_file), lex))
    except RealizeError as exc:
        raise _Exit(UNREALIZABLE, f"unrealizable: {exc}") from None
    return OK


def cmd_assert(args, lex: Lexicon) -> int:
    kb = _load_kb(args.kb, create=True)
    fact = _sentence(args.sentence, lex, IndexAllocator.for_kb(kb))
    try:
        kb = kb.with_fact(fact)
    except KbError as exc:
        raise _Exit(BAD_INPUT, str(exc)) from None
    kbfile.save(kb, args.kb)
    print(fact.index)
    return OK


def cmd_rate(args, lex: Lexicon) -> int:
    kb = _load_kb(args.kb)
    if args.per != "per":
        raise _Exit(BAD_INPUT, "usage: rate <index> <number> <qty-unit> per <time-unit>")
    if args.index not in kb.indices():
        raise _Exit(BAD_INPUT, f"unknown index {args.index!r}")
    try:
        rate = RateFact(args.index, args.qty_unit, args.time_unit, Fraction(args.number))
    except (ValueError, ZeroDivisionError) as exc:
        raise _Exit(BAD_INPUT, f"bad rate: {exc}") from None
    kbfile.save(kb.with_rate(rate), args.kb)
    return OK


def cmd_infer(args, lex: Lexicon) -> int:
    kb = _load_kb(args.kb)
    text = args.query.strip()
    if text.startswith("["):
        try:
            query = parse_text(text)
        except AvmSyntaxError as exc:
            raise _Exit(PARSE_ERROR, f"parse error: {exc}") from None
    else:
        query = _sentence(text, lex)
    result = entails(kb, query, max_depth=args.max_depth, lexicon=lex)
    if not result:
        print("no")
        return NOT_ENTAILED
    print("yes")
    print(result.format_witness())
    return OK


def cmd_paraphrase(args, lex: Lexicon) -> int:
    kb = _load_kb(args.kb)
    try:
        lines = paraphrases(kb, args.index, args.max, lex)
    except KeyError:
        raise _Exit(BAD_INPUT, f"unknown index {args.index!r}") from None
    for line in lines:
        print(line)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eventcalc", description="Parse, check and reason about event descriptions.")
    parser.add_argument("--lexicon", help="lexicon file (default: bundled)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="translate a sentence to AVM text")
    p.add_argument("sentence")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("check", help="list sortal diagnostics for an AVM file")
    p.add_argument("avm_file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", help="realize an AVM file as a sentence")
    p.add_argument("avm_file")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("assert", help="add a sentence's fact to a KB")
    p.add_argument("--kb", required=True)
    p.add_argument("sentence")
    p.set_defaults(func=cmd_assert)

    p = sub.add_parser("rate", help="record a transfer rate for a process")
    p.add_argument("--kb", required=True)
    p.add_argument("index")
    p.add_argument("number")
    p.add_argument("qty_unit")
    p.add_argument("per")
    p.add_argument("time_unit")
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("infer", help="ask whether a sentence or AVM follows from a KB")
    p.add_argument("--kb", required=True)
    p.add_argument("--max-depth", type=int, default=4)
    p.add_argument("query")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("paraphrase", help="sentences derivable about an index")
    p.add_argument("--kb", required=True)
    p.add_argument("--max", type=int, default=20)
    p.add_argument("index")
    p.set_defaults(func=cmd_paraphrase)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lex = Lexicon.load(args.lexicon) if args.lexicon else Lexicon.default()
        return args.func(args, lex)
    except (OSError, LexiconError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except _Exit as exc:
        if exc.message:
            stream = sys.stdout if exc.status == SORTAL_CLASH else sys.stderr
            print(exc.message, file=stream)
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
