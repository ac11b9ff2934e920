"""Knowledge-base files.

::

    eventcalc-kb 1
    fact [index: e1, sort: event, composed-of: [...], duration: [number: 30, unit: seconds]]
    rate e 1/6 gallons per seconds

A fact's bracketed text may span several lines. Saving always writes the
canonical form: header, facts in order, then rates, one per line.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .avmtext import AvmSyntaxError, canonical_text, format_number, parse_text
from .calculus import Kb, KbError, RateFact

HEADER = "eventcalc-kb 1"


class KbFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def dumps(kb: Kb) -> str:
    lines = [HEADER]
    lines += [f"fact {canonical_text(f)}" for f in kb.facts]
    lines += [
        f"rate {r.process_index} {format_number(r.rate)} {r.quantity_unit} per {r.time_unit}"
        for r in kb.rates
    ]
    return "\n".join(lines) + "\n"


def _parse_rate(words: list[str], lineno: int) -> RateFact:
    if len(words) != 6 or words[4] != "per":
        raise KbFormatError("expected 'rate <index> <number> <unit> per <unit>'", lineno)
    try:
        return RateFact(words[1], words[3], words[5], Fraction(words[2]))
    except (ValueError, ZeroDivisionError) as exc:
        raise KbFormatError(str(exc), lineno) from None


def loads(text: str) -> Kb:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise KbFormatError(f"missing header {HEADER!r}", 1)
    kb = Kb()
    rates: list[tuple[RateFact, int]] = []
    i = 1
    while i < len(lines):
        lineno = i + 1
        stripped = lines[i].strip()
        i += 1
        if not stripped or stripped.startswith("#"):
            continue
        keyword, _, rest = stripped.partition(" ")
        if keyword == "fact":
            block = [rest]
            while _depth("\n".join(block)) > 0 and i < len(lines):
                block.append(lines[i])
                i += 1
            try:
                fact = parse_text("\n".join(block))
                kb = kb.with_fact(fact)
            except AvmSyntaxError as exc:
                raise KbFormatError(f"bad fact: {exc}", lineno) from None
            except (KbError, ValueError) as exc:
                raise KbFormatError(str(exc), lineno) from None
        elif keyword == "rate":
            rates.append((_parse_rate(stripped.split(), lineno), lineno))
        else:
            raise KbFormatError(f"unknown entry {keyword!r}", lineno)
    known = kb.indices()
    for rate, lineno in rates:
        if rate.process_index not in known:
            raise KbFormatError(f"rate refers to undefined index {rate.process_index!r}", lineno)
        kb = kb.with_rate(rate)
    return kb


def _depth(text: str) -> int:
    return text.count("[") - text.count("]")


def load(path: str | Path) -> Kb:
    return loads(Path(path).read_text(encoding="utf-8"))


def save(kb: Kb, path: str | Path) -> None:
    Path(path).write_text(dumps(kb), encoding="utf-8")
