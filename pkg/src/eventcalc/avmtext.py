"""Canonical bracketed text for Avms.

Example::

    [index: e1, sort: event, composed-of: [index: e, sort: process, pred: pour],
     duration: [number: 30, unit: seconds]]

Features are emitted in the fixed order of :data:`eventcalc.avm.FEATURE_ORDER`.
A ``sort`` equal to the default for its slot is omitted: ``measure`` under
duration/quantity/distance/proximal-distance, ``top`` elsewhere. Pattern
variables are written ``?Name``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .avm import MEASURE_FEATURES, Avm, Value, Var
from .sorts import TOP


class AvmSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class NotGroundError(ValueError):
    pass


def default_sort(feature: str | None) -> str:
    return "measure" if feature in MEASURE_FEATURES else TOP


def format_number(n: Fraction) -> str:
    return str(n.numerator) if n.denominator == 1 else f"{n.numerator}/{n.denominator}"


def canonical_text(a: Avm, *, allow_vars: bool = False) -> str:
    """Deterministic single-line rendering of ``a``."""
    return _emit(a, None, allow_vars)


def _emit(value: Value, slot: str | None, allow_vars: bool) -> str:
    if isinstance(value, Var):
        if not allow_vars:
            raise NotGroundError(f"pattern variable {value.name} in ground text")
        return str(value)
    if isinstance(value, Fraction):
        return format_number(value)
    if isinstance(value, str):
        return value
    parts = []
    if value.index is not None:
        if isinstance(value.index, Var) and not allow_vars:
            raise NotGroundError(f"pattern variable {value.index.name} in ground text")
        parts.append(f"index: {value.index}")
    if value.sort != default_sort(slot):
        parts.append(f"sort: {value.sort}")
    parts.extend(f"{k}: {_emit(v, k, allow_vars)}" for k, v in value.items())
    return "[" + ", ".join(parts) + "]"


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<punct>[\[\]:,])
  | (?P<number>-?\d+(?:/\d+|\.\d+)?)
  | (?P<var>\?[A-Z][A-Za-z0-9_']*)
  | (?P<word>[A-Za-z][A-Za-z0-9_'-]*)
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if not m:
            raise AvmSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            if "\n" in chunk:
                line += chunk.count("\n")
                line_start = pos + chunk.rindex("\n") + 1
        else:
            yield kind, m.group(), line, col
        pos = m.end()
    yield "eof", "", line, pos - line_start + 1


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = list(_tokenize(text))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise AvmSyntaxError(message, tok[2], tok[3])

    def expect(self, text: str):
        tok = self.next()
        if tok[1] != text or tok[0] == "eof":
            self.fail(f"expected {text!r}, found {tok[1] or 'end of input'!r}", tok)
        return tok

    def parse_avm(self, slot: str | None) -> Avm:
        self.expect("[")
        index = None
        sort = None
        feats: dict[str, Value] = {}
        seen: set[str] = set()
        if self.peek()[1] != "]":
            while True:
                name_tok = self.next()
                if name_tok[0] != "word":
                    self.fail(f"expected feature name, found {name_tok[1]!r}", name_tok)
                name = name_tok[1]
                if name in seen:
                    self.fail(f"duplicate feature {name!r}", name_tok)
                seen.add(name)
                self.expect(":")
                if name == "index":
                    tok = self.next()
                    if tok[0] == "var":
                        index = Var(tok[1][1:])
                    elif tok[0] == "word":
                        index = tok[1]
                    else:
                        self.fail("expected index variable", tok)
                elif name == "sort":
                    tok = self.next()
                    if tok[0] != "word":
                        self.fail("expected sort name", tok)
                    sort = tok[1]
                else:
                    feats[name] = self.parse_value(name)
                if self.peek()[1] == ",":
                    self.next()
                    continue
                break
        end = self.expect("]")
        try:
            return Avm(sort or default_sort(slot), feats, index=index)
        except ValueError as exc:
            self.fail(str(exc), end)

    def parse_value(self, slot: str) -> Value:
        kind, text, _, _ = tok = self.peek()
        if text == "[" and kind == "punct":
            return self.parse_avm(slot)
        self.next()
        if kind == "number":
            return Fraction(text)
        if kind == "var":
            return Var(text[1:])
        if kind == "word":
            return text
        self.fail(f"unexpected {text or 'end of input'!r}", tok)


def parse_text(text: str) -> Avm:
    """Parse bracketed Avm text; inverse of :func:`canonical_text`."""
    p = _Parser(text)
    result = p.parse_avm(None)
    if p.peek()[0] != "eof":
        p.fail(f"trailing input {p.peek()[1]!r}")
    return result
