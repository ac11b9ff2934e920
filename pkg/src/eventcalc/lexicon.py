"""Closed lexicon shared by the sortal checker and the grammar.

Lexicon files hold one entry per line::

    <surface> <class> <pred-atom> [<extra> ...]

``#`` starts a comment. The extras depend on the class: verbs name their
category (``transfer-verb``, ``fill-verb``, ``motion-verb``), nouns their
form (``mass``, ``count``, ``plural``), units their number, path
prepositions ``path-pred <sort>``, and numerals ``tens``/``multiplier``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional

from . import units
from .sorts import UnknownSortError, check_sort

TOKEN_CLASSES = frozenset(
    {"name", "verb-past", "noun", "card-numeral", "number", "unit", "prep", "det", "misc"}
)
VERB_CATEGORIES = frozenset({"transfer-verb", "fill-verb", "motion-verb"})

_INCREMENTAL_ROLE = {"transfer-verb": "patient", "motion-verb": "path", "fill-verb": None}
_CONSTANT_ROLES = {
    "transfer-verb": frozenset({"agent", "goal"}),
    "motion-verb": frozenset({"agent"}),
    "fill-verb": frozenset({"agent", "goal"}),
}


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    surface: str
    cls: str
    pred: str
    extra: tuple[str, ...] = ()


@dataclass(frozen=True)
class LexicalEntry:
    pred: str
    category: str
    incremental_role: Optional[str] = None
    constant_roles: frozenset = field(default_factory=frozenset)
    path_sort_restriction: Optional[str] = None


def _entry_for(tok: Token) -> Optional[LexicalEntry]:
    if tok.cls == "verb-past":
        if not tok.extra or tok.extra[0] not in VERB_CATEGORIES:
            raise LexiconError(f"verb {tok.surface!r} needs a category")
        cat = tok.extra[0]
        return LexicalEntry(tok.pred, cat, _INCREMENTAL_ROLE[cat], _CONSTANT_ROLES[cat])
    if tok.cls == "noun":
        return LexicalEntry(tok.pred, "nominal")
    if tok.cls == "prep" and tok.extra[:1] == ("path-pred",):
        if len(tok.extra) < 2:
            raise LexiconError(f"path predicate {tok.surface!r} needs a sort restriction")
        try:
            restriction = check_sort(tok.extra[1])
        except UnknownSortError as exc:
            raise LexiconError(f"{tok.surface!r}: {exc}") from None
        return LexicalEntry(tok.pred, "path-pred", path_sort_restriction=restriction)
    return None


class Lexicon:
    def __init__(self, tokens: Iterable[Token]) -> None:
        self.tokens: dict[str, list[Token]] = {}
        self.entries: dict[str, LexicalEntry] = {}
        for tok in tokens:
            if tok.cls not in TOKEN_CLASSES:
                raise LexiconError(f"unknown token class {tok.cls!r} for {tok.surface!r}")
            if tok.cls == "unit":
                try:
                    units.normalize_unit(tok.pred)
                except units.UnitError as exc:
                    raise LexiconError(str(exc)) from None
            self.tokens.setdefault(tok.surface.lower(), []).append(tok)
            entry = _entry_for(tok)
            if entry is not None:
                known = self.entries.setdefault(entry.pred, entry)
                if known != entry:
                    raise LexiconError(f"conflicting entries for {entry.pred!r}")

    @classmethod
    def from_text(cls, text: str) -> "Lexicon":
        toks = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            if len(line) < 3:
                raise LexiconError(f"line {lineno}: expected '<surface> <class> <pred>'")
            toks.append(Token(line[0], line[1], line[2], tuple(line[3:])))
        return cls(toks)

    @classmethod
    def load(cls, path: str | Path) -> "Lexicon":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))

    @classmethod
    @functools.lru_cache(maxsize=None)
    def default(cls) -> "Lexicon":
        text = resources.files("eventcalc").joinpath("data/default.lex").read_text(encoding="utf-8")
        return cls.from_text(text)

    def lookup(self, surface: str) -> list[Token]:
        return self.tokens.get(surface.lower(), [])

    def entry(self, pred: str) -> Optional[LexicalEntry]:
        return self.entries.get(pred)

    def category(self, pred: object) -> Optional[str]:
        entry = self.entries.get(pred) if isinstance(pred, str) else None
        return entry.category if entry else None

    def preds(self, category: str) -> frozenset:
        return frozenset(p for p, e in self.entries.items() if e.category == category)

    def _find(self, cls: str, pred: str, *extra: str) -> Optional[Token]:
        for toks in self.tokens.values():
            for tok in toks:
                if tok.cls == cls and tok.pred == pred and all(x in tok.extra for x in extra):
                    return tok
        return None

    def surface(self, cls: str, pred: str, *extra: str) -> Optional[str]:
        tok = self._find(cls, pred, *extra)
        return tok.surface if tok else None

    def noun_kind(self, pred: str) -> Optional[str]:
        """``mass`` or ``count`` for a nominal pred."""
        if self._find("noun", pred, "mass"):
            return "mass"
        if self._find("noun", pred, "count"):
            return "count"
        return None

    @functools.cached_property
    def numerals(self) -> dict[int, str]:
        return {
            int(tok.pred): tok.surface
            for toks in self.tokens.values()
            for tok in toks
            if tok.cls == "card-numeral"
        }


def default_lexicon() -> Lexicon:
    return Lexicon.default()
