"""A small controlled-English fragment, parsed to and realized from Avms.

Sentences have the shape::

    NAME VERB [DISTANCE] [NP] [into NP] [PATH-PREP the NOUN [, MEASURE from the NOUN,]]
         [for|in MEASURE]

Temporal and spatial ``for`` phrases are measure phrases: the pred-bearing
core becomes the composed-of filler of a new event carrying the measure.
``in`` phrases attach a duration directly to an event. ``N units of X``
builds an object composed of the substance X with that quantity; a numeral
with a plural noun builds ``card``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from . import units
from .avm import Avm, indices, walk
from .avmtext import format_number
from .calculus import Kb, RuleError, duration_weaken, existential_weaken, quantity_derive
from .checker import Diagnostic, check, dotted
from .lexicon import Lexicon, Token
from .sorts import sort_leq


class ParseError(ValueError):
    def __init__(self, message: str, position: Optional[int] = None) -> None:
        where = f" at token {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
        self.position = position


class SortalError(ValueError):
    """The sentence parsed, but its translation is not well-sorted."""

    def __init__(self, avm: Avm, diagnostics: list[Diagnostic]) -> None:
        super().__init__("; ".join(map(str, diagnostics)))
        self.avm = avm
        self.diagnostics = diagnostics


class RealizeError(ValueError):
    def __init__(self, message: str, paths: Iterable[tuple[str, ...]] = ()) -> None:
        self.paths = sorted(set(paths))
        listed = ", ".join(dotted(p) for p in self.paths)
        super().__init__(f"{message}: {listed}" if listed else message)


# -- numbers -----------------------------------------------------------------


def number_words(n: Fraction, lexicon: Lexicon) -> str:
    """Spell ``n`` out when it is a whole number below a thousand."""
    words = lexicon.numerals
    if n.denominator != 1 or not 0 <= n < 1000:
        return format_number(n)
    n = int(n)
    if n in words and n < 100:
        return words[n]
    parts = []
    hundreds, rest = divmod(n, 100)
    if hundreds:
        parts += [words[hundreds], words[100]]
    if rest:
        if rest in words:
            parts.append(words[rest])
        else:
            tens, ones = divmod(rest, 10)
            parts.append(f"{words[tens * 10]}-{words[ones]}")
    return " ".join(parts)


_NUMERAL_RE = re.compile(r"\d+(?:/\d+)?\Z")


# -- tokens ------------------------------------------------------------------

_WORD_RE = re.compile(r"[A-Za-z]+(?:-[A-Za-z]+)*|\d+(?:/\d+)?|,|\S")


@dataclass
class _Tok:
    text: str
    pos: int

    @property
    def low(self) -> str:
        return self.text.lower()


def tokenize(sentence: str) -> list[_Tok]:
    return [_Tok(m.group(), i) for i, m in enumerate(_WORD_RE.finditer(sentence.strip().rstrip(".")))]


# -- sentence forms ----------------------------------------------------------


@dataclass
class Nominal:
    kind: str  # mass, bare-plural, card, indefinite, named, definite, something, measure-of
    pred: Optional[str] = None
    card: Optional[Fraction] = None
    name: Optional[str] = None
    amount: Optional[units.Measure] = None


@dataclass
class SentenceForm:
    subject: str
    verb: str
    object_np: Optional[Nominal] = None
    goal: Optional[Nominal] = None
    path: Optional[tuple[str, Nominal]] = None
    proximal: Optional[tuple[units.Measure, Nominal]] = None
    adverbial: Optional[tuple[str, units.Measure]] = None
    bare_distance: Optional[units.Measure] = None


class _SentenceParser:
    def __init__(self, tokens: list[_Tok], lex: Lexicon) -> None:
        self.toks = tokens
        self.i = 0
        self.lex = lex

    def peek(self, k: int = 0) -> Optional[_Tok]:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message + (f" near {tok.text!r}" if tok else " at end of sentence"),
                         tok.pos if tok else len(self.toks))

    def classes(self, tok: Optional[_Tok]) -> dict[str, Token]:
        if tok is None:
            return {}
        return {t.cls: t for t in self.lex.lookup(tok.low)}

    def take(self, cls: str) -> Token:
        found = self.classes(self.peek()).get(cls)
        if found is None:
            self.fail(f"expected {cls}")
        self.i += 1
        return found

    def at(self, cls: str, surface: Optional[str] = None, k: int = 0) -> bool:
        tok = self.peek(k)
        found = self.classes(tok).get(cls)
        return found is not None and (surface is None or tok.low == surface)

    # numbers and measures

    def at_number(self, k: int = 0) -> bool:
        tok = self.peek(k)
        if tok is None:
            return False
        if _NUMERAL_RE.match(tok.text):
            return True
        return all(self.classes(_Tok(part, 0)).get("card-numeral") for part in tok.low.split("-"))

    def number(self) -> Fraction:
        tok = self.peek()
        if tok is not None and _NUMERAL_RE.match(tok.text):
            self.i += 1
            return Fraction(tok.text)
        total, current, seen = 0, 0, False
        while self.at_number():
            for part in self.peek().low.split("-"):
                tok = self.classes(_Tok(part, 0))["card-numeral"]
                value = int(tok.pred)
                if "multiplier" in tok.extra:
                    current = max(current, 1) * value
                else:
                    current += value
            seen = True
            self.i += 1
        if not seen:
            self.fail("expected a number")
        return Fraction(total + current)

    def at_measure(self, dimension: Optional[str] = None) -> bool:
        j = 0
        while self.at_number(j):
            j += 1
        if j == 0 or not self.at("unit", k=j):
            return False
        unit = self.classes(self.peek(j))["unit"].pred
        return dimension is None or units.dimension(unit) == dimension

    def measure(self) -> units.Measure:
        n = self.number()
        unit = self.take("unit").pred
        return units.Measure(n, unit)

    # noun phrases

    def noun(self) -> Token:
        return self.take("noun")

    def nominal(self) -> Nominal:
        if self.at("misc", "something"):
            self.i += 1
            return Nominal("something")
        if self.at_measure():
            amount = self.measure()
            if not self.at("prep", "of"):
                self.fail("expected 'of' after a quantity")
            self.i += 1
            noun = self.noun()
            if "mass" not in noun.extra:
                self.fail("'of' takes a mass noun")
            return Nominal("measure-of", noun.pred, amount=amount)
        if self.at_number():
            n = self.number()
            noun = self.noun()
            return Nominal("card", noun.pred, card=n)
        if self.at("det"):
            det = self.take("det")
            noun = self.noun()
            if det.pred != "a" or "count" not in noun.extra:
                self.fail("only 'a' with a singular count noun is supported here")
            return Nominal("indefinite", noun.pred)
        noun = self.noun()
        if "mass" in noun.extra:
            return Nominal("mass", noun.pred)
        if "plural" in noun.extra:
            return Nominal("bare-plural", noun.pred)
        name = self.peek()
        if name is None or not self._is_name(name):
            self.fail("a singular count noun needs a determiner or a name")
        self.i += 1
        return Nominal("named", noun.pred, name=name.text.upper() if len(name.text) == 1 else name.text.capitalize())

    def _is_name(self, tok: _Tok) -> bool:
        if not tok.text.isalpha():
            return False
        after = self.peek(1)
        return after is None or after.text == "," or bool(self.classes(after).get("prep"))

    def definite(self) -> Nominal:
        if not self.at("det", "the"):
            self.fail("expected 'the'")
        self.i += 1
        return Nominal("definite", self.noun().pred)

    # sentence

    def sentence(self) -> SentenceForm:
        subject = self.take("name").pred
        verb_tok = self.take("verb-past")
        form = SentenceForm(subject, verb_tok.pred)
        category = verb_tok.extra[0]
        if category == "motion-verb" and self.at_measure("distance"):
            form.bare_distance = self.measure()
        if category != "motion-verb" and self.peek() is not None and not self.at("prep"):
            form.object_np = self.nominal()
        while self.at("prep") and self.peek().low not in ("for", "in"):
            prep = self.take("prep")
            if prep.extra[:1] == ("role",) and prep.extra[1] == "goal":
                if form.goal is not None or category == "motion-verb":
                    self.fail("unexpected goal phrase")
                form.goal = self.nominal()
            elif prep.extra[:1] == ("path-pred",):
                if form.path is not None or category != "motion-verb":
                    self.fail("unexpected path phrase")
                form.path = (prep.pred, self.definite())
                if self.peek() is not None and self.peek().text == ",":
                    self.i += 1
                    amount = self.measure()
                    if not self.at("prep", "from"):
                        self.fail("expected 'from'")
                    self.i += 1
                    form.proximal = (amount, self.definite())
                    if self.peek() is not None and self.peek().text == ",":
                        self.i += 1
            else:
                self.fail(f"unexpected preposition {prep.surface!r}")
        if self.at("prep", "for") or self.at("prep", "in"):
            head = self.take("prep").pred
            m = self.measure()
            if head == "in" and m.dimension != "time":
                self.fail("'in' takes a temporal measure")
            if m.dimension not in ("time", "distance"):
                self.fail("adverbial measures are temporal or spatial")
            form.adverbial = (head, m)
        if self.peek() is not None:
            self.fail("unexpected trailing words")
        if category in ("transfer-verb", "fill-verb") and form.object_np is None:
            self.fail(f"{verb_tok.surface} needs an object")
        return form


def parse_form(sentence: str, lexicon: Optional[Lexicon] = None) -> SentenceForm:
    lex = lexicon or Lexicon.default()
    return _SentenceParser(tokenize(sentence), lex).sentence()


# -- building Avms -----------------------------------------------------------


class IndexAllocator:
    """Hands out index names, avoiding ``used``; definite and named
    nominals with the same description share one index."""

    def __init__(self, used: Iterable[str] = (), shared: Optional[dict] = None) -> None:
        self.used = set(used)
        self.shared = dict(shared or {})

    @classmethod
    def for_kb(cls, kb: Kb) -> "IndexAllocator":
        shared = {}
        for fact in kb.facts:
            for path, node in walk(fact):
                if not isinstance(node.index, str) or "pred" not in node:
                    continue
                if "name" in node:
                    shared.setdefault(("named", node["pred"], node["name"]), node.index)
                elif path[-1:] == ("ref-obj",):
                    shared.setdefault(("definite", node["pred"]), node.index)
        return cls(kb.indices(), shared)

    def take(self, preferred: str) -> str:
        if preferred not in self.used:
            self.used.add(preferred)
            return preferred
        prefix = preferred.rstrip("0123456789") or "x"
        n = 1
        while f"{prefix}{n}" in self.used:
            n += 1
        name = f"{prefix}{n}"
        self.used.add(name)
        return name

    def take_shared(self, key: tuple, preferred: str) -> str:
        if key not in self.shared:
            self.shared[key] = self.take(preferred)
        return self.shared[key]


def _measure_avm(m: units.Measure) -> Avm:
    return Avm("measure", {"number": m.number, "unit": m.unit})


def _nominal_avm(n: Nominal, alloc: IndexAllocator, continuum_something: bool = False) -> Avm:
    if n.kind == "something":
        return Avm("substance" if continuum_something else "object", index=alloc.take("x"))
    if n.kind in ("mass", "bare-plural"):
        return Avm("substance", {"pred": n.pred}, index=alloc.take("x"))
    if n.kind == "measure-of":
        obj = alloc.take("x1")
        stuff = Avm("substance", {"pred": n.pred}, index=alloc.take("x"))
        return Avm("object", {"composed-of": stuff, "quantity": _measure_avm(n.amount)}, index=obj)
    if n.kind == "card":
        return Avm("object", {"pred": n.pred, "card": n.card}, index=alloc.take("x"))
    if n.kind == "indefinite":
        return Avm("object", {"pred": n.pred}, index=alloc.take("x"))
    if n.kind == "named":
        index = alloc.take_shared(("named", n.pred, n.name), "x" + n.name.lower())
        return Avm("object", {"pred": n.pred, "name": n.name}, index=index)
    if n.kind == "definite":
        return Avm("top", {"pred": n.pred}, index=alloc.take_shared(("definite", n.pred), n.pred[0]))
    raise ValueError(f"unknown nominal kind {n.kind}")


def build_avm(form: SentenceForm, lexicon: Optional[Lexicon] = None,
              allocator: Optional[IndexAllocator] = None) -> Avm:
    """Compose the Avm for a parsed sentence form (no sortal checking)."""
    lex = lexicon or Lexicon.default()
    alloc = allocator or IndexAllocator()
    category = lex.entry(form.verb).category
    head, amount = form.adverbial or (None, None)
    wrapped = head == "for"
    root_index = alloc.take("e1")
    core_index = alloc.take("e") if wrapped else root_index

    feats: dict[str, object] = {"pred": form.verb, "agent": form.subject}
    patient = None
    if form.object_np is not None:
        something_continuum = category == "transfer-verb" and wrapped
        patient = _nominal_avm(form.object_np, alloc, something_continuum)
        feats["patient"] = patient
    if form.goal is not None:
        feats["goal"] = _nominal_avm(form.goal, alloc)
    path_sort = None
    if form.path is not None:
        prep, ref = form.path
        restriction = lex.entry(prep).path_sort_restriction
        if sort_leq(restriction, "delimited-path") or form.bare_distance is not None:
            path_sort = "delimited-path"
        else:
            path_sort = "non-delimited-path"
        path_feats: dict[str, object] = {"pred": prep, "ref-obj": _nominal_avm(ref, alloc)}
        if form.proximal is not None:
            dist, src = form.proximal
            path_feats["proximal-distance"] = Avm(
                "measure", {"ref-obj": _nominal_avm(src, alloc), "number": dist.number, "unit": dist.unit}
            )
        feats["path"] = Avm(path_sort, path_feats, index=alloc.take("p"))
    if form.bare_distance is not None:
        feats["distance"] = _measure_avm(form.bare_distance)

    if category == "motion-verb":
        if path_sort is not None:
            core_sort = "event" if path_sort == "delimited-path" else "process"
        else:
            core_sort = "event" if form.bare_distance is not None else "process"
        if head == "in":
            core_sort = "event"
    elif wrapped:
        core_sort = "process"
    elif head == "in":
        core_sort = "event"
    else:
        core_sort = "process" if patient is not None and patient.sort == "substance" else "event"

    if not wrapped:
        if head == "in":
            feats["duration"] = _measure_avm(amount)
        return Avm(core_sort, feats, index=root_index)
    core = Avm(core_sort, feats, index=core_index)
    slot = "duration" if amount.dimension == "time" else "distance"
    return Avm("event", {"composed-of": core, slot: _measure_avm(amount)}, index=root_index)


def parse_sentence(sentence: str, lexicon: Optional[Lexicon] = None, *,
                   allocator: Optional[IndexAllocator] = None, check_sorts: bool = True) -> Avm:
    """Translate a fragment sentence into its Avm.

    Raises :class:`ParseError` for sentences outside the fragment and
    :class:`SortalError` (carrying the diagnostics) for ill-sorted ones.
    """
    lex = lexicon or Lexicon.default()
    result = build_avm(parse_form(sentence, lex), lex, allocator)
    if check_sorts:
        diagnostics = check(result, lex)
        if diagnostics:
            raise SortalError(result, diagnostics)
    return result


# -- realization -------------------------------------------------------------


class _Realizer:
    def __init__(self, a: Avm, lex: Lexicon) -> None:
        self.lex = lex
        self.used: set[tuple[tuple[str, ...], str]] = set()
        self.root = a

    def use(self, path: tuple, *feats: str) -> None:
        for f in feats:
            self.used.add((path, f))

    def leftovers(self) -> list[tuple[str, ...]]:
        out = []
        for path, node in walk(self.root):
            for f in node.features:
                if (path, f) not in self.used:
                    out.append(path + (f,))
        return out

    def fail(self, message: str, *paths: tuple) -> None:
        raise RealizeError(message, paths)

    def measure(self, m: object, path: tuple) -> str:
        if not isinstance(m, Avm) or not isinstance(m.get("number"), Fraction) or not isinstance(m.get("unit"), str):
            self.fail("not a measure", path)
        self.use(path, "number", "unit")
        n, unit = m["number"], m["unit"]
        if unit not in units.UNIT_TABLE:
            self.fail(f"unknown unit {unit}", path + ("unit",))
        form = "singular" if n == 1 else "plural"
        return f"{number_words(n, self.lex)} {self.lex.surface('unit', unit, form) or unit}"

    def noun(self, pred: object, form: str, path: tuple) -> str:
        surface = self.lex.surface("noun", pred, form) if isinstance(pred, str) else None
        if surface is None:
            self.fail(f"no {form} noun for {pred!r}", path + ("pred",))
        self.use(path, "pred")
        return surface

    def nominal(self, n: object, path: tuple) -> str:
        if not isinstance(n, Avm):
            self.fail("expected a nominal description", path)
        pred = n.get("pred")
        if n.sort == "substance":
            if pred is None and len(n.features) == 0:
                return "something"
            kind = self.lex.noun_kind(pred) if isinstance(pred, str) else None
            return self.noun(pred, "mass" if kind == "mass" else "plural", path)
        if n.sort != "object":
            self.fail(f"cannot realize a {n.sort} nominal", path)
        if "quantity" in n and "composed-of" in n:
            stuff = n["composed-of"]
            self.use(path, "quantity", "composed-of")
            if not isinstance(stuff, Avm) or stuff.sort != "substance" or self.lex.noun_kind(stuff.get("pred")) != "mass":
                self.fail("'of' needs a mass substance", path + ("composed-of",))
            amount = self.measure(n["quantity"], path + ("quantity",))
            return f"{amount} of {self.noun(stuff['pred'], 'mass', path + ('composed-of',))}"
        if pred is None:
            if n.features:
                self.fail("an object without pred realizes only as 'something'", path)
            return "something"
        if "card" in n:
            card = n["card"]
            self.use(path, "card")
            if not isinstance(card, Fraction) or card.denominator != 1:
                self.fail("card must be a whole number", path + ("card",))
            form = "count" if card == 1 else "plural"
            return f"{number_words(card, self.lex)} {self.noun(pred, form, path)}"
        if "name" in n:
            self.use(path, "name")
            return f"{self.noun(pred, 'count', path)} {n['name']}"
        return f"a {self.noun(pred, 'count', path)}"

    def definite(self, n: object, path: tuple) -> str:
        if not isinstance(n, Avm) or n.sort != "top":
            self.fail("expected a definite reference object", path)
        return f"the {self.noun(n.get('pred'), 'count', path)}"

    def sentence(self) -> str:
        a, lex = self.root, self.lex
        adverbial = ""
        if "composed-of" in a:
            core, core_path = a["composed-of"], ("composed-of",)
            if a.sort != "event" or not isinstance(core, Avm):
                self.fail("composed-of realizes only on an event", ("composed-of",))
            self.use((), "composed-of")
            slots = [s for s in ("duration", "distance") if s in a]
            if len(slots) != 1:
                self.fail("a measure phrase needs exactly one of duration/distance", ())
            adverbial = f"for {self.measure(a[slots[0]], (slots[0],))}"
            self.use((), slots[0])
        else:
            core, core_path = a, ()
            if "duration" in a:
                if a.sort != "event":
                    self.fail("an in-duration realizes only on an event", ("duration",))
                adverbial = f"in {self.measure(a['duration'], ('duration',))}"
                self.use((), "duration")

        pred = core.get("pred")
        entry = lex.entry(pred) if isinstance(pred, str) else None
        if entry is None or entry.category not in ("transfer-verb", "fill-verb", "motion-verb"):
            self.fail("no verb to realize", core_path + ("pred",))
        self.use(core_path, "pred")
        agent = core.get("agent")
        subject = lex.surface("name", agent) if isinstance(agent, str) else None
        if subject is None:
            self.fail("agent must be a known name", core_path + ("agent",))
        self.use(core_path, "agent")
        words = [subject.capitalize(), lex.surface("verb-past", pred)]

        if "distance" in core and core_path == ():
            words.append(self.measure(core["distance"], ("distance",)))
            self.use((), "distance")
        if "patient" in core:
            words.append(self.nominal(core["patient"], core_path + ("patient",)))
        if "goal" in core:
            words.append(f"into {self.nominal(core['goal'], core_path + ('goal',))}")
            self.use(core_path, "goal")
        if "patient" in core:
            self.use(core_path, "patient")
        tail = ""
        if "path" in core:
            p, ppath = core["path"], core_path + ("path",)
            self.use(core_path, "path")
            if not isinstance(p, Avm) or lex.category(p.get("pred")) != "path-pred":
                self.fail("path needs a path predicate", ppath)
            self.use(ppath, "pred", "ref-obj")
            words.append(f"{p['pred']} {self.definite(p.get('ref-obj'), ppath + ('ref-obj',))}")
            if "proximal-distance" in p:
                prox, xpath = p["proximal-distance"], ppath + ("proximal-distance",)
                self.use(ppath, "proximal-distance")
                self.use(xpath, "ref-obj")
                src = self.definite(prox.get("ref-obj") if isinstance(prox, Avm) else None, xpath + ("ref-obj",))
                tail = f", {self.measure(prox, xpath)} from {src}"
        sentence = " ".join(words) + tail
        if adverbial:
            sentence += ("," if tail else "") + " " + adverbial
        leftovers = self.leftovers()
        if leftovers:
            self.fail("features outside the fragment", *leftovers)
        return sentence


def realize(a: Avm, lexicon: Optional[Lexicon] = None) -> str:
    """The canonical sentence whose parse is ``a`` (up to index names)."""
    lex = lexicon or Lexicon.default()
    diagnostics = check(a, lex)
    if diagnostics:
        raise RealizeError("not well-sorted", [d.path for d in diagnostics])
    return _Realizer(a, lex).sentence()


# -- paraphrases -------------------------------------------------------------


def _weaken_targets(n1: Fraction) -> list[Fraction]:
    step = 5 if n1 > 5 else 1
    top = (n1 - 1) // step * step if n1.denominator == 1 else n1 // step * step
    return [Fraction(n) for n in range(int(top), 0, -step)]


def paraphrases(kb: Kb, index: str, max: int = 20, lexicon: Optional[Lexicon] = None) -> list[str]:
    """Sentences realizing the facts about ``index`` and what follows from them."""
    lex = lexicon or Lexicon.default()
    facts = kb.facts_for(index)
    if not facts:
        raise KeyError(f"no fact with index {index!r}")
    candidates: list[Avm] = []
    for fact in facts:
        candidates.append(fact)
        try:
            candidates.append(quantity_derive(fact, kb, lex))
        except RuleError:
            pass
        duration = fact.get("duration")
        if "composed-of" in fact and isinstance(duration, Avm) and isinstance(duration.get("number"), Fraction):
            for n2 in _weaken_targets(duration["number"]):
                candidates.append(duration_weaken(fact, n2, kb, lex))
        candidates.extend(existential_weaken(fact, lex))
    out: list[str] = []
    for candidate in candidates:
        if len(out) >= max:
            break
        try:
            text = realize(candidate, lex)
        except RealizeError:
            continue
        if text not in out:
            out.append(text)
    return out[:max]
