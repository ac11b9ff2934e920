"""Inference over eventuality descriptions.

Two schematic rules are stated as Avm patterns with side conditions:

* duration weakening: an event composed of a process and lasting N1 units
  has, for every 0 <= N2 <= N1, a subevent composed of the same process
  lasting N2 units (fresh root index);
* quantity derivation: an event composed of a transfer process lasting N1
  units re-describes (same root index) as an event whose patient is an
  object composed of the transferred substance, with quantity
  ``rate(E, U2, U1) * N1`` U2s.

Existential weakening and the along/for-distance rewrite are structural
operations. :func:`entails` searches derivations breadth-first. It does not
enumerate N2: the value is read off the query's duration, or solved back
from a queried patient quantity through the rate.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Optional

from . import units
from .avm import (
    Avm, Clash, Value, Var, avm, fresh_name, get_path, indices, is_measure, rename, subsumes, substitute, unify, walk,
)
from .avmtext import canonical_text, format_number
from .lexicon import Lexicon
from .sorts import sort_leq

DEFAULT_MAX_DEPTH = 4


class RuleError(ValueError):
    kind = "rule-error"


class RuleInapplicable(RuleError):
    kind = "rule-inapplicable"


class SideConditionViolated(RuleError):
    kind = "side-condition-violated"


class RateUnknown(RuleError):
    kind = "rate-unknown"


class KbError(ValueError):
    pass


@dataclass(frozen=True)
class RateFact:
    """``rate`` quantity-units per time-unit for the process ``process_index``."""

    process_index: str
    quantity_unit: str
    time_unit: str
    rate: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "rate", units.to_fraction(self.rate))
        object.__setattr__(self, "quantity_unit", units.normalize_unit(self.quantity_unit))
        object.__setattr__(self, "time_unit", units.normalize_unit(self.time_unit))
        if self.rate <= 0:
            raise ValueError(f"rate must be positive, got {self.rate}")
        if units.dimension(self.time_unit) != "time":
            raise ValueError(f"{self.time_unit} is not a unit of time")
        if units.dimension(self.quantity_unit) == "time":
            raise ValueError(f"{self.quantity_unit} is not a unit of quantity")


@dataclass(frozen=True)
class Kb:
    """An immutable snapshot of facts and rate facts."""

    facts: tuple[Avm, ...] = ()
    rates: tuple[RateFact, ...] = ()

    def with_fact(self, fact: Avm) -> "Kb":
        if not fact.is_ground():
            raise KbError("facts must be ground")
        for other in self.facts_for(fact.index):
            try:
                unify(other, fact)
            except Clash as exc:
                raise KbError(f"fact {fact.index} conflicts with an existing description: {exc}") from None
        return Kb(self.facts + (fact,), self.rates)

    def with_rate(self, rate: RateFact) -> "Kb":
        return Kb(self.facts, self.rates + (rate,))

    def facts_for(self, index: object) -> list[Avm]:
        return [f for f in self.facts if index is not None and f.index == index]

    def fact(self, index: str) -> Avm:
        found = self.facts_for(index)
        if not found:
            raise KeyError(f"no fact with index {index!r}")
        return found[0]

    def indices(self) -> set[str]:
        return {i for f in self.facts for i in indices(f)}

    def rate(self, process_index: str, time_unit: str, quantity_unit: Optional[str] = None):
        """``(rate per time_unit, quantity unit)`` for the process, or ``None``."""
        for r in self.rates:
            if r.process_index != process_index:
                continue
            if quantity_unit is not None and r.quantity_unit != units.normalize_unit(quantity_unit):
                continue
            if units.dimension(time_unit) != "time":
                return None
            per_unit = units.convert(units.Measure(1, time_unit), r.time_unit).number
            return r.rate * per_unit, r.quantity_unit
        return None


# -- patterns ----------------------------------------------------------------


def match(pattern: Value, value: Value, bindings: Optional[dict] = None) -> Optional[dict]:
    """Bindings under which ``pattern`` describes ``value``, or ``None``.

    A pattern variable binds the whole value it meets; index variables bind
    index names. Features absent from the pattern are ignored.
    """
    b = dict(bindings or {})

    def bind(var: Var, val: object) -> bool:
        if var.name in b:
            return b[var.name] == val
        b[var.name] = val
        return True

    def go(p: Value, v: Value) -> bool:
        if isinstance(p, Var):
            return bind(p, v)
        if isinstance(p, Avm):
            if not isinstance(v, Avm) or not sort_leq(v.sort, p.sort):
                return False
            if isinstance(p.index, Var):
                if v.index is None or not bind(p.index, v.index):
                    return False
            elif p.index is not None and p.index != v.index:
                return False
            return all(k in v.features and go(pv, v[k]) for k, pv in p.items())
        return type(p) is type(v) and p == v

    return b if go(pattern, value) else None


@dataclass(frozen=True)
class Rule:
    name: str
    lhs: Avm
    rhs: Avm
    side_condition: str
    fresh: frozenset = field(default_factory=frozenset)
    solve: Optional[Callable[[dict, "Kb", Lexicon], dict]] = field(default=None, compare=False)

    def apply(self, fact: Avm, kb: "Kb", lexicon: Lexicon, given: Mapping = ()) -> tuple[Avm, dict]:
        b = match(self.lhs, fact)
        if b is None:
            raise RuleInapplicable(f"{self.name} does not apply to {fact.index}")
        b.update(given)
        if self.solve is not None:
            b = self.solve(b, kb, lexicon)
        for name in self.fresh:
            b[name] = fresh_name(_FRESH_BASE.get(name, name.lower()))
        result = substitute(self.rhs, b)
        if not result.is_ground():
            raise RuleInapplicable(f"{self.name}: unbound variables in conclusion")
        return result, b


_FRESH_BASE = {"E2": "e", "X1": "x"}


def _v(name: str) -> Var:
    return Var(name)


def _measure_pattern(number: str, unit: str) -> Avm:
    return Avm("measure", {"number": Var(number), "unit": Var(unit)})


def _solve_duration(b: dict, kb: Kb, lexicon: Lexicon) -> dict:
    if "N2" not in b:
        raise RuleInapplicable("duration_weaken needs a target duration N2")
    n1, n2 = b["N1"], units.to_fraction(b["N2"])
    if not isinstance(n1, Fraction):
        raise RuleInapplicable("duration number is not numeric")
    if n2 < 0 or n2 > n1:
        raise SideConditionViolated(f"need 0 <= N2 <= N1, got N2={format_number(n2)}, N1={format_number(n1)}")
    b["N2"] = n2
    return b


def _solve_quantity(b: dict, kb: Kb, lexicon: Lexicon) -> dict:
    if b["V"] not in lexicon.preds("transfer-verb"):
        raise RuleInapplicable(f"{b['V']} is not a transfer verb")
    patient = b["X"]
    if not isinstance(patient, Avm) or patient.sort != "substance":
        raise RuleInapplicable("the process patient is not a substance")
    found = kb.rate(b["E"], b["U1"], b.get("U2"))
    if found is None:
        raise RateUnknown(f"no rate known for process {b['E']} per {b['U1']}")
    rate, b["U2"] = found
    b["N2"] = rate * b["N1"]
    return b


DURATION_RULE = Rule(
    "duration_weaken",
    lhs=avm(_v("E1"), "event", composed_of=_v("P"), duration=_measure_pattern("N1", "U")),
    rhs=avm(_v("E2"), "event", composed_of=_v("P"), duration=_measure_pattern("N2", "U")),
    side_condition="N2 <= N1",
    fresh=frozenset({"E2"}),
    solve=_solve_duration,
)


def _quantity_rule(with_goal: bool) -> Rule:
    roles = {"agent": _v("A"), "patient": _v("X")}
    if with_goal:
        roles["goal"] = _v("G")
    dur = _measure_pattern("N1", "U1")
    qty = _measure_pattern("N2", "U2")
    lhs = avm(_v("E1"), "event", composed_of=avm(_v("E"), "process", pred=_v("V"), **roles), duration=dur)
    patient = avm(_v("X1"), "object", composed_of=_v("X"), quantity=qty)
    rhs = avm(_v("E1"), "event", pred=_v("V"), **{**roles, "patient": patient}, duration=dur)
    return Rule(
        "quantity_derive", lhs, rhs,
        side_condition="N2 = rate(E, U2, U1) * N1",
        fresh=frozenset({"X1"}),
        solve=_solve_quantity,
    )


QUANTITY_RULES = (_quantity_rule(True), _quantity_rule(False))


# -- the operations ----------------------------------------------------------


def _lex(lexicon: Optional[Lexicon]) -> Lexicon:
    return lexicon or Lexicon.default()


def duration_weaken(fact: Avm, n2: object, kb: Optional[Kb] = None, lexicon: Optional[Lexicon] = None) -> Avm:
    return _duration_weaken(fact, n2, kb or Kb(), _lex(lexicon))[0]


def _duration_weaken(fact: Avm, n2: object, kb: Kb, lexicon: Lexicon) -> tuple[Avm, dict]:
    return DURATION_RULE.apply(fact, kb, lexicon, {"N2": units.to_fraction(n2)})


def quantity_derive(fact: Avm, kb: Kb, lexicon: Optional[Lexicon] = None) -> Avm:
    return _quantity_derive(fact, kb, _lex(lexicon))[0]


def _quantity_derive(fact: Avm, kb: Kb, lexicon: Lexicon) -> tuple[Avm, dict]:
    inner = fact.get("composed-of")
    rule = QUANTITY_RULES[0] if isinstance(inner, Avm) and "goal" in inner else QUANTITY_RULES[1]
    return rule.apply(fact, kb, lexicon)


_PATIENT_PATHS = (("patient",), ("composed-of", "patient"))


def _drop_options(fact: Avm, lexicon: Lexicon) -> list[tuple[tuple, str]]:
    options = []
    for path, node in walk(fact):
        if not any(path[:len(p)] == p for p in _PATIENT_PATHS):
            continue
        for feat in ("card", "quantity", "name"):
            if feat in node:
                options.append((path, feat))
        if lexicon.category(node.get("pred")) == "nominal":
            options.append((path, "pred"))
    if sort_leq(fact.sort, "event") and "duration" in fact and "composed-of" not in fact:
        options.append(((), "duration"))
    return options


def _drop(node: Avm, path: tuple, feat: str) -> Avm:
    if not path:
        return node.without(feat)
    head, rest = path[0], path[1:]
    return node.with_feature(head, _drop(node[head], rest, feat))


def existential_weaken(fact: Avm, lexicon: Optional[Lexicon] = None) -> list[Avm]:
    """Weaker descriptions of the same entities, fewest drops first.

    Drops card/quantity, name, and nominal preds within the patient. A direct (in-)duration is
    droppable too, and must go whenever an amount is dropped: the measured
    interval belongs to the full amount.
    """
    lex = _lex(lexicon)
    options = _drop_options(fact, lex)
    has_duration = ((), "duration") in options
    results: list[Avm] = []
    seen: set[Avm] = set()
    for size in range(1, len(options) + 1):
        for combo in itertools.combinations(options, size):
            drops_amount = any(f in ("card", "quantity") for _, f in combo)
            if drops_amount and has_duration and ((), "duration") not in combo:
                continue
            out = fact
            for path, feat in combo:
                out = _drop(out, path, feat)
            if out not in seen:
                seen.add(out)
                results.append(out)
    return results


def _along_path(p: object, lexicon: Lexicon, sort: str) -> bool:
    return isinstance(p, Avm) and p.get("pred") == "along" and p.sort == sort


def path_measure_equiv(fact: Avm, lexicon: Optional[Lexicon] = None) -> Avm:
    """Rewrite between 'along X for D' and 'D along X' descriptions."""
    lex = _lex(lexicon)
    if fact.sort != "event" or "distance" not in fact:
        raise RuleInapplicable("path_measure_equiv needs an event with a distance")
    inner = fact.get("composed-of")
    if (
        isinstance(inner, Avm)
        and inner.sort == "process"
        and lex.category(inner.get("pred")) == "motion-verb"
        and _along_path(inner.get("path"), lex, "non-delimited-path")
    ):
        p = inner["path"]
        new_path = p.replace(index=fresh_name(p.index or "p"), sort="delimited-path")
        core = {k: v for k, v in inner.items() if k != "path"}
        root = {k: v for k, v in fact.items() if k != "composed-of"}
        return Avm("event", {**core, "path": new_path, **root}, index=fact.index)
    if (
        "composed-of" not in fact
        and lex.category(fact.get("pred")) == "motion-verb"
        and _along_path(fact.get("path"), lex, "delimited-path")
    ):
        p = fact["path"]
        new_path = p.replace(index=fresh_name(p.index or "p"), sort="non-delimited-path")
        core_feats = {k: v for k, v in fact.items() if k not in ("distance", "duration")}
        core_feats["path"] = new_path
        process = Avm("process", core_feats, index=fresh_name("e"))
        root = {k: v for k, v in fact.items() if k in ("distance", "duration")}
        return Avm("event", {"composed-of": process, **root}, index=fact.index)
    raise RuleInapplicable("path_measure_equiv needs an along-path with a distance")


# -- entailment --------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    rule: str
    bindings: tuple[tuple[str, str], ...] = ()

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.bindings)
        return f"{self.rule} [{inner}]"


@dataclass(frozen=True)
class Entailment:
    holds: bool
    witness: tuple[Step, ...] = ()
    derived: Optional[Avm] = None

    def __bool__(self) -> bool:
        return self.holds

    def format_witness(self) -> str:
        return "\n".join(f"{n}. {step}" for n, step in enumerate(self.witness, 1))


def _show(value: object) -> str:
    if isinstance(value, Fraction):
        return format_number(value)
    if isinstance(value, Avm):
        return value.index if isinstance(value.index, str) else canonical_text(value)
    return str(value)


def _step(rule: str, bindings: Mapping[str, object], names: tuple[str, ...]) -> Step:
    return Step(rule, tuple((n, _show(bindings[n])) for n in names if n in bindings))


def normalize_measures(a: Avm) -> Avm:
    """Convert every number/unit measure to its dimension's base unit."""
    feats = {}
    for k, v in a.items():
        if isinstance(v, Avm):
            v = normalize_measures(v)
            unit, number = v.get("unit"), v.get("number")
            if is_measure(v) and isinstance(number, Fraction) and number >= 0:
                try:
                    base = units.to_base(units.Measure(number, unit))
                except units.UnitError:
                    pass
                else:
                    v = v.with_feature("number", base.number).with_feature("unit", base.unit)
        feats[k] = v
    return Avm(a.sort, feats, index=a.index)


def alpha_key(a: Avm) -> str:
    """Canonical text after renaming indices in order of first occurrence."""
    order: dict[str, str] = {}
    for i in indices(a):
        order.setdefault(i, f"n{len(order)}")
    return canonical_text(rename(a, order))


def _query_duration(query: Avm) -> Optional[units.Measure]:
    d = query.get("duration")
    if is_measure(d) and isinstance(d["number"], Fraction):
        try:
            return units.Measure(d["number"], d["unit"])
        except (units.UnitError, TypeError):
            return None
    return None


def _duration_targets(state: Avm, query: Optional[Avm], kb: Kb) -> list[Fraction]:
    """N2 candidates in the unit of ``state``'s duration.

    One comes from a duration in the query; another is solved backwards from
    a queried patient quantity through the process rate.
    """
    d = state.get("duration")
    inner = state.get("composed-of")
    if query is None or not is_measure(d) or not isinstance(inner, Avm):
        return []
    targets = []
    wanted = _query_duration(query)
    try:
        if wanted is not None:
            targets.append(units.convert(wanted, d["unit"]).number)
        q = get_path(query, ("patient", "quantity"))
        found = kb.rate(inner.index, d["unit"]) if isinstance(inner.index, str) else None
        if found is not None and is_measure(q) and isinstance(q["number"], Fraction):
            rate, qunit = found
            amount = units.convert(units.Measure(q["number"], q["unit"]), qunit).number
            targets.append(amount / rate)
    except (units.UnitError, TypeError):
        pass
    return list(dict.fromkeys(targets))


def successors(state: Avm, kb: Kb, lexicon: Lexicon, query: Optional[Avm] = None) -> Iterator[tuple[Avm, Step]]:
    """One-step derivations from ``state``; duration targets come from ``query``."""
    try:
        out, b = _quantity_derive(state, kb, lexicon)
        yield out, _step("quantity_derive", b, ("E1", "E", "V", "N1", "U1", "N2", "U2", "X1"))
    except RuleError:
        pass
    for n2 in _duration_targets(state, query, kb):
        try:
            out, b = _duration_weaken(state, n2, kb, lexicon)
        except RuleError:
            continue
        yield out, _step("duration_weaken", b, ("E1", "E2", "N1", "N2", "U"))
    try:
        out = path_measure_equiv(state, lexicon)
        yield out, Step("path_measure_equiv", (("E1", str(state.index)),))
    except RuleError:
        pass
    for out in existential_weaken(state, lexicon):
        yield out, Step("existential_weaken", (("index", str(state.index)),))


def entails(kb: Kb, query: Avm, *, max_depth: int = DEFAULT_MAX_DEPTH, lexicon: Optional[Lexicon] = None) -> Entailment:
    """Does some fact, or something derivable from one, fall under ``query``?

    Breadth-first over rule applications up to ``max_depth``; the first
    (shortest) derivation found is returned as the witness.
    """
    lex = _lex(lexicon)
    goal = normalize_measures(query)

    def hit(a: Avm) -> bool:
        return subsumes(goal, normalize_measures(a))

    for fact in kb.facts:
        start = (Step("fact", (("index", str(fact.index)),)),)
        if hit(fact):
            return Entailment(True, start, fact)
    frontier = deque((fact, (Step("fact", (("index", str(fact.index)),)),)) for fact in kb.facts)
    seen = {alpha_key(f) for f in kb.facts}
    while frontier:
        state, steps = frontier.popleft()
        if len(steps) - 1 >= max_depth:
            continue
        for out, step in successors(state, kb, lex, query):
            key = alpha_key(out)
            if key in seen:
                continue
            seen.add(key)
            path = steps + (step,)
            if hit(out):
                return Entailment(True, path, out)
            # weakened descriptions feed only the final check
            if step.rule != "existential_weaken":
                frontier.append((out, path))
    return Entailment(False)
