"""Well-sortedness of eventuality descriptions.

The checker enforces a closed set of named constraints:

C1 composed-of-needs-continuum
    a composed-of filler has a continuum sort and its host is compatible
    with the filler's delimited counterpart.
C2 process-incremental-continuum
    a process fills its verb's incremental role with a continuum.
C3 event-incremental-delimited
    an event carrying pred directly fills its incremental role with a
    delimited entity.
C4 constant-roles-delimited
    agent, goal and ref-obj are never continua.
C5 path-pred-restriction
    a path's sort satisfies the sortal restriction of its predicate.
C6 distance-needs-delimited-or-measure
    distance sits on an event with a delimited path of its own, or on an
    event composed of a process whose path is not delimited.
C7 fill-verbs-event-only
    fill never takes a delimited patient under process predication, nor a
    continuum patient under direct event predication.

Unknown predicates are reported as ``unknown-pred``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .avm import Avm, walk
from .lexicon import Lexicon
from .sorts import BOTTOM, compatible, delimited_counterpart, is_continuum, sort_leq, sort_meet

CONSTRAINTS = {
    "composed-of-needs-continuum": "C1",
    "process-incremental-continuum": "C2",
    "event-incremental-delimited": "C3",
    "constant-roles-delimited": "C4",
    "path-pred-restriction": "C5",
    "distance-needs-delimited-or-measure": "C6",
    "fill-verbs-event-only": "C7",
    "unknown-pred": "unknown-pred",
}

# the sort an incremental role's filler takes under each kind of predication
_CONTINUUM_FOR_ROLE = {"patient": "substance", "path": "non-delimited-path"}
_DELIMITED_FOR_ROLE = {"patient": "object", "path": "delimited-path"}
CONSTANT_ROLES = ("agent", "goal", "ref-obj")


@dataclass(frozen=True)
class Diagnostic:
    constraint: str
    path: tuple[str, ...]
    message: str
    offending_sorts: Optional[tuple[str, str]] = None

    @property
    def code(self) -> str:
        return CONSTRAINTS[self.constraint]

    def __str__(self) -> str:
        return f"{self.constraint} at {dotted(self.path)}: {self.message}"


def dotted(path: tuple[str, ...]) -> str:
    return ".".join(path) if path else "(root)"


def _a(word: str) -> str:
    return ("an " if word[:1] in "aeiou" else "a ") + word


def sort_of(value: object) -> str:
    if isinstance(value, Avm):
        return value.sort
    if isinstance(value, str):
        return "atom-sort"
    return "number-sort"


def check(a: Avm, lexicon: Optional[Lexicon] = None) -> list[Diagnostic]:
    """All constraint violations in ``a``, ordered by path then constraint."""
    lex = lexicon or Lexicon.default()
    found: list[Diagnostic] = []
    for path, node in walk(a):
        found.extend(_check_node(node, path, lex))
    return sorted(set(found), key=lambda d: (d.path, d.code, d.message))


def _check_node(node: Avm, path: tuple, lex: Lexicon):
    pred = node.get("pred")
    entry = lex.entry(pred) if isinstance(pred, str) else None
    if isinstance(pred, str) and entry is None:
        yield Diagnostic("unknown-pred", path, f"no lexical entry for {pred!r}")

    if "composed-of" in node:
        yield from _composed_of(node, path)

    for role in CONSTANT_ROLES:
        filler = node.get(role)
        if isinstance(filler, Avm) and is_continuum(filler.sort):
            yield Diagnostic(
                "constant-roles-delimited", path + (role,),
                f"{role} must stay constant, but {filler.sort} is a continuum",
                (filler.sort, "object"),
            )

    if entry is not None and entry.category in ("transfer-verb", "motion-verb"):
        yield from _incremental(node, path, entry.incremental_role)
    if entry is not None and entry.category == "fill-verb":
        yield from _fill(node, path)

    if "path" in node and isinstance(node["path"], Avm):
        yield from _path_restriction(node["path"], path + ("path",), lex)

    if "distance" in node:
        yield from _distance(node, path)


def _composed_of(node: Avm, path: tuple):
    filler = node["composed-of"]
    where = path + ("composed-of",)
    fsort = sort_of(filler)
    if not is_continuum(fsort):
        required = _continuum_for(node.sort)
        yield Diagnostic(
            "composed-of-needs-continuum", where,
            f"composed-of must map to a continuum, found {fsort}"
            + (f" where {required} is required" if required else ""),
            (fsort, required or "process"),
        )
        return
    counterpart = delimited_counterpart(fsort)
    if sort_meet(node.sort, counterpart) == BOTTOM:
        yield Diagnostic(
            "composed-of-needs-continuum", where,
            f"{_a(node.sort)} cannot be composed of {_a(fsort)}",
            (node.sort, counterpart),
        )


def _continuum_for(host_sort: str) -> Optional[str]:
    for continuum in ("process", "substance", "non-delimited-path"):
        if sort_leq(host_sort, delimited_counterpart(continuum)):
            return continuum
    return None


def _incremental(node: Avm, path: tuple, role: str):
    filler = node.get(role)
    if filler is None:
        return
    fsort = sort_of(filler)
    where = path + (role,)
    if sort_leq(node.sort, "process"):
        want = _CONTINUUM_FOR_ROLE[role]
        if not compatible(fsort, want):
            yield Diagnostic(
                "process-incremental-continuum", where,
                f"process predication needs {_a(want)} {role}, found {fsort}",
                (fsort, want),
            )
    elif sort_leq(node.sort, "event"):
        want = _DELIMITED_FOR_ROLE[role]
        if not compatible(fsort, want):
            yield Diagnostic(
                "event-incremental-delimited", where,
                f"event predication needs {_a(want)} {role}, found {fsort}",
                (fsort, want),
            )


def _fill(node: Avm, path: tuple):
    patient = node.get("patient")
    if patient is None:
        return
    psort = sort_of(patient)
    where = path + ("patient",)
    if sort_leq(node.sort, "process") and not is_continuum(psort):
        yield Diagnostic(
            "fill-verbs-event-only", where,
            f"fill encodes a set terminal point; {_a(psort)} patient rules out process predication",
            (psort, "substance"),
        )
    elif sort_leq(node.sort, "event") and is_continuum(psort):
        yield Diagnostic(
            "fill-verbs-event-only", where,
            f"fill over {_a(psort)} is only available under composed-of",
            (psort, "object"),
        )


def _path_restriction(p: Avm, where: tuple, lex: Lexicon):
    pred = p.get("pred")
    entry = lex.entry(pred) if isinstance(pred, str) else None
    if entry is None or entry.category != "path-pred":
        return
    want = entry.path_sort_restriction
    if not compatible(p.sort, want):
        yield Diagnostic(
            "path-pred-restriction", where,
            f"{pred} requires {_a(want)}, found {p.sort}",
            (p.sort, want),
        )


def _distance(node: Avm, path: tuple):
    where = path + ("distance",)
    path_sort = None
    if sort_leq(node.sort, "process"):
        yield Diagnostic(
            "distance-needs-delimited-or-measure", where,
            "distance cannot be predicated of a process", (node.sort, "event"),
        )
        return
    if "composed-of" in node:
        inner = node["composed-of"]
        inner_path = inner.get("path") if isinstance(inner, Avm) else None
        path_sort = sort_of(inner_path) if inner_path is not None else None
        if path_sort is not None and sort_leq(path_sort, "delimited-path"):
            yield Diagnostic(
                "distance-needs-delimited-or-measure", where,
                "a for-distance measure cannot range over a delimited path",
                (path_sort, "non-delimited-path"),
            )
        return
    if "pred" in node:
        own = node.get("path")
        path_sort = sort_of(own) if own is not None else None
        if path_sort is not None and not sort_leq(path_sort, "delimited-path"):
            yield Diagnostic(
                "distance-needs-delimited-or-measure", where,
                f"distance is restricted to delimited paths, found {path_sort}",
                (path_sort, "delimited-path"),
            )
        return
    yield Diagnostic(
        "distance-needs-delimited-or-measure", where,
        "distance needs a predicated path or a composed-of measure", (node.sort, "event"),
    )


@dataclass(frozen=True)
class AdverbialCompatibility:
    for_temporal: bool
    in_temporal: bool
    for_distance: bool


def adverbial_compatibility(a: Avm, lexicon: Optional[Lexicon] = None) -> AdverbialCompatibility:
    """Which of for/in temporal and for-distance adverbials the core admits.

    The pred-bearing core is re-sorted as a process (the filler a for-measure
    introduces) and as an event (direct predication) and each variant is
    checked.
    """
    lex = lexicon or Lexicon.default()
    if not sort_leq(a.sort, "eventuality") and a.sort != "top":
        raise ValueError(f"not an eventuality description: sort {a.sort}")
    core = a["composed-of"] if isinstance(a.get("composed-of"), Avm) else a
    core = core.without("duration", "distance")
    for_temporal = not check(core.replace(sort="process"), lex)
    in_temporal = not check(core.replace(sort="event"), lex)
    for_distance = False
    if for_temporal and lex.category(core.get("pred")) == "motion-verb":
        p = core.get("path")
        if p is None:
            for_distance = True
        elif isinstance(p, Avm):
            entry = lex.entry(p.get("pred")) if isinstance(p.get("pred"), str) else None
            restriction = entry.path_sort_restriction if entry else "path"
            for_distance = compatible(restriction, "non-delimited-path")
    return AdverbialCompatibility(for_temporal, in_temporal, for_distance)
