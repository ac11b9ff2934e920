"""Sorted attribute-value matrices.

An :class:`Avm` is an immutable tree: an optional index variable, a sort
from :mod:`eventcalc.sorts`, and a mapping from feature names to values.
Values are atoms (``str``), exact numbers (``Fraction``), nested Avms, or
pattern variables (:class:`Var`, legal only inside rule patterns).

Co-reference is expressed by equal index names rather than shared nodes;
unification aliases the index names of the nodes it merges.
"""

from __future__ import annotations

import itertools
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Union

from .sorts import BOTTOM, TOP, check_sort, sort_leq, sort_meet

FEATURE_ORDER = (
    "index", "sort", "pred", "composed-of", "agent", "patient", "goal",
    "path", "ref-obj", "card", "quantity", "proximal-distance", "duration",
    "distance", "name", "number", "unit",
)
MEASURE_FEATURES = frozenset({"duration", "quantity", "distance", "proximal-distance"})

_RANK = {name: i for i, name in enumerate(FEATURE_ORDER)}
_FEATURE_RE = re.compile(r"[a-z][a-z0-9]*(?:-[a-z0-9]+)*\Z")
_INDEX_RE = re.compile(r"[a-z][A-Za-z0-9_']*\Z")
_VAR_RE = re.compile(r"[A-Z][A-Za-z0-9_']*\Z")
_ATOM_RE = re.compile(r"[A-Za-z][A-Za-z0-9_'-]*\Z")


def feature_key(name: str) -> tuple[int, str]:
    """Sort key giving the canonical emission order of feature names."""
    return (_RANK.get(name, len(FEATURE_ORDER)), name)


@dataclass(frozen=True)
class Var:
    """A schematic pattern variable such as ``E1`` or ``N2``."""

    name: str

    def __post_init__(self) -> None:
        if not _VAR_RE.match(self.name):
            raise ValueError(f"bad pattern variable name: {self.name!r}")

    def __str__(self) -> str:
        return "?" + self.name


Value = Union[str, Fraction, "Avm", Var]
Index = Union[str, Var, None]


def _coerce_value(value: object) -> Value:
    if isinstance(value, (Avm, Var, Fraction)):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not AVM values")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _ATOM_RE.match(value):
            raise ValueError(f"bad atom: {value!r}")
        return value
    raise TypeError(f"not an AVM value: {value!r}")


def _check_index(index: object) -> Index:
    if index is None or isinstance(index, Var):
        return index
    if isinstance(index, str) and _INDEX_RE.match(index):
        return index
    raise ValueError(f"bad index variable: {index!r}")


class Avm:
    __slots__ = ("index", "sort", "_features", "_hash")

    def __init__(
        self,
        sort: str = TOP,
        features: Mapping[str, object] | Iterable[tuple[str, object]] = (),
        *,
        index: Index = None,
    ) -> None:
        pairs = features.items() if isinstance(features, Mapping) else features
        feats: dict[str, Value] = {}
        for name, value in pairs:
            if name in ("index", "sort") or not _FEATURE_RE.match(name):
                raise ValueError(f"bad feature name: {name!r}")
            if name in feats:
                raise ValueError(f"duplicate feature: {name}")
            feats[name] = _coerce_value(value)
        self.index = _check_index(index)
        self.sort = check_sort(sort)
        self._features = {k: feats[k] for k in sorted(feats, key=feature_key)}
        self._hash: Optional[int] = None

    @property
    def features(self) -> Mapping[str, Value]:
        return MappingProxyType(self._features)

    def get(self, name: str, default: object = None):
        return self._features.get(name, default)

    def __getitem__(self, name: str) -> Value:
        return self._features[name]

    def __contains__(self, name: object) -> bool:
        return name in self._features

    def items(self):
        return self._features.items()

    def replace(self, **changes) -> "Avm":
        index = changes.pop("index", self.index)
        sort = changes.pop("sort", self.sort)
        if changes:
            raise TypeError(f"unexpected arguments: {sorted(changes)}")
        return Avm(sort, self._features, index=index)

    def with_feature(self, name: str, value: object) -> "Avm":
        feats = dict(self._features)
        feats[name] = value
        return Avm(self.sort, feats, index=self.index)

    def without(self, *names: str) -> "Avm":
        feats = {k: v for k, v in self._features.items() if k not in names}
        return Avm(self.sort, feats, index=self.index)

    def is_ground(self) -> bool:
        return not any(True for _ in variables(self))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Avm):
            return NotImplemented
        return (
            self.index == other.index
            and self.sort == other.sort
            and self._features == other._features
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.index, self.sort, tuple(self._features.items())))
        return self._hash

    def __repr__(self) -> str:
        parts = []
        if self.index is not None:
            parts.append(f"index: {self.index}")
        parts.append(f"sort: {self.sort}")
        parts.extend(f"{k}: {_repr_value(v)}" for k, v in self._features.items())
        return "[" + ", ".join(parts) + "]"


def _repr_value(value: Value) -> str:
    if isinstance(value, Avm):
        return repr(value)
    return str(value)


def avm(index: Index, sort: str = TOP, **features: object) -> Avm:
    """Build an Avm with keyword features; underscores become hyphens."""
    return Avm(sort, {k.replace("_", "-"): v for k, v in features.items()}, index=index)


def measure(number: object, unit: str) -> Avm:
    return Avm("measure", {"number": number, "unit": unit})


def is_measure(value: object) -> bool:
    return isinstance(value, Avm) and value.sort == "measure" and set(value.features) >= {"number", "unit"}


Path = tuple


def get_path(a: Value, path: Iterable[str]) -> Optional[Value]:
    """Follow ``path`` from ``a``; ``None`` when any hop is missing."""
    node: Value = a
    for name in path:
        if not isinstance(node, Avm) or name not in node:
            return None
        node = node[name]
    return node


def walk(a: Avm, path: tuple[str, ...] = ()) -> Iterator[tuple[tuple[str, ...], Avm]]:
    """Yield ``(path, node)`` for every Avm node, pre-order."""
    yield path, a
    for name, value in a.items():
        if isinstance(value, Avm):
            yield from walk(value, path + (name,))


def variables(value: Value) -> Iterator[Var]:
    if isinstance(value, Var):
        yield value
    elif isinstance(value, Avm):
        if isinstance(value.index, Var):
            yield value.index
        for v in value._features.values():
            yield from variables(v)


def indices(value: Value) -> Iterator[str]:
    if isinstance(value, Avm):
        if isinstance(value.index, str):
            yield value.index
        for v in value._features.values():
            yield from indices(v)


# -- unification -------------------------------------------------------------


class Clash(Exception):
    """Unification failure at ``path`` between ``left`` and ``right``."""

    def __init__(self, path: tuple[str, ...], left: object, right: object) -> None:
        self.path = tuple(path)
        self.left = left
        self.right = right
        where = ".".join(self.path) or "(root)"
        super().__init__(f"clash at {where}: {_describe(left)} vs {_describe(right)}")


def _describe(value: object) -> str:
    if isinstance(value, Avm):
        return f"[{value.sort}]"
    return str(value)


class _Unifier:
    def __init__(self) -> None:
        self.parent: dict[str, str] = {}
        self.bindings: dict[str, object] = {}

    def find(self, name: str) -> str:
        root = name
        while self.parent.get(root, root) != root:
            root = self.parent[root]
        while name != root:
            self.parent[name], name = root, self.parent.get(name, name)
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            lo, hi = sorted((ra, rb))
            self.parent[hi] = lo

    def deref_index(self, i: Index) -> Index:
        while isinstance(i, Var) and i.name in self.bindings:
            i = self.bindings[i.name]
        return i

    def unify_index(self, i: Index, j: Index) -> Index:
        i, j = self.deref_index(i), self.deref_index(j)
        if i is None or i == j:
            return j if i is None else i
        if j is None:
            return i
        if isinstance(i, Var):
            self.bindings[i.name] = j
            return j
        if isinstance(j, Var):
            self.bindings[j.name] = i
            return i
        self.union(i, j)
        return i

    def unify(self, x: Value, y: Value, path: tuple[str, ...]) -> Value:
        if isinstance(x, Var):
            if x.name in self.bindings:
                return self.unify(self.bindings[x.name], y, path)
            if not (isinstance(y, Var) and y.name == x.name):
                self.bindings[x.name] = y
            return y
        if isinstance(y, Var):
            return self.unify(y, x, path)
        if isinstance(x, Avm) and isinstance(y, Avm):
            sort = sort_meet(x.sort, y.sort)
            if sort == BOTTOM:
                raise Clash(path, x.sort, y.sort)
            index = self.unify_index(x.index, y.index)
            feats: dict[str, Value] = {}
            for name in sorted(set(x._features) | set(y._features), key=feature_key):
                if name in x._features and name in y._features:
                    feats[name] = self.unify(x[name], y[name], path + (name,))
                else:
                    feats[name] = x._features.get(name, y._features.get(name))
            return Avm(sort, feats, index=index)
        if isinstance(x, Avm) or isinstance(y, Avm) or type(x) is not type(y) or x != y:
            raise Clash(path, x, y)
        return x

    def resolve(self, value: Value, seen: frozenset = frozenset()) -> Value:
        if isinstance(value, Var):
            if value.name in self.bindings and value.name not in seen:
                return self.resolve(self.bindings[value.name], seen | {value.name})
            return value
        if isinstance(value, Avm):
            index = self.deref_index(value.index)
            if isinstance(index, str):
                index = self.find(index)
            feats = {k: self.resolve(v, seen) for k, v in value._features.items()}
            return Avm(value.sort, feats, index=index)
        return value


def unify(a: Avm, b: Avm) -> Avm:
    """Most specific Avm described by both ``a`` and ``b``.

    Sorts combine by meet; shared features unify recursively; the index
    names of merged nodes are aliased to the alphabetically least name of
    their class throughout the result. Raises :class:`Clash` on failure.
    """
    u = _Unifier()
    return u.resolve(u.unify(a, b, ()))


# -- subsumption -------------------------------------------------------------


class _Subsumer:
    def __init__(self) -> None:
        self.index_map: dict[object, object] = {}

    def bind(self, key: object, target: object) -> bool:
        if key in self.index_map:
            return self.index_map[key] == target
        self.index_map[key] = target
        return True

    def check(self, g: Value, s: Value) -> bool:
        if isinstance(g, Var):
            return self.bind(g, s)
        if isinstance(g, Avm):
            if not isinstance(s, Avm) or not sort_leq(s.sort, g.sort):
                return False
            if g.index is not None:
                if s.index is None or not self.bind(g.index, s.index):
                    return False
            for name, value in g._features.items():
                if name not in s._features or not self.check(value, s._features[name]):
                    return False
            return True
        return type(g) is type(s) and g == s


def subsumes(general: Value, specific: Value) -> bool:
    """True iff ``general`` is a (possibly partial) description of ``specific``.

    Index names in ``general`` act as variables: each must map consistently
    onto one index name of ``specific``.
    """
    return _Subsumer().check(general, specific)


# -- renaming ----------------------------------------------------------------

_counter = itertools.count(1)
_counter_lock = threading.Lock()
_FRESH_SUFFIX = re.compile(r"'\d+\Z")


def fresh_name(base: str) -> str:
    with _counter_lock:
        n = next(_counter)
    return f"{_FRESH_SUFFIX.sub('', base)}'{n}"


def rename(value: Value, mapping: Mapping[str, str]) -> Value:
    """Rename index names (and pattern-variable names) per ``mapping``."""
    if isinstance(value, Var):
        return Var(mapping.get(value.name, value.name))
    if isinstance(value, Avm):
        index = value.index
        if isinstance(index, Var):
            index = Var(mapping.get(index.name, index.name))
        elif index is not None:
            index = mapping.get(index, index)
        return Avm(value.sort, {k: rename(v, mapping) for k, v in value.items()}, index=index)
    return value


def rename_fresh(a: Avm) -> Avm:
    """Replace every index and pattern variable by a fresh name, consistently."""
    names = {i: fresh_name(i) for i in indices(a)}
    names.update({v.name: fresh_name(v.name) for v in variables(a)})
    return rename(a, names)


def alpha_equal(a: Value, b: Value) -> bool:
    """Structural equality up to a consistent bijective renaming of names."""
    forward: dict[object, object] = {}
    backward: dict[object, object] = {}

    def same_name(x: object, y: object) -> bool:
        if (x is None) != (y is None) or isinstance(x, Var) != isinstance(y, Var):
            return False
        if x is None:
            return True
        if forward.setdefault(x, y) != y or backward.setdefault(y, x) != x:
            return False
        return True

    def go(x: Value, y: Value) -> bool:
        if isinstance(x, Var) or isinstance(y, Var):
            return isinstance(x, Var) and isinstance(y, Var) and same_name(x, y)
        if isinstance(x, Avm) and isinstance(y, Avm):
            if x.sort != y.sort or x._features.keys() != y._features.keys():
                return False
            if not same_name(x.index, y.index):
                return False
            return all(go(v, y._features[k]) for k, v in x._features.items())
        return type(x) is type(y) and x == y

    return go(a, b)


def substitute(value: Value, bindings: Mapping[str, object]) -> Value:
    """Replace bound pattern variables by their values."""
    if isinstance(value, Var):
        if value.name in bindings:
            return _coerce_value(bindings[value.name])
        return value
    if isinstance(value, Avm):
        index = value.index
        if isinstance(index, Var) and index.name in bindings:
            index = bindings[index.name]
        return Avm(value.sort, {k: substitute(v, bindings) for k, v in value.items()}, index=index)
    return value
