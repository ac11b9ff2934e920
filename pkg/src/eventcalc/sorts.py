"""The closed sort lattice.

The lattice is a tree under ``top`` with ``bottom`` added below every sort::

    top
     +- eventuality   -> event | process
     +- material      -> object | substance
     +- path          -> delimited-path | non-delimited-path
     +- measure
     +- atom-sort
     +- number-sort

Each continuum sort has exactly one delimited counterpart: process/event,
substance/object and non-delimited-path/delimited-path.
"""

from __future__ import annotations

TOP = "top"
BOTTOM = "bottom"

_PARENT: dict[str, str] = {
    "eventuality": TOP,
    "material": TOP,
    "path": TOP,
    "measure": TOP,
    "atom-sort": TOP,
    "number-sort": TOP,
    "event": "eventuality",
    "process": "eventuality",
    "object": "material",
    "substance": "material",
    "delimited-path": "path",
    "non-delimited-path": "path",
}

SORTS: tuple[str, ...] = (TOP, *_PARENT, BOTTOM)

CONTINUUM_SORTS = frozenset({"process", "substance", "non-delimited-path"})
DELIMITED_SORTS = frozenset({"event", "object", "delimited-path"})

_COUNTERPART = {
    "process": "event",
    "substance": "object",
    "non-delimited-path": "delimited-path",
}


class UnknownSortError(ValueError):
    def __init__(self, name: object) -> None:
        super().__init__(f"unknown sort: {name!r}")
        self.name = name


def check_sort(name: str) -> str:
    if name not in SORTS:
        raise UnknownSortError(name)
    return name


def _ancestors(name: str) -> list[str]:
    chain = [name]
    while name in _PARENT:
        name = _PARENT[name]
        chain.append(name)
    return chain


def sort_leq(a: str, b: str) -> bool:
    """True iff ``a`` is ``b`` or lies below it."""
    check_sort(a)
    check_sort(b)
    if a == BOTTOM or b == TOP:
        return True
    if b == BOTTOM:
        return False
    return b in _ancestors(a)


def sort_meet(a: str, b: str) -> str:
    """Greatest lower bound; ``bottom`` means the two sorts are incompatible.

    Because the proper sorts form a tree, two sorts have a non-bottom meet
    only when one lies above the other.
    """
    if sort_leq(a, b):
        return a
    if sort_leq(b, a):
        return b
    return BOTTOM


def compatible(a: str, b: str) -> bool:
    return sort_meet(a, b) != BOTTOM


def is_continuum(s: str) -> bool:
    check_sort(s)
    return s in CONTINUUM_SORTS


def is_delimited(s: str) -> bool:
    check_sort(s)
    return s in DELIMITED_SORTS


def delimited_counterpart(s: str) -> str:
    """Map a continuum sort to the sort of the entities composed of it."""
    check_sort(s)
    try:
        return _COUNTERPART[s]
    except KeyError:
        raise ValueError(f"{s} is not a continuum sort") from None


def continuum_counterpart(s: str) -> str:
    check_sort(s)
    for continuum, delimited in _COUNTERPART.items():
        if delimited == s:
            return continuum
    raise ValueError(f"{s} is not a delimited sort")
