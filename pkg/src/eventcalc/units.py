"""Exact rational measures and the fixed unit table."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction, str]


@dataclass(frozen=True)
class UnitInfo:
    dimension: str
    factor: Fraction
    singular: str


# factors are multipliers to the base unit of each dimension
UNIT_TABLE: dict[str, UnitInfo] = {
    "seconds": UnitInfo("time", Fraction(1), "second"),
    "minutes": UnitInfo("time", Fraction(60), "minute"),
    "gallons": UnitInfo("volume", Fraction(1), "gallon"),
    "yards": UnitInfo("distance", Fraction(1), "yard"),
    "miles": UnitInfo("distance", Fraction(1760), "mile"),
    "individuals": UnitInfo("count", Fraction(1), "individual"),
}

BASE_UNITS = {"time": "seconds", "volume": "gallons", "distance": "yards", "count": "individuals"}

_ALIASES = {info.singular: unit for unit, info in UNIT_TABLE.items()}


class UnitError(ValueError):
    pass


def normalize_unit(unit: str) -> str:
    """Return the canonical (plural) unit atom for ``unit``."""
    if unit in UNIT_TABLE:
        return unit
    if unit in _ALIASES:
        return _ALIASES[unit]
    raise UnitError(f"unknown unit: {unit!r}")


def dimension(unit: str) -> str:
    return UNIT_TABLE[normalize_unit(unit)].dimension


def factor(unit: str) -> Fraction:
    return UNIT_TABLE[normalize_unit(unit)].factor


def to_fraction(value: Number) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, float):
        raise TypeError("use exact rationals, not floats")
    return Fraction(value)


@dataclass(frozen=True)
class Measure:
    number: Fraction
    unit: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "number", to_fraction(self.number))
        object.__setattr__(self, "unit", normalize_unit(self.unit))
        if self.number < 0:
            raise UnitError(f"negative measure: {self.number}")

    @property
    def dimension(self) -> str:
        return UNIT_TABLE[self.unit].dimension

    def in_base(self) -> Fraction:
        return self.number * UNIT_TABLE[self.unit].factor

    def __str__(self) -> str:
        return f"{self.number} {self.unit}"


def _same_dimension(a: str, b: str) -> None:
    da, db = dimension(a), dimension(b)
    if da != db:
        raise UnitError(f"cannot relate {a} ({da}) to {b} ({db})")


def convert(m: Measure, target_unit: str) -> Measure:
    target_unit = normalize_unit(target_unit)
    _same_dimension(m.unit, target_unit)
    return Measure(m.in_base() / UNIT_TABLE[target_unit].factor, target_unit)


def to_base(m: Measure) -> Measure:
    return convert(m, BASE_UNITS[m.dimension])


def measure_leq(a: Measure, b: Measure) -> bool:
    _same_dimension(a.unit, b.unit)
    return a.in_base() <= b.in_base()
