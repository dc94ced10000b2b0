"""Mixed-radix naming of the prati-muhūrta segments of a yuga.

A segment is addressed by six 1-based components, most significant first:
year, month, parva, ahorātra slot, muhūrta, prati-muhūrta.  With the
default radices (5, 12, 2, 30, 15, 15) there are 810,000 segments, and
:func:`encode_index` / :func:`decode_name` are mutually inverse on them.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from math import prod
from typing import Dict, NamedTuple, Optional, Sequence, Tuple, Union

from .arith import Rational, multiply, reduce
from .errors import DomainError, RangeError, VedangaError
from .tables import load_table

COMPONENTS = ("year", "month", "parva", "ahoratra_slot", "muhurta", "prati_muhurta")

MINUTES_PER_DAY = 1440


class RoundTripError(VedangaError, AssertionError):
    pass


@dataclass(frozen=True)
class RadixVector:
    radices: Tuple[int, ...] = (5, 12, 2, 30, 15, 15)

    def __post_init__(self):
        radices = tuple(self.radices)
        if len(radices) != len(COMPONENTS):
            raise DomainError(f"need {len(COMPONENTS)} radices, got {len(radices)}")
        for r in radices:
            if isinstance(r, bool) or not isinstance(r, int) or r < 1:
                raise DomainError(f"every radix must be an integer >= 1, got {r!r}")
        object.__setattr__(self, "radices", radices)
        object.__setattr__(self, "total", prod(radices))

    @classmethod
    def parse(cls, text: str) -> "RadixVector":
        try:
            return cls(tuple(int(p) for p in text.replace(",", " ").split()))
        except ValueError:
            raise DomainError(f"cannot parse radices {text!r}") from None


DEFAULT_RADICES = RadixVector()


class TimeSegmentName(NamedTuple):
    year: int
    month: int
    parva: int
    ahoratra_slot: int
    muhurta: int
    prati_muhurta: int

    def __str__(self):
        return " ".join(str(c) for c in self)


def total_segments(rv: RadixVector = DEFAULT_RADICES) -> int:
    return rv.total


def _as_int(value):
    if type(value) is int:
        return value
    if isinstance(value, bool):
        return None
    try:
        return operator.index(value)
    except TypeError:
        return None


def encode_index(i: int, rv: RadixVector = DEFAULT_RADICES) -> TimeSegmentName:
    index = i if type(i) is int else _as_int(i)
    if index is None or not 0 <= index < rv.total:
        raise RangeError(f"segment index must be in [0, {rv.total - 1}], got {i!r}",
                         component="index", value=i)
    r0, r1, r2, r3, r4, r5 = rv.radices
    index, d5 = divmod(index, r5)
    index, d4 = divmod(index, r4)
    index, d3 = divmod(index, r3)
    index, d2 = divmod(index, r2)
    d0, d1 = divmod(index, r1)
    return TimeSegmentName(d0 + 1, d1 + 1, d2 + 1, d3 + 1, d4 + 1, d5 + 1)


def decode_name(name: Sequence[int], rv: RadixVector = DEFAULT_RADICES) -> int:
    if len(name) != len(COMPONENTS):
        raise RangeError(f"a name has {len(COMPONENTS)} components, got {len(name)}")
    r0, r1, r2, r3, r4, r5 = rv.radices
    if type(name) is TimeSegmentName or type(name) is tuple:
        y, m, p, a, mu, pm = name
        if (type(y) is type(m) is type(p) is type(a) is type(mu) is type(pm) is int
                and 0 < y <= r0 and 0 < m <= r1 and 0 < p <= r2 and 0 < a <= r3
                and 0 < mu <= r4 and 0 < pm <= r5):
            return (((((y - 1) * r1 + m - 1) * r2 + p - 1) * r3 + a - 1) * r4 + mu - 1) * r5 + pm - 1
    # slow path: validates and reports the offending component
    values = [v if type(v) is int else _as_int(v) for v in name]
    index = 0
    for component, value, v, radix in zip(COMPONENTS, name, values, rv.radices):
        if v is None or not 0 < v <= radix:
            raise RangeError(f"{component} must be in [1, {radix}], got {value!r}",
                             component=component, value=value)
        index = index * radix + v - 1
    return index


def muhurta_duration(muhurtas_per_day: int = 30) -> Rational:
    """Minutes in one muhūrta (48 with 30 muhūrtas to the day)."""
    return reduce(Rational(MINUTES_PER_DAY, muhurtas_per_day))


def segment_duration(rv: RadixVector = DEFAULT_RADICES, muhurtas_per_day: int = 30) -> Rational:
    """Length of one prati-muhūrta in minutes, on a 1440-minute day."""
    return reduce(Rational(MINUTES_PER_DAY, muhurtas_per_day * rv.radices[5]))


def ahoratra_slot_duration(rv: RadixVector = DEFAULT_RADICES,
                           muhurtas_per_day: int = 30) -> Optional[Rational]:
    """Minutes spanned by one ahorātra slot, or ``None`` if it is not a clean part of a day.

    A slot holds ``radices[4]`` muhūrtas.  With the defaults that is 15
    muhūrtas, i.e. the day half or the night half (720 minutes).  The
    length is reported only when the slot evenly divides the day or is a
    whole number of days.
    """
    minutes = multiply(rv.radices[4], muhurta_duration(muhurtas_per_day))
    per_day = Rational(MINUTES_PER_DAY) / minutes
    if per_day.is_integer() or (minutes / MINUTES_PER_DAY).is_integer():
        return minutes
    return None


@dataclass
class NameTables:
    """Optional display names for each component, keyed by 1-based ordinal."""

    tables: Dict[str, Dict[str, str]] = field(default_factory=dict)

    @classmethod
    def load(cls, names_dir=None) -> "NameTables":
        tables = {}
        for component in COMPONENTS:
            table = load_table(f"{component}.tsv", names_dir)
            if table:
                tables[component] = table
        return cls(tables)

    def display(self, name: TimeSegmentName) -> Tuple[str, ...]:
        return tuple(
            self.tables.get(component, {}).get(str(value), str(value))
            for component, value in zip(COMPONENTS, name)
        )

    def resolve(self, component: str, token: Union[str, int]) -> int:
        """Ordinal for ``token``, which may be a number or a display name."""
        token = str(token).strip()
        if token.isdigit():
            return int(token)
        table = self.tables.get(component, {})
        for key, label in table.items():
            if label.casefold() == token.casefold():
                return int(key)
        raise RangeError(f"unknown {component} name {token!r}", component=component, value=token)

    def parse(self, tokens: Sequence[str]) -> TimeSegmentName:
        if len(tokens) != len(COMPONENTS):
            raise RangeError(f"a name has {len(COMPONENTS)} components, got {len(tokens)}")
        return TimeSegmentName(*(self.resolve(c, t) for c, t in zip(COMPONENTS, tokens)))


def roundtrip_check(rv: RadixVector = DEFAULT_RADICES) -> int:
    """Decode every encoded index; return the number checked.

    Raises :class:`RoundTripError` at the first index that does not round-trip or
    breaks lexicographic order.
    """
    previous = None
    n = total_segments(rv)
    for i in range(n):
        name = encode_index(i, rv)
        if decode_name(name, rv) != i:
            raise RoundTripError(f"index {i} decodes to {decode_name(name, rv)}")
        if previous is not None and not previous < name:
            raise RoundTripError(f"names out of order at index {i}")
        previous = name
    return n
