"""Large-number series: decimal, centesimal, and iterated squaring.

Names come from the ``number_names.tsv`` table (power of ten, name,
tradition).  Only names present there are attached to series terms;
other terms get a positional label like ``"term 7"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple

from .arith import digit_count, natural, power, square_iterate
from .errors import DomainError
from .tables import builtin_rows, read_rows

YAJURVEDA = "yajurveda"
LALITAVISTARA = "lalitavistara"
JAIN = "jain"
VARIANT = "variant"
TRADITIONS = (YAJURVEDA, LALITAVISTARA, JAIN, VARIANT)


@dataclass(frozen=True)
class NamedNumber:
    name: str
    value: int
    tradition: str
    named: bool = True  # False for positional labels

    def __post_init__(self):
        if natural(self.value) == 0:
            raise DomainError("named numbers are positive")
        if self.tradition not in TRADITIONS:
            raise DomainError(f"unknown tradition {self.tradition!r}")


class NameRow(NamedTuple):
    value: int
    name: str
    tradition: str


def load_number_names(path=None) -> List[NameRow]:
    """Rows of the number-name table; ``path`` overrides the shipped file."""
    raw = read_rows(path, 3) if path is not None else builtin_rows("number_names.tsv", 3)
    rows = []
    for exponent, name, tradition in raw:
        if tradition not in TRADITIONS:
            raise DomainError(f"unknown tradition {tradition!r} for {name!r}")
        try:
            exp = natural(int(exponent))
        except ValueError:
            raise DomainError(f"bad exponent {exponent!r} for {name!r}") from None
        rows.append(NameRow(power(10, exp), name, tradition))
    return rows


def _names_for(rows, tradition) -> Dict[int, str]:
    return {row.value: row.name for row in rows if row.tradition == tradition}


def decimal_series(rows: Optional[List[NameRow]] = None) -> List[NamedNumber]:
    """Thirteen names from eka (1) to parārdha (10**12), each ten times the last."""
    names = _names_for(load_number_names() if rows is None else rows, YAJURVEDA)
    series = []
    for k in range(13):
        value = power(10, k)
        if value not in names:
            raise DomainError(f"no yajurveda name for 10^{k}")
        series.append(NamedNumber(names[value], value, YAJURVEDA))
    return series


@dataclass(frozen=True)
class SeriesSpec:
    start_value: int = 10**9
    step_factor: int = 100
    term_count: int = 24
    names: Mapping[int, str] = field(default_factory=dict)  # term number -> name

    def __post_init__(self):
        if natural(self.start_value) == 0:
            raise DomainError("start_value must be positive")
        if natural(self.step_factor) < 2:
            raise DomainError("step_factor must be at least 2")
        if natural(self.term_count) < 1:
            raise DomainError("term_count must be at least 1")


def centesimal_series(spec: Optional[SeriesSpec] = None,
                      rows: Optional[List[NameRow]] = None,
                      tradition: str = LALITAVISTARA) -> List[NamedNumber]:
    """Terms ``start * factor**(n-1)`` for ``n = 1..term_count``.

    Defaults run from a hundred koṭi (10**9) by hundreds for 24 terms, so
    10**53 (tallakṣana) is term 23 and 10**55 (dhvajāgravatī) term 24.
    Names are taken from ``spec.names`` first, then from the table rows of
    ``tradition`` by value.
    """
    spec = SeriesSpec() if spec is None else spec
    by_value = _names_for(load_number_names() if rows is None else rows, tradition)
    series = []
    value = spec.start_value
    for n in range(1, spec.term_count + 1):
        name = spec.names.get(n) or by_value.get(value)
        if name:
            series.append(NamedNumber(name, value, tradition))
        else:
            series.append(NamedNumber(f"term {n}", value, tradition, named=False))
        value *= spec.step_factor
    return series


@dataclass(frozen=True)
class JainProduct:
    sixth_square: int
    fifth_square: int
    result: NamedNumber

    @property
    def digits(self) -> int:
        return digit_count(self.result.value)


def jain_computation() -> JainProduct:
    """Two's sixth square times its fifth square, built by repeated squaring."""
    sixth = square_iterate(2, 6)
    fifth = square_iterate(2, 5)
    result = NamedNumber("sixth square of two × fifth square of two", sixth * fifth, JAIN)
    return JainProduct(sixth, fifth, result)


def jain_population() -> NamedNumber:
    return jain_computation().result


def variant_lookup(value: int, rows: Optional[List[NameRow]] = None) -> List[Tuple[str, str]]:
    """Every ``(name, tradition)`` recorded for ``value``, in table order."""
    value = natural(value)
    rows = load_number_names() if rows is None else rows
    return [(row.name, row.tradition) for row in rows if row.value == value]
