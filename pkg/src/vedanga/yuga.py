"""Five-year yuga calendar kernel.

Mean-motion model of the sun and moon on a fixed circle of 27 nakshatras.
Day 0 is the winter solstice on which sun, moon and the first nakshatra
(Dhaniṣṭhā) are in conjunction at new moon.  All positions are exact
rationals; indices are 0-based here and 1-based in :class:`DayRecord`
fields meant for display (year, season, parva, tithi ordinal).

The assignment of tithis and parvas to civil days uses a plain floor
mapping of mean motion.  Omitted-tithi bookkeeping is not modelled.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import floor
from typing import Dict, Iterable, List, NamedTuple, Optional

from .arith import Rational, format_mixed, multiply, reduce
from .errors import DomainError, RangeError
from .tables import load_table

BRIGHT, DARK = "bright", "dark"
NORTHERN, SOUTHERN = "northern", "southern"
FULL_MOON, NEW_MOON = "full", "new"


@dataclass(frozen=True)
class YugaConfig:
    years_per_yuga: int = 5
    civil_days_per_year: int = 366
    civil_days_per_yuga: int = 1830
    synodic_months: int = 62
    sidereal_months: int = 67
    nakshatra_count: int = 27
    parvas_per_yuga: int = 124
    tithis_per_paksha: int = 15
    muhurtas_per_ahoratra: int = 30
    prati_muhurtas_per_muhurta: int = 15
    seasons_per_year: int = 6

    def __post_init__(self):
        if self.civil_days_per_yuga != self.years_per_yuga * self.civil_days_per_year:
            raise DomainError("civil_days_per_yuga must equal years_per_yuga * civil_days_per_year")
        if self.parvas_per_yuga != 2 * self.synodic_months:
            raise DomainError("parvas_per_yuga must be twice synodic_months")
        if self.sidereal_months - self.synodic_months != self.years_per_yuga:
            raise DomainError("sidereal_months - synodic_months must equal years_per_yuga")
        if self.civil_days_per_year % 2:
            raise DomainError("civil_days_per_year must split into two equal ayanas")

    @property
    def lunar_nakshatras_per_yuga(self) -> int:
        """Nakshatras the moon passes in one yuga (1809 by default)."""
        return self.sidereal_months * self.nakshatra_count

    @property
    def tithis_per_yuga(self) -> int:
        return 2 * self.tithis_per_paksha * self.synodic_months

    @property
    def moon_per_parva(self) -> Rational:
        return reduce(Rational(self.lunar_nakshatras_per_yuga, self.parvas_per_yuga))

    @property
    def moon_per_day(self) -> Rational:
        return reduce(Rational(self.lunar_nakshatras_per_yuga, self.civil_days_per_yuga))

    @property
    def sun_per_day(self) -> Rational:
        return reduce(Rational(self.nakshatra_count, self.civil_days_per_year))

    @property
    def tithis_per_day(self) -> Rational:
        return reduce(Rational(self.tithis_per_yuga, self.civil_days_per_yuga))

    @property
    def mean_tithi_days(self) -> Rational:
        return reduce(Rational(self.civil_days_per_yuga, self.tithis_per_yuga))

    @property
    def ayana_days(self) -> int:
        return self.civil_days_per_year // 2


DEFAULT = YugaConfig()


class SkyPosition(NamedTuple):
    """Place on the nakshatra circle: whole nakshatras passed plus a fraction."""

    nakshatra_index: int
    offset: Rational

    @property
    def arc(self) -> Rational:
        """Position as one rational in nakshatra units, ``0 <= arc < 27``."""
        return self.offset + self.nakshatra_index

    def __str__(self):
        return format_mixed(self.arc)

    def name(self, table: Optional[Dict[str, str]] = None) -> str:
        table = nakshatra_names() if table is None else table
        return table.get(str(self.nakshatra_index + 1), str(self.nakshatra_index + 1))


class Tithi(NamedTuple):
    paksha: str
    ordinal: int

    def name(self, table: Optional[Dict[str, str]] = None) -> str:
        table = tithi_names() if table is None else table
        if self.ordinal == 15:
            key = f"{self.paksha}-15"
            return table.get(key, table.get("15", "15"))
        return table.get(str(self.ordinal), str(self.ordinal))


@dataclass(frozen=True)
class DayRecord:
    day_index: int
    year_in_yuga: int
    ayana: str
    season_index: int
    parva_index: int
    tithi: Tithi
    moon: SkyPosition
    sun: SkyPosition


def nakshatra_names(names_dir=None) -> Dict[str, str]:
    return load_table("nakshatras.tsv", names_dir)


def tithi_names(names_dir=None) -> Dict[str, str]:
    return load_table("tithis.tsv", names_dir)


def _check(value, lo, hi, what):
    if isinstance(value, bool) or not isinstance(value, int) or not lo <= value <= hi:
        raise RangeError(f"{what} must be an integer in [{lo}, {hi}], got {value!r}",
                         component=what, value=value)


def position_from_arc(arc: Rational, cfg: YugaConfig = DEFAULT) -> SkyPosition:
    """Wrap an arc (nakshatra units) onto the circle and split it."""
    wrapped = reduce(arc) % cfg.nakshatra_count
    index = floor(wrapped)
    return SkyPosition(index, reduce(wrapped - index))


def moon_position_at_parva_end(k: int, cfg: YugaConfig = DEFAULT) -> SkyPosition:
    _check(k, 0, cfg.parvas_per_yuga, "parva count")
    return position_from_arc(multiply(k, cfg.moon_per_parva), cfg)


def moon_position_at_day(d: int, cfg: YugaConfig = DEFAULT) -> SkyPosition:
    _check(d, 0, cfg.civil_days_per_yuga, "day")
    return position_from_arc(multiply(d, cfg.moon_per_day), cfg)


def sun_position_at_day(d: int, cfg: YugaConfig = DEFAULT) -> SkyPosition:
    _check(d, 0, cfg.civil_days_per_yuga, "day")
    return position_from_arc(multiply(d, cfg.sun_per_day), cfg)


def parva_end_time(k: int, cfg: YugaConfig = DEFAULT) -> Rational:
    """Elapsed days (exact) at the close of the ``k``-th parva."""
    _check(k, 0, cfg.parvas_per_yuga, "parva count")
    return reduce(Rational(k * cfg.civil_days_per_yuga, cfg.parvas_per_yuga))


def parva_end_phase(k: int) -> str:
    """Odd parvas close at full moon, even ones at new moon."""
    return FULL_MOON if k % 2 else NEW_MOON


def tithi_serial(d: int, cfg: YugaConfig = DEFAULT) -> int:
    """Count of whole tithis elapsed by the start of day ``d``."""
    _check(d, 0, cfg.civil_days_per_yuga, "day")
    return floor(multiply(d, cfg.tithis_per_day))


def tithi_from_serial(t: int, cfg: YugaConfig = DEFAULT) -> Tithi:
    per_paksha = cfg.tithis_per_paksha
    paksha = BRIGHT if t % (2 * per_paksha) < per_paksha else DARK
    return Tithi(paksha, t % per_paksha + 1)


def tithi_at_day(d: int, cfg: YugaConfig = DEFAULT) -> Tithi:
    _check(d, 0, cfg.civil_days_per_yuga - 1, "day")
    return tithi_from_serial(tithi_serial(d, cfg), cfg)


def calendar_record(d: int, cfg: YugaConfig = DEFAULT) -> DayRecord:
    _check(d, 0, cfg.civil_days_per_yuga - 1, "day")
    year, day_of_year = divmod(d, cfg.civil_days_per_year)
    ayana = NORTHERN if (d // cfg.ayana_days) % 2 == 0 else SOUTHERN
    season = floor(Rational(day_of_year * cfg.seasons_per_year, cfg.civil_days_per_year)) + 1
    parva = floor(Rational(d * cfg.parvas_per_yuga, cfg.civil_days_per_yuga)) + 1
    return DayRecord(
        day_index=d,
        year_in_yuga=year + 1,
        ayana=ayana,
        season_index=season,
        parva_index=parva,
        tithi=tithi_at_day(d, cfg),
        moon=moon_position_at_day(d, cfg),
        sun=sun_position_at_day(d, cfg),
    )


def yuga_table(days: Optional[Iterable[int]] = None, cfg: YugaConfig = DEFAULT) -> List[DayRecord]:
    """Records for ``days`` (default: the whole yuga, in order)."""
    if days is None:
        days = range(cfg.civil_days_per_yuga)
    return [calendar_record(d, cfg) for d in days]
