"""Proto-arithmetic on concrete tokens.

:class:`TallyMachine` holds named piles of tokens and can only add one
token, remove one, move one between piles, or compare two piles.  Every
primitive costs one step.  The procedures below (equal splitting, the
sadaha walk, the sixth-measure tax, products by repeated addition) are
written against that machine, so their step counts show how much hand
work each would take.

Two bulk helpers, :meth:`TallyMachine.deal` and :meth:`TallyMachine.add_many`,
update the piles in one go for speed but charge exactly the steps the
token-by-token version would.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .errors import DomainError, InvalidMonth, NotDivisible, RangeError


class TallyMachine:
    """Named piles of tokens plus a step counter.  Not thread-safe."""

    def __init__(self, piles: Optional[Mapping[str, int]] = None):
        self.piles: Dict[str, int] = {}
        for name, count in (piles or {}).items():
            if isinstance(count, bool) or not isinstance(count, int) or count < 0:
                raise DomainError(f"pile {name!r} needs a natural token count, got {count!r}")
            self.piles[name] = count
        self.steps = 0

    def __repr__(self):
        return f"TallyMachine({self.piles!r}, steps={self.steps})"

    def total(self) -> int:
        return sum(self.piles.values())

    def count(self, pile: str) -> int:
        """Read off a pile's size (free: the pile *is* the number)."""
        return self.piles.get(pile, 0)

    def add_one(self, pile: str) -> None:
        self.piles[pile] = self.piles.get(pile, 0) + 1
        self.steps += 1

    def remove_one(self, pile: str) -> None:
        if not self.piles.get(pile):
            raise DomainError(f"pile {pile!r} is empty")
        self.piles[pile] -= 1
        self.steps += 1

    def move_one(self, src: str, dst: str) -> None:
        if not self.piles.get(src):
            raise DomainError(f"pile {src!r} is empty")
        self.piles[src] -= 1
        self.piles[dst] = self.piles.get(dst, 0) + 1
        self.steps += 1

    def compare(self, a: str, b: str) -> int:
        """-1, 0 or 1 as pile ``a`` is smaller, equal or larger than ``b``."""
        x, y = self.piles.get(a, 0), self.piles.get(b, 0)
        self.steps += 1
        return (x > y) - (x < y)

    def add_many(self, pile: str, n: int) -> None:
        """``n`` successive :meth:`add_one` calls."""
        self.piles[pile] = self.piles.get(pile, 0) + n
        self.steps += n

    def transfer(self, src: str, dst: str) -> int:
        """Move every token of ``src`` onto ``dst``, one at a time."""
        n = self.piles.get(src, 0)
        self.piles[src] = 0
        self.piles[dst] = self.piles.get(dst, 0) + n
        self.steps += n
        return n

    def deal(self, src: str, dests: Sequence[str]) -> int:
        """Deal ``src`` round-robin onto ``dests`` until it is empty.

        Full rounds are taken off the source by repeated subtraction and
        credited afterwards; the final partial round goes to the first
        piles in order.  Returns the number of single-token moves.
        """
        if not dests:
            raise DomainError("deal needs at least one destination pile")
        if src in dests:
            raise DomainError(f"cannot deal pile {src!r} onto itself")
        width = len(dests)
        left = self.piles.get(src, 0)
        rounds = 0
        while left >= width:
            left -= width
            rounds += 1
        moved = self.piles.get(src, 0)
        for i, dst in enumerate(dests):
            self.piles[dst] = self.piles.get(dst, 0) + rounds + (1 if i < left else 0)
        self.piles[src] = 0
        self.steps += moved
        return moved

    def run(self, program: "TallyProgram") -> "TallyResult":
        """Execute ``program`` on this machine and snapshot the outcome."""
        comparisons = []
        for op, *args in program.instructions:
            if op == "compare":
                comparisons.append(self.compare(*args))
            elif op in _OPS:
                getattr(self, _OPS[op])(*args)
            else:
                raise DomainError(f"unknown tally instruction {op!r}")
        return TallyResult(dict(self.piles), self.steps, tuple(comparisons))


_OPS = {
    "add": "add_one",
    "remove": "remove_one",
    "move": "move_one",
    "transfer": "transfer",
    "deal": "deal",
}


@dataclass(frozen=True)
class TallyProgram:
    """A straight-line list of instructions such as ``("move", "a", "b")``.

    Known operations: ``add``, ``remove``, ``move``, ``compare``,
    ``transfer`` and ``deal`` (whose second argument is a list of piles).
    """

    instructions: Tuple[tuple, ...] = ()
    piles: Mapping[str, int] = field(default_factory=dict)

    def execute(self) -> "TallyResult":
        return TallyMachine(self.piles).run(self)


@dataclass(frozen=True)
class TallyResult:
    piles: Dict[str, int]
    steps: int
    comparisons: Tuple[int, ...] = ()

    @property
    def total(self) -> int:
        return sum(self.piles.values())


# --- splitting ---------------------------------------------------------------

@dataclass(frozen=True)
class SplitResult:
    bodies: int
    size_per_body: int
    steps: int

    @property
    def total(self) -> int:
        return self.bodies * self.size_per_body


def _positive(n, what):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"{what} must be a positive integer, got {n!r}")


def equal_split(total: int, bodies: int) -> SplitResult:
    """Deal ``total`` tokens into ``bodies`` piles and check they came out equal.

    Steps are the ``total`` single-token moves plus one comparison of each
    pile against the last one.  Raises :class:`NotDivisible` carrying the
    number of piles left holding an extra token.
    """
    _positive(total, "total")
    _positive(bodies, "bodies")
    names = [f"body{i}" for i in range(1, bodies + 1)]
    m = TallyMachine({"heap": total})
    m.deal("heap", names)
    last = names[-1]
    larger = sum(1 for name in names[:-1] if m.compare(name, last) > 0)
    if larger:
        raise NotDivisible(total, bodies, larger)
    return SplitResult(bodies, m.count(last), m.steps)


def enumerate_splits(total: int, max_bodies: int = 24) -> List[SplitResult]:
    """Every equal split of ``total`` into at most ``max_bodies`` bodies, by trial."""
    _positive(total, "total")
    _positive(max_bodies, "max_bodies")
    found = []
    for bodies in range(1, max_bodies + 1):
        try:
            found.append(equal_split(total, bodies))
        except NotDivisible:
            continue
    return found


# --- products by repeated addition ------------------------------------------

class ProductResult(NamedTuple):
    product: int
    steps: int  # accumulation rounds
    token_steps: int


def repeated_addition_product(a: int, b: int) -> ProductResult:
    """``a * b`` by laying down ``a`` tokens ``b`` times."""
    for n, what in ((a, "a"), (b, "b")):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise DomainError(f"{what} must be a natural number, got {n!r}")
    m = TallyMachine({"rounds": b, "heap": 0})
    rounds = 0
    while m.piles["rounds"]:
        m.remove_one("rounds")
        m.add_many("heap", a)
        rounds += 1
    return ProductResult(m.count("heap"), rounds, m.steps)


# --- sadaha ------------------------------------------------------------------

SADAHA_DAYS = 6


def sadaha_partition(month_lengths: Iterable[int]) -> List[int]:
    """Six-day sets for each month, walked day by day.

    A 30-day month fills five sets of six.  A 29-day month runs out one
    day early, so its fifth set has five days.
    """
    sets = []
    for month, length in enumerate(month_lengths, start=1):
        if length not in (29, 30):
            raise InvalidMonth(f"month {month} has {length!r} days; expected 29 or 30")
        current = 0
        for _ in range(length):
            current += 1
            if current == SADAHA_DAYS:
                sets.append(current)
                current = 0
        if current:
            sets.append(current)
    return sets


# --- gavamayana schedule -----------------------------------------------------

MORNING_OBLATION = "morning_oblation"
EVENING_OBLATION = "evening_oblation"
PARVA_OFFERING = "parva_offering"
SEASON_START = "season_start"
AYANA_START = "ayana_start"

EVENT_KINDS = (MORNING_OBLATION, EVENING_OBLATION, PARVA_OFFERING, SEASON_START, AYANA_START)
_KIND_RANK = {kind: rank for rank, kind in enumerate(EVENT_KINDS)}


class RitualEvent(NamedTuple):
    day_index: int
    kind: str


def standard_year(days_in_year: int = 360, parva_length: int = 15,
                  seasons: int = 6, ayanas: int = 2) -> Dict[str, List[int]]:
    """Parva-end, season-start and ayana-start days for an idealised ritual year.

    Parvas close on the last day of each ``parva_length``-day fortnight;
    seasons and ayanas start at even spacing from day 0.
    """
    _positive(days_in_year, "days_in_year")
    return {
        "parva_days": list(range(parva_length - 1, days_in_year, parva_length)),
        "season_starts": list(range(0, days_in_year, days_in_year // seasons)),
        "ayana_starts": list(range(0, days_in_year, days_in_year // ayanas)),
    }


def gavamayana_schedule(days_in_year: int = 360, parva_days: Sequence[int] = (),
                        season_starts: Sequence[int] = (),
                        ayana_starts: Sequence[int] = ()) -> List[RitualEvent]:
    """All oblations of the year-long session, sorted by day then kind."""
    _positive(days_in_year, "days_in_year")
    events = []
    for day in range(days_in_year):
        events.append(RitualEvent(day, MORNING_OBLATION))
        events.append(RitualEvent(day, EVENING_OBLATION))
    for days, kind in ((parva_days, PARVA_OFFERING), (season_starts, SEASON_START),
                       (ayana_starts, AYANA_START)):
        for day in days:
            if isinstance(day, bool) or not isinstance(day, int) or not 0 <= day < days_in_year:
                raise RangeError(f"{kind} day {day!r} outside [0, {days_in_year})",
                                 component=kind, value=day)
            events.append(RitualEvent(day, kind))
    events.sort(key=lambda e: (e.day_index, _KIND_RANK[e.kind]))
    return events


# --- tax in kind -------------------------------------------------------------

class TaxResult(NamedTuple):
    tax: int
    kept: int
    remainder_untaxed: int
    steps: int


def tax_in_kind(measures: int, divisor: int = 6) -> TaxResult:
    """Set aside every ``divisor``-th measure of a stream as tax.

    A gauge pile of ``divisor - 1`` tokens is compared with the current
    group before each measure; when they match, the measure goes to tax
    and the group joins the kept heap.  A short last group stays untaxed.
    """
    if isinstance(measures, bool) or not isinstance(measures, int) or measures < 0:
        raise DomainError(f"measures must be a natural number, got {measures!r}")
    if isinstance(divisor, bool) or not isinstance(divisor, int) or divisor < 2:
        raise DomainError(f"divisor must be an integer >= 2, got {divisor!r}")
    m = TallyMachine({"stream": measures, "gauge": divisor - 1, "group": 0, "kept": 0, "tax": 0})
    while m.piles["stream"]:
        if m.compare("group", "gauge") == 0:
            m.move_one("stream", "tax")
            m.transfer("group", "kept")
        else:
            m.move_one("stream", "group")
    return TaxResult(m.count("tax"), m.count("kept"), m.count("group"), m.steps)
