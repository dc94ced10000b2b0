import pytest
from hypothesis import given, settings, strategies as st

from vedanga.arith import multiply
from vedanga.errors import DomainError, InvalidMonth, NotDivisible, RangeError
from vedanga.tally import (AYANA_START, EVENT_KINDS, EVENING_OBLATION, MORNING_OBLATION,
                           PARVA_OFFERING, SEASON_START, TallyMachine, TallyProgram,
                           enumerate_splits, equal_split, gavamayana_schedule,
                           repeated_addition_product, sadaha_partition, standard_year,
                           tax_in_kind)

from oracles import divisors_by_scan, tax_group_walk

SB_DIVISORS = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24]


# --- machine -----------------------------------------------------------------

def test_primitives_count_steps():
    m = TallyMachine({"a": 2})
    m.add_one("b")
    m.move_one("a", "b")
    assert m.compare("a", "b") == -1
    m.remove_one("b")
    assert m.piles == {"a": 1, "b": 1}
    assert m.steps == 4
    with pytest.raises(DomainError):
        TallyMachine({"x": 0}).remove_one("x")
    with pytest.raises(DomainError):
        TallyMachine({"x": -1})


def test_deal_matches_token_by_token():
    for total in range(0, 40):
        for width in range(1, 9):
            fast = TallyMachine({"heap": total})
            fast.deal("heap", [f"p{i}" for i in range(width)])
            slow = TallyMachine({"heap": total})
            i = 0
            while slow.piles["heap"]:
                slow.move_one("heap", f"p{i % width}")
                i += 1
            for p in range(width):
                assert fast.count(f"p{p}") == slow.count(f"p{p}")
            assert fast.steps == slow.steps == total


pile_names = st.sampled_from(["a", "b", "c", "d"])
instruction = st.one_of(
    st.tuples(st.just("add"), pile_names),
    st.tuples(st.just("remove"), pile_names),
    st.tuples(st.just("move"), pile_names, pile_names),
    st.tuples(st.just("compare"), pile_names, pile_names),
    st.tuples(st.just("transfer"), pile_names, pile_names),
    st.builds(lambda src, dests: ("deal", src, [d for d in dests if d != src] or ["z"]),
              pile_names, st.lists(pile_names, min_size=1, max_size=4, unique=True)),
)


@given(st.dictionaries(pile_names, st.integers(0, 50)), st.lists(instruction, max_size=40))
def test_token_conservation(piles, instructions):
    m = TallyMachine(piles)
    expected = m.total()
    last_steps = 0
    for ins in instructions:
        op = ins[0]
        if op in ("remove", "move") and not m.count(ins[1]):
            continue
        m.run(TallyProgram((ins,)))
        if op == "add":
            expected += 1
        elif op == "remove":
            expected -= 1
        assert m.total() == expected
        assert m.steps >= last_steps
        last_steps = m.steps


def test_program_execute():
    prog = TallyProgram((("move", "a", "b"), ("compare", "a", "b"), ("deal", "a", ["c", "d"])),
                        {"a": 5})
    result = prog.execute()
    assert result.piles == {"a": 0, "b": 1, "c": 2, "d": 2}
    assert result.comparisons == (1,)
    assert result.steps == 1 + 1 + 4
    assert result.total == 5
    with pytest.raises(DomainError):
        TallyProgram((("multiply", "a"),)).execute()


# --- splitting ---------------------------------------------------------------

@pytest.mark.parametrize("total, bodies, size", [(720, 4, 180), (720, 24, 30), (720, 10, 72),
                                                 (720, 6, 120), (720, 1, 720)])
def test_equal_split(total, bodies, size):
    r = equal_split(total, bodies)
    assert (r.bodies, r.size_per_body) == (bodies, size)
    assert r.steps == total + bodies - 1


def test_equal_split_not_divisible():
    with pytest.raises(NotDivisible) as info:
        equal_split(720, 7)
    assert info.value.remainder == 6 == 720 - 7 * 102


def test_enumerate_splits():
    found = enumerate_splits(720, 24)
    assert [r.bodies for r in found] == SB_DIVISORS == divisors_by_scan(720, 24)
    assert [r.bodies for r in enumerate_splits(6, 6)] == [1, 2, 3, 6]
    assert len(enumerate_splits(720, 720)) == 30 == len(divisors_by_scan(720, 720))


def test_split_success_iff_divisible():
    for n in range(1, 301):
        for k in range(1, 31):
            if n % k == 0:
                r = equal_split(n, k)
                assert r.size_per_body * k == n
            else:
                with pytest.raises(NotDivisible) as info:
                    equal_split(n, k)
                assert info.value.remainder == n % k


# --- products ----------------------------------------------------------------

def test_product_examples():
    assert repeated_addition_product(180, 4).product == 720
    assert repeated_addition_product(33, 0).product == 0
    r = repeated_addition_product(72, 10)
    assert (r.product, r.steps) == (720, 10)
    assert r.token_steps == 720 + 10


@given(st.integers(0, 300), st.integers(0, 300))
def test_product_agrees_with_multiply(a, b):
    assert repeated_addition_product(a, b).product == multiply(a, b)


# --- sadaha ------------------------------------------------------------------

def test_sadaha_examples():
    assert sadaha_partition([30]) == [6, 6, 6, 6, 6]
    assert sadaha_partition([29]) == [6, 6, 6, 6, 5]
    assert sadaha_partition([30, 29, 30]) == [6] * 5 + [6, 6, 6, 6, 5] + [6] * 5
    assert sadaha_partition([]) == []
    for bad in ([31], [28], [0]):
        with pytest.raises(InvalidMonth):
            sadaha_partition(bad)


@given(st.lists(st.sampled_from([29, 30]), max_size=40))
def test_sadaha_properties(months):
    sets = sadaha_partition(months)
    assert set(sets) <= {5, 6}
    assert sum(sets) == sum(months)
    assert len(sets) == 5 * len(months)
    for m, length in enumerate(months):
        chunk = sets[5 * m:5 * m + 5]
        assert chunk[:4] == [6, 6, 6, 6]
        assert chunk[4] == (5 if length == 29 else 6)


# --- schedule ----------------------------------------------------------------

def test_schedule_standard_year():
    lists = standard_year(360)
    assert len(lists["parva_days"]) == 24
    assert len(lists["season_starts"]) == 6
    assert len(lists["ayana_starts"]) == 2
    events = gavamayana_schedule(360, **lists)
    assert len(events) == 752
    daily = [e for e in events if e.kind in (MORNING_OBLATION, EVENING_OBLATION)]
    assert len(daily) == 720
    assert events[0].kind == MORNING_OBLATION and events[1].kind == EVENING_OBLATION
    assert [e.kind for e in events if e.day_index == 0] == [
        MORNING_OBLATION, EVENING_OBLATION, SEASON_START, AYANA_START]


def test_schedule_minimal_and_errors():
    assert [e.kind for e in gavamayana_schedule(1)] == [MORNING_OBLATION, EVENING_OBLATION]
    with pytest.raises(RangeError):
        gavamayana_schedule(10, parva_days=[10])
    with pytest.raises(RangeError):
        gavamayana_schedule(10, season_starts=[-1])


@given(st.integers(1, 400).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(0, n - 1), max_size=30),
    st.lists(st.integers(0, n - 1), max_size=10),
    st.lists(st.integers(0, n - 1), max_size=4))))
@settings(max_examples=50)
def test_schedule_count_identity(args):
    days, parvas, seasons, ayanas = args
    events = gavamayana_schedule(days, parvas, seasons, ayanas)
    assert len(events) == 2 * days + len(parvas) + len(seasons) + len(ayanas)
    keys = [(e.day_index, EVENT_KINDS.index(e.kind)) for e in events]
    assert keys == sorted(keys)
    assert sum(e.kind == PARVA_OFFERING for e in events) == len(parvas)


# --- tax ---------------------------------------------------------------------

@pytest.mark.parametrize("measures, expected", [(12, (2, 10, 0)), (5, (0, 0, 5)), (17, (2, 10, 5)),
                                                (0, (0, 0, 0))])
def test_tax_examples(measures, expected):
    r = tax_in_kind(measures, 6)
    assert (r.tax, r.kept, r.remainder_untaxed) == expected == tax_group_walk(measures, 6)


@given(st.integers(0, 2000), st.integers(2, 20))
def test_tax_matches_group_walk(measures, divisor):
    r = tax_in_kind(measures, divisor)
    assert (r.tax, r.kept, r.remainder_untaxed) == tax_group_walk(measures, divisor)
    assert r.tax + r.kept + r.remainder_untaxed == measures


def test_tax_bad_divisor():
    with pytest.raises(DomainError):
        tax_in_kind(10, 1)
