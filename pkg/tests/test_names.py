import random

import pytest

from vedanga.arith import Rational, render_decimal
from vedanga.errors import DomainError, RangeError
from vedanga.names import (COMPONENTS, DEFAULT_RADICES, NameTables, RadixVector, TimeSegmentName,
                           ahoratra_slot_duration, decode_name, encode_index, muhurta_duration,
                           roundtrip_check, segment_duration, total_segments)

from oracles import name_tuples, product_of


def test_total_segments():
    assert total_segments() == 810_000
    assert total_segments(RadixVector((1, 1, 1, 1, 1, 1))) == 1
    short = RadixVector((5, 12, 2, 30, 15, 1))
    assert total_segments(short) == product_of(short.radices) == 54_000


@pytest.mark.parametrize("bad", [(5, 12, 2), (5, 12, 2, 30, 15, 0), (5, 12, 2, 30, 15, 1.5)])
def test_bad_radices(bad):
    with pytest.raises(DomainError):
        RadixVector(bad)


@pytest.fixture(scope="module")
def enumerated():
    return list(name_tuples(DEFAULT_RADICES.radices))


@pytest.mark.parametrize("i, name", [
    (0, (1, 1, 1, 1, 1, 1)),
    (809_999, (5, 12, 2, 30, 15, 15)),
    (405_000, (3, 7, 1, 1, 1, 1)),
])
def test_encode_decode_examples(i, name, enumerated):
    assert enumerated[i] == name
    assert tuple(encode_index(i)) == name
    assert decode_name(name) == i


@pytest.mark.parametrize("i", [-1, 810_000, True])
def test_encode_out_of_range(i):
    with pytest.raises(RangeError):
        encode_index(i)


def test_decode_names_offending_component():
    with pytest.raises(RangeError) as info:
        decode_name((1, 13, 1, 1, 1, 1))
    assert info.value.component == "month" and info.value.value == 13
    with pytest.raises(RangeError):
        decode_name((1, 1, 1))


def test_exhaustive_bijection_and_order(enumerated):
    assert len(enumerated) == 810_000
    for i, name in enumerate(enumerated):
        assert encode_index(i) == name
        assert decode_name(name) == i


def test_roundtrip_check_helper():
    assert roundtrip_check(RadixVector((2, 3, 1, 4, 2, 5))) == 240


def test_single_component_change_moves_index():
    rng = random.Random(7)
    for _ in range(500):
        i = rng.randrange(810_000)
        name = list(encode_index(i))
        slot = rng.randrange(6)
        radix = DEFAULT_RADICES.radices[slot]
        choices = [v for v in range(1, radix + 1) if v != name[slot]]
        name[slot] = rng.choice(choices)
        assert decode_name(name) != i


def test_alternative_radices_roundtrip():
    rv = RadixVector((5, 12, 2, 2, 15, 15))  # day/night halves instead of 30 slots
    for i in range(0, total_segments(rv), 7):
        assert decode_name(encode_index(i, rv), rv) == i


def test_durations():
    assert segment_duration() == Rational(16, 5)
    assert render_decimal(segment_duration(), 1) == "3.2"
    assert muhurta_duration() == 48
    assert ahoratra_slot_duration() == 720
    assert ahoratra_slot_duration(RadixVector((5, 12, 2, 30, 7, 15))) is None


def test_name_tables(tmp_path):
    (tmp_path / "year.tsv").write_text(
        "1\tsaṃvatsara\n2\tparivatsara\n3\tidāvatsara\n4\tanuvatsara\n5\tidvatsara\n",
        encoding="utf-8")
    tables = NameTables.load(tmp_path)
    seg = encode_index(405_000)
    assert tables.display(seg)[0] == "idāvatsara"
    assert tables.display(seg)[2] == "śukla"  # shipped parva table
    tokens = ["Idāvatsara", "7", "śukla", "1", "1", "1"]
    assert tables.parse(tokens) == seg
    with pytest.raises(RangeError):
        tables.parse(["unknown", "7", "1", "1", "1", "1"])


def test_components_tuple():
    assert TimeSegmentName._fields == COMPONENTS
    assert str(encode_index(0)) == "1 1 1 1 1 1"
