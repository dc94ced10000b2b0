"""Exact computations for the five-year yuga calendar, time-segment naming,
token-level proto-arithmetic and historical large-number series."""

from .arith import (MixedNumber, Rational, add, digit_count, multiply, power, reduce,
                    render_decimal, rule_of_three, square_iterate, to_mixed)
from .errors import (DomainError, InvalidMonth, NotDivisible, RangeError, VedangaError,
                     ZeroDenominator)
from .names import (RadixVector, TimeSegmentName, decode_name, encode_index,
                    segment_duration, total_segments)
from .series import (NamedNumber, SeriesSpec, centesimal_series, decimal_series,
                     jain_population, variant_lookup)
from .tally import (TallyMachine, enumerate_splits, equal_split, gavamayana_schedule,
                    repeated_addition_product, sadaha_partition, tax_in_kind)
from .yuga import (DayRecord, SkyPosition, YugaConfig, calendar_record, moon_position_at_day,
                   moon_position_at_parva_end, sun_position_at_day, tithi_at_day, yuga_table)

__version__ = "0.1.0"
