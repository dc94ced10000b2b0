"""
The five-year yuga, computed exactly
====================================

Sun and moon move uniformly around 27 nakshatras.  The moon passes
67 x 27 = 1809 nakshatras in 124 fortnights, so each fortnight advances it
1809/124 of a nakshatra.  Everything below stays in exact fractions.
"""

from vedanga.arith import Rational, add, format_mixed, render_decimal
from vedanga.yuga import (DEFAULT, calendar_record, moon_position_at_parva_end,
                          nakshatra_names, parva_end_phase, tithi_names)

# %%
# Moon's advance per fortnight, as a fraction, a mixed number and a decimal
step = DEFAULT.moon_per_parva
print(step, "=", format_mixed(step), "~", render_decimal(step, 5))

# %%
# Where each of the first six fortnights ends
names = nakshatra_names()
for k in range(1, 7):
    p = moon_position_at_parva_end(k)
    print(f"parva {k:>3} ({parva_end_phase(k)} moon): {str(p):>11}  in {p.name(names)}")

# %%
# Adding the step 124 times lands exactly on 1809 = 67 x 27: back at the origin
total = Rational(0)
for _ in range(DEFAULT.parvas_per_yuga):
    total = add(total, step)
print("after 124 parvas:", total, "nakshatras; remainder mod 27 =", total % 27)

# %%
# A few day records around the first full moon and the first solstice
tithis = tithi_names()
for d in (0, 13, 14, 15, 182, 183):
    r = calendar_record(d)
    print(f"day {d:>4}: year {r.year_in_yuga}, {r.ayana:<8} ayana, season {r.season_index}, "
          f"parva {r.parva_index}, {r.tithi.paksha} {r.tithi.name(tithis)}, "
          f"moon {r.moon} / sun {r.sun}")

# %%
# Mean tithi: 1830 days hold 1860 tithis
hours = DEFAULT.mean_tithi_days * 24
print("mean tithi =", hours, "h ~", render_decimal(hours, 2), "h")
