"""
Growing large numbers
=====================

Ten-fold and hundred-fold series, and two raised by repeated squaring.
"""

from vedanga.arith import digit_count, power, square_iterate
from vedanga.series import centesimal_series, decimal_series, variant_lookup

# %%
for n, term in enumerate(decimal_series(), start=1):
    print(f"{n:>2} {term.name:<10} {term.value:,}")

# %%
series = centesimal_series()
for n, term in enumerate(series, start=1):
    if term.named or n in (1, 2, 22):
        print(f"term {n:>2}: 10^{digit_count(term.value) - 1:<3} {term.name}")

# %%
sixth, fifth = square_iterate(2, 6), square_iterate(2, 5)
product = sixth * fifth
print(f"{sixth:,} x {fifth:,} = {product:,}")
print(digit_count(product), "digits; equals 2^96:", product == power(2, 96))

# %%
# Same value, different names
for exponent in (7, 8, 9):
    print(f"10^{exponent}:", variant_lookup(power(10, exponent)))
