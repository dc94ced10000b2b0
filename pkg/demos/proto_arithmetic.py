"""
Arithmetic with bricks
======================

Splitting 720 bricks into equal bodies, multiplying by laying down heaps,
and taking a sixth measure as tax, all on a machine that can only move one
token at a time.  The step counts show the hand work involved.
"""

from vedanga.tally import (enumerate_splits, gavamayana_schedule, repeated_addition_product,
                           sadaha_partition, standard_year, tax_in_kind)

# %%
# Every way to make equal bodies out of 720 bricks, up to 24 bodies
for split in enumerate_splits(720, 24):
    print(f"{split.bodies:>3} bodies of {split.size_per_body:>3} bricks  ({split.steps} steps)")

# %%
# Ten bodies of seventy-two: repeated addition
r = repeated_addition_product(72, 10)
print(f"72 laid down 10 times -> {r.product} ({r.steps} rounds, {r.token_steps} token steps)")

# %%
# Six-day sets across a 30-29-30 run of months
print(sadaha_partition([30, 29, 30]))

# %%
# One ritual year: daily oblations plus parva, season and ayana offerings
events = gavamayana_schedule(360, **standard_year(360))
print(len(events), "events; first day:", [e.kind for e in events if e.day_index == 0])

# %%
# Sixth-measure tax on a harvest of 17 measures
print(tax_in_kind(17))
