"""
Naming 810,000 moments
======================

Year, month, fortnight, day/night slot, muhurta and prati-muhurta together
name every 3.2-minute segment of a five-year yuga.  The naming is a
mixed-radix numeral; encoding and decoding are exact inverses.
"""

from vedanga.arith import render_decimal
from vedanga.names import (NameTables, RadixVector, decode_name, encode_index,
                           muhurta_duration, segment_duration, total_segments)

# %%
print("segments per yuga:", total_segments())
print("muhurta:", muhurta_duration(), "min; prati-muhurta:", segment_duration(),
      "=", render_decimal(segment_duration(), 1), "min")

# %%
tables = NameTables.load()
for i in (0, 1, 15, 225, 405_000, 809_999):
    name = encode_index(i)
    print(f"{i:>7} -> {name}   ({' '.join(tables.display(name))})  -> {decode_name(name)}")

# %%
# Reading the day/night slot as 2 halves instead of 30 changes the count
halves = RadixVector((5, 12, 2, 2, 15, 15))
print("with two halves per slot:", total_segments(halves), "segments")
