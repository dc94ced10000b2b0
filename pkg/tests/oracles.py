"""Slow, obviously-correct reference computations used to check the library.

None of these import from ``vedanga``.
"""

from itertools import product


def trial_gcd(a, b):
    a, b = abs(a), abs(b)
    if a == 0:
        return b
    if b == 0:
        return a
    for d in range(min(a, b), 0, -1):
        if a % d == 0 and b % d == 0:
            return d


def lowest_terms(num, den):
    g = trial_gcd(num, den)
    return num // g, den // g


def cross_add(a, b):
    (p, q), (r, s) = a, b
    return lowest_terms(p * s + r * q, q * s)


def long_division(num, den, places):
    """Whole part and the first ``places`` fractional digits, by hand."""
    whole = 0
    while num >= den:
        num -= den
        whole += 1
    digits = []
    for _ in range(places):
        num *= 10
        d = 0
        while num >= den:
            num -= den
            d += 1
        digits.append(d)
    return whole, digits, num


def round_half_up_text(num, den, places):
    whole, digits, rest = long_division(num, den, places)
    # next digit decides
    nxt, _, _ = long_division(rest * 10, den, 0)
    scaled = whole * 10**places + int("".join(map(str, digits)) or "0")
    if nxt >= 5:
        scaled += 1
    text = str(scaled).rjust(places + 1, "0")
    return text if places == 0 else text[:-places] + "." + text[-places:]


def walk_arc(steps, num, den, modulus):
    """Add num/den to a running total ``steps`` times, wrapping at ``modulus``.

    Returns (whole nakshatras, numerator, denominator) with the fraction
    kept over ``den`` (unreduced).
    """
    whole, frac = 0, 0
    for _ in range(steps):
        frac += num
        while frac >= den:
            frac -= den
            whole += 1
        while whole >= modulus:
            whole -= modulus
    return whole, frac, den


def tithi_by_walk(day, tithis=1860, days=1830):
    """Tithi serial reached at the start of ``day`` by stepping one day at a time.

    Each day adds tithis/days of a tithi; count full tithis crossed.
    """
    serial, acc = 0, 0
    for _ in range(day):
        acc += tithis
        while acc >= days:
            acc -= days
            serial += 1
    paksha = "bright" if serial % 30 < 15 else "dark"
    return serial, (paksha, serial % 15 + 1)


def name_tuples(radices):
    """All name tuples in lexicographic order (1-based components)."""
    return product(*(range(1, r + 1) for r in radices))


def divisors_by_scan(n, limit):
    return [b for b in range(1, limit + 1) if n % b == 0]


def tax_group_walk(measures, divisor):
    tax = kept = group = 0
    for _ in range(measures):
        group += 1
        if group == divisor:
            tax += 1
            kept += divisor - 1
            group = 0
    return tax, kept, group


def product_of(values):
    out = 1
    for v in values:
        out *= v
    return out
