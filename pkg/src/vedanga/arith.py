"""Exact natural-number and rational arithmetic.

Naturals are plain Python ``int`` values (already arbitrary precision);
:func:`natural` validates them.  :class:`Rational` is an immutable fraction
that may be built unreduced and is normalised by :func:`reduce`.  Every
arithmetic result comes back reduced.  Nothing in here touches floats;
:func:`render_decimal` produces display strings only.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from numbers import Integral
from typing import Union

from .errors import DomainError, ZeroDenominator

__all__ = [
    "Rational",
    "MixedNumber",
    "natural",
    "as_rational",
    "reduce",
    "add",
    "subtract",
    "multiply",
    "divide",
    "to_mixed",
    "from_mixed",
    "rule_of_three",
    "power",
    "square_iterate",
    "digit_count",
    "render_decimal",
    "format_mixed",
]


def natural(n) -> int:
    """Return ``n`` as an ``int`` after checking it is a non-negative integer."""
    if isinstance(n, bool) or not isinstance(n, Integral):
        raise DomainError(f"expected a natural number, got {n!r}")
    n = int(n)
    if n < 0:
        raise DomainError(f"expected a natural number, got {n}")
    return n


@dataclass(frozen=True, eq=False)
class Rational:
    """A signed fraction ``numerator/denominator``.

    The sign lives on the numerator; the denominator is kept positive.
    Instances built directly are not reduced, so ``Rational(6, 4)`` keeps
    its terms until passed through :func:`reduce` or any arithmetic.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        for part in (num, den):
            if isinstance(part, bool) or not isinstance(part, Integral):
                raise DomainError(f"rational terms must be integers, got {part!r}")
        if den == 0:
            raise ZeroDenominator(f"zero denominator in {num}/0")
        if den < 0:
            num, den = -num, -den
        object.__setattr__(self, "numerator", int(num))
        object.__setattr__(self, "denominator", int(den))

    @property
    def sign(self) -> int:
        return (self.numerator > 0) - (self.numerator < 0)

    @property
    def is_reduced(self) -> bool:
        return gcd(self.numerator, self.denominator) == 1

    def is_integer(self) -> bool:
        return self.numerator % self.denominator == 0

    def __floor__(self) -> int:
        return self.numerator // self.denominator

    def __int__(self) -> int:
        # truncation toward zero, like int(float)
        q = abs(self.numerator) // self.denominator
        return q if self.numerator >= 0 else -q

    def __str__(self):
        r = reduce(self)
        if r.denominator == 1:
            return str(r.numerator)
        return f"{r.numerator}/{r.denominator}"

    def __repr__(self):
        return f"Rational({self.numerator}, {self.denominator})"

    @classmethod
    def parse(cls, text: str) -> "Rational":
        """Parse ``"a/b"``, ``"a"`` or a mixed ``"w a/b"`` string."""
        text = text.strip()
        parts = text.split()
        try:
            if len(parts) == 2:
                whole = int(parts[0])
                frac = cls.parse(parts[1])
                if frac.sign < 0:
                    raise DomainError(f"malformed mixed number {text!r}")
                return add(whole, frac) if whole >= 0 else subtract(whole, frac)
            num, sep, den = text.partition("/")
            return reduce(cls(int(num), int(den) if sep else 1))
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"cannot parse rational {text!r}") from None

    # comparison by cross-multiplication so unreduced values compare equal
    def _cmp(self, other) -> int:
        other = as_rational(other)
        lhs = self.numerator * other.denominator
        rhs = other.numerator * self.denominator
        return (lhs > rhs) - (lhs < rhs)

    def __eq__(self, other):
        if not isinstance(other, (Rational, Integral)) or isinstance(other, bool):
            return NotImplemented
        return self._cmp(other) == 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        r = reduce(self)
        if r.denominator == 1:
            return hash(r.numerator)
        return hash((r.numerator, r.denominator))

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return subtract(self, other)

    def __rsub__(self, other):
        return subtract(other, self)

    def __mul__(self, other):
        return multiply(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return divide(self, other)

    def __rtruediv__(self, other):
        return divide(other, self)

    def __neg__(self):
        return Rational(-self.numerator, self.denominator)

    def __abs__(self):
        return Rational(abs(self.numerator), self.denominator)

    def __mod__(self, other):
        other = as_rational(other)
        if other.numerator == 0:
            raise ZeroDenominator("modulo by zero")
        q = (self.numerator * other.denominator) // (other.numerator * self.denominator)
        return subtract(self, multiply(other, q))


RationalLike = Union[Rational, int]


def as_rational(x) -> Rational:
    if isinstance(x, Rational):
        return x
    if isinstance(x, Integral) and not isinstance(x, bool):
        return Rational(int(x), 1)
    raise DomainError(f"cannot treat {x!r} as an exact rational")


def reduce(r: RationalLike) -> Rational:
    """Lowest terms, positive denominator.  Idempotent."""
    r = as_rational(r)
    g = gcd(r.numerator, r.denominator)
    if g == 1:
        return r
    return Rational(r.numerator // g, r.denominator // g)


def add(a: RationalLike, b: RationalLike) -> Rational:
    a, b = as_rational(a), as_rational(b)
    return reduce(Rational(a.numerator * b.denominator + b.numerator * a.denominator,
                           a.denominator * b.denominator))


def subtract(a: RationalLike, b: RationalLike) -> Rational:
    b = as_rational(b)
    return add(a, Rational(-b.numerator, b.denominator))


def multiply(a: RationalLike, b: RationalLike) -> Rational:
    a, b = as_rational(a), as_rational(b)
    return reduce(Rational(a.numerator * b.numerator, a.denominator * b.denominator))


def divide(a: RationalLike, b: RationalLike) -> Rational:
    a, b = as_rational(a), as_rational(b)
    if b.numerator == 0:
        raise ZeroDenominator(f"division of {a} by zero")
    return reduce(Rational(a.numerator * b.denominator, a.denominator * b.numerator))


@dataclass(frozen=True)
class MixedNumber:
    """``whole + frac`` with ``0 <= frac < 1`` and ``frac`` reduced."""

    whole: int
    frac: Rational

    def __post_init__(self):
        natural(self.whole)
        frac = reduce(self.frac)
        if frac.sign < 0 or frac.numerator >= frac.denominator:
            raise DomainError(f"fractional part {frac} is not proper")
        object.__setattr__(self, "frac", frac)

    @property
    def value(self) -> Rational:
        return from_mixed(self)

    def __str__(self):
        return format_mixed(self)


def to_mixed(r: RationalLike) -> MixedNumber:
    """Split a non-negative rational into whole part and proper fraction."""
    r = reduce(r)
    if r.sign < 0:
        raise DomainError(f"to_mixed needs a non-negative value, got {r}")
    whole, rem = divmod(r.numerator, r.denominator)
    return MixedNumber(whole, Rational(rem, r.denominator))


def from_mixed(m: MixedNumber) -> Rational:
    return reduce(Rational(m.whole * m.frac.denominator + m.frac.numerator,
                           m.frac.denominator))


def format_mixed(x) -> str:
    """``"14 73/124"`` style text for a mixed number or non-negative rational."""
    m = x if isinstance(x, MixedNumber) else to_mixed(x)
    if m.frac.numerator == 0:
        return str(m.whole)
    if m.whole == 0:
        return f"{m.frac.numerator}/{m.frac.denominator}"
    return f"{m.whole} {m.frac.numerator}/{m.frac.denominator}"


def rule_of_three(b: RationalLike, c: RationalLike, d: RationalLike) -> Rational:
    """Solve ``a/b = c/d`` for ``a``, i.e. ``a = b*c/d``."""
    d = as_rational(d)
    if d.numerator == 0:
        raise ZeroDenominator("rule of three with d = 0")
    return divide(multiply(b, c), d)


def power(base: int, exp: int) -> int:
    """Exact ``base**exp`` for naturals by binary exponentiation."""
    base, exp = natural(base), natural(exp)
    if base == 0 and exp == 0:
        raise DomainError("0^0 is undefined")
    result = 1
    while exp:
        if exp & 1:
            result *= base
        base *= base
        exp >>= 1
    return result


def square_iterate(base: int, n: int) -> int:
    """Square ``base`` successively ``n`` times, giving ``base**(2**n)``."""
    x = natural(base)
    for _ in range(natural(n)):
        x = x * x
    return x


def digit_count(n: int) -> int:
    """Number of decimal digits of a natural; ``digit_count(0) == 1``."""
    n = natural(n)
    count = 1
    # jump by 10**16 first so 10**60-sized values need few iterations
    while n >= 10**16:
        n //= 10**16
        count += 16
    while n >= 10:
        n //= 10
        count += 1
    return count


def render_decimal(r: RationalLike, places: int) -> str:
    """Decimal text of ``r`` rounded half-up (away from zero) to ``places`` digits."""
    r = reduce(r)
    places = natural(places)
    scale = 10**places
    q, rem = divmod(abs(r.numerator) * scale, r.denominator)
    if 2 * rem >= r.denominator:
        q += 1
    digits = str(q).rjust(places + 1, "0")
    body = digits if places == 0 else f"{digits[:-places]}.{digits[-places:]}"
    return f"-{body}" if r.sign < 0 and q else body
