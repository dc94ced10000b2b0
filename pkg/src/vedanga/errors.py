"""Exception types raised across the package."""


class VedangaError(Exception):
    """Base class for every error the library raises on bad input."""


class ZeroDenominator(VedangaError, ZeroDivisionError):
    pass


class DomainError(VedangaError, ValueError):
    pass


class RangeError(VedangaError, ValueError):
    """An index or component lies outside its permitted range."""

    def __init__(self, message, component=None, value=None):
        super().__init__(message)
        self.component = component
        self.value = value


class NotDivisible(VedangaError, ValueError):
    """An equal split left unequal piles."""

    def __init__(self, total, bodies, remainder):
        super().__init__(
            f"{total} tokens cannot be dealt into {bodies} equal bodies "
            f"({remainder} piles end one token larger)"
        )
        self.total = total
        self.bodies = bodies
        self.remainder = remainder


class InvalidMonth(VedangaError, ValueError):
    pass
