"""Shared verdict types, errors and exact-rational helpers."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction


class Verdict(Enum):
    """Result of comparing two values; UNKNOWN only where no rule decides."""

    LT = "LT"
    EQ = "EQ"
    GT = "GT"
    UNKNOWN = "UNKNOWN"

    def flip(self) -> "Verdict":
        return {Verdict.LT: Verdict.GT, Verdict.GT: Verdict.LT}.get(self, self)


class Tri(Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    UNKNOWN = "UNKNOWN"

    @classmethod
    def of(cls, flag: bool) -> "Tri":
        return cls.TRUE if flag else cls.FALSE


def cmp_values(a, b) -> Verdict:
    if a < b:
        return Verdict.LT
    if b < a:
        return Verdict.GT
    return Verdict.EQ


###############################################################################
# Errors
###############################################################################


class BigHomotopyError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(BigHomotopyError, ValueError):
    """Malformed input: wrong shape, broken invariant, unparsable text."""


class RefusalError(BigHomotopyError):
    """A well-formed request the mathematics declines to answer."""


###############################################################################
# Rationals
###############################################################################


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` (or an integer) into a Fraction; floats are refused."""
    if isinstance(text, bool) or isinstance(text, float):
        raise ValidationError(f"rationals must be exact, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValidationError(f"expected a 'p/q' string, got {text!r}")
    s = text.strip()
    if "." in s or "e" in s.lower():
        raise ValidationError(f"rationals must be written as p/q, got {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad rational {text!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q)
