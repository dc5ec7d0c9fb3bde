"""Arithmetic in the pointed monoids <t>, <t^-1> and <t,t^-1>.

These three monoids are the two affine charts of the monoid projective
line and their common localization.  Elements are the absorbing zero or
a single power of t; there is nothing else to represent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class DomainError(ValueError):
    """An operand lies outside the domain of a monoid operation."""


@dataclass(frozen=True)
class MonoidElement:
    """The absorbing element (exponent ``None``) or the power ``t^exponent``."""

    exponent: int | None = None

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.exponent == 0:
            return "1"
        return f"t^{self.exponent}"


ZERO = MonoidElement(None)
ONE = MonoidElement(0)


def t_power(k: int) -> MonoidElement:
    return MonoidElement(k)


class F1Monoid(enum.Enum):
    """The three concrete monoids appearing in the chart diagram."""

    T_POS = "<t>"
    T_NEG = "<t^-1>"
    T_LAURENT = "<t,t^-1>"

    def contains(self, x: MonoidElement) -> bool:
        if x.is_zero:
            return True
        if self is F1Monoid.T_POS:
            return x.exponent >= 0
        if self is F1Monoid.T_NEG:
            return x.exponent <= 0
        return True


T_POS = F1Monoid.T_POS
T_NEG = F1Monoid.T_NEG
T_LAURENT = F1Monoid.T_LAURENT


def _require_member(monoid: F1Monoid, x: MonoidElement) -> None:
    if not monoid.contains(x):
        raise DomainError(f"{x} is not an element of {monoid.value}")


def mul(a: MonoidElement, b: MonoidElement, monoid: F1Monoid) -> MonoidElement:
    """Product in the given monoid; the absorbing element swallows everything."""
    _require_member(monoid, a)
    _require_member(monoid, b)
    if a.is_zero or b.is_zero:
        return ZERO
    return MonoidElement(a.exponent + b.exponent)


def localize(monoid: F1Monoid, at: MonoidElement) -> F1Monoid:
    """The monoid in which ``at`` becomes invertible.

    Inverting a unit changes nothing; inverting any genuine power of the
    chart generator lands in the Laurent monoid.  Inverting the absorbing
    element would collapse the whole monoid, so it is rejected.
    """
    _require_member(monoid, at)
    if at.is_zero:
        raise DomainError("cannot invert the absorbing element")
    if at.exponent == 0 or monoid is F1Monoid.T_LAURENT:
        return monoid
    return F1Monoid.T_LAURENT


def prime_ideals(monoid: F1Monoid) -> list[str]:
    """Symbolic generators of the prime ideals of the monoid.

    ``"(0)"`` is the ideal containing only the absorbing element; ``"(t)"``
    and ``"(t^-1)"`` are the maximal ideals of the two charts.  The Laurent
    monoid has every nonzero element invertible, hence only ``"(0)"``.
    """
    if monoid is F1Monoid.T_POS:
        return ["(0)", "(t)"]
    if monoid is F1Monoid.T_NEG:
        return ["(0)", "(t^-1)"]
    return ["(0)"]


def ideal_contains(descriptor: str, x: MonoidElement) -> bool:
    """Membership test for the symbolic ideals returned by ``prime_ideals``."""
    if x.is_zero:
        return True
    if descriptor == "(0)":
        return False
    if descriptor == "(t)":
        return x.exponent >= 1
    if descriptor == "(t^-1)":
        return x.exponent <= -1
    raise ValueError(f"unknown ideal descriptor {descriptor!r}")
