"""Finitely supported exact-rational linear combinations over hashable keys."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class FormalSum:
    """Value-semantics base class; subclasses pin the basis ordering."""

    __slots__ = ("coeffs",)

    @staticmethod
    def _basis_sort_key(key):
        return key

    def __init__(self, coeffs: Mapping | Iterable[tuple] | None = None):
        clean: dict = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        for key, value in items:
            q = Fraction(value)
            if q:
                total = clean.get(key, 0) + q
                if total:
                    clean[key] = total
                else:
                    clean.pop(key, None)
        self.coeffs = clean

    @property
    def support(self) -> set:
        return set(self.coeffs)

    def items(self) -> list[tuple]:
        return sorted(self.coeffs.items(), key=lambda kv: self._basis_sort_key(kv[0]))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self.coeffs)
        for key, value in other.coeffs.items():
            total = out.get(key, 0) + value
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        result = type(self).__new__(type(self))
        result.coeffs = out
        return result

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        result = type(self).__new__(type(self))
        result.coeffs = {key: -value for key, value in self.coeffs.items()}
        return result

    def scaled(self, scalar):
        q = Fraction(scalar)
        result = type(self).__new__(type(self))
        result.coeffs = {} if not q else {key: q * value for key, value in self.coeffs.items()}
        return result

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.coeffs!r})"
