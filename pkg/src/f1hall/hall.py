"""The Hall algebra: exact-rational finitely supported functions on sheaf classes.

The product convolves over subsheaves, computed through middle-term
enumeration so that products of finitely supported elements terminate
without any universe bound.  The coproduct splits direct sums.  All
structure constants are subobject counts, hence nonnegative integers;
coefficients stay exact rationals throughout.
"""

from __future__ import annotations

import enum
import itertools
from collections import defaultdict
from fractions import Fraction
from typing import Iterator

from .formal import FormalSum
from .parsing import ParseError, TokenStream, tokenize
from .sheaves import (
    SheafClass,
    ZERO_SHEAF,
    K0Class,
    extensions,
    format_sheaf,
    k0_class,
    parse_sheaf_tokens,
)


class HallElement(FormalSum):
    """Finitely supported map from sheaf classes to exact rationals."""

    @staticmethod
    def _basis_sort_key(key: SheafClass):
        return key.sort_key

    def __mul__(self, other):
        if isinstance(other, HallElement):
            return star(self, other)
        return self.scaled(other)

    def __str__(self) -> str:
        return format_hall(self)


class HallTensor(FormalSum):
    """Finitely supported map from ordered pairs of sheaf classes to rationals."""

    @staticmethod
    def _basis_sort_key(key: tuple[SheafClass, SheafClass]):
        return (key[0].sort_key, key[1].sort_key)

    def swap(self) -> "HallTensor":
        return HallTensor({(b, a): c for (a, b), c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, HallTensor):
            return tensor_star(self, other)
        return self.scaled(other)

    def __str__(self) -> str:
        return format_hall_tensor(self)


def delta(f: SheafClass) -> HallElement:
    """The characteristic function of one isomorphism class."""
    return HallElement({f: 1})


HALL_UNIT = delta(ZERO_SHEAF)
HALL_ZERO = HallElement()


def star(f: HallElement, g: HallElement) -> HallElement:
    """Convolution product: weight each middle term by its subsheaf count."""
    out: dict[SheafClass, Fraction] = defaultdict(Fraction)
    for a, ca in f.coeffs.items():
        for b, cb in g.coeffs.items():
            weight = ca * cb
            for middle, count in extensions(a, b):
                out[middle] += weight * count
    return HallElement(out)


def counit(f: HallElement) -> Fraction:
    return f.coeffs.get(ZERO_SHEAF, Fraction(0))


def _ordered_splittings(f: SheafClass) -> Iterator[tuple[SheafClass, SheafClass]]:
    """All ordered pairs (A, B) with A + B = f, each splitting once."""
    items = sorted(f.counter().items(), key=lambda kv: kv[0].sort_key)
    for picks in itertools.product(*(range(mult + 1) for _, mult in items)):
        left: list = []
        right: list = []
        for (summand, mult), take in zip(items, picks):
            left.extend([summand] * take)
            right.extend([summand] * (mult - take))
        yield SheafClass(tuple(left)), SheafClass(tuple(right))


def coproduct(f: HallElement) -> HallTensor:
    """Split every support class into ordered direct-sum decompositions."""
    out: dict[tuple[SheafClass, SheafClass], Fraction] = defaultdict(Fraction)
    for support, coeff in f.coeffs.items():
        for a, b in _ordered_splittings(support):
            out[(a, b)] += coeff
    return HallTensor(out)


def tensor(f: HallElement, g: HallElement) -> HallTensor:
    return HallTensor(
        {(a, b): ca * cb for a, ca in f.coeffs.items() for b, cb in g.coeffs.items()}
    )


def tensor_star(u: HallTensor, v: HallTensor) -> HallTensor:
    """Componentwise product on the tensor square (no twist: this is q = 1)."""
    out: dict[tuple[SheafClass, SheafClass], Fraction] = defaultdict(Fraction)
    for (a1, b1), cu in u.coeffs.items():
        for (a2, b2), cv in v.coeffs.items():
            weight = cu * cv
            for f1, n1 in extensions(a1, a2):
                for f2, n2 in extensions(b1, b2):
                    out[(f1, f2)] += weight * n1 * n2
    return HallTensor(out)


def bracket(f: HallElement, g: HallElement) -> HallElement:
    return star(f, g) - star(g, f)


def is_primitive(f: HallElement) -> bool:
    return coproduct(f) == tensor(f, HALL_UNIT) + tensor(HALL_UNIT, f)


class DegreeMarker(enum.Enum):
    NONHOMOGENEOUS = "nonhomogeneous"
    UNDEFINED = "undefined"


def degree(f: HallElement) -> K0Class | DegreeMarker:
    """The common Grothendieck class of the support, if there is one."""
    if not f.coeffs:
        return DegreeMarker.UNDEFINED
    degrees = {k0_class(support) for support in f.coeffs}
    if len(degrees) == 1:
        return degrees.pop()
    return DegreeMarker.NONHOMOGENEOUS


# --- the Hall element grammar -------------------------------------------


def format_hall(f: HallElement) -> str:
    if not f.coeffs:
        return "0"
    parts: list[str] = []
    for support, coeff in f.items():
        body = f"[{format_sheaf(support)}]"
        magnitude = abs(coeff)
        if magnitude != 1:
            body = f"{magnitude}*{body}"
        if not parts:
            parts.append(("-" if coeff < 0 else "") + body)
        else:
            parts.append((" - " if coeff < 0 else " + ") + body)
    return "".join(parts)


def format_hall_tensor(u: HallTensor) -> str:
    if not u.coeffs:
        return "0"
    parts: list[str] = []
    for (a, b), coeff in u.items():
        body = f"[{format_sheaf(a)}](x)[{format_sheaf(b)}]"
        magnitude = abs(coeff)
        if magnitude != 1:
            body = f"{magnitude}*{body}"
        if not parts:
            parts.append(("-" if coeff < 0 else "") + body)
        else:
            parts.append((" - " if coeff < 0 else " + ") + body)
    return "".join(parts)


def _parse_coefficient(ts: TokenStream) -> Fraction:
    """An optional leading rational followed by '*'; defaults to 1."""
    tok = ts.peek()
    if tok.kind != "int":
        return Fraction(1)
    ts.advance()
    numerator = int(tok.text)
    if ts.take_sym("/"):
        den_tok = ts.expect("int")
        denominator = int(den_tok.text)
        if denominator == 0:
            raise ParseError("zero denominator", den_tok.pos)
        value = Fraction(numerator, denominator)
    else:
        value = Fraction(numerator)
    ts.expect("sym", "*")
    return value


def _parse_bracketed_sheaf(ts: TokenStream) -> SheafClass:
    ts.expect("sym", "[")
    inner = parse_sheaf_tokens(ts)
    ts.expect("sym", "]")
    return inner


def parse_hall(text: str) -> HallElement:
    """Signed rational combinations of bracketed sheaves; bare ``0`` is the zero element."""
    ts = TokenStream(tokenize(text))
    tok = ts.peek()
    if tok.kind == "int" and tok.text == "0" and ts.tokens[ts.i + 1].kind == "end":
        return HallElement()
    out: dict[SheafClass, Fraction] = defaultdict(Fraction)
    sign = -1 if ts.take_sym("-") else 1
    while True:
        coeff = _parse_coefficient(ts)
        support = _parse_bracketed_sheaf(ts)
        out[support] += sign * coeff
        if ts.take_sym("+"):
            sign = 1
        elif ts.take_sym("-"):
            sign = -1
        else:
            break
    ts.expect_end()
    return HallElement(out)


def parse_hall_tensor(text: str) -> HallTensor:
    """Same grammar with ``[A](x)[B]`` terms."""
    ts = TokenStream(tokenize(text))
    tok = ts.peek()
    if tok.kind == "int" and tok.text == "0" and ts.tokens[ts.i + 1].kind == "end":
        return HallTensor()
    out: dict[tuple[SheafClass, SheafClass], Fraction] = defaultdict(Fraction)
    sign = -1 if ts.take_sym("-") else 1
    while True:
        coeff = _parse_coefficient(ts)
        left = _parse_bracketed_sheaf(ts)
        ts.expect("sym", "(")
        marker = ts.expect("name")
        if marker.text != "x":
            raise ParseError("expected the tensor marker (x)", marker.pos)
        ts.expect("sym", ")")
        right = _parse_bracketed_sheaf(ts)
        out[(left, right)] += sign * coeff
        if ts.take_sym("+"):
            sign = 1
        elif ts.take_sym("-"):
            sign = -1
        else:
            break
    ts.expect_end()
    return HallTensor(out)
