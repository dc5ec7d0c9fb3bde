"""Isomorphism classes of normal coherent sheaves on the monoid projective line.

A class is a canonical multiset of indecomposable summands: line bundles
O(n), cyclic sheaves C(m), and torsion sheaves T0(k), Tinf(k) supported at
the two closed points.  Subobject counting never materializes an actual
subsheaf: every subobject of a direct sum splits across the summands, and
each summand admits a short, explicit table of elementary (sub, quotient)
pairs, each realized by exactly one honest subsheaf.  ``subobject_counts``,
``hall_number`` and ``extensions`` are bookkeeping over those tables.
"""

from __future__ import annotations

import functools
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .modules import ModuleClass
from .parsing import ParseError, TokenStream, tokenize

P0 = "0"
PINF = "inf"

_KIND_ORDER = {"O": 0, "C": 1, "T": 2}
_POINT_ORDER = {None: 0, P0: 0, PINF: 1}


@dataclass(frozen=True)
class Indecomposable:
    """One of O(n), C(m), or T(point, k); ``point`` is set only for torsion."""

    kind: str
    index: int
    point: str | None = None

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown summand kind {self.kind!r}")
        if self.kind == "T":
            if self.point not in (P0, PINF):
                raise ValueError("torsion summands need a support point 0 or inf")
            if self.index < 1:
                raise ValueError("torsion length must be at least 1")
        else:
            if self.point is not None:
                raise ValueError(f"{self.kind} summands carry no support point")
            if self.kind == "C" and self.index < 1:
                raise ValueError("cyclic index must be at least 1")

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_ORDER[self.kind], _POINT_ORDER[self.point], self.index)

    def __str__(self) -> str:
        if self.kind == "O":
            return f"O({self.index})"
        if self.kind == "C":
            return f"C({self.index})"
        return f"T0({self.index})" if self.point == P0 else f"Tinf({self.index})"


def line_bundle(n: int) -> Indecomposable:
    return Indecomposable("O", n)


def cyclic(m: int) -> Indecomposable:
    return Indecomposable("C", m)


def torsion_at(point: str, k: int) -> Indecomposable:
    return Indecomposable("T", k, point)


def torsion0(k: int) -> Indecomposable:
    return Indecomposable("T", k, P0)


def torsion_inf(k: int) -> Indecomposable:
    return Indecomposable("T", k, PINF)


@dataclass(frozen=True)
class SheafClass:
    """Canonical multiset of indecomposables; the empty multiset is the zero sheaf."""

    summands: tuple[Indecomposable, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "summands", tuple(sorted(self.summands, key=lambda s: s.sort_key))
        )

    @property
    def is_zero(self) -> bool:
        return not self.summands

    @property
    def sort_key(self):
        """Display order: fewer summands first, then componentwise."""
        return (len(self.summands), tuple(s.sort_key for s in self.summands))

    def counter(self) -> Counter:
        return Counter(self.summands)

    def __iter__(self) -> Iterator[Indecomposable]:
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __add__(self, other: "SheafClass") -> "SheafClass":
        return SheafClass(self.summands + other.summands)

    def __str__(self) -> str:
        return format_sheaf(self)


ZERO_SHEAF = SheafClass()


def sheaf(*summands: Indecomposable) -> SheafClass:
    return SheafClass(tuple(summands))


@dataclass(frozen=True)
class K0Class:
    """Image in the Grothendieck group: rank, degree, and cyclic multiplicities."""

    rank: int = 0
    degree: int = 0
    cyclic: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: dict[int, int] = {}
        for index, mult in self.cyclic:
            merged[index] = merged.get(index, 0) + mult
        canonical = tuple(sorted((i, m) for i, m in merged.items() if m))
        object.__setattr__(self, "cyclic", canonical)

    def __add__(self, other: "K0Class") -> "K0Class":
        return K0Class(
            self.rank + other.rank,
            self.degree + other.degree,
            self.cyclic + other.cyclic,
        )

    def __str__(self) -> str:
        body = ", ".join(f"{i}: {m}" for i, m in self.cyclic)
        return f"({self.rank}, {self.degree}, {{{body}}})"


def k0_class(f: SheafClass | Indecomposable) -> K0Class:
    """Additive invariant: line bundles count rank and degree, torsion counts
    degree by its length, cyclic summands record their index.
    """
    if isinstance(f, Indecomposable):
        f = sheaf(f)
    rank = 0
    degree = 0
    cyc: list[tuple[int, int]] = []
    for s in f:
        if s.kind == "O":
            rank += 1
            degree += s.index
        elif s.kind == "T":
            degree += s.index
        else:
            cyc.append((s.index, 1))
    return K0Class(rank, degree, tuple(cyc))


# --- the sheaf grammar -------------------------------------------------

_TERM_KINDS = ("O", "C", "T0", "Tinf")


def parse_sheaf_tokens(ts: TokenStream) -> SheafClass:
    """Parse one sheaf expression from a token stream (used inside brackets too)."""
    tok = ts.peek()
    if tok.kind == "int" and tok.text == "0":
        ts.advance()
        return ZERO_SHEAF
    summands = [_parse_summand(ts)]
    while ts.take_sym("+"):
        summands.append(_parse_summand(ts))
    return SheafClass(tuple(summands))


def _parse_summand(ts: TokenStream) -> Indecomposable:
    tok = ts.expect("name")
    if tok.text not in _TERM_KINDS:
        raise ParseError(f"unknown summand kind {tok.text!r}", tok.pos)
    ts.expect("sym", "(")
    sign = -1 if ts.take_sym("-") else 1
    num = ts.expect("int")
    ts.expect("sym", ")")
    value = sign * int(num.text)
    if tok.text == "O":
        return line_bundle(value)
    if value < 1:
        raise ParseError(f"{tok.text} index must be at least 1", num.pos)
    if tok.text == "C":
        return cyclic(value)
    return torsion0(value) if tok.text == "T0" else torsion_inf(value)


def parse_sheaf(text: str) -> SheafClass:
    ts = TokenStream(tokenize(text))
    result = parse_sheaf_tokens(ts)
    ts.expect_end()
    return result


def format_sheaf(f: SheafClass) -> str:
    if f.is_zero:
        return "0"
    return "+".join(str(s) for s in f.summands)


# --- gluing ------------------------------------------------------------


class GluingError(ValueError):
    """Chart data that admits no clutching isomorphism."""


@dataclass(frozen=True)
class GluingData:
    """Chart modules plus clutching data over the overlap.

    ``clutch_free`` lists one integer per free generator pair (the exponent
    shift of the clutching map); ``clutch_cyclic`` matches cyclic components
    by position, ``(i, j, shift)`` pairing component i of chart0 with
    component j of chart infinity.
    """

    chart0: ModuleClass
    chart_inf: ModuleClass
    clutch_free: tuple[int, ...] = ()
    clutch_cyclic: tuple[tuple[int, int, int], ...] = ()


def glue(g: GluingData) -> SheafClass:
    """Classify the sheaf obtained from chart modules and clutching data.

    Torsion dies in the localization, so each chart's torsion glues to zero
    on the other chart and survives as point-supported torsion.  Matched
    cyclic pairs give cyclic sheaves, with the shift irrelevant to the
    isomorphism class.  Each free generator gives a line bundle of degree
    equal to its clutching integer.
    """
    if g.chart0.free_rank != g.chart_inf.free_rank:
        raise GluingError("free ranks of the two charts must agree")
    if len(g.clutch_free) != g.chart0.free_rank:
        raise GluingError("need exactly one clutching integer per free generator")
    c0, cinf = g.chart0.cyclic, g.chart_inf.cyclic
    if sorted(i for i, _, _ in g.clutch_cyclic) != list(range(len(c0))) or sorted(
        j for _, j, _ in g.clutch_cyclic
    ) != list(range(len(cinf))):
        raise GluingError("cyclic matching must pair every component exactly once")
    for i, j, _shift in g.clutch_cyclic:
        if c0[i] != cinf[j]:
            raise GluingError(
                f"cannot glue cyclic components of lengths {c0[i]} and {cinf[j]}"
            )
    summands = [torsion0(k) for k in g.chart0.torsion]
    summands += [torsion_inf(k) for k in g.chart_inf.torsion]
    summands += [cyclic(c0[i]) for i, _, _ in g.clutch_cyclic]
    summands += [line_bundle(m) for m in g.clutch_free]
    return SheafClass(tuple(summands))


# --- Hom counting ------------------------------------------------------


def hom_count(f: Indecomposable, g: Indecomposable) -> int:
    """Number of nonzero morphisms f -> g between indecomposables.

    Line to line is the degree count m - n + 1; torsion into same-point
    torsion of length at least its own admits exactly one map of each
    nonzero kind counted here; cyclic endomorphisms are the rotations.
    A line bundle maps to a length-k torsion sheaf by sending the chart
    generator to any of its k nonzero elements.  Everything else (disjoint
    supports, torsion into torsion-free, anything into or out of a cyclic
    of different shape) is zero.  The brute-force counterparts live in
    ``oracles``.
    """
    if f.kind == "O" and g.kind == "O":
        return max(0, g.index - f.index + 1)
    if f.kind == "O" and g.kind == "T":
        return g.index
    if f.kind == "T" and g.kind == "T":
        if f.point != g.point:
            return 0
        return 1 if g.index >= f.index else 0
    if f.kind == "C" and g.kind == "C":
        return f.index if f.index == g.index else 0
    return 0


def line_subsheaves(m: int, max_drop: int) -> list[tuple[Indecomposable, SheafClass]]:
    """All subsheaves of O(m) losing at most ``max_drop`` in degree.

    A subsheaf of a line bundle is a line bundle, cut out by dropping the
    degree by a0 at 0 and by ainf at infinity; the quotient is the torsion
    sheaf T0(a0) + Tinf(ainf).  Each (a0, ainf) is realized by exactly one
    subsheaf, so this list is the exact bounded oracle for the line sector.
    """
    if max_drop < 0:
        raise ValueError("max_drop must be nonnegative")
    out = []
    for drop in range(max_drop + 1):
        for k0 in range(drop, -1, -1):
            kinf = drop - k0
            quot = []
            if k0:
                quot.append(torsion0(k0))
            if kinf:
                quot.append(torsion_inf(kinf))
            out.append((line_bundle(m - drop), SheafClass(tuple(quot))))
    return out


def elementary_pairs(
    g: Indecomposable, sub_candidates: Iterable[Indecomposable] = ()
) -> list[tuple[SheafClass, SheafClass]]:
    """The (sub, quotient) pairs realizable inside one indecomposable.

    Besides the trivial pairs (0, g) and (g, 0): torsion admits the chain of
    same-point torsion subs; a line bundle admits every candidate line
    bundle of smaller degree, with the quotient torsion split between the
    two points in all possible ways; cyclic sheaves are simple.  Every pair
    listed corresponds to exactly one actual subsheaf of g.
    """
    whole = sheaf(g)
    pairs = [(ZERO_SHEAF, whole), (whole, ZERO_SHEAF)]
    if g.kind == "T":
        for m in range(1, g.index):
            pairs.append(
                (sheaf(torsion_at(g.point, m)), sheaf(torsion_at(g.point, g.index - m)))
            )
    elif g.kind == "O":
        lines = sorted(
            {c for c in sub_candidates if c.kind == "O" and c.index < g.index},
            key=lambda s: s.sort_key,
        )
        for cand in lines:
            drop = g.index - cand.index
            for k0 in range(drop, -1, -1):
                kinf = drop - k0
                quot = []
                if k0:
                    quot.append(torsion0(k0))
                if kinf:
                    quot.append(torsion_inf(kinf))
                pairs.append((sheaf(cand), SheafClass(tuple(quot))))
    return pairs


@functools.lru_cache(maxsize=None)
def subobject_counts(
    f: SheafClass, line_subs: frozenset[Indecomposable] = frozenset()
) -> Mapping[tuple[SheafClass, SheafClass], int]:
    """Census of subsheaves of f: (quotient class, sub class) -> count.

    Identical summands are treated as labeled positions, so the census
    counts honest subobjects, not isomorphism classes of subobjects.
    Torsion and cyclic summands contribute their full elementary tables;
    line bundle summands only admit sub line bundles listed in
    ``line_subs`` (their degree can drop without bound, so the caller
    supplies the candidates of interest).
    """
    acc: dict[tuple[SheafClass, SheafClass], int] = {(ZERO_SHEAF, ZERO_SHEAF): 1}
    for s in f.summands:
        options = elementary_pairs(s, line_subs)
        nxt: dict[tuple[SheafClass, SheafClass], int] = defaultdict(int)
        for (quot_acc, sub_acc), count in acc.items():
            for sub, quot in options:
                nxt[(quot_acc + quot, sub_acc + sub)] += count
        acc = dict(nxt)
    return acc


def hall_number(f: SheafClass, a: SheafClass, b: SheafClass) -> int:
    """Number of subsheaves of f isomorphic to b with quotient isomorphic to a."""
    lines = frozenset(s for s in b.summands if s.kind == "O")
    return subobject_counts(f, lines).get((a, b), 0)


def _extension_middles(a: SheafClass, b: SheafClass) -> set[SheafClass]:
    """All middle terms admitting a short exact sequence with sub b, quotient a.

    Every short exact sequence is a direct sum of elementary ones, so a
    middle term is built by letting each quotient summand either split off,
    merge onto a same-point torsion sub (lengths add), or be absorbed into
    a line bundle sub (one torsion summand per point, degree grows by the
    length).  The search is a DFS over quotient summands with the absorber
    state canonicalized so that identical summands are not distinguished.
    """
    quots = sorted(a.summands, key=lambda s: s.sort_key)
    subs = sorted(b.summands, key=lambda s: s.sort_key)
    init_state: tuple = tuple((0, 0) if s.kind == "O" else 0 for s in subs)
    sub_keys = [s.sort_key for s in subs]
    results: set[SheafClass] = set()
    seen: set = set()

    def canonical(state) -> tuple:
        return tuple(sorted(zip(sub_keys, state)))

    def finish(state) -> None:
        parts: list[Indecomposable] = []
        absorbed: Counter = Counter()
        for s, entry in zip(subs, state):
            if s.kind == "T":
                parts.append(torsion_at(s.point, s.index + entry))
                if entry:
                    absorbed[torsion_at(s.point, entry)] += 1
            elif s.kind == "O":
                k0, kinf = entry
                parts.append(line_bundle(s.index + k0 + kinf))
                if k0:
                    absorbed[torsion0(k0)] += 1
                if kinf:
                    absorbed[torsion_inf(kinf)] += 1
            else:
                parts.append(s)
        split = Counter(quots)
        split.subtract(absorbed)
        for summand, mult in split.items():
            parts.extend([summand] * mult)
        results.add(SheafClass(tuple(parts)))

    def recurse(i: int, state) -> None:
        key = (i, canonical(state))
        if key in seen:
            return
        seen.add(key)
        if i == len(quots):
            finish(state)
            return
        q = quots[i]
        recurse(i + 1, state)  # q splits off
        if q.kind != "T":
            return
        tried: set = set()
        for j, s in enumerate(subs):
            entry = state[j]
            if s.kind == "T" and s.point == q.point and entry == 0:
                signature = (s.sort_key, entry)
                if signature in tried:
                    continue
                tried.add(signature)
                recurse(i + 1, state[:j] + (q.index,) + state[j + 1 :])
            elif s.kind == "O":
                slot = 0 if q.point == P0 else 1
                if entry[slot] == 0:
                    signature = (s.sort_key, entry, slot)
                    if signature in tried:
                        continue
                    tried.add(signature)
                    new_entry = (
                        (q.index, entry[1]) if slot == 0 else (entry[0], q.index)
                    )
                    recurse(i + 1, state[:j] + (new_entry,) + state[j + 1 :])

    recurse(0, init_state)
    return results


@functools.lru_cache(maxsize=None)
def extensions(a: SheafClass, b: SheafClass) -> tuple[tuple[SheafClass, int], ...]:
    """All middle terms f of sequences 0 -> b -> f -> a -> 0, with multiplicities.

    The count attached to f is ``hall_number(f, a, b)``; middle terms are
    listed with the most merged (fewest summands) first.
    """
    out = []
    for mid in sorted(_extension_middles(a, b), key=lambda s: s.sort_key):
        count = hall_number(mid, a, b)
        if count:
            out.append((mid, count))
    return tuple(out)
