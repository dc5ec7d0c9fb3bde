"""Finite pointed-set modules over a chart monoid, and their classification.

A module is stored as the action of the chart generator (t on <t>,
t^-1 on <t^-1>): a total map on the nonzero elements, with the
basepoint ``*`` implicit and fixed.  Normality, classification into
indecomposables, and the brute-force submodule oracle are all
statements about this one map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .monoids import DomainError, F1Monoid
from .parsing import ParseError, TokenStream, tokenize

BASEPOINT = "*"


class NotNormalError(ValueError):
    """The generator action merges two nonzero elements."""

    def __init__(self, witness: tuple[str, str]):
        self.witness = witness
        a, b = witness
        super().__init__(f"action is not injective: {a!r} and {b!r} share a nonzero image")


class NotSubmoduleError(ValueError):
    """A subset is not closed under the action."""

    def __init__(self, witness: str, target: str):
        self.witness = witness
        self.target = target
        super().__init__(f"subset is not action-closed: {witness!r} -> {target!r} leaves it")


class SizeLimitError(RuntimeError):
    """A brute-force enumeration was refused because the module is too large."""


class FreeFactorError(ValueError):
    """A free factor cannot be materialized as a finite module."""


class FinModule:
    """Finite pointed module, given by the generator action on nonzero elements."""

    __slots__ = ("action", "base_monoid")

    def __init__(self, action: Mapping[str, str], base_monoid: F1Monoid = F1Monoid.T_POS):
        acts: dict[str, str] = {}
        for name in sorted(action):
            if name == BASEPOINT:
                raise ValueError("the basepoint is implicit and carries no action entry")
            acts[name] = action[name]
        for name, target in acts.items():
            if target != BASEPOINT and target not in acts:
                raise ValueError(f"action of {name!r} hits unknown element {target!r}")
        self.action = acts
        self.base_monoid = base_monoid

    @property
    def elements(self) -> list[str]:
        """Nonzero elements, sorted."""
        return list(self.action)

    @property
    def size(self) -> int:
        return len(self.action)

    def step(self, x: str) -> str:
        """One application of the generator."""
        return BASEPOINT if x == BASEPOINT else self.action[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinModule):
            return NotImplemented
        return self.action == other.action and self.base_monoid is other.base_monoid

    def __repr__(self) -> str:
        return f"FinModule({self.action!r}, {self.base_monoid})"


ZERO_MODULE = FinModule({})


@dataclass(frozen=True)
class ModuleClass:
    """Isomorphism class of a finitely generated normal chart module.

    ``torsion`` holds the ladder lengths, ``cyclic`` the cycle lengths,
    both sorted ascending.  Free summands stay symbolic: they are never
    realized as element sets.
    """

    torsion: tuple[int, ...] = ()
    cyclic: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        if any(n < 1 for n in self.torsion) or any(n < 1 for n in self.cyclic):
            raise ValueError("component sizes must be at least 1")
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))
        object.__setattr__(self, "cyclic", tuple(sorted(self.cyclic)))

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def total_size(self) -> int:
        return sum(self.torsion) + sum(self.cyclic)

    def __add__(self, other: "ModuleClass") -> "ModuleClass":
        return ModuleClass(
            self.torsion + other.torsion,
            self.cyclic + other.cyclic,
            self.free_rank + other.free_rank,
        )

    def __str__(self) -> str:
        return format_module_class(self)


def format_module_class(c: ModuleClass) -> str:
    parts = [f"T({n})" for n in c.torsion]
    parts += [f"C({n})" for n in c.cyclic]
    parts += ["FREE"] * c.free_rank
    return "+".join(parts) if parts else "0"


def parse_module_class(text: str) -> ModuleClass:
    """Inverse of ``format_module_class``; terms T(n), C(n) and FREE."""
    ts = TokenStream(tokenize(text))
    tok = ts.peek()
    if tok.kind == "int" and tok.text == "0":
        ts.advance()
        ts.expect_end()
        return ModuleClass()
    torsion: list[int] = []
    cyclic: list[int] = []
    free = 0
    while True:
        tok = ts.expect("name")
        if tok.text == "FREE":
            free += 1
        elif tok.text in ("T", "C"):
            ts.expect("sym", "(")
            num = ts.expect("int")
            ts.expect("sym", ")")
            n = int(num.text)
            if n < 1:
                raise ParseError("component size must be at least 1", num.pos)
            (torsion if tok.text == "T" else cyclic).append(n)
        else:
            raise ParseError(f"unknown term {tok.text!r}", tok.pos)
        if not ts.take_sym("+"):
            break
    ts.expect_end()
    return ModuleClass(tuple(torsion), tuple(cyclic), free)


def normality_witness(m: FinModule) -> tuple[str, str] | None:
    """A pair of nonzero elements with the same nonzero image, if any."""
    seen: dict[str, str] = {}
    for x in m.elements:
        y = m.action[x]
        if y == BASEPOINT:
            continue
        if y in seen:
            return (seen[y], x)
        seen[y] = x
    return None


def check_normal(m: FinModule) -> bool:
    """True iff the generator action is injective away from the basepoint."""
    return normality_witness(m) is None


def _components(m: FinModule) -> list[list[str]]:
    """Connected components of the element graph (edges x -> t.x, basepoint removed)."""
    adjacency: dict[str, set[str]] = {x: set() for x in m.elements}
    for x in m.elements:
        y = m.action[x]
        if y != BASEPOINT:
            adjacency[x].add(y)
            adjacency[y].add(x)
    components = []
    seen: set[str] = set()
    for start in m.elements:
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        components.append(comp)
    return components


def classify(m: FinModule) -> ModuleClass:
    """Decompose a normal module into ladders and cycles.

    Normality forces every component of the element graph to be either a
    ladder (a path whose last vertex maps to the basepoint) or a pure
    cycle; the class records the component sizes.  Finite modules never
    contain a free summand.
    """
    witness = normality_witness(m)
    if witness is not None:
        raise NotNormalError(witness)
    torsion = []
    cyclic = []
    for comp in _components(m):
        if any(m.action[x] == BASEPOINT for x in comp):
            torsion.append(len(comp))
        else:
            cyclic.append(len(comp))
    return ModuleClass(tuple(torsion), tuple(cyclic))


def realize(c: ModuleClass, base_monoid: F1Monoid = F1Monoid.T_POS) -> FinModule:
    """A concrete module with ``classify(realize(c)) == c``, deterministic labels."""
    if c.free_rank:
        raise FreeFactorError("free summands are symbolic and cannot be realized")
    action: dict[str, str] = {}
    for i, n in enumerate(c.torsion):
        names = [f"t{i}.{j}" for j in range(n)]
        for j in range(n - 1):
            action[names[j]] = names[j + 1]
        action[names[n - 1]] = BASEPOINT
    for i, n in enumerate(c.cyclic):
        names = [f"c{i}.{j}" for j in range(n)]
        for j in range(n):
            action[names[j]] = names[(j + 1) % n]
    return FinModule(action, base_monoid)


def direct_sum(a: FinModule, b: FinModule) -> FinModule:
    """Wedge sum: disjoint union with the basepoints identified."""
    if a.base_monoid is not b.base_monoid:
        raise DomainError("direct sum needs a common base monoid")
    action: dict[str, str] = {}
    for prefix, m in (("l", a), ("r", b)):
        for x in m.elements:
            y = m.action[x]
            action[f"{prefix}.{x}"] = BASEPOINT if y == BASEPOINT else f"{prefix}.{y}"
    return FinModule(action, a.base_monoid)


_SMASH_ZERO = (BASEPOINT, BASEPOINT)


def smash_product(a: FinModule, b: FinModule) -> FinModule:
    """Quotient of the product by (t.m, n) ~ (m, t.n), basepoint pairs collapsed.

    The equivalence relation is generated by the single relation for the
    chart generator; higher powers follow by chaining.  The result need
    not be normal.
    """
    if a.base_monoid is not b.base_monoid:
        raise DomainError("smash product needs a common base monoid")
    pairs = [(x, y) for x in a.elements for y in b.elements]
    parent: dict[tuple[str, str], tuple[str, str]] = {p: p for p in pairs}
    parent[_SMASH_ZERO] = _SMASH_ZERO

    def node(x: str, y: str) -> tuple[str, str]:
        return _SMASH_ZERO if BASEPOINT in (x, y) else (x, y)

    def find(p):
        root = p
        while parent[root] != root:
            root = parent[root]
        while parent[p] != root:
            parent[p], p = root, parent[p]
        return root

    def union(p, q):
        rp, rq = find(p), find(q)
        if rp != rq:
            # keep the zero class rooted at the zero node
            if rq == _SMASH_ZERO or (rp != _SMASH_ZERO and rq < rp):
                rp, rq = rq, rp
            parent[rq] = rp

    for x, y in pairs:
        union(node(a.action[x], y), node(x, b.action[y]))

    classes: dict[tuple[str, str], list[tuple[str, str]]] = {}
    for p in pairs:
        root = find(p)
        if root != _SMASH_ZERO:
            classes.setdefault(root, []).append(p)
    label = {root: f"({min(members)[0]},{min(members)[1]})" for root, members in classes.items()}
    action: dict[str, str] = {}
    for root in classes:
        x, y = root
        image = find(node(a.action[x], y))
        action[label[root]] = BASEPOINT if image == _SMASH_ZERO else label[image]
    return FinModule(action, a.base_monoid)


def quotient(m: FinModule, sub: Iterable[str]) -> FinModule:
    """Quotient by a submodule: its nonzero elements are removed, the action redirected."""
    s = set(sub)
    if BASEPOINT not in s:
        raise NotSubmoduleError(BASEPOINT, "missing")
    for x in s - {BASEPOINT}:
        if x not in m.action:
            raise ValueError(f"unknown element {x!r}")
        y = m.action[x]
        if y != BASEPOINT and y not in s:
            raise NotSubmoduleError(x, y)
    action = {
        x: (BASEPOINT if m.action[x] in s else m.action[x])
        for x in m.elements
        if x not in s
    }
    return FinModule(action, m.base_monoid)


def submodules(m: FinModule, bound: int = 20) -> list[frozenset[str]]:
    """Every action-closed pointed subset, by exhaustive filtering.

    This is the brute-force oracle behind the subobject counts, so it
    deliberately inspects all 2^n candidate subsets; the bound guards
    against accidental blowups.
    """
    if m.size > bound:
        raise SizeLimitError(f"module has {m.size} nonzero elements, bound is {bound}")
    labels = m.elements
    index = {x: i for i, x in enumerate(labels)}
    target_bit = [
        0 if m.action[x] == BASEPOINT else 1 << index[m.action[x]] for x in labels
    ]
    n = len(labels)
    need = [0] * (1 << n)
    out = []
    for mask in range(1 << n):
        if mask:
            low = mask & -mask
            need[mask] = need[mask ^ low] | target_bit[low.bit_length() - 1]
        if need[mask] & ~mask == 0:
            members = frozenset(
                [BASEPOINT] + [labels[i] for i in range(n) if (mask >> i) & 1]
            )
            out.append(members)
    return out


def torsion_submodule(m: FinModule) -> frozenset[str]:
    """Elements killed by some power of the generator, plus the basepoint."""
    result = {BASEPOINT}
    for x in m.elements:
        y = x
        for _ in range(m.size + 1):
            if y == BASEPOINT:
                result.add(x)
                break
            y = m.action[y]
    return frozenset(result)


def localize_module(m: FinModule) -> FinModule:
    """Invert the generator: torsion dies, the cycle components survive intact."""
    witness = normality_witness(m)
    if witness is not None:
        raise NotNormalError(witness)
    tor = torsion_submodule(m)
    action = {x: m.action[x] for x in m.elements if x not in tor}
    return FinModule(action, F1Monoid.T_LAURENT)


def parse_module(text: str, base_monoid: F1Monoid = F1Monoid.T_POS) -> FinModule:
    """Read the line format ``name -> target``, one nonzero element per line."""
    action: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        name, arrow, target = line.partition("->")
        if not arrow:
            raise ValueError(f"line {lineno}: expected 'name -> target'")
        name = name.strip()
        target = target.strip()
        if not name or not target:
            raise ValueError(f"line {lineno}: expected 'name -> target'")
        if name == BASEPOINT:
            raise ValueError(f"line {lineno}: the basepoint is implicit")
        if name in action:
            raise ValueError(f"line {lineno}: duplicate element {name!r}")
        action[name] = target
    return FinModule(action, base_monoid)


def format_module(m: FinModule) -> str:
    """Deterministic serialization, lexicographic by element name."""
    return "\n".join(f"{x} -> {m.action[x]}" for x in m.elements)
