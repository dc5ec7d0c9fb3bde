"""Executable verification suites.

Each suite recomputes one family of structure statements with the exact
engines and compares against closed forms or brute-force oracles,
returning a Report of per-check records.  The CLI ``verify`` and
``oracle-check`` subcommands and the acceptance tests are thin wrappers
around these functions.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter

from .hall import (
    HALL_UNIT,
    _ordered_splittings,
    bracket,
    coproduct,
    degree,
    delta,
    is_primitive,
    star,
    tensor_star,
)
from .lie import RhoMode, sl2_subalgebra_check, verify_rho
from .modules import (
    FinModule,
    ModuleClass,
    NotNormalError,
    classify,
    direct_sum,
    realize,
)
from .monoids import F1Monoid
from .oracles import (
    chart_cyclic_endomorphisms,
    chart_hom_line_to_torsion,
    lattice_hom_count,
    subobject_counts_bruteforce,
)
from .report import Report
from .sheaves import (
    P0,
    PINF,
    Indecomposable,
    SheafClass,
    cyclic,
    elementary_pairs,
    hall_number,
    hom_count,
    k0_class,
    line_bundle,
    line_subsheaves,
    sheaf,
    subobject_counts,
    torsion0,
    torsion_at,
    torsion_inf,
)

# --- test universes ------------------------------------------------------


def _partitions(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return out


def build_universe(
    max_rank: int = 2,
    max_degree: int = 4,
    max_cyclic_index: int = 3,
    max_cyclic_count: int = 2,
    line_degrees: range | None = None,
) -> list[SheafClass]:
    """Finite window of sheaf classes used by the algebra-law suites.

    Rank, total degree and cyclic indices are capped as configured; line
    degrees run over the given window (nonnegative by default, which keeps
    the degree cap meaningful) and at most ``max_cyclic_count`` cyclic
    summands appear since they are invisible to the degree.
    """
    if line_degrees is None:
        line_degrees = range(0, max_degree + 1)
    degrees = sorted(line_degrees)
    line_multisets = [
        combo
        for r in range(max_rank + 1)
        for combo in itertools.combinations_with_replacement(degrees, r)
        if sum(combo) <= max_degree
    ]
    cyclic_multisets = [
        combo
        for c in range(max_cyclic_count + 1)
        for combo in itertools.combinations_with_replacement(
            range(1, max_cyclic_index + 1), c
        )
    ]
    out = []
    for lines in line_multisets:
        budget = max_degree - sum(lines)
        for d0 in range(budget + 1):
            for p0 in _partitions(d0):
                for dinf in range(budget - d0 + 1):
                    for pinf in _partitions(dinf):
                        for cyc in cyclic_multisets:
                            summands = [line_bundle(d) for d in lines]
                            summands += [torsion0(k) for k in p0]
                            summands += [torsion_inf(k) for k in pinf]
                            summands += [cyclic(c) for c in cyc]
                            out.append(SheafClass(tuple(summands)))
    out.sort(key=lambda f: f.sort_key)
    return out


def torsion_cyclic_universe(bound: int) -> list[SheafClass]:
    """Every line-bundle-free class of total module size at most ``bound``."""
    out = []
    for total in range(bound + 1):
        for d0 in range(total + 1):
            for dinf in range(total - d0 + 1):
                dc = total - d0 - dinf
                for p0 in _partitions(d0):
                    for pinf in _partitions(dinf):
                        for pc in _partitions(dc):
                            summands = [torsion0(k) for k in p0]
                            summands += [torsion_inf(k) for k in pinf]
                            summands += [cyclic(c) for c in pc]
                            out.append(SheafClass(tuple(summands)))
    return out


def _thin(seq: list, k: int) -> list:
    """Deterministic evenly spaced subsequence of length at most k."""
    if k >= len(seq):
        return list(seq)
    step = len(seq) / k
    return [seq[int(i * step)] for i in range(k)]


def _indecomposable_pool(line_lo: int, line_hi: int, max_index: int) -> list[Indecomposable]:
    pool = [line_bundle(d) for d in range(line_lo, line_hi + 1)]
    for n in range(1, max_index + 1):
        pool += [torsion0(n), torsion_inf(n), cyclic(n)]
    return pool


# --- closed-form tables vs oracles ---------------------------------------


def hom_table_check(lo: int = -5, hi: int = 5) -> Report:
    """Line-to-line morphism counts against the degree formula and the lattice oracle."""
    report = Report("hom table, line bundles")
    for n in range(lo, hi + 1):
        for m in range(lo, hi + 1):
            got = hom_count(line_bundle(n), line_bundle(m))
            expected = m - n + 1 if n <= m else 0
            oracle = lattice_hom_count(n, m)
            report.add(
                f"|Hom(O({n}), O({m}))|",
                got == expected == oracle,
                str(got),
                f"{expected} (formula), {oracle} (lattice)",
            )
    return report


def torsion_hom_check(max_index: int = 8) -> Report:
    """Torsion morphism counts: same-point chain, vanishing cross terms."""
    report = Report("hom table, torsion")
    failures: list[str] = []
    cases = 0
    for point in (P0, PINF):
        for m in range(1, max_index + 1):
            for n in range(1, max_index + 1):
                got = hom_count(torsion_at(point, m), torsion_at(point, n))
                want = 1 if n >= m else 0
                cases += 1
                if got != want:
                    failures.append(f"|Hom(T({point},{m}), T({point},{n}))| = {got} != {want}")
    report.add(
        "same-point torsion chain",
        not failures,
        failures[0] if failures else "all match",
        "[n >= m]",
        cases=cases,
    )
    failures = []
    cases = 0
    for m in range(1, max_index + 1):
        for n in range(1, max_index + 1):
            for f, g in (
                (torsion0(m), torsion_inf(n)),
                (torsion_inf(m), torsion0(n)),
            ):
                got = hom_count(f, g)
                cases += 1
                if got != 0:
                    failures.append(f"|Hom({f}, {g})| = {got} != 0")
    report.add(
        "cross-point torsion",
        not failures,
        failures[0] if failures else "all zero",
        "0",
        cases=cases,
    )
    failures = []
    cases = 0
    for point in (P0, PINF):
        for m in range(1, max_index + 1):
            targets = [line_bundle(d) for d in range(-3, 4)]
            targets += [cyclic(c) for c in range(1, max_index + 1)]
            for target in targets:
                got = hom_count(torsion_at(point, m), target)
                cases += 1
                if got != 0:
                    failures.append(f"|Hom(T({point},{m}), {target})| = {got} != 0")
    report.add(
        "torsion into torsion-free",
        not failures,
        failures[0] if failures else "all zero",
        "0",
        cases=cases,
    )
    return report


def ses_oracle_check(bound: int = 8) -> Report:
    """Full subsheaf census vs submodule enumeration, line-bundle-free sector."""
    report = Report(f"subsheaf census vs submodule oracle (size <= {bound})")
    by_size: dict[int, int] = Counter()
    failures: dict[int, str] = {}
    for f in torsion_cyclic_universe(bound):
        oracle = subobject_counts_bruteforce(f)
        engine = dict(subobject_counts(f))
        size = sum(s.index for s in f)
        by_size[size] += len(oracle)
        if engine != oracle and size not in failures:
            keys = set(engine) | set(oracle)
            bad = next(k for k in keys if engine.get(k, 0) != oracle.get(k, 0))
            failures[size] = (
                f"{f}: hall_number(f, {bad[0]}, {bad[1]}) = {engine.get(bad, 0)}"
                f" vs oracle {oracle.get(bad, 0)}"
            )
    for size in sorted(by_size):
        report.add(
            f"total size {size}",
            size not in failures,
            failures.get(size, "census identical"),
            "census identical",
            cases=by_size[size],
        )
    return report


def line_sector_check(lo: int = -3, hi: int = 3, max_drop: int = 6) -> Report:
    """hall_number against the exact line-bundle subsheaf enumeration."""
    report = Report("line sector vs line_subsheaves")
    for m in range(lo, hi + 1):
        entries = line_subsheaves(m, max_drop)
        bad = [
            (sub, quot)
            for sub, quot in entries
            if hall_number(sheaf(line_bundle(m)), quot, sheaf(sub)) != 1
        ]
        report.add(
            f"each subsheaf of O({m}) counted once",
            not bad,
            f"{bad[0][0]}, {bad[0][1]}" if bad else "all 1",
            "1",
            cases=len(entries),
        )
        for n in range(m - max_drop, m + 1):
            drop = m - n
            quots = [
                quot for sub, quot in line_subsheaves(m, drop) if sub == line_bundle(n)
            ]
            total = sum(
                hall_number(sheaf(line_bundle(m)), quot, sheaf(line_bundle(n)))
                for quot in quots
            )
            report.add(
                f"subsheaves of O({m}) isomorphic to O({n})",
                total == len(quots) == drop + 1,
                str(total),
                str(drop + 1),
            )
    return report


# --- the product identities and commutators ------------------------------


def _family(report: Report, label: str, mismatches: list[str], cases: int, want: str) -> None:
    report.add(label, not mismatches, mismatches[0] if mismatches else "all match", want, cases=cases)


def product_identities_check(line_span: int = 4, max_index: int = 4) -> Report:
    """The six product identities, with the equal-parameter coefficient-2 cases."""
    report = Report("product identities")
    lines = range(-line_span, line_span + 1)
    idxs = range(1, max_index + 1)

    mism: list[str] = []
    cases = 0
    for n in lines:
        for m in lines:
            if n == m:
                continue
            got = star(delta(sheaf(line_bundle(n))), delta(sheaf(line_bundle(m))))
            want = delta(sheaf(line_bundle(n), line_bundle(m)))
            cases += 1
            if got != want:
                mism.append(f"O({n})*O({m}): {got}")
    _family(report, "line * line, distinct degrees", mism, cases, "split only")

    mism, cases = [], 0
    for n in lines:
        got = star(delta(sheaf(line_bundle(n))), delta(sheaf(line_bundle(n))))
        want = 2 * delta(sheaf(line_bundle(n), line_bundle(n)))
        cases += 1
        if got != want:
            mism.append(f"O({n})*O({n}): {got}")
    _family(report, "line * line, equal degrees (coefficient 2)", mism, cases, "2 * split")

    mism, cases = [], 0
    for point in (P0, PINF):
        for n in idxs:
            for m in lines:
                got = star(delta(sheaf(torsion_at(point, n))), delta(sheaf(line_bundle(m))))
                want = delta(sheaf(line_bundle(n + m))) + delta(
                    sheaf(torsion_at(point, n), line_bundle(m))
                )
                cases += 1
                if got != want:
                    mism.append(f"T({point},{n})*O({m}): {got}")
    _family(report, "torsion * line", mism, cases, "absorption plus split")

    mism, cases = [], 0
    for point in (P0, PINF):
        for n in idxs:
            for m in lines:
                got = star(delta(sheaf(line_bundle(m))), delta(sheaf(torsion_at(point, n))))
                want = delta(sheaf(torsion_at(point, n), line_bundle(m)))
                cases += 1
                if got != want:
                    mism.append(f"O({m})*T({point},{n}): {got}")
    _family(report, "line * torsion", mism, cases, "split only")

    mism, cases = [], 0
    for point in (P0, PINF):
        for n in idxs:
            for m in idxs:
                if n == m:
                    continue
                got = star(
                    delta(sheaf(torsion_at(point, n))), delta(sheaf(torsion_at(point, m)))
                )
                want = delta(sheaf(torsion_at(point, n + m))) + delta(
                    sheaf(torsion_at(point, n), torsion_at(point, m))
                )
                cases += 1
                if got != want:
                    mism.append(f"T({point},{n})*T({point},{m}): {got}")
    _family(report, "torsion * torsion, same point, distinct", mism, cases, "merge plus split")

    mism, cases = [], 0
    for point in (P0, PINF):
        for n in idxs:
            got = star(delta(sheaf(torsion_at(point, n))), delta(sheaf(torsion_at(point, n))))
            want = delta(sheaf(torsion_at(point, 2 * n))) + 2 * delta(
                sheaf(torsion_at(point, n), torsion_at(point, n))
            )
            cases += 1
            if got != want:
                mism.append(f"T({point},{n})^2: {got}")
    _family(
        report,
        "torsion * torsion, same point, equal (coefficient 2)",
        mism,
        cases,
        "merge plus 2 * split",
    )

    mism, cases = [], 0
    for n in idxs:
        for m in idxs:
            for f, g in (
                (torsion0(n), torsion_inf(m)),
                (torsion_inf(n), torsion0(m)),
            ):
                got = star(delta(sheaf(f)), delta(sheaf(g)))
                want = delta(sheaf(f, g))
                cases += 1
                if got != want:
                    mism.append(f"{f}*{g}: {got}")
    _family(report, "torsion * torsion, opposite points", mism, cases, "split only")

    pool = _indecomposable_pool(-line_span, line_span, max_index)
    mism, cases = [], 0
    for n in idxs:
        for other in pool:
            if other == cyclic(n):
                continue
            got = star(delta(sheaf(cyclic(n))), delta(sheaf(other)))
            want = delta(sheaf(cyclic(n), other))
            cases += 1
            if got != want:
                mism.append(f"C({n})*{other}: {got}")
    _family(report, "cyclic * other indecomposable", mism, cases, "split only")

    mism, cases = [], 0
    for n in idxs:
        got = star(delta(sheaf(cyclic(n))), delta(sheaf(cyclic(n))))
        want = 2 * delta(sheaf(cyclic(n), cyclic(n)))
        cases += 1
        if got != want:
            mism.append(f"C({n})^2: {got}")
    _family(report, "cyclic * itself (coefficient 2)", mism, cases, "2 * split")
    return report


def commutator_check(line_span: int = 4, max_index: int = 4) -> Report:
    """The four commutator families."""
    report = Report("commutators")
    lines = range(-line_span, line_span + 1)
    idxs = range(1, max_index + 1)

    mism: list[str] = []
    cases = 0
    for n in lines:
        for m in lines:
            got = bracket(delta(sheaf(line_bundle(n))), delta(sheaf(line_bundle(m))))
            cases += 1
            if got:
                mism.append(f"[O({n}), O({m})] = {got}")
    _family(report, "[line, line] = 0", mism, cases, "0")

    mism, cases = [], 0
    for point in (P0, PINF):
        for n in idxs:
            for m in lines:
                got = bracket(
                    delta(sheaf(torsion_at(point, n))), delta(sheaf(line_bundle(m)))
                )
                want = delta(sheaf(line_bundle(m + n)))
                cases += 1
                if got != want:
                    mism.append(f"[T({point},{n}), O({m})] = {got}")
    _family(report, "[torsion, line] = line of summed degree", mism, cases, "O(m+n)")

    mism, cases = [], 0
    for p1 in (P0, PINF):
        for p2 in (P0, PINF):
            for n in idxs:
                for m in idxs:
                    got = bracket(
                        delta(sheaf(torsion_at(p1, n))), delta(sheaf(torsion_at(p2, m)))
                    )
                    cases += 1
                    if got:
                        mism.append(f"[T({p1},{n}), T({p2},{m})] = {got}")
    _family(report, "[torsion, torsion] = 0", mism, cases, "0")

    pool = _indecomposable_pool(-line_span, line_span, max_index)
    mism, cases = [], 0
    for n in idxs:
        for other in pool:
            got = bracket(delta(sheaf(cyclic(n))), delta(sheaf(other)))
            cases += 1
            if got:
                mism.append(f"[C({n}), {other}] = {got}")
    _family(report, "[cyclic, anything] = 0", mism, cases, "0")
    return report


# --- algebra laws ---------------------------------------------------------


def _three_leg_left(f: SheafClass) -> Counter:
    out: Counter = Counter()
    for a, b in _ordered_splittings(f):
        for a1, a2 in _ordered_splittings(a):
            out[(a1, a2, b)] += 1
    return out


def _three_leg_right(f: SheafClass) -> Counter:
    out: Counter = Counter()
    for a, b in _ordered_splittings(f):
        for b1, b2 in _ordered_splittings(b):
            out[(a, b1, b2)] += 1
    return out


def bialgebra_check(
    min_triples: int = 2000,
    pair_budget: int = 1600,
    split_budget: int | None = None,
    universe: list[SheafClass] | None = None,
) -> Report:
    """Associativity, coassociativity, cocommutativity, compatibility, grading,
    primitivity and integrality over a deterministic finite universe.

    Associativity runs over all triples of a thinned subuniverse sized so
    that at least ``min_triples`` triples are checked; the coproduct-only
    laws run over the whole universe unless ``split_budget`` caps them.
    """
    report = Report("bialgebra laws")
    full = universe if universe is not None else build_universe()

    side = 1
    while side * side * side < min_triples:
        side += 1
    triple_set = _thin(full, side)
    n_triples = 0
    mism: list[str] = []
    for x in triple_set:
        dx = delta(x)
        for y in triple_set:
            dy = delta(y)
            xy = star(dx, dy)
            for z in triple_set:
                dz = delta(z)
                n_triples += 1
                left = star(xy, dz)
                right = star(dx, star(dy, dz))
                if left != right:
                    mism.append(f"({x})*({y})*({z}): {left} != {right}")
    _family(report, "associativity", mism, n_triples, "equal")

    split_set = full if split_budget is None else _thin(full, split_budget)
    mism, cases = [], 0
    for f in split_set:
        cases += 1
        if _three_leg_left(f) != _three_leg_right(f):
            mism.append(str(f))
    _family(report, "coassociativity", mism, cases, "equal")

    mism, cases = [], 0
    for f in split_set:
        cases += 1
        cp = coproduct(delta(f))
        if cp.swap() != cp:
            mism.append(str(f))
    _family(report, "cocommutativity", mism, cases, "symmetric")

    pair_side = 1
    while pair_side * pair_side < pair_budget:
        pair_side += 1
    pair_set = _thin(full, pair_side)
    mism, cases = [], 0
    for x in pair_set:
        dx = delta(x)
        cpx = coproduct(dx)
        for y in pair_set:
            dy = delta(y)
            cases += 1
            left = coproduct(star(dx, dy))
            right = tensor_star(cpx, coproduct(dy))
            if left != right:
                mism.append(f"Delta({x} * {y})")
    _family(report, "coproduct is multiplicative", mism, cases, "equal")

    mism, cases = [], 0
    for x in pair_set:
        dx = delta(x)
        for y in pair_set:
            prod = star(dx, delta(y))
            cases += 1
            expect = k0_class(x) + k0_class(y)
            if degree(prod) != expect:
                mism.append(f"deg({x} * {y})")
            if any(c.denominator != 1 or c < 0 for c in prod.coeffs.values()):
                mism.append(f"non-integral constants in {x} * {y}")
    _family(report, "grading and integral structure constants", mism, cases, "additive, integer")

    mism, cases = [], 0
    for f in split_set:
        cases += 1
        if is_primitive(delta(f)) != (len(f) == 1):
            mism.append(str(f))
    _family(report, "primitivity = indecomposability", mism, cases, "iff one summand")

    mism, cases = [], 0
    for x in _thin(full, 50):
        dx = delta(x)
        cases += 1
        if star(HALL_UNIT, dx) != dx or star(dx, HALL_UNIT) != dx:
            mism.append(str(x))
    _family(report, "unit element", mism, cases, "identity")
    return report


def k0_additivity_check(universe: list[SheafClass] | None = None) -> Report:
    """Grothendieck classes: additivity over every elementary sequence, and the
    invariant triple (rank, degree, cyclic vector) separates classes exactly
    as the map does."""
    report = Report("Grothendieck group")
    full = universe if universe is not None else build_universe()
    indecs = sorted({s for f in full for s in f}, key=lambda s: s.sort_key)

    mism: list[str] = []
    cases = 0
    for g in indecs:
        for sub, quot in elementary_pairs(g, indecs):
            cases += 1
            if k0_class(sub) + k0_class(quot) != k0_class(sheaf(g)):
                mism.append(f"{g}: {sub} / {quot}")
    _family(report, "additivity over elementary pairs", mism, cases, "additive")

    def invariant_triple(f: SheafClass):
        rank = sum(1 for s in f if s.kind == "O")
        deg = sum(s.index for s in f if s.kind in ("O", "T"))
        cyc = tuple(sorted(Counter(s.index for s in f if s.kind == "C").items()))
        return (rank, deg, cyc)

    by_triple: dict = {}
    by_image: dict = {}
    mism, cases = [], 0
    for f in full:
        cases += 1
        triple = invariant_triple(f)
        image = k0_class(f)
        if by_triple.setdefault(triple, image) != image:
            mism.append(f"{f}: same invariants, different image")
        if by_image.setdefault(image, triple) != triple:
            mism.append(f"{f}: same image, different invariants")
    _family(report, "image determined by (rank, degree, cyclic)", mism, cases, "bijective")

    mism, cases = [], 0
    for f in _thin([g for g in full if not any(s.kind == "O" for s in g)], 120):
        for (a, b), count in subobject_counts(f).items():
            cases += 1
            if count > 0 and k0_class(a) + k0_class(b) != k0_class(f):
                mism.append(f"{f}: ({a}, {b})")
    _family(report, "additivity over every counted subobject", mism, cases, "additive")
    return report


def hom_regression_check(max_index: int = 8) -> Report:
    """The two oracle-derived Hom counts: cyclic endomorphisms and line-to-torsion."""
    report = Report("oracle-derived hom counts")
    mism: list[str] = []
    cases = 0
    for n in range(1, max_index + 1):
        got = hom_count(cyclic(n), cyclic(n))
        oracle = chart_cyclic_endomorphisms(n)
        cases += 1
        if got != oracle or got != n:
            mism.append(f"|End(C({n}))| = {got}, oracle {oracle}")
    _family(report, "cyclic endomorphisms are the rotations", mism, cases, "n")

    mism, cases = [], 0
    for point in (P0, PINF):
        for k in range(1, max_index + 1):
            oracle = chart_hom_line_to_torsion(point, k)
            for d in range(-3, 4):
                got = hom_count(line_bundle(d), torsion_at(point, k))
                cases += 1
                if got != oracle or got != k:
                    mism.append(f"|Hom(O({d}), T({point},{k}))| = {got}, oracle {oracle}")
    _family(report, "line into torsion counts the nonzero elements", mism, cases, "k")
    return report


# --- classification fuzzing -----------------------------------------------


def _random_class(rng: random.Random, max_size: int, min_size: int = 2) -> ModuleClass:
    total = rng.randint(min_size, max_size)
    torsion: list[int] = []
    cyc: list[int] = []
    remaining = total
    while remaining:
        part = rng.randint(1, remaining)
        if rng.random() < 0.5:
            torsion.append(part)
        else:
            cyc.append(part)
        remaining -= part
    return ModuleClass(tuple(torsion), tuple(cyc))


def _shuffled_realization(
    cls: ModuleClass, base: F1Monoid, rng: random.Random
) -> FinModule:
    module = realize(cls, base)
    names = module.elements
    fresh = [f"e{i}" for i in range(len(names))]
    rng.shuffle(fresh)
    rename = dict(zip(names, fresh))
    rename["*"] = "*"
    return FinModule(
        {rename[x]: rename[module.action[x]] for x in names}, base
    )


def classification_fuzz_check(
    runs: int = 500, max_size: int = 15, seed: int = 20260810
) -> Report:
    """Random normal modules: classify inverts realize, direct sums distribute,
    and forced collisions are rejected with a genuine witness."""
    report = Report("classification fuzz")
    rng = random.Random(seed)
    structural: list[str] = []
    rejection: list[str] = []
    collision_cases = 0
    for _ in range(runs):
        base = rng.choice([F1Monoid.T_POS, F1Monoid.T_NEG])
        cls = _random_class(rng, max_size)
        module = _shuffled_realization(cls, base, rng)
        if classify(module) != cls:
            structural.append(f"round trip failed for {cls}")
            continue
        other = _random_class(rng, max_size)
        total = direct_sum(module, _shuffled_realization(other, base, rng))
        if classify(total) != cls + other:
            structural.append(f"direct sum broke for {cls} + {other}")
            continue
        # force a collision: two elements sent to one nonzero target
        names = module.elements
        u, v = rng.sample(names, 2)
        target = rng.choice(names)
        action = dict(module.action)
        action[u] = target
        action[v] = target
        collision_cases += 1
        try:
            classify(FinModule(action, base))
        except NotNormalError as err:
            p, q = err.witness
            if not (p != q and action[p] == action[q] != "*"):
                rejection.append(f"bogus witness {err.witness} for collision on {target}")
        else:
            rejection.append(f"collision on {target} not rejected")
    _family(report, f"{runs} random modules (size <= {max_size})", structural, runs, "all pass")
    _family(report, "collision rejection", rejection, collision_cases, "witnessed")
    return report


# --- aggregators -----------------------------------------------------------


def run_verify(
    max_index: int = 4,
    mode: RhoMode = RhoMode.CORRECTED,
    min_triples: int = 2000,
) -> list[Report]:
    return [
        product_identities_check(max_index, max_index),
        commutator_check(max_index, max_index),
        bialgebra_check(min_triples=min_triples, pair_budget=900, split_budget=400),
        verify_rho(max_index, mode),
        sl2_subalgebra_check(max_index),
    ]


def run_oracle_check(bound: int = 8) -> list[Report]:
    return [
        hom_table_check(),
        torsion_hom_check(min(bound, 8)),
        ses_oracle_check(bound),
        line_sector_check(),
        hom_regression_check(min(bound, 8)),
    ]
