"""The positive loop algebra of 2x2 matrices plus central generators, and its
realization inside the Hall algebra.

Basis symbols: E(k) for the nilpotent matrix tensored with t^k (k any
integer), H1(n) and H2(n) for the two diagonal idempotents tensored with
t^n (n >= 1), and central generators K(n) (n >= 1).  The map into the
Hall algebra sends E(k) to the degree-k line bundle class, H1(n) to
torsion at 0, K(n) to the cyclic class; the image of H2(n) depends on the
mode, and ``verify_rho`` checks bracket preservation, injectivity, and
coverage of the primitive classes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .formal import FormalSum
from .hall import HallElement, bracket as hall_bracket, delta, star
from .report import Report
from .sheaves import cyclic, line_bundle, sheaf, torsion0, torsion_inf

_KIND_ORDER = {"E": 0, "H1": 1, "H2": 2, "K": 3}


@dataclass(frozen=True)
class LieBasisVector:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.kind != "E" and self.index < 1:
            raise ValueError(f"{self.kind} index must be at least 1")

    @property
    def sort_key(self) -> tuple[int, int]:
        return (_KIND_ORDER[self.kind], self.index)

    def __str__(self) -> str:
        return f"{self.kind}({self.index})"


class LieElement(FormalSum):
    """Rational linear combination of basis vectors."""

    @staticmethod
    def _basis_sort_key(key: LieBasisVector):
        return key.sort_key

    def __mul__(self, other):
        return self.scaled(other)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for vec, coeff in self.items():
            body = str(vec)
            if abs(coeff) != 1:
                body = f"{abs(coeff)}*{body}"
            if not parts:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append((" - " if coeff < 0 else " + ") + body)
        return "".join(parts)


def basis_element(vec: LieBasisVector) -> LieElement:
    return LieElement({vec: 1})


def e(k: int) -> LieElement:
    return basis_element(LieBasisVector("E", k))


def h1(n: int) -> LieElement:
    return basis_element(LieBasisVector("H1", n))


def h2(n: int) -> LieElement:
    return basis_element(LieBasisVector("H2", n))


def kappa(n: int) -> LieElement:
    return basis_element(LieBasisVector("K", n))


def _basis_bracket(u: LieBasisVector, v: LieBasisVector) -> LieElement:
    if u.kind == "K" or v.kind == "K":
        return LieElement()
    if u.kind == "E" and v.kind == "E":
        return LieElement()
    if u.kind != "E" and v.kind != "E":
        return LieElement()
    if u.kind == "E":
        return -_basis_bracket(v, u)
    # u is diagonal, v = E(k): the 2x2 commutators [h1, e] = e, [h2, e] = -e
    sign = 1 if u.kind == "H1" else -1
    return sign * e(u.index + v.index)


def lie_bracket(x: LieElement, y: LieElement) -> LieElement:
    out = LieElement()
    for u, cu in x.coeffs.items():
        for v, cv in y.coeffs.items():
            out = out + (cu * cv) * _basis_bracket(u, v)
    return out


class RhoMode(enum.Enum):
    CORRECTED = "corrected"
    PAPER_LITERAL = "paper-literal"


def _rho_basis(vec: LieBasisVector, mode: RhoMode) -> HallElement:
    if vec.kind == "E":
        return delta(sheaf(line_bundle(vec.index)))
    if vec.kind == "H1":
        return delta(sheaf(torsion0(vec.index)))
    if vec.kind == "K":
        return delta(sheaf(cyclic(vec.index)))
    # H2: the corrected map lands in torsion at infinity; the literal map
    # reuses torsion at 0 and is kept selectable for auditability.
    if mode is RhoMode.CORRECTED:
        return -delta(sheaf(torsion_inf(vec.index)))
    return -delta(sheaf(torsion0(vec.index)))


def rho(x: LieElement, mode: RhoMode = RhoMode.CORRECTED) -> HallElement:
    out = HallElement()
    for vec, coeff in x.coeffs.items():
        out = out + coeff * _rho_basis(vec, mode)
    return out


def lie_basis(max_index: int) -> list[LieBasisVector]:
    basis = [LieBasisVector("E", k) for k in range(-max_index, max_index + 1)]
    for kind in ("H1", "H2", "K"):
        basis += [LieBasisVector(kind, n) for n in range(1, max_index + 1)]
    return basis


def verify_rho(max_index: int, mode: RhoMode = RhoMode.CORRECTED) -> Report:
    """Check that the map is a bracket-preserving injection hitting all primitives.

    For every basis pair the Hall-side commutator of the images is compared
    with the image of the Lie bracket.  Injectivity on the basis span
    reduces to linear independence of the images (all are signed delta
    functions); the literal mode fails it with kernel vector H1(n) + H2(n).
    Coverage asks that every indecomposable class of bounded index has its
    delta function in the image span.
    """
    report = Report(f"rho ({mode.value})")
    basis = lie_basis(max_index)
    for u in basis:
        for v in basis:
            lhs = hall_bracket(rho(basis_element(u), mode), rho(basis_element(v), mode))
            rhs = rho(lie_bracket(basis_element(u), basis_element(v)), mode)
            report.add(
                f"bracket [{u}, {v}]",
                lhs == rhs,
                str(lhs),
                str(rhs),
                pair=(str(u), str(v)),
            )
    # images are signed deltas, so dependence means equal supports
    for i, u in enumerate(basis):
        for v in basis[i + 1 :]:
            img_u = rho(basis_element(u), mode)
            img_v = rho(basis_element(v), mode)
            independent = img_u.support != img_v.support
            witness = basis_element(u) + basis_element(v)
            report.add(
                f"injectivity {u} vs {v}",
                independent,
                f"rho({witness}) = {rho(witness, mode)}" if not independent else "independent",
                "independent",
            )
    covered = {next(iter(rho(basis_element(u), mode).support)) for u in basis}
    primitives = [sheaf(line_bundle(k)) for k in range(-max_index, max_index + 1)]
    for n in range(1, max_index + 1):
        primitives += [sheaf(torsion0(n)), sheaf(torsion_inf(n)), sheaf(cyclic(n))]
    for cls in primitives:
        report.add(
            f"primitive coverage [{cls}]",
            cls in covered,
            "in image span" if cls in covered else "missed",
            "in image span",
        )
    return report


def sl2_subalgebra_check(max_index: int) -> Report:
    """The subalgebra generated by line classes and symmetrized torsion.

    With h_n the sum of the two length-n torsion deltas and e_k the
    degree-k line delta, the computed commutators must match the loop
    relations [h_n, e_k] = 2 e_{n+k}, with h's and e's commuting among
    themselves.
    """
    report = Report("sl2 subalgebra")

    def h(n: int) -> HallElement:
        return delta(sheaf(torsion0(n))) + delta(sheaf(torsion_inf(n)))

    def line(k: int) -> HallElement:
        return delta(sheaf(line_bundle(k)))

    for n in range(1, max_index + 1):
        for k in range(-max_index, max_index + 1):
            lhs = hall_bracket(h(n), line(k))
            rhs = 2 * line(n + k)
            report.add(
                f"[h({n}), e({k})] = 2 e({n + k})",
                lhs == rhs,
                str(lhs),
                str(rhs),
                pair=(f"h({n})", f"e({k})"),
            )
    for n in range(1, max_index + 1):
        for m in range(1, max_index + 1):
            lhs = hall_bracket(h(n), h(m))
            report.add(
                f"[h({n}), h({m})] = 0",
                not lhs,
                str(lhs),
                "0",
                pair=(f"h({n})", f"h({m})"),
            )
    for k in range(-max_index, max_index + 1):
        for l in range(-max_index, max_index + 1):
            lhs = hall_bracket(line(k), line(l))
            report.add(
                f"[e({k}), e({l})] = 0",
                not lhs,
                str(lhs),
                "0",
                pair=(f"e({k})", f"e({l})"),
            )
    return report
