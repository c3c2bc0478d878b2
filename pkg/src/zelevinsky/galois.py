"""Formal Weil-Deligne parameters attached to multisegments.

``St_l(rho ⊗ |det|^e)`` corresponds to ``phi_rho |.|^e ⊠ Sp(l)``.  The
parameters here are formal: a constituent is just (line, Sp-length,
exponent), and everything else is read off the sign calculus of the line
table.  The decomposition into conjugate self-dual pieces is always taken
with respect to sign ``b = +1``, so ``I_+`` holds the conjugate-orthogonal
constituents and ``I_-`` the conjugate-symplectic ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    CuspidalLine,
    LineTable,
    Multisegment,
    Segment,
    St,
    format_exponent,
    is_isomorphic,
    segment_sign,
    sigma,
)
from .distinction import classify_h
from .errors import ConditionAFails, NotConjugateSelfDual, NotGeneric, OddDimension, OddTotalDegree
from .generic import is_generic


@dataclass(frozen=True)
class WDConstituent:
    line: CuspidalLine
    sp_length: int
    exponent: Fraction

    @classmethod
    def from_segment(cls, seg: Segment) -> WDConstituent:
        return cls(seg.line, seg.length, seg.exponent)

    def to_segment(self) -> Segment:
        return St(self.sp_length, self.line, self.exponent)

    @property
    def dimension(self) -> int:
        return self.line.degree * self.sp_length

    @property
    def sign(self) -> int | None:
        return segment_sign(self.to_segment())

    @property
    def key(self) -> tuple[str, int, Fraction]:
        return (self.line.name, self.sp_length, self.exponent)

    def sigma(self, table: LineTable) -> WDConstituent:
        return WDConstituent(table.partner(self.line), self.sp_length, -self.exponent)

    def __str__(self):
        return f"({self.line.name}, Sp({self.sp_length}), {format_exponent(self.exponent)})"


@dataclass(frozen=True)
class WDParameter:
    constituents: tuple[tuple[WDConstituent, int], ...]
    table: LineTable

    def __post_init__(self):
        merged: dict[tuple, list] = {}
        for c, mult in self.constituents:
            if mult < 1:
                raise ValueError(f"multiplicity of {c} must be positive")
            if c.key in merged:
                merged[c.key][1] += mult
            else:
                merged[c.key] = [c, mult]
        object.__setattr__(
            self, "constituents", tuple((c, m) for c, m in sorted(merged.values(), key=lambda cm: cm[0].key))
        )

    @property
    def dimension(self) -> int:
        return sum(c.dimension * m for c, m in self.constituents)

    def multiplicities(self) -> dict[tuple, int]:
        return {c.key: m for c, m in self.constituents}

    def sigma(self) -> WDParameter:
        return WDParameter(tuple((c.sigma(self.table), m) for c, m in self.constituents), self.table)

    def is_sigma_stable(self) -> bool:
        return self.multiplicities() == self.sigma().multiplicities()


@dataclass(frozen=True)
class SelfDualDecomposition:
    i_plus: tuple[tuple[WDConstituent, int], ...]
    i_minus: tuple[tuple[WDConstituent, int], ...]
    i_zero: tuple[tuple[tuple[WDConstituent, int], tuple[WDConstituent, int]], ...]

    def as_dict(self) -> dict:
        def item(cm):
            c, m = cm
            return {"constituent": str(c), "dimension": c.dimension, "multiplicity": m}

        return {
            "I_plus": [item(x) for x in self.i_plus],
            "I_minus": [item(x) for x in self.i_minus],
            "I_zero": [[item(a), item(b)] for a, b in self.i_zero],
        }


@dataclass(frozen=True)
class EtaReport:
    trivial: bool
    rank: int
    values: tuple[tuple[WDConstituent, int], ...]

    def as_dict(self) -> dict:
        return {
            "trivial": self.trivial,
            "component_group": f"(Z/2Z)^{self.rank}",
            "values": [{"constituent": str(c), "dimension": c.dimension, "eta": v} for c, v in self.values],
        }


def to_wd(pi: Multisegment) -> WDParameter:
    return WDParameter(tuple((WDConstituent.from_segment(s), 1) for s in pi.segments), pi.table)


def decompose(M: WDParameter) -> SelfDualDecomposition:
    if not M.is_sigma_stable():
        raise NotConjugateSelfDual("parameter is not conjugate self-dual: its multiset is not sigma-stable")
    plus, minus, zero = [], [], []
    seen = set()
    for c, mult in M.constituents:
        if c.key in seen:
            continue
        dual = c.sigma(M.table)
        if dual.key == c.key:
            (plus if c.sign == 1 else minus).append((c, mult))
            seen.add(c.key)
        else:
            zero.append(((c, mult), (dual, M.multiplicities()[dual.key])))
            seen.update((c.key, dual.key))
    return SelfDualDecomposition(tuple(plus), tuple(minus), tuple(zero))


def eta(M: WDParameter) -> EtaReport:
    """``η(a_i) = (-1)^{dim M_i}`` on the generators of ``A ≅ (Z/2Z)^{|I_+|}``."""
    dec = decompose(M)
    values = tuple((c, -1 if c.dimension % 2 else 1) for c, _ in dec.i_plus)
    return EtaReport(all(v == 1 for _, v in values), len(dec.i_plus), values)


def eta_trivial(M: WDParameter) -> bool:
    return eta(M).trivial


def is_conjugate_orthogonal(M: WDParameter) -> bool:
    # O(V_i) on I_+ and GL(V_i) on I_0 are unconstrained; an orthogonal form
    # on a symplectic M_i needs a symplectic multiplicity space, so even mult.
    if not M.is_sigma_stable():
        return False
    return all(m % 2 == 0 for c, m in M.constituents if c.sign == -1)


def bc_exists(M: WDParameter) -> bool:
    """Whether ``M`` is an unstable base change from the even unitary group."""
    if M.dimension % 2:
        raise OddDimension(f"parameter has odd dimension {M.dimension}")
    return is_conjugate_orthogonal(M)


def _require_generic_even(pi: Multisegment) -> None:
    generic, link = is_generic(pi)
    if not generic:
        raise NotGeneric(f"{pi} is not generic", link)
    if pi.total_degree % 2:
        raise OddTotalDegree(f"{pi} has odd total degree {pi.total_degree}")


def condition_A(pi: Multisegment) -> bool:
    """Base change from a parameter generic for every non-degenerate character.

    Genericity of the packet is automatic for generic ``pi``; what remains is
    base-change existence and triviality of ``η``.
    """
    _require_generic_even(pi)
    M = to_wd(pi)
    return bc_exists(M) and eta_trivial(M)


@dataclass(frozen=True)
class MainCheck:
    A: bool
    B: bool

    @property
    def consistent(self) -> bool:
        return not (self.A and not self.B)

    def as_dict(self) -> dict:
        return {"A": self.A, "B": self.B, "consistent": self.consistent}


def main_theorem_check(pi: Multisegment) -> MainCheck:
    A = condition_A(pi)
    B, _ = classify_h(pi)
    return MainCheck(A, B)


@dataclass(frozen=True)
class ConditionAGrouping:
    """Segment indices split the way the base-change argument splits them."""

    dual_pairs: tuple[tuple[int, int], ...]
    symplectic_pairs: tuple[tuple[int, int], ...]
    orthogonal_singletons: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "non_self_dual_pairs": [list(p) for p in self.dual_pairs],
            "symplectic_pairs": [list(p) for p in self.symplectic_pairs],
            "orthogonal_singletons": list(self.orthogonal_singletons),
        }


def decompose_condition_A_witness(pi: Multisegment) -> ConditionAGrouping:
    if not condition_A(pi):
        raise ConditionAFails(f"{pi} does not satisfy condition (A)")
    dual_pairs, symp, orth = [], [], []
    unused = list(range(len(pi)))
    while unused:
        i = unused.pop(0)
        seg = pi[i]
        sign = segment_sign(seg)
        if sign == 1:
            orth.append(i)
            continue
        target = sigma(seg, pi.table)
        j = next(j for j in unused if is_isomorphic(pi[j], target))
        unused.remove(j)
        (symp if sign == -1 else dual_pairs).append((i, j))
    return ConditionAGrouping(tuple(dual_pairs), tuple(symp), tuple(orth))
