"""Genericity via the linked-segment criterion.

``π = Δ_1 ⊞ ... ⊞ Δ_r`` is generic iff no ordered pair ``(i, j)``, ``i != j``,
admits a positive integer ``d`` with

* ``max(1, l_i - l_j + 1) <= d <= l_i`` and equal cuspidal degree, and
* ``rho_i ≅ rho_j ⊗ |det|^(d + (l_j - l_i)/2)``.

On a single cuspidal line the second condition is the exact equation
``e_i = e_j + d + (l_j - l_i)/2``; distinct lines are never twists of each
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Multisegment, Segment


@dataclass(frozen=True)
class LinkWitness:
    i: int
    j: int
    d: int

    def as_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "d": self.d}


def link_degree(si: Segment, sj: Segment) -> int | None:
    """The ``d`` linking ``si`` to ``sj``, or None when they are not linked."""
    if si.line.name != sj.line.name:
        return None
    d = si.exponent - sj.exponent - Fraction(sj.length - si.length, 2)
    if d.denominator != 1:
        return None
    d = int(d)
    if max(1, si.length - sj.length + 1) <= d <= si.length:
        return d
    return None


def find_link(pi: Multisegment) -> LinkWitness | None:
    segs = pi.segments
    for i, si in enumerate(segs):
        for j, sj in enumerate(segs):
            if i == j:
                continue
            d = link_degree(si, sj)
            if d is not None:
                return LinkWitness(i, j, d)
    return None


def is_generic(pi: Multisegment) -> tuple[bool, LinkWitness | None]:
    """Return ``(True, None)`` if generic, else ``(False, witness)``.

    Witness indices are 0-based positions in ``pi.segments``.
    """
    witness = find_link(pi)
    return witness is None, witness
