"""Jacquet modules of segments along standard parabolics."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .core import Segment, St
from .errors import PartitionMismatch


@dataclass(frozen=True)
class JacquetFactors:
    factors: tuple[Segment, ...]
    zero: bool

    def as_dict(self) -> dict:
        return {"zero": self.zero, "factors": [str(s) for s in self.factors]}


def _check_partition(seg: Segment, blocks: Sequence[int]) -> tuple[int, ...]:
    blocks = tuple(blocks)
    if not blocks or any(isinstance(b, bool) or not isinstance(b, int) or b < 1 for b in blocks):
        raise PartitionMismatch(f"partition {blocks} must consist of positive integers")
    if sum(blocks) != seg.ambient_degree:
        raise PartitionMismatch(
            f"partition {blocks} sums to {sum(blocks)}, segment {seg} lives on GL_{seg.ambient_degree}"
        )
    return blocks


def jacquet(seg: Segment, blocks: Sequence[int]) -> JacquetFactors:
    """Jacquet module of ``St_l(rho)`` along ``P_lambda``.

    Block ``i`` must be ``k_i`` copies of the cuspidal degree; the factors are
    ``St_{k_i}`` with exponent ``e - (k_1 + ... + k_{i-1}) + (l - k_i)/2``.
    """
    blocks = _check_partition(seg, blocks)
    deg = seg.line.degree
    if any(b % deg for b in blocks):
        return JacquetFactors((), True)
    ks = [b // deg for b in blocks]
    l, e = seg.length, seg.exponent
    factors = []
    before = 0
    for k in ks:
        factors.append(St(k, seg.line, e - before + Fraction(l - k, 2)))
        before += k
    return JacquetFactors(tuple(factors), False)


def jacquet_iterated(seg: Segment, blocks: Sequence[int]) -> JacquetFactors:
    """Same result as :func:`jacquet`, built by repeatedly peeling off the
    first block with a two-block Jacquet module."""
    blocks = _check_partition(seg, blocks)
    if len(blocks) == 1:
        return JacquetFactors((seg,), False)
    head = jacquet(seg, (blocks[0], seg.ambient_degree - blocks[0]))
    if head.zero:
        return head
    first, rest = head.factors
    tail = jacquet_iterated(rest, blocks[1:])
    if tail.zero:
        return tail
    return JacquetFactors((first,) + tail.factors, False)


def support(seg: Segment) -> list[tuple[str, Fraction]]:
    """Cuspidal support, from the top exponent downwards."""
    top = seg.exponent + Fraction(seg.length - 1, 2)
    return [(seg.line.name, top - j) for j in range(seg.length)]
