"""Cuspidal lines, segments and multisegments.

A *cuspidal line* is the orbit of a supercuspidal representation under
unramified twists.  Its declared base point is unitary, so a twist
``rho ⊗ |det|^e`` is recorded by the exact exponent ``e`` alone, and the
central-character slope of ``St_l(rho ⊗ |det|^e)`` is ``e``.

The only involution modelled is the conjugate-dual ``Δ ↦ (Δ^∨)^c``.  It sends
a line to its declared ``sigma_partner`` and negates the exponent.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    AsymmetricPartner,
    DanglingPartner,
    DegreeMismatch,
    InvalidLine,
    InvalidSegment,
    MissingSignOnSelfDualLine,
    SignOnPairedLine,
    UnknownLine,
)

ORTHOGONAL = 1
SYMPLECTIC = -1


def as_exponent(value) -> Fraction:
    """Coerce ``value`` to an exact half-integer, rejecting anything else."""
    if isinstance(value, bool):
        raise InvalidSegment(f"exponent must be a number, got {value!r}")
    if isinstance(value, float):
        if not value.is_integer() and not (2 * value).is_integer():
            raise InvalidSegment(f"exponent {value!r} is not a half-integer")
    try:
        e = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidSegment(f"bad exponent {value!r}") from exc
    if e.denominator not in (1, 2):
        raise InvalidSegment(f"exponent {e} is not a half-integer")
    return e


def format_exponent(e: Fraction) -> str:
    return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


@dataclass(frozen=True)
class CuspidalLine:
    name: str
    degree: int
    sigma_partner: str
    self_sign: int | None = None

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise InvalidLine(f"bad line name {self.name!r}")
        if isinstance(self.degree, bool) or not isinstance(self.degree, int) or self.degree < 1:
            raise InvalidLine(f"line {self.name}: degree must be a positive integer", self.name)
        if self.self_sign not in (None, ORTHOGONAL, SYMPLECTIC):
            raise InvalidLine(f"line {self.name}: sign must be +1, -1 or absent", self.name)

    @classmethod
    def self_dual(cls, name: str, degree: int, sign: int) -> CuspidalLine:
        return cls(name, degree, name, sign)

    @classmethod
    def paired(cls, name: str, degree: int, partner: str) -> CuspidalLine:
        return cls(name, degree, partner, None)

    @property
    def is_self_partnered(self) -> bool:
        return self.sigma_partner == self.name


def validate_line_table(lines: Iterable[CuspidalLine]) -> None:
    """Raise unless the partner map is a degree-preserving involution whose
    sign data matches self-partnering."""
    by_name: dict[str, CuspidalLine] = {}
    for line in lines:
        if line.name in by_name:
            raise InvalidLine(f"line {line.name} declared twice", line.name)
        by_name[line.name] = line

    for name in sorted(by_name):
        line = by_name[name]
        partner = by_name.get(line.sigma_partner)
        if partner is None:
            raise DanglingPartner(
                f"line {name}: partner {line.sigma_partner} is not declared", name
            )
        if partner.sigma_partner != name:
            raise AsymmetricPartner(
                f"line {name}: partner {partner.name} points to {partner.sigma_partner}", name
            )
        if line.is_self_partnered:
            if line.self_sign is None:
                raise MissingSignOnSelfDualLine(
                    f"line {name} is its own partner but has no sign", name
                )
        elif line.self_sign is not None:
            raise SignOnPairedLine(f"line {name} is paired with {partner.name} but carries a sign", name)
        if partner.degree != line.degree:
            raise DegreeMismatch(
                f"line {name} (degree {line.degree}) and partner {partner.name} "
                f"(degree {partner.degree}) differ",
                name,
            )


class LineTable(Mapping):
    """Validated, immutable name -> :class:`CuspidalLine` map."""

    def __init__(self, lines: Iterable[CuspidalLine] = ()):
        lines = tuple(lines)
        validate_line_table(lines)
        self._lines = {line.name: line for line in lines}

    def __getitem__(self, name: str) -> CuspidalLine:
        try:
            return self._lines[name]
        except KeyError:
            raise UnknownLine(f"line {name} is not declared") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self._lines)

    def __len__(self) -> int:
        return len(self._lines)

    def __eq__(self, other):
        if not isinstance(other, LineTable):
            return NotImplemented
        return self._lines == other._lines

    def __hash__(self):
        return hash(frozenset(self._lines.items()))

    def __repr__(self):
        return f"LineTable({list(self._lines.values())!r})"

    def partner(self, line: CuspidalLine) -> CuspidalLine:
        return self[line.sigma_partner]

    def contains(self, line: CuspidalLine) -> bool:
        return self._lines.get(line.name) == line


@dataclass(frozen=True)
class Cuspidal:
    line: CuspidalLine
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", as_exponent(self.exponent))


@dataclass(frozen=True)
class Segment:
    """The essentially square-integrable ``St_l(rho)`` with ``rho`` the
    twisted cuspidal at the centre of the segment."""

    cuspidal: Cuspidal
    length: int

    def __post_init__(self):
        if isinstance(self.length, bool) or not isinstance(self.length, int) or self.length < 1:
            raise InvalidSegment(f"segment length must be a positive integer, got {self.length!r}")

    @property
    def line(self) -> CuspidalLine:
        return self.cuspidal.line

    @property
    def exponent(self) -> Fraction:
        return self.cuspidal.exponent

    @property
    def ambient_degree(self) -> int:
        return self.length * self.line.degree

    @property
    def central_slope(self) -> Fraction:
        return self.exponent

    @property
    def key(self) -> tuple[str, int, Fraction]:
        return (self.line.name, self.length, self.exponent)

    def twist(self, shift) -> Segment:
        return St(self.length, self.line, self.exponent + Fraction(shift))

    def __str__(self):
        if self.exponent == 0:
            return f"St({self.length}, {self.line.name})"
        return f"St({self.length}, {self.line.name}, {format_exponent(self.exponent)})"


def St(length: int, line: CuspidalLine, exponent=0) -> Segment:
    return Segment(Cuspidal(line, as_exponent(exponent)), length)


def sigma(seg: Segment, table: LineTable) -> Segment:
    """Conjugate-dual of a segment: partner line, negated exponent."""
    return St(seg.length, table.partner(seg.line), -seg.exponent)


def is_isomorphic(s1: Segment, s2: Segment) -> bool:
    return s1.key == s2.key


def is_conjugate_self_dual(seg: Segment) -> bool:
    return seg.line.is_self_partnered and seg.exponent == 0


def segment_sign(seg: Segment) -> int | None:
    """Sign of the conjugate self-dual parameter ``phi_rho ⊠ Sp(l)``.

    ``Sp(l)`` is orthogonal for odd ``l`` and symplectic for even ``l``, so
    the base sign flips with the parity of the length.  ``None`` when the
    segment is not conjugate self-dual.
    """
    if not is_conjugate_self_dual(seg):
        return None
    return seg.line.self_sign * (1 if seg.length % 2 else -1)


@dataclass(frozen=True)
class Multisegment:
    segments: tuple[Segment, ...]
    table: LineTable = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))
        for seg in self.segments:
            if not self.table.contains(seg.line):
                raise UnknownLine(f"segment {seg} uses line {seg.line.name} outside the line table")

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __getitem__(self, i: int) -> Segment:
        return self.segments[i]

    def __str__(self):
        return " + ".join(str(s) for s in self.segments) or "0"

    @property
    def total_degree(self) -> int:
        return sum(s.ambient_degree for s in self.segments)

    @property
    def partition(self) -> tuple[int, ...]:
        return tuple(s.ambient_degree for s in self.segments)

    def sigma(self) -> Multisegment:
        return Multisegment(tuple(sigma(s, self.table) for s in self.segments), self.table)

    def reordered(self, order: Iterable[int]) -> Multisegment:
        return Multisegment(tuple(self.segments[i] for i in order), self.table)

    def twist(self, shift) -> Multisegment:
        return Multisegment(tuple(s.twist(shift) for s in self.segments), self.table)

    def multiset(self) -> dict[tuple, int]:
        counts: dict[tuple, int] = {}
        for s in self.segments:
            counts[s.key] = counts.get(s.key, 0) + 1
        return counts


def langlands_sort(pi: Multisegment) -> list[Segment]:
    """Order segments by decreasing central slope.

    Ties are broken by line name, then decreasing length; any tiebreak gives
    the same Langlands quotient, this one just makes reports reproducible.
    """
    return sorted(pi.segments, key=lambda s: (-s.central_slope, s.line.name, -s.length, s.exponent))
