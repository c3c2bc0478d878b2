"""Distinction of generic representations by ``GL_n(F)`` and ``H = GL_m(D)``.

A generic ``π = Δ_1 ⊞ ... ⊞ Δ_r`` is distinguished iff its segments split
into conjugate-dual pairs ``σ(Δ_a) ≅ Δ_b`` plus singletons that are each
distinguished on their own.  The single-segment predicates come from the
sign of the conjugate self-dual parameter: ``GL_{n_i}(F)``-distinction is
sign +1, and ``H_{m_i}``-distinction additionally needs ``n_i`` even.

Why counting suffices: ``σ`` acts on isomorphism classes as an involution.
A class ``C`` with ``σC != C`` can only be matched against ``σC``, and none
of its members is conjugate self-dual, so all of them must pair up, which
needs ``#C == #σC``.  A class with ``σC == C`` pairs internally; if its
single-segment predicate holds every member may stand alone, otherwise the
count must be even.  :func:`brute_force_classify` re-derives every verdict
by exhausting all pairings.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass

from .core import Multisegment, Segment, is_isomorphic, segment_sign, sigma
from .errors import InstanceTooLarge, NotGeneric, OddTotalDegree
from .generic import is_generic

GL = "gl"
H = "h"


def esq_gl_distinguished(seg: Segment) -> bool:
    return segment_sign(seg) == 1


def esq_gl_omega_distinguished(seg: Segment) -> bool:
    """Twisted by the quadratic character: sign -1."""
    return segment_sign(seg) == -1


def esq_h_distinguished(seg: Segment) -> bool:
    return seg.ambient_degree % 2 == 0 and esq_gl_distinguished(seg)


PREDICATES: dict[str, Callable[[Segment], bool]] = {GL: esq_gl_distinguished, H: esq_h_distinguished}


@dataclass(frozen=True)
class PairingWitness:
    pairs: tuple[tuple[int, int], ...]
    singletons: tuple[tuple[int, str], ...]

    @property
    def k(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict:
        return {
            "pairs": [list(p) for p in self.pairs],
            "singletons": [{"index": i, "certificate": c} for i, c in self.singletons],
        }


def validate_witness(pi: Multisegment, witness: PairingWitness, mode: str) -> bool:
    pred = PREDICATES[mode]
    used = [i for p in witness.pairs for i in p] + [i for i, _ in witness.singletons]
    if sorted(used) != list(range(len(pi))):
        return False
    for a, b in witness.pairs:
        if not is_isomorphic(sigma(pi[a], pi.table), pi[b]):
            return False
    return all(cert == mode and pred(pi[i]) for i, cert in witness.singletons)


def _require_generic(pi: Multisegment) -> None:
    generic, link = is_generic(pi)
    if not generic:
        raise NotGeneric(
            f"{pi} is not generic: segments {link.i} and {link.j} are linked (d={link.d})", link
        )


def _pair_by_counting(pi: Multisegment, mode: str) -> PairingWitness | None:
    pred = PREDICATES[mode]
    classes: dict[tuple, list[int]] = {}
    for idx, seg in enumerate(pi.segments):
        classes.setdefault(seg.key, []).append(idx)

    pairs: list[tuple[int, int]] = []
    singletons: list[tuple[int, str]] = []
    done: set[tuple] = set()
    for key in sorted(classes, key=lambda k: min(classes[k])):
        if key in done:
            continue
        members = classes[key]
        rep = pi[members[0]]
        dual_key = sigma(rep, pi.table).key
        if dual_key != key:
            partners = classes.get(dual_key, [])
            if len(partners) != len(members):
                return None
            pairs.extend(zip(members, partners))
            done.update((key, dual_key))
        else:
            if pred(rep):
                singletons.extend((i, mode) for i in members)
            elif len(members) % 2:
                return None
            else:
                pairs.extend(zip(members[0::2], members[1::2]))
            done.add(key)
    return PairingWitness(tuple(sorted(pairs)), tuple(sorted(singletons)))


def classify(pi: Multisegment, mode: str) -> tuple[bool, PairingWitness | None]:
    if mode not in PREDICATES:
        raise ValueError(f"unknown mode {mode!r}")
    _require_generic(pi)
    if mode == H and pi.total_degree % 2:
        raise OddTotalDegree(f"{pi} has odd total degree {pi.total_degree}")
    witness = _pair_by_counting(pi, mode)
    return witness is not None, witness


def classify_gl(pi: Multisegment) -> tuple[bool, PairingWitness | None]:
    """``GL_n(F)``-distinction of a generic ``pi``, with a pairing witness."""
    return classify(pi, GL)


def classify_h(pi: Multisegment) -> tuple[bool, PairingWitness | None]:
    """``GL_m(D)``-distinction of a generic ``pi`` of even total degree."""
    return classify(pi, H)


def partial_matchings(indices: list[int]) -> Iterator[tuple[list[tuple[int, int]], list[int]]]:
    """Every way to split ``indices`` into unordered pairs plus singletons."""
    if not indices:
        yield [], []
        return
    first, rest = indices[0], indices[1:]
    for pairs, singles in partial_matchings(rest):
        yield pairs, [first] + singles
    for pos, other in enumerate(rest):
        remaining = rest[:pos] + rest[pos + 1 :]
        for pairs, singles in partial_matchings(remaining):
            yield [(first, other)] + pairs, singles


def brute_force_classify(
    pi: Multisegment, singleton_pred: Callable[[Segment], bool], max_r: int = 8
) -> bool:
    """Exhaustive oracle: try every split into pairs and singletons."""
    if len(pi) > max_r:
        raise InstanceTooLarge(f"{len(pi)} segments exceeds the oracle bound {max_r}")
    segs, table = pi.segments, pi.table
    for pairs, singles in partial_matchings(list(range(len(segs)))):
        if all(sigma(segs[a], table) == segs[b] for a, b in pairs) and all(
            singleton_pred(segs[i]) for i in singles
        ):
            return True
    return False


def check_conj_selfdual_necessary(pi: Multisegment) -> bool:
    """Whether the segment multiset is stable under ``σ``."""
    return pi.multiset() == pi.sigma().multiset()
