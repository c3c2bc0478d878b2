"""Double coset data for ``P_lambda \\ G / H'``.

The index set is the set of symmetric non-negative integer ``r x r``
matrices with even diagonal and row sums ``lambda``.  Each matrix ``S``
determines the permutation representative ``w_S`` through four case rules,
a fixed Levi ``prod H'_{t_i} x prod_{i<j} G_{s_ij}``, and modulus-character
exponents that must satisfy an additivity identity.

Block labels ``(i, j)`` and permutation values are 1-based throughout, to
line up with the usual matrix notation.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import CaseCoverageFailure, InvalidSMatrix, InvariantFailure, OddTotalDegree, PartitionMismatch


def _check_lambda(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if not lam or any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in lam):
        raise PartitionMismatch(f"{lam} is not a sequence of positive integers")
    return lam


@dataclass(frozen=True)
class SMatrix:
    entries: tuple[tuple[int, ...], ...]
    lam: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "lam", tuple(self.lam))
        r = len(self.lam)
        if len(entries) != r or any(len(row) != r for row in entries):
            raise InvalidSMatrix(f"matrix must be {r}x{r}")
        for i in range(r):
            if sum(entries[i]) != self.lam[i]:
                raise InvalidSMatrix(f"row {i + 1} sums to {sum(entries[i])}, expected {self.lam[i]}")
            if entries[i][i] % 2:
                raise InvalidSMatrix(f"diagonal entry ({i + 1},{i + 1}) is odd")
            for j in range(r):
                if entries[i][j] < 0:
                    raise InvalidSMatrix("entries must be non-negative")
                if entries[i][j] != entries[j][i]:
                    raise InvalidSMatrix(f"not symmetric at ({i + 1},{j + 1})")

    @property
    def r(self) -> int:
        return len(self.lam)

    @property
    def n(self) -> int:
        return sum(self.lam)

    def s(self, i: int, j: int) -> int:
        """1-based entry access."""
        return self.entries[i - 1][j - 1]

    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.entries for x in row)


def enumerate_S(lam: Sequence[int]) -> list[SMatrix]:
    """All admissible matrices for ``lam``, in row-major lexicographic order."""
    lam = _check_lambda(lam)
    if sum(lam) % 2:
        raise OddTotalDegree(f"partition {lam} has odd total {sum(lam)}")
    r = len(lam)
    upper = [(i, j) for i in range(r) for j in range(i, r)]
    out: list[SMatrix] = []
    mat = [[0] * r for _ in range(r)]
    cap = list(lam)

    def fill(pos: int) -> None:
        if pos == len(upper):
            if not any(cap):
                out.append(SMatrix(tuple(tuple(row) for row in mat), lam))
            return
        i, j = upper[pos]
        if j == r - 1 and i != j:
            # last free entry in row i: forced
            choices = [cap[i]] if cap[i] <= cap[j] else []
        elif i == j:
            if i == r - 1:
                choices = [cap[i]] if cap[i] % 2 == 0 else []
            else:
                choices = range(0, cap[i] + 1, 2)
        else:
            choices = range(0, min(cap[i], cap[j]) + 1)
        for v in choices:
            mat[i][j] = mat[j][i] = v
            cap[i] -= v
            if i != j:
                cap[j] -= v
            fill(pos + 1)
            cap[i] += v
            if i != j:
                cap[j] += v
        mat[i][j] = mat[j][i] = 0

    fill(0)
    out.sort(key=SMatrix.flat)
    return out


@dataclass(frozen=True)
class LeviShape:
    h_factors: tuple[int, ...]
    gl_factors: tuple[tuple[int, int, int], ...]

    @property
    def dimension(self) -> int:
        # each G_{s_ij} occupies blocks (i, j) and (j, i)
        return sum(2 * t for t in self.h_factors) + sum(2 * s for _, _, s in self.gl_factors)


@dataclass(frozen=True)
class CosetDatum:
    S: SMatrix
    t: tuple[int, ...]
    d: tuple[int, ...]
    w: tuple[int, ...]
    cases: tuple[str, ...]
    levi_shape: LeviShape

    def __call__(self, l: int) -> int:
        return self.w[l - 1]

    def case_counts(self) -> dict[str, int]:
        counts = {"w1": 0, "w2": 0, "w3": 0, "w4": 0}
        for c in self.cases:
            counts[c] += 1
        return counts


def _case_table(S: SMatrix) -> dict[int, list[tuple[str, int, int]]]:
    """Every ``(position, value)`` produced by the four rules, keyed by position.

    A position matched by zero or several rules shows up as an empty or
    multi-element list.  Indices below are 1-based as in the rules; index 0
    of each helper array is padding.
    """
    r, n = S.r, S.n
    m = n // 2
    s = [[0] * (r + 1)] + [[0] + list(row) for row in S.entries]
    t = [0] + [s[i][i] // 2 for i in range(1, r + 1)]
    d = [0] + [sum(s[i][i:]) - t[i] for i in range(1, r + 1)]
    lam_pre = [0]  # lam_pre[i] = n_1 + ... + n_i
    d_pre = [0]
    for i in range(1, r + 1):
        lam_pre.append(lam_pre[-1] + S.lam[i - 1])
        d_pre.append(d_pre[-1] + d[i])
    # row_pre[i][j] = s_{i,1} + ... + s_{i,j-1}
    row_pre = [[0] * (r + 2)]
    for i in range(1, r + 1):
        acc = [0, 0]
        for j in range(1, r + 1):
            acc.append(acc[-1] + s[i][j])
        row_pre.append(acc)
    # col_tail[i][j] = s_{r,j} + ... + s_{i+1,j}
    col_tail = [[0] * (r + 1) for _ in range(r + 1)]
    for i in range(r - 1, -1, -1):
        below, acc = s[i + 1], col_tail[i + 1]
        col_tail[i] = [acc[j] + below[j] for j in range(r + 1)]

    hits: dict[int, list[tuple[str, int, int]]] = {l: [] for l in range(1, n + 1)}

    def hit(case, l, value):
        hits.setdefault(l, []).append((case, l, value))

    for i in range(1, r + 1):
        base = lam_pre[i - 1]
        tail_d = d_pre[r] - d_pre[i]  # d_r + ... + d_{i+1}
        for k in range(1, t[i] + 1):
            hit("w1", d_pre[i - 1] + k, base + row_pre[i][i] + k)
            hit("w3", m + tail_d + col_tail[i][i] + k, base + row_pre[i][i] + t[i] + k)
        offset = t[i]
        for j in range(i + 1, r + 1):
            for k in range(1, s[i][j] + 1):
                hit("w2", d_pre[i - 1] + offset + k, base + row_pre[i][j] + k)
            offset += s[i][j]
        for j in range(1, i):
            tail_dj = d_pre[r] - d_pre[j]
            for k in range(1, s[i][j] + 1):
                hit("w4", m + tail_dj + col_tail[i][j] + k, base + row_pre[i][j] + k)
    return hits


def build_w(S: SMatrix) -> CosetDatum:
    r, n, e = S.r, S.n, S.entries
    t = tuple(e[i][i] // 2 for i in range(r))
    d = tuple(sum(e[i][i:]) - t[i] for i in range(r))
    hits = _case_table(S)
    w, cases = [], []
    for l in sorted(hits):
        matched = hits[l]
        if not 1 <= l <= n or len(matched) != 1:
            raise CaseCoverageFailure(
                f"position {l} matched {len(matched)} rules for S={S.entries}", l, matched
            )
        case, _, value = matched[0]
        w.append(value)
        cases.append(case)
    if sorted(w) != list(range(1, n + 1)):
        raise InvariantFailure(f"w_S is not a bijection for S={S.entries}: {w}")
    shape = LeviShape(
        t,
        tuple((i + 1, j + 1, e[i][j]) for i in range(r) for j in range(i + 1, r) if e[i][j]),
    )
    return CosetDatum(S, t, d, tuple(w), tuple(cases), shape)


def standard_modulus_exponents(blocks: Sequence[int]) -> tuple[int, ...]:
    """Exponents ``e_i`` with ``delta_P(diag(g_1, ...)) = prod |det g_i|^{e_i}``."""
    blocks = tuple(blocks)
    total = sum(blocks)
    out, before = [], 0
    for b in blocks:
        out.append(total - before - b - before)
        before += b
    return tuple(out)


@dataclass(frozen=True)
class ModulusCheck:
    ok: bool
    blocks: tuple[tuple[int, int], ...]
    delta_PS: tuple[int, ...]
    delta_P: tuple[int, ...]
    delta_P_prime: tuple[int, ...]
    fixed_exponents: dict
    reason: str | None = None
    offending: tuple | None = None

    def __bool__(self):
        return self.ok

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "blocks": [list(b) for b in self.blocks],
            "delta_P_S": list(self.delta_PS),
            "delta_P": list(self.delta_P),
            "delta_P_prime": list(self.delta_P_prime),
            "fixed": self.fixed_exponents,
            "reason": self.reason,
            "offending": list(self.offending) if self.offending else None,
        }


def check_modulus_identity(S: SMatrix) -> ModulusCheck:
    """Check ``delta_{P'_S} delta_P = delta_{P_S}`` on ``M_S`` block by block,
    and that ``delta_{P_S}`` restricted to the fixed Levi has an integral
    square root (reported under ``fixed_exponents[...]["sqrt"]``)."""
    r, ent = S.r, S.entries
    blocks = tuple((i + 1, j + 1) for i in range(r) for j in range(r) if ent[i][j])
    e_S = standard_modulus_exponents([ent[i - 1][j - 1] for i, j in blocks])
    e_lam = standard_modulus_exponents(S.lam)
    e_P = tuple(e_lam[i - 1] for i, _ in blocks)
    e_Pp = []
    for row in ent:
        e_Pp.extend(standard_modulus_exponents([x for x in row if x]))
    e_Pp = tuple(e_Pp)
    by_block = dict(zip(blocks, e_S))

    fixed: dict = {"h": [], "gl": []}
    result = dict(blocks=blocks, delta_PS=e_S, delta_P=e_P, delta_P_prime=e_Pp, fixed_exponents=fixed)

    for b, es, ep, epp in zip(blocks, e_S, e_P, e_Pp):
        if es != ep + epp:
            return ModulusCheck(False, reason="additivity", offending=b, **result)

    for i in range(1, r + 1):
        if ent[i - 1][i - 1]:
            e = by_block[(i, i)]
            if e % 2:
                return ModulusCheck(False, reason="odd diagonal exponent", offending=(i, i), **result)
            fixed["h"].append({"block": [i, i], "exponent": e, "sqrt": e // 2})
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            if ent[i - 1][j - 1]:
                e = by_block[(i, j)] + by_block[(j, i)]
                if e % 2:
                    return ModulusCheck(False, reason="odd paired exponent", offending=(i, j), **result)
                fixed["gl"].append({"blocks": [[i, j], [j, i]], "exponent": e, "sqrt": e // 2})
    return ModulusCheck(True, **result)
