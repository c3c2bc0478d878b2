"""Independent reference implementations shared by the unit and acceptance tests."""

import itertools
import random
from fractions import Fraction

from zelevinsky.core import CuspidalLine
from zelevinsky.dsl import Binding, LineDecl, SegmentSyntax, SourceFile


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def brute_force_S(lam):
    """Every symmetric matrix with entries bounded by min(n_i, n_j), filtered."""
    r = len(lam)
    upper = [(i, j) for i in range(r) for j in range(i, r)]
    found = []
    for values in itertools.product(*(range(min(lam[i], lam[j]) + 1) for i, j in upper)):
        m = [[0] * r for _ in range(r)]
        for (i, j), v in zip(upper, values):
            m[i][j] = m[j][i] = v
        if all(m[i][i] % 2 == 0 for i in range(r)) and all(sum(m[i]) == lam[i] for i in range(r)):
            found.append(tuple(tuple(row) for row in m))
    return sorted(found, key=lambda mat: [x for row in mat for x in row])


def count_by_generating_function(lam):
    """Coefficient of x^lam in prod_i 1/(1 - x_i^2) * prod_{i<j} 1/(1 - x_i x_j)."""
    r = len(lam)
    poly = {(0,) * r: 1}
    steps = [tuple(2 if q == i else 0 for q in range(r)) for i in range(r)]
    steps += [tuple(1 if q in (i, j) else 0 for q in range(r)) for i in range(r) for j in range(i + 1, r)]
    for step in steps:
        new = {}
        for mono, coeff in poly.items():
            cur = mono
            while all(x <= cap for x, cap in zip(cur, lam)):
                new[cur] = new.get(cur, 0) + coeff
                cur = tuple(x + s for x, s in zip(cur, step))
        poly = new
    return poly.get(tuple(lam), 0)


def modulus_by_coordinates(blocks):
    """Per-coordinate exponent of prod_{a<b, block(a)<block(b)} t_a / t_b,
    averaged over each block."""
    owner = [i for i, size in enumerate(blocks) for _ in range(size)]
    n = len(owner)
    coord = [0] * n
    for x in range(n):
        for y in range(n):
            if owner[x] < owner[y]:
                coord[x] += 1
                coord[y] -= 1
    out = []
    for i, size in enumerate(blocks):
        vals = {coord[x] for x in range(n) if owner[x] == i}
        assert len(vals) == 1
        out.append(vals.pop())
    return tuple(out)


def linked_by_triple_loop(pi):
    """Literal (i, j, d) search over the two displayed conditions."""
    segs = pi.segments
    for i, si in enumerate(segs):
        for j, sj in enumerate(segs):
            if i == j:
                continue
            if si.line.degree != sj.line.degree:
                continue
            for d in range(1, si.length + 1):
                if not max(1, si.length - sj.length + 1) <= d:
                    continue
                if si.line.name == sj.line.name and si.exponent == sj.exponent + d + Fraction(sj.length - si.length, 2):
                    return True
    return False


def linked_by_intervals(pi):
    """Zelevinsky linkage: supports overlap or abut, neither contains the other."""
    segs = pi.segments
    for i, si in enumerate(segs):
        for sj in segs[i + 1 :]:
            if si.line.name != sj.line.name:
                continue
            lo1, hi1 = si.exponent - Fraction(si.length - 1, 2), si.exponent + Fraction(si.length - 1, 2)
            lo2, hi2 = sj.exponent - Fraction(sj.length - 1, 2), sj.exponent + Fraction(sj.length - 1, 2)
            if (lo1 - lo2).denominator != 1:
                continue
            for (l1, h1), (l2, h2) in (((lo1, hi1), (lo2, hi2)), ((lo2, hi2), (lo1, hi1))):
                if l1 < l2 and h1 < h2 and l2 <= h1 + 1:
                    return True
    return False


def random_source(rng: random.Random) -> SourceFile:
    decls = []
    for k in range(rng.randint(0, 3)):
        decls.append(LineDecl(CuspidalLine.self_dual(f"s{k}", rng.randint(1, 40), rng.choice((1, -1)))))
    for k in range(rng.randint(0, 2)):
        deg = rng.randint(1, 40)
        decls.append(LineDecl(CuspidalLine.paired(f"u_{k}", deg, f"V{k}")))
        decls.append(LineDecl(CuspidalLine.paired(f"V{k}", deg, f"u_{k}")))
    rng.shuffle(decls)
    names = [d.line.name for d in decls]
    bindings = []
    if names:
        for k in range(rng.randint(0, 4)):
            segs = tuple(
                SegmentSyntax(rng.randint(1, 30), rng.choice(names), Fraction(rng.randint(-20, 20), 2))
                for _ in range(rng.randint(1, 6))
            )
            bindings.append(Binding(f"pi{k}", segs))
    return SourceFile(tuple(decls), tuple(bindings))


def noisy(text: str, rng: random.Random) -> str:
    """Re-space the printed file and sprinkle comments; the grammar ignores both."""
    out = []
    for line in text.splitlines():
        tokens = line.replace("(", " ( ").replace(")", " ) ").replace(",", " , ").split(" ")
        out.append(rng.choice([" ", "  ", "\t"]).join(t for t in tokens if t))
        if rng.random() < 0.3:
            out.append("-- note " + str(rng.random()))
    return "\n".join(out)
