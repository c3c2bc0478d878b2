"""Seeded random instances and the cross-check harness.

Every trial owns an independent RNG derived from ``(seed, trial)``, so trials
can run in any order or in parallel and the merged report stays identical.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .core import CuspidalLine, LineTable, Multisegment, St, sigma
from .distinction import (
    brute_force_classify,
    check_conj_selfdual_necessary,
    classify_gl,
    classify_h,
    esq_gl_distinguished,
    esq_h_distinguished,
    validate_witness,
)
from .dsl import format_multisegment
from .galois import bc_exists, condition_A, is_conjugate_orthogonal, to_wd
from .generic import is_generic

EXPONENTS = tuple(Fraction(k, 2) for k in (-2, -1, 0, 1, 2))


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"zelevinsky:{seed}:{trial}")


def random_table(rng: random.Random) -> LineTable:
    lines = [
        CuspidalLine.self_dual(f"s{k}", rng.randint(1, 3), rng.choice((1, -1)))
        for k in range(rng.randint(1, 3))
    ]
    for k in range(rng.randint(0, 2)):
        deg = rng.randint(1, 3)
        lines += [CuspidalLine.paired(f"u{k}", deg, f"v{k}"), CuspidalLine.paired(f"v{k}", deg, f"u{k}")]
    return LineTable(lines)


def random_multisegment(
    rng: random.Random, table: LineTable, max_r: int, max_l: int, dual_bias: float = 0.5
) -> Multisegment:
    """Up to ``max_r`` segments; with probability ``dual_bias`` a drawn segment
    is followed by its conjugate dual, so pairings actually occur."""
    names = sorted(table)
    r = rng.randint(1, max_r)
    segs = []
    while len(segs) < r:
        seg = St(rng.randint(1, max_l), table[rng.choice(names)], rng.choice(EXPONENTS))
        segs.append(seg)
        if len(segs) < r and rng.random() < dual_bias:
            segs.append(sigma(seg, table))
    rng.shuffle(segs)
    return Multisegment(tuple(segs), table)


def random_generic(
    rng: random.Random, max_r: int = 6, max_l: int = 4, require_even: bool = False, max_tries: int = 10_000
) -> Multisegment:
    """Rejection-sample a generic instance (optionally of even total degree)."""
    for _ in range(max_tries):
        pi = random_multisegment(rng, random_table(rng), max_r, max_l)
        if require_even and pi.total_degree % 2:
            continue
        if is_generic(pi)[0]:
            return pi
    raise RuntimeError("rejection sampling did not produce a generic instance")


def check_instance(pi: Multisegment, oracle_bound: int = 8) -> tuple[dict, list[str]]:
    """Run every cross-check on one generic instance.

    Returns the verdicts and the names of the failed checks.
    """
    failures = []
    gl, gl_witness = classify_gl(pi)
    if gl != brute_force_classify(pi, esq_gl_distinguished, oracle_bound):
        failures.append("oracle_gl")
    if gl and not validate_witness(pi, gl_witness, "gl"):
        failures.append("witness_gl")
    M = to_wd(pi)
    verdicts = {"gl": gl, "even": pi.total_degree % 2 == 0}
    if pi.total_degree % 2:
        if gl != is_conjugate_orthogonal(M):
            failures.append("bridge")
        return verdicts, failures

    h, h_witness = classify_h(pi)
    A = condition_A(pi)
    verdicts.update(h=h, A=A)
    if h != brute_force_classify(pi, esq_h_distinguished, oracle_bound):
        failures.append("oracle_h")
    if h and not validate_witness(pi, h_witness, "h"):
        failures.append("witness_h")
    if h and not gl:
        failures.append("corollary_h_implies_gl")
    if A and not h:
        failures.append("main_theorem_A_implies_B")
    if gl != bc_exists(M):
        failures.append("bridge")
    if h and not check_conj_selfdual_necessary(pi):
        failures.append("conj_selfdual_necessary")
    return verdicts, failures


def _run_trial(args: tuple[int, int, int, int, bool]) -> tuple[int, str, dict, list[str]]:
    seed, trial, max_r, max_l, even = args
    pi = random_generic(trial_rng(seed, trial), max_r, max_l, require_even=even)
    verdicts, failures = check_instance(pi)
    # full source text only when needed to reproduce a failure
    return trial, format_multisegment(pi) if failures else str(pi), verdicts, failures


def run_fuzz(
    trials: int, seed: int, max_r: int = 6, max_l: int = 4, even: bool = False, jobs: int = 1
) -> dict:
    args = [(seed, t, max_r, max_l, even) for t in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run_trial, args, chunksize=max(1, trials // (4 * jobs))))
    else:
        results = [_run_trial(a) for a in args]

    counts = {"instances": 0, "even_instances": 0, "gl_true": 0, "h_true": 0, "A_true": 0, "A_false_B_true": 0}
    failures = []
    for trial, text, verdicts, failed in results:
        counts["instances"] += 1
        counts["gl_true"] += verdicts["gl"]
        if verdicts["even"]:
            counts["even_instances"] += 1
            counts["h_true"] += verdicts["h"]
            counts["A_true"] += verdicts["A"]
            counts["A_false_B_true"] += verdicts["h"] and not verdicts["A"]
        for check in failed:
            failures.append({"trial": trial, "check": check, "pi": text})
    return {
        "seed": seed,
        "trials": trials,
        "max_r": max_r,
        "max_l": max_l,
        "even_only": even,
        "counts": counts,
        "failures": failures,
        "ok": not failures,
    }
