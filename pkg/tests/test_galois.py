import pytest

from _support import TABLE, a, a2, a3, b, c, sp
from zelevinsky.core import CuspidalLine, LineTable, Multisegment, St
from zelevinsky.distinction import classify_gl, classify_h
from zelevinsky.errors import ConditionAFails, NotConjugateSelfDual, NotGeneric, OddDimension
from zelevinsky.fuzz import random_generic, trial_rng
from zelevinsky.galois import (
    WDConstituent,
    WDParameter,
    bc_exists,
    condition_A,
    decompose,
    decompose_condition_A_witness,
    eta,
    eta_trivial,
    is_conjugate_orthogonal,
    main_theorem_check,
    to_wd,
)


def ms(*segs):
    return Multisegment(segs, TABLE)


def wd(*items):
    return WDParameter(tuple((WDConstituent.from_segment(s), m) for s, m in items), TABLE)


def test_to_wd():
    M = to_wd(ms(St(2, a)))
    assert [(c.key, m) for c, m in M.constituents] == [(("a", 2, 0), 1)]
    M = to_wd(ms(St(1, b), St(1, b)))
    assert [m for _, m in M.constituents] == [2]


def test_dimension_matches_degree():
    for t in range(1000):
        pi = random_generic(trial_rng(31, t), 6, 4)
        assert to_wd(pi).dimension == pi.total_degree


def test_decompose_examples():
    dec = decompose(wd((St(1, a3), 2)))
    assert [(c.key, m) for c, m in dec.i_plus] == [(("a3", 1, 0), 2)]
    assert not dec.i_minus and not dec.i_zero
    dec = decompose(wd((St(1, b), 1), (St(1, c), 1)))
    assert len(dec.i_zero) == 1 and not dec.i_plus
    with pytest.raises(NotConjugateSelfDual):
        decompose(wd((St(1, b), 1)))


def test_decompose_partitions_constituents():
    for t in range(300):
        pi = random_generic(trial_rng(32, t), 6, 4)
        M = to_wd(pi)
        if not M.is_sigma_stable():
            continue
        dec = decompose(M)
        assert len(dec.i_plus) + len(dec.i_minus) + 2 * len(dec.i_zero) == len(M.constituents)
        for (c1, m1), (c2, m2) in dec.i_zero:
            assert m1 == m2 and c1.sigma(M.table).key == c2.key


def test_eta():
    assert eta_trivial(wd((St(1, b), 1), (St(1, c), 1)))
    report = eta(wd((St(1, a3), 1)))
    assert not report.trivial and report.rank == 1 and report.values[0][1] == -1
    assert eta_trivial(wd((St(1, a2), 5)))
    # symplectic and I_0 content never matters
    assert eta_trivial(wd((St(1, sp), 3), (St(1, a2), 1), (St(1, b, 1), 1), (St(1, c, -1), 1)))


def test_conjugate_orthogonal():
    for m in range(1, 5):
        assert is_conjugate_orthogonal(wd((St(1, a), m)))
    assert not is_conjugate_orthogonal(wd((St(1, sp), 1)))
    assert is_conjugate_orthogonal(wd((St(1, sp), 2)))
    assert is_conjugate_orthogonal(wd((St(2, b, 1), 1), (St(2, c, -1), 1)))
    for t in range(300):
        M = to_wd(random_generic(trial_rng(33, t), 6, 4))
        assert is_conjugate_orthogonal(M) == is_conjugate_orthogonal(M.sigma())


def test_bc_exists():
    assert bc_exists(to_wd(ms(St(1, b), St(1, c))))
    assert not bc_exists(to_wd(ms(St(2, a))))
    assert bc_exists(to_wd(ms(St(2, a), St(2, a))))
    with pytest.raises(OddDimension):
        bc_exists(to_wd(ms(St(1, a))))


def test_condition_A_examples():
    assert condition_A(ms(St(1, a2)))
    assert not condition_A(ms(St(1, a3), St(1, a3)))
    assert condition_A(ms(St(1, b, 1), St(1, c, -1)))
    with pytest.raises(NotGeneric):
        condition_A(ms(St(1, a, 1), St(1, a)))


def test_main_theorem_examples():
    check = main_theorem_check(ms(St(1, a3), St(1, a3)))
    assert (check.A, check.B, check.consistent) == (False, True, True)
    check = main_theorem_check(ms(St(1, a2)))
    assert (check.A, check.B, check.consistent) == (True, True, True)
    from zelevinsky.galois import MainCheck

    assert not MainCheck(True, False).consistent


def test_condition_A_grouping():
    g = decompose_condition_A_witness(ms(St(1, b), St(1, c)))
    assert g.dual_pairs == ((0, 1),) and not g.symplectic_pairs and not g.orthogonal_singletons
    g = decompose_condition_A_witness(ms(St(2, a), St(2, a)))
    assert g.symplectic_pairs == ((0, 1),) and not g.dual_pairs
    g = decompose_condition_A_witness(ms(St(1, a2)))
    assert g.orthogonal_singletons == (0,)
    with pytest.raises(ConditionAFails):
        decompose_condition_A_witness(ms(St(1, a3), St(1, a3)))


def test_grouping_on_random_A_instances():
    seen = 0
    for t in range(600):
        pi = random_generic(trial_rng(34, t), 6, 4, require_even=True)
        if not condition_A(pi):
            continue
        seen += 1
        g = decompose_condition_A_witness(pi)
        for i in g.orthogonal_singletons:
            assert pi[i].ambient_degree % 2 == 0
        used = sorted([i for p in g.dual_pairs + g.symplectic_pairs for i in p] + list(g.orthogonal_singletons))
        assert used == list(range(len(pi)))
    assert seen > 30


def test_bridge_and_main_theorem_random():
    for t in range(500):
        pi = random_generic(trial_rng(35, t), 6, 4, require_even=True)
        assert classify_gl(pi)[0] == bc_exists(to_wd(pi))
        if condition_A(pi):
            assert classify_h(pi)[0]


def test_remark_family():
    for m in (1, 3, 5, 7, 9):
        for deg in (d for d in range(1, m + 1) if m % d == 0):
            line = CuspidalLine.self_dual("o", deg, 1)
            table = LineTable([line])
            delta = St(m // deg, line)
            assert delta.ambient_degree == m
            pi = Multisegment((delta, delta), table)
            check = main_theorem_check(pi)
            assert check.B and not check.A
