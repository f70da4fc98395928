import itertools

import pytest

from dolbeault.errors import DomainError
from dolbeault.partitions import delta
from dolbeault.vanishing import (VanishingQuery, evaluate, vanish_hook, vanish_main, vanish_nagoya,
                                 vanish_sym, vanish_sym_wedge_corollary, vanish_wedge)


def summary(v):
    return v.vanishes, v.threshold, v.excess


@pytest.mark.parametrize("args,expected,r0", [
    ((4, 4, 2, 2, 1, 1), (False, 2, 0), 1),
    ((3, 3, 3, 2, 1, 1), (True, 2, 1), 1),
    ((2, 2, 2, 3, 0, 2), (True, 1, 1), 1),
])
def test_main_examples(args, expected, r0):
    v = vanish_main(*args)
    assert summary(v) == expected and v.r0 == r0
    assert v.hypothesis == f"S^{args[4] + args[5]}E ⊗ L is ample"


def test_main_beta_zero_routes_to_symmetric_bound():
    assert vanish_main(4, 4, 4, 2, 3, 0) == vanish_sym(4, 4, 4, 2, 3)


@pytest.mark.parametrize("args,expected", [
    ((4, 4, 2, 2, 1, 2), (False, 2, 0)),
    ((3, 3, 3, 4, 0, 2), (True, 2, 1)),
    # (r0 + alpha)(e - k + 2 alpha) - alpha(alpha+1) = 3*4 - 6
    ((5, 5, 5, 3, 2, 3), (False, 6, -1)),
])
def test_hook_examples(args, expected):
    assert summary(vanish_hook(*args)) == expected


@pytest.mark.parametrize("args,expected", [
    ((2, 2, 2, 3, 2), (True, 1, 1)), ((6, 0, 6, 4, 1), (False, 3, -3))])
def test_wedge_examples(args, expected):
    assert summary(vanish_wedge(*args)) == expected


@pytest.mark.parametrize("args,expected", [
    ((1, 1, 1, 1, 1), (True, 0, 1)), ((4, 4, 4, 2, 3), (True, 3, 1)), ((4, 2, 2, 2, 3), (False, 3, -3))])
def test_sym_examples(args, expected):
    v = vanish_sym(*args)
    assert summary(v) == expected and v.r0 is None


@pytest.mark.parametrize("args,expected", [
    ((2, 2, 1, [(1, 2)]), (False, 1, 0)),
    ((3, 3, 3, [(1, 1), (1, 1)]), (True, 0, 3)),
    ((4, 4, 4, [(1, 2), (2, 3)]), (True, 3, 1)),
])
def test_nagoya_examples(args, expected):
    assert summary(vanish_nagoya(*args)) == expected


@pytest.mark.parametrize("args,expected", [
    ((4, 4, 2, 2, 1, 1), (False, 2, 0)), ((2, 2, 2, 3, 0, 2), (False, 2, 0)), ((1, 1, 1, 1, 1, 0), (True, 0, 1))])
def test_corollary_examples(args, expected):
    assert summary(vanish_sym_wedge_corollary(*args)) == expected


@pytest.mark.parametrize("call", [
    lambda: vanish_main(3, 1, 1, 2, 0, 0),
    lambda: vanish_main(3, 4, 1, 2, 1, 1),
    lambda: vanish_hook(3, 1, 1, 2, 3, 3),
    lambda: vanish_wedge(3, 1, 1, 2, 0),
    lambda: vanish_sym(3, 1, 1, 2, 0),
    lambda: vanish_nagoya(3, 1, 1, [(3, 2)]),
    lambda: vanish_sym_wedge_corollary(3, 1, 1, 2, 0, 0),
    lambda: vanish_main(3, 1, 1, 0, 1, 1),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def grid(nmax=12, emax=8, amax=5):
    for n in range(1, nmax + 1):
        for p in range(n + 1):
            for q in range(n + 1):
                for e in range(1, emax + 1):
                    for a in range(amax + 1):
                        for b in range(amax + 1):
                            if a or b:
                                yield n, p, q, e, a, b


def test_wedge_is_main_at_alpha_zero():
    for n, p, q, e, a, b in grid(8, 6, 4):
        if a == 0:
            assert vanish_wedge(n, p, q, e, b) == vanish_main(n, p, q, e, 0, b)


def test_symmetric_threshold_is_corollary_at_beta_zero():
    for n, p, q, e, a, b in grid(8, 6, 4):
        if b == 0:
            assert vanish_sym(n, p, q, e, a).threshold == vanish_sym_wedge_corollary(n, p, q, e, a, 0).threshold


def test_main_ties_or_beats_corollary_on_nonzero_bundles():
    for n, p, q, e, a, b in grid(10, 8, 5):
        if 1 <= b <= e:
            assert vanish_main(n, p, q, e, a, b).threshold <= vanish_sym_wedge_corollary(n, p, q, e, a, b).threshold


def test_hook_threshold_monotone_in_alpha():
    for n in range(1, 11):
        for p, q in itertools.product(range(n + 1), repeat=2):
            for k in range(2, 8):
                for e in range(1, 10):
                    for a in range(0, k - 1):
                        if e >= k - a:
                            t0 = vanish_hook(n, p, q, e, a, k).threshold
                            t1 = vanish_hook(n, p, q, e, a + 1, k).threshold
                            assert t1 >= t0


def test_evaluate_dispatch():
    query = VanishingQuery(4, 4, 2, 2, 1, 1, k=2)
    assert evaluate("main", query) == vanish_main(4, 4, 2, 2, 1, 1)
    assert evaluate("hook", query) == vanish_hook(4, 4, 2, 2, 1, 2)
    assert evaluate("corollary", query) == vanish_sym_wedge_corollary(4, 4, 2, 2, 1, 1)
    assert evaluate("nagoya", VanishingQuery(2, 2, 1, 2, 0, 1)) == vanish_nagoya(2, 2, 1, [(1, 2)])
    assert query.swapped().p == 2
    with pytest.raises(DomainError):
        evaluate("bogus", query)


def test_r0_uses_both_deltas():
    v = vanish_main(10, 2, 9, 5, 1, 4)
    assert v.r0 == min(4, delta(8), delta(1))
