import random
from math import comb

import pytest

from dolbeault.bott import (BottInput, bott_cohomology, inversion_count, optimality_input,
                            pm_forms_cohomology, serre_dual_input)
from dolbeault.errors import DomainError
from dolbeault.schur import weyl_dim


def classical_pm_forms(m, p, k):
    """Oracle: the classical closed form for h^q(P^m, Ω^p(k))."""
    out = {}
    if k > p:
        out[0] = comb(k + m - p, k) * comb(k - 1, p)
    if k == 0:
        out[p] = 1
    if k < p - m:
        out[m] = comb(-k + p, -k) * comb(-k - 1, m - p)
    return out


@pytest.mark.parametrize("r,d,a,b,expected", [
    (1, 2, (3,), (0,), (0, (3, 0), 4)),
    (1, 2, (-1,), (0,), None),
    (2, 4, (2, 0), (3, 3), (2, (2, 2, 2, 2), 1)),
    (1, 2, (-2,), (0,), (1, (-1, -1), 1)),
])
def test_bott_examples(r, d, a, b, expected):
    res = bott_cohomology(BottInput(r, d, a, b))
    if expected is None:
        assert res.is_zero and res.as_dict() == {}
    else:
        assert (res.degree, tuple(res.psi), res.dim) == expected


def test_bott_input_validation():
    with pytest.raises(DomainError):
        BottInput(2, 4, (1,), (0, 0, 0))
    with pytest.raises(DomainError):
        BottInput(1, 2, (0,), (1, 0))
    with pytest.raises(DomainError):
        BottInput(2, 4, (0, 1), (0, 0))
    with pytest.raises(DomainError):
        BottInput(2, 2, (0, 0), ())


def test_inversion_count():
    assert inversion_count((1, -2, 0, -1)) == 2
    assert inversion_count(()) == 0


@pytest.mark.parametrize("r,f,expected", [
    (2, 2, (2, 4, (2, 0), (3, 3))), (3, 1, (3, 4, (1, 0, 0), (3,))), (1, 3, (1, 4, (3,), (3, 3, 3)))])
def test_optimality_input(r, f, expected):
    inp = optimality_input(r, f)
    assert (inp.r, inp.d, tuple(inp.a), tuple(inp.b)) == expected


def test_optimality_family():
    for r in range(1, 6):
        for f in range(1, 6):
            res = bott_cohomology(optimality_input(r, f))
            assert res.degree == f * (r - 1)
            assert tuple(res.psi) == (f,) * (f + r)
            assert res.dim == 1


@pytest.mark.parametrize("inp,expected", [
    (BottInput(1, 2, (3,), (0,)), ((-5,), (0,))),
    (BottInput(1, 2, (0,), (0,)), ((-2,), (0,))),
    (BottInput(2, 4, (1, 0), (0, 0)), ((-4, -5), (0, 0))),
])
def test_serre_dual_input(inp, expected):
    dual = serre_dual_input(inp)
    assert (tuple(dual.a), tuple(dual.b)) == expected


def random_input(rng):
    r = rng.randint(1, 3)
    d = rng.randint(r + 1, 6)
    a = sorted((rng.randint(-5, 5) for _ in range(r)), reverse=True)
    b = sorted((rng.randint(-5, 5) for _ in range(d - r)), reverse=True)
    return BottInput(r, d, a, b)


def test_serre_duality_and_shape():
    rng = random.Random(20240601)
    for _ in range(1000):
        inp = random_input(rng)
        res, dual = bott_cohomology(inp), bott_cohomology(serre_dual_input(inp))
        assert res.is_zero == dual.is_zero
        if not res.is_zero:
            assert res.degree + dual.degree == inp.dim_grassmannian
            assert res.dim == dual.dim
            assert 0 <= res.degree <= inp.dim_grassmannian
            assert list(res.psi) == sorted(res.psi, reverse=True)
            assert res.dim == weyl_dim(res.psi, inp.d) > 0


def test_determinant_twist():
    rng = random.Random(3)
    for _ in range(300):
        inp = random_input(rng)
        c = rng.randint(-4, 4)
        tw = BottInput(inp.r, inp.d, [x + c for x in inp.a], [x + c for x in inp.b])
        res, res_tw = bott_cohomology(inp), bott_cohomology(tw)
        assert res.is_zero == res_tw.is_zero
        if not res.is_zero:
            assert tuple(res_tw.psi) == tuple(x + c for x in res.psi)
            assert (res_tw.degree, res_tw.dim) == (res.degree, res.dim)


@pytest.mark.parametrize("m,p,t,expected", [
    (2, 1, 0, {1: 1}), (2, 1, 1, {}), (1, 0, 3, {0: 4}), (3, 3, 0, {3: 1})])
def test_pm_forms_examples(m, p, t, expected):
    assert pm_forms_cohomology(m, p, t) == expected


def test_pm_forms_matches_classical_formula():
    for m in range(1, 6):
        for p in range(m + 1):
            for t in range(-10, 11):
                assert pm_forms_cohomology(m, p, t) == classical_pm_forms(m, p, t), (m, p, t)


def test_hodge_diagonal():
    for m in range(1, 5):
        for p in range(m + 1):
            assert pm_forms_cohomology(m, p, 0) == {p: 1}


def test_pm_forms_range():
    with pytest.raises(DomainError):
        pm_forms_cohomology(2, 3, 0)
