"""Exit criteria: one test per criterion, exact tolerance, wall-clock bound.

Each test records a one-line verdict; the lines are printed in the pytest
terminal summary, or directly with ``python tests/test_acceptance.py``.
"""
import random
import time
from contextlib import contextmanager

from dolbeault.bott import BottInput, bott_cohomology, optimality_input, serre_dual_input
from dolbeault.harness import SweepBox, sweep_validate
from dolbeault.partitions import delta, partitions_of
from dolbeault.schur import lr_decompose, weyl_dim
from dolbeault.spectral import (capital_q, identity_residuals, left_step_gap, minimal_l,
                                right_step_gap, threshold_equivalence)
from dolbeault.vanishing import vanish_hook, vanish_main, vanish_sym_wedge_corollary

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number, name, limit):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        RESULTS[number] = f"FAIL  {number}. {name}: {type(exc).__name__}: {exc}"
        raise
    elapsed = time.perf_counter() - start
    if elapsed >= limit:
        RESULTS[number] = f"FAIL  {number}. {name}: {elapsed:.2f}s exceeds {limit}s"
        raise AssertionError(RESULTS[number])
    RESULTS[number] = f"PASS  {number}. {name} ({elapsed:.2f}s < {limit}s)"


def test_1_delta_conformance():
    with criterion(1, "delta values and step properties", 1.0):
        table = {0: 1, 1: 2, 2: 2, 3: 3, 4: 3, 5: 3, 6: 4, 7: 4, 8: 4, 9: 4}
        assert all(delta(x) == v for x, v in table.items())
        for x in range(10001):
            assert delta(x + delta(x)) == delta(x) + 1
        for x in range(2001):
            dx = delta(x)
            for mu in range(1, 21):
                assert delta(x + mu * dx) <= dx + mu
                if x - mu * dx >= 0:
                    assert delta(x - mu * dx) <= dx - mu


def test_2_optimality_reproduction():
    with criterion(2, "optimality on Gr(r, f+r), 1 <= r, f <= 5", 1.0):
        for r in range(1, 6):
            for f in range(1, 6):
                res = bott_cohomology(optimality_input(r, f))
                assert res.degree == f * (r - 1)
                assert res.dim == 1
                assert tuple(res.psi) == (f,) * (f + r)
                n = f * r
                assert vanish_main(n, n, n - f, r, f - 1, 1).excess == 0


def test_3_cross_validation_sweep():
    with criterion(3, "split-bundle sweep m,e <= 3, degrees/c in [0,2], alpha+beta <= 3", 60.0):
        box = SweepBox(m=(1, 2, 3), e=(1, 2, 3), degrees=(0, 1, 2), c=(0, 1, 2),
                       alpha=(0, 1, 2, 3), beta=(0, 1, 2, 3), max_weight=3,
                       predicates=("main", "wedge", "sym", "corollary"))
        report = sweep_validate(box)
        assert report.cases_checked > 0
        assert report.violations == [], report.to_text()


def test_4_lr_dimension_identity():
    with criterion(4, "LR dimension identity, d <= 5, |u|,|v| <= 4", 10.0):
        shapes = [u for w in range(5) for u in partitions_of(w)]
        for u in shapes:
            for v in shapes:
                dec = lr_decompose(u, v)
                for d in range(1, 6):
                    du = weyl_dim(u, d) if len(u) <= d else 0
                    dv = weyl_dim(v, d) if len(v) <= d else 0
                    rhs = sum(c * weyl_dim(lam, d) for lam, c in dec.items() if len(lam) <= d)
                    assert du * dv == rhs, (u, v, d)


def test_5_proof_identities():
    with criterion(5, "step identities, gap signs, threshold equivalence", 5.0):
        for x in range(51):
            for alpha in range(7):
                for ek in range(-10, 11):
                    mu = 1
                    while True:
                        res = identity_residuals(x, alpha, mu, ek, 0)
                        if res["res6"] is None and res["res7"] is None:
                            break
                        assert res["res6"] in (0, None) and res["res7"] in (0, None)
                        if res["res6"] is not None and ek + 2 * (alpha + mu) >= 0:
                            assert right_step_gap(x, alpha, mu, ek, 0) > 0
                        if res["res7"] is not None and ek + 2 * (alpha - mu) >= 0:
                            g = left_step_gap(x, alpha, mu, ek, 0)
                            assert g >= 0 and (mu == 1 or g > 0)
                        mu += 1
        for n in range(1, 9):
            for p in range(n + 1):
                r = delta(n - p)
                for alpha in range(4):
                    if p < n and r < 2:
                        continue
                    l0 = minimal_l(r, alpha, n, p)
                    for l in (l0, l0 + 1):
                        for e in range(1, 11):
                            for q in range(31):
                                assert threshold_equivalence(n, p, q, alpha, e, l * r, l, r)
        assert capital_q(2, 1, 4, 6) == 0


def test_6_serre_duality():
    with criterion(6, "Serre duality on 1000 seeded Bott inputs", 1.0):
        rng = random.Random(1729)
        for _ in range(1000):
            r = rng.randint(1, 3)
            d = rng.randint(r + 1, 6)
            a = sorted((rng.randint(-5, 5) for _ in range(r)), reverse=True)
            b = sorted((rng.randint(-5, 5) for _ in range(d - r)), reverse=True)
            inp = BottInput(r, d, a, b)
            res, dual = bott_cohomology(inp), bott_cohomology(serre_dual_input(inp))
            assert res.is_zero == dual.is_zero
            if not res.is_zero:
                assert res.degree + dual.degree == r * (d - r)
                assert res.dim == dual.dim


def test_7_algebraic_reductions():
    with criterion(7, "hook = main, r0 = beta identity, p <-> q symmetry", 5.0):
        for n in range(1, 13):
            for p in range(n + 1):
                for q in range(n + 1):
                    dmin = min(delta(n - p), delta(n - q))
                    for e in range(1, 9):
                        for a in range(6):
                            for b in range(6):
                                if a == b == 0:
                                    continue
                                main = vanish_main(n, p, q, e, a, b)
                                cor = vanish_sym_wedge_corollary(n, p, q, e, a, b)
                                assert main == vanish_main(n, q, p, e, a, b)
                                assert cor == vanish_sym_wedge_corollary(n, q, p, e, a, b)
                                if b >= 1:
                                    hook = vanish_hook(n, p, q, e, a, a + b)
                                    assert (hook.vanishes, hook.threshold, hook.excess, hook.r0) == \
                                        (main.vanishes, main.threshold, main.excess, main.r0)
                                    assert hook == vanish_hook(n, q, p, e, a, a + b)
                                if b <= dmin:
                                    assert main.threshold == cor.threshold


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        try:
            t()
        except Exception:
            pass
    for n in sorted(RESULTS):
        print(RESULTS[n])
