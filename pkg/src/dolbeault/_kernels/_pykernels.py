"""Pure-Python reference kernels.

Same signatures and results as the compiled ``_ckernels`` module. Inputs are
assumed validated by the calling module.
"""
from math import isqrt


def delta(x):
    # floor((sqrt(8x+1)+1)/2), exact
    return (isqrt(8 * x + 1) + 1) // 2


def bott_core(v):
    """Return ``(degree, psi)`` for the concatenated weight ``v``, or None.

    ``v`` is shifted by ``(1, 2, ..., d)``; a repeated entry means every
    cohomology group vanishes.
    """
    d = len(v)
    w = [v[i] - i - 1 for i in range(d)]
    if len(set(w)) < d:
        return None
    q = 0
    for i in range(d):
        wi = w[i]
        for j in range(i + 1, d):
            if wi < w[j]:
                q += 1
    w.sort(reverse=True)
    return q, tuple(w[i] + i + 1 for i in range(d))


def weyl_dim(lam):
    d = len(lam)
    num = 1
    den = 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


def lr_coefficient(outer, inner, content):
    """Count LR tableaux of shape ``outer/inner`` and weight ``content``.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left) so the lattice condition is checked on the fly.
    """
    rows = len(outer)
    inner = list(inner) + [0] * (rows - len(inner))
    if len(inner) > rows:
        return 0
    if any(inner[i] > outer[i] for i in range(rows)):
        return 0
    if sum(outer) - sum(inner) != sum(content):
        return 0
    cells = [(i, j) for i in range(rows) for j in range(outer[i] - 1, inner[i] - 1, -1)]
    if not cells:
        return 1
    nlet = len(content)
    table = {}
    counts = [0] * (nlet + 1)

    def fill(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        lo = 1
        if i > 0 and j >= inner[i - 1]:
            lo = table[i - 1, j] + 1
        hi = min(nlet, i + 1)
        if j + 1 < outer[i]:
            hi = min(hi, table[i, j + 1])
        total = 0
        for val in range(lo, hi + 1):
            if counts[val] >= content[val - 1]:
                continue
            if val > 1 and counts[val] >= counts[val - 1]:
                continue
            counts[val] += 1
            table[i, j] = val
            total += fill(pos + 1)
            counts[val] -= 1
        return total

    return fill(0)
