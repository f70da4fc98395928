"""Vanishing predicates for Dolbeault cohomology of Schur bundles.

Every predicate returns a :class:`VanishingVerdict`: the group H^{p,q}
vanishes when ``q + p - n`` exceeds the threshold. The ampleness hypothesis
is carried as text only and never checked here.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

from .errors import DomainError
from .partitions import delta

PREDICATES = ("main", "hook", "wedge", "sym", "nagoya", "corollary")


@dataclass(frozen=True)
class VanishingQuery:
    n: int
    p: int
    q: int
    e: int
    alpha: int = 0
    beta: int = 0
    k: Optional[int] = None

    def swapped(self) -> "VanishingQuery":
        return VanishingQuery(self.n, self.q, self.p, self.e, self.alpha, self.beta, self.k)


class VanishingVerdict(NamedTuple):
    vanishes: bool
    threshold: int
    excess: int
    r0: Optional[int]
    hypothesis: str

    def as_dict(self) -> dict:
        return dict(self._asdict())


def _check_dims(n, p, q):
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not (0 <= p <= n and 0 <= q <= n):
        raise DomainError(f"need 0 <= p, q <= n, got p={p}, q={q}, n={n}")


def _check_rank(e):
    if e < 1:
        raise DomainError(f"rank e must be positive, got {e}")


@lru_cache(maxsize=None)
def _sym_ample(k: int) -> str:
    return f"S^{k}E ⊗ L is ample"


def _verdict(n, p, q, threshold, r0, hypothesis):
    excess = q + p - n - threshold
    return VanishingVerdict(excess > 0, threshold, excess, r0, hypothesis)


def r_zero(n: int, p: int, q: int, beta: int) -> int:
    return min(beta, delta(n - p), delta(n - q))


def vanish_main(n: int, p: int, q: int, e: int, alpha: int, beta: int) -> VanishingVerdict:
    """Bound for S^alpha E ⊗ ∧^beta E ⊗ L under ampleness of S^(alpha+beta) E ⊗ L.

    With beta = 0 the bound is the symmetric-power one and no r0 is reported.
    """
    _check_dims(n, p, q)
    _check_rank(e)
    if alpha < 0 or beta < 0 or alpha == beta == 0:
        raise DomainError(f"need alpha, beta >= 0 not both zero, got {alpha}, {beta}")
    if beta == 0:
        return vanish_sym(n, p, q, e, alpha)
    r0 = r_zero(n, p, q, beta)
    threshold = (r0 + alpha) * (e + alpha - beta) - alpha * (alpha + 1)
    return _verdict(n, p, q, threshold, r0, _sym_ample(alpha + beta))


def vanish_hook(n: int, p: int, q: int, e: int, alpha: int, k: int) -> VanishingVerdict:
    """Bound for the hook Schur bundle Γ^alpha_k E ⊗ L; beta is k - alpha."""
    _check_dims(n, p, q)
    _check_rank(e)
    if k < 1 or not 0 <= alpha <= k - 1:
        raise DomainError(f"need 0 <= alpha <= k-1, got alpha={alpha}, k={k}")
    r0 = r_zero(n, p, q, k - alpha)
    threshold = (r0 + alpha) * (e - k + 2 * alpha) - alpha * (alpha + 1)
    return _verdict(n, p, q, threshold, r0, _sym_ample(k))


def vanish_wedge(n: int, p: int, q: int, e: int, beta: int) -> VanishingVerdict:
    _check_dims(n, p, q)
    _check_rank(e)
    if beta < 1:
        raise DomainError(f"beta must be positive, got {beta}")
    r0 = r_zero(n, p, q, beta)
    return _verdict(n, p, q, r0 * (e - beta), r0, _sym_ample(beta))


def vanish_sym(n: int, p: int, q: int, e: int, alpha: int) -> VanishingVerdict:
    _check_dims(n, p, q)
    _check_rank(e)
    if alpha < 1:
        raise DomainError(f"alpha must be positive, got {alpha}")
    return _verdict(n, p, q, alpha * (e - 1), None, _sym_ample(alpha))


def vanish_nagoya(n: int, p: int, q: int, factors: Sequence[tuple[int, int]]) -> VanishingVerdict:
    """Bound for a tensor product of exterior powers ∧^{r_i} E_i ⊗ L.

    ``factors`` lists ``(r_i, e_i)`` pairs, e_i being the rank of E_i.
    """
    _check_dims(n, p, q)
    factors = [(int(r), int(e)) for r, e in factors]
    if not factors:
        raise DomainError("at least one factor is required")
    for r, e in factors:
        if not 1 <= r <= e:
            raise DomainError(f"need 1 <= r_i <= e_i, got r={r}, e={e}")
    threshold = sum(r * (e - r) for r, e in factors)
    text = " ⊗ ".join(f"∧^{r}E_{i + 1}" for i, (r, _) in enumerate(factors))
    return _verdict(n, p, q, threshold, None, f"{text} ⊗ L is ample")


def vanish_sym_wedge_corollary(n: int, p: int, q: int, e: int, alpha: int, beta: int) -> VanishingVerdict:
    _check_dims(n, p, q)
    _check_rank(e)
    if alpha < 0 or beta < 0 or alpha == beta == 0:
        raise DomainError(f"need alpha, beta >= 0 not both zero, got {alpha}, {beta}")
    threshold = alpha * (e - 1) + beta * (e - beta)
    return _verdict(n, p, q, threshold, None, _sym_ample(alpha + beta))


def evaluate(predicate: str, query: VanishingQuery) -> VanishingVerdict:
    """Dispatch a query to one of the named predicates in ``PREDICATES``.

    ``nagoya`` reads the query as the single factor ∧^beta E.
    """
    n, p, q, e, a, b = query.n, query.p, query.q, query.e, query.alpha, query.beta
    if predicate == "main":
        return vanish_main(n, p, q, e, a, b)
    if predicate == "hook":
        if query.k is None:
            raise DomainError("hook predicate needs k")
        return vanish_hook(n, p, q, e, a, query.k)
    if predicate == "wedge":
        return vanish_wedge(n, p, q, e, b)
    if predicate == "sym":
        return vanish_sym(n, p, q, e, a)
    if predicate == "nagoya":
        return vanish_nagoya(n, p, q, [(b, e)])
    if predicate == "corollary":
        return vanish_sym_wedge_corollary(n, p, q, e, a, b)
    raise DomainError(f"unknown predicate {predicate!r}")
