"""Index bookkeeping for the Borel-Le Potier spectral sequence.

Everything here is integer arithmetic on cell positions; no cohomology is
computed. The sequence abuts to H^{P,q}(G_r(E), det Q^l) with k = l*r.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .errors import DomainError
from .partitions import delta


@dataclass(frozen=True)
class SpectralParams:
    n: int
    e: int
    r: int
    l: int
    k: int
    P: int

    @property
    def p_lower_bound(self) -> int:
        """Smallest P for which the E1 formula is stated."""
        return self.n + (self.l - 1) * comb(self.r + 1, 2) - self.l * (self.r - 1)

    @property
    def is_valid(self) -> bool:
        return self.k == self.l * self.r and self.P >= self.p_lower_bound

    @property
    def dim_y(self) -> int:
        return self.n + self.r * (self.e - self.r)

    def validate(self) -> "SpectralParams":
        if min(self.n, self.e, self.r, self.l, self.k) < 1 or self.P < 0:
            raise DomainError(f"spectral parameters out of range: {self}")
        if self.k != self.l * self.r:
            raise DomainError(f"need k = l*r, got k={self.k}, l={self.l}, r={self.r}")
        if self.P < self.p_lower_bound:
            raise DomainError(f"P={self.P} below the E1 bound {self.p_lower_bound}")
        return self


@dataclass(frozen=True)
class SpectralCell:
    p: int
    alpha_p: Optional[int] = None
    j_p: Optional[int] = None

    @property
    def is_zero(self) -> bool:
        return self.alpha_p is None


def alpha_of(params: SpectralParams, p: int) -> Optional[int]:
    """The hook arm index at column p, or None when it is not a natural number.

    alpha(p) = (l-1)(r+1)/2 - (P-p)/r; it moves by mu when p moves by mu*r.
    """
    num = (params.l - 1) * comb(params.r + 1, 2) - (params.P - p)
    if num < 0 or num % params.r:
        return None
    return num // params.r


def j_of(params: SpectralParams, alpha_p: int) -> int:
    return (params.l - 1) * comb(params.r, 2) - (params.r - 1) * alpha_p


def e1_term(params: SpectralParams, p: int) -> SpectralCell:
    """Placement of the E1 term in column p: a hook group or zero."""
    params.validate()
    if not 0 <= p <= params.n:
        return SpectralCell(p)
    a = alpha_of(params, p)
    if a is None:
        return SpectralCell(p)
    return SpectralCell(p, a, j_of(params, a))


def e1_grid(params: SpectralParams) -> list[SpectralCell]:
    return [e1_term(params, p) for p in range(params.n + 1)]


def dm_targets(p: int, q: int, r: int, mu: int) -> dict[str, tuple[int, int]]:
    """Cells reached from (p, q) by the differential d_{mu r}, right and left."""
    if mu < 1:
        raise DomainError(f"mu must be a positive integer, got {mu}")
    if r < 1:
        raise DomainError(f"r must be positive, got {r}")
    step_q = mu * (r - 1) + 1
    return {"right": (p + mu * r, q + step_q), "left": (p - mu * r, q - step_q)}


def capital_q(x: int, alpha: int, e: int, k: int) -> int:
    """Degree bound Q(x, alpha) = x + (δ(x)+alpha)(e-k+2alpha) - alpha(alpha+1)."""
    if x < 0:
        raise DomainError(f"x must be non-negative, got {x}")
    return x + (delta(x) + alpha) * (e - k + 2 * alpha) - alpha * (alpha + 1)


def right_step_gap(x: int, alpha: int, mu: int, e: int, k: int) -> Optional[int]:
    """Closed form (e-k+2(alpha+mu))(δ(x)-mu-δ(x-mu δ(x))) + mu² + 1, if defined."""
    dx = delta(x)
    if x - mu * dx < 0:
        return None
    return (e - k + 2 * (alpha + mu)) * (dx - mu - delta(x - mu * dx)) + mu * mu + 1


def left_step_gap(x: int, alpha: int, mu: int, e: int, k: int) -> Optional[int]:
    """Closed form (e-k+2(alpha-mu))(δ(x)+mu-δ(x+mu δ(x))) + mu² - 1, if defined."""
    if alpha - mu < 0:
        return None
    dx = delta(x)
    return (e - k + 2 * (alpha - mu)) * (dx + mu - delta(x + mu * dx)) + mu * mu - 1


def identity_residuals(x: int, alpha: int, mu: int, e: int, k: int) -> dict[str, Optional[int]]:
    """Residuals of the two step identities for Q; both are zero when defined.

    res6 compares Q at (x, alpha) with Q one right step away at
    (x - mu δ(x), alpha + mu); res7 does the same for the left step
    (x + mu δ(x), alpha - mu).
    """
    if x < 0 or alpha < 0 or mu < 1:
        raise DomainError(f"need x, alpha >= 0 and mu >= 1, got {x}, {alpha}, {mu}")
    dx = delta(x)
    qx = capital_q(x, alpha, e, k)
    res6 = res7 = None
    gap = right_step_gap(x, alpha, mu, e, k)
    if gap is not None:
        lhs = qx - capital_q(x - mu * dx, alpha + mu, e, k) + mu * (dx - 1) + 1
        res6 = lhs - gap
    gap = left_step_gap(x, alpha, mu, e, k)
    if gap is not None:
        lhs = qx - capital_q(x + mu * dx, alpha - mu, e, k) - mu * (dx - 1) - 1
        res7 = lhs - gap
    return {"res6": res6, "res7": res7}


def threshold_equivalence(n: int, p: int, q: int, alpha: int, e: int, k: int, l: int, r: int) -> bool:
    """Check q > Q(n-p, alpha) iff P + q + j(p) - dim Y > alpha(e-k+alpha).

    P is chosen so that alpha(p) = alpha. For p < n the fibre rank must be
    r = δ(n-p); at p = n any r is accepted.
    """
    if n < 1 or not 0 <= p <= n or alpha < 0 or r < 1 or l < 1:
        raise DomainError("threshold_equivalence parameters out of range")
    if k != l * r:
        raise DomainError(f"need k = l*r, got k={k}, l={l}, r={r}")
    if p < n and r != delta(n - p):
        raise DomainError(f"need r = δ(n-p) = {delta(n - p)}, got {r}")
    big_p = p + (l - 1) * comb(r + 1, 2) - alpha * r
    j = (l - 1) * comb(r, 2) - (r - 1) * alpha
    dim_y = n + r * (e - r)
    lhs = q > capital_q(n - p, alpha, e, k)
    rhs = big_p + q + j - dim_y > alpha * (e - k + alpha)
    return lhs == rhs


def minimal_l(r: int, alpha: int, n: int, p: int) -> int:
    """Smallest l with l >= (r alpha + n - p)/(r - 1); 1 when p = n."""
    if not 0 <= p <= n or alpha < 0 or r < 1:
        raise DomainError("minimal_l parameters out of range")
    if p == n:
        return 1
    if r == 1:
        raise DomainError("the bound on l is undefined for r = 1 with p < n")
    num = r * alpha + n - p
    return max(1, -(-num // (r - 1)))
