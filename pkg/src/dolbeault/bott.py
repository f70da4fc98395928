"""Bott's algorithm for homogeneous bundles on Grassmannians.

The Grassmannian Gr(r, d) carries the rank-r bundle Q and the rank-(d-r)
bundle S. A bundle S_a Q ⊗ S_b S is encoded by the concatenated weight
v = (a, b) with the Q block first; the shift is c(d) = (1, 2, ..., d).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from . import _kernels
from .errors import DomainError
from .schur import WeightVector


@dataclass(frozen=True)
class BottInput:
    r: int
    d: int
    a: WeightVector
    b: WeightVector

    def __init__(self, r: int, d: int, a: Iterable[int], b: Iterable[int]):
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "d", int(d))
        object.__setattr__(self, "a", WeightVector(a))
        object.__setattr__(self, "b", WeightVector(b))
        if self.r < 1 or self.d <= self.r:
            raise DomainError(f"need 1 <= r < d, got r={self.r}, d={self.d}")
        if len(self.a) != self.r or len(self.b) != self.d - self.r:
            raise DomainError(
                f"a must have length r={self.r} and b length d-r={self.d - self.r}, "
                f"got {len(self.a)} and {len(self.b)}")

    @property
    def dim_grassmannian(self) -> int:
        return self.r * (self.d - self.r)

    @property
    def weight(self) -> tuple[int, ...]:
        return tuple(self.a) + tuple(self.b)


@dataclass(frozen=True)
class BottResult:
    """Cohomology of one homogeneous bundle: zero, or one GL(V)-module in one degree."""
    degree: Optional[int] = None
    psi: Optional[WeightVector] = None
    dim: int = 0

    @property
    def is_zero(self) -> bool:
        return self.degree is None

    def as_dict(self) -> dict[int, int]:
        return {} if self.is_zero else {self.degree: self.dim}


ZERO = BottResult()


def inversion_count(v: Iterable[int]) -> int:
    """Number of pairs i < j with v_i < v_j."""
    v = tuple(v)
    return sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] < v[j])


@lru_cache(maxsize=None)
def _bott(weight: tuple[int, ...]) -> BottResult:
    core = _kernels.bott_core(weight)
    if core is None:
        return ZERO
    q, psi = core
    return BottResult(q, WeightVector(psi), _kernels.weyl_dim(psi))


def bott_cohomology(inp: BottInput) -> BottResult:
    """Cohomology of S_a Q ⊗ S_b S on Gr(r, d)."""
    if not isinstance(inp, BottInput):
        raise DomainError("expected a BottInput")
    return _bott(inp.weight)


def optimality_input(r: int, f: int) -> BottInput:
    """S^f Q ⊗ (det S)^(d-1) on Gr(r, f+r)."""
    if r < 1 or f < 1:
        raise DomainError(f"r and f must be positive, got r={r}, f={f}")
    d = f + r
    return BottInput(r, d, (f,) + (0,) * (r - 1), (d - 1,) * f)


def serre_dual_input(inp: BottInput) -> BottInput:
    """The dual bundle twisted by the canonical bundle (det Q^*)^d."""
    a = tuple(-x - inp.d for x in reversed(inp.a))
    b = tuple(-x for x in reversed(inp.b))
    return BottInput(inp.r, inp.d, a, b)


def pm_forms_input(m: int, p: int, t: int) -> BottInput:
    """Encode Ω^p(t) on projective m-space as a bundle on Gr(m, m+1).

    Ω^p = ∧^p Q^* ⊗ S^p and O(1) = det Q, with S the tautological line.
    """
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    if not 0 <= p <= m:
        raise DomainError(f"need 0 <= p <= m, got p={p}, m={m}")
    return BottInput(m, m + 1, (t,) * (m - p) + (t - 1,) * p, (p,))


def pm_forms_cohomology(m: int, p: int, t: int) -> dict[int, int]:
    """Nonzero dimensions of H^q(P^m, Ω^p(t)), keyed by q."""
    return bott_cohomology(pm_forms_input(m, p, t)).as_dict()
