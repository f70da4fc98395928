"""Partitions, the delta function, dominance and the phi-order."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterable, Iterator, NamedTuple

from . import _kernels
from .errors import DomainError

# cross-multiplied prefix sums must stay inside signed 128-bit range
_INT128_MAX = (1 << 127) - 1


class IntPartition(tuple):
    """A non-increasing tuple of positive integers.

    >>> IntPartition([3, 1, 1]).weight
    5
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise DomainError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise DomainError(f"partition must be non-increasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_padded(cls, parts: Iterable[int]) -> "IntPartition":
        """Build from a sequence that may carry trailing zeros."""
        return cls(p for p in parts if p != 0)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __repr__(self):
        return f"IntPartition({tuple(self)})"


@dataclass(frozen=True)
class HookShape:
    alpha: int
    k: int

    def __post_init__(self):
        if self.k < 1 or not 0 <= self.alpha <= self.k - 1:
            raise DomainError(f"hook needs 0 <= alpha <= k-1, got alpha={self.alpha}, k={self.k}")

    @property
    def shape(self) -> IntPartition:
        return IntPartition((self.alpha + 1,) + (1,) * (self.k - self.alpha - 1))


class PhiTriple(NamedTuple):
    f1: int
    f2: int
    f3: int


class Dominance(Enum):
    GREATER_EQ = "GreaterEq"
    LESS_EQ = "LessEq"
    EQUIVALENT = "Equivalent"
    INCOMPARABLE = "Incomparable"
    STRICTLY_GREATER = "StrictlyGreater"
    STRICTLY_LESS = "StrictlyLess"


class PhiOrder(Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


def _nonneg(name: str, value: int) -> int:
    if int(value) != value or value < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {value}")
    return int(value)


def delta(x: int) -> int:
    """Return the unique m with C(m, 2) <= x < C(m+1, 2)."""
    if type(x) is int and x >= 0:
        return _kernels.delta(x)
    return _kernels.delta(_nonneg("x", x))


def transpose(u: Iterable[int]) -> IntPartition:
    u = IntPartition(u)
    if not u:
        return u
    return IntPartition(sum(1 for p in u if p > j) for j in range(u[0]))


def shape_stats(u: Iterable[int]) -> dict:
    u = IntPartition(u)
    rank = 0
    for i, p in enumerate(u, start=1):
        if p >= i:
            rank = i
        else:
            break
    return {"rank": rank, "is_hook": rank == 1}


def _prefix_sums(u, scale, length):
    total = 0
    out = []
    for i in range(length):
        total += scale * (u[i] if i < len(u) else 0)
        if total > _INT128_MAX:
            raise OverflowError("scaled prefix sum exceeds 128-bit range")
        out.append(total)
    return out


def dominance_compare(u: Iterable[int], v: Iterable[int]) -> Dominance:
    """Compare two non-zero partitions in the scaled dominance pre-order.

    ``u`` and ``v`` of weights n and m are compared via the prefix sums of
    m*u against those of n*v.
    """
    u, v = IntPartition(u), IntPartition(v)
    if not u or not v:
        raise DomainError("dominance is only defined on non-zero partitions")
    length = max(len(u), len(v))
    su = _prefix_sums(u, v.weight, length)
    sv = _prefix_sums(v, u.weight, length)
    geq = all(a >= b for a, b in zip(su, sv))
    leq = all(a <= b for a, b in zip(su, sv))
    if geq and leq:
        return Dominance.EQUIVALENT
    if geq:
        return Dominance.STRICTLY_GREATER
    if leq:
        return Dominance.STRICTLY_LESS
    return Dominance.INCOMPARABLE


def dominates(u, v) -> bool:
    """True when u is weakly above v (u ⪰ v)."""
    return dominance_compare(u, v) in (Dominance.EQUIVALENT, Dominance.STRICTLY_GREATER,
                                       Dominance.GREATER_EQ)


def phi(x: int, alpha: int) -> PhiTriple:
    x, alpha = _nonneg("x", x), _nonneg("alpha", alpha)
    dx = delta(x)
    return PhiTriple(dx + alpha, x - comb(dx, 2), alpha)


def phi_compare(a: tuple[int, int], b: tuple[int, int]) -> PhiOrder:
    """Lexicographic comparison of phi(a) with phi(b)."""
    pa, pb = phi(*a), phi(*b)
    if pa < pb:
        return PhiOrder.LESS
    if pa > pb:
        return PhiOrder.GREATER
    return PhiOrder.EQUAL


def partitions_of(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[IntPartition]:
    """All partitions of n, largest first, with optional part/length bounds."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def gen(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            if first * slots < rest:
                break
            for tail in gen(rest - first, first, slots - 1):
                yield (first,) + tail

    for parts in gen(n, max_part, max_length):
        yield IntPartition(parts)
