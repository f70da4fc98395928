"""Schur functor decompositions and GL(d) dimensions."""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import _kernels
from .errors import DomainError
from .partitions import IntPartition, partitions_of, transpose


class WeightVector(tuple):
    """A non-increasing tuple of integers (a dominant GL weight)."""

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(x) for x in entries)
        for i in range(1, len(entries)):
            if entries[i - 1] < entries[i]:
                raise DomainError(f"weight must be non-increasing, got {entries}")
        return super().__new__(cls, entries)

    def __repr__(self):
        return f"WeightVector({tuple(self)})"


class SchurDecomposition(Mapping):
    """Multiset of Schur functors, as a read-only mapping partition -> multiplicity.

    Iteration order is deterministic: by weight, then reverse-lexicographic on
    parts, so the row comes first.
    """

    def __init__(self, terms: Mapping[Iterable[int], int] | Iterable[tuple[Iterable[int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[IntPartition, int] = {}
        for shape, mult in items:
            shape = IntPartition(shape)
            acc[shape] = acc.get(shape, 0) + int(mult)
        for shape, mult in acc.items():
            if mult < 0:
                raise DomainError(f"negative multiplicity for {shape}")
        self._terms = {s: acc[s] for s in sorted(acc, key=lambda s: (s.weight, [-p for p in s])) if acc[s]}

    def __getitem__(self, key):
        return self._terms[IntPartition(key)]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self._terms == SchurDecomposition(other)._terms
        return NotImplemented

    def __repr__(self):
        body = ", ".join(f"{tuple(s)}: {m}" for s, m in self._terms.items())
        return f"SchurDecomposition({{{body}}})"

    def dimension(self, d: int) -> int:
        """Total GL(d) dimension; terms longer than d contribute nothing."""
        return sum(m * weyl_dim(s, d) for s, m in self._terms.items() if len(s) <= d)

    def to_records(self) -> list[dict]:
        return [{"partition": list(s), "multiplicity": m} for s, m in self._terms.items()]


def _lr_candidates(u: IntPartition, v: IntPartition) -> Iterator[IntPartition]:
    # outer shapes containing u, inside the box u + v_1 per row
    total = u.weight + v.weight
    max_len = len(u) + len(v)
    width = (u[0] if u else 0) + (v[0] if v else 0)
    for lam in partitions_of(total, width, max_len):
        if all(lam.part(i) >= u.part(i) for i in range(1, len(u) + 1)):
            if all(lam.part(i) <= u.part(i) + v.part(1) for i in range(1, len(lam) + 1)):
                yield lam


def lr_coefficient(outer: Iterable[int], u: Iterable[int], v: Iterable[int]) -> int:
    """Multiplicity of S_outer in S_u ⊗ S_v."""
    outer, u, v = IntPartition(outer), IntPartition(u), IntPartition(v)
    if outer.weight != u.weight + v.weight:
        return 0
    if not outer:
        return 1
    return _kernels.lr_coefficient(tuple(outer), tuple(u), tuple(v))


def lr_decompose(u: Iterable[int], v: Iterable[int]) -> SchurDecomposition:
    """Decompose S_u ⊗ S_v by counting LR tableaux of shape λ/u and content v."""
    u, v = IntPartition(u), IntPartition(v)
    if not v:
        return SchurDecomposition({u: 1})
    if not u:
        return SchurDecomposition({v: 1})
    terms = {}
    for lam in _lr_candidates(u, v):
        c = _kernels.lr_coefficient(tuple(lam), tuple(u), tuple(v))
        if c:
            terms[lam] = c
    return SchurDecomposition(terms)


def hook(alpha: int, k: int) -> IntPartition:
    """Shape of Γ^alpha_k: first row alpha+1, weight k."""
    if k < 1 or not 0 <= alpha <= k - 1:
        raise DomainError(f"hook needs 0 <= alpha <= k-1, got alpha={alpha}, k={k}")
    return IntPartition((alpha + 1,) + (1,) * (k - alpha - 1))


def sym_wedge_decompose(alpha: int, beta: int) -> SchurDecomposition:
    """S^alpha ⊗ ∧^beta as a sum of at most two hooks."""
    if alpha < 0 or beta < 0:
        raise DomainError("alpha and beta must be non-negative")
    if alpha == 0 and beta == 0:
        raise DomainError("alpha and beta cannot both be zero")
    k = alpha + beta
    if beta == 0:
        return SchurDecomposition({(alpha,): 1})
    if alpha == 0:
        return SchurDecomposition({(1,) * beta: 1})
    return SchurDecomposition({hook(alpha, k): 1, hook(alpha - 1, k): 1})


def tensor_power_decompose(alpha: int) -> SchurDecomposition:
    """Decomposition of the alpha-fold tensor power of the standard module."""
    if alpha < 1:
        raise DomainError(f"alpha must be positive, got {alpha}")
    current = {IntPartition((1,)): 1}
    for _ in range(alpha - 1):
        nxt: dict[IntPartition, int] = {}
        for shape, mult in current.items():
            for lam, c in lr_decompose(shape, (1,)).items():
                nxt[lam] = nxt.get(lam, 0) + mult * c
        current = nxt
    return SchurDecomposition(current)


def weyl_dim(lam: Sequence[int], d: int) -> int:
    """Dimension of the irreducible GL(d)-module of highest weight lam.

    ``lam`` is padded with zeros to length d and must then be non-increasing.

    >>> weyl_dim((2, 1), 3)
    8
    """
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    lam = tuple(int(x) for x in lam)
    if len(lam) > d:
        raise DomainError(f"weight {lam} longer than d={d}")
    padded = WeightVector(lam + (0,) * (d - len(lam)))
    return _kernels.weyl_dim(tuple(padded))


@dataclass(frozen=True)
class RelativeFormsTerm:
    """One summand S_u Q^* ⊗ ∧_u S of the relative forms."""
    u: IntPartition

    @property
    def quotient_factor(self) -> str:
        return f"S_{tuple(self.u)} Q^*"

    @property
    def sub_factor(self) -> str:
        return f"S_{tuple(transpose(self.u))} S"

    @property
    def wedge_shape(self) -> IntPartition:
        return transpose(self.u)


def relative_forms_decompose(m: int, r: int, s: int) -> list[RelativeFormsTerm]:
    """Summands of the degree-m relative forms on a Grassmann bundle.

    Partitions u of weight m with at most r rows (rank of Q) and first part
    at most s (rank of S), so both factors are non-zero.
    """
    if m < 0 or r < 1 or s < 1:
        raise DomainError(f"need m >= 0 and r, s >= 1, got m={m}, r={r}, s={s}")
    return [RelativeFormsTerm(u) for u in partitions_of(m, s, r)]
