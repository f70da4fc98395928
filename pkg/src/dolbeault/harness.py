"""Falsification harness on split bundles over projective space.

For E = O(d_1) ⊕ ... ⊕ O(d_e) and L = O(c) on P^m, every Schur bundle of E
splits into line bundles, so H^{p,q} is a sum of Bott computations for
Ω^p(t). The sweep compares those exact groups with each vanishing predicate.

Box configuration files are INI files with a single ``[box]`` section::

    [box]
    m = 1..3            # inclusive range
    e = 1..3
    degrees = 0..2      # every summand degree ranges over this set
    c = 0..2
    alpha = 0..3
    beta = 0..3
    max_weight = 3      # alpha + beta <= max_weight
    p = 0..3            # optional, clipped to [0, m]
    q = 0..3            # optional, clipped to [0, m]
    predicates = main, wedge, sym, corollary, nagoya
    workers = 1

A value is an integer, an inclusive range ``lo..hi``, or a comma list.
"""
from __future__ import annotations

import configparser
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Optional

from .bott import bott_cohomology, optimality_input, pm_forms_cohomology
from .errors import ConfigError, DomainError
from .vanishing import PREDICATES, VanishingQuery, VanishingVerdict, evaluate, vanish_main

SWEEP_PREDICATES = ("main", "wedge", "sym", "corollary", "nagoya")


@dataclass(frozen=True)
class SplitBundleSpec:
    m: int
    degrees: tuple[int, ...]
    c: int

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(x) for x in self.degrees))
        if self.m < 1:
            raise DomainError(f"m must be positive, got {self.m}")
        if not self.degrees:
            raise DomainError("at least one summand degree is required")

    @property
    def e(self) -> int:
        return len(self.degrees)


def hypothesis_split_ample(spec: SplitBundleSpec, k: int) -> bool:
    """Whether S^k E ⊗ L is ample, i.e. its smallest summand degree is positive."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    return k * min(spec.degrees) + spec.c > 0


def wedge_split_ample(spec: SplitBundleSpec, beta: int) -> bool:
    """Whether ∧^beta E ⊗ L is ample (zero bundles count as not ample)."""
    if not 1 <= beta <= spec.e:
        return False
    return sum(sorted(spec.degrees)[:beta]) + spec.c > 0


def summand_degrees(spec: SplitBundleSpec, alpha: int, beta: int) -> Counter:
    """Line-bundle degrees of S^alpha E ⊗ ∧^beta E ⊗ L with multiplicities."""
    sym = Counter(sum(c) for c in combinations_with_replacement(spec.degrees, alpha))
    wedge = Counter(sum(c) for c in combinations(spec.degrees, beta))
    out: Counter = Counter()
    for s, ms in sym.items():
        for w, mw in wedge.items():
            out[s + w + spec.c] += ms * mw
    return out


def split_cohomology(spec: SplitBundleSpec, alpha: int, beta: int, p: int) -> dict[int, int]:
    """Dimensions of H^q(P^m, S^alpha E ⊗ ∧^beta E ⊗ L ⊗ Ω^p), zeros omitted."""
    if alpha < 0 or beta < 0 or alpha == beta == 0:
        raise DomainError(f"need alpha, beta >= 0 not both zero, got {alpha}, {beta}")
    if not 0 <= p <= spec.m:
        raise DomainError(f"need 0 <= p <= m, got p={p}, m={spec.m}")
    if beta > spec.e:
        return {}
    total: Counter = Counter()
    for t, mult in summand_degrees(spec, alpha, beta).items():
        for q, dim in pm_forms_cohomology(spec.m, p, t).items():
            total[q] += mult * dim
    return {q: total[q] for q in sorted(total) if total[q]}


def applicable_predicates(alpha: int, beta: int, predicates: Iterable[str]) -> list[str]:
    out = []
    for name in predicates:
        if name == "main" and beta >= 1:
            out.append(name)
        elif name in ("wedge", "nagoya") and alpha == 0 and beta >= 1:
            out.append(name)
        elif name == "sym" and beta == 0 and alpha >= 1:
            out.append(name)
        elif name == "corollary":
            out.append(name)
    return out


@dataclass(frozen=True, order=True)
class SweepCase:
    m: int
    degrees: tuple[int, ...]
    c: int
    alpha: int
    beta: int
    p: int
    q: int
    predicate: str

    def query(self) -> VanishingQuery:
        return VanishingQuery(self.m, self.p, self.q, len(self.degrees), self.alpha, self.beta)


@dataclass(frozen=True, order=True)
class Finding:
    case: SweepCase
    verdict: VanishingVerdict = field(compare=False)
    dimension: int = field(compare=False)

    def to_record(self) -> dict:
        rec = asdict(self.case)
        rec["degrees"] = list(self.case.degrees)
        rec["verdict"] = self.verdict.as_dict()
        rec["dimension"] = str(self.dimension)
        return rec


@dataclass
class SweepReport:
    cases_checked: int = 0
    violations: list[Finding] = field(default_factory=list)
    boundary_witnesses: list[Finding] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "SweepReport") -> None:
        self.cases_checked += other.cases_checked
        self.violations.extend(other.violations)
        self.boundary_witnesses.extend(other.boundary_witnesses)

    def finalize(self) -> "SweepReport":
        self.violations.sort()
        self.boundary_witnesses.sort()
        return self

    def to_record(self) -> dict:
        return {
            "cases_checked": self.cases_checked,
            "violations": [f.to_record() for f in self.violations],
            "boundary_witnesses": [f.to_record() for f in self.boundary_witnesses],
        }

    def to_text(self) -> str:
        lines = [f"cases_checked {self.cases_checked}",
                 f"violations {len(self.violations)}",
                 f"boundary_witnesses {len(self.boundary_witnesses)}"]
        for label, items in (("violation", self.violations), ("boundary", self.boundary_witnesses)):
            for f in items:
                c = f.case
                lines.append(
                    f"{label} {c.predicate} m={c.m} degrees={list(c.degrees)} c={c.c} "
                    f"alpha={c.alpha} beta={c.beta} p={c.p} q={c.q} "
                    f"threshold={f.verdict.threshold} excess={f.verdict.excess} dim={f.dimension}")
        return "\n".join(lines)


def _parse_values(key: str, text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = (int(s) for s in text.split(".."))
            return tuple(range(lo, hi + 1))
        return tuple(sorted({int(s) for s in text.split(",") if s.strip()}))
    except ValueError:
        raise ConfigError(f"bad value for {key!r}: {text!r}") from None


@dataclass(frozen=True)
class SweepBox:
    m: tuple[int, ...] = (1, 2, 3)
    e: tuple[int, ...] = (1, 2, 3)
    degrees: tuple[int, ...] = (0, 1, 2)
    c: tuple[int, ...] = (0, 1, 2)
    alpha: tuple[int, ...] = (0, 1, 2, 3)
    beta: tuple[int, ...] = (0, 1, 2, 3)
    max_weight: int = 3
    p: Optional[tuple[int, ...]] = None
    q: Optional[tuple[int, ...]] = None
    predicates: tuple[str, ...] = SWEEP_PREDICATES
    workers: int = 1

    _RANGE_KEYS = ("m", "e", "degrees", "c", "alpha", "beta", "p", "q")

    @classmethod
    def from_mapping(cls, values: dict[str, str]) -> "SweepBox":
        kwargs: dict = {}
        for key, raw in values.items():
            if key in cls._RANGE_KEYS:
                kwargs[key] = _parse_values(key, raw)
            elif key in ("max_weight", "workers"):
                try:
                    kwargs[key] = int(raw)
                except ValueError:
                    raise ConfigError(f"bad value for {key!r}: {raw!r}") from None
            elif key == "predicates":
                names = tuple(s.strip() for s in raw.split(",") if s.strip())
                unknown = [s for s in names if s not in PREDICATES]
                if unknown:
                    raise ConfigError(f"unknown predicates: {unknown}")
                kwargs[key] = names
            else:
                raise ConfigError(f"unknown box key {key!r}")
        box = cls(**kwargs)
        if any(v < 1 for v in box.m) or any(v < 1 for v in box.e):
            raise ConfigError("m and e ranges must be positive")
        if any(v < 0 for v in box.alpha + box.beta):
            raise ConfigError("alpha and beta ranges must be non-negative")
        return box

    @classmethod
    def from_file(cls, path: str) -> "SweepBox":
        parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
        try:
            with open(path, encoding="utf-8") as fh:
                parser.read_file(fh)
        except (OSError, configparser.Error) as exc:
            raise ConfigError(f"cannot read sweep config {path}: {exc}") from None
        if not parser.has_section("box"):
            raise ConfigError(f"{path}: missing [box] section")
        return cls.from_mapping(dict(parser.items("box")))

    def specs(self) -> list[SplitBundleSpec]:
        out = []
        for m in self.m:
            for e in self.e:
                # permuting summands gives isomorphic bundles
                for degs in combinations_with_replacement(self.degrees, e):
                    for c in self.c:
                        out.append(SplitBundleSpec(m, degs, c))
        return out

    def weights(self) -> list[tuple[int, int]]:
        return [(a, b) for a in self.alpha for b in self.beta
                if (a, b) != (0, 0) and a + b <= self.max_weight]


def _sweep_spec(spec: SplitBundleSpec, box: SweepBox) -> SweepReport:
    report = SweepReport()
    n = spec.m
    ps = [p for p in (box.p if box.p is not None else range(n + 1)) if 0 <= p <= n]
    qs = [q for q in (box.q if box.q is not None else range(n + 1)) if 0 <= q <= n]
    for alpha, beta in box.weights():
        if beta > spec.e or not hypothesis_split_ample(spec, alpha + beta):
            continue
        preds = applicable_predicates(alpha, beta, box.predicates)
        if not preds:
            continue
        for p in ps:
            coh = split_cohomology(spec, alpha, beta, p)
            for q in qs:
                report.cases_checked += 1
                dim = coh.get(q, 0)
                for name in preds:
                    if name == "nagoya" and not wedge_split_ample(spec, beta):
                        continue
                    case = SweepCase(n, spec.degrees, spec.c, alpha, beta, p, q, name)
                    verdict = evaluate(name, case.query())
                    if verdict.vanishes and dim:
                        report.violations.append(Finding(case, verdict, dim))
                    elif verdict.excess == 0 and dim:
                        report.boundary_witnesses.append(Finding(case, verdict, dim))
    return report


def sweep_validate(box: SweepBox | None = None, workers: int | None = None) -> SweepReport:
    """Check every predicate against exact cohomology on all bundles in the box.

    A case is one (bundle, alpha, beta, p, q) with a non-zero bundle and the
    ampleness hypothesis satisfied. The report is sorted, so its contents do
    not depend on ``workers``.
    """
    box = box or SweepBox()
    workers = box.workers if workers is None else workers
    specs = box.specs()
    report = SweepReport()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_sweep_spec, specs, [box] * len(specs), chunksize=8):
                report.merge(part)
    else:
        for spec in specs:
            report.merge(_sweep_spec(spec, box))
    return report.finalize()


def optimality_reproduce(r: int, f: int) -> dict:
    """Bott degree/dimension of the sharpness example and the main-bound excess there."""
    res = bott_cohomology(optimality_input(r, f))
    n = f * r
    verdict = vanish_main(n, n, n - f, r, f - 1, 1)
    return {
        "bott_degree": res.degree,
        "bott_dim": res.dim,
        "verdict_excess": verdict.excess,
    }
