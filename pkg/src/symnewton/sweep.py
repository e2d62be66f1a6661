"""Verification sweeps over every partition up to a weight bound."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .newton import matches_classical, verify_formal, verify_theorem
from .partitions import Partition, partitions_up_to_weight

POLICIES = ("paper", "extended")


@dataclass(frozen=True)
class Failure:
    kind: str  # "oracle", "formal" or "classical"
    partition: tuple[int, ...]
    n: Optional[int] = None
    monomial: Optional[tuple[int, ...]] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None


@dataclass
class SweepReport:
    bound: int
    policy: str
    partitions: int = 0
    checked: int = 0
    formal_checked: int = 0
    classical_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def variable_counts(lam: Partition, policy: str) -> list[int]:
    l = lam.length()
    ns = {l, l + 1}
    if policy == "extended":
        ns.add(max(1, l - 1))
    elif policy != "paper":
        raise ValueError(f"unknown policy {policy!r}")
    return sorted(ns)


def _check_one(args) -> tuple[int, list[Failure]]:
    lam, policy = args
    failures = []
    ns = variable_counts(lam, policy)
    for n in ns:
        v = verify_theorem(lam, n)
        if not v:
            failures.append(Failure("oracle", lam.flat(), n, v.monomial, v.lhs, v.rhs))
    if not verify_formal(lam):
        failures.append(Failure("formal", lam.flat()))
    return len(ns), failures


def run_sweep(max_weight: int, policy: str = "paper", jobs: int = 1) -> SweepReport:
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    start = time.perf_counter()
    parts = partitions_up_to_weight(max_weight)
    work = [(lam, policy) for lam in parts]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_one, work, chunksize=4))
    else:
        results = [_check_one(w) for w in work]

    report = SweepReport(bound=max_weight, policy=policy, partitions=len(parts))
    for checked, failures in results:
        report.checked += checked
        report.failures.extend(failures)
    report.formal_checked = len(parts)
    for k in range(1, max_weight + 1):
        report.classical_checked += 1
        if not matches_classical(k):
            report.failures.append(Failure("classical", (1,) * k))
    report.failures.sort(key=_failure_key)
    report.wall_time = time.perf_counter() - start
    return report


def _failure_key(f: Failure):
    return (f.kind, len(f.partition), f.partition, f.n or 0)
