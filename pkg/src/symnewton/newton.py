"""Generalized Newton-Girard identity for monomial symmetric functions.

For ``lam = (a_1^r_1, ..., a_k^r_k)``::

    l(lam) m_lam = sum_u (-1)^(|u|-1) multinomial(u) p_(a.u) m_(a_1^(r_1-u_1), ..., a_k^(r_k-u_k))

over nonzero weak compositions ``u`` bounded by the multiplicities.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import oracle
from .partitions import (
    EMPTY,
    Partition,
    WeakComposition,
    dot,
    enumerate_weak_compositions,
    multinomial,
)
from .ring import MExpansion, PExpansion, mexp_mul_power


@dataclass(frozen=True)
class TheoremTerm:
    sign: int
    coeff: int
    power_degree: int
    residual: Partition
    composition: WeakComposition

    @property
    def signed_coeff(self) -> int:
        return self.sign * self.coeff


def theorem_terms(lam: Partition) -> list[TheoremTerm]:
    """Right-hand side terms of the identity for ``lam``, in composition order."""
    if lam.is_empty():
        raise ValueError("the identity is vacuous for the empty partition")
    values = lam.values
    mults = lam.multiplicities
    terms = []
    for u in enumerate_weak_compositions(lam):
        size = sum(u)
        residual = Partition.from_counts({a: r - x for a, r, x in zip(values, mults, u)})
        terms.append(
            TheoremTerm(
                sign=1 if size % 2 else -1,
                coeff=multinomial(u),
                power_degree=dot(values, u),
                residual=residual,
                composition=u,
            )
        )
    return terms


@dataclass(frozen=True)
class Verdict:
    """Outcome of one oracle check; truthy iff both sides agree."""

    ok: bool
    partition: Partition
    n: int
    monomial: Optional[tuple[int, ...]] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None

    def __bool__(self):
        return self.ok


def theorem_sides(lam: Partition, n: int) -> tuple[oracle.SparsePoly, oracle.SparsePoly]:
    lhs = oracle.expand_m(lam, n).scale(lam.length())
    acc: dict[tuple[int, ...], int] = {}
    for t in theorem_terms(lam):
        prod = oracle.poly_mul(oracle.expand_p(t.power_degree, n), oracle.expand_m(t.residual, n))
        for e, c in prod.terms.items():
            acc[e] = acc.get(e, 0) + t.signed_coeff * c
    return lhs, oracle.SparsePoly(n, acc)


def verify_theorem(lam: Partition, n: int) -> Verdict:
    """Check the identity for ``lam`` in ``n`` explicit variables using the oracle only."""
    lhs, rhs = theorem_sides(lam, n)
    if lhs == rhs:
        return Verdict(True, lam, n)
    diff = lhs - rhs
    witness = diff.items()[0][0]
    return Verdict(False, lam, n, witness, lhs.coeff(witness), rhs.coeff(witness))


def formal_identity_sides(lam: Partition) -> tuple[MExpansion, MExpansion]:
    """Both sides of the identity inside the symmetric-function ring, built from the product rule alone."""
    lhs = MExpansion.basis(lam, lam.length())
    rhs = MExpansion()
    for t in theorem_terms(lam):
        rhs = rhs + mexp_mul_power(t.power_degree, MExpansion.basis(t.residual)).scale(t.signed_coeff)
    return lhs, rhs


def verify_formal(lam: Partition) -> bool:
    lhs, rhs = formal_identity_sides(lam)
    return lhs == rhs


_memo: dict[Partition, PExpansion] = {EMPTY: PExpansion.one()}
_memo_lock = threading.Lock()


def m_to_p(lam: Partition) -> PExpansion:
    """Power-sum expansion of ``m_lam`` by solving the identity for ``m_lam`` recursively.

    Results are memoized per partition. Concurrent callers may both compute
    the same entry; the values are equal, so the second write is harmless.
    """
    hit = _memo.get(lam)
    if hit is not None:
        return hit
    acc = PExpansion()
    for t in theorem_terms(lam):
        acc = acc + m_to_p(t.residual).times_power(t.power_degree).scale(t.signed_coeff)
    result = acc.scale(Fraction(1, lam.length()))
    with _memo_lock:
        _memo.setdefault(lam, result)
    return result


def clear_cache():
    with _memo_lock:
        _memo.clear()
        _memo[EMPTY] = PExpansion.one()


def e_to_p(k: int) -> PExpansion:
    """``e_k`` from the classical recurrence ``k e_k = sum_i (-1)^(i-1) p_i e_(k-i)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    es = [PExpansion.one()]
    for j in range(1, k + 1):
        acc = PExpansion()
        for i in range(1, j + 1):
            acc = acc + es[j - i].times_power(i).scale((-1) ** (i - 1))
        es.append(acc.scale(Fraction(1, j)))
    return es[k]


def classical_terms(k: int) -> list[tuple[int, int, int]]:
    """``(sign, i, k - i)`` for each term of the classical recurrence at ``k``."""
    return [((-1) ** (i - 1), i, k - i) for i in range(1, k + 1)]


def matches_classical(k: int) -> bool:
    """Does the general identity at ``(1^k)`` collapse term for term to the classical one?"""
    lam = Partition(((1, k),))
    got = [(t.sign * t.coeff, t.power_degree, t.residual) for t in theorem_terms(lam)]
    want = [(s, i, Partition.from_list([1] * rest)) for s, i, rest in classical_terms(k)]
    return got == want and m_to_p(lam) == e_to_p(k)


def evaluate_p(x: PExpansion, point: Sequence) -> Fraction:
    """Evaluate a power-sum expansion at ``point`` with ``p_j = sum_i x_i^j``."""
    xs = [Fraction(v) for v in point]
    power_sums: dict[int, Fraction] = {}

    def p(j):
        if j not in power_sums:
            power_sums[j] = sum((v ** j for v in xs), Fraction(0))
        return power_sums[j]

    total = Fraction(0)
    for mu, c in x.terms.items():
        term = c
        for part in mu.flat():
            term *= p(part)
        total += term
    return total
