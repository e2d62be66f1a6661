"""Formal linear combinations over the monomial and power-sum bases.

The ring here is the variable-free ring of symmetric functions; restriction to
``n`` variables lives in :mod:`symnewton.oracle`.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .partitions import EMPTY, Partition

Scalar = Union[int, Fraction]


def _term_key(item):
    return item[0].sort_key()


class Expansion:
    """Immutable map ``Partition -> Fraction`` with zero coefficients pruned."""

    symbol = "?"

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, Scalar] | Iterable[tuple[Partition, Scalar]] = ()):
        acc: dict[Partition, Fraction] = defaultdict(Fraction)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lam, c in items:
            if not isinstance(lam, Partition):
                raise TypeError(f"expansion keys must be Partition, got {type(lam).__name__}")
            acc[lam] += Fraction(c)
        self._terms = {lam: c for lam, c in acc.items() if c}

    @classmethod
    def basis(cls, lam: Partition, coeff: Scalar = 1):
        return cls({lam: coeff})

    @classmethod
    def one(cls):
        return cls({EMPTY: 1})

    @property
    def terms(self) -> Mapping[Partition, Fraction]:
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in graded order (see :meth:`_order`)."""
        return self._order(self._terms.items())

    @staticmethod
    def _order(items):
        # graded reverse lexicographic: (3) before (2,1) before (1,1,1)
        return sorted(items, key=_term_key)

    def __getitem__(self, lam: Partition) -> Fraction:
        return self._terms.get(lam, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return (lam for lam, _ in self.items())

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar):
        c = Fraction(c)
        return type(self)({lam: c * v for lam, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def render(self) -> str:
        return render_expansion(self)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"{type(self).__name__}({self.render()!r})"


class MExpansion(Expansion):
    """Combination of monomial symmetric functions; the key ``()`` is the constant 1."""

    symbol = "m"
    __slots__ = ()


class PExpansion(Expansion):
    """Combination of power-sum products ``p_mu = p_mu1 ... p_mul``."""

    symbol = "p"
    __slots__ = ()

    @staticmethod
    def _order(items):
        # graded lexicographic: p[1,1,1] before p[2,1] before p[3]
        return sorted(items, key=lambda it: (it[0].weight(), it[0].flat()))

    def times_power(self, k: int) -> PExpansion:
        """Multiply by ``p_k``."""
        out = []
        for mu, c in self._terms.items():
            counts = mu.counts()
            counts[k] = counts.get(k, 0) + 1
            out.append((Partition.from_counts(counts), c))
        return PExpansion(out)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_expansion(x: Expansion) -> str:
    """``"m[2,1] + 2·m[1,1,1]"``; unit coefficients are dropped, ``"0"`` when empty."""
    pieces = []
    for i, (lam, c) in enumerate(x.items()):
        sign = "−" if c < 0 else "+"
        mag = abs(c)
        if lam.is_empty():
            body = _format_coeff(mag)
        else:
            label = f"{x.symbol}[{','.join(map(str, lam.flat()))}]"
            body = label if mag == 1 else f"{_format_coeff(mag)}·{label}"
        if i == 0:
            pieces.append(body if sign == "+" else f"−{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces) or "0"


def mexp_add(x: MExpansion, y: MExpansion) -> MExpansion:
    return x + y


def mexp_scale(c: Scalar, x: MExpansion) -> MExpansion:
    return x.scale(c)


def pieri_power_times_monomial(a: int, lam: Partition) -> MExpansion:
    """Expand ``p_a * m_lam`` in the monomial basis.

    Each source value ``v`` (0, or a distinct part of ``lam``) has one of its
    parts raised to ``v + a``; the resulting ``m_mu`` appears with coefficient
    equal to the multiplicity of ``v + a`` in ``mu``.
    """
    if a < 1:
        raise ValueError("power degree must be positive")
    counts = lam.counts()
    out = {}
    for v in (0,) + lam.values:
        new = dict(counts)
        if v:
            new[v] -= 1
        new[v + a] = new.get(v + a, 0) + 1
        out[Partition.from_counts(new)] = new[v + a]
    return MExpansion(out)


def pieri_literal_four_sums(a: int, lam: Partition) -> MExpansion:
    """``p_a * m_lam`` summed term by term in the four-sum form, overlaps accumulated.

    Kept separate from :func:`pieri_power_times_monomial` so each can check the other.
    """
    if a < 1:
        raise ValueError("power degree must be positive")
    parts = list(lam.parts)
    k = len(parts)

    def bump(changes):
        counts = {b: s for b, s in parts}
        for value, delta in changes:
            counts[value] = counts.get(value, 0) + delta
        return Partition.from_counts(counts)

    terms: list[tuple[Partition, int]] = []
    # m_(a, b_1^s_1, ..., b_k^s_k)
    terms.append((bump([(a, 1)]), 1))
    # sum_i m_(a+b_i, ..., b_i^(s_i-1), ...)
    for i in range(k):
        b_i = parts[i][0]
        terms.append((bump([(b_i, -1), (a + b_i, 1)]), 1))
    # sum_j delta(a, b_j) s_j m_(..., b_j^(s_j+1), ...)
    for j in range(k):
        b_j, s_j = parts[j]
        if a == b_j:
            terms.append((bump([(b_j, 1)]), s_j))
    # sum_{p,q} delta(a+b_p, b_q) s_q m_(..., b_q^(s_q+1), ..., b_p^(s_p-1), ...)
    for p in range(k):
        for q in range(k):
            b_p = parts[p][0]
            b_q, s_q = parts[q]
            if a + b_p == b_q:
                terms.append((bump([(b_q, 1), (b_p, -1)]), s_q))
    return MExpansion(terms)


def mexp_mul_power(a: int, x: MExpansion) -> MExpansion:
    """``p_a * x`` by linearity."""
    out = []
    for mu, c in x.terms.items():
        for nu, d in pieri_power_times_monomial(a, mu).terms.items():
            out.append((nu, c * d))
    return MExpansion(out)
