"""Brute-force expansion of symmetric polynomials in ``n`` explicit variables.

Nothing here touches :mod:`symnewton.ring`; it is the ground truth the
product rule and the generalized Newton identity are checked against.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .partitions import Partition

ExponentVector = tuple[int, ...]


def _exact(c):
    # integral values stay as int: same exact arithmetic, far cheaper than Fraction
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _grlex_key(exps: ExponentVector):
    return (sum(exps), tuple(-e for e in exps))


class SparsePoly:
    """Polynomial in ``x_1..x_n`` with exact rational coefficients, keyed by exponent tuples.

    Integral coefficients are held as ``int``, the rest as ``Fraction``.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[ExponentVector, Fraction | int] | None = None):
        if n < 1:
            raise ValueError("variable count must be >= 1")
        self.n = n
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not have arity {n}")
            c = _exact(c)
            if c:
                clean[tuple(exps)] = c
        self._terms = clean

    @classmethod
    def constant(cls, n: int, c) -> SparsePoly:
        return cls(n, {(0,) * n: c})

    @property
    def terms(self) -> dict[ExponentVector, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in graded order: degree ascending, then lexicographically descending."""
        return sorted(self._terms.items(), key=lambda it: _grlex_key(it[0]))

    def coeff(self, exps: ExponentVector) -> Fraction:
        return Fraction(self._terms.get(tuple(exps), 0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def _check(self, other: SparsePoly):
        if not isinstance(other, SparsePoly):
            raise TypeError(f"expected SparsePoly, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"arity mismatch: {self.n} vs {other.n}")

    def __add__(self, other: SparsePoly) -> SparsePoly:
        self._check(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return SparsePoly(self.n, acc)

    def __sub__(self, other: SparsePoly) -> SparsePoly:
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return poly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> SparsePoly:
        c = _exact(c)
        return SparsePoly(self.n, {e: c * v for e, v in self._terms.items()})

    def __call__(self, *point):
        return evaluate(self, point)

    def render_lines(self) -> list[str]:
        return render_poly(self)

    def __repr__(self):
        return f"SparsePoly({self.n}, {' + '.join(render_poly(self))})"


def poly_mul(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    f._check(g)
    acc: dict[ExponentVector, Fraction] = defaultdict(int)
    for e1, c1 in f._terms.items():
        for e2, c2 in g._terms.items():
            acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
    return SparsePoly(f.n, acc)


def multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct rearrangements of ``items`` in lexicographic order (next-permutation walk)."""
    seq = sorted(items)
    m = len(seq)
    while True:
        yield tuple(seq)
        i = m - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = m - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])


@lru_cache(maxsize=4096)
def expand_m(lam: Partition, n: int) -> SparsePoly:
    """``m_lam`` in ``n`` variables; zero when ``lam`` has more than ``n`` parts."""
    if lam.length() > n:
        return SparsePoly(n)
    padded = lam.flat() + (0,) * (n - lam.length())
    return SparsePoly(n, {perm: 1 for perm in multiset_permutations(padded)})


def expand_p(k: int, n: int) -> SparsePoly:
    """``x_1^k + ... + x_n^k``."""
    if k < 1:
        raise ValueError("power degree must be >= 1")
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = k
        terms[tuple(e)] = 1
    return SparsePoly(n, terms)


def specialize(x, n: int) -> SparsePoly:
    """Send a monomial-basis expansion (any ``Partition -> coefficient`` mapping) to ``n`` variables."""
    terms = x.terms if hasattr(x, "terms") else x
    out = SparsePoly(n)
    for lam, c in terms.items():
        out = out + expand_m(lam, n).scale(c)
    return out


def evaluate(f: SparsePoly, point: Sequence) -> Fraction:
    if len(point) != f.n:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {f.n} variables")
    xs = [Fraction(v) for v in point]
    total = Fraction(0)
    for exps, c in f._terms.items():
        term = c
        for x, e in zip(xs, exps):
            if e:
                term *= x ** e
        total += term
    return total


def render_poly(f: SparsePoly) -> list[str]:
    """One ``coeff*x1^c1*...`` line per term, zero exponents skipped; ``["0"]`` for zero."""
    if f.is_zero():
        return ["0"]
    lines = []
    for exps, c in f.items():
        coeff = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        factors = [f"x{i + 1}^{e}" for i, e in enumerate(exps) if e]
        lines.append("*".join([coeff] + factors))
    return lines
