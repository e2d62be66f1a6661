"""Deliberately naive reference computations shared by the tests.

None of these reuse the package's own algorithms: permutations are deduplicated
with a set, partitions come from ``combinations_with_replacement``, and
multinomials from factorials.
"""

import itertools
import math
from collections import defaultdict
from fractions import Fraction


def multinomial_factorial(u):
    out = math.factorial(sum(u))
    for x in u:
        out //= math.factorial(x)
    return out


def all_partitions(w):
    """Every partition of ``w`` as a descending tuple, by exhaustive search."""
    found = set()
    for length in range(1, w + 1):
        for combo in itertools.combinations_with_replacement(range(1, w + 1), length):
            if sum(combo) == w:
                found.add(tuple(sorted(combo, reverse=True)))
    return found


def m_poly(flat, n):
    """dict exponent-tuple -> Fraction for m_flat in n variables."""
    if len(flat) > n:
        return {}
    padded = tuple(flat) + (0,) * (n - len(flat))
    return {perm: Fraction(1) for perm in set(itertools.permutations(padded))}


def p_poly(k, n):
    return {tuple(k if j == i else 0 for j in range(n)): Fraction(1) for i in range(n)}


def mul(f, g):
    acc = defaultdict(Fraction)
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
    return {e: c for e, c in acc.items() if c}


def add(f, g, scale=1):
    acc = defaultdict(Fraction, f)
    for e, c in g.items():
        acc[e] += scale * c
    return {e: c for e, c in acc.items() if c}


def m_combination(terms, n):
    """terms: iterable of (flat partition tuple, coefficient)."""
    out = {}
    for flat, c in terms:
        out = add(out, m_poly(flat, n), c)
    return out
