"""Integer partitions in exponent form, bounded weak compositions and multinomials."""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

WeakComposition = tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """A partition stored as ``((a_1, r_1), ..., (a_k, r_k))`` with ``a_1 > ... > a_k >= 1``.

    Build instances with :meth:`from_list`, :meth:`from_counts` or :func:`parse_partition`;
    the constructor only validates.
    """

    parts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = None
        for value, mult in self.parts:
            if value < 1 or mult < 1:
                raise ValueError(f"bad part {value}^{mult}")
            if prev is not None and value >= prev:
                raise ValueError("part values must be strictly decreasing")
            prev = value

    @classmethod
    def from_list(cls, values: Iterable[int]) -> Partition:
        values = list(values)
        if any(v < 0 for v in values):
            raise ValueError("partition parts must be nonnegative")
        return cls.from_counts(Counter(v for v in values if v))

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> Partition:
        return cls(tuple(sorted(((v, m) for v, m in counts.items() if m), reverse=True)))

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.parts)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.parts)

    def counts(self) -> dict[int, int]:
        return dict(self.parts)

    def length(self) -> int:
        return sum(m for _, m in self.parts)

    def weight(self) -> int:
        return sum(v * m for v, m in self.parts)

    def flat(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable([v] * m for v, m in self.parts))

    def is_empty(self) -> bool:
        return not self.parts

    def sort_key(self):
        # weight ascending, then reverse lexicographic on the flat form
        return (self.weight(), tuple(-v for v in self.flat()))

    def __str__(self):
        return format_partition(self)

    def __repr__(self):
        return f"Partition({format_partition(self)!r})"


EMPTY = Partition()


def partition_from_list(values: Iterable[int]) -> Partition:
    return Partition.from_list(values)


def length(lam: Partition) -> int:
    return lam.length()


def weight(lam: Partition) -> int:
    return lam.weight()


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"2^3,1^2"``, ``"3,2,2,1"`` or a mix; ``"()"`` and ``""`` give the empty partition.

    A single pair of surrounding parentheses or brackets is ignored so that
    rendered forms such as ``p(2,1)``'s argument or ``m[2,1]``'s index re-parse.
    """
    s = text.strip()
    if len(s) >= 2 and (s[0], s[-1]) in (("(", ")"), ("[", "]")):
        s = s[1:-1].strip()
    if not s:
        return EMPTY
    counts: Counter[int] = Counter()
    for raw in s.split(","):
        token = raw.strip()
        match = _TOKEN.match(token)
        if match is None:
            raise ValueError(f"invalid partition token {token!r} in {text!r}")
        value = int(match.group(1))
        mult = int(match.group(2)) if match.group(2) is not None else 1
        if value:
            counts[value] += mult
    return Partition.from_counts(counts)


def format_partition(lam: Partition) -> str:
    """Canonical exponent form, ``'^1'`` omitted; ``"()"`` for the empty partition."""
    if lam.is_empty():
        return "()"
    return ",".join(str(v) if m == 1 else f"{v}^{m}" for v, m in lam.parts)


def enumerate_weak_compositions(lam: Partition) -> Iterator[WeakComposition]:
    """Every nonzero ``u`` with ``0 <= u_i <= r_i``, colexicographic ascending.

    The last coordinate varies slowest, so for ``(2, 1^2)`` the order is
    (1,0), (0,1), (1,1), (0,2), (1,2).
    """
    ranges = [range(r + 1) for r in reversed(lam.multiplicities)]
    for rev in itertools.product(*ranges):
        u = rev[::-1]
        if any(u):
            yield u


def composition_size(u: WeakComposition) -> int:
    return sum(u)


def dot(a: Iterable[int], u: WeakComposition) -> int:
    return sum(x * y for x, y in zip(a, u, strict=True))


def multinomial(u: WeakComposition) -> int:
    """``|u|! / (u_1! ... u_k!)`` as a product of binomials."""
    result = 1
    total = 0
    for x in u:
        if x < 0:
            raise ValueError("multinomial entries must be nonnegative")
        total += x
        result *= math.comb(total, x)
    return result


def _partitions_of(w: int, largest: int) -> Iterator[tuple[int, ...]]:
    # reverse lexicographic: largest first part first
    if w == 0:
        yield ()
        return
    for first in range(min(w, largest), 0, -1):
        for rest in _partitions_of(w - first, first):
            yield (first,) + rest


def partitions_of(w: int) -> list[Partition]:
    return [Partition.from_list(p) for p in _partitions_of(w, w)]


def partitions_up_to_weight(max_weight: int) -> list[Partition]:
    """All nonempty partitions of weight ``<= max_weight``, ordered by weight then reverse lex."""
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    out = []
    for w in range(1, max_weight + 1):
        out.extend(partitions_of(w))
    return out
