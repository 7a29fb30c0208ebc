"""Partitions, generalized partitions and the predicates used to index
irreducible modules of the classical groups."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return format_partition(self)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, max(lam) + 1))


def contains(lam: Partition, mu: Partition) -> bool:
    """True when the diagram of mu sits inside the diagram of lam."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def is_hook(lam: Partition, m: int, n: int) -> bool:
    """(m|n)-hook condition: the (m+1)-th part is at most n."""
    return lam.part(m + 1) <= n


def tilde(lam: Partition, d: int) -> Partition:
    """Replace the first column of lam by a column of length d - lam'_1."""
    lc = conjugate(lam)
    if lc.part(1) + lc.part(2) > d:
        raise ValueError(f"{format_partition(lam)} is not an O({d}) label")
    return conjugate((d - lc.part(1),) + tuple(lc[1:])) if lc else conjugate((d,))


def in_P_O(lam: Partition, d: int) -> bool:
    lc = conjugate(lam)
    return lc.part(1) + lc.part(2) <= d


def in_P_Sp(lam: Partition, d: int) -> bool:
    return len(lam) <= d // 2


def macdonald_sum(lam: Partition) -> int:
    """sum_i lam_i (lam_i - 2i)."""
    return sum(p * (p - 2 * i) for i, p in enumerate(lam, 1))


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    yield from (Partition(p) for p in _parts(n, max_part, max_len))


@lru_cache(maxsize=None)
def _parts(n: int, max_part: int, max_len: int) -> tuple:
    if n == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _parts(n - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int, **kw) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions(k, **kw)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All mu contained in lam."""

    def rec(i, bound):
        if i == len(lam):
            yield ()
            return
        for p in range(min(bound, lam[i]), -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(i + 1, p):
                    yield (p,) + rest

    for mu in rec(0, lam[0] if lam else 0):
        yield Partition(mu)


# generalized partitions ---------------------------------------------------

class GeneralizedPartition(tuple):
    """Weakly decreasing integer sequence of fixed length d (GL(d) labels)."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def depth(self) -> int:
        return len(self)

    def split_pm(self) -> tuple[Partition, tuple[int, ...]]:
        return split_pm(self)

    def __repr__(self):
        return f"GeneralizedPartition({tuple(self)})"

    def __str__(self):
        return ",".join(str(p) for p in self) if self else "-"


def split_pm(lam: GeneralizedPartition) -> tuple[Partition, tuple[int, ...]]:
    """(lam+, lam-) with lam+_i = max(lam_i, 0) and lam-_i = max(-lam_i, 0).

    lam- is returned as a weakly increasing tuple indexed like lam, so that
    lam-_d is its largest entry.
    """
    plus = Partition(max(p, 0) for p in lam)
    minus = tuple(max(-p, 0) for p in lam)
    return plus, minus


def minus_partition(lam: GeneralizedPartition) -> Partition:
    """lam- rearranged as an ordinary partition."""
    return Partition(sorted((max(-p, 0) for p in lam), reverse=True))


def degree_pm(lam: GeneralizedPartition) -> int:
    return sum(abs(p) for p in lam)


def generalized_partitions(d: int, max_degree: int) -> Iterator[GeneralizedPartition]:
    """All GL(d) labels with |lam+| + |lam-| <= max_degree."""
    for tot in range(max_degree + 1):
        for a in range(tot + 1):
            for plus in partitions(a, max_len=d):
                for minus in partitions(tot - a, max_len=d - len(plus)):
                    yield GeneralizedPartition(tuple(plus) + (0,) * (d - len(plus) - len(minus))
                                               + tuple(-p for p in reversed(minus)))


# text form ----------------------------------------------------------------

def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return Partition()
    return Partition(int(t) for t in text.split(","))


def parse_generalized(text: str, d: int) -> GeneralizedPartition:
    text = text.strip()
    parts = [] if text in ("-", "") else [int(t) for t in text.split(",")]
    if len(parts) > d:
        raise ValueError(f"{text!r} has more than {d} parts")
    # pad in the middle so that negative tails stay at the end
    pos = [p for p in parts if p >= 0]
    neg = [p for p in parts if p < 0]
    return GeneralizedPartition(pos + [0] * (d - len(parts)) + neg)


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(str(p) for p in lam) if lam else "-"
