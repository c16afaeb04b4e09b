"""
Integer partitions as cycle types.

A Partition is the canonical key of every series coefficient in this
package: a tuple of positive parts in weakly decreasing order. Generation
order is decreasing lexicographic within a size, e.g. for n = 4:
(4), (3,1), (2,2), (2,1,1), (1,1,1,1).
"""
from collections import Counter
from functools import lru_cache
from math import factorial, gcd
from typing import Dict, Iterable, Iterator, List, Tuple


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; equal iff the part lists are equal."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        ordered = sorted((int(p) for p in parts), reverse=True)
        if ordered and ordered[-1] < 1:
            raise ValueError(f"partition parts must be positive, got {ordered}")
        return tuple.__new__(cls, ordered)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        # caller guarantees the parts are positive and already weakly decreasing
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def multiplicity(self, k: int) -> int:
        """m_k: number of parts equal to k."""
        return self.count(k)

    def multiplicities(self) -> Dict[int, int]:
        """Map part -> multiplicity, largest part first."""
        return dict(sorted(Counter(self).items(), reverse=True))

    def join(self, other: "Partition") -> "Partition":
        """Union of parts, the cycle type of a disjoint product (p_λ·p_μ = p_{λ∪μ})."""
        if not other:
            return self
        if not self:
            return other
        return Partition._trusted(sorted(self + other, reverse=True))

    def scaled(self, k: int) -> "Partition":
        """Every part multiplied by k (p_k ∘ p_λ)."""
        return Partition._trusted(p * k for p in self)

    def without_ones(self, j: int) -> "Partition":
        """Remove j parts equal to 1; raises ValueError if fewer are present."""
        if self.count(1) < j:
            raise ValueError(f"{self!r} has fewer than {j} parts equal to 1")
        return Partition._trusted(self[: len(self) - j])

    def to_json(self) -> List[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


EMPTY = Partition()


def canonical_key(lam: Partition) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: by size, then decreasing lexicographic within a size."""
    return (sum(lam), tuple(-p for p in lam))


def _generate(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> Tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return tuple(Partition._trusted(parts) for parts in _generate(n, n))


def partitions_up_to(bound: int) -> Iterator[Partition]:
    """Partitions of 0, 1, ..., bound in canonical order."""
    for n in range(bound + 1):
        yield from enumerate_partitions(n)


@lru_cache(maxsize=None)
def z_of(lam: Partition) -> int:
    """Centralizer order z_λ = Π_k k^{m_k} m_k!."""
    z = 1
    for part, mult in Counter(lam).items():
        z *= part ** mult * factorial(mult)
    return z


def class_size(lam: Partition) -> int:
    """Number of permutations of cycle type λ, n!/z_λ."""
    return factorial(sum(lam)) // z_of(lam)


@lru_cache(maxsize=None)
def power_type(lam: Partition, k: int) -> Partition:
    """
    Cycle type of σ^k when σ has cycle type λ: a cycle of length ℓ splits
    into gcd(ℓ, k) cycles of length ℓ / gcd(ℓ, k).
    """
    if k < 1:
        raise ValueError(f"power must be positive, got {k}")
    if k == 1:
        return lam
    parts: List[int] = []
    for part in lam:
        g = gcd(part, k)
        parts.extend([part // g] * g)
    return Partition(parts)


def augment(lam: Partition, j: int) -> Partition:
    """λ with j extra fixed points: the cycle type seen by the j-th derivative."""
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    if j == 0:
        return lam
    return Partition._trusted(tuple(lam) + (1,) * j)
