"""Integer partitions: enumeration, orders and hook statistics.

Partitions are plain tuples of weakly decreasing positive ints; the empty
partition is ``()``.  Tuples give structural equality, hashability and
immutability for free, so every function here is pure and safe to call from
any thread.  All maps keyed by partitions iterate in the canonical
reverse-lexicographic order produced by :func:`enumerate_partitions`
([n] first, [1^n] last), which keeps every downstream output reproducible.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod

Partition = tuple[int, ...]

#: hard cap on partition sizes; enumeration beyond this is refused.
MAX_PARTITION_SIZE = 64


def as_partition(parts) -> Partition:
    """Validate and normalize an iterable of parts into a partition tuple."""
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam):
        raise ValueError(f"parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    if sum(lam) > MAX_PARTITION_SIZE:
        raise ValueError(f"partition size {sum(lam)} exceeds cap {MAX_PARTITION_SIZE}")
    return lam


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order ([n] first).

    The order is total and fixed; it also refines dominance (if lam
    dominates mu then lam comes first), which Gram-Schmidt over monomials
    relies on.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_PARTITION_SIZE:
        raise ValueError(f"partition size {n} exceeds cap {MAX_PARTITION_SIZE}")

    result: list[Partition] = []

    def descend(remaining: int, largest: int, prefix: tuple[int, ...]):
        if remaining == 0:
            result.append(prefix)
            return
        for part in range(min(largest, remaining), 0, -1):
            descend(remaining - part, part, prefix + (part,))

    descend(n, n if n else 1, ())
    return tuple(result)


def z_of(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type lam:
    prod_i i^{m_i} m_i! over part multiplicities m_i."""
    out = 1
    run = 0
    prev = None
    for p in lam:
        if p == prev:
            run += 1
        else:
            prev, run = p, 1
        out *= p * run
    return out


def double(lam: Partition) -> Partition:
    """Each part doubled: [l1, l2, ...] -> [2*l1, 2*l2, ...]."""
    return tuple(2 * p for p in lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dominance_leq(lam: Partition, mu: Partition) -> bool | None:
    """Standard dominance: True iff every prefix sum of lam is <= the
    matching prefix sum of mu (equal sizes).

    Returns False when mu strictly dominates lam or the sizes differ, and
    None when the two are incomparable.
    """
    if sum(lam) != sum(mu):
        return False
    le = ge = True
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            le = False
        if a < b:
            ge = False
    if le:
        return True
    if ge:
        return False
    return None


def hook_product(lam: Partition) -> int:
    """Product of hook lengths arm + leg + 1 over the boxes of lam."""
    conj = conjugate(lam)
    return prod(
        lam[i] - j + conj[j] - i - 1
        for i in range(len(lam))
        for j in range(lam[i])
    )


def partition_to_json(lam: Partition) -> list[int]:
    return list(lam)


def partition_from_json(data) -> Partition:
    return as_partition(data)
