"""Irreducible characters of symmetric groups and shifted power sums.

Character values are computed by the Murnaghan-Nakayama rule, implemented on
the bead (first-column hook) encoding of a partition: removing a border strip
of length r is moving a bead from position b to the free position b - r, with
sign (-1)^(number of occupied positions passed).  Results are memoized on
(remaining shape, remaining class parts); the memo is a plain dict, which is
safe under CPython for concurrent readers with racing writers at worst
recomputing a pure value.  Evaluations stay exact integers throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .partitions import Partition, z_of

_memo: dict[tuple[Partition, Partition], int] = {}


def clear_cache() -> None:
    _memo.clear()


def character_cache_items():
    """Snapshot of memoized top-level values, for persistence."""
    return list(_memo.items())


def character_cache_insert(lam: Partition, mu: Partition, value: int) -> None:
    _memo[(lam, mu)] = value


def _beads(lam: Partition) -> tuple[int, ...]:
    """Strictly decreasing bead positions lam_i + (L - i), L = len(lam)."""
    L = len(lam)
    return tuple(lam[i] + (L - 1 - i) for i in range(L))


def _beads_to_partition(beads: list[int]) -> Partition:
    beads = sorted(beads, reverse=True)
    L = len(beads)
    lam = [beads[i] - (L - 1 - i) for i in range(L)]
    return tuple(p for p in lam if p > 0)


def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    r, rest = mu[0], mu[1:]
    beads = list(_beads(lam))
    occupied = set(beads)
    total = 0
    for idx, b in enumerate(beads):
        if b < r or (b - r) in occupied:
            continue
        crossings = sum(1 for x in beads if b - r < x < b)
        new_beads = beads[:idx] + beads[idx + 1 :] + [b - r]
        term = _mn(_beads_to_partition(new_beads), rest)
        total += -term if crossings % 2 else term
    _memo[key] = total
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Value of the irreducible character of S_n indexed by lam on the
    conjugacy class of cycle type mu (|lam| = |mu| = n)."""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    # largest class parts first: fewer strip choices near the root
    return _mn(lam, tuple(sorted(mu, reverse=True)))


def dimension(lam: Partition) -> int:
    """chi^lam(identity), the number of standard tableaux of shape lam."""
    return character(lam, (1,) * sum(lam))


def class_size(mu: Partition) -> int:
    """Number of permutations of cycle type mu in S_{|mu|}: n!/z_mu."""
    return factorial(sum(mu)) // z_of(mu)


def shifted_power_sum(lam: Partition, ell: int, variant: str) -> Fraction:
    """The ell-th shifted ("complex") or 2-shifted ("real") power sum.

    complex: sum_i (lam_i - i + 1/2)^ell - (-i + 1/2)^ell
    real:    sum_i (lam_i - i/2)^ell  - (-i/2)^ell

    Terms with lam_i = 0 vanish, so the sum runs over i = 1..len(lam).
    """
    if ell < 1:
        raise ValueError("exponent must be >= 1")
    if variant == "complex":
        shift = lambda i: Fraction(1 - 2 * i, 2)  # -i + 1/2
    elif variant == "real":
        shift = lambda i: Fraction(-i, 2)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    total = Fraction(0)
    for i, part in enumerate(lam, start=1):
        s = shift(i)
        total += (part + s) ** ell - s**ell
    return total


def nu(lam: Partition) -> Fraction:
    """Half the second shifted power sum; its powers count simply ramified
    torus covers (exponent 2g - 2 at genus g)."""
    return shifted_power_sum(lam, 2, "complex") / 2 if lam else Fraction(0)


def nu_real(lam: Partition) -> Fraction:
    """Second 2-shifted power sum; its powers count real simply ramified
    torus covers (exponent g - 1 at genus g)."""
    return shifted_power_sum(lam, 2, "real") if lam else Fraction(0)


def central_character(mu: Partition, lam: Partition) -> Fraction:
    """|C_mu| * chi^lam(mu) / chi^lam(1): eigenvalue of the class sum of mu
    acting on the irreducible module indexed by lam."""
    if sum(mu) != sum(lam):
        raise ValueError(f"size mismatch: |{mu}| != |{lam}|")
    return Fraction(class_size(mu) * character(lam, mu), dimension(lam))
