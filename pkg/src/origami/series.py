"""Generating polynomials for complex, real, and Jack-interpolated origami.

Degree bookkeeping for the real flavor: the layer index n is the size of the
half profile, i.e. the cover has degree 2n and ramification profile
[l1 l1 l2 l2 ...] over the branch point.  Connectivity means the group
generated by the two monodromies together with the fixed-point-free
involution acts transitively; that is exactly what the formal logarithm of
the disconnected series extracts, and it counts two-component covers swapped
by the involution as connected.

Coefficients are automorphism-weighted exact rationals throughout.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .jack import jack
from .partitions import Partition, enumerate_partitions
from .qseries import QSeries, eisenstein, sigma
from .symfunc import (
    GradedSeries,
    SymFunc,
    graded_series,
    series_log,
    substitute_genus,
    sym_one,
    weighted_schur_sum,
)


@lru_cache(maxsize=None)
def complex_series(N: int, connected: bool) -> GradedSeries:
    """Covers of the torus branched over one point, by degree n <= N.

    Layer n is sum over lam |- n of hook_product(lam) * s_lam expanded in
    power sums; the coefficient of p_lam is the automorphism-weighted number
    of degree-n covers with profile lam.  The connected form is the log.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    layers = [sym_one()] + [weighted_schur_sum(n, 1) for n in range(1, N + 1)]
    series = graded_series(layers)
    return series_log(series) if connected else series


@lru_cache(maxsize=None)
def real_series(N: int, connected: bool) -> GradedSeries:
    """Real origami series: layer n = sum of zonal polynomials of degree n.

    The coefficient of p_lam in layer n is O(lam)/(2^n n!), where O(lam)
    counts monodromy pairs compatible with the fixed involution and commutator
    profile [lam lam]; the cover degree is 2n.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    layers = [sym_one()]
    for n in range(1, N + 1):
        acc = SymFunc("p", n, {})
        for rho in enumerate_partitions(n):
            acc = acc + jack(rho, 2).expansion_p
        layers.append(acc)
    series = graded_series(layers)
    return series_log(series) if connected else series


def jack_series(N: int, alpha, connected: bool) -> GradedSeries:
    """Jack-deformed series: layer n = sum over lam |- n of J^(alpha)_lam.

    alpha = 1 reproduces complex_series exactly and alpha = 2 real_series.
    """
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if N < 1:
        raise ValueError("N must be >= 1")
    layers = [sym_one()]
    for n in range(1, N + 1):
        acc = SymFunc("p", n, {})
        for lam in enumerate_partitions(n):
            acc = acc + jack(lam, alpha).expansion_p
        layers.append(acc)
    series = graded_series(layers)
    return series_log(series) if connected else series


def genus_table(n: int) -> dict[int, Fraction]:
    """Connected complex covers of degree n bucketed by genus.

    Substituting p_i -> x^(i-1) into the connected layer turns the profile
    grading into x^(2g-2); only even exponents occur because commutators are
    even permutations.
    """
    layer = complex_series(n, connected=True).layer(n)
    out: dict[int, Fraction] = {}
    for expo, coeff in substitute_genus(layer).items():
        if expo % 2:
            raise ArithmeticError(f"odd exponent {expo} in genus substitution at n={n}")
        out[(expo + 2) // 2] = coeff
    return out


def real_stratum_coefficient(n: int, lam: Partition) -> Fraction:
    """Weighted count of connected real origami of degree 2n with half
    profile lam (profile [l1 l1 l2 l2 ...])."""
    lam = tuple(lam)
    if sum(lam) != n:
        raise ValueError(f"lam must be a partition of {n}")
    return real_series(n, connected=True).layer(n).coeff(lam)


def n_real_h11(n: int) -> Fraction:
    """Genus-2 real origami of degree 2n with two simple zeros:
    (sigma_2(n) - sigma_1(n)) / 2, an integer count."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(sigma(2, n) - sigma(1, n), 2)


def real_h22_series(N: int) -> QSeries:
    """Generating q-series for genus-3 real origami with two double zeros:
    3 E2^2 + 7/6 E2 - E3 - 1/6 E4 in the constant-term-free normalization."""
    if N < 1:
        raise ValueError("N must be >= 1")
    e2, e3, e4 = eisenstein(2, N), eisenstein(3, N), eisenstein(4, N)
    return (
        (e2 * e2).scale(3)
        + e2.scale(Fraction(7, 6))
        - e3
        - e4.scale(Fraction(1, 6))
    )
