"""Exact one-variable q-series: divisor sums, Eisenstein series, torus-cover
counts, the q-bracket, connected extraction with a branch-point grading, and
exact linear fitting against series bases.

Two Eisenstein normalizations coexist deliberately.  :func:`eisenstein` has
no constant term (E_k = sum_{n>=1} sigma_{k-1}(n) q^n), which is what the
divisor-sum counting identities use.  :func:`eisenstein_classical` carries
the modular constant term (1 - 24 sum sigma_1 q^n, etc.); products of those
span the quasimodular ring that the fitting experiments probe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .characters import nu, nu_real
from .partitions import Partition, enumerate_partitions


@dataclass(frozen=True)
class QSeries:
    """Truncated power series in q with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __add__(self, other: "QSeries") -> "QSeries":
        k = min(len(self.coeffs), len(other.coeffs))
        return QSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(k)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + other.scale(-1)

    def __mul__(self, other: "QSeries") -> "QSeries":
        k = min(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * k
        for i, a in enumerate(self.coeffs[:k]):
            if a == 0:
                continue
            for j in range(k - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return QSeries(tuple(out))

    def scale(self, c) -> "QSeries":
        c = Fraction(c)
        return QSeries(tuple(c * a for a in self.coeffs))

    def divide(self, other: "QSeries") -> "QSeries":
        """Exact series division; the divisor needs a unit constant term."""
        k = min(len(self.coeffs), len(other.coeffs))
        if other.coeffs[0] == 0:
            raise ZeroDivisionError("divisor has zero constant term")
        inv0 = 1 / other.coeffs[0]
        out = [Fraction(0)] * k
        for n in range(k):
            acc = self.coeffs[n]
            for i in range(1, n + 1):
                acc -= other.coeffs[i] * out[n - i]
            out[n] = acc * inv0
        return QSeries(tuple(out))


def qseries(values, N: int | None = None) -> QSeries:
    vals = [Fraction(v) for v in values]
    if N is not None:
        vals = (vals + [Fraction(0)] * (N + 1))[: N + 1]
    return QSeries(tuple(vals))


def sigma(k: int, n: int) -> int:
    """Sum of k-th powers of the divisors of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


def sigma_prefix(k: int, N: int) -> list[int]:
    """sigma_k(1..N) by sieving, for bulk consumers (asymptotics, series)."""
    out = [0] * (N + 1)
    for d in range(1, N + 1):
        dk = d**k
        for m in range(d, N + 1, d):
            out[m] += dk
    return out


def eisenstein(k: int, N: int) -> QSeries:
    """E_k = sum_{n>=1} sigma_{k-1}(n) q^n (no constant term)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    prefix = sigma_prefix(k - 1, N)
    return QSeries(tuple(Fraction(prefix[n]) if n else Fraction(0) for n in range(N + 1)))


_CLASSICAL_FACTORS = {2: -24, 4: 240, 6: -504}


def eisenstein_classical(k: int, N: int) -> QSeries:
    """Weight-k Eisenstein series normalized with constant term 1
    (k in {2, 4, 6}): 1 - 24 sum sigma_1 q^n, 1 + 240 sum sigma_3 q^n, ..."""
    if k not in _CLASSICAL_FACTORS:
        raise ValueError("classical normalization provided for k in {2, 4, 6}")
    prefix = sigma_prefix(k - 1, N)
    c = _CLASSICAL_FACTORS[k]
    return QSeries(tuple(Fraction(1) if n == 0 else Fraction(c * prefix[n]) for n in range(N + 1)))


def quasimodular_basis(N: int) -> list[tuple[str, QSeries]]:
    """Monomials in classical E2, E4, E6 of weight <= 6: a basis of the
    quasimodular forms of mixed weight at most 6."""
    e2 = eisenstein_classical(2, N)
    e4 = eisenstein_classical(4, N)
    e6 = eisenstein_classical(6, N)
    one = qseries([1], N)
    return [
        ("1", one),
        ("E2", e2),
        ("E2^2", e2 * e2),
        ("E4", e4),
        ("E2^3", e2 * e2 * e2),
        ("E2*E4", e2 * e4),
        ("E6", e6),
    ]


def t_cover(g: int, d: int, variant: str) -> Fraction:
    """Weighted count of possibly disconnected simply ramified degree-d
    torus covers of genus g: sum over lam |- d of nu(lam)^(2g-2) for the
    complex variant, nu_real(lam)^(g-1) for the real one."""
    if g < 1:
        raise ValueError("g must be >= 1")
    if variant == "complex":
        expo, weight = 2 * g - 2, nu
    elif variant == "real":
        expo, weight = g - 1, nu_real
    else:
        raise ValueError(f"unknown variant {variant!r}")
    total = Fraction(0)
    for lam in enumerate_partitions(d):
        total += weight(lam) ** expo  # 0^0 == 1: exponent-0 terms count 1
    return total


@dataclass(frozen=True)
class BivariateSeries:
    """Branch-point-graded cover series sum e^(w(lam) x) q^|lam|.

    coeffs[(d, j)] stores sum over lam |- d of w(lam)^j, i.e. j! times the
    ordinary coefficient of x^j q^d (divided-power convention); multiplication
    therefore convolves the x grading with binomial weights.  The variant
    records which weight built the series and hence how j encodes the genus
    (complex: j = 2g - 2 simple branch points; real: j = g - 1 pairs).
    """

    variant: str
    truncation: int
    jmax: int
    coeffs: dict[tuple[int, int], Fraction]

    def coeff(self, d: int, j: int) -> Fraction:
        return self.coeffs.get((d, j), Fraction(0))


def bivariate_cover_series(variant: str, N: int, jmax: int = 8) -> BivariateSeries:
    """Disconnected cover series with branch points tracked in x."""
    if variant == "complex":
        weight = nu
    elif variant == "real":
        weight = nu_real
    else:
        raise ValueError(f"unknown variant {variant!r}")
    coeffs: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    for d in range(1, N + 1):
        for lam in enumerate_partitions(d):
            w = weight(lam)
            value = Fraction(1)
            for j in range(jmax + 1):
                key = (d, j)
                coeffs[key] = coeffs.get(key, Fraction(0)) + value
                value *= w
    return BivariateSeries(variant, N, jmax, {k: v for k, v in coeffs.items() if v != 0})


def _layer_mul(a: dict[int, Fraction], b: dict[int, Fraction], jmax: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for j1, x in a.items():
        for j2, y in b.items():
            j = j1 + j2
            if j <= jmax:
                out[j] = out.get(j, Fraction(0)) + comb(j, j1) * x * y
    return out


def bivariate_log(series: BivariateSeries) -> BivariateSeries:
    """Formal log in the q grading, divided-power convolution in x."""
    if series.coeff(0, 0) != 1 or any(d == 0 and j > 0 for (d, j) in series.coeffs):
        raise ValueError("log needs constant layer 1")
    N, jmax = series.truncation, series.jmax
    lay = [
        {j: series.coeff(d, j) for j in range(jmax + 1) if series.coeff(d, j) != 0}
        for d in range(N + 1)
    ]
    logs: list[dict[int, Fraction]] = [{}]
    for n in range(1, N + 1):
        acc = dict(lay[n])
        for k in range(1, n):
            prod = _layer_mul(logs[k], lay[n - k], jmax)
            for j, v in prod.items():
                acc[j] = acc.get(j, Fraction(0)) - Fraction(k, n) * v
        logs.append({j: v for j, v in acc.items() if v != 0})
    out = {(d, j): v for d, layer in enumerate(logs) for j, v in layer.items()}
    return BivariateSeries(series.variant, N, jmax, out)


def connected_extract(series: BivariateSeries) -> dict[tuple[int, int], Fraction]:
    """Connected cover counts (g, d) -> value from the disconnected series.

    The log's x-exponent j encodes the genus according to the variant:
    complex covers carry 2g - 2 labeled simple branch points (odd j vanishes
    by conjugation antisymmetry and is checked), real covers g - 1 labeled
    branch-point pairs.
    """
    logs = bivariate_log(series)
    out: dict[tuple[int, int], Fraction] = {}
    for (d, j), v in logs.coeffs.items():
        if series.variant == "complex":
            if j % 2:
                raise ArithmeticError(f"odd branch-point count {j} survived the log at q^{d}")
            out[(j // 2 + 1, d)] = v
        else:
            out[(j + 1, d)] = v
    return out


def connected_cover_count(variant: str, g: int, d: int, series: BivariateSeries | None = None) -> Fraction:
    """Connected simply ramified genus-g degree-d cover count (weighted)."""
    if g < 1:
        raise ValueError("g must be >= 1")
    if variant not in ("complex", "real"):
        raise ValueError(f"unknown variant {variant!r}")
    j = 2 * g - 2 if variant == "complex" else g - 1
    if series is None:
        series = bivariate_cover_series(variant, d, jmax=max(j, 1))
    return connected_extract(series).get((g, d), Fraction(0))


def q_bracket(values: dict[Partition, Fraction], N: int) -> QSeries:
    """q-bracket of a partition function: (sum f(lam) q^|lam|) / (sum q^|lam|).

    `values` must hold f on every partition of size <= N, including ().
    """
    num = [Fraction(0)] * (N + 1)
    den = [Fraction(0)] * (N + 1)
    for n in range(N + 1):
        for lam in enumerate_partitions(n):
            if lam not in values:
                raise ValueError(f"missing evaluation for {lam}")
            num[n] += Fraction(values[lam])
            den[n] += 1
    return QSeries(tuple(num)).divide(QSeries(tuple(den)))


def shifted_values(ell: int, variant: str, N: int) -> dict[Partition, Fraction]:
    """Evaluations of the ell-th shifted power sum on all |lam| <= N."""
    from .characters import shifted_power_sum

    out: dict[Partition, Fraction] = {}
    for n in range(N + 1):
        for lam in enumerate_partitions(n):
            out[lam] = shifted_power_sum(lam, ell, variant) if lam else Fraction(0)
    return out


def linear_fit(
    target: QSeries,
    basis: list[QSeries],
    n_train: int,
    n_test: int,
) -> list[Fraction] | None:
    """Solve target = sum c_i basis_i exactly on coefficients q^0..q^(n_train-1)
    and verify on the next n_test coefficients.

    Returns the coefficient list, or None when the training system is
    inconsistent or the verification fails.  Rank-deficient but consistent
    systems resolve with free variables set to zero.
    """
    if len(set(tuple(b.coeffs) for b in basis)) != len(basis):
        raise ValueError("basis series must be pairwise distinct")
    if n_train < len(basis):
        raise ValueError("n_train must be at least the basis size")
    limit = min(len(target.coeffs), *(len(b.coeffs) for b in basis))
    if n_train + n_test > limit:
        raise ValueError("series too short for requested train+test window")

    rows = [[b.coeffs[i] for b in basis] + [target.coeffs[i]] for i in range(n_train)]
    ncols = len(basis)
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, n_train) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n_train):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
    for i in range(r, n_train):
        if rows[i][ncols] != 0:
            return None  # inconsistent
    coeffs = [Fraction(0)] * ncols
    for ri, ci in pivots:
        coeffs[ci] = rows[ri][ncols]
    for i in range(n_train, n_train + n_test):
        if sum(c * b.coeffs[i] for c, b in zip(coeffs, basis)) != target.coeffs[i]:
            return None
    return coeffs
