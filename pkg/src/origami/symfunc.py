"""Sparse symmetric functions in the p/m/s bases and graded series over them.

A SymFunc is a homogeneous element: a basis tag plus a sparse map
partition -> Fraction.  The p basis is the workhorse (every counting formula
lands there and multiplication is partition concatenation); m appears in the
Jack Gram-Schmidt, s in the character-weighted sums.  Conversions:

  s -> p   via chi: s_lam = sum_mu chi^lam(mu)/z_mu * p_mu
  p -> s   via the inverse relation p_mu = sum_lam chi^lam(mu) * s_lam
  p -> m   by multiplying one power sum at a time into a monomial expansion
  m -> p   by inverting the (dominance-triangular) p->m transition per degree

GradedSeries stacks one p-basis SymFunc per degree and supports the formal
exp/log pair used to pass between disconnected and connected counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import characters
from .partitions import Partition, enumerate_partitions, hook_product, z_of

Terms = dict[Partition, Fraction]

BASES = ("p", "m", "s")


def _clean(terms: Terms) -> Terms:
    return {lam: c for lam, c in terms.items() if c != 0}


@dataclass(frozen=True)
class SymFunc:
    """Homogeneous symmetric function: sparse terms in a tagged basis."""

    basis: str
    degree: int
    terms: Terms

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        for lam in self.terms:
            if sum(lam) != self.degree:
                raise ValueError(f"term {lam} breaks homogeneity (degree {self.degree})")

    def coeff(self, lam: Partition) -> Fraction:
        return self.terms.get(tuple(lam), Fraction(0))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.basis != other.basis or self.degree != other.degree:
            raise ValueError("can only add same basis and degree")
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymFunc(self.basis, self.degree, _clean(out))

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "SymFunc":
        c = Fraction(c)
        if c == 0:
            return SymFunc(self.basis, self.degree, {})
        return SymFunc(self.basis, self.degree, {lam: c * v for lam, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def to_json_dict(self) -> dict:
        items = sorted(self.terms.items(), reverse=True)
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [
                {"partition": list(lam), "num": str(c.numerator), "den": str(c.denominator)}
                for lam, c in items
            ],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "SymFunc":
        terms = {
            tuple(t["partition"]): Fraction(int(t["num"]), int(t["den"]))
            for t in data["terms"]
        }
        return SymFunc(data["basis"], data["degree"], _clean(terms))


def sym_zero(basis: str, degree: int) -> SymFunc:
    return SymFunc(basis, degree, {})


def sym_one() -> SymFunc:
    """The scalar 1 = the empty-partition term in degree 0 (any basis: p)."""
    return SymFunc("p", 0, {(): Fraction(1)})


def p_mul(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product, defined in the p basis only (partition concatenation)."""
    if f.basis != "p" or g.basis != "p":
        raise ValueError("multiplication is defined in the p basis; convert first")
    out: Terms = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            key = tuple(sorted(lam + mu, reverse=True))
            out[key] = out.get(key, Fraction(0)) + a * b
    return SymFunc("p", f.degree + g.degree, _clean(out))


# -- transition data ----------------------------------------------------------

def _mul_power_into_monomials(expansion: Terms, r: int) -> Terms:
    """Multiply an m-basis expansion by the power sum p_r.

    p_r * m_mu = sum over nu obtained by appending r or adding r to one
    distinct part size k of mu, with coefficient m_{k+r}(nu) (the multiplicity
    of the grown part in nu).
    """
    out: Terms = {}
    for mu, c in expansion.items():
        for k in {0, *mu}:
            grown = k + r
            if k == 0:
                nu = tuple(sorted(mu + (grown,), reverse=True))
            else:
                rest = list(mu)
                rest.remove(k)
                nu = tuple(sorted(rest + [grown], reverse=True))
            mult = nu.count(grown)
            out[nu] = out.get(nu, Fraction(0)) + c * mult
    return _clean(out)


@lru_cache(maxsize=None)
def _p_in_m(lam: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    """Expansion of p_lam in the monomial basis."""
    if not lam:
        return (((), Fraction(1)),)
    prev = dict(_p_in_m(lam[1:]))
    return tuple(sorted(_mul_power_into_monomials(prev, lam[0]).items(), reverse=True))


@lru_cache(maxsize=None)
def _m_in_p(n: int) -> dict[Partition, Terms]:
    """Expansion of every m_mu, mu |- n, in the p basis.

    The p->m transition is triangular with respect to dominance (and hence to
    the reverse-lexicographic listing), so a forward substitution inverts it.
    """
    parts = enumerate_partitions(n)
    index = {lam: i for i, lam in enumerate(parts)}
    rows = [dict(_p_in_m(lam)) for lam in parts]
    out: dict[Partition, Terms] = {}
    for i, lam in enumerate(parts):
        # p_lam = sum_{j <= i} R[i][j] m_{parts[j]}  (revlex refines dominance)
        acc: Terms = {lam: Fraction(1)}
        diag = None
        for mu, coef in rows[i].items():
            j = index[mu]
            if j == i:
                diag = coef
                continue
            for rho, c in out[mu].items():
                acc[rho] = acc.get(rho, Fraction(0)) - coef * c
        assert diag is not None
        out[parts[i]] = {rho: c / diag for rho, c in _clean(acc).items()}
    return out


@lru_cache(maxsize=None)
def _s_in_p(lam: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    """s_lam = sum_mu chi^lam(mu)/z_mu p_mu."""
    n = sum(lam)
    items = []
    for mu in enumerate_partitions(n):
        chi = characters.character(lam, mu)
        if chi:
            items.append((mu, Fraction(chi, z_of(mu))))
    return tuple(items)


def convert(f: SymFunc, target: str) -> SymFunc:
    """Re-express f in another basis; round trips are exact."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    if f.basis == "s":
        out: Terms = {}
        for lam, c in f.terms.items():
            for mu, w in _s_in_p(lam):
                out[mu] = out.get(mu, Fraction(0)) + c * w
        in_p = SymFunc("p", f.degree, _clean(out))
        return in_p if target == "p" else convert(in_p, target)
    if f.basis == "m":
        table = _m_in_p(f.degree)
        out = {}
        for mu, c in f.terms.items():
            for rho, w in table[mu].items():
                out[rho] = out.get(rho, Fraction(0)) + c * w
        in_p = SymFunc("p", f.degree, _clean(out))
        return in_p if target == "p" else convert(in_p, target)
    # from p
    if target == "m":
        out = {}
        for lam, c in f.terms.items():
            for mu, w in _p_in_m(lam):
                out[mu] = out.get(mu, Fraction(0)) + c * w
        return SymFunc("m", f.degree, _clean(out))
    # p -> s: p_mu = sum_lam chi^lam(mu) s_lam
    out = {}
    for mu, c in f.terms.items():
        for lam in enumerate_partitions(f.degree):
            chi = characters.character(lam, mu)
            if chi:
                out[lam] = out.get(lam, Fraction(0)) + c * chi
    return SymFunc("s", f.degree, _clean(out))


def hall_inner(f: SymFunc, g: SymFunc, alpha) -> Fraction:
    """Deformed Hall pairing <p_lam, p_mu> = z_lam alpha^len(lam) delta."""
    alpha = Fraction(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if f.degree != g.degree:
        return Fraction(0)
    fp, gp = convert(f, "p"), convert(g, "p")
    small, large = (fp.terms, gp.terms) if len(fp.terms) <= len(gp.terms) else (gp.terms, fp.terms)
    total = Fraction(0)
    for lam, a in small.items():
        b = large.get(lam)
        if b is not None:
            total += a * b * z_of(lam) * alpha ** len(lam)
    return total


# -- graded series ------------------------------------------------------------

@dataclass(frozen=True)
class GradedSeries:
    """sum_n F_n t^n with homogeneous p-basis layers F_0..F_N.

    Series in "exponential form" (inputs to series_log) have F_0 = 1;
    logarithms have F_0 = 0.  Truncation is explicit and never extended.
    """

    truncation: int
    layers: tuple[SymFunc, ...]

    def __post_init__(self):
        if len(self.layers) != self.truncation + 1:
            raise ValueError("need one layer per degree 0..N")
        for n, layer in enumerate(self.layers):
            if layer.degree != n or layer.basis != "p":
                raise ValueError("layer degrees/bases out of place")

    def layer(self, n: int) -> SymFunc:
        return self.layers[n]


def graded_series(layers: list[SymFunc]) -> GradedSeries:
    return GradedSeries(len(layers) - 1, tuple(layers))


def series_log(series: GradedSeries) -> GradedSeries:
    """Formal log, degree by degree via n S_n = sum_k k L_k S_{n-k}."""
    if series.layer(0).terms != {(): Fraction(1)}:
        raise ValueError("series_log needs constant layer 1")
    N = series.truncation
    logs: list[SymFunc] = [sym_zero("p", 0)]
    for n in range(1, N + 1):
        acc = series.layer(n)
        for k in range(1, n):
            acc = acc - p_mul(logs[k], series.layer(n - k)).scale(Fraction(k, n))
        logs.append(acc)
    return graded_series(logs)


def series_exp(series: GradedSeries) -> GradedSeries:
    """Formal exp, inverse of series_log up to the common truncation."""
    if not series.layer(0).is_zero():
        raise ValueError("series_exp needs constant layer 0")
    N = series.truncation
    exps: list[SymFunc] = [sym_one()]
    for n in range(1, N + 1):
        acc = sym_zero("p", n)
        for k in range(1, n + 1):
            acc = acc + p_mul(series.layer(k), exps[n - k]).scale(Fraction(k, n))
        exps.append(acc)
    return graded_series(exps)


def substitute_genus(f: SymFunc) -> dict[int, Fraction]:
    """Specialize p_i -> x^(i-1): each p_lam becomes x^(|lam| - len(lam)).

    Returns the resulting polynomial as a map exponent -> coefficient.
    """
    if f.basis != "p":
        raise ValueError("substitute_genus expects the p basis")
    out: dict[int, Fraction] = {}
    for lam, c in f.terms.items():
        e = sum(lam) - len(lam)
        out[e] = out.get(e, Fraction(0)) + c
    return {e: c for e, c in sorted(out.items()) if c != 0}


def weighted_schur_sum(n: int, c: int) -> SymFunc:
    """sum over lam |- n of hook_product(lam)^c * s_lam, in the p basis.

    c = 1 is the disconnected torus-cover layer; c = -1 and c = 0 are the
    classical integrable-hierarchy specializations.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out: Terms = {}
    for lam in enumerate_partitions(n):
        d = Fraction(hook_product(lam)) ** c
        for mu, w in _s_in_p(lam):
            out[mu] = out.get(mu, Fraction(0)) + d * w
    return SymFunc("p", n, _clean(out))
