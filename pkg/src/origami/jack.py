"""Jack symmetric functions and zonal spherical function values.

J^(alpha)_lam is pinned down by three properties: orthogonality under the
alpha-deformed Hall pairing, triangular monomial support with respect to
dominance, and [m_{1^n}] J = n!.  Gram-Schmidt over the monomial basis in a
linear extension of dominance (increasing reverse-lex) produces exactly this
family: the extension keeps spans of processed monomials equal to spans of
processed Jacks, and uniqueness does the rest.

alpha = 1 gives hook_product * Schur, alpha = 2 the zonal polynomials whose
power-sum coefficients carry the zonal spherical functions of the pair
(S_2n, hyperoctahedral subgroup).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .partitions import Partition, double, enumerate_partitions, z_of
from .symfunc import SymFunc, convert, hall_inner, sym_one

# cache: (n, alpha) -> {lam: JackPolynomial}
_cache: dict[tuple[int, Fraction], dict[Partition, "JackPolynomial"]] = {}


@dataclass(frozen=True)
class JackPolynomial:
    index: Partition
    alpha: Fraction
    expansion_m: SymFunc
    expansion_p: SymFunc


def clear_cache() -> None:
    _cache.clear()


def jack_cache_items():
    return [(n, alpha, lam, jp) for (n, alpha), d in _cache.items() for lam, jp in d.items()]


def jack_cache_insert(jp: JackPolynomial) -> None:
    _cache.setdefault((jp.expansion_m.degree, jp.alpha), {})[jp.index] = jp


def _degree_family(n: int, alpha: Fraction) -> dict[Partition, JackPolynomial]:
    family = _cache.get((n, alpha))
    if family is not None and len(family) == len(enumerate_partitions(n)):
        return family

    parts = enumerate_partitions(n)  # revlex; reversed = increasing dominance extension
    order = tuple(reversed(parts))
    m_in_p = {lam: convert(SymFunc("m", n, {lam: Fraction(1)}), "p") for lam in parts}

    done_p: list[SymFunc] = []
    done_m: list[SymFunc] = []
    norms: list[Fraction] = []
    family = {}
    for lam in order:
        vp = m_in_p[lam]
        vm = SymFunc("m", n, {lam: Fraction(1)})
        for jp, jm, norm in zip(done_p, done_m, norms):
            c = hall_inner(vp, jp, alpha) / norm
            if c:
                vp = vp - jp.scale(c)
                vm = vm - jm.scale(c)
        lead = vm.coeff((1,) * n)
        if lead == 0:
            raise ArithmeticError(f"degenerate leading coefficient for {lam} at alpha={alpha}")
        scale = Fraction(factorial(n)) / lead
        vp, vm = vp.scale(scale), vm.scale(scale)
        done_p.append(vp)
        done_m.append(vm)
        norms.append(hall_inner(vp, vp, alpha))
        family[lam] = JackPolynomial(lam, alpha, vm, vp)

    _cache[(n, alpha)] = family
    return family


def jack(lam: Partition, alpha) -> JackPolynomial:
    """The Jack function indexed by lam at a positive rational alpha."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive (the pairing degenerates otherwise)")
    lam = tuple(lam)
    n = sum(lam)
    if n == 0:
        return JackPolynomial((), alpha, SymFunc("m", 0, {(): Fraction(1)}), sym_one())
    return _degree_family(n, alpha)[lam]


def zonal(rho: Partition) -> SymFunc:
    """Zonal polynomial: the alpha = 2 Jack function, in the p basis."""
    return jack(rho, 2).expansion_p


def zonal_spherical(rho: Partition, lam: Partition) -> Fraction:
    """Zonal spherical function value omega^rho(lam), read off the zonal
    polynomial via Z_rho = 2^n n! sum_lam omega^rho(lam)/z_{2 lam} p_lam."""
    rho, lam = tuple(rho), tuple(lam)
    n = sum(rho)
    if n != sum(lam):
        raise ValueError("rho and lam must have equal size")
    coeff = zonal(rho).coeff(lam)
    return coeff * z_of(double(lam)) / (2**n * factorial(n))
