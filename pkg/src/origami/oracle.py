"""Brute-force permutation-group ground truth for the counting formulas.

Everything here enumerates honestly and independently of the symmetric
function pipeline, so agreement between the two is a meaningful check.

Conventions, fixed once:

* permutations are tuples over 0..m-1; ``compose(a, b)`` applies b first,
  so products written left to right act like function composition and the
  ordered product of a factor list [t1, ..., tk] applies tk first.
* the ground set {1, 1bar, ..., n, nbar} is encoded k -> 2k-2 and
  kbar -> 2k-1; the natural order on codes realizes 1 < 1bar < ... < n < nbar.
  ``tau_perm(n)`` is the partner swap (1 1bar)...(n nbar).

Enumeration guards are hard caps with explicit errors; these scans are meant
for desk-scale cross-validation, not production counting.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as all_permutations
from math import factorial

from .characters import character
from .partitions import Partition, double, z_of

Permutation = tuple[int, ...]


# -- elementary permutation algebra -------------------------------------------

def identity(m: int) -> Permutation:
    return tuple(range(m))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a . b)(x) = a(b(x)): b acts first."""
    if len(a) != len(b):
        raise ValueError("size mismatch")
    return tuple(a[x] for x in b)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def transposition(m: int, a: int, b: int) -> Permutation:
    out = list(range(m))
    out[a], out[b] = b, a
    return tuple(out)


def product(factors: list[Permutation], m: int) -> Permutation:
    """Ordered product: factors[-1] acts first."""
    acc = identity(m)
    for f in factors:
        acc = compose(acc, f)
    return acc


def cycle_type(p: Permutation) -> Partition:
    if not p:
        return ()
    seen = bytearray(len(p))
    out = []
    for i in range(len(p)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = 1
                j = p[j]
                length += 1
            out.append(length)
    return tuple(sorted(out, reverse=True))


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """a b a^-1 b^-1 under the fixed composition convention."""
    if len(a) != len(b):
        raise ValueError("size mismatch")
    return compose(compose(a, b), compose(inverse(a), inverse(b)))


def is_transitive(gens: list[Permutation], m: int) -> bool:
    """Orbit of 0 under the generators covers all m points."""
    if m == 0:
        return True
    seen = bytearray(m)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if not seen[y]:
                seen[y] = 1
                count += 1
                stack.append(y)
    return count == m


def half_cycle_type(p: Permutation) -> Partition:
    """Half of a doubled cycle type [l1 l1 l2 l2 ...]; raises otherwise."""
    full = cycle_type(p)
    if len(full) % 2:
        raise ArithmeticError(f"cycle type {full} is not doubled")
    half = full[0::2]
    if full[1::2] != half:
        raise ArithmeticError(f"cycle type {full} is not doubled")
    return half


# -- the fixed involution and its centralizer ---------------------------------

def tau_perm(n: int) -> Permutation:
    out = []
    for k in range(n):
        out += [2 * k + 1, 2 * k]
    return tuple(out)


def enumerate_hyperoctahedral(n: int) -> list[Permutation]:
    """All elements commuting with tau: signed permutations, order 2^n n!."""
    if n > 6:
        raise ValueError("hyperoctahedral enumeration capped at n = 6")
    out = []
    for w in all_permutations(range(n)):
        for flips in range(1 << n):
            sigma = [0] * (2 * n)
            for i in range(n):
                e = (flips >> i) & 1
                sigma[2 * i] = 2 * w[i] + e
                sigma[2 * i + 1] = 2 * w[i] + 1 - e
            out.append(tuple(sigma))
    return out


def fixed_point_free_involutions(m: int) -> list[Permutation]:
    """All perfect matchings on 0..m-1 as partner arrays."""
    if m % 2:
        raise ValueError("need an even ground set")
    out: list[Permutation] = []

    def build(partner: list[int], free: list[int]):
        if not free:
            out.append(tuple(partner))
            return
        a = free[0]
        for i in range(1, len(free)):
            b = free[i]
            # stale entries from abandoned branches are overwritten before
            # any leaf snapshots them: every point is re-matched on the path
            partner[a], partner[b] = b, a
            build(partner, free[1:i] + free[i + 1 :])

    build([0] * m, list(range(m)))
    return out


def _is_tau_twisted(sigma: Permutation, tau: Permutation) -> bool:
    return compose(tau, sigma) == compose(inverse(sigma), tau)


def _has_self_symmetric_cycle(sigma: Permutation, tau: Permutation) -> bool:
    seen = bytearray(len(sigma))
    for i in range(len(sigma)):
        if not seen[i]:
            cycle = []
            j = i
            while not seen[j]:
                seen[j] = 1
                cycle.append(j)
                j = sigma[j]
            members = set(cycle)
            if any(tau[x] in members for x in cycle):
                return True
    return False


def enumerate_b_tilde(n: int) -> dict[Partition, list[Permutation]]:
    """The tau-twisted, self-symmetric-free permutations, bucketed by half
    cycle type; built from perfect matchings via sigma = iota . tau and
    verified against the defining conditions rather than assumed."""
    if n > 6:
        raise ValueError("B~ enumeration capped at n = 6")
    tau = tau_perm(n)
    buckets: dict[Partition, list[Permutation]] = {}
    for iota in fixed_point_free_involutions(2 * n):
        sigma = compose(iota, tau)
        if not _is_tau_twisted(sigma, tau):
            raise AssertionError(f"matching product left the twisted centralizer: {iota}")
        if _has_self_symmetric_cycle(sigma, tau):
            raise AssertionError(f"self-symmetric cycle in matching product: {iota}")
        buckets.setdefault(half_cycle_type(sigma), []).append(sigma)
    total = sum(len(v) for v in buckets.values())
    expected = 1
    for k in range(1, 2 * n, 2):
        expected *= k
    if total != expected:
        raise AssertionError(f"|B~_{n}| = {total}, expected {expected}")
    return buckets


# -- exhaustive origami counts -------------------------------------------------

def oracle_real_counts(n: int, require_connected: bool) -> dict[Partition, Fraction]:
    """Count monodromy pairs (v, h) with v tau-twisted and h commuting with
    tau, bucketed by the half profile of the commutator, weighted 1/(2^n n!).

    Connectivity asks for transitivity of <h, v, tau> on the 2n points.
    """
    if n > 5:
        raise ValueError("real oracle capped at n = 5")
    tau = tau_perm(n)
    hyper = enumerate_hyperoctahedral(n)
    hyper_inv = [inverse(h) for h in hyper]
    raw: dict[Partition, int] = {}
    m = 2 * n
    rng = range(m)
    for bucket in enumerate_b_tilde(n).values():
        for v in bucket:
            vinv = inverse(v)
            for h, hinv in zip(hyper, hyper_inv):
                com = tuple(h[v[hinv[vinv[x]]]] for x in rng)
                lam = half_cycle_type(com)
                if require_connected and not is_transitive([h, v, tau], m):
                    continue
                raw[lam] = raw.get(lam, 0) + 1
    norm = 2**n * factorial(n)
    return {lam: Fraction(c, norm) for lam, c in sorted(raw.items(), reverse=True)}


def oracle_complex_counts(n: int, require_connected: bool) -> dict[Partition, Fraction]:
    """Count pairs in S_n x S_n by commutator cycle type, weighted 1/n!."""
    if n > 7:
        raise ValueError("complex oracle capped at n = 7")
    perms = list(all_permutations(range(n)))
    invs = [inverse(p) for p in perms]
    raw: dict[Partition, int] = {}
    rng = range(n)
    for s, sinv in zip(perms, invs):
        for r, rinv in zip(perms, invs):
            com = tuple(s[r[sinv[rinv[x]]]] for x in rng)
            if require_connected and not is_transitive([s, r], n):
                continue
            lam = cycle_type(com)
            raw[lam] = raw.get(lam, 0) + 1
    norm = factorial(n)
    return {lam: Fraction(c, norm) for lam, c in sorted(raw.items(), reverse=True)}


def oracle_mirror_counts(n: int, require_connected: bool) -> dict[Partition, Fraction]:
    """Mirror pairs (h, v) = (tau v tau, v) over all v in S_2n, bucketed by
    the half profile of the commutator, weighted 1/(2^n n!)."""
    if n > 5:
        raise ValueError("mirror oracle capped at n = 5")
    tau = tau_perm(n)
    m = 2 * n
    rng = range(m)
    raw: dict[Partition, int] = {}
    for v in all_permutations(range(m)):
        vinv = inverse(v)
        h = tuple(tau[v[tau[x]]] for x in rng)
        hinv = tuple(tau[vinv[tau[x]]] for x in rng)
        com = tuple(h[v[hinv[vinv[x]]]] for x in rng)
        lam = half_cycle_type(com)
        if require_connected and not is_transitive([h, v, tau], m):
            continue
        raw[lam] = raw.get(lam, 0) + 1
    norm = 2**n * factorial(n)
    return {lam: Fraction(c, norm) for lam, c in sorted(raw.items(), reverse=True)}


# -- factorizations ------------------------------------------------------------

def monotone_factorization(p: Permutation) -> list[tuple[int, int]]:
    """The unique strictly monotone transposition factorization.

    Returns pairs (a_i, b_i) with a_i < b_i and b_i strictly increasing whose
    ordered product (last factor first) equals p; its length is
    n - (number of cycles).
    """
    work = list(p)
    rev: list[tuple[int, int]] = []
    while True:
        m = next((x for x in range(len(work) - 1, -1, -1) if work[x] != x), None)
        if m is None:
            break
        a = work.index(m)
        rev.append((a, m))
        work[a], work[m] = work[m], work[a]  # work := work . (a m)
    rev.reverse()
    expected = len(p) - len(cycle_type(p))
    if len(rev) != expected:
        raise AssertionError(f"monotone factorization length {len(rev)} != {expected}")
    return rev


def involution_factorization(iota: Permutation, n: int) -> list[Permutation]:
    """Unique conjugating sequence for a perfect matching.

    Produces transpositions s_1..s_k, each swapping an unbarred point b with
    some strictly smaller point (barred or not), with the b's strictly
    increasing, such that iota = s_1 ... s_k tau s_k ... s_1.  The length is
    n - (number of parts of the half type of iota tau).
    """
    tau = tau_perm(n)
    m = 2 * n
    if cycle_type(compose(iota, iota)) != (1,) * m or any(iota[x] == x for x in range(m)):
        raise ValueError("iota must be a fixed-point-free involution")

    steps: list[tuple[int, int]] = []  # (b, y) discovered top-down
    cur = list(iota)
    while tuple(cur) != tau:
        b = max(k for k in range(1, n + 1) if cur[2 * k - 1] != 2 * k - 2)
        bcode, bbar = 2 * b - 2, 2 * b - 1
        x, y = cur[bcode], cur[bbar]
        steps.append((bcode, y))
        cur[bcode], cur[bbar] = bbar, bcode
        cur[x], cur[y] = y, x
    # rebuild bottom-up: each step's partner is read through the prefix product
    sigmas: list[Permutation] = []
    g = identity(m)
    for bcode, y in reversed(steps):
        c = inverse(g)[y]
        if c >= bcode:
            raise AssertionError("factorization partner is not below its pivot")
        s = transposition(m, c, bcode)
        sigmas.append(s)
        g = compose(g, s)
    s_count = len(half_cycle_type(compose(iota, tau)))
    if len(sigmas) != n - s_count:
        raise AssertionError("involution factorization has the wrong length")
    return sigmas


def hyperoctahedral_decompose(alpha: Permutation, n: int) -> tuple[list[Permutation], Permutation]:
    """Unique splitting alpha = s_1 ... s_k . zeta with zeta commuting with
    tau and the s_i as in :func:`involution_factorization`."""
    tau = tau_perm(n)
    iota = compose(compose(alpha, tau), inverse(alpha))
    sigmas = involution_factorization(iota, n)
    g = product(sigmas, 2 * n)
    zeta = compose(inverse(g), alpha)
    if compose(zeta, tau) != compose(tau, zeta):
        raise AssertionError("residual factor does not centralize tau")
    return sigmas, zeta


def xi_map(eta: Permutation, n: int) -> tuple[Permutation, Permutation]:
    """Profile-preserving bijection from mirror data to real data.

    A mirror origami is determined by one permutation eta (its partner being
    tau eta tau); its image is the pair (v, h) with v = iota . tau for
    iota = eta tau eta^-1 and h the centralizing factor of eta.
    """
    _, zeta = hyperoctahedral_decompose(eta, n)
    tau = tau_perm(n)
    iota = compose(compose(eta, tau), inverse(eta))
    v = compose(iota, tau)
    return v, zeta


def xi_inverse(v: Permutation, h: Permutation, n: int) -> Permutation:
    """Inverse of :func:`xi_map`: eta = s_1 ... s_k . h for the factor
    sequence of the matching v tau."""
    iota = compose(v, tau_perm(n))
    sigmas = involution_factorization(iota, n)
    return compose(product(sigmas, 2 * n), h)


# -- double cosets and spherical functions -------------------------------------

def coset_type(sigma: Permutation, n: int) -> Partition:
    """Half cycle type of (sigma tau sigma^-1) tau, indexing the double coset
    of sigma with respect to the centralizer of tau."""
    tau = tau_perm(n)
    conj = compose(compose(sigma, tau), inverse(sigma))
    return half_cycle_type(compose(conj, tau))


@lru_cache(maxsize=None)
def _coset_classes(n: int) -> dict[Partition, list[Permutation]]:
    if n > 4:
        raise ValueError("double coset scan capped at n = 4")
    buckets: dict[Partition, list[Permutation]] = {}
    for sigma in all_permutations(range(2 * n)):
        buckets.setdefault(coset_type(sigma, n), []).append(sigma)
    return buckets


def coset_product_coefficient(mu: Partition, lam: Partition, n: int) -> int:
    """Structure constant [K_mu] K_mu K_lam of the double coset algebra,
    computed by direct counting: the number of ways to write a fixed element
    of K_mu as u . w with u in K_mu, w in K_lam."""
    if n > 3:
        raise ValueError("coset products capped at n = 3")
    mu, lam = tuple(mu), tuple(lam)
    classes = _coset_classes(n)
    k_mu = classes[mu]
    lam_set = set(classes[lam])
    samples = [k_mu[0], k_mu[len(k_mu) // 2]]
    values = []
    for x in samples:
        values.append(sum(1 for u in k_mu if compose(inverse(u), x) in lam_set))
    if values[0] != values[1]:
        raise AssertionError("structure constant depends on the representative")
    return values[0]


def zonal_spherical_direct(rho: Partition, lam: Partition, n: int) -> Fraction:
    """Zonal spherical function by its averaging definition:
    omega^rho(lam) = (1/|H_n|) sum over h of chi^{2 rho}(x h), x in K_lam."""
    if n > 4:
        raise ValueError("direct spherical averaging capped at n = 4")
    rho, lam = tuple(rho), tuple(lam)
    if sum(rho) != n or sum(lam) != n:
        raise ValueError("rho and lam must be partitions of n")
    classes = _coset_classes(n)
    k_lam = classes[lam]
    hyper = enumerate_hyperoctahedral(n)
    two_rho = double(rho)
    values = []
    for x in (k_lam[0], k_lam[len(k_lam) // 2]):
        total = sum(character(two_rho, cycle_type(compose(x, h))) for h in hyper)
        values.append(Fraction(total, len(hyper)))
    if values[0] != values[1]:
        raise AssertionError("spherical average depends on the representative")
    return values[0]


def coset_class_size(lam: Partition, n: int) -> int:
    """|K_lam| by scan; equals |H_n|^2 / z_{2 lam}."""
    size = len(_coset_classes(n)[tuple(lam)])
    expected = (2**n * factorial(n)) ** 2 // z_of(double(tuple(lam)))
    if size != expected:
        raise AssertionError(f"|K_{lam}| = {size}, expected {expected}")
    return size


# -- monotone Hurwitz numbers ---------------------------------------------------

def oracle_monotone_hurwitz(g: int, n: int) -> Fraction:
    """Count tuples (sigma, rho, t_1..t_{2g-2}) with strictly monotone
    transpositions, commutator relation, and joint transitivity, over n!.

    The transposition block is forced: it is the unique monotone
    factorization of the inverse commutator, so pairs are scanned and the
    factorization length filtered.
    """
    if n > 5 or g > 3:
        raise ValueError("monotone Hurwitz oracle capped at n = 5, g = 3")
    if g < 1:
        raise ValueError("g must be >= 1")
    target_len = 2 * g - 2
    perms = list(all_permutations(range(n)))
    count = 0
    for sigma in perms:
        for rho in perms:
            need = commutator(rho, sigma)  # equals (sigma rho sigma^-1 rho^-1)^-1
            if len(cycle_type(need)) != n - target_len:
                continue
            pairs = monotone_factorization(need)
            gens = [sigma, rho] + [transposition(n, a, b) for a, b in pairs]
            if is_transitive(gens, n):
                count += 1
    return Fraction(count, factorial(n))
