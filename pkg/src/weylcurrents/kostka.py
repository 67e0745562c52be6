"""Level-restricted Kostka polynomials by three independent routes, plus the
level-one decomposition multiplicities.

Route conventions are aligned so all three emit the same polynomial in q; the
calibration point is the A1 value kostka_paths_restricted(2w1, 0, k=1) = q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .affine import cosets_up_to_shift, in_level_dominant, level_one_weights
from .characters import (
    Expansion,
    char_integrable_dominant,
    char_local_weyl,
    expand_in_global_weyl,
    expand_in_irreducibles,
)
from .crystals import restricted_paths
from .qseries import QPolynomial
from .rootsystem import RootSystem, Weight


ROUTES = ("paths", "altsum", "chars")


@dataclass(frozen=True)
class KostkaResult:
    mu: Weight
    lam: Weight
    k: object  # positive int or None for the unrestricted limit
    value: QPolynomial
    route: str


def kostka_paths(n: int, mu: Weight, lam: Weight, cache_dir=None) -> QPolynomial:
    """Sum of q^{-D} over classical-highest elements of weight lam in the
    mu-crystal (the unrestricted graded multiplicity)."""
    acc = {}
    for _, w, d in restricted_paths(n, mu, None, cache_dir=cache_dir):
        if w == lam:
            acc[-d] = acc.get(-d, 0) + 1
    return QPolynomial(acc)


def kostka_paths_restricted(
    n: int, mu: Weight, lam: Weight, k: int, cache_dir=None
) -> QPolynomial:
    """As kostka_paths with the level cut eps_0 <= k."""
    rs_check = _type_a(n)
    if not in_level_dominant(rs_check, lam, k):
        raise ValueError(f"{lam} is not in P_+^{k}")
    acc = {}
    for _, w, d in restricted_paths(n, mu, k, cache_dir=cache_dir):
        if w == lam:
            acc[-d] = acc.get(-d, 0) + 1
    return QPolynomial(acc)


def _type_a(n: int) -> RootSystem:
    from .rootsystem import build_root_system

    return build_root_system("A", n)


def kostka_alt_sum(
    rs: RootSystem, mu: Weight, lam: Weight, k: int, cache_dir=None
) -> QPolynomial:
    """Affine alternating sum over dot-dominant images: terms
    sign * q^offset * (unrestricted value at the image weight); the sweep is
    complete because images with norm beyond mu's contribute zero."""
    if rs.family != "A":
        raise ValueError("the path side of the alternating sum needs type A")
    if not in_level_dominant(rs, lam, k):
        raise ValueError(f"{lam} is not in P_+^{k}")
    L = k + rs.dual_coxeter
    gap = rs.inner(mu + rs.rho, mu + rs.rho) - rs.inner(lam + rs.rho, lam + rs.rho)
    max_offset = int(Fraction(gap, 2 * L)) if gap >= 0 else -1
    total = QPolynomial.zero()
    for rep in cosets_up_to_shift(rs, lam, k, max_offset):
        inner_val = kostka_paths(rs.rank, mu, rep.image.classical, cache_dir=cache_dir)
        if inner_val:
            total = total + rep.sign * inner_val.shifted(rep.offset)
    return total


def required_cutoff(rs: RootSystem, mu: Weight, lam: Weight, k: int) -> int:
    """Smallest cutoff N whose norm region reaches mu when expanding ch L_k(lam)."""
    gap = rs.inner(mu + rs.rho, mu + rs.rho) - rs.inner(lam + rs.rho, lam + rs.rho)
    L = k + rs.dual_coxeter
    if gap <= 0:
        return 0
    q, r = divmod(int(gap), 2 * L)
    return q + (1 if r else 0)


def kostka_characters(
    rs: RootSystem, mu: Weight, lam: Weight, k: int, N: int
) -> QPolynomial:
    """Coefficient of the global Weyl character of mu in the expansion of the
    truncated integrable character ch L_k(lam); exact up to q^N."""
    if not in_level_dominant(rs, lam, k):
        raise ValueError(f"{lam} is not in P_+^{k}")
    need = required_cutoff(rs, mu, lam, k)
    if N < need:
        raise ValueError(
            f"cutoff N={N} cannot reach mu={mu}; need at least N={need}"
        )
    expansion = integrable_weyl_expansion(rs, lam, k, N)
    return expansion.coeff(mu)


_EXPANSION_CACHE: dict = {}


def integrable_weyl_expansion(rs: RootSystem, lam: Weight, k: int, N: int) -> Expansion:
    """Expansion of ch L_k(lam) (truncated at q^N) in global Weyl characters."""
    key = (rs.family, rs.rank, lam.coeffs, k, N)
    hit = _EXPANSION_CACHE.get(key)
    if hit is None:
        dom = char_integrable_dominant(rs, lam, k, N)
        hit = expand_in_global_weyl(rs, dom, N)
        _EXPANSION_CACHE[key] = hit
    return hit


def kostka_characters_unrestricted(rs: RootSystem, mu: Weight, lam: Weight) -> QPolynomial:
    """Graded multiplicity of V(lam) in the local Weyl module of mu (the
    level-infinity limit; the dual twist by -w_0 and the q-flip cancel)."""
    if not (rs.is_dominant(mu) and rs.is_dominant(lam)):
        raise ValueError("both weights must be dominant")
    if not rs.dominance_leq(lam, mu):
        return QPolynomial.zero()
    table = expand_in_irreducibles(rs, char_local_weyl(rs, mu))
    return table.get(lam, QPolynomial.zero())


def level_one_multiplicities(rs: RootSystem, w1: Weight, N: int) -> Expansion:
    """Global-Weyl multiplicities of the level-one integrable module with class
    w1: each is a single monomial q^{((lam,lam)-(w1,w1))/2} supported on the
    dominant part of w1 + Q (verified by the acceptance suite)."""
    if w1 not in level_one_weights(rs):
        raise ValueError(f"{w1} is not a level-one dominant class")
    return integrable_weyl_expansion(rs, w1, 1, N)


def kostka_by_route(
    rs: RootSystem, mu: Weight, lam: Weight, k, route: str, N=None, cache_dir=None
) -> KostkaResult:
    """Dispatch a single route; k None means the unrestricted limit."""
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    if route in ("paths", "altsum") and rs.family != "A":
        raise ValueError(f"route {route!r} uses the column-crystal model (type A only)")
    if k is None:
        if route == "paths":
            val = kostka_paths(rs.rank, mu, lam, cache_dir=cache_dir)
        elif route == "chars":
            val = kostka_characters_unrestricted(rs, mu, lam)
        else:
            raise ValueError("the alternating sum needs a finite level")
    else:
        if route == "paths":
            val = kostka_paths_restricted(rs.rank, mu, lam, k, cache_dir=cache_dir)
        elif route == "altsum":
            val = kostka_alt_sum(rs, mu, lam, k, cache_dir=cache_dir)
        else:
            if N is None:
                N = required_cutoff(rs, mu, lam, k) + 12
            val = kostka_characters(rs, mu, lam, k, N)
    return KostkaResult(mu, lam, k, val, route)
