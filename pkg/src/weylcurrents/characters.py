"""Truncated graded characters: irreducible, parabolically induced, and integrable
module characters, Demazure operators, local/global Weyl module characters, and
expansion in the global-Weyl character basis.

Grading convention (fixed once, validated by nonnegativity of the integrable
characters and the A1 desk examples): q stands for e^{-delta}; every character is
normalized so its head sits at q-degree 0, so all stored exponents lie in [0, N].
"""

from __future__ import annotations

from fractions import Fraction

from .affine import (
    AffineWeight,
    AffineWeylElement,
    act_affine,
    af_pairing,
    cosets_up_to_shift,
    in_level_dominant,
    level_one_weights,
    reflect_affine,
)
from .errors import ExpansionError, StructuralError
from .qseries import QPolynomial, euler_column, geometric_series
from .rootsystem import RootSystem, Weight


class GradedCharacter:
    """Finite association Weight -> Laurent polynomial in q, with an explicit
    truncation cutoff (cutoff None means the character is exact, not truncated)."""

    __slots__ = ("cutoff", "terms", "level_tag")

    def __init__(self, terms=None, cutoff=None, level_tag=None):
        self.cutoff = cutoff
        self.level_tag = level_tag
        self.terms = {}
        for w, p in (terms or {}).items():
            if not isinstance(p, QPolynomial):
                p = QPolynomial(p)
            if cutoff is not None:
                p = p.truncated(hi=cutoff)
            if p:
                self.terms[w] = p

    @classmethod
    def monomial(cls, w: Weight, poly=None, cutoff=None):
        return cls({w: poly if poly is not None else QPolynomial.one()}, cutoff=cutoff)

    def coeff(self, w: Weight) -> QPolynomial:
        return self.terms.get(w, QPolynomial.zero())

    def support(self):
        return self.terms.keys()

    def items(self):
        return self.terms.items()

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, GradedCharacter) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((w, p) for w, p in self.terms.items()))

    @staticmethod
    def _merge_cutoff(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        cut = self._merge_cutoff(self.cutoff, other.cutoff)
        out = {w: dict(p.items()) for w, p in self.terms.items()}
        for w, p in other.terms.items():
            tgt = out.setdefault(w, {})
            for e, c in p.items():
                tgt[e] = tgt.get(e, 0) + c
        return GradedCharacter(out, cutoff=cut)

    def __sub__(self, other):
        return self + other.scaled(QPolynomial.monomial(0, -1))

    def scaled(self, poly: QPolynomial):
        return GradedCharacter(
            {w: p * poly for w, p in self.terms.items()}, cutoff=self.cutoff
        )

    def __mul__(self, other):
        if isinstance(other, QPolynomial):
            return self.scaled(other)
        cut = self._merge_cutoff(self.cutoff, other.cutoff)
        out = {}
        for w1, p1 in self.terms.items():
            for w2, p2 in other.terms.items():
                p = p1 * p2
                if cut is not None:
                    p = p.truncated(hi=cut)
                if p:
                    w = w1 + w2
                    out[w] = out[w] + p if w in out else p
        return GradedCharacter(out, cutoff=cut)

    def truncated(self, cutoff: int):
        return GradedCharacter(self.terms, cutoff=cutoff)

    def dimension_at_q1(self) -> int:
        return sum(p.evaluate(1) for p in self.terms.values())

    def has_nonneg_coeffs(self) -> bool:
        return all(p.has_nonneg_coeffs() for p in self.terms.values())

    def dominant_part(self, rs: RootSystem):
        return {w: p for w, p in self.terms.items() if rs.is_dominant(w)}

    def __repr__(self):
        n = len(self.terms)
        return f"GradedCharacter({n} weights, cutoff={self.cutoff})"


# -- irreducible and parabolic-Verma characters ---------------------------


def char_irreducible(rs: RootSystem, lam: Weight) -> GradedCharacter:
    """q-free character of the irreducible module with highest weight lam."""
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    one = QPolynomial.one()
    return GradedCharacter({w: one * m for w, m in rs.freudenthal_weights(lam).items()})


_PBW_CACHE: dict = {}


def _pbw_raw(rs: RootSystem, N: int):
    """Character of the symmetric algebra on g tensor z*C[z], truncated at q^N,
    as a raw dict Weight -> {exponent: coeff}. Independent of the level."""
    key = (rs.family, rs.rank, N)
    hit = _PBW_CACHE.get(key)
    if hit is not None:
        return hit
    cartan_part = QPolynomial.one()
    for n in range(1, N + 1):
        cartan_part = (cartan_part * geometric_series(n, N)).truncated(hi=N)
    acc = {rs.zero(): cartan_part}
    for _ in range(1, rs.rank):
        acc = {rs.zero(): (acc[rs.zero()] * cartan_part).truncated(hi=N)}
    columns = [euler_column(j, N) for j in range(N + 1)]
    roots = list(rs.positive_roots) + [-a for a in rs.positive_roots]
    for alpha in roots:
        nxt: dict = {}
        for w, p in acc.items():
            for j, col in enumerate(columns):
                piece = (p * col).truncated(hi=N)
                if not piece:
                    continue
                tw = w + j * alpha
                nxt[tw] = nxt[tw] + piece if tw in nxt else piece
        acc = nxt
    out = {w: dict(p.items()) for w, p in acc.items() if p}
    _PBW_CACHE[key] = out
    return out


def char_parabolic_verma(rs: RootSystem, lam: Weight, N: int) -> GradedCharacter:
    """Character of the module induced from V(lam) over the z-positive part:
    ch V(lam) times the symmetric-algebra factor, truncated at q^N."""
    pbw = GradedCharacter({w: QPolynomial(p) for w, p in _pbw_raw(rs, N).items()}, cutoff=N)
    return char_irreducible(rs, lam) * pbw


# -- integrable characters by the affine alternating sum ------------------


def _dominant_in_ball(rs: RootSystem, bound_norm2: Fraction, coset_rep: Weight | None):
    """Dominant mu with (mu+rho, mu+rho) <= bound, optionally within coset_rep + Q."""
    out = []
    coords = [0] * rs.rank

    def rec(i):
        if i == rs.rank:
            mu = Weight(coords)
            if rs.inner(mu + rs.rho, mu + rs.rho) <= bound_norm2:
                if coset_rep is None or rs.in_root_lattice(mu - coset_rep):
                    out.append(mu)
            return
        a = 0
        while True:
            coords[i] = a
            partial = Weight(coords[: i + 1] + [0] * (rs.rank - i - 1))
            if rs.inner(partial + rs.rho, partial + rs.rho) > bound_norm2:
                coords[i] = 0
                return
            rec(i + 1)
            a += 1

    rec(0)
    return out


_INTEGRABLE_CACHE: dict = {}


def char_integrable_dominant(rs: RootSystem, lam: Weight, k: int, N: int):
    """Dominant sector of ch L_k(lam) truncated at q^N, as Weight -> QPolynomial.

    Truncated Weyl-Kac sum: each coset representative contributes
    sign * q^offset * ch V(image) * (symmetric-algebra factor); products are
    pruned to the norm region every weight of L_k(lam) must satisfy."""
    if not in_level_dominant(rs, lam, k):
        raise ValueError(f"{lam} is not in P_+^{k}")
    key = (rs.family, rs.rank, lam.coeffs, k, N)
    hit = _INTEGRABLE_CACHE.get(key)
    if hit is not None:
        return hit
    L = k + rs.dual_coxeter
    numerator: dict = {}
    for rep in cosets_up_to_shift(rs, lam, k, N):
        mult_table = rs.freudenthal_weights(rep.image.classical)
        for w, m in mult_table.items():
            tgt = numerator.setdefault(w, {})
            tgt[rep.offset] = tgt.get(rep.offset, 0) + rep.sign * m
    pbw = _pbw_raw(rs, N)
    bound = rs.inner(lam + rs.rho, lam + rs.rho) + 2 * L * N
    result = {}
    for nu in _dominant_in_ball(rs, bound, lam):
        acc: dict = {}
        for w, offsets in numerator.items():
            p = pbw.get(nu - w)
            if not p:
                continue
            for off, m in offsets.items():
                for e, c in p.items():
                    t = e + off
                    if t <= N:
                        acc[t] = acc.get(t, 0) + m * c
        poly = QPolynomial(acc)
        if poly:
            result[nu] = poly
    _INTEGRABLE_CACHE[key] = result
    return result


def char_integrable(rs: RootSystem, lam: Weight, k: int, N: int) -> GradedCharacter:
    """ch L_k(lam) truncated at q^N (full Weyl-orbit support)."""
    dom = char_integrable_dominant(rs, lam, k, N)
    terms = {}
    for nu, poly in dom.items():
        for w in rs.weyl_orbit(nu):
            terms[w] = poly
    return GradedCharacter(terms, cutoff=N, level_tag=k)


# -- Demazure operators ----------------------------------------------------


class AffineCharacter:
    """Finite Z-combination of affine weights at a fixed level, keyed by
    (classical coeffs, degree); the working object for Demazure strings."""

    __slots__ = ("level", "terms")

    def __init__(self, level: int, terms=None):
        self.level = level
        self.terms = {key: c for key, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, w: AffineWeight):
        return cls(w.level, {(w.classical.coeffs, w.degree): 1})

    def __eq__(self, other):
        return (
            isinstance(other, AffineCharacter)
            and self.level == other.level
            and self.terms == other.terms
        )

    def restrict_degree(self, floor: int):
        return AffineCharacter(
            self.level, {k: c for k, c in self.terms.items() if k[1] >= floor}
        )

    def min_degree(self):
        return min((d for (_, d) in self.terms), default=None)

    def items(self):
        return self.terms.items()


def demazure_step(rs: RootSystem, i: int, char: AffineCharacter, floor=None) -> AffineCharacter:
    """Isobaric divided-difference operator for the affine node i applied to a
    truncated affine character; linear, idempotent, geometric-string on monomials."""
    k = char.level
    hvee = rs.dual_coxeter
    theta = rs.highest_root
    out: dict = {}

    def add(coeffs, deg, c):
        if floor is not None and deg < floor:
            return
        key = (coeffs, deg)
        n = out.get(key, 0) + c
        if n:
            out[key] = n
        elif key in out:
            del out[key]

    if i == 0:
        alpha_cl, alpha_deg = -theta, 1
    else:
        alpha_cl, alpha_deg = rs.simple_roots[i - 1], 0
    for (coeffs, deg), c in char.terms.items():
        w = Weight(coeffs)
        if i == 0:
            m = (k + hvee) - int(rs.inner(theta, w + rs.rho))
        else:
            m = coeffs[i - 1] + 1
        if m >= 1:
            for j in range(m):
                add((w - j * alpha_cl).coeffs, deg - j * alpha_deg, c)
        elif m <= -1:
            for j in range(1, -m + 1):
                add((w + j * alpha_cl).coeffs, deg + j * alpha_deg, -c)
    return AffineCharacter(k, out)


# -- local and global Weyl module characters -------------------------------


def _level_one_class(rs: RootSystem, lam: Weight) -> Weight:
    """The level-one dominant weight congruent to lam modulo the root lattice."""
    for w in level_one_weights(rs):
        if rs.in_root_lattice(lam - w):
            return w
    raise StructuralError("no level-one representative found")


_LOCAL_WEYL_CACHE: dict = {}


def char_local_weyl(rs: RootSystem, lam: Weight, N=None) -> GradedCharacter:
    """Graded character of the local Weyl module with top V(lam), head at q^0.

    Computed as a level-one Demazure character: apply divided differences along
    the ascent word from the extremal weight t_{w_0 lam - class}(class + Lambda0)
    (class = level-one representative of lam mod Q) up to class + Lambda0, then
    regrade so the head sits at q-degree 0. The cache is only ever appended to
    with equal values, so concurrent readers are safe."""
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    key = (rs.family, rs.rank, lam.coeffs)
    hit = _LOCAL_WEYL_CACHE.get(key)
    if hit is None:
        cls_w = _level_one_class(rs, lam)
        top = AffineWeight(cls_w, 1, 0)
        gamma_rc = tuple(int(c) for c in rs.root_coords(rs.longest_element_image(lam) - cls_w))
        target = act_affine(rs, AffineWeylElement.translation_by(rs, gamma_rc), top)
        word = []
        v = target
        guard = 0
        while v != top:
            guard += 1
            if guard > 10**6:
                raise StructuralError("ascent to the dominant extremal weight failed")
            for i in range(0, rs.rank + 1):
                if af_pairing(rs, i, v) < 0:
                    v = reflect_affine(rs, i, v)
                    word.append(i)
                    break
            else:
                raise StructuralError("stuck below the dominant chamber")
        ch = AffineCharacter.monomial(top)
        for i in reversed(word):
            ch = demazure_step(rs, i, ch)
        m_min = ch.min_degree()
        if m_min != target.degree:
            raise StructuralError("Demazure character does not reach the extremal degree")
        terms: dict = {}
        for (coeffs, deg), c in ch.items():
            w = Weight(coeffs)
            p = QPolynomial.monomial(deg - m_min, c)
            terms[w] = terms[w] + p if w in terms else p
        out = GradedCharacter(terms)
        if out.coeff(lam) != QPolynomial.one():
            raise StructuralError("local Weyl head multiplicity is not 1")
        hit = _LOCAL_WEYL_CACHE.setdefault(key, out)
    if N is not None:
        return hit.truncated(N)
    return hit


def hilbert_numerator(lam: Weight) -> QPolynomial:
    """prod_i prod_{j=1}^{m_i} (1 - q^j) for the symmetric-function algebra on lam."""
    out = QPolynomial.one()
    for m in lam.coeffs:
        for j in range(1, m + 1):
            out = out * QPolynomial({0: 1, j: -1})
    return out


def hilbert_series(lam: Weight, N: int) -> QPolynomial:
    """prod_i prod_{j=1}^{m_i} (1 - q^j)^{-1} truncated at q^N."""
    out = QPolynomial.one()
    for m in lam.coeffs:
        for j in range(1, m + 1):
            out = (out * geometric_series(j, N)).truncated(hi=N)
    return out


def char_global_weyl(rs: RootSystem, lam: Weight, N: int) -> GradedCharacter:
    """ch of the global Weyl module: local Weyl character times the Hilbert series
    of its highest-weight-algebra, truncated at q^N."""
    return char_local_weyl(rs, lam).truncated(N) * GradedCharacter(
        {Weight([0] * rs.rank): hilbert_series(lam, N)}, cutoff=N
    )


# -- basis expansions -------------------------------------------------------


class Expansion:
    """Result of a basis expansion: weight -> multiplicity polynomial, exact up
    to q^trusted_degree; weights whose multiplicity starts beyond the window do
    not appear."""

    __slots__ = ("multiplicities", "trusted_degree")

    def __init__(self, multiplicities, trusted_degree):
        self.multiplicities = multiplicities
        self.trusted_degree = trusted_degree

    def coeff(self, w: Weight) -> QPolynomial:
        return self.multiplicities.get(w, QPolynomial.zero())


def _rc_height(rs: RootSystem, w: Weight) -> Fraction:
    return sum(rs.root_coords(w))


def expand_in_global_weyl(rs: RootSystem, char, N=None) -> Expansion:
    """Expand a W-invariant truncated character in the global-Weyl basis.

    Processes dominant weights in decreasing dominance order: the top residual
    coefficient divided by the Hilbert series (implemented as multiplication by
    the polynomial numerator, hence exact) is the multiplicity; the subtracted
    residual must vanish identically within the window, else the input was not
    a nonnegative combination and an ExpansionError is raised."""
    if isinstance(char, GradedCharacter):
        if N is None:
            N = char.cutoff
        residual = {w: p for w, p in char.dominant_part(rs).items()}
    else:
        residual = {w: p for w, p in char.items() if p}
    if N is None:
        raise ValueError("expansion needs a truncation cutoff")
    mults: dict = {}
    while residual:
        nu = max(residual, key=lambda w: (_rc_height(rs, w), w.coeffs))
        m = (residual[nu] * hilbert_numerator(nu)).truncated(hi=N)
        if not m:
            raise StructuralError("vanishing extraction from a nonzero residual")
        mults[nu] = m
        basis_char = char_global_weyl(rs, nu, N)
        for w, p in basis_char.dominant_part(rs).items():
            upd = (residual.get(w, QPolynomial.zero()) - m * p).truncated(hi=N)
            if upd:
                residual[w] = upd
            elif w in residual:
                del residual[w]
        if nu in residual:
            raise ExpansionError(f"expansion failed to clear weight {nu}")
    return Expansion(mults, N)


def expand_in_irreducibles(rs: RootSystem, char: GradedCharacter) -> dict:
    """Expand a finite W-invariant character in irreducible characters (exact)."""
    residual = dict(char.dominant_part(rs).items())
    out = {}
    while residual:
        nu = max(residual, key=lambda w: (_rc_height(rs, w), w.coeffs))
        m = residual[nu]
        out[nu] = m
        for w, mult in rs.freudenthal_dominant(nu).items():
            upd = residual.get(w, QPolynomial.zero()) - m * mult
            if upd:
                residual[w] = upd
            elif w in residual:
                del residual[w]
        if nu in residual:
            raise ExpansionError(f"irreducible expansion failed at {nu}")
    return out
