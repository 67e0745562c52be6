"""Finite simply-laced root systems: Cartan data, roots, the Weyl group action,
dominance order, and Freudenthal weight multiplicities.

Weights are stored in fundamental-weight coordinates, so <alpha_i^vee, lam> is
coordinate lookup and the invariant form needs one inverse-Cartan contraction.
Simple-root indices are 1-based throughout the public API (0 is reserved for the
affine node elsewhere).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class Weight:
    """Integral weight in fundamental-weight coordinates (immutable)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integral weight coordinate {c}")
                c = c.numerator
            cs.append(int(c))
        self.coeffs = tuple(cs)

    def __add__(self, other):
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("rank mismatch in weight arithmetic")
        return Weight(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("rank mismatch in weight arithmetic")
        return Weight(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return Weight(-a for a in self.coeffs)

    def __mul__(self, n: int):
        return Weight(n * a for a in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        return f"Weight{self.coeffs}"


_POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "D": lambda n: n * (n - 1),
    "E": {6: 36, 7: 63, 8: 120},
}


def _cartan_matrix(family: str, rank: int):
    ok = (
        (family == "A" and rank >= 1)
        or (family == "D" and rank >= 4)
        or (family == "E" and rank in (6, 7, 8))
    )
    if not ok:
        raise ValueError(f"not a valid simply-laced type: {family}{rank}")
    C = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        C[i][i] = 2

    def join(i, j):
        C[i][j] = C[j][i] = -1

    if family == "A":
        for i in range(rank - 1):
            join(i, i + 1)
    elif family == "D":
        for i in range(rank - 3):
            join(i, i + 1)
        join(rank - 3, rank - 2)
        join(rank - 3, rank - 1)
    else:  # E, Bourbaki numbering: node 2 hangs off node 4 of the 1-3-4-5-... chain
        chain = [0] + list(range(2, rank))
        for a, b in zip(chain, chain[1:]):
            join(a, b)
        join(1, 3)
    return tuple(tuple(row) for row in C)


def _invert_fraction_matrix(M):
    n = len(M)
    A = [
        [Fraction(M[i][j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return tuple(tuple(row[n:]) for row in A)


class RootSystem:
    """Immutable simply-laced root system data; safe for concurrent reads."""

    def __init__(self, family: str, rank: int):
        family = family.upper()
        self.family = family
        self.rank = rank
        self.cartan = _cartan_matrix(family, rank)
        self.inverse_cartan = _invert_fraction_matrix(self.cartan)
        # alpha_i in fundamental-weight coordinates is row i of the Cartan matrix
        self.simple_roots = tuple(Weight(self.cartan[i]) for i in range(rank))
        self.rho = Weight([1] * rank)
        self._build_positive_roots()
        self._check_invariants()
        self._dominant_cache = {}

    # -- construction ---------------------------------------------------

    def _build_positive_roots(self):
        n = self.rank
        seen = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for rc in frontier:
                fw = self._rc_to_fw(rc)
                for i in range(n):
                    pairing = fw[i]
                    new = list(rc)
                    new[i] -= pairing
                    new = tuple(new)
                    if all(x >= 0 for x in new) and new not in seen:
                        seen.add(new)
                        nxt.append(new)
            frontier = nxt
        rcs = sorted(seen, key=lambda rc: (sum(rc), rc))
        self.positive_root_coords = tuple(rcs)
        self.positive_roots = tuple(Weight(self._rc_to_fw(rc)) for rc in rcs)
        dominant = [r for r in self.positive_roots if all(c >= 0 for c in r.coeffs)]
        if len(dominant) != 1:
            raise AssertionError("highest root is not unique")
        self.highest_root = dominant[0]
        hrho = self.inner(self.highest_root, self.rho)
        self.dual_coxeter = int(hrho) + 1

    def _check_invariants(self):
        expected = _POSITIVE_ROOT_COUNTS[self.family]
        expected = expected[self.rank] if isinstance(expected, dict) else expected(self.rank)
        if len(self.positive_roots) != expected:
            raise AssertionError("positive root count mismatch")
        if self.inner(self.highest_root, self.highest_root) != 2:
            raise AssertionError("(theta, theta) != 2")
        for i in range(self.rank):
            for j in range(self.rank):
                if self.inner(self.simple_roots[i], self.simple_roots[j]) != self.cartan[i][j]:
                    raise AssertionError("(alpha_i, alpha_j) != cartan entry")

    # -- coordinates ----------------------------------------------------

    def _rc_to_fw(self, rc):
        C = self.cartan
        n = self.rank
        return tuple(sum(C[i][j] * rc[j] for j in range(n)) for i in range(n))

    def root_coords(self, lam: Weight):
        """Coordinates of lam over the simple roots (Fractions in general)."""
        Ci = self.inverse_cartan
        n = self.rank
        return tuple(sum(Ci[i][j] * lam.coeffs[j] for j in range(n)) for i in range(n))

    def from_root_coords(self, rc) -> Weight:
        return Weight(self._rc_to_fw(tuple(rc)))

    def in_root_lattice(self, lam: Weight) -> bool:
        return all(c.denominator == 1 for c in self.root_coords(lam))

    # -- basic operations -----------------------------------------------

    def pairing(self, i: int, lam: Weight) -> int:
        """<alpha_i^vee, lam>, 1-based i."""
        return lam.coeffs[i - 1]

    def reflect(self, i: int, lam: Weight) -> Weight:
        """Simple reflection s_i, 1-based i."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple-root index {i} out of range 1..{self.rank}")
        c = lam.coeffs[i - 1]
        if c == 0:
            return lam
        return lam - c * self.simple_roots[i - 1]

    def reflect_root(self, alpha: Weight, lam: Weight) -> Weight:
        """Reflection by an arbitrary root (simply laced: <alpha^vee,.> = (alpha,.))."""
        c = self.inner(alpha, lam)
        return lam - int(c) * alpha

    def inner(self, lam: Weight, mu: Weight) -> Fraction:
        """W-invariant form normalized by (theta, theta) = 2."""
        Ci = self.inverse_cartan
        n = self.rank
        total = Fraction(0)
        for i in range(n):
            li = lam.coeffs[i]
            if li:
                row = Ci[i]
                total += li * sum(row[j] * mu.coeffs[j] for j in range(n))
        return total

    def norm2(self, lam: Weight) -> Fraction:
        return self.inner(lam, lam)

    def is_dominant(self, lam: Weight) -> bool:
        return all(c >= 0 for c in lam.coeffs)

    def dominance_leq(self, lam: Weight, mu: Weight) -> bool:
        """lam <= mu iff mu - lam is a nonnegative integral sum of simple roots."""
        rc = self.root_coords(mu - lam)
        return all(c.denominator == 1 and c >= 0 for c in rc)

    def zero(self) -> Weight:
        return Weight([0] * self.rank)

    def fundamental_weight(self, i: int) -> Weight:
        return Weight([1 if j == i - 1 else 0 for j in range(self.rank)])

    # -- Weyl group -----------------------------------------------------

    def to_dominant(self, lam: Weight):
        """Dominant representative of the W-orbit plus the ascent word.

        Returns (mu, word) with mu = s_{word[-1]} ... s_{word[0]} (lam) dominant;
        word entries are 1-based simple indices.
        """
        cached = self._dominant_cache.get(lam.coeffs)
        if cached is not None:
            return cached
        cur = lam
        word = []
        while True:
            for i in range(self.rank):
                if cur.coeffs[i] < 0:
                    cur = cur - cur.coeffs[i] * self.simple_roots[i]
                    word.append(i + 1)
                    break
            else:
                break
        result = (cur, tuple(word))
        self._dominant_cache[lam.coeffs] = result
        return result

    def dominant_representative(self, lam: Weight) -> Weight:
        return self.to_dominant(lam)[0]

    def weyl_orbit(self, lam: Weight):
        """Full W-orbit as a set of Weights."""
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(1, self.rank + 1):
                    r = self.reflect(i, w)
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        return seen

    def longest_element_image(self, lam: Weight) -> Weight:
        """w_0(lam), computed through the antidominant representative."""
        word = self._w0_word()
        cur = lam
        for i in word:
            cur = self.reflect(i, cur)
        return cur

    @lru_cache(maxsize=None)
    def _w0_word(self):
        # w_0 sends -rho to rho; the ascent word from -rho realizes it
        _, word = self.to_dominant(Weight([-1] * self.rank))
        return word

    # -- weight multiplicities -------------------------------------------

    def dominant_weights_below(self, lam: Weight):
        """All dominant mu <= lam, via descent steps by positive roots."""
        if not self.is_dominant(lam):
            raise ValueError("expected a dominant weight")
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for mu in frontier:
                for alpha in self.positive_roots:
                    nu = mu - alpha
                    if self.is_dominant(nu) and nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
            frontier = nxt
        return seen

    def freudenthal_dominant(self, lam: Weight):
        """Multiplicities of the dominant weights of the irreducible module V(lam)."""
        if not self.is_dominant(lam):
            raise ValueError("expected a dominant weight")
        doms = sorted(
            self.dominant_weights_below(lam),
            key=lambda mu: (sum(self.root_coords(lam - mu)), mu.coeffs),
        )
        lam_rho = lam + self.rho
        nlam = self.inner(lam_rho, lam_rho)
        mult = {lam: 1}
        for mu in doms:
            if mu == lam:
                continue
            total = 0
            for alpha in self.positive_roots:
                j = 1
                while True:
                    nu = mu + j * alpha
                    if not self.dominance_leq(nu, lam):
                        break
                    m = mult.get(self.dominant_representative(nu), 0)
                    if m:
                        total += m * int(self.inner(nu, alpha))
                    j += 1
            denom = nlam - self.inner(mu + self.rho, mu + self.rho)
            val = Fraction(2 * total) / denom
            if val.denominator != 1 or val < 0:
                raise AssertionError("Freudenthal recursion produced a non-integer")
            if val:
                mult[mu] = int(val)
        return mult

    def freudenthal_weights(self, lam: Weight):
        """Full weight-multiplicity table of V(lam)."""
        table = {}
        for mu, m in self.freudenthal_dominant(lam).items():
            for w in self.weyl_orbit(mu):
                table[w] = m
        return table

    def weyl_dimension(self, lam: Weight) -> int:
        num = Fraction(1)
        for alpha in self.positive_roots:
            num *= self.inner(lam + self.rho, alpha) / self.inner(self.rho, alpha)
        if num.denominator != 1:
            raise AssertionError("Weyl dimension is not an integer")
        return int(num)

    # -- identity --------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, RootSystem)
            and (self.family, self.rank) == (other.family, other.rank)
        )

    def __hash__(self):
        return hash((self.family, self.rank))

    def __repr__(self):
        return f"RootSystem({self.family}{self.rank})"


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Validated, cached root system for a simply-laced (family, rank)."""
    return RootSystem(family, int(rank))


def parse_type(type_str: str, rank=None) -> RootSystem:
    """Parse 'A2' / ('A', 2) style CLI input."""
    s = type_str.strip().upper()
    if len(s) > 1 and s[1:].isdigit():
        return build_root_system(s[0], int(s[1:]))
    if rank is None:
        raise ValueError(f"type {type_str!r} needs an explicit rank")
    return build_root_system(s, int(rank))
