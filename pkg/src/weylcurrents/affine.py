"""Affine weights and the affine Weyl group W ⋉ Q for a simply-laced root system.

Conventions, fixed once and validated by tests:
  * an affine weight is (classical part, level, degree) = lam + k*Lambda0 + m*delta;
  * alpha_0 = (-theta, 0, 1), so <alpha_0^vee, (lam,k,m)> = k - (theta, lam);
  * a group element is stored as g = w . t_gamma (finite part acting after the
    translation), with group law (w,a)(w',b) = (ww', w'^{-1}a + b);
  * t_gamma(lam,k,m) = (lam + k*gamma, k, m - (lam,gamma) - k*(gamma,gamma)/2),
    normalized so that t_{-theta} = s_theta s_0;
  * the rho-shifted action w@k shifts so the shifted weight has level k + h^vee,
    which makes acting on a classical weight (level 0) and on lam + k*Lambda0
    give matching orbits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _iproduct

from .errors import StructuralError
from .rootsystem import RootSystem, Weight


@dataclass(frozen=True)
class AffineWeight:
    classical: Weight
    level: int
    degree: int

    def __add__(self, other):
        return AffineWeight(
            self.classical + other.classical,
            self.level + other.level,
            self.degree + other.degree,
        )

    def __sub__(self, other):
        return AffineWeight(
            self.classical - other.classical,
            self.level - other.level,
            self.degree - other.degree,
        )

    def __neg__(self):
        return AffineWeight(-self.classical, -self.level, -self.degree)

    def __mul__(self, n: int):
        return AffineWeight(n * self.classical, n * self.level, n * self.degree)

    __rmul__ = __mul__

    def __repr__(self):
        return f"AffineWeight({self.classical.coeffs}, level={self.level}, degree={self.degree})"


def lambda0(rs: RootSystem) -> AffineWeight:
    return AffineWeight(rs.zero(), 1, 0)


def delta(rs: RootSystem) -> AffineWeight:
    return AffineWeight(rs.zero(), 0, 1)


def embed(rs: RootSystem, lam: Weight, level: int = 0, degree: int = 0) -> AffineWeight:
    return AffineWeight(lam, level, degree)


def affine_root(rs: RootSystem, i: int) -> AffineWeight:
    """alpha_i as an affine weight; i = 0 gives -theta + delta."""
    if i == 0:
        return AffineWeight(-rs.highest_root, 0, 1)
    return AffineWeight(rs.simple_roots[i - 1], 0, 0)


def af_pairing(rs: RootSystem, i: int, w: AffineWeight) -> int:
    """<alpha_i^vee, w> for i in {0, 1, ..., rank}."""
    if i == 0:
        v = w.level - rs.inner(rs.highest_root, w.classical)
        return int(v)
    return w.classical.coeffs[i - 1]


def reflect_affine(rs: RootSystem, i: int, w: AffineWeight) -> AffineWeight:
    p = af_pairing(rs, i, w)
    if p == 0:
        return w
    return w - p * affine_root(rs, i)


def rho_shift(rs: RootSystem, k: int) -> AffineWeight:
    """rho + (k + h^vee) Lambda0: pairs to 1 with every alpha_i^vee and k+1 with alpha_0^vee."""
    return AffineWeight(rs.rho, k + rs.dual_coxeter, 0)


def level_restricted_dominant(rs: RootSystem, k: int):
    """P_+^k: dominant classical weights with <theta^vee, lam> <= k."""
    if k < 0:
        raise ValueError("level must be nonnegative")
    theta = rs.highest_root
    out = []
    frontier = [rs.zero()]
    seen = {rs.zero()}
    while frontier:
        nxt = []
        for lam in frontier:
            out.append(lam)
            for i in range(1, rs.rank + 1):
                mu = lam + rs.fundamental_weight(i)
                if mu not in seen and rs.inner(theta, mu) <= k:
                    seen.add(mu)
                    nxt.append(mu)
        frontier = nxt
    return sorted(out, key=lambda w: w.coeffs)


def in_level_dominant(rs: RootSystem, lam: Weight, k: int) -> bool:
    return rs.is_dominant(lam) and rs.inner(rs.highest_root, lam) <= k


def level_one_weights(rs: RootSystem):
    """P_+^1 (includes 0): the trivial weight and the minuscule fundamentals."""
    return level_restricted_dominant(rs, 1)


# -- matrices for the finite part ----------------------------------------


def _mat_id(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_mul(A, B):
    n = len(A)
    return tuple(
        tuple(sum(A[r][k] * B[k][c] for k in range(n)) for c in range(n)) for r in range(n)
    )


def _mat_vec(A, v):
    n = len(A)
    return tuple(sum(A[r][k] * v[k] for k in range(n)) for r in range(n))


class AffineWeylElement:
    """Element g = w . t_gamma: finite part as an integer matrix on
    fundamental-weight coordinates, translation gamma in root coordinates."""

    __slots__ = ("matrix", "translation")

    def __init__(self, matrix, translation):
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self.translation = tuple(int(x) for x in translation)

    @classmethod
    def identity(cls, rs: RootSystem):
        return cls(_mat_id(rs.rank), (0,) * rs.rank)

    @classmethod
    def translation_by(cls, rs: RootSystem, gamma_rc):
        return cls(_mat_id(rs.rank), tuple(gamma_rc))

    def is_identity(self) -> bool:
        n = len(self.translation)
        return self.matrix == _mat_id(n) and self.translation == (0,) * n

    def __eq__(self, other):
        return (
            isinstance(other, AffineWeylElement)
            and self.matrix == other.matrix
            and self.translation == other.translation
        )

    def __hash__(self):
        return hash((self.matrix, self.translation))

    def __repr__(self):
        return f"AffineWeylElement(matrix={self.matrix}, t={self.translation})"


@lru_cache(maxsize=None)
def _simple_matrix(rs: RootSystem, i: int):
    """Matrix of s_i (1-based classical index) on fundamental-weight coordinates."""
    n = rs.rank
    C = rs.cartan
    return tuple(
        tuple((1 if r == c else 0) - (C[i - 1][r] if c == i - 1 else 0) for c in range(n))
        for r in range(n)
    )


@lru_cache(maxsize=None)
def _theta_matrix(rs: RootSystem):
    n = rs.rank
    theta = rs.highest_root
    cols = []
    for j in range(n):
        e = Weight([1 if t == j else 0 for t in range(n)])
        cols.append(rs.reflect_root(theta, e).coeffs)
    return tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))


@lru_cache(maxsize=None)
def _theta_rc(rs: RootSystem):
    rc = rs.root_coords(rs.highest_root)
    return tuple(int(c) for c in rc)


def simple_element(rs: RootSystem, i: int) -> AffineWeylElement:
    """s_i as a group element; s_0 = s_theta . t_{-theta}."""
    n = rs.rank
    if i == 0:
        return AffineWeylElement(_theta_matrix(rs), tuple(-c for c in _theta_rc(rs)))
    if not 1 <= i <= n:
        raise ValueError(f"affine index {i} out of range 0..{n}")
    return AffineWeylElement(_simple_matrix(rs, i), (0,) * n)


def _mat_inv_weyl(rs: RootSystem, M):
    """Inverse of a finite Weyl matrix: M^{-1} = C M^T C^{-1} (form-orthogonality)."""
    n = rs.rank
    C = rs.cartan
    Ci = rs.inverse_cartan
    MT = tuple(tuple(M[c][r] for c in range(n)) for r in range(n))
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            v = sum(
                Fraction(C[r][a]) * MT[a][b] * Ci[b][c] for a in range(n) for b in range(n)
            )
            if v.denominator != 1:
                raise AssertionError("finite part is not a Weyl matrix")
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


def _act_rc(rs: RootSystem, M, rc):
    """Finite part acting on root coordinates."""
    fw = rs._rc_to_fw(tuple(rc))
    wfw = _mat_vec(M, fw)
    out = rs.root_coords(Weight(wfw))
    return tuple(int(c) for c in out)


def compose(rs: RootSystem, g: AffineWeylElement, h: AffineWeylElement) -> AffineWeylElement:
    """Group product g.h under (w,a)(w',b) = (ww', w'^{-1}a + b)."""
    w = _mat_mul(g.matrix, h.matrix)
    hinv = _mat_inv_weyl(rs, h.matrix)
    moved = _act_rc(rs, hinv, g.translation)
    return AffineWeylElement(w, tuple(a + b for a, b in zip(moved, h.translation)))


def inverse(rs: RootSystem, g: AffineWeylElement) -> AffineWeylElement:
    winv = _mat_inv_weyl(rs, g.matrix)
    moved = _act_rc(rs, g.matrix, g.translation)
    return AffineWeylElement(winv, tuple(-c for c in moved))


def element_from_word(rs: RootSystem, word) -> AffineWeylElement:
    """Product of simple reflections in word order (word[0] leftmost)."""
    acc = AffineWeylElement.identity(rs)
    for i in word:
        acc = compose(rs, acc, simple_element(rs, i))
    return acc


def rc_norm2(rs: RootSystem, rc) -> int:
    """(gamma, gamma) for gamma in root coordinates (the Gram matrix is the Cartan matrix)."""
    n = rs.rank
    C = rs.cartan
    return sum(rc[i] * C[i][j] * rc[j] for i in range(n) for j in range(n))


def act_affine(rs: RootSystem, g: AffineWeylElement, w: AffineWeight) -> AffineWeight:
    """Linear action: translation first, then the finite part; level preserved."""
    gamma = rs.from_root_coords(g.translation)
    lam, k, m = w.classical, w.level, w.degree
    pairing = int(rs.inner(lam, gamma))
    nn = rc_norm2(rs, g.translation)
    if (k * nn) % 2:
        raise AssertionError("odd lattice norm: translation degree is not integral")
    moved = lam + k * gamma
    m2 = m - pairing - (k * nn) // 2
    return AffineWeight(Weight(_mat_vec(g.matrix, moved.coeffs)), k, m2)


def dot_action(rs: RootSystem, g: AffineWeylElement, w: AffineWeight, k: int) -> AffineWeight:
    """rho-shifted action at level k: g(w + shift) - shift, where the shift is the
    rho-like weight that brings w to total level k + h^vee. Classical weights
    (level 0) and their level-k embeddings give matching orbits:
    g@k(lam + k*Lambda0) = (g@k lam) + k*Lambda0."""
    s = k + rs.dual_coxeter - w.level
    shift = AffineWeight(rs.rho, s, 0)
    return act_affine(rs, g, w + shift) - shift


def length(rs: RootSystem, g: AffineWeylElement) -> int:
    """Closed-form length of g = w.t_gamma: sum over positive roots alpha of
    |(gamma,alpha)| when w(alpha) > 0 and |(gamma,alpha) + 1| when w(alpha) < 0.
    Matches Cayley-graph distance (tested by BFS oracle)."""
    gamma = rs.from_root_coords(g.translation)
    total = 0
    for alpha in rs.positive_roots:
        ip = int(rs.inner(gamma, alpha))
        walpha_rc = rs.root_coords(Weight(_mat_vec(g.matrix, alpha.coeffs)))
        if all(c >= 0 for c in walpha_rc):
            total += abs(ip)
        else:
            total += abs(ip + 1)
    return total


def sign_of(rs: RootSystem, g: AffineWeylElement) -> int:
    return -1 if length(rs, g) % 2 else 1


@dataclass(frozen=True)
class DotRepresentative:
    """Result of pushing a weight to the rho-shifted dominant chamber."""

    on_wall: bool
    element: AffineWeylElement
    weight: Weight | None
    degree: int
    sign: int


def dominant_dot_rep(rs: RootSystem, lam, k: int) -> DotRepresentative:
    """Dominant representative under the level-k dot action, or the wall flag.

    Accepts a classical Weight (taken at level 0, degree 0) or an AffineWeight.
    Greedy ascent: reflect at any strictly negative shifted pairing; a zero
    pairing at the top signals a nontrivial stabilizer (wall).
    """
    if k < 1:
        raise ValueError("dominant_dot_rep needs k >= 1")
    w = lam if isinstance(lam, AffineWeight) else AffineWeight(lam, 0, 0)
    s = k + rs.dual_coxeter - w.level
    shift = AffineWeight(rs.rho, s, 0)
    x = w + shift
    g = AffineWeylElement.identity(rs)
    steps = 0
    guard = 0
    while True:
        guard += 1
        if guard > 10**6:
            raise StructuralError("dominant ascent did not terminate")
        neg = None
        for i in range(0, rs.rank + 1):
            if af_pairing(rs, i, x) < 0:
                neg = i
                break
        if neg is None:
            break
        x = reflect_affine(rs, neg, x)
        g = compose(rs, simple_element(rs, neg), g)
        steps += 1
    if any(af_pairing(rs, i, x) == 0 for i in range(0, rs.rank + 1)):
        return DotRepresentative(True, g, None, 0, 0)
    res = x - shift
    return DotRepresentative(False, g, res.classical, res.degree, -1 if steps % 2 else 1)


def root_lattice_ball(rs: RootSystem, max_norm2):
    """All gamma in Q (root coordinates) with (gamma,gamma) <= max_norm2."""
    if max_norm2 < 0:
        return
    n = rs.rank
    bounds = []
    for i in range(n):
        b2 = Fraction(max_norm2) * rs.inverse_cartan[i][i]
        bounds.append(math.isqrt(int(b2)) + 1)
    for rc in _iproduct(*(range(-b, b + 1) for b in bounds)):
        if rc_norm2(rs, rc) <= max_norm2:
            yield rc


@dataclass(frozen=True)
class CosetRepresentative:
    """Minimal-length representative of a W\\W_af coset together with its dot image."""

    element: AffineWeylElement
    image: AffineWeight  # g @k lam, level 0: dominant classical part + degree
    offset: int  # <d, lam - g@k lam> >= 0
    sign: int


def cosets_up_to_shift(rs: RootSystem, lam: Weight, k: int, N: int):
    """All minimal-length right-coset representatives whose dot image lies within
    degree offset N of lam; complete and duplicate-free (quadratic-growth sweep).

    Cosets W.t_gamma are indexed by gamma in Q; the offset is
    (lam+rho, gamma) + (k+h^vee)(gamma,gamma)/2.
    """
    if k < 1:
        raise ValueError("level k must be >= 1")
    if not in_level_dominant(rs, lam, k):
        raise ValueError(f"{lam} is not in P_+^{k}")
    if N < 0:
        return []
    L = k + rs.dual_coxeter
    lam_rho = lam + rs.rho
    s2 = float(rs.inner(lam_rho, lam_rho))
    radius = (math.sqrt(s2) + math.sqrt(s2 + 2 * L * N)) / L
    max_norm2 = int(radius * radius) + 2  # float bound only inflates the sweep box
    out = []
    seen_images = set()
    for rc in root_lattice_ball(rs, max_norm2):
        gamma = rs.from_root_coords(rc)
        offset = int(rs.inner(lam_rho, gamma)) + (L * rc_norm2(rs, rc)) // 2
        if offset < 0:
            raise StructuralError("negative coset offset: convention violation")
        if offset > N:
            continue
        t = AffineWeylElement.translation_by(rs, rc)
        x = act_affine(rs, t, AffineWeight(lam_rho, L, 0))
        dom, word = rs.to_dominant(x.classical)
        if any(c == 0 for c in dom.coeffs):
            raise StructuralError("shifted coset image is singular")
        w_el = AffineWeylElement.identity(rs)
        for i in word:
            w_el = compose(rs, simple_element(rs, i), w_el)
        g = compose(rs, w_el, t)
        image = AffineWeight(dom - rs.rho, 0, x.degree)
        if -x.degree != offset:
            raise StructuralError("offset/degree bookkeeping mismatch")
        key = (image.classical.coeffs, image.degree)
        if key in seen_images:
            raise StructuralError("duplicate coset image")
        seen_images.add(key)
        out.append(CosetRepresentative(g, image, offset, sign_of(rs, g)))
    out.sort(key=lambda c: (c.offset, c.image.classical.coeffs))
    return out


def reduced_word(rs: RootSystem, g: AffineWeylElement):
    """A reduced word for g by greedy descent; product in word order equals g."""
    word = []
    cur = g
    cur_len = length(rs, cur)
    while cur_len > 0:
        for i in range(0, rs.rank + 1):
            cand = compose(rs, simple_element(rs, i), cur)
            cand_len = length(rs, cand)
            if cand_len < cur_len:
                word.append(i)
                cur, cur_len = cand, cand_len
                break
        else:
            raise StructuralError("no descent found; length function broken")
    if not cur.is_identity():
        raise StructuralError("greedy descent ended off the identity")
    return word
