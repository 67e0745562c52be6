import random

import pytest

from weylcurrents.affine import AffineWeight, level_restricted_dominant
from weylcurrents.characters import (
    AffineCharacter,
    GradedCharacter,
    char_global_weyl,
    char_integrable,
    char_irreducible,
    char_local_weyl,
    char_parabolic_verma,
    demazure_step,
    expand_in_global_weyl,
    expand_in_irreducibles,
    hilbert_numerator,
    hilbert_series,
)
from weylcurrents.errors import ExpansionError
from weylcurrents.qseries import QPolynomial, geometric_series
from weylcurrents.rootsystem import Weight, build_root_system
from weylcurrents.verify import brute_force_induced_factor

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)

one = QPolynomial.one()
q = QPolynomial.monomial(1)


def test_char_irreducible():
    ch = char_irreducible(A1, Weight([2]))
    assert ch.terms == {Weight([2]): one, Weight([0]): one, Weight([-2]): one}
    assert char_irreducible(A1, Weight([0])).terms == {Weight([0]): one}
    ch = char_irreducible(A2, Weight([1, 0]))
    assert len(ch.terms) == 3 and all(p == one for p in ch.terms.values())
    with pytest.raises(ValueError):
        char_irreducible(A1, Weight([-1]))


def test_parabolic_verma_against_brute_force():
    # N = 0: bare irreducible character
    assert char_parabolic_verma(A1, Weight([1]), 0) == char_irreducible(A1, Weight([1]))
    # expected values computed by the independent monomial-enumeration oracle
    for rs, lam, N in ((A1, Weight([0]), 3), (A1, Weight([2]), 2), (A2, Weight([0, 0]), 2)):
        oracle = brute_force_induced_factor(rs, N) * char_irreducible(rs, lam)
        assert char_parabolic_verma(rs, lam, N) == oracle.truncated(N)


def test_parabolic_verma_desk_values():
    pv = char_parabolic_verma(A1, Weight([0]), 2)
    # degree-1 layer is the adjoint: weights alpha, 0, -alpha
    assert pv.coeff(Weight([2])).coeff(1) == 1
    assert pv.coeff(Weight([0])).coeff(1) == 1
    # weight-0 coefficient at q^2 is 3 (monomials e1 f1, h1^2, h2); the value 4
    # is inconsistent with the level-one character 1 + q + 2q^2
    assert pv.coeff(Weight([0])).coeff(2) == 3


def test_integrable_a1_level_one():
    L = char_integrable(A1, Weight([0]), 1, 2)
    assert L.coeff(Weight([0])) == QPolynomial({0: 1, 1: 1, 2: 2})
    assert L.coeff(Weight([2])) == QPolynomial({1: 1, 2: 1})
    assert L.coeff(Weight([-2])) == QPolynomial({1: 1, 2: 1})
    assert char_integrable(A1, Weight([0]), 3, 0).terms == {Weight([0]): one}
    with pytest.raises(ValueError):
        char_integrable(A1, Weight([2]), 1, 2)


def test_integrable_nonneg_and_weyl_invariant():
    for rs, lams, k in ((A1, level_restricted_dominant(A1, 2), 2), (A2, level_restricted_dominant(A2, 1), 1)):
        for lam in lams:
            L = char_integrable(rs, lam, k, 6)
            assert L.has_nonneg_coeffs()
            for w, p in L.terms.items():
                for v in rs.weyl_orbit(w):
                    assert L.coeff(v) == p


def test_demazure_step_strings():
    # D_0(e^{Lambda0}) = e^{Lambda0} + e^{Lambda0 - alpha_0}
    c = AffineCharacter.monomial(AffineWeight(Weight([0]), 1, 0))
    d = demazure_step(A1, 0, c)
    assert d.terms == {((0,), 0): 1, ((2,), -1): 1}
    # wall case: pairing 0 kills the term
    wall = AffineCharacter.monomial(AffineWeight(Weight([-1]), 0, 0))
    assert demazure_step(A1, 1, wall).terms == {}
    # negative branch: m = -2 gives two subtracted terms (forced by the
    # divided-difference definition; makes the operator idempotent)
    c = AffineCharacter.monomial(AffineWeight(Weight([-3]), 0, 0))
    d = demazure_step(A1, 1, c)
    assert d.terms == {((-1,), 0): -1, ((1,), 0): -1}


def test_demazure_idempotent():
    rng = random.Random(9)
    for _ in range(20):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            w = (rng.randint(-3, 3), rng.randint(-3, 3))
            terms[(w, rng.randint(-2, 0))] = rng.randint(-2, 2)
        c = AffineCharacter(1, terms)
        for i in (0, 1, 2):
            once = demazure_step(A2, i, c)
            twice = demazure_step(A2, i, once)
            assert twice == once


def test_local_weyl_a1():
    assert char_local_weyl(A1, Weight([0])).terms == {Weight([0]): one}
    assert char_local_weyl(A1, Weight([1])).terms == {Weight([1]): one, Weight([-1]): one}
    ch = char_local_weyl(A1, Weight([2]))
    assert ch.terms == {
        Weight([2]): one,
        Weight([0]): one + q,
        Weight([-2]): one,
    }
    assert ch.dimension_at_q1() == 4


def test_local_weyl_fundamental_a2():
    for i in (1, 2):
        ch = char_local_weyl(A2, A2.fundamental_weight(i))
        assert ch == char_irreducible(A2, A2.fundamental_weight(i))


def test_local_weyl_minuscule_beyond_type_a():
    # minuscule classes across families: the module is the bare irreducible
    for family, rank, node, dim in (("D", 4, 1, 8), ("E", 6, 1, 27), ("E", 7, 7, 56)):
        rs = build_root_system(family, rank)
        w = rs.fundamental_weight(node)
        ch = char_local_weyl(rs, w)
        assert ch == char_irreducible(rs, w)
        assert ch.dimension_at_q1() == dim
    # a non-minuscule class: the adjoint-type module picks up one graded level
    d4 = build_root_system("D", 4)
    theta_ch = char_local_weyl(d4, d4.highest_root)
    assert theta_ch.dimension_at_q1() == 29
    assert theta_ch.coeff(d4.zero()) == QPolynomial({0: 4, 1: 1})


def test_global_weyl():
    gw = char_global_weyl(A1, Weight([1]), 2)
    s = QPolynomial({0: 1, 1: 1, 2: 1})
    assert gw.terms == {Weight([1]): s, Weight([-1]): s}
    assert char_global_weyl(A1, Weight([0]), 5).terms == {Weight([0]): one}
    assert char_global_weyl(A1, Weight([2]), 1).coeff(Weight([2])) == one + q


def test_hilbert_helpers():
    lam = Weight([2, 1])
    num = hilbert_numerator(lam)
    ser = hilbert_series(lam, 8)
    assert (num * ser).truncated(hi=8) == one
    assert hilbert_numerator(Weight([0, 0])) == one
    # 1/((1-q)(1-q^2)) * extra (1-q) factor from m_2 = 1
    assert hilbert_series(Weight([2, 0]), 4) == (
        geometric_series(1, 4) * geometric_series(2, 4)
    ).truncated(hi=4)


def test_expand_basis_element_roundtrip():
    for rs, lam in ((A1, Weight([3])), (A2, Weight([1, 1]))):
        gw = char_global_weyl(rs, lam, 7)
        ex = expand_in_global_weyl(rs, gw)
        assert ex.multiplicities == {lam: one}


def test_expand_integrable_level_one():
    L = char_integrable(A1, Weight([0]), 1, 6)
    ex = expand_in_global_weyl(A1, L)
    assert ex.multiplicities == {
        Weight([0]): one,
        Weight([2]): q,
        Weight([4]): QPolynomial.monomial(4),
    }
    assert ex.trusted_degree == 6


def test_expand_parabolic_verma_matches_local_weyl_multiplicities():
    # the projective-module reciprocity: multiplicities of the induced module
    # in the global-Weyl basis equal graded multiplicities of V(lam) inside
    # local Weyl modules, compared within the trusted window
    N = 8
    for lam in (Weight([0]), Weight([1]), Weight([2])):
        ex = expand_in_global_weyl(A1, char_parabolic_verma(A1, lam, N))
        assert ex.multiplicities, "induced module must contain global Weyl factors"
        for mu, poly in ex.multiplicities.items():
            table = expand_in_irreducibles(A1, char_local_weyl(A1, mu))
            oracle = table.get(lam, QPolynomial.zero()).truncated(hi=ex.trusted_degree)
            assert poly == oracle
            assert poly.has_nonneg_coeffs()


def test_expansion_is_linear_on_differences():
    # the expansion is a genuine basis expansion: it reports negative
    # coefficients faithfully instead of failing
    diff = char_global_weyl(A1, Weight([4]), 6) - char_global_weyl(A1, Weight([2]), 6)
    ex = expand_in_global_weyl(A1, diff)
    assert ex.multiplicities == {Weight([4]): one, Weight([2]): -1 * one}


def test_expand_detects_inconsistency(monkeypatch):
    import weylcurrents.characters as chars

    real = chars.char_global_weyl

    def corrupted(rs, lam, N):
        ch = real(rs, lam, N)
        bad = dict(ch.terms)
        bad[lam] = bad[lam] + QPolynomial.monomial(1)
        return GradedCharacter(bad, cutoff=N)

    monkeypatch.setattr(chars, "char_global_weyl", corrupted)
    with pytest.raises(ExpansionError):
        chars.expand_in_global_weyl(A1, char_integrable(A1, Weight([0]), 1, 4))


def test_local_weyl_dimension_multiplicative():
    d4 = build_root_system("D", 4)
    cases = (
        (A1, Weight([3])),
        (A2, Weight([2, 1])),
        (A2, Weight([1, 1])),
        (d4, Weight([1, 0, 1, 0])),
        (d4, Weight([0, 1, 0, 1])),
    )
    for rs, lam in cases:
        total = char_local_weyl(rs, lam).dimension_at_q1()
        prod = 1
        for i, m in enumerate(lam.coeffs, start=1):
            prod *= char_local_weyl(rs, rs.fundamental_weight(i)).dimension_at_q1() ** m
        assert total == prod
