import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbcert.binomial import binom
from hilbcert.macaulay import growth_bound
from hilbcert.oracle import (
    EXHAUSTIVE_CAP,
    LexSegment,
    MonomialIdeal,
    lex_segment_span,
    monomials,
    standard_monomial_count,
    verify_gotzmann_on_lex,
    verify_macaulay_bound,
)


def explicit_growth(n, d, complement):
    """codim of V*S_1 by multiplying out V = all degree-d monomials not in complement."""
    V = [m for m in monomials(n, d) if m not in complement]
    VS1 = set()
    for v in V:
        for j in range(n):
            w = list(v)
            w[j] += 1
            VS1.add(tuple(w))
    return len(monomials(n, d + 1)) - len(VS1)


class TestCounting:
    def test_zero_ideal_three_space(self):
        assert standard_monomial_count(MonomialIdeal(4), 3) == 20

    def test_irrelevant_ideal(self):
        m = MonomialIdeal(3, frozenset({(1, 0, 0), (0, 1, 0), (0, 0, 1)}))
        assert standard_monomial_count(m, 0) == 1
        for k in range(1, 6):
            assert standard_monomial_count(m, k) == 0

    def test_two_variable_example(self):
        # degree 3: x^3, x^2y (x^2), xy^2 (xy) are in I; only y^3 survives
        ideal = MonomialIdeal(2, frozenset({(2, 0), (1, 1)}))
        survivors = [m for m in monomials(2, 3) if not ideal.contains(m)]
        assert survivors == [(0, 3)]
        assert standard_monomial_count(ideal, 3) == 1

    def test_zero_ideal_is_binomial(self):
        for n in range(1, 6):
            for k in range(11):
                assert standard_monomial_count(MonomialIdeal(n), k) == binom(k + n - 1, k)

    def test_monomials_lex_descending(self):
        for n in range(1, 5):
            for k in range(5):
                ms = monomials(n, k)
                assert list(ms) == sorted(ms, reverse=True)
                assert len(ms) == binom(k + n - 1, k)


@st.composite
def generator_sets(draw):
    n = draw(st.integers(1, 4))
    gens = draw(st.lists(st.tuples(*[st.integers(0, 3)] * n), max_size=8))
    return n, gens


class TestMinimality:
    @given(generator_sets())
    def test_idempotent_and_order_independent(self, data):
        n, gens = data
        a = MonomialIdeal(n, frozenset(gens))
        b = MonomialIdeal(n, frozenset(reversed(gens)))
        assert a.generators == b.generators
        assert MonomialIdeal(n, a.generators).generators == a.generators
        for g in a.generators:
            assert not any(h != g and all(x <= y for x, y in zip(h, g)) for h in a.generators)
        for g in gens:
            assert a.contains(g)

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            MonomialIdeal(2, frozenset({(1, 0, 0)}))


class TestLexSegment:
    def test_keep_one(self):
        assert lex_segment_span(LexSegment(3, 2, 5)) == ((2, 0, 0),)

    def test_full_codim(self):
        assert lex_segment_span(LexSegment(3, 2, 6)) == ()

    def test_zero_codim(self):
        assert lex_segment_span(LexSegment(3, 2, 0)) == monomials(3, 2)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            LexSegment(3, 2, 7)
        with pytest.raises(ValueError):
            LexSegment(3, 2, -1)


class TestMacaulayOracle:
    def test_small_exhaustive(self):
        rep = verify_macaulay_bound(3, 2)
        assert rep.mode == "exhaustive" and rep.subsets_tested == 64
        assert rep.ok and not rep.violations
        assert rep.lex_growth == rep.bound == [growth_bound(c, 2) for c in range(7)]
        assert rep.max_growth == rep.bound
        assert all(a >= 1 for a in rep.attained)
        assert rep.lex_growth[5] == 7

    @pytest.mark.parametrize("d", [1, 2, 5, 9])
    def test_one_variable(self, d):
        rep = verify_macaulay_bound(1, d)
        assert rep.ok and rep.bound == [0, 1]

    def test_bitmask_counts_match_explicit_products(self):
        from hilbcert.oracle import _divisor_masks, _growth_counts

        import numpy as np

        rng = random.Random(7)
        for n, d in [(2, 3), (3, 2), (3, 3), (4, 2)]:
            ms = monomials(n, d)
            masks = _divisor_masks(n, d)
            for _ in range(60):
                k = rng.randint(0, len(ms))
                comp = set(rng.sample(ms, k))
                u = sum(1 << i for i, m in enumerate(ms) if m in comp)
                got = _growth_counts(np.array([u], dtype=np.uint64), masks)[0]
                assert got == explicit_growth(n, d, comp)

    def test_milp_agrees_with_exhaustive(self):
        ex = verify_macaulay_bound(3, 3, mode="exhaustive")
        mi = verify_macaulay_bound(3, 3, mode="milp")
        assert ex.max_growth == mi.max_growth == mi.bound
        assert mi.ok

    def test_sampled_is_deterministic(self):
        a = verify_macaulay_bound(3, 3, mode="sampled", seed=11, samples_per_codim=50)
        b = verify_macaulay_bound(3, 3, mode="sampled", seed=11, samples_per_codim=50)
        assert a.as_dict() == b.as_dict()
        assert a.seed == 11 and a.ok

    def test_exhaustive_over_cap_rejected(self):
        assert len(monomials(4, 4)) > EXHAUSTIVE_CAP
        with pytest.raises(ValueError):
            verify_macaulay_bound(4, 4, mode="exhaustive")

    def test_auto_mode(self):
        assert verify_macaulay_bound(3, 2).mode == "exhaustive"
        assert verify_macaulay_bound(4, 4, samples_per_codim=5).mode == "sampled"


class TestGotzmannOracle:
    def test_three_space(self):
        rep = verify_gotzmann_on_lex(4, 3, 20, 5)
        assert rep.ok
        assert rep.counts == [binom(k + 3, 3) for k in range(3, 9)]
        assert rep.counts[:3] == [20, 35, 56]

    def test_zero(self):
        rep = verify_gotzmann_on_lex(3, 2, 0, 4)
        assert rep.ok and rep.counts == [0] * 5

    def test_points_stabilize(self):
        rep = verify_gotzmann_on_lex(3, 2, 2, 6)
        assert rep.ok and rep.stabilizes and rep.counts == [2] * 7

    def test_horizon_cap(self):
        with pytest.raises(ValueError):
            verify_gotzmann_on_lex(3, 2, 2, 11)


def test_lex_ideals_always_persist():
    from hilbcert.gotzmann import evaluate_persistent, persistence_check
    from hilbcert.oracle import lex_ideal

    for n in range(1, 5):
        for d in range(1, 5):
            for c in range(len(monomials(n, d)) + 1):
                ideal = lex_ideal(LexSegment(n, d, c))
                v = persistence_check(c, standard_monomial_count(ideal, d + 1), d)
                assert v.persists, (n, d, c)
                for k in range(d, d + 6):
                    assert evaluate_persistent(v.hilbert_polynomial, k) == standard_monomial_count(ideal, k)


@pytest.mark.parametrize("n, d", [(4, 4), (4, 5), (3, 7)])
def test_sampled_beyond_cap(n, d):
    rep = verify_macaulay_bound(n, d, mode="sampled", samples_per_codim=300)
    assert rep.mode == "sampled" and rep.seed is not None
    assert rep.ok
    # lex spans are strongly stable, so the sampled family always reaches the bound
    assert rep.max_growth == rep.bound
