import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbcert.binomial import binom
from hilbcert.macaulay import MacaulayExpansion, growth_bound, is_o_sequence, macaulay_expansion
from hilbcert.oracle import LexSegment, lex_ideal, monomials, standard_monomial_count


def all_chains(c, d):
    """Every non-increasing eps-chain (eps_d..eps_1 >= -1) reconstructing c."""
    out = []
    for eps in itertools.product(range(-1, c + 1), repeat=d):
        if any(a < b for a, b in zip(eps, eps[1:])):
            continue
        if sum(binom(i + e, i) for i, e in zip(range(d, 0, -1), eps)) == c:
            out.append(eps)
    return out


def lex_growth(n, d, c):
    return standard_monomial_count(lex_ideal(LexSegment(n, d, c)), d + 1)


class TestExpansion:
    def test_single_maximal_term(self):
        assert macaulay_expansion(20, 3).epsilons == (3, -1, -1)

    def test_zero(self):
        assert macaulay_expansion(0, 4).epsilons == (-1, -1, -1, -1)

    def test_five_base_two_matches_exhaustive_search(self):
        assert all_chains(5, 2) == [(1, 1)]
        assert macaulay_expansion(5, 2).epsilons == (1, 1)

    def test_greedy_is_the_unique_chain(self):
        for d in range(1, 4):
            for c in range(0, 15):
                assert all_chains(c, d) == [macaulay_expansion(c, d).epsilons]

    def test_rejects_base_zero(self):
        with pytest.raises(ValueError):
            macaulay_expansion(3, 0)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            macaulay_expansion(-1, 2)

    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            MacaulayExpansion(2, (0, 1))
        with pytest.raises(ValueError):
            MacaulayExpansion(3, (0, 0))

    def test_roundtrip_exhaustive(self):
        for d in range(1, 9):
            for c in range(10**4 + 1):
                exp = macaulay_expansion(c, d)
                assert exp.value == c
                assert len(exp.epsilons) == d

    @given(st.integers(0, 10**60), st.integers(1, 12))
    def test_roundtrip_big(self, c, d):
        exp = macaulay_expansion(c, d)
        assert exp.value == c
        assert all(a >= b for a, b in zip(exp.epsilons, exp.epsilons[1:]))

    def test_grown_expansion_is_the_expansion_of_the_bound(self):
        for d in range(1, 6):
            for c in range(200):
                exp = macaulay_expansion(c, d)
                assert exp.grown() == macaulay_expansion(growth_bound(c, d), d + 1)


class TestGrowth:
    def test_c_at_most_d(self):
        assert growth_bound(4, 4) == 4

    def test_zero(self):
        assert growth_bound(0, 3) == 0

    def test_five_base_two_against_lex(self):
        assert lex_growth(3, 2, 5) == 7
        assert growth_bound(5, 2) == 7

    def test_two_in_degrees_one_and_two(self):
        # two points of P^1 worth: codim 2 in degree 1 grows to 3; in degree 2 it stays 2
        assert lex_growth(3, 1, 2) == growth_bound(2, 1) == 3
        assert lex_growth(3, 2, 2) == growth_bound(2, 2) == 2

    def test_degree_one_is_quadratic(self):
        for c in range(30):
            assert growth_bound(c, 1) == binom(c + 1, 2)

    def test_stabilization(self):
        for d in range(1, 13):
            for c in range(d + 1):
                assert growth_bound(c, d) == c

    def test_monotone(self):
        for d in range(1, 7):
            values = [growth_bound(c, d) for c in range(501)]
            assert all(a <= b for a, b in zip(values, values[1:]))

    def test_at_least_c(self):
        for d in range(1, 7):
            for c in range(300):
                assert growth_bound(c, d) >= c

    def test_lex_equivalence(self):
        for n in (3, 4):
            for d in range(1, 6):
                for c in range(len(monomials(n, d)) + 1):
                    assert lex_growth(n, d, c) == growth_bound(c, d), (n, d, c)

    def test_rejects_base_zero(self):
        with pytest.raises(ValueError):
            growth_bound(1, 0)


class TestOSequence:
    def test_ci_vector(self):
        assert is_o_sequence((1, 3, 5, 6, 5, 3, 1))

    def test_constant_one(self):
        assert is_o_sequence((1,) * 12)

    def test_first_violation(self):
        res = is_o_sequence((1, 2, 4, 1))
        assert not res
        assert res.violation == 2

    def test_violation_later(self):
        # 3^<2> = 4
        res = is_o_sequence((1, 3, 3, 5, 5))
        assert (res.ok, res.violation) == (False, 3)

    def test_h1_unbounded(self):
        assert is_o_sequence((1, 1000))

    def test_rejects_bad_start(self):
        with pytest.raises(ValueError):
            is_o_sequence((2, 1))
        with pytest.raises(ValueError):
            is_o_sequence(())

    def test_hilbert_functions_of_monomial_ideals_pass(self):
        from hilbcert.oracle import MonomialIdeal

        gens = [(2, 0, 0), (1, 1, 0), (0, 3, 1), (0, 0, 4)]
        ideal = MonomialIdeal(3, frozenset(gens))
        h = [standard_monomial_count(ideal, k) for k in range(10)]
        assert is_o_sequence(h)
