import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sympow import (
    MonomialIdeal,
    SizeGuardExceeded,
    big_height,
    fano_ideal,
    height,
    minimal_primes,
    minimal_transversals,
    to_clutter,
)
from sympow.covers import Clutter

from conftest import box_monomials, brute_minimal_covers, ideal_of, triangle_ideal


class TestClutter:
    def test_supports(self):
        c = to_clutter(ideal_of(3, (1, 1, 0), (0, 1, 1)))
        assert c.edges == ((0, 1), (1, 2))
        assert not c.is_unit

    def test_unit_flag(self):
        assert to_clutter(MonomialIdeal.unit(2)).is_unit

    def test_fano_is_28_triples(self):
        c = to_clutter(fano_ideal())
        assert len(c.edges) == 28
        assert all(len(e) == 3 for e in c.edges)

    def test_rejects_non_squarefree(self):
        with pytest.raises(ValueError):
            to_clutter(ideal_of(2, (2, 0)))

    def test_rejects_nested_edges(self):
        with pytest.raises(ValueError):
            Clutter(3, ((0,), (0, 1)))


class TestMinimalPrimes:
    def test_triangle(self):
        assert minimal_primes(triangle_ideal()) == ((0, 1), (0, 2), (1, 2))

    def test_principal_variable(self):
        assert minimal_primes(ideal_of(2, (1, 0))) == ((0,),)

    def test_single_edge(self):
        assert minimal_primes(ideal_of(2, (1, 1))) == ((0,), (1,))

    def test_rejects_degenerate(self):
        with pytest.raises(ValueError):
            minimal_primes(MonomialIdeal.zero(2))
        with pytest.raises(ValueError):
            minimal_primes(MonomialIdeal.unit(2))
        with pytest.raises(ValueError):
            minimal_primes(ideal_of(2, (2, 0)))

    def test_guard(self):
        with pytest.raises(SizeGuardExceeded):
            minimal_primes(triangle_ideal(), max_primes=2)

    @given(
        st.lists(
            st.sets(st.integers(0, 4), min_size=1, max_size=3).map(tuple),
            min_size=1,
            max_size=6,
        )
    )
    def test_matches_subset_scan(self, raw_edges):
        gens = []
        for e in raw_edges:
            vec = [0] * 5
            for v in e:
                vec[v] = 1
            gens.append(tuple(vec))
        ideal = MonomialIdeal.from_generators(5, gens)
        got = minimal_primes(ideal)
        expected = brute_minimal_covers([set(g.support) for g in ideal.generators], 5)
        assert list(got) == expected

    @given(
        st.lists(
            st.sets(st.integers(0, 4), min_size=1, max_size=3).map(tuple),
            min_size=1,
            max_size=5,
        )
    )
    def test_every_cover_is_minimal(self, raw_edges):
        edges = [set(e) for e in raw_edges]
        for cover in minimal_transversals(edges):
            s = set(cover)
            assert all(s & e for e in edges)
            for v in cover:
                smaller = s - {v}
                assert not all(smaller & e for e in edges)

    def test_primary_decomposition_membership(self):
        # I equals the intersection of its minimal primes, as membership predicates
        ideal = ideal_of(4, (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1))
        covers = minimal_primes(ideal)
        for m in box_monomials(4, 2):
            in_all = all(any(m.exponents[i] > 0 for i in c) for c in covers)
            assert ideal.contains(m) == in_all


class TestHeights:
    def test_triangle(self):
        assert height(triangle_ideal()) == 2
        assert big_height(triangle_ideal()) == 2

    def test_maximal_ideal(self):
        m4 = ideal_of(4, *[tuple(1 if j == i else 0 for j in range(4)) for i in range(4)])
        assert height(m4) == 4
        assert big_height(m4) == 4

    def test_mixed(self):
        # (x, yz): covers {x,y} and {x,z}
        I = ideal_of(3, (1, 0, 0), (0, 1, 1))
        assert height(I) == 2
        assert big_height(I) == 2

    def test_fano(self):
        # seven vertices minus the rank of the plane
        assert height(fano_ideal()) == 4
        assert big_height(fano_ideal()) == 4

    def test_edge_ideals_match_vertex_cover(self):
        # all graphs on 5 vertices with up to 6 edges, against the subset scan
        pairs = list(itertools.combinations(range(5), 2))
        for count in (1, 3, 6):
            for edges in itertools.islice(itertools.combinations(pairs, count), 40):
                gens = []
                for u, v in edges:
                    vec = [0] * 5
                    vec[u] = vec[v] = 1
                    gens.append(tuple(vec))
                I = MonomialIdeal.from_generators(5, gens)
                covers = brute_minimal_covers([set(e) for e in edges], 5)
                assert height(I) == min(len(c) for c in covers)
                assert big_height(I) == max(len(c) for c in covers)
                assert height(I) <= big_height(I) <= 5
