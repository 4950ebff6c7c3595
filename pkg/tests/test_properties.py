"""Property-based invariants over randomly drawn small graphs."""

from hypothesis import given, settings
from hypothesis import strategies as st
from reference import reference_delta

from oed import (
    Graph,
    add_isolated,
    brute_force_vc_count,
    delta_by_components,
    delta_graycode,
    delta_naive,
    disjoint_union,
    inclusion_exclusion_direct,
    independent_set_count,
    non_cover_count,
    parse_edge_list,
    to_edge_list,
    vc_count_reduction,
    w_polynomial,
)


@st.composite
def graphs(draw, n_min=0, n_max=6, m_max=None):
    n = draw(st.integers(min_value=n_min, max_value=n_max))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph.from_edges(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=m_max))
    return Graph.from_edges(n, chosen)


class TestGraphInvariants:
    @given(graphs())
    def test_edge_list_round_trip(self, g):
        assert parse_edge_list(to_edge_list(g)) == g

    @given(graphs())
    def test_degree_sum_is_twice_edge_count(self, g):
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m

    @given(graphs())
    def test_adjacency_is_symmetric(self, g):
        for v in range(g.n):
            for w in g.adjacency[v]:
                assert v in g.adjacency[w]


class TestCensusInvariants:
    @given(graphs(n_max=5))
    def test_engines_agree_with_reference(self, g):
        expected = tuple(reference_delta(g.n, [(u, v) for u, v in g.edges]))
        assert delta_naive(g).delta == expected
        assert delta_graycode(g).delta == expected
        assert delta_by_components(g).delta == expected

    @given(graphs(n_max=6))
    def test_census_is_complete(self, g):
        profile = delta_graycode(g)
        assert sum(profile.odd_counts) + sum(profile.even_counts) == 2**g.m - 1

    @given(graphs(n_max=6))
    def test_signed_sum(self, g):
        # Every nonempty subset family has one more odd subset than even.
        assert sum(delta_graycode(g).delta) == (1 if g.m else 0)

    @given(graphs(n_max=4), graphs(n_max=4))
    @settings(max_examples=50)
    def test_w_multiplies_over_disjoint_union(self, a, b):
        w_a = w_polynomial(delta_graycode(a))
        w_b = w_polynomial(delta_graycode(b))
        w_union = w_polynomial(delta_graycode(disjoint_union(a, b)))
        assert (w_a * w_b).coeffs == w_union.coeffs

    @given(graphs(n_max=6))
    def test_delta_vanishes_below_two(self, g):
        profile = delta_graycode(g)
        assert profile.delta[0] == 0
        assert g.n == 0 or profile.delta[1] == 0


class TestCoverInvariants:
    @given(graphs(n_max=7))
    def test_reduction_matches_brute_force(self, g):
        assert vc_count_reduction(g) == brute_force_vc_count(g)

    @given(graphs(n_max=7))
    def test_covers_and_independent_sets_agree(self, g):
        assert brute_force_vc_count(g) == independent_set_count(g)

    @given(graphs(n_max=7))
    def test_covers_and_non_covers_partition(self, g):
        assert brute_force_vc_count(g) + non_cover_count(g) == 2**g.n

    @given(graphs(n_max=7, m_max=16))
    @settings(deadline=None)
    def test_alternating_sum_counts_non_covers(self, g):
        assert inclusion_exclusion_direct(g) == non_cover_count(g)

    @given(graphs(n_min=2, n_max=6), st.data())
    @settings(max_examples=50)
    def test_adding_an_edge_never_adds_covers(self, g, data):
        existing = {(e.u, e.v) for e in g.edges}
        missing = [
            (u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in existing
        ]
        if not missing:
            return
        extra = data.draw(st.sampled_from(missing))
        denser = Graph.from_edges(g.n, list(existing) + [extra])
        assert brute_force_vc_count(denser) <= brute_force_vc_count(g)

    @given(graphs(n_max=5), st.integers(min_value=0, max_value=4))
    @settings(max_examples=50)
    def test_isolated_vertices_scale_by_powers_of_two(self, g, t):
        assert vc_count_reduction(add_isolated(g, t)) == vc_count_reduction(g) << t
