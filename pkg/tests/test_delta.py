"""Census engines against frozen values and the itertools reference oracle."""

import pytest
from reference import reference_census, reference_delta, reference_non_cover_count

from oed import (
    CapError,
    DeltaPolynomial,
    DeltaProfile,
    Graph,
    delta_by_components,
    delta_graycode,
    delta_naive,
    delta_polynomial,
    disjoint_union,
    gen_family,
    inclusion_exclusion_direct,
    profile_to_json_dict,
    random_graph,
    w_polynomial,
)

ENGINE_FNS = [delta_naive, delta_graycode, delta_by_components]


@pytest.mark.parametrize("engine", ENGINE_FNS)
class TestFrozenProfiles:
    def test_single_edge(self, engine, k2):
        assert engine(k2).delta == (0, 0, 1)

    def test_triangle(self, engine, k3):
        # 7 nonempty subsets: three odd on 2 vertices, three even and one
        # odd on all 3 vertices.
        assert engine(k3).delta == (0, 0, 3, -2)

    def test_path3(self, engine, p3):
        assert engine(p3).delta == (0, 0, 2, -1)

    def test_two_disjoint_edges(self, engine):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert engine(g).delta == (0, 0, 2, 0, -1)

    def test_edgeless_graph_all_zero(self, engine):
        assert engine(Graph.from_edges(3, [])).delta == (0, 0, 0, 0)

    def test_isolated_vertices_extend_array(self, engine):
        g = Graph.from_edges(4, [(0, 1)])
        assert engine(g).delta == (0, 0, 1, 0, 0)


class TestParityCounts:
    def test_triangle_counts(self, k3):
        profile = delta_naive(k3)
        assert profile.odd_counts == (0, 0, 3, 1)
        assert profile.even_counts == (0, 0, 0, 3)

    def test_census_totals(self, cube):
        profile = delta_graycode(cube)
        total = sum(profile.odd_counts) + sum(profile.even_counts)
        assert total == 2**12 - 1

    def test_components_engine_omits_counts(self, k3):
        profile = delta_by_components(k3)
        assert profile.odd_counts is None
        assert profile.even_counts is None
        assert not profile.has_parity_counts

    def test_matches_reference_census(self):
        g = random_graph(7, 0.4, seed=11)
        odd, even = reference_census(g.n, [(u, v) for u, v in g.edges])
        profile = delta_naive(g)
        assert profile.odd_counts == tuple(odd)
        assert profile.even_counts == tuple(even)


class TestEngineAgreement:
    @pytest.mark.parametrize("seed", range(8))
    def test_random_graphs(self, seed):
        g = random_graph(8, 0.4, seed=seed)
        reference = reference_delta(g.n, [(u, v) for u, v in g.edges])
        assert list(delta_naive(g).delta) == reference
        assert delta_graycode(g).delta == delta_naive(g).delta
        assert delta_by_components(g).delta == delta_naive(g).delta

    def test_cube(self, cube):
        assert delta_graycode(cube).delta == delta_naive(cube).delta

    def test_disconnected(self, k3):
        g = disjoint_union(k3, gen_family("path", 4))
        assert delta_by_components(g).delta == delta_naive(g).delta


class TestRankPartitioning:
    def test_split_and_merge_matches_full_run(self, cube):
        expected = delta_graycode(cube, jobs=1)
        for jobs in (2, 3, 7):
            assert delta_graycode(cube, jobs=jobs) == expected
            assert delta_naive(cube, jobs=jobs) == delta_naive(cube, jobs=1)

    def test_gray_state_rederivation_mid_range(self):
        # Start ranges at arbitrary ranks: partial censuses must tile the
        # full census exactly.
        from oed.delta import _gray_range

        g = Graph.from_edges(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (0, 4), (2, 6)],
        )
        endpoints = tuple((u, v) for u, v in g.edges)
        top = 1 << g.m
        full = _gray_range(g.n, endpoints, 1, top)
        cuts = [1, 5, 97, 341, top]
        odd = [0] * (g.n + 1)
        even = [0] * (g.n + 1)
        for lo, hi in zip(cuts, cuts[1:]):
            podd, peven = _gray_range(g.n, endpoints, lo, hi)
            odd = [a + b for a, b in zip(odd, podd)]
            even = [a + b for a, b in zip(even, peven)]
        assert (odd, even) == full

    def test_env_threads_used(self, monkeypatch, cube):
        monkeypatch.setenv("OED_THREADS", "3")
        assert delta_graycode(cube) == delta_graycode(cube, jobs=1)

    def test_env_threads_invalid(self, monkeypatch, cube):
        monkeypatch.setenv("OED_THREADS", "zero")
        with pytest.raises(ValueError, match="OED_THREADS"):
            delta_graycode(cube)

    def test_process_pool_path(self):
        # Large enough to cross the pool threshold with jobs > 1.
        g = gen_family("cycle", 16)
        assert delta_graycode(g, jobs=2) == delta_graycode(g, jobs=1)


class TestCaps:
    def test_edge_cap_enforced(self):
        g = gen_family("complete", 12)  # 66 edges
        with pytest.raises(CapError, match="at most 62"):
            delta_naive(g)
        with pytest.raises(CapError, match="at most 62"):
            delta_graycode(g)
        with pytest.raises(CapError):
            delta_by_components(g)

    def test_component_cap_is_per_component(self):
        # 64 edges total exceeds the whole-graph cap, but each of the four
        # components has only 16, so the component engine must accept it.
        piece = gen_family("cycle", 16)
        g = piece
        for _ in range(3):
            g = disjoint_union(g, piece)
        assert g.m == 64
        profile = delta_by_components(g)
        assert sum(profile.delta) == 1

    def test_inclusion_exclusion_cap(self):
        g = gen_family("prism", 8)  # 24 edges
        with pytest.raises(CapError, match="at most 20"):
            inclusion_exclusion_direct(g)


class TestInclusionExclusionDirect:
    def test_single_edge(self, k2):
        assert inclusion_exclusion_direct(k2) == 1

    def test_triangle(self, k3):
        assert inclusion_exclusion_direct(k3) == 4

    def test_path3(self, p3):
        assert inclusion_exclusion_direct(p3) == 3

    def test_edgeless(self):
        assert inclusion_exclusion_direct(Graph.from_edges(4, [])) == 0

    @pytest.mark.parametrize("seed", range(6))
    def test_matches_reference_non_cover(self, seed):
        g = random_graph(7, 0.35, seed=seed)
        edges = [(u, v) for u, v in g.edges]
        assert inclusion_exclusion_direct(g) == reference_non_cover_count(g.n, edges)

    def test_equals_delta_weighted_sum(self, cube):
        profile = delta_graycode(cube)
        weighted = sum(profile.delta[k] * 2 ** (cube.n - k) for k in range(2, cube.n + 1))
        assert inclusion_exclusion_direct(cube) == weighted


class TestPolynomials:
    def test_w_of_single_edge(self, k2):
        assert w_polynomial(delta_graycode(k2)).coeffs == (1, 0, -1)

    def test_w_of_triangle(self, k3):
        assert w_polynomial(delta_graycode(k3)).coeffs == (1, 0, -3, 2)

    def test_w_of_edgeless(self):
        profile = delta_graycode(Graph.from_edges(2, []))
        assert w_polynomial(profile).coeffs == (1, 0, 0)

    def test_d_plus_w_is_one(self, cube):
        profile = delta_graycode(cube)
        d = delta_polynomial(profile).coeffs
        w = w_polynomial(profile).coeffs
        combined = [a + b for a, b in zip(d, w)]
        assert combined == [1] + [0] * cube.n

    def test_multiplicativity_two_k2(self, k2):
        w = w_polynomial(delta_graycode(k2))
        product = w * w
        g = disjoint_union(k2, k2)
        assert product.coeffs == w_polynomial(delta_graycode(g)).coeffs

    def test_multiplication_is_plain_convolution(self):
        a = DeltaPolynomial((1, 2))
        b = DeltaPolynomial((3, 0, 1))
        assert (a * b).coeffs == (3, 6, 1, 2)


class TestProfileValidation:
    def test_delta_must_match_counts(self):
        with pytest.raises(ValueError, match="elementwise"):
            DeltaProfile(n=2, odd_counts=(0, 0, 1), even_counts=(0, 0, 0), delta=(0, 0, 2))

    def test_length_checked(self):
        with pytest.raises(ValueError, match="length"):
            DeltaProfile(n=3, odd_counts=None, even_counts=None, delta=(0, 0, 1))

    def test_low_k_must_vanish(self):
        with pytest.raises(ValueError, match="k < 2"):
            DeltaProfile(n=2, odd_counts=None, even_counts=None, delta=(0, 1, 0))

    def test_json_dict_uses_strings(self, k3):
        d = profile_to_json_dict(delta_graycode(k3))
        assert d == {
            "n": 3,
            "O": ["0", "0", "3", "1"],
            "E": ["0", "0", "0", "3"],
            "delta": ["0", "0", "3", "-2"],
        }

    def test_json_dict_components(self, k3):
        d = profile_to_json_dict(delta_by_components(k3))
        assert d["O"] is None
        assert d["E"] is None
        assert d["delta"] == ["0", "0", "3", "-2"]
