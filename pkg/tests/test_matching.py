import random

import pytest

from tokenslide import (
    Graph,
    InputError,
    Matching,
    MatchingError,
    SizeMismatchError,
    TokenMultiset,
    brute_force_matching,
    fast_match_intervals,
    intersection_graph,
    matching_cost,
    min_cost_matching,
    normalize_matching,
    rematch_after_slide,
    succ_toward_matches,
)
from tokenslide.generators import (
    random_connected_graph,
    random_interval_representation,
    random_token_multiset,
)


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


P4_INTERVALS = [(1, 4), (3, 6), (5, 8), (7, 10)]


class TestMatchingType:
    def test_marginal_validation(self):
        m = Matching({(0, 1): 1, (2, 3): 1})
        m.validate_between(TokenMultiset([0, 2]), TokenMultiset([1, 3]))
        with pytest.raises(MatchingError):
            m.validate_between(TokenMultiset([0, 1]), TokenMultiset([1, 3]))

    def test_inverse_swaps_sides(self):
        m = Matching({(0, 1): 2, (3, 3): 1})
        assert m.inverse() == Matching({(1, 0): 2, (3, 3): 1})
        assert m.inverse().inverse() == m

    def test_zero_multiplicities_dropped(self):
        assert Matching({(0, 1): 0}).items() == []

    def test_negative_multiplicity_rejected(self):
        with pytest.raises(MatchingError):
            Matching({(0, 1): -1})


class TestMatchingCost:
    def test_self_pair_costs_nothing(self):
        assert matching_cost(path(4), Matching({(0, 0): 1})) == 0

    def test_path_distance(self):
        assert matching_cost(path(4), Matching({(0, 3): 1})) == 3

    def test_multiplicity_scales_cost(self):
        assert matching_cost(Graph(2, [(0, 1)]), Matching({(0, 1): 2})) == 2

    def test_cross_component_pair_is_unreachable(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert matching_cost(g, Matching({(0, 2): 1})) is None


class TestMinCostMatching:
    def test_identity(self):
        m, c = min_cost_matching(path(1), TokenMultiset([0]), TokenMultiset([0]))
        assert c == 0 and m == Matching({(0, 0): 1})

    def test_p4_cross(self):
        m, c = min_cost_matching(path(4), TokenMultiset([0, 2]), TokenMultiset([1, 3]))
        assert c == 2
        m.validate_between(TokenMultiset([0, 2]), TokenMultiset([1, 3]))

    def test_forced_double_pairing(self):
        _, c = min_cost_matching(Graph(2, [(0, 1)]), TokenMultiset({0: 2}), TokenMultiset({1: 2}))
        assert c == 2

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            min_cost_matching(path(2), TokenMultiset([0]), TokenMultiset([0, 1]))

    def test_unreachable_returns_none(self):
        g = Graph(4, [(0, 1), (2, 3)])
        m, c = min_cost_matching(g, TokenMultiset([0]), TokenMultiset([2]))
        assert m is None and c is None

    def test_empty_multisets(self):
        m, c = min_cost_matching(path(2), TokenMultiset(), TokenMultiset())
        assert c == 0 and m.total == 0

    def test_agrees_with_brute_force_on_random_graphs(self):
        rng = random.Random(12345)
        for _ in range(500):
            n = rng.randrange(2, 11)
            g = random_connected_graph(n, rng)
            k = rng.randrange(1, 6)
            a = random_token_multiset(n, k, rng)
            b = random_token_multiset(n, k, rng)
            m, c = min_cost_matching(g, a, b)
            assert c == brute_force_matching(g, a, b)
            m.validate_between(a, b)
            assert matching_cost(g, m) == c


class TestBruteForce:
    def test_identity(self):
        assert brute_force_matching(path(1), TokenMultiset([0]), TokenMultiset([0])) == 0

    def test_p4_cross(self):
        assert brute_force_matching(path(4), TokenMultiset([0, 2]), TokenMultiset([1, 3])) == 2

    def test_shared_support_identity(self):
        g = Graph(2, [(0, 1)])
        assert brute_force_matching(g, TokenMultiset([0, 1]), TokenMultiset([0, 1])) == 0

    def test_size_cap(self):
        big = TokenMultiset({0: 9})
        with pytest.raises(InputError):
            brute_force_matching(path(2), big, big)


class TestNormalize:
    def test_rewires_crossing_through_shared_vertex(self):
        g = path(3)
        a, b = TokenMultiset([0, 1]), TokenMultiset([1, 2])
        m = Matching({(0, 1): 1, (1, 2): 1})
        normalized = normalize_matching(g, m, a, b)
        assert normalized == Matching({(1, 1): 1, (0, 2): 1})
        assert matching_cost(g, normalized) == matching_cost(g, m) == 2

    def test_already_normalized_is_fixed_point(self):
        g = path(3)
        a, b = TokenMultiset([0, 1]), TokenMultiset([1, 2])
        m = Matching({(1, 1): 1, (0, 2): 1})
        assert normalize_matching(g, m, a, b) == m

    def test_equal_multisets_become_identity(self):
        g = path(4)
        a = TokenMultiset([0, 2])
        m, _ = min_cost_matching(g, a, a)
        assert normalize_matching(g, m, a, a) == Matching({(0, 0): 1, (2, 2): 1})

    def test_invalid_matching_rejected(self):
        g = path(3)
        with pytest.raises(MatchingError):
            normalize_matching(g, Matching({(0, 0): 1}), TokenMultiset([1]), TokenMultiset([1]))

    def test_random_instances_keep_cost_and_self_match_everything_shared(self):
        rng = random.Random(999)
        for _ in range(200):
            n = rng.randrange(2, 10)
            g = random_connected_graph(n, rng)
            k = rng.randrange(1, 6)
            a = random_token_multiset(n, k, rng)
            b = random_token_multiset(n, k, rng)
            m, c = min_cost_matching(g, a, b)
            normalized = normalize_matching(g, m, a, b)
            normalized.validate_between(a, b)
            assert matching_cost(g, normalized) == c
            inter = a.intersection(b)
            for v in range(n):
                assert normalized.multiplicity(v, v) == inter.count(v)


class TestRematchAfterSlide:
    def test_adjacent_token_reaches_match(self):
        g = path(4)
        m = Matching({(0, 1): 1, (2, 3): 1})
        out = rematch_after_slide(g, m, 0, 1, 1)
        assert out == Matching({(1, 1): 1, (2, 3): 1})
        assert matching_cost(g, out) == 1

    def test_single_edge(self):
        g = Graph(2, [(0, 1)])
        assert rematch_after_slide(g, Matching({(0, 1): 1}), 0, 1, 1) == Matching({(1, 1): 1})

    def test_distance_drops_by_one(self):
        g = path(4)
        out = rematch_after_slide(g, Matching({(0, 3): 1}), 0, 1, 3)
        assert out == Matching({(1, 3): 1})
        assert matching_cost(g, out) == 2

    def test_missing_pair_rejected(self):
        with pytest.raises(MatchingError):
            rematch_after_slide(path(4), Matching({(0, 3): 1}), 1, 2, 3)

    def test_non_successor_rejected(self):
        with pytest.raises(MatchingError):
            rematch_after_slide(path(4), Matching({(1, 3): 1}), 1, 0, 3)

    def test_recomputed_minimum_drops_by_one_on_random_slides(self):
        rng = random.Random(31337)
        done = 0
        while done < 100:
            n = rng.randrange(2, 10)
            g = random_connected_graph(n, rng)
            k = rng.randrange(1, 5)
            a = random_token_multiset(n, k, rng)
            b = random_token_multiset(n, k, rng)
            m, c = min_cost_matching(g, a, b)
            moved = [(u, v) for (u, v), _ in m.items() if u != v]
            if not moved:
                continue
            u, v = moved[rng.randrange(len(moved))]
            succ = succ_toward_matches(g, m, u)
            u2 = succ[rng.randrange(len(succ))]
            target = None
            from tokenslide import succ_set

            for cand_v, _ in m.matches_of(u):
                if cand_v != u and u2 in succ_set(g, u, cand_v):
                    target = cand_v
                    break
            if target is None:
                continue
            out = rematch_after_slide(g, m, u, u2, target)
            assert matching_cost(g, out) == c - 1
            _, c2 = min_cost_matching(g, a.slide(u, u2), b)
            assert c2 == c - 1
            done += 1


class TestSuccTowardMatches:
    def test_unique_path(self):
        assert succ_toward_matches(path(4), Matching({(0, 3): 1}), 0) == (1,)

    def test_self_match_contributes_nothing(self):
        assert succ_toward_matches(path(4), Matching({(0, 0): 1}), 0) == ()

    def test_union_over_matches(self):
        triangle = Graph(3, [(0, 1), (1, 2), (0, 2)])
        m = Matching({(0, 1): 1, (0, 2): 1})
        assert succ_toward_matches(triangle, m, 0) == (1, 2)


class TestFastMatchIntervals:
    def rep(self):
        from tokenslide import IntervalRepresentation

        return IntervalRepresentation(P4_INTERVALS)

    def test_equal_multisets_fully_stripped(self):
        a = TokenMultiset([0, 2])
        m, c = fast_match_intervals(self.rep(), a, a)
        assert c == 0 and m == Matching({(0, 0): 1, (2, 2): 1})

    def test_p4_cross(self):
        m, c = fast_match_intervals(self.rep(), TokenMultiset([0, 2]), TokenMultiset([1, 3]))
        assert c == 2
        m.validate_between(TokenMultiset([0, 2]), TokenMultiset([1, 3]))

    def test_end_to_end_distance(self):
        m, c = fast_match_intervals(self.rep(), TokenMultiset([0]), TokenMultiset([3]))
        assert c == 3 and m == Matching({(0, 3): 1})

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            fast_match_intervals(self.rep(), TokenMultiset([0]), TokenMultiset([0, 1]))

    def test_disconnected_remainder_unreachable(self):
        from tokenslide import IntervalRepresentation

        rep = IntervalRepresentation([(1, 2), (3, 4)])
        m, c = fast_match_intervals(rep, TokenMultiset([0]), TokenMultiset([1]))
        assert m is None and c is None

    def test_matches_exact_solver_on_disjoint_supports(self):
        rng = random.Random(2026)
        done = 0
        trial = 0
        while done < 300:
            trial += 1
            r = random.Random(trial)
            n = r.randrange(2, 11)
            rep = random_interval_representation(n, r, connected=r.random() < 0.6)
            g = intersection_graph(rep)
            k = r.randrange(1, min(n, 5) + 1)
            if 2 * k > n:
                continue
            verts = list(range(n))
            r.shuffle(verts)
            a = TokenMultiset(verts[:k])
            b = TokenMultiset(verts[k : 2 * k])
            fm, fc = fast_match_intervals(rep, a, b)
            _, ec = min_cost_matching(g, a, b)
            assert fc == ec
            if fc is not None:
                fm.validate_between(a, b)
                assert matching_cost(g, fm) == fc
            done += 1

    def test_matches_exact_solver_on_overlapping_multisets(self):
        for trial in range(250):
            r = random.Random(10_000 + trial)
            n = r.randrange(2, 11)
            rep = random_interval_representation(n, r, connected=r.random() < 0.6)
            g = intersection_graph(rep)
            k = r.randrange(1, 6)
            a = TokenMultiset(r.randrange(n) for _ in range(k))
            b = TokenMultiset(r.randrange(n) for _ in range(k))
            fm, fc = fast_match_intervals(rep, a, b)
            _, ec = min_cost_matching(g, a, b)
            assert fc == ec
            if fc is not None:
                fm.validate_between(a, b)
                assert matching_cost(g, fm) == fc
