"""Consistent orientations and their slices."""

import pytest

from conftest import all_orientations, orientation_is_consistent
from sepsys import (
    Tree,
    UnknownElement,
    build_system,
    consistent_orientations,
    edge_tree_set,
    enumerate_systems,
    is_regular,
    orientations_containing,
    random_tree,
)


def path3():
    return edge_tree_set(Tree(("a", "b", "c"), (("a", "b"), ("b", "c"))))[0]


class TestConsistentOrientations:
    def test_path_on_three_vertices_has_three(self):
        s = path3()
        got = consistent_orientations(s)
        assert len(got) == 3
        # independent path: filter all 2^2 choices by the raw definition
        expect = [o for o in all_orientations(s) if orientation_is_consistent(s, o)]
        assert sorted(map(sorted, got)) == sorted(map(sorted, expect))

    def test_empty_system_has_exactly_one(self):
        assert consistent_orientations(build_system([], [], [])) == [frozenset()]

    def test_star_with_three_leaves_has_four(self):
        star, _ = edge_tree_set(
            Tree(("c", "x", "y", "z"), (("c", "x"), ("c", "y"), ("c", "z")))
        )
        got = consistent_orientations(star)
        assert len(got) == 4
        expect = [o for o in all_orientations(star) if orientation_is_consistent(star, o)]
        assert sorted(map(sorted, got)) == sorted(map(sorted, expect))

    def test_every_output_passes_direct_recheck(self):
        for s in enumerate_systems(3):
            for o in consistent_orientations(s):
                assert orientation_is_consistent(s, o)

    def test_matches_naive_filter_on_every_enumerated_system(self):
        for s in enumerate_systems(3):
            got = {frozenset(o) for o in consistent_orientations(s)}
            expect = {
                o for o in all_orientations(s) if orientation_is_consistent(s, o)
            }
            assert got == expect

    def test_tree_orientation_count_equals_vertex_count(self):
        for seed in range(15):
            n = 2 + seed % 7
            tree = random_tree(n, seed)
            s, _ = edge_tree_set(tree)
            assert len(consistent_orientations(s)) == n


class TestOrientationsContaining:
    def test_partition_for_regular_systems(self):
        s = path3()
        all_os = consistent_orientations(s)
        for x in s.elements():
            with_x = orientations_containing(s, x, all_os)
            with_inv = orientations_containing(s, s.inv(x), all_os)
            assert len(with_x) + len(with_inv) == len(all_os)
            assert not set(map(frozenset, with_x)) & set(map(frozenset, with_inv))

    def test_degenerate_is_in_every_orientation(self):
        s = build_system(["m"], [], [])
        all_os = consistent_orientations(s)
        assert orientations_containing(s, "m", all_os) == all_os

    def test_first_edge_toward_middle_has_two(self):
        s = path3()
        all_os = consistent_orientations(s)
        assert len(orientations_containing(s, "a>b", all_os)) == 2

    def test_unknown_element(self):
        s = path3()
        with pytest.raises(UnknownElement):
            orientations_containing(s, "zzz", consistent_orientations(s))


def test_monotone_slice_property_on_regular_systems():
    # s <= t implies every orientation containing t also contains s
    pool = [s for s in enumerate_systems(3) if is_regular(s)]
    for seed in range(5):
        pool.append(edge_tree_set(random_tree(4 + seed % 3, seed))[0])
    for s in pool:
        all_os = consistent_orientations(s)
        for a in s.elements():
            for b in s.elements():
                if s.leq(a, b):
                    ob = orientations_containing(s, b, all_os)
                    oa = orientations_containing(s, a, all_os)
                    assert set(ob) <= set(oa)
