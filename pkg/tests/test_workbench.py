"""Generators: named examples, lattices, trees, enumeration, randomness."""

import pytest

from conftest import naive_enumerate_systems, systems_isomorphic
from sepsys import (
    BudgetExceeded,
    NotATree,
    Refusal,
    Tree,
    UnknownExample,
    build_system,
    chain_lattice,
    check_isomorphism_onto_image,
    consistent_orientations,
    diamond_lattice,
    edge_tree_set,
    enumerate_systems,
    gen_example,
    implement_by_bipartitions,
    is_distributive,
    is_fastidious,
    is_regular,
    is_scrupulous,
    pentagon_lattice,
    random_system,
    random_tree,
    random_universe,
    smalls,
    strong_implement_by_sets,
    universe_from_lattice,
)


class TestGenExample:
    def test_pentagon_verdicts(self):
        p = gen_example("pentagon")
        assert is_fastidious(p)
        assert not is_distributive(p)
        assert p.least() == "r+"

    def test_nonscrupulous_verdict(self):
        assert not is_scrupulous(gen_example("nonscrupulous"))

    def test_three_star_has_no_smalls(self):
        ts = gen_example("three-star")
        assert smalls(ts) == []
        assert is_fastidious(ts) and is_regular(ts)

    def test_diamond_is_fastidious_not_distributive(self):
        d = gen_example("diamond")
        assert is_fastidious(d)
        assert not is_distributive(d)
        # middles are pairwise incomparable
        for a in ("s+", "s-", "t+", "t-"):
            for b in ("s+", "s-", "t+", "t-"):
                assert d.leq(a, b) == (a == b)

    def test_unknown_example(self):
        with pytest.raises(UnknownExample):
            gen_example("heptagon")


class TestUniverseFromLattice:
    def test_pentagon_lattice_gives_nondistributive_scrupulous(self):
        u = universe_from_lattice(pentagon_lattice())
        assert len(u) == 10
        assert not is_distributive(u)
        assert is_scrupulous(u)
        assert isinstance(strong_implement_by_sets(u), Refusal)

    def test_diamond_lattice_also_nondistributive(self):
        assert not is_distributive(universe_from_lattice(diamond_lattice()))

    def test_one_element_lattice(self):
        u = universe_from_lattice(chain_lattice(1))
        assert len(u) == 2
        assert is_scrupulous(u)

    def test_two_chain_strong_implements(self):
        u = universe_from_lattice(chain_lattice(2))
        assert is_distributive(u) and is_scrupulous(u)
        impl = strong_implement_by_sets(u)
        assert not isinstance(impl, Refusal)

    def test_all_pluses_small(self):
        u = universe_from_lattice(chain_lattice(3))
        assert smalls(u) == [lab for lab in u.labels if lab.endswith("+")]

    def test_order_without_joins_is_rejected(self):
        from sepsys import Lattice, NotALattice

        with pytest.raises(NotALattice):
            Lattice(["a", "b"], [])  # two incomparable elements, no bounds


class TestEdgeTreeSet:
    def test_path_order(self):
        s, _ = edge_tree_set(Tree(("a", "b", "c"), (("a", "b"), ("b", "c"))))
        assert s.leq("a>b", "b>c")
        assert s.leq("c>b", "b>a")
        assert not s.leq("a>b", "c>b")
        assert not s.leq("b>c", "a>b")

    def test_single_edge_is_regular_antichain(self):
        s, impl = edge_tree_set(Tree(("a", "b"), (("a", "b"),)))
        assert is_regular(s)
        assert s.relations() == []
        assert check_isomorphism_onto_image(impl.sep_map)

    def test_any_tree_is_regular(self):
        for seed in range(10):
            s, _ = edge_tree_set(random_tree(2 + seed % 7, seed))
            assert is_regular(s)

    def test_order_matches_component_containment(self):
        for seed in range(12):
            tree = random_tree(2 + seed % 7, seed)
            s, impl = edge_tree_set(tree)
            for a in s.elements():
                for b in s.elements():
                    ca = impl.image(a).a
                    cb = impl.image(b).a
                    assert s.leq(a, b) == (ca & ~cb == 0)

    def test_both_bipartition_implementations_verify(self):
        for seed in range(8):
            s, comp_impl = edge_tree_set(random_tree(2 + seed % 6, seed))
            assert check_isomorphism_onto_image(comp_impl.sep_map)
            orient_impl = implement_by_bipartitions(s)
            assert check_isomorphism_onto_image(orient_impl.sep_map)

    def test_no_edge_tree_set_for_single_vertex(self):
        with pytest.raises(NotATree):
            edge_tree_set(Tree(("a",), ()))

    def test_not_a_tree(self):
        with pytest.raises(NotATree):
            Tree(("a", "b", "c"), (("a", "b"),))  # disconnected
        with pytest.raises(NotATree):
            Tree(("a", "b", "c"), (("a", "b"), ("b", "c"), ("a", "c")))  # cycle


class TestEnumerateSystems:
    def test_count_for_one_orbit(self):
        got = list(enumerate_systems(1))
        assert len(got) == 4  # empty, degenerate, antichain pair, small pair
        smalls_found = sorted(len(smalls(s)) for s in got)
        assert smalls_found == [0, 0, 1, 1]  # small pair and degenerate

    def test_every_system_revalidates(self):
        for s in enumerate_systems(3):
            rebuilt = build_system(s.elements(), s.unoriented(), s.relations())
            assert rebuilt == s

    def test_count_matches_naive_for_two_orbits(self):
        ours = list(enumerate_systems(2))
        naive = naive_enumerate_systems(2)
        assert len(ours) == len(naive)
        # and they are pairwise non-isomorphic
        for i, a in enumerate(ours):
            for b in ours[i + 1 :]:
                assert not systems_isomorphic(a, b)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            list(enumerate_systems(4))

    def test_deterministic(self):
        a = [s.relations() for s in enumerate_systems(2)]
        b = [s.relations() for s in enumerate_systems(2)]
        assert a == b


class TestRandomGenerators:
    def test_random_system_reproducible(self):
        assert random_system(5, 42) == random_system(5, 42)
        assert random_tree(6, 9) == random_tree(6, 9)
        assert random_universe(5, 3) == random_universe(5, 3)

    def test_sub_mode_always_distributive(self):
        for seed in range(100):
            assert is_distributive(random_universe(4, seed))

    def test_sub_bipartition_mode_fastidious(self):
        for seed in range(20):
            assert is_fastidious(random_universe(4, seed, mode="sub-bipartition"))

    def test_lattice_mode_with_pentagon_not_distributive(self):
        for seed in range(5):
            u = random_universe(6, seed, mode="lattice", seed_pentagon=True)
            assert not is_distributive(u)

    def test_random_tree_is_a_tree(self):
        for seed in range(10):
            t = random_tree(2 + seed % 7, seed)
            assert len(t.edges) == len(t.vertices) - 1

    def test_orientation_counts_on_random_trees(self):
        for seed in range(10):
            n = 2 + seed % 7
            s, _ = edge_tree_set(random_tree(n, seed))
            assert len(consistent_orientations(s)) == n
