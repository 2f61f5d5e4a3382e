"""Morphism checkers and brute-force oracles."""

import pytest

from sepsys import (
    ConcreteSystem,
    SearchBudgetExceeded,
    SepMap,
    SetSep,
    as_abstract,
    bipartition_universe,
    build_system,
    build_universe,
    canonical_ground_bound,
    check_homomorphism,
    check_isomorphism_onto_image,
    check_universe_isomorphism,
    enumerate_systems,
    full_set_universe,
    gen_example,
    implement_by_sets,
    is_scrupulous,
    oracle_brute_force_set_implementation,
    oracle_definitional_recheck,
)


def identity_map(system):
    return SepMap(system, system, {x: x for x in system.elements()})


class TestHomomorphism:
    def test_identity_is_a_homomorphism(self):
        assert check_homomorphism(identity_map(gen_example("pentagon")))

    def test_order_violation_detected(self):
        small = build_system(["r+", "r-"], [("r+", "r-")], [("r+", "r-")])
        anti = build_system(["s+", "s-"], [("s+", "s-")], [])
        m = SepMap(small, anti, {"r+": "s+", "r-": "s-"})
        v = check_homomorphism(m)
        assert not v and v.witness == ("order", "r+", "r-")

    def test_involution_violation_detected(self):
        s = gen_example("nonscrupulous")
        m = SepMap(s, s, {"r+": "r+", "r-": "s-", "s+": "s+", "s-": "r-"})
        v = check_homomorphism(m)
        assert not v and v.witness[0] == "involution"

    def test_constructed_set_implementation_rechecks(self):
        from sepsys import random_system

        count = 0
        seed = 0
        while count < 10:
            system = random_system(4, seed)
            seed += 1
            if not is_scrupulous(system):
                continue
            impl = implement_by_sets(system)
            assert check_homomorphism(impl.sep_map)
            count += 1


class TestIsomorphismOntoImage:
    def test_constant_map_on_antichain_fails_injectivity(self):
        anti = build_system(["s+", "s-"], [("s+", "s-")], [])
        m = SepMap(anti, anti, {"s+": "s+", "s-": "s+"})
        v = check_isomorphism_onto_image(m)
        assert not v and v.witness[0] in ("injective", "involution")

    def test_antichain_into_chain_fails_reflection(self):
        anti = build_system(["s+", "s-"], [("s+", "s-")], [])
        chain = build_system(["t+", "t-"], [("t+", "t-")], [("t+", "t-")])
        m = SepMap(anti, chain, {"s+": "t+", "s-": "t-"})
        v = check_isomorphism_onto_image(m)
        assert not v and v.witness == ("reflect", "s+", "s-")
        # the witness re-fails in isolation
        assert chain.leq("t+", "t-") and not anti.leq("s+", "s-")

    def test_tree_orientation_map_verifies(self):
        from sepsys import Tree, edge_tree_set, implement_by_bipartitions

        s, _ = edge_tree_set(Tree(("a", "b", "c", "d"), (("a", "b"), ("b", "c"), ("c", "d"))))
        impl = implement_by_bipartitions(s)
        assert check_isomorphism_onto_image(impl.sep_map)


class TestUniverseIsomorphism:
    def test_identity_on_one_point_universe(self):
        u = as_abstract(full_set_universe(["a"]))
        assert check_universe_isomorphism(identity_map(u))

    def test_system_iso_that_breaks_a_join(self):
        # inside U({1,2,3}): bottom, two small atoms, the degenerate and
        # their inverses form a lattice of their own, but its join of the
        # two atoms is the degenerate while the ambient join is ({1,2},V)
        pts = ("1", "2", "3")
        conc = full_set_universe(pts)
        fam = []
        for a in [(), ("1",), ("2",), pts]:
            s = conc.sep_from_sides(a, pts)
            fam += [s, SetSep(s.b, s.a)]
        family = ConcreteSystem(pts, fam, "general")
        inner = build_universe(as_abstract(family, universe=False))
        ambient = as_abstract(conc, universe=True)
        m = SepMap(inner, ambient, {x: x for x in inner.elements()})
        assert check_isomorphism_onto_image(m)
        v = check_universe_isomorphism(m)
        assert not v
        assert v.witness[0] in ("join", "meet")

    def test_universe_iso_implies_system_iso(self):
        from sepsys import strong_implement_by_sets, random_universe

        for seed in range(8):
            u = random_universe(4, seed)
            impl = strong_implement_by_sets(u)
            assert check_universe_isomorphism(impl.sep_map)
            assert check_isomorphism_onto_image(impl.sep_map)


class TestBruteForceOracle:
    def test_two_small_orbits_has_no_implementation(self):
        assert oracle_brute_force_set_implementation(gen_example("nonscrupulous"), 3) is None

    def test_single_small_pair_found_with_one_point(self):
        s = build_system(["s+", "s-"], [("s+", "s-")], [("s+", "s-")])
        impl = oracle_brute_force_set_implementation(s, 1)
        assert impl is not None
        assert impl.target.side_points(impl.image("s+")) == ((), ("v0",))

    def test_empty_system(self):
        impl = oracle_brute_force_set_implementation(build_system([], [], []))
        assert impl is not None and impl.target.points == ()

    def test_agrees_with_scrupulous_at_canonical_bound(self):
        for s in enumerate_systems(2):
            found = oracle_brute_force_set_implementation(s, canonical_ground_bound(s))
            assert (found is not None) == bool(is_scrupulous(s))

    def test_budget_guard(self):
        s = as_abstract(bipartition_universe(["a", "b", "c"]), universe=False)
        with pytest.raises(SearchBudgetExceeded):
            oracle_brute_force_set_implementation(s, 5)


class TestDefinitionalRecheck:
    def test_accepted_output_rechecks(self):
        impl = implement_by_sets(
            build_system(["r+", "r-", "s+", "s-"], [("r+", "r-"), ("s+", "s-")], [("r+", "s+")])
        )
        assert oracle_definitional_recheck(impl)

    def test_tampered_implementation_fails(self):
        from sepsys.construct import Implementation

        impl = implement_by_sets(
            build_system(["r+", "r-", "s+", "s-"], [("r+", "r-"), ("s+", "s-")], [("r+", "s+")])
        )
        broken_assign = dict(impl.sep_map.assignment)
        broken_assign["r+"], broken_assign["s+"] = broken_assign["s+"], broken_assign["r+"]
        broken = Implementation(
            impl.source,
            impl.target,
            SepMap(impl.source, impl.target, broken_assign),
            impl.mode,
        )
        v = oracle_definitional_recheck(broken)
        assert not v

    def test_graphic_rechecks_both_inclusions(self):
        from sepsys import Graph, graph_universe, graphic_implementation

        u = as_abstract(graph_universe(Graph(("a", "b"), frozenset({("a", "b")}))))
        impl = graphic_implementation(u)
        assert oracle_definitional_recheck(impl)
