"""Round trip: graph -> separation universe -> reconstructed graph.

A finite universe is the separation universe of some graph exactly when it
is distributive and its small elements form a boolean algebra whose
maximum is degenerate.  The reconstruction pins the vertices down as the
atoms of that algebra and joins two vertices whenever no separation in the
universe places them on strictly opposite sides.
"""

from sepsys import (
    Graph,
    Refusal,
    as_abstract,
    gen_example,
    graph_universe,
    graphic_implementation,
    oracle_definitional_recheck,
    small_algebra,
)
from sepsys.fileio import to_dot


def round_trip(g: Graph):
    u = as_abstract(graph_universe(g))
    print(f"graph {list(g.vertices)} with edges {sorted(g.edges)}")
    print(f"  universe size: {len(u)}")
    rep = small_algebra(u)
    print(f"  small algebra: boolean={rep.is_boolean}, atoms={len(rep.atoms)}")
    impl = graphic_implementation(u)
    back = impl.graph
    print(f"  reconstructed: {len(back.vertices)} vertices, {back.edge_count()} edges")
    print(f"  recheck (image equals the graph's own universe): "
          f"{bool(oracle_definitional_recheck(impl))}")
    print("  DOT:")
    for line in to_dot(back).splitlines():
        print(f"    {line}")
    print()


def main():
    round_trip(Graph(("a", "b"), frozenset({("a", "b")})))
    round_trip(Graph(("a", "b", "c"), frozenset({("a", "b"), ("b", "c")})))
    round_trip(Graph(("a", "b", "c"), frozenset()))

    print("a fastidious but non-boolean-smalls universe is refused:")
    result = graphic_implementation(gen_example("pentagon"))
    assert isinstance(result, Refusal)
    print(f"  {result.reason}: witness {result.witness}")


if __name__ == "__main__":
    main()
