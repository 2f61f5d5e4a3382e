"""Tour of the built-in example structures and their property verdicts.

Each structure sits exactly on one of the boundaries that decide which
ground-set representations exist: scrupulous governs set separations,
fastidious governs bipartitions, and distributivity separates the abstract
universes from anything living inside a set universe.
"""

from sepsys import (
    as_abstract,
    cancellation_witness,
    gen_example,
    is_distributive,
    is_fastidious,
    is_regular,
    is_scrupulous,
    small_algebra,
    smalls,
)


def show(name, system):
    print(f"== {name} ==")
    print(f"  elements:   {list(system.elements())}")
    print(f"  smalls:     {smalls(system)}")
    for label, verdict in (
        ("scrupulous", is_scrupulous(system)),
        ("fastidious", is_fastidious(system)),
        ("regular", is_regular(system)),
    ):
        suffix = "" if verdict else f"   witness {verdict.witness}"
        print(f"  {label:11s} {bool(verdict)}{suffix}")
    if hasattr(system, "join"):
        verdict = is_distributive(system)
        suffix = "" if verdict else f"   witness {verdict.witness}"
        print(f"  distributive {bool(verdict)}{suffix}")
        print(f"  cancellation witness: {cancellation_witness(system)}")
        rep = small_algebra(system)
        print(f"  small algebra: boolean={rep.is_boolean} max={rep.max_small} "
              f"degenerate-max={rep.max_degenerate} atoms={list(rep.atoms)}")
    print()


def main():
    # two independent small orbits: the canonical non-scrupulous system
    show("nonscrupulous", gen_example("nonscrupulous"))

    # a fastidious universe that fails distributivity (pentagon shaped)
    show("pentagon", gen_example("pentagon"))

    # the other classical non-distributive shape, also fastidious
    show("diamond", gen_example("diamond"))

    # three pairwise-crossing set separations of {x, y, z}: regular, so
    # fastidious, but no point of the ground set is on one side only
    show("three-star", as_abstract(gen_example("three-star")))


if __name__ == "__main__":
    main()
