"""Command-line front-end.

Exit codes: 0 when the command succeeds and the checked property holds,
1 when a constructor refuses or a brute-force search finds nothing (the
witness is printed), 2 for malformed input or an exceeded search budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construct, core, fileio, orientations, universe, workbench
from .concrete import ConcreteSystem, Graph, as_abstract, graph_universe
from .construct import Refusal
from .core import SepSystem
from .errors import BudgetExceeded, InvalidInput, SepsysError
from .universe import Universe
from .verify import oracle_brute_force_set_implementation, oracle_definitional_recheck
from .workbench import Tree, edge_tree_set


def _emit(data) -> None:
    print(json.dumps(data, indent=2))


def _load_system(path: str) -> SepSystem:
    obj = fileio.load_path(path)
    if isinstance(obj, Graph):
        return as_abstract(graph_universe(obj), universe=True)
    if isinstance(obj, Tree):
        return edge_tree_set(obj)[0]
    if isinstance(obj, workbench.Lattice):
        return workbench.universe_from_lattice(obj)
    if isinstance(obj, SepSystem):
        return obj
    raise InvalidInput("file does not describe a separation system")


def _witness(v) -> list:
    return list(v) if v is not None else []


def cmd_validate(args) -> int:
    fileio.load_path(args.file)
    print("ok")
    return 0


def cmd_check(args) -> int:
    system = _load_system(args.file)
    sm = core.smalls(system)
    cs = core.cosmalls(system)
    degs = [x for x in system.elements() if system.inv(x) == x]
    print(f"elements: {len(system)}")
    print(f"small: {sm}")
    print(f"co-small: {cs}")
    print(f"degenerate: {degs}")
    for name, fn in (
        ("scrupulous", core.is_scrupulous),
        ("fastidious", core.is_fastidious),
        ("regular", core.is_regular),
    ):
        verdict = fn(system)
        extra = "" if verdict else f"  witness: {_witness(verdict.witness)}"
        print(f"{name}: {bool(verdict)}{extra}")
    if isinstance(system, Universe):
        verdict = universe.is_distributive(system)
        extra = "" if verdict else f"  witness: {_witness(verdict.witness)}"
        print(f"distributive: {bool(verdict)}{extra}")
        cw = universe.cancellation_witness(system)
        print(f"cancellation-witness: {_witness(cw) or None}")
        report = universe.small_algebra(system)
        print(
            "small-algebra: "
            f"sublattice={report.is_bounded_sublattice} boolean={report.is_boolean} "
            f"max={report.max_small} max-degenerate={report.max_degenerate} "
            f"atoms={list(report.atoms)}"
        )
    return 0


_MODES = {
    "sets": (construct.implement_by_sets, False),
    "bipartitions": (construct.implement_by_bipartitions, False),
    "strong-sets": (construct.strong_implement_by_sets, True),
    "strong-bipartitions": (construct.strong_implement_by_bipartitions, True),
    "graph": (construct.graphic_implementation, True),
}


def cmd_implement(args) -> int:
    system = _load_system(args.file)
    fn, needs_universe = _MODES[args.mode]
    if needs_universe and not isinstance(system, Universe):
        raise InvalidInput(f"mode {args.mode!r} needs a universe input")
    result = fn(system)
    if isinstance(result, Refusal):
        _emit({"refused": result.reason, "witness": _witness(result.witness)})
        return 1
    cert = fileio.implementation_to_dict(result)
    if args.verify:
        cert["verified"] = bool(oracle_definitional_recheck(result))
    _emit(cert)
    return 0 if cert["verified"] else 1


def cmd_orientations(args) -> int:
    system = _load_system(args.file)
    for o in orientations.consistent_orientations(system):
        print(" ".join(sorted(o)))
    return 0


def cmd_gen(args) -> int:
    chosen = [bool(args.example), args.tree is not None, args.random is not None]
    if sum(chosen) != 1:
        raise InvalidInput("choose exactly one of --example, --tree, --random")
    if args.example:
        obj = workbench.gen_example(args.example)
        if isinstance(obj, ConcreteSystem):
            obj = as_abstract(obj)
        _emit(fileio.system_to_dict(obj))
    elif args.tree is not None:
        _emit(fileio.tree_to_dict(workbench.random_tree(args.tree, args.seed)))
    else:
        _emit(fileio.system_to_dict(workbench.random_system(args.random, args.seed)))
    return 0


_FILTERS = {
    "scrupulous": core.is_scrupulous,
    "fastidious": core.is_fastidious,
    "regular": core.is_regular,
}


def cmd_enumerate(args) -> int:
    pred = None
    if args.filter:
        name = args.filter
        negate = name.startswith("not-")
        fn = _FILTERS.get(name[4:] if negate else name)
        if fn is None:
            raise InvalidInput(f"unknown filter {args.filter!r}")
        pred = (fn, negate)
    count = 0
    for system in workbench.enumerate_systems(args.max):
        if pred is not None:
            verdict = bool(pred[0](system))
            if verdict == pred[1]:
                continue
        count += 1
        print(json.dumps(fileio.system_to_dict(system)))
    print(f"total: {count}", file=sys.stderr)
    return 0


def cmd_oracle(args) -> int:
    system = _load_system(args.file)
    impl = oracle_brute_force_set_implementation(system, args.max_ground)
    if impl is None:
        print("no set implementation within the ground bound")
        return 1
    _emit(fileio.implementation_to_dict(impl))
    return 0


def cmd_export(args) -> int:
    obj = fileio.load_path(args.file)
    if isinstance(obj, Tree):
        obj = Graph(obj.vertices, frozenset(obj.edges))
    if not isinstance(obj, Graph):
        raise InvalidInput("export needs a graph or tree input")
    text = fileio.to_dot(obj)
    with open(args.dot, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.dot}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepsys",
        description="Exact toolkit for finite separation systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate an input file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("check", help="classify elements and run all property checks")
    p.add_argument("file")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("implement", help="construct a certified representation")
    p.add_argument("file")
    p.add_argument("--mode", required=True, choices=sorted(_MODES))
    p.add_argument("--verify", action="store_true", help="run the definitional recheck")
    p.set_defaults(fn=cmd_implement)

    p = sub.add_parser("orientations", help="list all consistent orientations")
    p.add_argument("file")
    p.set_defaults(fn=cmd_orientations)

    p = sub.add_parser("gen", help="generate a named example, tree, or random system")
    p.add_argument("--example", choices=["nonscrupulous", "pentagon", "diamond", "three-star"])
    p.add_argument("--tree", type=int, metavar="N")
    p.add_argument("--random", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="K")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("enumerate", help="enumerate small systems up to isomorphism")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--filter", metavar="PREDICATE")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("oracle", help="brute-force search for a set implementation")
    p.add_argument("file")
    p.add_argument("--max-ground", type=int, default=None)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("export", help="write a graph as DOT")
    p.add_argument("file")
    p.add_argument("--dot", required=True, metavar="OUT")
    p.set_defaults(fn=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidInput, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SepsysError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
