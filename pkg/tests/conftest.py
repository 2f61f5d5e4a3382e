"""Shared brute-force oracles, written independently of the library internals.

Everything here recomputes definitions from scratch (itertools over subsets,
explicit permutation search) so that library results can be checked against
a second, unrelated code path.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from sepsys import SepSystem, build_system


def subsets(items):
    items = list(items)
    for mask in range(1 << len(items)):
        yield frozenset(x for i, x in enumerate(items) if (mask >> i) & 1)


def brute_force_set_seps(points):
    """All (A, B) frozenset pairs with A ∪ B = points."""
    points = frozenset(points)
    out = []
    for a in subsets(points):
        for extra in subsets(a):
            out.append((a, (points - a) | extra))
    return out


def brute_force_bipartitions(points):
    points = frozenset(points)
    return [(a, points - a) for a in subsets(points)]


def brute_force_graph_seps(vertices, edges):
    out = []
    for a, b in brute_force_set_seps(vertices):
        if all(
            not ((u in a - b and v in b - a) or (v in a - b and u in b - a))
            for u, v in edges
        ):
            out.append((a, b))
    return out


def orientation_is_consistent(system, orientation) -> bool:
    """Direct re-check of the consistency definition on a full orientation."""
    elems = list(orientation)
    for u in elems:
        for w in elems:
            if {u, system.inv(u)} == {w, system.inv(w)}:
                continue
            if system.leq(system.inv(u), w):
                return False
    return True


def all_orientations(system):
    """Every choice of one orientation per orbit, unchecked."""
    orbits = system.unoriented()
    for pick in product(*orbits):
        yield frozenset(pick)


def naive_enumerate_systems(max_unoriented):
    """Independent exhaustive enumeration with explicit isomorphism dedup.

    Enumerates raw relation subsets (no orbit folding), keeps the valid
    ones, and deduplicates by searching for a structure-preserving bijection
    between candidate systems.
    """
    found = []
    for total in range(max_unoriented + 1):
        for npairs in range(total + 1):
            degens = total - npairs
            labels = [f"d{i}" for i in range(degens)]
            pairs = []
            for p in range(npairs):
                labels += [f"s{p}+", f"s{p}-"]
                pairs.append((f"s{p}+", f"s{p}-"))
            n = len(labels)
            slots = [(i, j) for i in range(n) for j in range(n) if i != j]
            for mask in range(1 << len(slots)):
                rels = [
                    (labels[i], labels[j])
                    for k, (i, j) in enumerate(slots)
                    if (mask >> k) & 1
                ]
                try:
                    system = build_system(labels, pairs, rels)
                except Exception:
                    continue
                if sorted(system.relations()) != sorted(rels):
                    continue  # not closed; its closure appears as another mask
                if not any(systems_isomorphic(system, other) for other in found):
                    found.append(system)
    return found


def systems_isomorphic(s1: SepSystem, s2: SepSystem) -> bool:
    """Search all bijections commuting with involution and order."""
    if len(s1) != len(s2):
        return False
    e1, e2 = list(s1.elements()), list(s2.elements())
    for perm in permutations(e2):
        f = dict(zip(e1, perm))
        if any(f[s1.inv(x)] != s2.inv(f[x]) for x in e1):
            continue
        if all(s1.leq(x, y) == s2.leq(f[x], f[y]) for x in e1 for y in e1):
            return True
    return False


def graph_edge_sets_up_to_iso(n):
    """All graphs on vertices 0..n-1 up to isomorphism, as edge frozensets."""
    verts = list(range(n))
    all_edges = list(combinations(verts, 2))
    seen = set()
    out = []
    for pick in subsets(all_edges):
        best = None
        for q in permutations(verts):
            p = dict(zip(verts, q))
            key = tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in pick))
            if best is None or key < best:
                best = key
        if best not in seen:
            seen.add(best)
            out.append(frozenset(pick))
    return out
