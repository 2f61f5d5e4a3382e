"""Instance generators: named examples, lattices, trees, exhaustive and
random separation systems and universes.

All generators are deterministic: exhaustive enumeration has a fixed output
order, and the random generators are pure functions of (size, seed).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .concrete import (
    ConcreteSystem,
    Graph,
    SetSep,
    as_abstract,
    bipartition_universe,
    full_set_universe,
)
from .core import SepSystem, bits, build_system
from .errors import BudgetExceeded, InternalAssertionFailed, NotATree, UnknownExample
from .universe import Universe, build_universe
from .verify import SepMap, check_isomorphism_onto_image
from .construct import Implementation


# -- lattices ----------------------------------------------------------------


class Lattice:
    """A finite lattice given by generating order relations.

    The relations are closed reflexively and transitively; joins and meets
    must exist for every pair (checked on construction).
    """

    def __init__(self, elems: Sequence[str], relations: Sequence[tuple[str, str]]):
        self.elems = tuple(elems)
        pos = {e: i for i, e in enumerate(self.elems)}
        n = len(self.elems)
        up = [1 << i for i in range(n)]
        for a, b in relations:
            up[pos[a]] |= 1 << pos[b]
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                for j in bits(acc):
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        for i in range(n):
            for j in bits(up[i]):
                if i != j and (up[j] >> i) & 1:
                    raise ValueError(f"not a partial order: {self.elems[i]} and {self.elems[j]}")
        self._up = tuple(up)
        self._pos = pos
        # existence of all joins/meets is established by the universe check
        universe_from_lattice(self)

    def leq(self, a: str, b: str) -> bool:
        return (self._up[self._pos[a]] >> self._pos[b]) & 1 == 1


def pentagon_lattice() -> Lattice:
    """The 5-element non-distributive lattice with chains of unequal length."""
    return Lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
    )


def diamond_lattice() -> Lattice:
    """The 5-element non-distributive lattice with three incomparable middles."""
    return Lattice(
        ["0", "x", "y", "z", "1"],
        [("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")],
    )


def chain_lattice(k: int) -> Lattice:
    elems = [f"c{i}" for i in range(k)]
    return Lattice(elems, [(elems[i], elems[i + 1]) for i in range(k - 1)])


def universe_from_lattice(lattice: Lattice) -> Universe:
    """Mirror a lattice into a universe with one orbit per lattice element.

    Pluses are ordered like the lattice, minuses oppositely, and every plus
    lies below every minus.  Every pair then has a join and a meet, so the
    universe construction always succeeds for a genuine lattice.
    """
    labels, pairs, rels = [], [], []
    for e in lattice.elems:
        labels += [f"{e}+", f"{e}-"]
        pairs.append((f"{e}+", f"{e}-"))
    for r in lattice.elems:
        for s in lattice.elems:
            if lattice.leq(r, s):
                rels.append((f"{r}+", f"{s}+"))
            rels.append((f"{r}+", f"{s}-"))
    return build_universe(build_system(labels, pairs, rels))


# -- trees -------------------------------------------------------------------


@dataclass(frozen=True)
class Tree:
    """Finite tree: connected, acyclic, simple."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        g = Graph(self.vertices, frozenset(self.edges))
        object.__setattr__(self, "edges", tuple(sorted(g.edges)))
        n = len(self.vertices)
        if len(g.edges) != max(n - 1, 0):
            raise NotATree(f"{len(g.edges)} edges on {n} vertices")
        if n:
            seen = {self.vertices[0]}
            frontier = [self.vertices[0]]
            adj = {v: [] for v in self.vertices}
            for u, v in g.edges:
                adj[u].append(v)
                adj[v].append(u)
            while frontier:
                x = frontier.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        frontier.append(y)
            if len(seen) != n:
                raise NotATree("not connected")


def random_tree(n: int, seed: int) -> Tree:
    """Uniform random labeled tree on n vertices, reproducible from the seed."""
    verts = tuple(f"t{i}" for i in range(n))
    if n <= 1:
        return Tree(verts, ())
    if n == 2:
        return Tree(verts, ((verts[0], verts[1]),))
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((verts[leaf], verts[x]))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((verts[u], verts[v]))
    return Tree(verts, tuple(edges))


def edge_tree_set(tree: Tree) -> tuple[SepSystem, Implementation]:
    """The edge tree set of a tree and its component-side implementation.

    Elements are the oriented edges; (v,w) lies strictly below (x,y) iff the
    edges differ and the w-to-x path avoids both v and y.  Each oriented
    edge also labels the bipartition of the vertices into the two components
    left by removing the edge, which is returned as a verified bipartition
    implementation.
    """
    if not tree.edges:
        raise NotATree("edge tree set needs at least one edge")
    verts = tree.vertices
    pos = {v: i for i, v in enumerate(verts)}
    adj = {v: [] for v in verts}
    for u, v in tree.edges:
        adj[u].append(v)
        adj[v].append(u)

    def component(start: str, banned_edge: tuple[str, str]) -> int:
        mask, frontier = 1 << pos[start], [start]
        seen = {start}
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if {x, y} == set(banned_edge) or y in seen:
                    continue
                seen.add(y)
                mask |= 1 << pos[y]
                frontier.append(y)
        return mask

    def path(a: str, b: str) -> set[str]:
        prev = {a: None}
        frontier = [a]
        while frontier:
            x = frontier.pop()
            if x == b:
                break
            for y in adj[x]:
                if y not in prev:
                    prev[y] = x
                    frontier.append(y)
        out, x = set(), b
        while x is not None:
            out.add(x)
            x = prev[x]
        return out

    oriented = []  # (label, tail, head)
    pairs = []
    comp = {}
    for u, v in tree.edges:
        fwd, bwd = f"{u}>{v}", f"{v}>{u}"
        oriented += [(fwd, u, v), (bwd, v, u)]
        pairs.append((fwd, bwd))
        comp[fwd] = component(u, (u, v))
        comp[bwd] = component(v, (u, v))

    rels = []
    for la, ta, ha in oriented:
        for lb, tb, hb in oriented:
            if {ta, ha} == {tb, hb}:
                continue
            between = path(ha, tb)
            if ta not in between and hb not in between:
                rels.append((la, lb))
    system = build_system([lab for lab, _, _ in oriented], pairs, rels)

    assign = {lab: SetSep(comp[lab], comp[f"{h}>{t}"]) for lab, t, h in oriented}
    target = ConcreteSystem(verts, assign.values(), "bipartition")
    smap = SepMap(system, target, assign)
    verdict = check_isomorphism_onto_image(smap)
    if not verdict:
        raise InternalAssertionFailed(f"component labelling failed verification: {verdict.witness}")
    return system, Implementation(system, target, smap, "bipartitions")


# -- named examples ----------------------------------------------------------


def gen_example(name: str):
    """Built-in structures exercising each property boundary.

    nonscrupulous: two independent small orbits (no set implementation).
    pentagon: fastidious, non-distributive universe on three orbits.
    diamond: fastidious, non-distributive universe with incomparable middles.
    three-star: three pairwise-crossing set separations of a 3-point set.
    """
    if name == "nonscrupulous":
        return build_system(
            ["r+", "r-", "s+", "s-"],
            [("r+", "r-"), ("s+", "s-")],
            [("r+", "r-"), ("s+", "s-")],
        )
    if name == "pentagon":
        system = build_system(
            ["r+", "r-", "s+", "s-", "t+", "t-"],
            [("r+", "r-"), ("s+", "s-"), ("t+", "t-")],
            [("r+", "s+"), ("s+", "t+"), ("t+", "r-"),
             ("r+", "t-"), ("t-", "s-"), ("s-", "r-")],
        )
        return build_universe(system)
    if name == "diamond":
        system = build_system(
            ["r+", "r-", "s+", "s-", "t+", "t-"],
            [("r+", "r-"), ("s+", "s-"), ("t+", "t-")],
            [("r+", "s+"), ("r+", "s-"), ("r+", "t+"), ("r+", "t-"),
             ("s+", "r-"), ("s-", "r-"), ("t+", "r-"), ("t-", "r-")],
        )
        return build_universe(system)
    if name == "three-star":
        points = ("x", "y", "z")
        fam = ConcreteSystem(points, [], "general")
        seps = []
        for a, b in ((("x", "y"), ("x", "z")), (("x", "y"), ("y", "z")), (("x", "z"), ("y", "z"))):
            s = fam.sep_from_sides(a, b)
            seps += [s, SetSep(s.b, s.a)]
        return ConcreteSystem(points, seps, "general")
    raise UnknownExample(f"no example named {name!r}")


# -- exhaustive enumeration ----------------------------------------------


def _pair_orbits(n: int, inv: list[int]) -> list[tuple[tuple[int, int], ...]]:
    """Orbits of non-reflexive ordered pairs under (i,j) -> (inv j, inv i)."""
    orbits, seen = [], set()
    for i in range(n):
        for j in range(n):
            if i == j or (i, j) in seen:
                continue
            mirror = (inv[j], inv[i])
            orbit = ((i, j),) if mirror == (i, j) else ((i, j), mirror)
            seen.update(orbit)
            orbits.append(orbit)
    return orbits


def _isomorphism_perms(degens: int, npairs: int) -> Iterator[tuple[int, ...]]:
    """Element permutations preserving the orbit structure."""
    for dperm in permutations(range(degens)):
        for pperm in permutations(range(npairs)):
            for flips in range(1 << npairs):
                out = list(range(degens + 2 * npairs))
                for i, d in enumerate(dperm):
                    out[i] = d
                for p in range(npairs):
                    q = pperm[p]
                    flip = (flips >> p) & 1
                    out[degens + 2 * p] = degens + 2 * q + flip
                    out[degens + 2 * p + 1] = degens + 2 * q + 1 - flip
                yield tuple(out)


def _canonical_key(up: list[int], perms: list[tuple[int, ...]]) -> tuple[int, ...]:
    n = len(up)
    best = None
    for perm in perms:
        rows = [0] * n
        for i in range(n):
            m = 0
            for j in bits(up[i]):
                m |= 1 << perm[j]
            rows[perm[i]] = m
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return best


def enumerate_systems(max_unoriented: int) -> Iterator[SepSystem]:
    """Every separation system with at most that many unoriented separations,
    one representative per isomorphism class, in a fixed deterministic order.

    Works composition by composition (number of degenerate orbits, number of
    proper orbits): candidate relation sets are unions of involution-orbits
    of ordered pairs, kept when already transitively closed and
    antisymmetric, and deduplicated by a minimal relabeling key.
    """
    if max_unoriented > 3:
        raise BudgetExceeded("exhaustive enumeration is limited to 3 unoriented separations")
    for total in range(max_unoriented + 1):
        for npairs in range(total + 1):
            degens = total - npairs
            labels = [f"d{i}" for i in range(degens)]
            inv = list(range(degens))
            ipairs = []
            for p in range(npairs):
                a, b = f"s{p}+", f"s{p}-"
                ipairs.append((a, b))
                base = degens + 2 * p
                labels += [a, b]
                inv += [base + 1, base]
            n = len(labels)
            orbits = _pair_orbits(n, inv)
            perms = list(_isomorphism_perms(degens, npairs))
            seen_keys = set()
            for pick in range(1 << len(orbits)):
                up = [1 << i for i in range(n)]
                for k in bits(pick):
                    for i, j in orbits[k]:
                        up[i] |= 1 << j
                ok = True
                for i in range(n):
                    if not ok:
                        break
                    for j in bits(up[i]):
                        if i != j and (up[j] >> i) & 1:
                            ok = False
                            break
                        if up[j] & ~up[i]:
                            ok = False
                            break
                if not ok:
                    continue
                key = _canonical_key(up, perms)
                if key in seen_keys:
                    continue
                seen_keys.add(key)
                yield SepSystem(labels, inv, up)


# -- random generation ---------------------------------------------------


def random_system(n: int, seed: int) -> SepSystem:
    """Pseudo-random valid system with at most n unoriented separations."""
    if n > 8:
        raise BudgetExceeded("random systems are limited to 8 unoriented separations")
    rng = random.Random(seed)
    while True:
        npairs = rng.randint(0, n)
        degens = 1 if npairs < n and rng.random() < 0.2 else 0
        labels = [f"d{i}" for i in range(degens)]
        pairs = []
        for p in range(npairs):
            a, b = f"s{p}+", f"s{p}-"
            labels += [a, b]
            pairs.append((a, b))
        density = rng.uniform(0.05, 0.45)
        rels = []
        for a in labels:
            for b in labels:
                if a != b and rng.random() < density:
                    rels.append((a, b))
        try:
            return build_system(labels, pairs, rels)
        except Exception:
            continue


def _close_family(seeds: list[SetSep]) -> set[SetSep]:
    """Close a seed family under inverse, join and meet."""
    fam: set[SetSep] = set()
    work = list(seeds)
    while work:
        s = work.pop()
        if s in fam:
            continue
        fam.add(s)
        work.append(SetSep(s.b, s.a))
        for t in list(fam):
            work.append(SetSep(s.a | t.a, s.b & t.b))
            work.append(SetSep(s.a & t.a, s.b | t.b))
    return fam


def random_universe(
    n: int,
    seed: int,
    mode: str = "sub",
    seed_pentagon: bool = False,
) -> Universe:
    """Pseudo-random universe with at most n unoriented separations.

    mode "sub": a join/meet-closed subfamily of a full set universe (always
    distributive and scrupulous).  mode "sub-bipartition": the same inside a
    bipartition universe (also fastidious).  mode "lattice": mirrored from a
    random closure-system lattice; with ``seed_pentagon`` the lattice is
    multiplied by the pentagon, forcing non-distributivity.
    """
    if n > 8:
        raise BudgetExceeded("random universes are limited to 8 unoriented separations")
    if n < 1:
        raise ValueError("need room for at least one unoriented separation")
    rng = random.Random(seed)
    if mode in ("sub", "sub-bipartition"):
        while True:
            k = rng.randint(1, 4)
            points = [f"p{i}" for i in range(k)]
            ambient = (
                full_set_universe(points)
                if mode == "sub"
                else bipartition_universe(points)
            )
            nseeds = rng.randint(1, 2)
            seeds = [ambient.seps[rng.randrange(len(ambient.seps))] for _ in range(nseeds)]
            fam = _close_family(seeds)
            sub = ConcreteSystem(points, fam, ambient.kind)
            degenerate = sum(1 for s in sub.seps if s.a == s.b)
            unoriented = (len(sub.seps) + degenerate) // 2
            if unoriented <= n:
                return as_abstract(sub, universe=True)
    if mode == "lattice":
        if seed_pentagon:
            if n < 5:
                raise ValueError("a pentagon-seeded lattice needs at least 5 orbits")
            # pentagon with a random chain glued on top keeps it non-distributive
            extra = rng.randint(0, n - 5)
            elems = ["0", "a", "b", "c", "1"] + [f"e{i}" for i in range(extra)]
            rels = [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")]
            prev = "1"
            for i in range(extra):
                rels.append((prev, f"e{i}"))
                prev = f"e{i}"
            return universe_from_lattice(Lattice(elems, rels))
        while True:
            k = rng.randint(2, 3)
            fam = {frozenset(range(k))}
            for _ in range(rng.randint(1, 4)):
                fam.add(frozenset(i for i in range(k) if rng.random() < 0.5))
            closed = set(fam)
            changed = True
            while changed:
                changed = False
                for a in list(closed):
                    for b in list(closed):
                        if a & b not in closed:
                            closed.add(a & b)
                            changed = True
            elems = sorted(closed, key=lambda s: (len(s), sorted(s)))
            names = [".".join(map(str, sorted(e))) or "o" for e in elems]
            rels = [
                (names[i], names[j])
                for i, e in enumerate(elems)
                for j, f in enumerate(elems)
                if e <= f
            ]
            if len(names) <= n:
                return universe_from_lattice(Lattice(names, rels))
    raise ValueError(f"unknown mode {mode!r}")
