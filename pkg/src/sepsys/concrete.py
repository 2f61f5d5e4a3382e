"""Concrete separation systems over a finite ground set.

A ground-set separation is an ordered pair (A, B) of subsets with A ∪ B = V,
ordered by (A,B) <= (C,D) iff A ⊆ C and D ⊆ B, with inverse (B,A), join
(A∪C, B∩D) and meet (A∩C, B∪D).  Sides are stored as bitmasks over the
ground order, so equality is structural and iteration is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .core import SepSystem, bits
from .errors import BudgetExceeded, NotClosed, UnknownElement
from .universe import build_universe

MAX_FULL_GROUND = 12  # 3^n oriented separations; beyond this refuse outright


class SetSep(NamedTuple):
    """One oriented ground-set separation, sides as bitmasks."""

    a: int
    b: int


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertices")
        pos = {v: i for i, v in enumerate(self.vertices)}
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in pos or v not in pos:
                raise UnknownElement(f"edge {e!r} references unknown vertices")
            norm.add((u, v) if pos[u] < pos[v] else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: str, v: str) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges


class ConcreteSystem:
    """A family of ground-set separations, closed under the inverse map.

    ``kind`` is "general", "bipartition" (all sides disjoint) or "graph"
    (the full universe of separations of some graph).  join/meet are the
    set-wise operations and are total, whether or not the family is closed
    under them; :meth:`is_closed` tells.
    """

    __slots__ = ("points", "seps", "kind", "_pos", "_full", "_septset")

    def __init__(self, points: Sequence[str], seps: Iterable[SetSep], kind: str = "general"):
        points = tuple(points)
        if len(set(points)) != len(points):
            raise ValueError("duplicate ground points")
        if kind not in ("general", "bipartition", "graph"):
            raise ValueError(f"unknown kind {kind!r}")
        full = (1 << len(points)) - 1
        seen = sorted(set(SetSep(int(s[0]), int(s[1])) for s in seps))
        for s in seen:
            if s.a & ~full or s.b & ~full:
                raise UnknownElement(f"separation {s} exceeds the ground set")
            if s.a | s.b != full:
                raise ValueError(f"sides of {s} do not cover the ground set")
            if kind == "bipartition" and s.a & s.b:
                raise ValueError(f"sides of {s} are not disjoint")
        have = set(seen)
        for s in seen:
            if SetSep(s.b, s.a) not in have:
                raise ValueError(f"family is not closed under the inverse map at {s}")
        self.points = points
        self.seps = tuple(seen)
        self.kind = kind
        self._pos = {s: i for i, s in enumerate(seen)}
        self._full = full
        self._septset = have

    # -- generic system interface (same names as SepSystem) ---------------

    def __len__(self) -> int:
        return len(self.seps)

    def __iter__(self):
        return iter(self.seps)

    def __contains__(self, sep) -> bool:
        return sep in self._septset

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConcreteSystem)
            and self.points == other.points
            and self.seps == other.seps
            and self.kind == other.kind
        )

    def __hash__(self):
        return hash((self.points, self.seps, self.kind))

    def __repr__(self) -> str:
        return f"ConcreteSystem({len(self.seps)} seps over {len(self.points)} points, {self.kind})"

    def elements(self) -> tuple[SetSep, ...]:
        return self.seps

    def inv(self, s: SetSep) -> SetSep:
        self._check(s)
        return SetSep(s.b, s.a)

    def leq(self, s: SetSep, t: SetSep) -> bool:
        self._check(s)
        self._check(t)
        return not (s.a & ~t.a) and not (t.b & ~s.b)

    def join(self, s: SetSep, t: SetSep) -> SetSep:
        self._check(s)
        self._check(t)
        return SetSep(s.a | t.a, s.b & t.b)

    def meet(self, s: SetSep, t: SetSep) -> SetSep:
        self._check(s)
        self._check(t)
        return SetSep(s.a & t.a, s.b | t.b)

    def _check(self, s: SetSep) -> None:
        if s not in self._septset:
            raise UnknownElement(f"separation {s} is not in the family")

    # -- set-side helpers --------------------------------------------------

    def side_points(self, s: SetSep) -> tuple[tuple[str, ...], tuple[str, ...]]:
        a = tuple(self.points[i] for i in bits(s.a))
        b = tuple(self.points[i] for i in bits(s.b))
        return a, b

    def label_of(self, s: SetSep) -> str:
        a, b = self.side_points(s)
        return "({%s},{%s})" % (",".join(a), ",".join(b))

    def sep_from_sides(self, a: Iterable[str], b: Iterable[str]) -> SetSep:
        pos = {p: i for i, p in enumerate(self.points)}
        am = bm = 0
        for p in a:
            am |= 1 << pos[p]
        for p in b:
            bm |= 1 << pos[p]
        return SetSep(am, bm)

    def is_closed(self) -> bool:
        """Closed under set-wise join and meet."""
        have = self._septset
        for s in self.seps:
            for t in self.seps:
                if SetSep(s.a | t.a, s.b & t.b) not in have:
                    return False
                if SetSep(s.a & t.a, s.b | t.b) not in have:
                    return False
        return True


def full_set_universe(points: Sequence[str]) -> ConcreteSystem:
    """All separations (A, B) with A ∪ B = V: 3^|V| oriented elements."""
    points = tuple(points)
    n = len(points)
    if n > MAX_FULL_GROUND:
        raise BudgetExceeded(f"ground set of size {n} exceeds the exact-scale limit")
    seps = []
    for a in range(1 << n):
        rest = ((1 << n) - 1) & ~a
        # b must contain every point outside a; points of a are free
        sub = a
        while True:
            seps.append(SetSep(a, rest | sub))
            if sub == 0:
                break
            sub = (sub - 1) & a
    return ConcreteSystem(points, seps, "general")


def bipartition_universe(points: Sequence[str]) -> ConcreteSystem:
    """All bipartitions (A, V∖A), sides possibly empty: 2^|V| elements."""
    points = tuple(points)
    n = len(points)
    if n > MAX_FULL_GROUND:
        raise BudgetExceeded(f"ground set of size {n} exceeds the exact-scale limit")
    full = (1 << n) - 1
    seps = [SetSep(a, full & ~a) for a in range(1 << n)]
    return ConcreteSystem(points, seps, "bipartition")


def graph_universe(g: Graph) -> ConcreteSystem:
    """All (A, B) covering V(G) with no edge between A∖B and B∖A."""
    base = full_set_universe(g.vertices)
    pos = {v: i for i, v in enumerate(g.vertices)}
    emasks = [(1 << pos[u], 1 << pos[v]) for u, v in sorted(g.edges, key=lambda e: (pos[e[0]], pos[e[1]]))]
    seps = []
    for s in base.seps:
        aonly = s.a & ~s.b
        bonly = s.b & ~s.a
        if any((um & aonly and vm & bonly) or (vm & aonly and um & bonly) for um, vm in emasks):
            continue
        seps.append(s)
    return ConcreteSystem(g.vertices, seps, "graph")


def as_abstract(c: ConcreteSystem, universe: Optional[bool] = None):
    """Forget the set structure, keeping the order (and tables when closed).

    With ``universe=True`` the family must be join/meet closed, else
    NotClosed is raised; with ``None`` a Universe is produced exactly when
    the family is closed.  Abstract labels are the rendered set pairs, so
    element k of the result corresponds to ``c.elements()[k]``.
    """
    want = c.is_closed() if universe is None else universe
    if want and not c.is_closed():
        raise NotClosed("family is not closed under join and meet")
    labels = [c.label_of(s) for s in c.seps]
    inv = [c._pos[SetSep(s.b, s.a)] for s in c.seps]
    up = []
    for s in c.seps:
        m = 0
        for j, t in enumerate(c.seps):
            if not (s.a & ~t.a) and not (t.b & ~s.b):
                m |= 1 << j
        up.append(m)
    system = SepSystem(labels, inv, up)
    if want:
        return build_universe(system)
    return system
