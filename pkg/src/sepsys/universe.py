"""Universes: separation systems in which every pair has a join and a meet.

The join/meet tables are always recomputed from the order, never taken on
trust from an input, so the order is the single source of truth.  Table-heavy
law checks (distributivity, cancellation) run vectorized over numpy copies of
the tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import SepSystem, Verdict, bits, smalls
from .errors import NotALattice


class Universe(SepSystem):
    """A separation system with total join and meet tables.

    Build instances with :func:`build_universe`; the constructor expects
    tables that already are the least upper / greatest lower bounds of the
    underlying order.
    """

    __slots__ = ("_join", "_meet")

    def __init__(self, labels, inv, up, join: Sequence[Sequence[int]], meet):
        super().__init__(labels, inv, up)
        n = len(self)
        jarr = np.array(join, dtype=np.int32).reshape(n, n)
        marr = np.array(meet, dtype=np.int32).reshape(n, n)
        jarr.flags.writeable = False
        marr.flags.writeable = False
        self._join = jarr
        self._meet = marr

    def join(self, a: str, b: str) -> str:
        return self.labels[int(self._join[self.index(a), self.index(b)])]

    def meet(self, a: str, b: str) -> str:
        return self.labels[int(self._meet[self.index(a), self.index(b)])]

    def join_table(self) -> np.ndarray:
        return self._join

    def meet_table(self) -> np.ndarray:
        return self._meet

    def __eq__(self, other) -> bool:
        return SepSystem.__eq__(self, other) and (
            not isinstance(other, Universe)
            or (
                np.array_equal(self._join, other._join)
                and np.array_equal(self._meet, other._meet)
            )
        )

    def __hash__(self):
        return SepSystem.__hash__(self)


def _bound_table(rows, kind, labels):
    """Pairwise bound table: rows=up gives joins, rows=down gives meets.

    The bound of (i, j) is the unique m among the common rows[i] & rows[j]
    whose own row covers that whole set; absence raises NotALattice.
    """
    n = len(labels)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            common = rows[i] & rows[j]
            found = -1
            for m in bits(common):
                if common & ~rows[m]:
                    continue
                found = m
                break
            if found < 0:
                raise NotALattice(labels[i], labels[j], kind)
            table[i][j] = table[j][i] = found
    return table


def build_universe(system: SepSystem) -> Universe:
    """Compute join/meet for every pair of the order, or fail with a witness.

    Succeeds iff every pair of elements has a unique least upper bound and a
    unique greatest lower bound.
    """
    join = _bound_table(system._up, "join", system.labels)
    meet = _bound_table(system._down, "meet", system.labels)
    return Universe(system.labels, system._inv, system._up, join, meet)


def is_distributive(u: Universe) -> Verdict:
    """Check x ∧ (y ∨ z) == (x ∧ y) ∨ (x ∧ z) over all triples.

    The dual law follows in any lattice, so only one law is checked.  On
    failure the witness is the first failing triple in element order.
    """
    jn, mt = u._join, u._meet
    for x in range(len(u)):
        mx = mt[x]
        lhs = mx[jn]
        rhs = jn[mx[:, None], mx[None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            y, z = (int(v) for v in bad[0])
            return Verdict(False, (u.labels[x], u.labels[y], u.labels[z]))
    return Verdict(True)


def _leq_matrix(u: Universe) -> np.ndarray:
    n = len(u)
    out = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in bits(u._up[i]):
            out[i, j] = True
    return out


def cancellation_witness(u: Universe) -> Optional[tuple]:
    """Search for (s, t, x) with s∧x <= t∧x and s∨x <= t∨x but s ≰ t.

    Returns None when no such triple exists; in a distributive universe the
    result is always None.
    """
    jn, mt = u._join, u._meet
    leq = _leq_matrix(u)
    for s in range(len(u)):
        ms, js = mt[s], jn[s]
        cond = leq[ms[None, :], mt] & leq[js[None, :], jn] & ~leq[s][:, None]
        bad = np.argwhere(cond)
        if bad.size:
            t, x = (int(v) for v in bad[0])
            return (u.labels[s], u.labels[t], u.labels[x])
    return None


@dataclass(frozen=True)
class SmallAlgebraReport:
    """Structure of the set of small elements inside a universe."""

    is_bounded_sublattice: bool
    is_boolean: bool
    max_small: Optional[str]
    max_degenerate: bool
    atoms: tuple[str, ...]
    smalls: tuple[str, ...]


def small_algebra(u: Universe) -> SmallAlgebraReport:
    """Restrict the universe to its small elements and describe the result.

    Reports whether the smalls are a sublattice of the universe (closed under
    its join and meet), whether that sublattice is a boolean algebra, whether
    its maximum is degenerate, and its atoms.  In a nonempty finite universe
    the least element is always small, so it is the bottom of this poset.
    """
    sm = smalls(u)
    sm_set = set(sm)
    if not sm:
        return SmallAlgebraReport(False, False, None, False, (), ())

    closed = all(
        u.join(a, b) in sm_set and u.meet(a, b) in sm_set for a in sm for b in sm
    )
    max_small = None
    for m in sm:
        if all(u.leq(s, m) for s in sm):
            max_small = m
            break
    bottom = None
    for m in sm:
        if all(u.leq(m, s) for s in sm):
            bottom = m
            break

    is_boolean = closed and max_small is not None and bottom is not None
    if is_boolean:
        for x in sm:
            for y in sm:
                for z in sm:
                    lhs = u.meet(x, u.join(y, z))
                    rhs = u.join(u.meet(x, y), u.meet(x, z))
                    if lhs != rhs:
                        is_boolean = False
        if is_boolean:
            for x in sm:
                if not any(
                    u.join(x, c) == max_small and u.meet(x, c) == bottom for c in sm
                ):
                    is_boolean = False
                    break

    atoms = []
    if bottom is not None:
        for x in sm:
            if x == bottom:
                continue
            if all(not (y != bottom and y != x and u.leq(y, x)) for y in sm):
                atoms.append(x)

    max_degenerate = max_small is not None and u.inv(max_small) == max_small
    return SmallAlgebraReport(
        is_bounded_sublattice=closed,
        is_boolean=is_boolean,
        max_small=max_small,
        max_degenerate=max_degenerate,
        atoms=tuple(atoms),
        smalls=tuple(sm),
    )
