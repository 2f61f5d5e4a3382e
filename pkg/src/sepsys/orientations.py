"""Consistent orientations of a separation system.

An orientation picks exactly one element from each orbit of the involution
(degenerate orbits leave no choice).  It is consistent when it contains no
pair from distinct orbits of the shape inv(r), s with r <= s: nothing may be
oriented away from something it lies below.
"""

from __future__ import annotations

from typing import Sequence

from .core import SepSystem
from .errors import UnknownElement

Orientation = frozenset  # of element labels, one per unoriented separation


def _conflict(c: int, p: int, inv, up) -> bool:
    # c and p are element indices from distinct orbits
    if (up[inv[c]] >> p) & 1:
        return True
    if (up[inv[p]] >> c) & 1:
        return True
    return False


def consistent_orientations(system: SepSystem) -> list[Orientation]:
    """All consistent orientations, in a fixed backtracking order.

    Orbits are processed in element order; within an orbit the lower-index
    orientation is tried first, so the output order is deterministic.
    Partial choices are pruned as soon as they contain a conflicting pair.
    """
    inv = system._inv
    up = system._up
    orbits = []
    seen = set()
    for i in range(len(system)):
        if i in seen:
            continue
        j = inv[i]
        seen.update((i, j))
        orbits.append((i,) if i == j else (i, j))

    out: list[Orientation] = []
    chosen: list[int] = []

    def extend(k: int) -> None:
        if k == len(orbits):
            out.append(frozenset(system.labels[i] for i in chosen))
            return
        for cand in orbits[k]:
            if any(_conflict(cand, p, inv, up) for p in chosen):
                continue
            chosen.append(cand)
            extend(k + 1)
            chosen.pop()

    extend(0)
    return out


def orientations_containing(
    system: SepSystem, s: str, all_orientations: Sequence[Orientation]
) -> list[Orientation]:
    """The orientations among ``all_orientations`` that contain ``s``."""
    if s not in system:
        raise UnknownElement(f"unknown element {s!r}")
    return [o for o in all_orientations if s in o]
