"""Finite separation systems: partial orders with an order-reversing involution.

Elements ("oriented separations") are referenced by their label.  A system
stores its order as one bitmask row per element, which keeps validation,
closure and enumeration exact and fast at the scales this toolkit targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import AntisymmetryViolation, BadInvolution, UnknownElement


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Verdict:
    """Boolean outcome of a property check, with a witness when it fails.

    Truthiness follows ``holds``, so a Verdict can be used directly in
    conditions while keeping the witness available for reporting.
    """

    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ElementClass:
    """Classification flags of a single oriented separation.

    ``atomic`` is None when the containing system has no least element,
    since atomicity is only defined relative to one.
    """

    small: bool
    cosmall: bool
    degenerate: bool
    atomic: Optional[bool]


class SepSystem:
    """A finite separation system.

    Invariants checked on construction:
      * ``inv`` is an involution on the elements,
      * ``leq`` is reflexive, antisymmetric and transitive,
      * the involution reverses the order: r <= s iff inv(s) <= inv(r).

    Degenerate elements (fixed points of the involution) are permitted.
    Instances are immutable; every operation is a pure function.
    """

    __slots__ = ("labels", "_index", "_inv", "_up", "_down", "_full")

    def __init__(self, labels: Sequence[str], inv: Sequence[int], up: Sequence[int]):
        labels = tuple(labels)
        n = len(labels)
        if len(set(labels)) != n:
            raise ValueError("element labels must be unique")
        inv = tuple(inv)
        up = tuple(up)
        if len(inv) != n or len(up) != n:
            raise ValueError("involution/order tables do not match element count")
        full = (1 << n) - 1
        if sorted(inv) != list(range(n)) or any(inv[inv[i]] != i for i in range(n)):
            raise BadInvolution("inv is not an involution")
        for i in range(n):
            if up[i] & ~full:
                raise ValueError("order table references unknown elements")
            if not (up[i] >> i) & 1:
                raise ValueError(f"order not reflexive at {labels[i]!r}")
        for i in range(n):
            for j in bits(up[i]):
                if i != j and (up[j] >> i) & 1:
                    raise AntisymmetryViolation(labels[i], labels[j])
                if up[j] & ~up[i]:
                    raise ValueError(
                        f"order not transitively closed at {labels[i]!r} <= {labels[j]!r}"
                    )
        down = [0] * n
        for i in range(n):
            for j in bits(up[i]):
                down[j] |= 1 << i
        for i in range(n):
            for j in range(n):
                fwd = (up[i] >> j) & 1
                rev = (up[inv[j]] >> inv[i]) & 1
                if fwd != rev:
                    raise BadInvolution(
                        f"involution does not reverse the order at ({labels[i]!r}, {labels[j]!r})"
                    )
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._inv = inv
        self._up = up
        self._down = tuple(down)
        self._full = full

    # -- basic accessors -------------------------------------------------

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label) -> bool:
        return label in self._index

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SepSystem)
            and self.labels == other.labels
            and self._inv == other._inv
            and self._up == other._up
        )

    def __hash__(self):
        return hash((self.labels, self._inv, self._up))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self)} elements)"

    def elements(self) -> tuple[str, ...]:
        return self.labels

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement(f"unknown element {label!r}") from None

    def inv(self, label: str) -> str:
        return self.labels[self._inv[self.index(label)]]

    def leq(self, a: str, b: str) -> bool:
        return (self._up[self.index(a)] >> self.index(b)) & 1 == 1

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    # -- structure -------------------------------------------------------

    def unoriented(self) -> tuple[tuple[str, ...], ...]:
        """Orbits of the involution, as 1- or 2-tuples of labels, in element order."""
        seen = set()
        orbits = []
        for i, lab in enumerate(self.labels):
            if i in seen:
                continue
            j = self._inv[i]
            seen.update((i, j))
            orbits.append((lab,) if i == j else (lab, self.labels[j]))
        return tuple(orbits)

    def relations(self) -> list[tuple[str, str]]:
        """All non-reflexive order relations as label pairs."""
        out = []
        for i in range(len(self)):
            for j in bits(self._up[i]):
                if i != j:
                    out.append((self.labels[i], self.labels[j]))
        return out

    def restrict(self, keep: Iterable[str]) -> "SepSystem":
        """Induced subsystem on the given labels (must be inverse-closed)."""
        keep_idx = [self.index(lab) for lab in keep]
        keep_set = set(keep_idx)
        if any(self._inv[i] not in keep_set for i in keep_idx):
            raise BadInvolution("restriction is not closed under the involution")
        pos = {old: new for new, old in enumerate(keep_idx)}
        labels = [self.labels[i] for i in keep_idx]
        inv = [pos[self._inv[i]] for i in keep_idx]
        up = []
        for i in keep_idx:
            m = 0
            for j in bits(self._up[i]):
                if j in keep_set:
                    m |= 1 << pos[j]
            up.append(m)
        return SepSystem(labels, inv, up)

    def least(self) -> Optional[str]:
        for i in range(len(self)):
            if self._up[i] == self._full:
                return self.labels[i]
        return None

    def greatest(self) -> Optional[str]:
        for i in range(len(self)):
            if self._down[i] == self._full:
                return self.labels[i]
        return None


def build_system(
    elems: Sequence[str],
    involution_pairs: Iterable[tuple[str, str]] = (),
    relations: Iterable[tuple[str, str]] = (),
) -> SepSystem:
    """Build the smallest valid system containing the given relations.

    ``involution_pairs`` lists the 2-cycles of the involution; elements in no
    pair are degenerate (fixed points).  The relations are closed under
    reflexivity, transitivity and involution-reversal; if the closure breaks
    antisymmetry the construction fails.
    """
    labels = list(elems)
    if len(set(labels)) != len(labels):
        raise BadInvolution("duplicate element labels")
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    inv = list(range(n))
    paired = set()
    for pair in involution_pairs:
        a, b = pair if len(pair) == 2 else (pair[0], pair[0])
        if a not in index or b not in index:
            raise UnknownElement(f"involution pair ({a!r}, {b!r}) references unknown elements")
        ia, ib = index[a], index[b]
        if a == b:
            continue  # explicit fixed point
        if ia in paired or ib in paired:
            raise BadInvolution(f"element of pair ({a!r}, {b!r}) already paired")
        paired.update((ia, ib))
        inv[ia], inv[ib] = ib, ia

    up = [1 << i for i in range(n)]
    for a, b in relations:
        if a not in index or b not in index:
            raise UnknownElement(f"relation ({a!r}, {b!r}) references unknown elements")
        up[index[a]] |= 1 << index[b]

    # Alternate involution-reversal and transitive closure to a fixpoint.
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in bits(up[i]):
                m = 1 << inv[i]
                if not up[inv[j]] & m:
                    up[inv[j]] |= m
                    changed = True
        for i in range(n):
            acc = up[i]
            frontier = acc
            while frontier:
                nxt = 0
                for j in bits(frontier):
                    nxt |= up[j]
                frontier = nxt & ~acc
                acc |= nxt
            if acc != up[i]:
                up[i] = acc
                changed = True

    for i in range(n):
        for j in bits(up[i]):
            if i != j and (up[j] >> i) & 1:
                raise AntisymmetryViolation(labels[i], labels[j])
    return SepSystem(labels, inv, up)


# -- element classification and the three order predicates ----------------
#
# These are generic: they only use elements()/inv()/leq(), so they apply to
# abstract systems and to concrete ground-set systems alike.


def classify(system, x) -> ElementClass:
    """Small/co-small/degenerate/atomic flags of element ``x``."""
    elems = system.elements()
    if x not in elems:
        raise UnknownElement(f"unknown element {x!r}")
    xi = system.inv(x)
    small = system.leq(x, xi)
    cosmall = system.leq(xi, x)
    degenerate = x == xi
    least = None
    for cand in elems:
        if all(system.leq(cand, y) for y in elems):
            least = cand
            break
    if least is None:
        atomic = None
    else:
        below = [y for y in elems if y != x and system.leq(y, x)]
        atomic = x != least and below == [least]
    return ElementClass(small, cosmall, degenerate, atomic)


def smalls(system) -> list:
    return [x for x in system.elements() if system.leq(x, system.inv(x))]


def cosmalls(system) -> list:
    return [x for x in system.elements() if system.leq(system.inv(x), x)]


def is_scrupulous(system) -> Verdict:
    """Every two small elements r, s satisfy r <= inv(s)."""
    sm = smalls(system)
    for r in sm:
        for s in sm:
            if not system.leq(r, system.inv(s)):
                return Verdict(False, (r, s))
    return Verdict(True)


def is_fastidious(system) -> Verdict:
    """Every small element lies below every element."""
    for s in smalls(system):
        for t in system.elements():
            if not system.leq(s, t):
                return Verdict(False, (s, t))
    return Verdict(True)


def is_regular(system) -> Verdict:
    """No small elements at all."""
    sm = smalls(system)
    if sm:
        return Verdict(False, (sm[0],))
    return Verdict(True)


def delete_unoriented(system: SepSystem, u: str) -> SepSystem:
    """Remove the orbit {u, inv(u)} and restrict the order."""
    ui = system.inv(u)
    keep = [lab for lab in system.labels if lab not in (u, ui)]
    return system.restrict(keep)
