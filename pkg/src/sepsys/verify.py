"""Independent certification of maps between separation systems.

Checkers work over any pair of structures exposing elements()/inv()/leq()
(and join()/meet() for universe checks), so the same code certifies maps
into abstract systems and into concrete ground-set families.  The
definitional recheck and the brute-force search never reuse cached order
data from the construction side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .concrete import ConcreteSystem, Graph, SetSep, full_set_universe
from .core import SepSystem, Verdict, cosmalls
from .errors import SearchBudgetExceeded, UnknownElement


@dataclass(frozen=True)
class SepMap:
    """A total assignment of domain elements to codomain elements."""

    domain: object
    codomain: object
    assignment: dict

    def __post_init__(self):
        for x in self.domain.elements():
            if x not in self.assignment:
                raise UnknownElement(f"assignment is missing {x!r}")
            if self.assignment[x] not in self.codomain:
                raise UnknownElement(f"image of {x!r} is not in the codomain")

    def __call__(self, x):
        return self.assignment[x]


def check_homomorphism(m: SepMap) -> Verdict:
    """Commutes with the involutions and preserves the order."""
    dom, cod = m.domain, m.codomain
    elems = dom.elements()
    for s in elems:
        if m(dom.inv(s)) != cod.inv(m(s)):
            return Verdict(False, ("involution", s))
    for r in elems:
        for s in elems:
            if dom.leq(r, s) and not cod.leq(m(r), m(s)):
                return Verdict(False, ("order", r, s))
    return Verdict(True)


def check_isomorphism_onto_image(m: SepMap) -> Verdict:
    """Injective homomorphism whose image order reflects the domain order."""
    hom = check_homomorphism(m)
    if not hom:
        return hom
    dom, cod = m.domain, m.codomain
    elems = dom.elements()
    seen = {}
    for x in elems:
        y = m(x)
        if y in seen:
            return Verdict(False, ("injective", seen[y], x))
        seen[y] = x
    for r in elems:
        for s in elems:
            if cod.leq(m(r), m(s)) and not dom.leq(r, s):
                return Verdict(False, ("reflect", r, s))
    return Verdict(True)


def check_universe_isomorphism(m: SepMap) -> Verdict:
    """Bijective onto its image and commuting with inverse, join and meet."""
    dom, cod = m.domain, m.codomain
    for side, name in ((dom, "domain"), (cod, "codomain")):
        if not hasattr(side, "join") or not hasattr(side, "meet"):
            raise TypeError(f"{name} has no join/meet tables")
    elems = dom.elements()
    seen = {}
    for x in elems:
        y = m(x)
        if y in seen:
            return Verdict(False, ("injective", seen[y], x))
        seen[y] = x
    for s in elems:
        if m(dom.inv(s)) != cod.inv(m(s)):
            return Verdict(False, ("involution", s))
    for r in elems:
        for s in elems:
            if m(dom.join(r, s)) != cod.join(m(r), m(s)):
                return Verdict(False, ("join", r, s))
            if m(dom.meet(r, s)) != cod.meet(m(r), m(s)):
                return Verdict(False, ("meet", r, s))
    return Verdict(True)


# -- brute-force oracles ---------------------------------------------------


def canonical_ground_bound(system: SepSystem) -> int:
    """Ground size that always suffices for a set implementation when one exists."""
    return len(system) - len(cosmalls(system))


def oracle_brute_force_set_implementation(
    system: SepSystem, max_ground: Optional[int] = None
):
    """Exhaustive search for a set implementation over grounds of size 0..max.

    Tries every assignment of the system's orbits to separations of the full
    set universe, pruning partial assignments that break the involution,
    injectivity or exact order correspondence.  Assignments are explored in
    lexicographic order of (element index, side masks), so the first hit is
    deterministic.  Returns a verified implementation or None.
    """
    from .construct import Implementation  # local import to avoid a cycle

    if max_ground is None:
        max_ground = canonical_ground_bound(system)
    orbits = system.unoriented()
    if len(orbits) > 4 or max_ground > 4:
        raise SearchBudgetExceeded(
            f"{len(orbits)} orbits over ground {max_ground} is beyond the exact search budget"
        )

    for k in range(max_ground + 1):
        points = tuple(f"v{i}" for i in range(k))
        ambient = full_set_universe(points)
        cands = ambient.seps
        degenerate_img = SetSep(ambient._full, ambient._full)
        assign: dict[str, SetSep] = {}

        def ok_against(x: str, img: SetSep) -> bool:
            if img in assign.values():
                return False
            for y, yimg in assign.items():
                if system.leq(x, y) != ambient.leq(img, yimg):
                    return False
                if system.leq(y, x) != ambient.leq(yimg, img):
                    return False
            return True

        def place(orbit: tuple[str, ...], img: SetSep) -> Optional[list[str]]:
            rep = orbit[0]
            if not ok_against(rep, img):
                return None
            assign[rep] = img
            placed = [rep]
            if len(orbit) == 2:
                other, oimg = orbit[1], SetSep(img.b, img.a)
                if not ok_against(other, oimg):
                    del assign[rep]
                    return None
                assign[other] = oimg
                placed.append(other)
            return placed

        def search(i: int) -> bool:
            if i == len(orbits):
                return True
            orbit = orbits[i]
            options = (degenerate_img,) if len(orbit) == 1 else cands
            for img in options:
                placed = place(orbit, img)
                if placed is None:
                    continue
                if search(i + 1):
                    return True
                for lab in placed:
                    del assign[lab]
            return False

        if search(0):
            image = ConcreteSystem(points, assign.values(), "general")
            smap = SepMap(system, image, dict(assign))
            if check_isomorphism_onto_image(smap):
                return Implementation(system, image, smap, "sets", None)
            # a full assignment always satisfies the pairwise pruning checks
            raise AssertionError("search result failed verification")
    return None


def _sides_as_sets(target: ConcreteSystem, sep: SetSep) -> tuple[frozenset, frozenset]:
    a, b = target.side_points(sep)
    return frozenset(a), frozenset(b)


def oracle_definitional_recheck(impl) -> Verdict:
    """Re-derive every claimed property of an implementation from scratch.

    Set inclusions are recomputed from the rendered point sets rather than
    the stored masks, the order correspondence is checked in both
    directions, and mode-specific claims (disjoint sides, join/meet
    commutation, exact equality with the reconstructed graph's universe) are
    re-established from their definitions.
    """
    src = impl.source
    target = impl.target
    ground = frozenset(target.points)
    sides = {x: _sides_as_sets(target, impl.sep_map(x)) for x in src.elements()}

    for x, (a, b) in sides.items():
        if a | b != ground:
            return Verdict(False, ("cover", x))
        ax, bx = sides[src.inv(x)]
        if (ax, bx) != (b, a):
            return Verdict(False, ("involution", x))
    if impl.mode in ("bipartitions", "strong-bipartitions"):
        for x, (a, b) in sides.items():
            if a & b:
                return Verdict(False, ("disjoint", x))

    items = list(sides.items())
    for x, (ax, bx) in items:
        for y, (ay, by) in items:
            img_le = ax <= ay and by <= bx
            if img_le != src.leq(x, y):
                return Verdict(False, ("order", x, y))
    imgs = {}
    for x, s in sides.items():
        if s in imgs:
            return Verdict(False, ("injective", imgs[s], x))
        imgs[s] = x

    if impl.mode in ("strong-sets", "strong-bipartitions", "graphic"):
        for x, (ax, bx) in items:
            for y, (ay, by) in items:
                jx = sides[src.join(x, y)]
                if jx != (ax | ay, bx & by):
                    return Verdict(False, ("join", x, y))
                mx = sides[src.meet(x, y)]
                if mx != (ax & ay, bx | by):
                    return Verdict(False, ("meet", x, y))

    if impl.mode == "graphic":
        g = impl.graph
        if g is None or tuple(g.vertices) != target.points:
            return Verdict(False, ("graph-ground",))
        image = set(sides.values())
        fresh = set()
        verts = list(g.vertices)
        for amask in range(1 << len(verts)):
            aset = frozenset(v for i, v in enumerate(verts) if (amask >> i) & 1)
            rest = frozenset(v for v in verts if v not in aset)
            for bextra in _subsets(aset):
                bset = rest | bextra
                if _separates(g, aset, bset):
                    fresh.add((aset, bset))
        if image != fresh:
            return Verdict(False, ("graph-universe",))
        declared = {_sides_as_sets(target, s) for s in target.seps}
        if declared != fresh:
            return Verdict(False, ("target-mismatch",))
    return Verdict(True)


def _subsets(s: frozenset):
    items = sorted(s)
    for mask in range(1 << len(items)):
        yield frozenset(x for i, x in enumerate(items) if (mask >> i) & 1)


def _separates(g: Graph, aset: frozenset, bset: frozenset) -> bool:
    aonly = aset - bset
    bonly = bset - aset
    for u, v in g.edges:
        if (u in aonly and v in bonly) or (v in aonly and u in bonly):
            return False
    return True
