"""Certified representations of abstract systems by ground-set separations.

Each constructor either returns a verified :class:`Implementation` or a
:class:`Refusal` carrying the property witness that rules one out.  Every
implementation is checked by the independent morphism checkers before it is
released; a verification failure would contradict the underlying
characterization theorems and raises InternalAssertionFailed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .concrete import ConcreteSystem, Graph, SetSep, graph_universe
from .core import SepSystem, bits, is_fastidious, is_regular, is_scrupulous, delete_unoriented
from .errors import InternalAssertionFailed
from .orientations import consistent_orientations
from .universe import Universe, is_distributive, small_algebra
from .verify import SepMap, check_isomorphism_onto_image, check_universe_isomorphism

NOT_SCRUPULOUS = "not-scrupulous"
NOT_DISTRIBUTIVE = "not-distributive"
NOT_FASTIDIOUS = "not-fastidious"
SMALLS_NOT_BOOLEAN = "smalls-not-boolean"
MAX_SMALL_NOT_DEGENERATE = "max-small-not-degenerate"


@dataclass(frozen=True)
class Implementation:
    """A verified isomorphism onto a family of ground-set separations.

    In graphic mode the target is the full universe of the reconstructed
    graph, not a proper subfamily of it.
    """

    source: object
    target: ConcreteSystem
    sep_map: SepMap
    mode: str  # sets | bipartitions | strong-sets | strong-bipartitions | graphic
    graph: Optional[Graph] = None

    def image(self, x) -> SetSep:
        return self.sep_map(x)


@dataclass(frozen=True)
class Refusal:
    """A constructor's negative answer, with the property witness."""

    reason: str
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return False


def _released(impl: Implementation, strong: bool) -> Implementation:
    check = check_universe_isomorphism if strong else check_isomorphism_onto_image
    verdict = check(impl.sep_map)
    if not verdict:
        raise InternalAssertionFailed(
            f"constructed {impl.mode} map failed verification: {verdict.witness}"
        )
    return impl


def implement_by_sets(system: SepSystem):
    """Represent a scrupulous system by set separations, or refuse.

    The ground set is the non-co-small elements; each element s maps to
    (A_s, A_inv(s)) where A_s collects the ground elements not above s.
    """
    verdict = is_scrupulous(system)
    if not verdict:
        return Refusal(NOT_SCRUPULOUS, verdict.witness)
    ground = [
        x for x in system.elements() if not system.leq(system.inv(x), x)
    ]
    gpos = {x: i for i, x in enumerate(ground)}

    def side(s: str) -> int:
        m = 0
        for x in ground:
            if not system.leq(s, x):
                m |= 1 << gpos[x]
        return m

    assign = {s: SetSep(side(s), side(system.inv(s))) for s in system.elements()}
    target = ConcreteSystem(ground, assign.values(), "general")
    smap = SepMap(system, target, assign)
    return _released(Implementation(system, target, smap, "sets"), strong=False)


# -- strong implementations -------------------------------------------------


def strong_ground_members(u: Universe) -> list[int]:
    """Bitmask subsets of the universe usable as ground-set members.

    A member is an up-closed, meet-closed subset whose complement is
    join-closed and which contains every co-small element.  In a finite
    universe every nonempty such subset is a principal up-set, so candidates
    are scanned as up-sets of single elements; the empty subset qualifies
    only when there are no co-small elements (the empty universe).
    """
    n = len(u)
    cosmall_mask = 0
    for i in range(n):
        if (u._up[u._inv[i]] >> i) & 1:
            cosmall_mask |= 1 << i
    full = (1 << n) - 1
    jt = u._join
    out = []
    for r in range(n):
        x = u._up[r]
        if cosmall_mask & ~x:
            continue
        comp = full & ~x
        comp_list = list(bits(comp))
        ok = True
        for a in comp_list:
            row = jt[a]
            for b in comp_list:
                if (x >> int(row[b])) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(x)
    if cosmall_mask == 0 and n == 0:
        out.append(0)
    return out


def naive_ground_members(u: Universe) -> list[int]:
    """All-subsets reference enumeration of the same ground-set members."""
    n = len(u)
    cosmall_mask = 0
    for i in range(n):
        if (u._up[u._inv[i]] >> i) & 1:
            cosmall_mask |= 1 << i
    full = (1 << n) - 1
    jt, mt = u._join, u._meet
    out = []
    for x in range(1 << n):
        if cosmall_mask & ~x:
            continue
        members = list(bits(x))
        comp = full & ~x
        comp_list = list(bits(comp))
        if any(u._up[a] & ~x for a in members):
            continue  # not up-closed
        if any(u._down[a] & ~comp for a in comp_list):
            continue  # complement not down-closed
        if any(not (x >> int(mt[a][b])) & 1 for a in members for b in members):
            continue
        if any((x >> int(jt[a][b])) & 1 for a in comp_list for b in comp_list):
            continue
        out.append(x)
    return out


def _member_label(u: Universe, x: int) -> str:
    """Label a ground member by its least element (members are up-sets)."""
    for m in bits(x):
        if not (x & ~u._up[m]):
            return f"^{u.labels[m]}"
    return "^"


def _strong_assignment(u: Universe, members: list[int]):
    ground = [_member_label(u, x) for x in members]
    assign = {}
    for i, s in enumerate(u.labels):
        a = b = 0
        ii = u._inv[i]
        for k, x in enumerate(members):
            if (x >> i) & 1:
                a |= 1 << k
            if (x >> ii) & 1:
                b |= 1 << k
        assign[s] = SetSep(a, b)
    return ground, assign


def _distributive_scrupulous(u: Universe) -> Optional[Refusal]:
    verdict = is_distributive(u)
    if not verdict:
        return Refusal(NOT_DISTRIBUTIVE, verdict.witness)
    verdict = is_scrupulous(u)
    if not verdict:
        return Refusal(NOT_SCRUPULOUS, verdict.witness)
    return None


def strong_implement_by_sets(u: Universe):
    """Represent a distributive scrupulous universe by set separations.

    The ground set is the family from :func:`strong_ground_members`; each
    element s maps to (members containing s, members containing inv(s)).
    The result commutes with join and meet and is verified as a universe
    isomorphism onto its image.
    """
    refusal = _distributive_scrupulous(u)
    if refusal is not None:
        return refusal
    members = strong_ground_members(u)
    ground, assign = _strong_assignment(u, members)
    target = ConcreteSystem(ground, assign.values(), "general")
    smap = SepMap(u, target, assign)
    return _released(Implementation(u, target, smap, "strong-sets"), strong=True)


def atomic_strong_implementation(u: Universe):
    """Strong set implementation that sends small atomic elements to singletons.

    Identical to :func:`strong_implement_by_sets` except that the ground
    member consisting of the whole universe is dropped; the image of every
    small atomic element then has a one-point first side.
    """
    refusal = _distributive_scrupulous(u)
    if refusal is not None:
        return refusal
    full = (1 << len(u)) - 1
    members = [x for x in strong_ground_members(u) if x != full]
    ground, assign = _strong_assignment(u, members)
    target = ConcreteSystem(ground, assign.values(), "general")
    smap = SepMap(u, target, assign)
    impl = _released(Implementation(u, target, smap, "strong-sets"), strong=True)
    for s in u.labels:
        cls_small = u.leq(s, u.inv(s))
        below = [y for y in u.labels if y != s and u.leq(y, s)]
        least = u.least()
        atomic = least is not None and s != least and below == [least]
        if cls_small and atomic and bin(assign[s].a).count("1") != 1:
            raise InternalAssertionFailed(f"atomic small {s!r} not sent to a singleton")
    return impl


def strong_implement_by_bipartitions(u: Universe):
    """Represent a distributive fastidious universe by bipartitions.

    Builds the strong set implementation, locates the greatest element's
    image (V, X), checks that every image meets its inverse exactly in X,
    and strips X from both sides to land in a bipartition universe.
    """
    verdict = is_distributive(u)
    if not verdict:
        return Refusal(NOT_DISTRIBUTIVE, verdict.witness)
    verdict = is_fastidious(u)
    if not verdict:
        return Refusal(NOT_FASTIDIOUS, verdict.witness)

    if len(u) == 0:
        target = ConcreteSystem((), (), "bipartition")
        smap = SepMap(u, target, {})
        return _released(
            Implementation(u, target, smap, "strong-bipartitions"), strong=True
        )
    base = strong_implement_by_sets(u)
    if isinstance(base, Refusal):  # fastidious implies scrupulous
        raise InternalAssertionFailed(f"unexpected refusal {base.reason}")

    top = u.greatest()
    if top is None or not u.leq(u.inv(top), top):
        raise InternalAssertionFailed("fastidious universe lacks a co-small greatest element")
    vfull = (1 << len(base.target.points)) - 1
    xmask = base.image(top).b
    if base.image(top).a != vfull:
        raise InternalAssertionFailed("greatest element does not cover the ground set")
    for s in u.labels:
        img = base.image(s)
        if img.a & img.b != xmask:
            raise InternalAssertionFailed("image sides do not all intersect in X")

    keep = [i for i in range(len(base.target.points)) if not (xmask >> i) & 1]
    squeeze = {old: new for new, old in enumerate(keep)}

    def strip(mask: int) -> int:
        out = 0
        for i in bits(mask & ~xmask):
            out |= 1 << squeeze[i]
        return out

    points = tuple(base.target.points[i] for i in keep)
    assign = {
        s: SetSep(strip(base.image(s).a), strip(base.image(s).b)) for s in u.labels
    }
    target = ConcreteSystem(points, assign.values(), "bipartition")
    smap = SepMap(u, target, assign)
    return _released(
        Implementation(u, target, smap, "strong-bipartitions"), strong=True
    )


def implement_by_bipartitions(system: SepSystem):
    """Represent a fastidious system by bipartitions, or refuse.

    Regular systems are represented over their consistent orientations.
    A lone small orbit maps to the trivial bipartition system; otherwise the
    unique small orbit is removed, the regular remainder is represented over
    its orientations, and the small pair is re-attached as (∅,V)/(V,∅).
    """
    verdict = is_fastidious(system)
    if not verdict:
        return Refusal(NOT_FASTIDIOUS, verdict.witness)

    if is_regular(system):
        target, assign = _orientation_bipartitions(system)
        smap = SepMap(system, target, assign)
        return _released(
            Implementation(system, target, smap, "bipartitions"), strong=False
        )

    small = next(s for s in system.elements() if system.leq(s, system.inv(s)))
    cosmall = system.inv(small)
    if len(system) <= 2:
        if small == cosmall:
            points: tuple[str, ...] = ()
            assign = {small: SetSep(0, 0)}
        else:
            points = ("v0",)
            assign = {small: SetSep(0, 1), cosmall: SetSep(1, 0)}
        target = ConcreteSystem(points, assign.values(), "bipartition")
        smap = SepMap(system, target, assign)
        return _released(
            Implementation(system, target, smap, "bipartitions"), strong=False
        )

    if small == cosmall:
        raise InternalAssertionFailed("small separation of a larger fastidious system is degenerate")
    rest = delete_unoriented(system, small)
    if not is_regular(rest):
        raise InternalAssertionFailed("remainder after deleting the small orbit is not regular")
    target_rest, assign = _orientation_bipartitions(rest)
    full = (1 << len(target_rest.points)) - 1
    assign[small] = SetSep(0, full)
    assign[cosmall] = SetSep(full, 0)
    target = ConcreteSystem(target_rest.points, assign.values(), "bipartition")
    smap = SepMap(system, target, assign)
    return _released(
        Implementation(system, target, smap, "bipartitions"), strong=False
    )


def _orientation_bipartitions(system: SepSystem):
    """Map s to (orientations containing inv(s), orientations containing s)."""
    orients = consistent_orientations(system)
    points = tuple(f"O{i}" for i in range(len(orients)))
    assign = {}
    for s in system.elements():
        si = system.inv(s)
        a = b = 0
        for k, o in enumerate(orients):
            if si in o:
                a |= 1 << k
            if s in o:
                b |= 1 << k
        assign[s] = SetSep(a, b)
    target = ConcreteSystem(points, assign.values(), "bipartition")
    return target, assign


def graphic_implementation(u: Universe):
    """Reconstruct a graph whose separation universe realizes ``u`` exactly.

    Requires the small elements to form a boolean algebra whose maximum is
    degenerate, plus distributivity.  The atomic strong implementation fixes
    the vertex set; two vertices are joined unless some image separates
    them.  The image must then coincide with the graph's own universe.
    """
    report = small_algebra(u)
    if not report.is_boolean:
        return Refusal(SMALLS_NOT_BOOLEAN, (report.max_small,))
    if not report.max_degenerate:
        return Refusal(
            MAX_SMALL_NOT_DEGENERATE,
            (report.max_small, u.inv(report.max_small)),
        )
    verdict = is_distributive(u)
    if not verdict:
        return Refusal(NOT_DISTRIBUTIVE, verdict.witness)

    base = atomic_strong_implementation(u)
    if isinstance(base, Refusal):  # boolean smalls with degenerate max are scrupulous
        raise InternalAssertionFailed(f"unexpected refusal {base.reason}")

    points = base.target.points
    images = [base.image(s) for s in u.labels]
    edges = set()
    for v in range(len(points)):
        for w in range(v + 1, len(points)):
            if not any(
                ((img.a >> v) & 1 and not (img.b >> v) & 1 and (img.b >> w) & 1 and not (img.a >> w) & 1)
                for img in images
            ):
                edges.add((points[v], points[w]))
    graph = Graph(points, frozenset(edges))
    ug = graph_universe(graph)
    if set(ug.seps) != set(images):
        raise InternalAssertionFailed("image differs from the reconstructed graph's universe")

    assign = {s: base.image(s) for s in u.labels}
    smap = SepMap(u, ug, assign)
    return _released(
        Implementation(u, ug, smap, "graphic", graph=graph), strong=True
    )
