"""Reducible local patterns: detection, reduction, and coloring lifts.

Each reducible pattern kind carries a stable string identifier (see
``KIND_ORDER``).  ``detect_configuration`` scans the kinds in that fixed
order and returns the first match, scanning vertices in ascending id order
inside each kind, so detection is fully deterministic.  ``apply_reduction``
shrinks the graph (strictly fewer edges) and records a replayable
``ReductionStep``; ``lift_coloring`` extends a valid coloring of the reduced
graph back to the original graph, re-verifying the result before returning.

Every lift step draws colors through ``pick_color`` under a color order
derived from the input coloring's first-use order, which makes the whole
lift equivariant under palette permutations up to color names: renaming the
input palette never changes which vertices end up sharing a color, only
what the shared colors are called.  ``certify_lemma`` exploits that to
check a kind exhaustively on generated hosts while enumerating only
canonical colorings of the reduced graph, and spot-checks the claim by
re-lifting renamed inputs.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .graphs import Graph
from .listcolor import (ColorOrder, DependencyColoringError, Lists,
                        color_dependency_graph, pick_color)
from .planarity import is_planar
from .verify import Coloring, is_weak_dynamic

log = logging.getLogger(__name__)

PALETTE: tuple[int, ...] = (1, 2, 3, 4, 5, 6)

KIND_L1A = "L1a-degree1"
KIND_L1B = "L1b-2vertex-3minus"
KIND_L2 = "L2-adjacent-4plus"
KIND_L3 = "L3-4334"
KIND_L4 = "L4-adjacent-3faces"
KIND_L5 = "L5-3regular-triangle"
KIND_L6 = "L6-triangle-pair"
KIND_L7 = "L7-triangle-deg4-apex"
KIND_L8 = "L8-triangle-deg5plus-apex"
KIND_L9 = "L9-3regular-cycle-with-free-vertex"
KIND_L10 = "L10-3regular-cycle"

KIND_ORDER: tuple[str, ...] = (
    KIND_L1A, KIND_L1B, KIND_L2, KIND_L3, KIND_L4, KIND_L5,
    KIND_L6, KIND_L7, KIND_L8, KIND_L9, KIND_L10,
)

#: Short labels accepted by certify_lemma and the command line; "L1" covers
#: both of its sub-kinds.
SHORT_KINDS: dict[str, tuple[str, ...]] = {
    "L1": (KIND_L1A, KIND_L1B),
    "L2": (KIND_L2,),
    "L3": (KIND_L3,),
    "L4": (KIND_L4,),
    "L5": (KIND_L5,),
    "L6": (KIND_L6,),
    "L7": (KIND_L7,),
    "L8": (KIND_L8,),
    "L9": (KIND_L9,),
    "L10": (KIND_L10,),
}


class ReductionError(Exception):
    """Base class for reduction-machinery failures."""


class StaleConfigurationError(ReductionError):
    """The graph no longer matches the configuration it was detected on."""


class LiftError(ReductionError):
    """A lift could not be completed; carries the full local state."""

    def __init__(self, message: str, *, kind: str | None = None,
                 matched: tuple[tuple[str, int], ...] | None = None,
                 stage: str | None = None,
                 coloring: Coloring | None = None):
        super().__init__(message)
        self.kind = kind
        self.matched = matched
        self.stage = stage
        self.coloring = dict(coloring) if coloring is not None else None


@dataclass(frozen=True)
class Configuration:
    """A detected reducible pattern.

    ``kind`` is one of ``KIND_ORDER``.  ``matched`` names the pattern's
    vertices as ordered ``(role, vertex)`` pairs; role names follow the
    published v1..vk convention for each kind, with ``w``-prefixed roles for
    companion vertices (hubs, witnesses).  ``boundary`` lists the nearby
    outside vertices (within distance two of the pattern) whose colors
    constrain the lift.
    """

    kind: str
    matched: tuple[tuple[str, int], ...]
    boundary: tuple[int, ...]

    def role(self, name: str) -> int:
        for r, v in self.matched:
            if r == name:
                return v
        raise KeyError(name)

    def roles(self) -> dict[str, int]:
        return dict(self.matched)

    def vertices(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.matched)


@dataclass(frozen=True)
class ReductionStep:
    """One replayable reduction: what was removed, merged, and frozen.

    ``local`` freezes the adjacency (in the pre-reduction graph) of every
    matched vertex so a later lift can check it is being replayed against
    the same graph.  ``reduced_vertices`` records the vertex set of the
    reduced graph, which the input coloring of a lift must cover exactly.
    """

    kind: str
    matched: tuple[tuple[str, int], ...]
    boundary: tuple[int, ...]
    removed_vertices: tuple[int, ...]
    removed_edges: tuple[tuple[int, int], ...]
    contracted: tuple[int, int] | None
    identified: tuple[int, int] | None
    fresh: int | None
    local: tuple[tuple[int, tuple[int, ...]], ...]
    reduced_vertices: tuple[int, ...]

    def roles(self) -> dict[str, int]:
        return dict(self.matched)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "matched": {r: v for r, v in self.matched},
            "boundary": list(self.boundary),
            "removed_vertices": list(self.removed_vertices),
            "removed_edges": [list(e) for e in self.removed_edges],
            "contracted": list(self.contracted) if self.contracted else None,
            "identified": list(self.identified) if self.identified else None,
            "fresh": self.fresh,
        }


@dataclass(frozen=True)
class ReductionTrace:
    """Ordered stack of reduction steps, first-applied first."""

    steps: tuple[ReductionStep, ...]

    def to_json_dict(self) -> dict:
        return {"steps": [s.to_json_dict() for s in self.steps]}


# --------------------------------------------------------------------------
# color-order and protection helpers

def _color_order_from(coloring: Coloring) -> tuple[int, ...]:
    """First-use order of colors over ascending vertex ids, then the rest
    of the palette numerically.  Permutation-equivariant by construction."""
    order: list[int] = []
    for v in sorted(coloring):
        c = coloring[v]
        if c not in order:
            order.append(c)
    for c in PALETTE:
        if c not in order:
            order.append(c)
    return tuple(order)


def _palette_in(order: ColorOrder) -> tuple[int, ...]:
    return tuple(order) if order is not None else PALETTE


def _rank(color: int, order: ColorOrder) -> int:
    if order is None:
        return color
    return list(order).index(color)


def _satisfy_through(g: Graph, coloring: Coloring, target: int,
                     pending: frozenset[int] | set[int], incoming: int = 1,
                     k: int = 3, color_order: ColorOrder = None) -> set[int]:
    """Colors that the next fresh assignments must avoid to keep ``target``
    on track for seeing ``min(deg, k)`` distinct neighbor colors.

    ``pending`` lists the not-yet-final vertices whose colors must be
    ignored.  ``incoming`` is the number of target's pending neighbors about
    to receive pairwise-distinct fresh colors, each avoiding the returned
    set.  When the already-fixed colors outnumber what is still needed, the
    earliest colors under ``color_order`` are designated, keeping the choice
    permutation-equivariant.
    """
    m = min(g.degree(target), k)
    fixed: set[int] = set()
    for u in g.neighbors(target):
        if u in pending:
            continue
        cu = coloring.get(u)
        if cu is not None:
            fixed.add(cu)
    if len(fixed) >= m:
        return set()
    need = m - incoming
    if need <= 0:
        return set()
    if len(fixed) <= need:
        return set(fixed)
    ranked = sorted(fixed, key=lambda c: _rank(c, color_order))
    return set(ranked[:need])


def _avoid_set(g: Graph, coloring: Coloring, w: int, explicit, protect,
               pending, order: ColorOrder) -> set[int]:
    pend = frozenset(pending) | {w}
    avoid: set[int] = set()
    for c in explicit:
        if c is None:
            raise LiftError(f"missing color referenced while coloring {w}",
                            stage=f"assign {w}")
        avoid.add(c)
    for x in protect:
        avoid |= _satisfy_through(g, coloring, x, pend, color_order=order)
    return avoid


def _assign(g: Graph, coloring: Coloring, w: int, *, explicit=(), protect=(),
            pending=(), order: ColorOrder = None, bound: int | None = None,
            stage: str = "") -> int:
    """Color ``w`` avoiding the explicit colors plus every protection set.

    ``bound`` asserts the published size limit on the forbidden set; the
    palette has six colors, so a bound of five or less guarantees a choice.
    """
    avoid = _avoid_set(g, coloring, w, explicit, protect, pending, order)
    if bound is not None and len(avoid) > bound:
        raise LiftError(
            f"{stage}: forbidden set {sorted(avoid)} exceeds bound {bound}"
            f" while coloring {w}", stage=stage)
    cands = [c for c in PALETTE if c not in avoid]
    if not cands:
        raise LiftError(f"{stage}: no color left for {w}"
                        f" (forbidden {sorted(avoid)})", stage=stage)
    coloring[w] = pick_color(cands, order)
    return coloring[w]


def _hit(stats: dict | None, label: str) -> None:
    log.debug("lift branch %s", label)
    if stats is not None:
        stats[label] = stats.get(label, 0) + 1


# --------------------------------------------------------------------------
# detection

def _boundary_of(g: Graph, members) -> tuple[int, ...]:
    mem = set(members)
    ring: set[int] = set()
    for v in mem:
        ring |= g.neighbors(v)
    ball = set(ring)
    for v in ring:
        ball |= g.neighbors(v)
    return tuple(sorted((ring | ball) - mem))


def _configuration(g: Graph, kind: str, roles) -> Configuration:
    conf = Configuration(kind=kind, matched=tuple(roles),
                         boundary=_boundary_of(g, (v for _, v in roles)))
    if not validate_configuration(g, conf):
        raise ReductionError(f"constructed {kind} configuration fails its"
                             f" own invariants: {roles}")
    return conf


def _only(s) -> int:
    (x,) = s
    return x


def _find_l1a(g: Graph) -> Configuration | None:
    for v in sorted(g.vertices()):
        if g.degree(v) == 1:
            u = _only(g.neighbors(v))
            return _configuration(g, KIND_L1A, [("v1", v), ("u1", u)])
    return None


def _find_l1b(g: Graph) -> Configuration | None:
    for v1 in sorted(g.vertices()):
        if g.degree(v1) != 2:
            continue
        lows = sorted(u for u in g.neighbors(v1) if g.degree(u) <= 3)
        if not lows:
            continue
        v2 = lows[0]
        u1 = _only(g.neighbors(v1) - {v2})
        return _configuration(g, KIND_L1B, [("v1", v1), ("v2", v2),
                                            ("u1", u1)])
    return None


def _find_l2(g: Graph) -> Configuration | None:
    for u, w in sorted(g.edges()):
        if g.degree(u) >= 4 and g.degree(w) >= 4:
            return _configuration(g, KIND_L2, [("v1", u), ("v2", w)])
    return None


def _l3_sides(g: Graph, mid: int, other: int):
    """Split N(mid) - {other} into (one 4+ vertex, one 3-vertex), or None."""
    rest = g.neighbors(mid) - {other}
    if len(rest) != 2:
        return None
    fours = sorted(u for u in rest if g.degree(u) >= 4)
    threes = sorted(u for u in rest if g.degree(u) == 3)
    if len(fours) != 1 or len(threes) != 1:
        return None
    return fours[0], threes[0]


def _find_l3(g: Graph) -> Configuration | None:
    for a, b in sorted(g.edges()):
        if g.degree(a) != 3 or g.degree(b) != 3:
            continue
        for v2, v3 in ((a, b), (b, a)):
            left = _l3_sides(g, v2, v3)
            right = _l3_sides(g, v3, v2)
            if left is None or right is None:
                continue
            v1, v5 = left
            v4, v6 = right
            if len({v1, v2, v3, v4, v5, v6}) != 6:
                continue
            return _configuration(g, KIND_L3, [("v1", v1), ("v2", v2),
                                               ("v3", v3), ("v4", v4),
                                               ("v5", v5), ("v6", v6)])
    return None


def _find_l4(g: Graph) -> Configuration | None:
    for u, w in sorted(g.edges()):
        if g.degree(u) != 3 or g.degree(w) != 3:
            continue
        rest_u = g.neighbors(u) - {w}
        rest_w = g.neighbors(w) - {u}
        if rest_u != rest_w:
            continue
        v2, v4 = sorted(rest_u)
        return _configuration(g, KIND_L4, [("v1", u), ("v2", v2), ("v3", w),
                                           ("v4", v4)])
    return None


def _find_l5(g: Graph) -> Configuration | None:
    for a in sorted(g.vertices()):
        if g.degree(a) != 3:
            continue
        for b in sorted(g.neighbors(a)):
            if b <= a or g.degree(b) != 3:
                continue
            for c in sorted(g.neighbors(a) & g.neighbors(b)):
                if c <= b or g.degree(c) != 3:
                    continue
                w1 = _only(g.neighbors(a) - {b, c})
                w2 = _only(g.neighbors(b) - {a, c})
                w3 = _only(g.neighbors(c) - {a, b})
                if len({w1, w2, w3}) != 3:
                    continue
                if min(g.degree(w1), g.degree(w2), g.degree(w3)) < 3:
                    continue
                return _configuration(g, KIND_L5, [("v1", a), ("v2", b),
                                                   ("v3", c), ("w1", w1),
                                                   ("w2", w2), ("w3", w3)])
    return None


def _find_l6(g: Graph) -> Configuration | None:
    for v3 in sorted(g.vertices()):
        if g.degree(v3) != 3:
            continue
        for v1 in sorted(g.neighbors(v3)):
            if g.degree(v1) < 4:
                continue
            v2, v4 = sorted(g.neighbors(v3) - {v1})
            if g.degree(v2) != 3 or g.degree(v4) != 3:
                continue
            if not (g.has_edge(v1, v2) and g.has_edge(v1, v4)):
                continue
            if g.has_edge(v2, v4):
                continue
            v5 = _only(g.neighbors(v2) - {v1, v3})
            v6 = _only(g.neighbors(v4) - {v1, v3})
            if g.degree(v5) < 3 or g.degree(v6) < 3:
                continue
            return _configuration(g, KIND_L6, [("v1", v1), ("v2", v2),
                                               ("v3", v3), ("v4", v4),
                                               ("v5", v5), ("v6", v6)])
    return None


def _find_apex_triangle(g: Graph, apex_test) -> Configuration | None:
    for v3 in sorted(g.vertices()):
        if not apex_test(g.degree(v3)):
            continue
        pairs = itertools.combinations(sorted(g.neighbors(v3)), 2)
        for v1, v2 in pairs:
            if not g.has_edge(v1, v2):
                continue
            if g.degree(v1) != 3 or g.degree(v2) != 3:
                continue
            v4 = _only(g.neighbors(v1) - {v2, v3})
            v5 = _only(g.neighbors(v2) - {v1, v3})
            if v4 == v5:
                continue
            if g.degree(v4) != 3 or g.degree(v5) != 3:
                continue
            roles = [("v1", v1), ("v2", v2), ("v3", v3), ("v4", v4),
                     ("v5", v5)]
            if g.degree(v3) == 4:
                v6, v7 = sorted(g.neighbors(v3) - {v1, v2})
                if g.degree(v6) > 3 or g.degree(v7) > 3:
                    continue
                roles += [("v6", v6), ("v7", v7)]
                return _configuration(g, KIND_L7, roles)
            return _configuration(g, KIND_L8, roles)
    return None


def _find_l7(g: Graph) -> Configuration | None:
    return _find_apex_triangle(g, lambda d: d == 4)


def _find_l8(g: Graph) -> Configuration | None:
    return _find_apex_triangle(g, lambda d: d >= 5)


def _chordless_deg3_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Chordless cycles whose vertices all have degree three, ascending by
    length, then by canonical labeling (minimum vertex first, second vertex
    smaller than last)."""
    deg3 = [v for v in sorted(g.vertices()) if g.degree(v) == 3]
    if len(deg3) < 3:
        return
    allowed = set(deg3)

    def extend(path: list[int], target_len: int) -> Iterator[tuple[int, ...]]:
        start = path[0]
        tail = path[-1]
        if len(path) == target_len:
            if (g.has_edge(tail, start) and path[1] < path[-1]):
                yield tuple(path)
            return
        for w in sorted(g.neighbors(tail)):
            if w <= start or w in path or w not in allowed:
                continue
            # chordlessness: w may touch only the tail (and the start when
            # it is about to close the cycle)
            body = path if len(path) + 1 < target_len else path[1:]
            if any(g.has_edge(w, p) for p in body[:-1]):
                continue
            path.append(w)
            yield from extend(path, target_len)
            path.pop()

    for length in range(3, len(deg3) + 1):
        for s in deg3:
            yield from extend([s], length)


def _cycle_hubs(g: Graph, cycle: tuple[int, ...]) -> list[int] | None:
    """Per-position outside neighbor of each cycle vertex (all degree 3)."""
    k = len(cycle)
    hubs = []
    for i, v in enumerate(cycle):
        rest = g.neighbors(v) - {cycle[i - 1], cycle[(i + 1) % k]}
        if len(rest) != 1:
            return None
        hubs.append(_only(rest))
    return hubs


def _find_l9(g: Graph) -> Configuration | None:
    for cycle in _chordless_deg3_cycles(g):
        k = len(cycle)
        hubs = _cycle_hubs(g, cycle)
        if hubs is None:
            continue
        if any(g.degree(h) < 3 for h in hubs):
            continue
        if any(hubs[i] == hubs[(i + 1) % k] for i in range(k)):
            continue
        free = [i for i in range(k) if g.degree(hubs[i]) == 3]
        if not free:
            continue
        roles = [(f"v{i + 1}", cycle[i]) for i in range(k)]
        if k % 2 == 0:
            even = [i for i in free if i % 2 == 0]
            odd = [i for i in free if i % 2 == 1]
            if not even or not odd:
                continue
            roles += [("wfree1", hubs[even[0]]), ("wfree2", hubs[odd[0]])]
        else:
            roles += [("wfree1", hubs[free[0]])]
        return _configuration(g, KIND_L9, roles)
    return None


def _l10_orientation(g: Graph, cycle: tuple[int, ...]):
    """A rotation/reflection of the cycle whose even positions carry 4+
    hubs and odd positions carry 3-hubs, with the published side rules."""
    k = len(cycle)
    if k % 2:
        return None
    base_variants = [tuple(cycle), tuple(reversed(cycle))]
    for variant in base_variants:
        hubs = _cycle_hubs(g, variant)
        if hubs is None or any(g.degree(h) < 3 for h in hubs):
            return None
        for r in range(k):
            rot = variant[r:] + variant[:r]
            roth = hubs[r:] + hubs[:r]
            if any(g.degree(roth[i]) < 4 for i in range(0, k, 2)):
                continue
            if any(g.degree(roth[i]) != 3 for i in range(1, k, 2)):
                continue
            mult: dict[int, int] = {}
            for h in roth[1::2]:
                mult[h] = mult.get(h, 0) + 1
            if any(c > 2 or (c == 2 and k != 4) for c in mult.values()):
                continue
            w1, w3 = roth[0], roth[2]
            if w1 != w3 and g.has_edge(w1, w3):
                continue
            return rot, w1, w3
    return None


def _find_l10(g: Graph) -> Configuration | None:
    for cycle in _chordless_deg3_cycles(g):
        oriented = _l10_orientation(g, cycle)
        if oriented is None:
            continue
        rot, w1, w3 = oriented
        roles = [(f"v{i + 1}", rot[i]) for i in range(len(rot))]
        roles += [("w1", w1), ("w3", w3)]
        return _configuration(g, KIND_L10, roles)
    return None


_DETECTORS: tuple[tuple[str, Callable[[Graph], Configuration | None]], ...] = (
    (KIND_L1A, _find_l1a), (KIND_L1B, _find_l1b), (KIND_L2, _find_l2),
    (KIND_L3, _find_l3), (KIND_L4, _find_l4), (KIND_L5, _find_l5),
    (KIND_L6, _find_l6), (KIND_L7, _find_l7), (KIND_L8, _find_l8),
    (KIND_L9, _find_l9), (KIND_L10, _find_l10),
)


def detect_configuration(g: Graph, kind: str | None = None) -> Configuration | None:
    """First matching configuration in kind order, or None when the graph
    is reduction-free.  Deterministic; never raises on valid graphs.

    With ``kind`` given, scan for that single pattern only (the graph may
    well contain earlier patterns elsewhere); used to exercise one rule
    in isolation.
    """
    if kind is not None:
        finder = dict(_DETECTORS).get(kind)
        if finder is None:
            raise ReductionError(f"unknown configuration kind {kind!r}")
        return finder(g)
    for _, finder in _DETECTORS:
        conf = finder(g)
        if conf is not None:
            return conf
    return None


# --------------------------------------------------------------------------
# configuration validation (used at construction and against stale graphs)

def _valid_cycle(g: Graph, cycle: list[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for v in cycle:
        if not g.has_vertex(v) or g.degree(v) != 3:
            return False
    for i in range(k):
        if not g.has_edge(cycle[i], cycle[(i + 1) % k]):
            return False
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if g.has_edge(cycle[i], cycle[j]):
                return False
    return True


def validate_configuration(g: Graph, conf: Configuration) -> bool:
    """Re-check a configuration's invariants against the current graph."""
    r = conf.roles()
    try:
        if any(not g.has_vertex(v) for v in conf.vertices()):
            return False
        if conf.kind == KIND_L1A:
            return (g.degree(r["v1"]) == 1
                    and g.neighbors(r["v1"]) == frozenset({r["u1"]}))
        if conf.kind == KIND_L1B:
            return (g.degree(r["v1"]) == 2 and g.degree(r["v2"]) <= 3
                    and g.neighbors(r["v1"]) == frozenset({r["v2"], r["u1"]}))
        if conf.kind == KIND_L2:
            return (g.has_edge(r["v1"], r["v2"]) and g.degree(r["v1"]) >= 4
                    and g.degree(r["v2"]) >= 4)
        if conf.kind == KIND_L3:
            six = [r[f"v{i}"] for i in range(1, 7)]
            if len(set(six)) != 6 or not g.has_edge(r["v2"], r["v3"]):
                return False
            return (_l3_sides(g, r["v2"], r["v3"]) == (r["v1"], r["v5"])
                    and _l3_sides(g, r["v3"], r["v2"]) == (r["v4"], r["v6"]))
        if conf.kind == KIND_L4:
            if not g.has_edge(r["v1"], r["v3"]):
                return False
            if g.degree(r["v1"]) != 3 or g.degree(r["v3"]) != 3:
                return False
            rest = frozenset({r["v2"], r["v4"]})
            return (g.neighbors(r["v1"]) - {r["v3"]} == rest
                    and g.neighbors(r["v3"]) - {r["v1"]} == rest)
        if conf.kind == KIND_L5:
            tri = [r["v1"], r["v2"], r["v3"]]
            hubs = [r["w1"], r["w2"], r["w3"]]
            if len(set(tri + hubs)) != 6:
                return False
            for a, b in itertools.combinations(tri, 2):
                if not g.has_edge(a, b):
                    return False
            for v, w in zip(tri, hubs):
                if g.degree(v) != 3 or g.degree(w) < 3:
                    return False
                if g.neighbors(v) - set(tri) != frozenset({w}):
                    return False
            return True
        if conf.kind == KIND_L6:
            v1, v2, v3, v4 = r["v1"], r["v2"], r["v3"], r["v4"]
            if g.degree(v1) < 4 or g.degree(v3) != 3:
                return False
            if g.degree(v2) != 3 or g.degree(v4) != 3:
                return False
            if g.neighbors(v3) != frozenset({v1, v2, v4}):
                return False
            if not (g.has_edge(v1, v2) and g.has_edge(v1, v4)):
                return False
            if g.has_edge(v2, v4):
                return False
            return (g.neighbors(v2) - {v1, v3} == frozenset({r["v5"]})
                    and g.neighbors(v4) - {v1, v3} == frozenset({r["v6"]})
                    and g.degree(r["v5"]) >= 3 and g.degree(r["v6"]) >= 3)
        if conf.kind in (KIND_L7, KIND_L8):
            v1, v2, v3 = r["v1"], r["v2"], r["v3"]
            v4, v5 = r["v4"], r["v5"]
            if conf.kind == KIND_L7 and g.degree(v3) != 4:
                return False
            if conf.kind == KIND_L8 and g.degree(v3) < 5:
                return False
            if g.degree(v1) != 3 or g.degree(v2) != 3:
                return False
            if not (g.has_edge(v1, v2) and g.has_edge(v1, v3)
                    and g.has_edge(v2, v3)):
                return False
            if v4 == v5 or g.degree(v4) != 3 or g.degree(v5) != 3:
                return False
            if g.neighbors(v1) - {v2, v3} != frozenset({v4}):
                return False
            if g.neighbors(v2) - {v1, v3} != frozenset({v5}):
                return False
            if conf.kind == KIND_L7:
                pair = frozenset({r["v6"], r["v7"]})
                if g.neighbors(v3) - {v1, v2} != pair:
                    return False
                if any(g.degree(x) > 3 for x in pair):
                    return False
            return True
        if conf.kind == KIND_L9:
            cycle = _conf_cycle(conf)
            if not _valid_cycle(g, cycle):
                return False
            hubs = _cycle_hubs(g, tuple(cycle))
            if hubs is None or any(g.degree(h) < 3 for h in hubs):
                return False
            k = len(cycle)
            if any(hubs[i] == hubs[(i + 1) % k] for i in range(k)):
                return False
            free = [i for i in range(k) if g.degree(hubs[i]) == 3]
            if k % 2 == 0:
                return (any(i % 2 == 0 for i in free)
                        and any(i % 2 == 1 for i in free))
            return bool(free)
        if conf.kind == KIND_L10:
            cycle = _conf_cycle(conf)
            if not _valid_cycle(g, cycle):
                return False
            hubs = _cycle_hubs(g, tuple(cycle))
            if hubs is None:
                return False
            k = len(cycle)
            if k % 2 or any(g.degree(hubs[i]) < 4 for i in range(0, k, 2)):
                return False
            if any(g.degree(hubs[i]) != 3 for i in range(1, k, 2)):
                return False
            mult: dict[int, int] = {}
            for h in hubs[1::2]:
                mult[h] = mult.get(h, 0) + 1
            if any(c > 2 or (c == 2 and k != 4) for c in mult.values()):
                return False
            w1, w3 = hubs[0], hubs[2]
            if (w1, w3) != (r["w1"], r["w3"]):
                return False
            return w1 == w3 or not g.has_edge(w1, w3)
        return False
    except (KeyError, ValueError):
        return False


def _conf_cycle(conf: Configuration) -> list[int]:
    out = []
    i = 1
    r = conf.roles()
    while f"v{i}" in r:
        out.append(r[f"v{i}"])
        i += 1
    return out


# --------------------------------------------------------------------------
# reduction

def apply_reduction(g: Graph, conf: Configuration) -> tuple[Graph, ReductionStep]:
    """Shrink the graph according to the configuration's kind.

    Raises StaleConfigurationError when the graph no longer matches the
    configuration.  The result always has strictly fewer edges.
    """
    if not validate_configuration(g, conf):
        raise StaleConfigurationError(
            f"{conf.kind} configuration {conf.roles()} does not match the"
            f" current graph")
    r = conf.roles()
    removed_v: tuple[int, ...] = ()
    removed_e: tuple[tuple[int, int], ...] = ()
    contracted = identified = None
    fresh = None

    def incident(vs) -> tuple[tuple[int, int], ...]:
        vset = set(vs)
        out = {tuple(sorted((a, b))) for a in vset for b in g.neighbors(a)}
        return tuple(sorted(out))

    if conf.kind == KIND_L1A:
        removed_v = (r["v1"],)
        removed_e = incident(removed_v)
        reduced = g.delete_vertex(r["v1"])
    elif conf.kind in (KIND_L1B, KIND_L2):
        removed_e = (tuple(sorted((r["v1"], r["v2"]))),)
        reduced = g.delete_edge(r["v1"], r["v2"])
    elif conf.kind == KIND_L3:
        removed_v = tuple(sorted((r["v2"], r["v3"])))
        removed_e = incident(removed_v)
        reduced = g.delete_vertices(removed_v)
    elif conf.kind == KIND_L4:
        contracted = (r["v1"], r["v3"])
        reduced, fresh = g.contract_edge(r["v1"], r["v3"])
    elif conf.kind == KIND_L5:
        removed_v = tuple(sorted((r["v1"], r["v2"], r["v3"])))
        removed_e = incident(removed_v)
        reduced = g.delete_vertices(removed_v)
    elif conf.kind == KIND_L6:
        removed_v = (r["v3"],)
        removed_e = incident(removed_v)
        reduced = g.delete_vertex(r["v3"])
    elif conf.kind == KIND_L7:
        contracted = (r["v1"], r["v2"])
        reduced, fresh = g.contract_edge(r["v1"], r["v2"])
    elif conf.kind == KIND_L8:
        removed_v = tuple(sorted((r["v1"], r["v2"])))
        removed_e = incident(removed_v)
        reduced = g.delete_vertices(removed_v)
    elif conf.kind in (KIND_L9, KIND_L10):
        cycle = _conf_cycle(conf)
        removed_v = tuple(sorted(cycle))
        removed_e = incident(removed_v)
        reduced = g.delete_vertices(removed_v)
        if conf.kind == KIND_L10 and r["w1"] != r["w3"]:
            identified = (r["w1"], r["w3"])
            reduced, fresh = reduced.identify_vertices(r["w1"], r["w3"])
    else:
        raise ReductionError(f"unknown kind {conf.kind}")

    if reduced.m >= g.m:
        raise ReductionError(
            f"{conf.kind} reduction failed to decrease the edge count")
    local = tuple((v, tuple(sorted(g.neighbors(v))))
                  for v in sorted(set(conf.vertices())))
    step = ReductionStep(
        kind=conf.kind, matched=conf.matched, boundary=conf.boundary,
        removed_vertices=removed_v, removed_edges=removed_e,
        contracted=contracted, identified=identified, fresh=fresh,
        local=local, reduced_vertices=tuple(sorted(reduced.vertices())))
    return reduced, step


def reduce_fully(g: Graph) -> tuple[Graph, list[tuple[Graph, ReductionStep]]]:
    """Apply reductions until none matches.  Returns the reduction-free
    core and the stack of (graph-before-step, step) pairs, applied order."""
    stack: list[tuple[Graph, ReductionStep]] = []
    cur = g
    while True:
        conf = detect_configuration(cur)
        if conf is None:
            return cur, stack
        nxt, step = apply_reduction(cur, conf)
        stack.append((cur, step))
        cur = nxt


def trace_of(stack: list[tuple[Graph, ReductionStep]]) -> ReductionTrace:
    return ReductionTrace(steps=tuple(s for _, s in stack))


# --------------------------------------------------------------------------
# the shared dependency-instance builder for simultaneous recoloring

def _dependency_instance(g: Graph, coloring: Coloring,
                         group: frozenset[int],
                         order: ColorOrder) -> tuple[Graph, Lists]:
    """Dependency graph and allowed-color lists for recoloring ``group``.

    Every member must have degree three and end up seeing three distinct
    neighbor colors; outside vertices touching the group must keep enough
    sight.  Two members two apart around a common member must differ
    (dependency edge); a member next to a colored vertex through a common
    member must avoid that color (list restriction).  Outsiders touching
    the group in one, two, or three-plus places get, respectively, an
    avoid-set, a designated color plus a distinctness edge, or a triangle
    of distinctness edges among three touching members.
    """
    dep_edges: set[tuple[int, int]] = set()
    restrict: dict[int, set[int]] = {s: set() for s in group}
    for s in sorted(group):
        if g.degree(s) != 3:
            raise LiftError(f"group member {s} does not have degree 3",
                            stage="dependency-instance")
        for x, y in itertools.combinations(sorted(g.neighbors(s)), 2):
            xin, yin = x in group, y in group
            if xin and yin:
                dep_edges.add((min(x, y), max(x, y)))
            elif xin:
                cy = coloring.get(y)
                if cy is None:
                    raise LiftError(f"uncolored outside vertex {y} next to"
                                    f" {s}", stage="dependency-instance")
                restrict[x].add(cy)
            elif yin:
                cx = coloring.get(x)
                if cx is None:
                    raise LiftError(f"uncolored outside vertex {x} next to"
                                    f" {s}", stage="dependency-instance")
                restrict[y].add(cx)
            else:
                if coloring.get(x) == coloring.get(y):
                    raise LiftError(
                        f"outside neighbors {x},{y} of {s} share a color,"
                        f" so {s} cannot see three", stage="dependency-instance")
    outsiders = sorted({z for s in group for z in g.neighbors(s)} - group)
    for z in outsiders:
        touching = sorted(set(g.neighbors(z)) & group)
        t = len(touching)
        if t >= 3:
            for a, b in itertools.combinations(touching[:3], 2):
                dep_edges.add((a, b))
            continue
        f = _satisfy_through(g, coloring, z, pending=group, incoming=t,
                             color_order=order)
        for s in touching:
            restrict[s] |= f
        if t == 2:
            dep_edges.add((touching[0], touching[1]))
    dep = Graph.from_edges(sorted(dep_edges), vertices=sorted(group))
    lists: Lists = {s: set(PALETTE) - restrict[s] for s in group}
    for s in sorted(group):
        if len(lists[s]) < max(1, dep.degree(s)):
            raise LiftError(
                f"allowed colors {sorted(lists[s])} at {s} fall below its"
                f" dependency degree {dep.degree(s)}",
                stage="dependency-instance")
    return dep, lists


def _free_hub_hook(g: Graph, coloring: Coloring, cycle: tuple[int, ...],
                   order: ColorOrder,
                   recolor_log: list[tuple[int, int, int]]):
    """Perturbation hook: recolor a free hub (degree-3 outside companion
    with two colored neighbors) next to the stuck positions, then rebuild
    the whole instance.  Mutates ``coloring`` in place on success."""
    k = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    cset = frozenset(cycle)
    hubs = _cycle_hubs(g, cycle)
    attempted: set[tuple[int, int]] = set()

    def hook(stuck: frozenset[int]) -> Lists | None:
        if hubs is None:
            return None
        stuck_pos = sorted(pos[v] for v in stuck if v in pos)
        target_pos = sorted({(p + d) % k for p in stuck_pos for d in (-1, 1)})
        cands: list[tuple[int, int]] = []
        seen: set[int] = set()
        for p in target_pos:
            h = hubs[p]
            if h in seen:
                continue
            seen.add(h)
            if g.degree(h) == 3 and len(set(g.neighbors(h)) - cset) == 2:
                cands.append((p, h))
        for _, h in cands:
            outside = sorted(set(g.neighbors(h)) - cset)
            avoid = {coloring[h]}
            for x in outside:
                avoid |= _satisfy_through(g, coloring, x,
                                          pending=cset | {h},
                                          color_order=order)
            for gamma in _palette_in(order):
                if gamma in avoid or (h, gamma) in attempted:
                    continue
                attempted.add((h, gamma))
                old = coloring[h]
                coloring[h] = gamma
                try:
                    _, lists = _dependency_instance(g, coloring, cset, order)
                except LiftError:
                    coloring[h] = old
                    continue
                recolor_log.append((h, old, gamma))
                return lists
        return None

    return hook


def _recolor_group(g: Graph, coloring: Coloring, cycle: tuple[int, ...],
                   order: ColorOrder, use_hook: bool,
                   stats: dict | None, kind: str) -> None:
    cset = frozenset(cycle)
    dep, lists = _dependency_instance(g, coloring, cset, order)
    recolor_log: list[tuple[int, int, int]] = []
    hook = (_free_hub_hook(g, coloring, cycle, order, recolor_log)
            if use_hook else None)
    try:
        part = color_dependency_graph(dep, lists, hook, order)
    except DependencyColoringError as e:
        raise LiftError(f"{kind}: dependency coloring failed: {e}",
                        stage="dependency-coloring") from e
    coloring.update(part)
    if recolor_log:
        _hit(stats, f"{kind}:hub-recolor")


# --------------------------------------------------------------------------
# lifts

def _lift_l1a(g, step, c, order, stats):
    r = step.roles()
    _assign(g, c, r["v1"], protect=(r["u1"],), pending={r["v1"]},
            order=order, bound=2, stage=f"{step.kind} v1")
    _hit(stats, f"{step.kind}:base")


def _lift_l1b(g, step, c, order, stats):
    r = step.roles()
    v1, v2, u1 = r["v1"], r["v2"], r["u1"]
    _assign(g, c, v1, protect=(v2, u1), pending={v1, v2}, order=order,
            bound=4, stage=f"{step.kind} v1")
    others = sorted(g.neighbors(v2) - {v1})
    _assign(g, c, v2, protect=tuple([v1] + others), pending={v2},
            order=order, bound=5, stage=f"{step.kind} v2")
    _hit(stats, f"{step.kind}:base")


def _lift_l2(g, step, c, order, stats):
    _hit(stats, f"{step.kind}:base")


def _lift_l3(g, step, c, order, stats):
    r = step.roles()
    v1, v2, v3, v4, v5, v6 = (r["v1"], r["v2"], r["v3"], r["v4"], r["v5"],
                              r["v6"])
    _assign(g, c, v5, explicit=(c[v1],),
            protect=tuple(sorted(g.neighbors(v5) - {v2})),
            pending={v2, v3, v6, v5}, order=order, bound=5,
            stage=f"{step.kind} v5")
    _assign(g, c, v6, explicit=(c[v4],),
            protect=tuple(sorted(g.neighbors(v6) - {v3})),
            pending={v2, v3, v6}, order=order, bound=5,
            stage=f"{step.kind} v6")
    _assign(g, c, v2, explicit=(c[v4], c[v6]), protect=(v5, v1),
            pending={v2, v3}, order=order, bound=4, stage=f"{step.kind} v2")
    _assign(g, c, v3, explicit=(c[v1], c[v5]), protect=(v6, v4, v2),
            pending={v3}, order=order, bound=4, stage=f"{step.kind} v3")
    _hit(stats, f"{step.kind}:base")


def _lift_l4(g, step, c, order, stats):
    r = step.roles()
    v1, v2, v3, v4 = r["v1"], r["v2"], r["v3"], r["v4"]
    c.pop(step.fresh, None)
    if c[v2] == c[v4]:
        raise LiftError(f"shared neighbors {v2},{v4} carry one color in the"
                        f" reduced coloring", stage=f"{step.kind} pullback")
    if g.degree(v2) >= 4 and g.degree(v4) >= 4:
        _assign(g, c, v1, explicit=(c[v2], c[v4]), protect=(v2,),
                pending={v1, v3}, order=order, bound=4,
                stage=f"{step.kind} v1")
        _assign(g, c, v3, explicit=(c[v2], c[v4]), protect=(v4,),
                pending={v3}, order=order, bound=4, stage=f"{step.kind} v3")
        _hit(stats, f"{step.kind}:both-4plus")
        return
    low = sorted(x for x in (v2, v4) if g.degree(x) == 3)
    a2 = low[0]
    a4 = v4 if a2 == v2 else v2
    _assign(g, c, v3, explicit=(c[a2], c[a4]), protect=(a2, a4),
            pending={v1, v3}, order=order, bound=5, stage=f"{step.kind} v3")
    _assign(g, c, v1, explicit=(c[a2], c[a4]), protect=(a2, a4),
            pending={v1}, order=order, bound=5, stage=f"{step.kind} v1")
    _hit(stats, f"{step.kind}:low-side")


def _lift_l5(g, step, c, order, stats):
    r = step.roles()
    corners = [r["v1"], r["v2"], r["v3"]]
    hub_of = {r["v1"]: r["w1"], r["v2"]: r["w2"], r["v3"]: r["w3"]}
    rich = sorted(v for v in corners if g.degree(hub_of[v]) >= 4)
    if rich:
        a1 = rich[0]
        a2, a3 = sorted(v for v in corners if v != a1)
        h1, h2, h3 = hub_of[a1], hub_of[a2], hub_of[a3]
        _assign(g, c, a2, explicit=(c[h1], c[h3]), protect=(h2,),
                pending={a1, a2, a3}, order=order, bound=4,
                stage=f"{step.kind} second-corner")
        _assign(g, c, a3, explicit=(c[a2], c[h1], c[h2]), protect=(h3,),
                pending={a1, a3}, order=order, bound=5,
                stage=f"{step.kind} third-corner")
        _assign(g, c, a1, explicit=(c[a2], c[a3], c[h2], c[h3]),
                protect=(h1,), pending={a1}, order=order, bound=4,
                stage=f"{step.kind} rich-corner")
        _hit(stats, f"{step.kind}:rich-hub")
        return
    group = tuple(corners + [hub_of[v] for v in corners])
    _recolor_group(g, c, group, order, use_hook=False, stats=stats,
                   kind=step.kind)
    _hit(stats, f"{step.kind}:all-3-hubs")


def _lift_l6(g, step, c, order, stats):
    r = step.roles()
    v1, v2, v3, v4, v5, v6 = (r["v1"], r["v2"], r["v3"], r["v4"], r["v5"],
                              r["v6"])
    others = sorted(g.neighbors(v1) - {v2, v3, v4})
    c5 = pick_color([c[w] for w in others], order)
    _assign(g, c, v2, explicit=(c[v1], c5), protect=(v5,),
            pending={v2, v3, v4}, order=order, bound=4,
            stage=f"{step.kind} v2")
    _assign(g, c, v3, explicit=(c[v1], c[v2], c[v5], c[v6], c5),
            pending={v3, v4}, order=order, bound=5, stage=f"{step.kind} v3")
    _assign(g, c, v4, explicit=(c[v1], c[v2]), protect=(v6,),
            pending={v4}, order=order, bound=4, stage=f"{step.kind} v4")
    _hit(stats, f"{step.kind}:base")


def _lift_l7(g, step, c, order, stats):
    r = step.roles()
    v1, v2, v3, v4, v5 = r["v1"], r["v2"], r["v3"], r["v4"], r["v5"]
    v6, v7 = r["v6"], r["v7"]
    c.pop(step.fresh, None)
    if len({c[v3], c[v4], c[v5]}) != 3:
        raise LiftError("the merged vertex's three neighbors do not carry"
                        " three colors", stage=f"{step.kind} pullback")
    v8, v9 = sorted(g.neighbors(v4) - {v1})
    v10, v11 = sorted(g.neighbors(v5) - {v2})
    if c[v8] == c[v9] or c[v10] == c[v11] or c[v6] == c[v7]:
        raise LiftError("reduced coloring starves a companion vertex",
                        stage=f"{step.kind} pullback")
    pend = {v1, v2}
    avoid1 = ({c[v3], c[v5]}
              | _avoid_set(g, c, v1, (), (v4, v3), pend, order))
    if len(avoid1) < 6:
        c[v1] = pick_color([x for x in PALETTE if x not in avoid1], order)
        _assign(g, c, v2, explicit=(c[v3], c[v4]), protect=(v5, v1),
                pending={v2}, order=order, bound=4, stage=f"{step.kind} v2")
        _hit(stats, f"{step.kind}:first-open")
        return
    avoid2 = ({c[v3], c[v4]}
              | _avoid_set(g, c, v2, (), (v5, v3), pend, order))
    if len(avoid2) < 6:
        c[v2] = pick_color([x for x in PALETTE if x not in avoid2], order)
        _assign(g, c, v1, explicit=(c[v3], c[v5]), protect=(v4, v2),
                pending={v1}, order=order, bound=4, stage=f"{step.kind} v1")
        _hit(stats, f"{step.kind}:second-open")
        return
    # both forbidden sets exhaust the palette; the six surrounding colors
    # then split it exactly, which pins every color's role
    a1 = c[v4]
    s89 = {c[v8], c[v9]}
    if a1 not in s89:
        raise LiftError("palette split failed: the first companion's color"
                        " is missing beside its own neighbors",
                        stage=f"{step.kind} tight")
    a2 = _only(s89 - {a1})
    a3, a4, a5, a6 = c[v5], c[v3], c[v6], c[v7]
    if {a1, a2, a3, a4, a5, a6} != set(PALETTE):
        raise LiftError("palette split failed: surrounding colors do not"
                        " cover the palette", stage=f"{step.kind} tight")
    if {c[v10], c[v11]} != {a2, a3}:
        raise LiftError("palette split failed: the second companion's"
                        " neighbors carry unexpected colors",
                        stage=f"{step.kind} tight")
    _assign(g, c, v4, explicit=(a1,), protect=(v8, v9), pending={v1, v2, v4},
            order=order, bound=5, stage=f"{step.kind} recolor-v4")
    if c[v4] != a4:
        c[v2] = a1
        c[v1] = pick_color([x for x in PALETTE
                            if x not in {a1, a2, a3, a4}], order)
        _hit(stats, f"{step.kind}:tight-a")
        return
    _assign(g, c, v5, explicit=(a3,), protect=(v10, v11),
            pending={v1, v2, v5}, order=order, bound=5,
            stage=f"{step.kind} recolor-v5")
    if c[v5] != a4:
        c[v4] = a1
        c[v1] = a3
        c[v2] = pick_color([x for x in PALETTE
                            if x not in {a1, a2, a3, a4}], order)
        _hit(stats, f"{step.kind}:tight-b")
        return
    _assign(g, c, v3, explicit=(a4,), protect=(v6, v7), pending={v1, v2, v3},
            order=order, bound=5, stage=f"{step.kind} recolor-v3")
    gamma = c[v3]
    if gamma != a3:
        c[v1] = a3
        c[v2] = pick_color([x for x in (a1, a5, a6) if x != gamma], order)
        _hit(stats, f"{step.kind}:tight-c1")
    else:
        c[v1] = a5
        c[v2] = a1
        _hit(stats, f"{step.kind}:tight-c2")


def _lift_l8(g, step, c, order, stats):
    r = step.roles()
    v1, v2, v3, v4, v5 = r["v1"], r["v2"], r["v3"], r["v4"], r["v5"]
    _assign(g, c, v4, explicit=(c[v3],),
            protect=tuple(sorted(g.neighbors(v4) - {v1})),
            pending={v1, v2, v5, v4}, order=order, bound=5,
            stage=f"{step.kind} v4")
    _assign(g, c, v5, explicit=(c[v3],),
            protect=tuple(sorted(g.neighbors(v5) - {v2})),
            pending={v1, v2, v5}, order=order, bound=5,
            stage=f"{step.kind} v5")
    _assign(g, c, v1,
            explicit=tuple([c[v3], c[v5]]
                           + [c[x] for x in sorted(g.neighbors(v4) - {v1})]),
            pending={v1, v2}, order=order, bound=4, stage=f"{step.kind} v1")
    _assign(g, c, v2,
            explicit=tuple([c[v3], c[v4]]
                           + [c[x] for x in sorted(g.neighbors(v5) - {v2})]),
            pending={v2}, order=order, bound=4, stage=f"{step.kind} v2")
    _hit(stats, f"{step.kind}:base")


def _lift_l9(g, step, c, order, stats):
    cycle = tuple(_conf_cycle_step(step))
    _recolor_group(g, c, cycle, order, use_hook=True, stats=stats,
                   kind=step.kind)
    _hit(stats, f"{step.kind}:base")


def _lift_l10(g, step, c, order, stats):
    r = step.roles()
    cycle = tuple(_conf_cycle_step(step))
    cset = frozenset(cycle)
    w1, w3 = r["w1"], r["w3"]
    if step.fresh is not None:
        cz = c.pop(step.fresh)
        c[w1] = cz
        c[w3] = cz
    # repair pass: forcing one color onto both identified companions can
    # leave a nearby outside vertex too few distinct colors even after the
    # cycle is freshly colored (its colored neighborhood collapsed).  While
    # some outside vertex u has fewer distinct colored-neighbor colors than
    # min(deg,3) minus its cycle contacts, recolor one of its repeated-color
    # neighbors away from u's palette, protecting that neighbor's other
    # neighbors.  Each recolor strictly grows u's palette, so this ends.
    watch = {z for v in cycle for z in g.neighbors(v)}
    watch |= set(g.neighbors(w1)) | set(g.neighbors(w3))
    for u in sorted(watch - cset):
        for _ in range(len(PALETTE)):
            out_nbrs = sorted(g.neighbors(u) - cset)
            fixed_cols = {c[x] for x in out_nbrs}
            contact = len(g.neighbors(u) & cset)
            if len(fixed_cols) + contact >= min(g.degree(u), 3):
                break
            dup = sorted(x for x in out_nbrs
                         if sum(1 for y in out_nbrs if c[y] == c[x]) >= 2)
            ranked = sorted(dup, key=lambda x: (x in (w1, w3),
                                                g.degree(x) >= 4, x))
            repaired = False
            for x in ranked:
                avoid = set(fixed_cols)
                for y in sorted(g.neighbors(x) - cset - {u}):
                    avoid |= _satisfy_through(g, c, y, pending=cset | {x},
                                              color_order=order)
                cands = [col for col in PALETTE if col not in avoid]
                if not cands:
                    continue
                c[x] = pick_color(cands, order)
                repaired = True
                _hit(stats, f"{step.kind}:repair")
                break
            if not repaired:
                raise LiftError(
                    f"outside vertex {u} cannot reach enough distinct"
                    f" neighbor colors and no neighbor is recolorable",
                    stage=f"{step.kind} repair")
    _recolor_group(g, c, cycle, order, use_hook=True, stats=stats,
                   kind=step.kind)
    _hit(stats, f"{step.kind}:base")


def _conf_cycle_step(step: ReductionStep) -> list[int]:
    out = []
    i = 1
    r = step.roles()
    while f"v{i}" in r:
        out.append(r[f"v{i}"])
        i += 1
    return out


_LIFTERS = {
    KIND_L1A: _lift_l1a, KIND_L1B: _lift_l1b, KIND_L2: _lift_l2,
    KIND_L3: _lift_l3, KIND_L4: _lift_l4, KIND_L5: _lift_l5,
    KIND_L6: _lift_l6, KIND_L7: _lift_l7, KIND_L8: _lift_l8,
    KIND_L9: _lift_l9, KIND_L10: _lift_l10,
}


def lift_coloring(g: Graph, step: ReductionStep, c_reduced: Coloring,
                  stats: dict | None = None) -> Coloring:
    """Extend a valid coloring of the reduced graph to the original graph.

    ``g`` is the graph the step was applied to.  The output is always
    re-verified; a failed lift raises LiftError carrying the local state,
    never returning a degraded coloring.
    """
    for v, nbrs in step.local:
        if not g.has_vertex(v) or g.neighbors(v) != frozenset(nbrs):
            raise StaleConfigurationError(
                f"graph changed at {v} since the {step.kind} step was taken")
    expected = set(step.reduced_vertices)
    if set(c_reduced) != expected:
        raise LiftError(
            f"reduced coloring covers {len(c_reduced)} vertices, expected"
            f" {len(expected)}", kind=step.kind, matched=step.matched)
    order = _color_order_from(c_reduced)
    c = dict(c_reduced)
    try:
        _LIFTERS[step.kind](g, step, c, order, stats)
    except LiftError as e:
        raise LiftError(f"{step.kind} lift failed: {e}", kind=step.kind,
                        matched=step.matched, stage=e.stage,
                        coloring=c) from e
    if set(c) != set(g.vertices()):
        raise LiftError("lift left the wrong vertex set colored",
                        kind=step.kind, matched=step.matched, coloring=c)
    if any(col not in PALETTE for col in c.values()):
        raise LiftError("lift used a color outside the palette",
                        kind=step.kind, matched=step.matched, coloring=c)
    ok, violations = is_weak_dynamic(g, c, 3)
    if not ok:
        raise LiftError(
            f"lifted coloring fails verification: {violations[:3]}",
            kind=step.kind, matched=step.matched, coloring=c)
    return c


# --------------------------------------------------------------------------
# canonical enumeration and certification

def canonical_colorings(g: Graph, k: int = 3,
                        palette: tuple[int, ...] = PALETTE
                        ) -> Iterator[Coloring]:
    """All valid k-weak-dynamic colorings of g over the palette, one per
    palette-permutation class (colors appear in first-use order over
    ascending vertex ids).  Prunes branches whose remaining uncolored
    neighbors cannot satisfy some vertex."""
    vs = sorted(g.vertices())
    n = len(vs)
    pos = {v: i for i, v in enumerate(vs)}
    assignment: Coloring = {}

    def feasible(u: int, i: int) -> bool:
        need = min(g.degree(u), k)
        seen = set()
        future = 0
        for w in g.neighbors(u):
            if pos[w] <= i:
                seen.add(assignment[w])
            else:
                future += 1
        return len(seen) + future >= need

    def rec(i: int, used: int) -> Iterator[Coloring]:
        if i == n:
            yield dict(assignment)
            return
        v = vs[i]
        for ci in range(min(used + 1, len(palette))):
            assignment[v] = palette[ci]
            if all(feasible(u, i) for u in sorted(g.neighbors(v))):
                yield from rec(i + 1, max(used, ci + 1))
        del assignment[v]

    yield from rec(0, 0)


@dataclass
class CertificateReport:
    """Outcome of certifying one reduction kind over generated hosts."""

    kind: str
    hosts_requested: int
    hosts_checked: int = 0
    embed_failures: list[str] = field(default_factory=list)
    colorings_checked: int = 0
    lifts_succeeded: int = 0
    lift_failures: list[str] = field(default_factory=list)
    case_hits: dict[str, int] = field(default_factory=dict)
    equivariance_checks: int = 0
    equivariance_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.hosts_checked > 0 and not self.lift_failures
                and not self.equivariance_failures
                and self.lifts_succeeded == self.colorings_checked)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "hosts_requested": self.hosts_requested,
            "hosts_checked": self.hosts_checked,
            "embed_failures": list(self.embed_failures),
            "colorings_checked": self.colorings_checked,
            "lifts_succeeded": self.lifts_succeeded,
            "lift_failures": list(self.lift_failures),
            "case_hits": dict(sorted(self.case_hits.items())),
            "equivariance_checks": self.equivariance_checks,
            "equivariance_failures": list(self.equivariance_failures),
            "ok": self.ok,
        }


def _permute_coloring(c: Coloring, perm: dict[int, int]) -> Coloring:
    return {v: perm[col] for v, col in c.items()}


def _color_classes(c: Coloring) -> set[frozenset[int]]:
    """The partition of vertices into color classes, names forgotten."""
    groups: dict[int, set[int]] = {}
    for v, col in c.items():
        groups.setdefault(col, set()).add(v)
    return {frozenset(s) for s in groups.values()}


def certify_lemma(kind: str,
                  host_generator: Callable[[str, int], Graph | None] | None = None,
                  budget: int = 20) -> CertificateReport:
    """Certify one reduction kind: on ``budget`` generated hosts, enumerate
    every valid coloring of the reduced graph (one per palette-permutation
    class; lifting is permutation-equivariant up to color names, which is
    also spot-checked here) and confirm each lifts to a verified coloring
    of the host.

    ``kind`` is a short label L1..L10 (L1 covers both of its sub-kinds) or
    a full kind string.  ``host_generator(full_kind, index)`` returns a host
    graph or None.  Hosts must be planar and must contain the intended
    pattern (found by a scan restricted to that kind — other reducible
    patterns may coexist elsewhere in the host); a None, a nonplanar host,
    or a host without the pattern is reported as an embed failure, never
    raised.
    """
    short = kind
    if kind in KIND_ORDER:
        short = next(s for s, ks in SHORT_KINDS.items() if kind in ks)
    if short not in SHORT_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    targets = SHORT_KINDS[short]
    if host_generator is None:
        from .hosts import host_for as host_generator
    report = CertificateReport(kind=short, hosts_requested=budget)
    rng = random.Random(0xC0 + sum(map(ord, short)))
    per_kind_index = {t: 0 for t in targets}
    for i in range(budget):
        want = targets[i % len(targets)]
        idx = per_kind_index[want]
        per_kind_index[want] += 1
        g = host_generator(want, idx)
        if g is None:
            report.embed_failures.append(
                f"{want}#{idx}: generator produced no host")
            continue
        if not is_planar(g).is_planar:
            report.embed_failures.append(
                f"{want}#{idx}: host is not planar")
            continue
        conf = detect_configuration(g, kind=want)
        if conf is None:
            report.embed_failures.append(
                f"{want}#{idx}: host does not contain the pattern")
            continue
        reduced, step = apply_reduction(g, conf)
        count_before = report.colorings_checked
        for c in canonical_colorings(reduced):
            report.colorings_checked += 1
            try:
                lifted = lift_coloring(g, step, c, stats=report.case_hits)
            except LiftError as e:
                if len(report.lift_failures) < 8:
                    report.lift_failures.append(
                        f"{want}#{idx} coloring {c}: {e}")
                continue
            report.lifts_succeeded += 1
            if (report.colorings_checked - count_before) % 37 == 1:
                perm_vals = list(PALETTE)
                rng.shuffle(perm_vals)
                perm = dict(zip(PALETTE, perm_vals))
                report.equivariance_checks += 1
                try:
                    other = lift_coloring(g, step, _permute_coloring(c, perm))
                except LiftError as e:
                    report.equivariance_failures.append(
                        f"{want}#{idx}: permuted input failed to lift: {e}")
                    continue
                if _color_classes(other) != _color_classes(lifted):
                    report.equivariance_failures.append(
                        f"{want}#{idx}: renaming the input palette changed"
                        f" the lifted color classes on {c}")
        report.hosts_checked += 1
    return report
