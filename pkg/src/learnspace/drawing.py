"""Upright-quad grid drawings: construction, validation and compaction."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .family import LearningGraph, SetFamily, ValidationReport, Violation
from .faces import FaceWalk, Point, edges_conflict, cross, on_segment, trace_faces
from .recognize import BoundaryOrders


@dataclass(frozen=True)
class GridDrawing:
    """Integer grid coordinates for each vertex (keyed by state bitmask)."""

    coords: Mapping[int, Point]

    def __post_init__(self):
        object.__setattr__(
            self, "coords", {int(v): (int(x), int(y)) for v, (x, y) in self.coords.items()}
        )

    def span(self) -> tuple[int, int]:
        if not self.coords:
            return (0, 0)
        xs = [c[0] for c in self.coords.values()]
        ys = [c[1] for c in self.coords.values()]
        return (max(xs) - min(xs), max(ys) - min(ys))

    def __hash__(self):
        return hash(tuple(sorted(self.coords.items())))


def assign_coordinates(F: SetFamily, orders: BoundaryOrders) -> GridDrawing:
    """Place v at (first right-path index missing from v, same for the left path).

    The top state goes to (n, n).
    """
    u = F.universe
    n = len(u)
    for name, order in (("x_order", orders.x_order), ("y_order", orders.y_order)):
        if sorted(order) != sorted(u.elements):
            raise ValueError(f"{name} is not an ordering of the universe")
    lx = [u.index[e] for e in orders.x_order]
    ly = [u.index[e] for e in orders.y_order]
    for name, order in (("x_order", lx), ("y_order", ly)):
        prefix = 0
        for e in order:
            prefix |= 1 << e
            if prefix not in F.members:
                raise ValueError(f"{name} prefix {u.format(prefix)} is not a state")
    top = F.union
    coords = {}
    for v in F.states:
        if v == top:
            coords[v] = (n, n)
            continue
        x = next(i for i, e in enumerate(lx) if not v >> e & 1)
        y = next(i for i, e in enumerate(ly) if not v >> e & 1)
        coords[v] = (x, y)
    return GridDrawing(coords)


# --------------------------------------------------------------- validation


def _orient(coords, a, b):
    """Return the edge as (low, high) by componentwise order, or None."""
    pa, pb = coords[a], coords[b]
    if pa[0] <= pb[0] and pa[1] <= pb[1]:
        return (a, b)
    if pb[0] <= pa[0] and pb[1] <= pa[1]:
        return (b, a)
    return None


def _u1_violations(coords, G: LearningGraph, first_only=False) -> list[Violation]:
    out = []
    seen = {}
    for v in G.vertices:
        p = coords[v]
        if p in seen:
            out.append(Violation("U1", (seen[p], v), (), f"both at {p}"))
            if first_only:
                return out
        else:
            seen[p] = v
    edges = [(a, b) for a, b, _ in G.edges]
    segs = []
    for a, b in edges:
        pa, pb = coords[a], coords[b]
        segs.append((pa, pb, min(pa[0], pb[0]), max(pa[0], pb[0]), min(pa[1], pb[1]), max(pa[1], pb[1])))
    for i in range(len(edges)):
        pa, pb, x0, x1, y0, y1 = segs[i]
        for j in range(i + 1, len(edges)):
            qa, qb, u0, u1, w0, w1 = segs[j]
            if u0 > x1 or u1 < x0 or w0 > y1 or w1 < y0:
                continue
            if edges_conflict(pa, pb, qa, qb):
                out.append(Violation("U1", edges[i] + edges[j], (), "edges cross or overlap"))
                if first_only:
                    return out
    for a, b in edges:
        pa, pb = coords[a], coords[b]
        for v in G.vertices:
            if v == a or v == b:
                continue
            p = coords[v]
            if p != pa and p != pb and cross(pa, pb, p) == 0 and on_segment(p, pa, pb):
                out.append(Violation("U1", (a, b, v), (), "vertex lies on edge"))
                if first_only:
                    return out
    return out


def _u3_violations(faces: list[FaceWalk], first_only=False) -> list[Violation]:
    out = []
    for f in faces:
        if f.kind == "interior" and not f.is_quad:
            out.append(Violation("U3", tuple(dict.fromkeys(f.vertices)), (), "face is not an upright quadrilateral"))
            if first_only:
                break
    return out


def _orientation_and_u2(coords, G: LearningGraph, first_only=False):
    out = []
    oriented = []
    for a, b, _ in G.edges:
        e = _orient(coords, a, b)
        if e is None:
            out.append(Violation("ORIENT", (a, b), (), "edge is not monotone"))
            if first_only:
                return out, oriented
        else:
            oriented.append(e)
    if out:
        return out, oriented
    indeg = {v: 0 for v in G.vertices}
    outdeg = {v: 0 for v in G.vertices}
    for a, b in oriented:
        outdeg[a] += 1
        indeg[b] += 1
    sources = tuple(v for v in G.vertices if indeg[v] == 0)
    sinks = tuple(v for v in G.vertices if outdeg[v] == 0)
    if len(sources) != 1:
        out.append(Violation("U2", sources, (), f"{len(sources)} minimal vertices"))
    if len(sinks) != 1:
        out.append(Violation("U2", sinks, (), f"{len(sinks)} maximal vertices"))
    return out, oriented


def _coverage(coords, G: LearningGraph) -> list[Violation]:
    missing = tuple(v for v in G.vertices if v not in coords)
    extra = tuple(v for v in coords if v not in G.vertex_set)
    out = []
    if missing:
        out.append(Violation("U1", missing, (), "vertices without coordinates"))
    if extra:
        out.append(Violation("U1", extra, (), "coordinates for unknown vertices"))
    return out


def extract_faces(D: GridDrawing, G: LearningGraph) -> list[FaceWalk]:
    """Faces of the drawing via its rotation system. Raises if U1 fails."""
    bad = _coverage(D.coords, G) or _u1_violations(D.coords, G, first_only=True)
    if bad:
        v = bad[0]
        raise ValueError(f"drawing is not plane: {v.detail} (witness {v.states})")
    return trace_faces(D.coords, G.neighbors)


def validate_upright_quad(D: GridDrawing, G: LearningGraph) -> ValidationReport:
    coords = D.coords
    cov = _coverage(coords, G)
    if cov:
        return ValidationReport(tuple(cov))
    out = _u1_violations(coords, G)
    orient, _ = _orientation_and_u2(coords, G)
    out += orient
    if not any(v.axiom == "U1" for v in out):
        try:
            faces = trace_faces(coords, G.neighbors)
        except ValueError as exc:
            out.append(Violation("U3", (), (), str(exc)))
        else:
            out += _u3_violations(faces)
    return ValidationReport(tuple(out))


def _reachability(G: LearningGraph, oriented) -> dict[int, set[int]]:
    succ = {v: [] for v in G.vertices}
    for a, b in oriented:
        succ[a].append(b)
    reach = {}
    for v in G.vertices:
        seen = {v}
        queue = deque([v])
        while queue:
            a = queue.popleft()
            for b in succ[a]:
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        reach[v] = seen
    return reach


def _dominance_violations(coords, G: LearningGraph, first_only=False) -> list[Violation]:
    out, oriented = _orientation_and_u2(coords, G, first_only)
    out = [v for v in out if v.axiom == "ORIENT"]
    if out:
        return out
    reach = _reachability(G, oriented)
    for u in G.vertices:
        pu = coords[u]
        for v in G.vertices:
            if u == v:
                continue
            pv = coords[v]
            dom = pu[0] <= pv[0] and pu[1] <= pv[1]
            if dom != (v in reach[u]):
                what = "dominates but unreachable" if dom else "reachable but not dominated"
                out.append(Violation("DOM", (u, v), (), what))
                if first_only:
                    return out
    return out


def check_dominance(D: GridDrawing, G: LearningGraph) -> ValidationReport:
    """Dominance in the plane must coincide with reachability along edges."""
    cov = _coverage(D.coords, G)
    if cov:
        return ValidationReport(tuple(cov))
    return ValidationReport(tuple(_dominance_violations(D.coords, G)))


def _acceptable(coords, G: LearningGraph) -> bool:
    if _u1_violations(coords, G, first_only=True):
        return False
    bad, _ = _orientation_and_u2(coords, G, first_only=True)
    if bad:
        return False
    if _u3_violations(trace_faces(coords, G.neighbors), first_only=True):
        return False
    return not _dominance_violations(coords, G, first_only=True)


# --------------------------------------------------------------- compaction


def _rank_normalize(coords):
    xs = {x: i for i, x in enumerate(sorted({c[0] for c in coords.values()}))}
    ys = {y: i for i, y in enumerate(sorted({c[1] for c in coords.values()}))}
    return {v: (xs[x], ys[y]) for v, (x, y) in coords.items()}


def _merge(coords, axis, lo, hi):
    shift = hi - lo
    out = {}
    for v, c in coords.items():
        if c[axis] >= hi:
            c = (c[0] - shift, c[1]) if axis == 0 else (c[0], c[1] - shift)
        out[v] = c
    return out


def compact(D: GridDrawing, G: LearningGraph) -> GridDrawing:
    """Greedily merge neighbouring occupied columns, then rows, to a fixpoint.

    Each tentative merge is kept only if the result is still an upright-quad
    drawing whose dominance order matches reachability. No claim of minimum
    area.
    """
    report = validate_upright_quad(D, G) + check_dominance(D, G)
    if not report.ok:
        raise ValueError("compact needs a valid drawing:\n" + report.format())
    coords = dict(D.coords)
    ranked = _rank_normalize(coords)
    if ranked != coords and _acceptable(ranked, G):
        coords = ranked
    changed = True
    while changed:
        changed = False
        for axis in (0, 1):
            k = 0
            while True:
                values = sorted({c[axis] for c in coords.values()})
                if k >= len(values) - 1:
                    break
                cand = _merge(coords, axis, values[k], values[k + 1])
                if _acceptable(cand, G):
                    coords = cand
                    changed = True
                else:
                    k += 1
    return GridDrawing(coords)
