"""Exact integer predicates and face traversal for straight-line drawings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Mapping, Optional

Point = tuple[int, int]


def cross(o: Point, a: Point, b: Point) -> int:
    """Twice the signed area of triangle o, a, b (positive when ccw)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies on the closed segment ab (collinearity assumed checked by caller)."""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segments_meet(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Closed segments ab and cd share at least one point."""
    d1 = _sign(cross(c, d, a))
    d2 = _sign(cross(c, d, b))
    d3 = _sign(cross(a, b, c))
    d4 = _sign(cross(a, b, d))
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == 0 and on_segment(a, c, d):
        return True
    if d2 == 0 and on_segment(b, c, d):
        return True
    if d3 == 0 and on_segment(c, a, b):
        return True
    if d4 == 0 and on_segment(d, a, b):
        return True
    return False


def edges_conflict(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Whether two drawn edges touch anywhere other than a shared endpoint."""
    shared = {a, b} & {c, d}
    if not shared:
        return segments_meet(a, b, c, d)
    if len(shared) == 2:
        return True  # parallel edges
    (p,) = shared
    u = b if a == p else a
    w = d if c == p else c
    # sharing p, they overlap only if collinear and pointing the same way
    if cross(p, u, w) != 0:
        return False
    return (u[0] - p[0]) * (w[0] - p[0]) + (u[1] - p[1]) * (w[1] - p[1]) > 0


def _half(dx: int, dy: int) -> int:
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def _angle_cmp(a: Point, b: Point) -> int:
    ha, hb = _half(*a), _half(*b)
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return -_sign(c)


def ccw_neighbors(coords: Mapping[int, Point], adjacency: Mapping[int, list[int]]) -> dict[int, list[int]]:
    """Neighbors of each vertex sorted counterclockwise from the +x direction."""
    out = {}
    for v, nbrs in adjacency.items():
        px, py = coords[v]
        key = cmp_to_key(lambda u, w: _angle_cmp((coords[u][0] - px, coords[u][1] - py),
                                                 (coords[w][0] - px, coords[w][1] - py)))
        out[v] = sorted(nbrs, key=key)
    return out


@dataclass(frozen=True)
class FaceWalk:
    """A closed boundary walk, traversed with the face on its left.

    Interior faces run counterclockwise; the outer face runs clockwise.
    For upright quadrilaterals ``bottom``, ``left``, ``right`` and ``top``
    name the minimal vertex, its vertical neighbour, its horizontal
    neighbour, and the maximal vertex.
    """

    vertices: tuple[int, ...]
    kind: str
    area2: int
    bottom: Optional[int] = None
    left: Optional[int] = None
    right: Optional[int] = None
    top: Optional[int] = None

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        if len(vs) < 2:
            return ()
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    @property
    def is_quad(self) -> bool:
        return self.bottom is not None

    def side(self, name: str) -> frozenset:
        """Undirected edge for one side: bottom, left, top or right."""
        pairs = {
            "bottom": (self.bottom, self.right),
            "left": (self.bottom, self.left),
            "top": (self.left, self.top),
            "right": (self.right, self.top),
        }
        return frozenset(pairs[name])


def quad_roles(vertices: tuple[int, ...], coords: Mapping[int, Point]) -> Optional[tuple[int, int, int, int]]:
    """(bottom, left, right, top) if the ccw walk is an upright quadrilateral."""
    if len(vertices) != 4 or len(set(vertices)) != 4:
        return None
    pts = [coords[v] for v in vertices]
    for i in range(4):
        b = pts[i]
        r, t, l = pts[(i + 1) % 4], pts[(i + 2) % 4], pts[(i + 3) % 4]
        # x0 = x1 < x2 <= x3 and y0 = y2 < y1 <= y3, visited b, r, t, l
        if not (b[0] == l[0] < r[0] <= t[0] and b[1] == r[1] < l[1] <= t[1]):
            continue
        if all(cross(pts[j], pts[(j + 1) % 4], pts[(j + 2) % 4]) > 0 for j in range(4)):
            return vertices[i], vertices[(i + 3) % 4], vertices[(i + 1) % 4], vertices[(i + 2) % 4]
    return None


def trace_faces(coords: Mapping[int, Point], adjacency: Mapping[int, list[int]]) -> list[FaceWalk]:
    """Walk every face of a plane straight-line drawing (planarity assumed)."""
    if not any(adjacency.values()):
        return [FaceWalk(tuple(adjacency), "outer", 0)]
    rot = ccw_neighbors(coords, adjacency)
    pos = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rot.items()}
    seen = set()
    walks = []
    for u in rot:
        for v in rot[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                nbrs = rot[b]
                w = nbrs[pos[b][a] - 1]
                a, b = b, w
            area = 0
            for i, p in enumerate(walk):
                q = walk[(i + 1) % len(walk)]
                area += coords[p][0] * coords[q][1] - coords[q][0] * coords[p][1]
            walks.append((walk, area))
    outer = [i for i, (_, area) in enumerate(walks) if area <= 0]
    if len(outer) != 1:
        raise ValueError(f"expected one outer face, found {len(outer)}; is the graph connected?")
    faces = []
    for i, (walk, area) in enumerate(walks):
        if i == outer[0]:
            faces.append(FaceWalk(tuple(walk), "outer", area))
            continue
        roles = quad_roles(tuple(walk), coords)
        if roles is None:
            faces.append(FaceWalk(tuple(walk), "interior", area))
        else:
            faces.append(FaceWalk(tuple(walk), "interior", area, *roles))
    return faces
