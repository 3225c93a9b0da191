"""Zones of upright-quad drawings and conversion back to quadrant arrangements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arrangement import QuadrantArrangement, from_permutation
from .drawing import GridDrawing, extract_faces
from .faces import FaceWalk
from .family import LearningGraph

Edge = frozenset


@dataclass(frozen=True)
class Zone:
    """Faces chained across opposite quadrilateral sides, with their edges.

    ``faces`` runs from the face on the left exterior path to the one on
    the right exterior path. ``left_index``/``right_index`` give the
    position (0 = bottom) of the zone's exterior edge along each path.
    """

    edges: tuple[tuple[int, int], ...]
    faces: tuple[FaceWalk, ...]
    left_edge: Optional[tuple[int, int]]
    right_edge: Optional[tuple[int, int]]
    left_index: Optional[int]
    right_index: Optional[int]
    label: Optional[int]

    @property
    def is_bridge(self) -> bool:
        return not self.faces


class _DisjointSets:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def exterior_paths(D: GridDrawing, G: LearningGraph, faces=None) -> tuple[list[int], list[int]]:
    """Left and right boundary paths from the bottom vertex to the top vertex."""
    if faces is None:
        faces = extract_faces(D, G)
    outer = next(f for f in faces if f.kind == "outer")
    coords = D.coords
    walk = list(outer.vertices)
    bottom = min(G.vertices, key=lambda v: (coords[v][0] + coords[v][1], coords[v]))
    top = max(G.vertices, key=lambda v: (coords[v][0] + coords[v][1], coords[v]))
    if len(walk) == 1:
        return walk, walk
    if walk.count(bottom) != 1 or walk.count(top) != 1:
        raise ValueError("bottom and top vertices must each appear once on the outer face")
    i = walk.index(bottom)
    walk = walk[i:] + walk[:i]
    j = walk.index(top)
    # outer walk is clockwise: up the left side, back down the right side
    return walk[: j + 1], [bottom] + walk[j:][::-1]


def extract_zones(D: GridDrawing, G: LearningGraph) -> list[Zone]:
    """Equivalence classes of edges under the opposite-side relation.

    Bridges form singleton zones. Zones come back sorted by where they meet
    the right exterior path.
    """
    faces = extract_faces(D, G)
    interior = [f for f in faces if f.kind == "interior"]
    for f in interior:
        if not f.is_quad:
            raise ValueError(f"interior face {f.vertices} is not an upright quadrilateral")
    edge_of = {Edge((a, b)): (a, b) for a, b, _ in G.edges}
    sets = _DisjointSets(edge_of)
    faces_on = {e: [] for e in edge_of}
    for k, f in enumerate(interior):
        sets.union(f.side("bottom"), f.side("top"))
        sets.union(f.side("left"), f.side("right"))
        for side in ("bottom", "left", "top", "right"):
            faces_on[f.side(side)].append(k)

    left, right = exterior_paths(D, G, faces)
    left_pos = {Edge((left[i], left[i + 1])): i for i in range(len(left) - 1)}
    right_pos = {Edge((right[i], right[i + 1])): i for i in range(len(right) - 1)}

    classes: dict = {}
    for e in edge_of:
        classes.setdefault(sets.find(e), []).append(e)

    zones = []
    for members in classes.values():
        lefts = [e for e in members if e in left_pos]
        rights = [e for e in members if e in right_pos]
        if len(lefts) != 1 or len(rights) != 1:
            raise ValueError(
                f"zone with edges {sorted(edge_of[e] for e in members)} does not cross "
                "from the left exterior path to the right one"
            )
        start = lefts[0]
        chain = []
        used = set()
        cur = start
        while True:
            nxt_faces = [k for k in faces_on[cur] if k not in used]
            if not nxt_faces:
                break
            if len(nxt_faces) > 1:
                raise ValueError("zone branches")
            k = nxt_faces[0]
            used.add(k)
            chain.append(interior[k])
            f = interior[k]
            opposite = {
                f.side("bottom"): f.side("top"),
                f.side("top"): f.side("bottom"),
                f.side("left"): f.side("right"),
                f.side("right"): f.side("left"),
            }
            cur = opposite[cur]
        if cur != rights[0] or len(chain) + 1 != len(members):
            raise ValueError("zone faces do not form a single sequence")
        labels = {G.edge_label[e] for e in members}
        zones.append(
            Zone(
                edges=tuple(sorted(edge_of[e] for e in members)),
                faces=tuple(chain),
                left_edge=edge_of[start],
                right_edge=edge_of[rights[0]],
                left_index=left_pos[start],
                right_index=right_pos[rights[0]],
                label=labels.pop() if len(labels) == 1 else None,
            )
        )
    zones.sort(key=lambda z: z.right_index)
    return zones


def drawing_to_arrangement(D: GridDrawing, G: LearningGraph) -> QuadrantArrangement:
    """Canonical quadrant arrangement: x-order from the right path, y-order from the left."""
    zones = extract_zones(D, G)
    names = []
    for z in zones:
        if z.label is None:
            raise ValueError(f"zone {z.edges} carries mixed edge labels")
        names.append(G.universe.elements[z.label])
    yrank = {id(z): r for r, z in enumerate(sorted(zones, key=lambda z: z.left_index))}
    return from_permutation(names, [yrank[id(z)] for z in zones])
