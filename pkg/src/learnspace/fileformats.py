"""Plain-text file formats: a versioned header line followed by a JSON body.

Readers raise :class:`FormatError` carrying a 1-based line and column.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any

from .arrangement import QuadrantArrangement, from_permutation
from .drawing import GridDrawing
from .family import LearningGraph, SetFamily, Universe, graph_of_states, state_key

FAMILY_HEADER = "learnspace-family 1"
ARRANGEMENT_HEADER = "learnspace-arrangement 1"
DRAWING_HEADER = "learnspace-drawing 1"
GRAPH_HEADER = "learnspace-graph 1"


class FormatError(ValueError):
    def __init__(self, message: str, line: int = 1, col: int = 1, source: str = "<input>"):
        self.message = message
        self.line = line
        self.col = col
        self.source = source
        super().__init__(f"{source}:{line}:{col}: {message}")


# ------------------------------------------------------------------ parsing

_TOKEN = re.compile(
    r'"(?:[^"\\]|\\.)*"|-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?|true|false|null|[\[{]'
)


@dataclass
class Node:
    value: Any  # list[Node], list[tuple[str, Node, Node]] for objects, or a scalar
    kind: str  # "list", "object" or "scalar"
    line: int
    col: int


def _locate(text: str, first_line: int) -> list[tuple[int, int]]:
    starts = [0]
    for m in re.finditer("\n", text):
        starts.append(m.end())
    out = []
    li = 0
    for m in _TOKEN.finditer(text):
        while li + 1 < len(starts) and starts[li + 1] <= m.start():
            li += 1
        out.append((li + first_line, m.start() - starts[li] + 1))
    return out


def _attach(value, positions, cursor):
    """Pair each parsed value with its token position, in document order."""
    line, col = positions[cursor[0]]
    cursor[0] += 1
    if isinstance(value, _PairList):
        pairs = []
        for p in value:
            key = _attach(p.key, positions, cursor)
            pairs.append((p.key, key, _attach(p.value, positions, cursor)))
        return Node(pairs, "object", line, col)
    if isinstance(value, list):
        return Node([_attach(v, positions, cursor) for v in value], "list", line, col)
    return Node(value, "scalar", line, col)


class _Pair:
    __slots__ = ("key", "value")

    def __init__(self, key, value):
        self.key = key
        self.value = value


class _PairList(list):
    pass


def _pairs_hook(pairs):
    return _PairList(_Pair(k, v) for k, v in pairs)


def parse_document(text: str, header: str, source: str = "<input>") -> Node:
    lines = text.split("\n", 1)
    if lines[0].strip() != header:
        raise FormatError(f"expected header line {header!r}", 1, 1, source)
    body = lines[1] if len(lines) > 1 else ""
    try:
        value = json.loads(body, object_pairs_hook=_pairs_hook)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno + 1, exc.colno, source) from None
    return _attach(value, _locate(body, 2), [0])


def _fail(node: Node, message: str, source: str):
    raise FormatError(message, node.line, node.col, source)


def _fields(node: Node, source: str, required: tuple[str, ...], optional: tuple[str, ...] = ()):
    if node.kind != "object":
        _fail(node, "expected an object", source)
    out = {}
    for key, knode, vnode in node.value:
        if key not in required and key not in optional:
            _fail(knode, f"unexpected key {key!r}", source)
        if key in out:
            _fail(knode, f"duplicate key {key!r}", source)
        out[key] = vnode
    for key in required:
        if key not in out:
            _fail(node, f"missing key {key!r}", source)
    return out


def _list(node: Node, source: str, what: str) -> list[Node]:
    if node.kind != "list":
        _fail(node, f"{what} must be an array", source)
    return node.value


def _string(node: Node, source: str, what: str) -> str:
    if node.kind != "scalar" or not isinstance(node.value, str):
        _fail(node, f"{what} must be a string", source)
    return node.value


def _int(node: Node, source: str, what: str) -> int:
    if node.kind != "scalar" or isinstance(node.value, bool) or not isinstance(node.value, int):
        _fail(node, f"{what} must be an integer", source)
    return node.value


def _universe(node: Node, source: str) -> Universe:
    names = []
    seen = set()
    for item in _list(node, source, "universe"):
        name = _string(item, source, "element name")
        if not name:
            _fail(item, "element names must be nonempty", source)
        if name in seen:
            _fail(item, f"duplicate element {name!r}", source)
        seen.add(name)
        names.append(name)
    try:
        return Universe(tuple(names))
    except ValueError as exc:
        _fail(node, str(exc), source)


def _state(node: Node, universe: Universe, source: str) -> int:
    mask = 0
    for item in _list(node, source, "state"):
        name = _string(item, source, "element name")
        if name not in universe.index:
            _fail(item, f"unknown element {name!r}", source)
        bit = 1 << universe.index[name]
        if mask & bit:
            _fail(item, f"element {name!r} repeated within a state", source)
        mask |= bit
    return mask


# ------------------------------------------------------------------ writing


def _dumps(value) -> str:
    return json.dumps(value, ensure_ascii=False)


def _names(universe: Universe, mask: int) -> list[str]:
    return list(universe.names(mask))


# ------------------------------------------------------------------ family


def parse_family(text: str, source: str = "<input>") -> SetFamily:
    root = parse_document(text, FAMILY_HEADER, source)
    f = _fields(root, source, ("universe", "states"))
    universe = _universe(f["universe"], source)
    seen = {}
    for item in _list(f["states"], source, "states"):
        mask = _state(item, universe, source)
        if mask in seen:
            first = seen[mask]
            _fail(item, f"duplicate state (first given at line {first.line}, column {first.col})", source)
        seen[mask] = item
    return SetFamily(universe, tuple(seen))


def format_family(F: SetFamily) -> str:
    u = F.universe
    lines = [FAMILY_HEADER, "{", f'  "universe": {_dumps(list(u.elements))},', '  "states": [']
    rows = [f"    {_dumps(_names(u, s))}" for s in F.states]
    lines.append(",\n".join(rows))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------- arrangement


def parse_arrangement(text: str, source: str = "<input>") -> QuadrantArrangement:
    """Either ``universe`` + ``permutation`` or ``universe`` + ``corners``."""
    root = parse_document(text, ARRANGEMENT_HEADER, source)
    f = _fields(root, source, ("universe",), ("permutation", "corners"))
    universe = _universe(f["universe"], source)
    n = len(universe)
    if ("permutation" in f) == ("corners" in f):
        _fail(root, "give exactly one of 'permutation' or 'corners'", source)
    if "permutation" in f:
        items = _list(f["permutation"], source, "permutation")
        pi = [_int(v, source, "permutation entry") for v in items]
        if len(pi) != n:
            _fail(f["permutation"], f"permutation has {len(pi)} entries for {n} elements", source)
        seen = set()
        for node, v in zip(items, pi):
            if not 0 <= v < n or v in seen:
                _fail(node, f"entry {v} breaks the permutation of 0..{n - 1}", source)
            seen.add(v)
        return from_permutation(universe.elements, pi)
    items = _list(f["corners"], source, "corners")
    if len(items) != n:
        _fail(f["corners"], f"{len(items)} corners for {n} elements", source)
    corners = []
    xs, ys = {}, {}
    for node in items:
        pair = _list(node, source, "corner")
        if len(pair) != 2:
            _fail(node, "a corner is a pair [x, y]", source)
        x, y = _int(pair[0], source, "x"), _int(pair[1], source, "y")
        if x in xs:
            _fail(pair[0], f"x coordinate {x} repeated", source)
        if y in ys:
            _fail(pair[1], f"y coordinate {y} repeated", source)
        xs[x] = ys[y] = node
        corners.append((x, y))
    return QuadrantArrangement(universe, tuple(corners)).canonical()


def format_arrangement(A: QuadrantArrangement) -> str:
    A = A.canonical()
    lines = [
        ARRANGEMENT_HEADER,
        "{",
        f'  "universe": {_dumps(list(A.universe.elements))},',
        f'  "permutation": {_dumps(list(A.permutation))}',
        "}",
    ]
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------- drawing


def parse_drawing(text: str, source: str = "<input>") -> tuple[GridDrawing, LearningGraph]:
    root = parse_document(text, DRAWING_HEADER, source)
    f = _fields(root, source, ("universe", "vertices", "edges"))
    universe = _universe(f["universe"], source)
    states = []
    coords = {}
    taken = {}
    for node in _list(f["vertices"], source, "vertices"):
        v = _fields(node, source, ("state", "x", "y"))
        mask = _state(v["state"], universe, source)
        if mask in coords:
            _fail(node, "duplicate state", source)
        x, y = _int(v["x"], source, "x"), _int(v["y"], source, "y")
        if (x, y) in taken:
            _fail(v["x"], f"position ({x}, {y}) already used", source)
        taken[(x, y)] = mask
        states.append(mask)
        coords[mask] = (x, y)
    graph = graph_of_states(universe, sorted(states, key=state_key))
    expected = {(a, b): x for a, b, x in graph.edges}
    listed = set()
    for node in _list(f["edges"], source, "edges"):
        e = _fields(node, source, ("from", "to", "label"))
        i, j = _int(e["from"], source, "from"), _int(e["to"], source, "to")
        for idx, key in ((i, "from"), (j, "to")):
            if not 0 <= idx < len(states):
                _fail(e[key], f"vertex index {idx} out of range", source)
        label = _string(e["label"], source, "label")
        if label not in universe.index:
            _fail(e["label"], f"unknown element {label!r}", source)
        a, b = states[i], states[j]
        if expected.get((a, b)) != universe.index[label]:
            _fail(node, "edge is not a single-element extension with this label", source)
        if (a, b) in listed:
            _fail(node, "duplicate edge", source)
        listed.add((a, b))
    missing = set(expected) - listed
    if missing:
        a, b = min(missing, key=lambda e: (state_key(e[0]), state_key(e[1])))
        _fail(
            f["edges"],
            f"missing edge {universe.format(a)} -> {universe.format(b)}",
            source,
        )
    return GridDrawing(coords), graph


def format_drawing(D: GridDrawing, G: LearningGraph) -> str:
    u = G.universe
    order = sorted(G.vertices, key=state_key)
    index = {v: i for i, v in enumerate(order)}
    lines = [DRAWING_HEADER, "{", f'  "universe": {_dumps(list(u.elements))},', '  "vertices": [']
    rows = []
    for v in order:
        x, y = D.coords[v]
        rows.append(f'    {{"state": {_dumps(_names(u, v))}, "x": {x}, "y": {y}}}')
    lines.append(",\n".join(rows))
    lines += ["  ],", '  "edges": [']
    rows = []
    for a, b, x in sorted(G.edges, key=lambda e: (index[e[0]], index[e[1]])):
        rows.append(f'    {{"from": {index[a]}, "to": {index[b]}, "label": {_dumps(u.elements[x])}}}')
    lines.append(",\n".join(rows))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def format_graph(G: LearningGraph) -> str:
    u = G.universe
    lines = [
        GRAPH_HEADER,
        f"vertices {len(G.vertices)}",
        f"edges {len(G.edges)}",
        f"source {u.format(G.source)}",
        f"sink {u.format(G.sink)}",
    ]
    for v in G.vertices:
        lines.append(f"v {u.format(v)}")
    for a, b, x in G.edges:
        lines.append(f"e {u.format(a)} {u.format(b)} {u.elements[x]}")
    return "\n".join(lines) + "\n"
