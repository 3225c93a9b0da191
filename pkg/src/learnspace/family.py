"""Finite set families over a small universe, and the learning-space axioms.

States are plain ``int`` bitmasks: bit ``i`` is set when the element at
position ``i`` of the universe belongs to the state.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

MAX_ELEMENTS = 64

StateSet = int


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def state_key(mask: int) -> tuple[int, int]:
    """Canonical sort key for states: by size, then by bitmask value."""
    return (popcount(mask), mask)


def bits(mask: int) -> list[int]:
    """Element indices present in ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Universe:
    """An ordered list of distinct element names."""

    elements: tuple[str, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if len(elements) > MAX_ELEMENTS:
            raise ValueError(
                f"universe has {len(elements)} elements; at most {MAX_ELEMENTS} supported"
            )
        seen = set()
        for name in elements:
            if not isinstance(name, str) or not name:
                raise ValueError(f"element names must be nonempty strings, got {name!r}")
            if name in seen:
                raise ValueError(f"duplicate element name {name!r}")
            seen.add(name)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            try:
                m |= 1 << self.index[name]
            except KeyError:
                raise ValueError(f"unknown element {name!r}") from None
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in bits(mask))

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.names(mask)) + "}"


@dataclass(frozen=True)
class SetFamily:
    """A deduplicated family of states, kept in canonical (size, mask) order."""

    universe: Universe
    states: tuple[int, ...]

    def __post_init__(self):
        full = self.universe.full
        states = set()
        for s in self.states:
            s = int(s)
            if s < 0 or s & ~full:
                raise ValueError(f"state {s:#x} uses bits outside the universe")
            states.add(s)
        object.__setattr__(self, "states", tuple(sorted(states, key=state_key)))

    @classmethod
    def from_names(cls, universe: Sequence[str] | Universe, states: Iterable[Iterable[str]]):
        if not isinstance(universe, Universe):
            universe = Universe(tuple(universe))
        return cls(universe, tuple(universe.mask(s) for s in states))

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.states)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    @property
    def n(self) -> int:
        return len(self.universe)

    @cached_property
    def union(self) -> int:
        u = 0
        for s in self.states:
            u |= s
        return u

    def as_names(self) -> list[tuple[str, ...]]:
        return [self.universe.names(s) for s in self.states]

    def relabel(self, universe: Universe) -> "SetFamily":
        """The same family of named sets, re-expressed over ``universe``."""
        if set(universe.elements) != set(self.universe.elements):
            raise ValueError("relabel requires the same element names")
        return SetFamily.from_names(universe, self.as_names())

    def __str__(self) -> str:
        return "{" + ", ".join(self.universe.format(s) for s in self.states) + "}"


# ---------------------------------------------------------------- constructors


def power_set(names: Sequence[str]) -> SetFamily:
    u = Universe(tuple(names))
    return SetFamily(u, tuple(range(1 << len(u))))


def chain_family(names: Sequence[str]) -> SetFamily:
    """The nested family of all prefixes of ``names``."""
    u = Universe(tuple(names))
    return SetFamily(u, tuple((1 << k) - 1 for k in range(len(u) + 1)))


def prefix_suffix_family(names: Sequence[str]) -> SetFamily:
    """Unions of a prefix and a suffix of the ordered universe ``names``."""
    u = Universe(tuple(names))
    n = len(u)
    full = u.full
    prefixes = [(1 << i) - 1 for i in range(n + 1)]
    suffixes = [full & ~((1 << (n - j)) - 1) for j in range(n + 1)]
    return SetFamily(u, tuple(p | s for p in prefixes for s in suffixes))


# ------------------------------------------------------------------ reporting


@dataclass(frozen=True)
class Violation:
    """One failed check.

    ``states`` and ``elements`` are the witnesses (bitmasks and element
    indices respectively); their meaning depends on ``axiom``.
    """

    axiom: str
    states: tuple[int, ...] = ()
    elements: tuple[int, ...] = ()
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def __add__(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(self.violations + other.violations)

    def format(self, universe: Universe | None = None) -> str:
        if self.ok:
            return "ok"
        lines = []
        for v in self.violations:
            parts = [v.axiom]
            if v.states:
                if universe is not None:
                    parts.append(" ".join(universe.format(s) for s in v.states))
                else:
                    parts.append(" ".join(f"{s:#x}" for s in v.states))
            if v.elements:
                if universe is not None:
                    parts.append("elements " + ",".join(universe.elements[e] for e in v.elements))
                else:
                    parts.append("elements " + ",".join(map(str, v.elements)))
            if v.detail:
                parts.append(v.detail)
            lines.append(": ".join(parts))
        return "\n".join(lines)


# ------------------------------------------------------------------- axioms


def validate_family(F: SetFamily) -> ValidationReport:
    """Check axioms L1 (accessibility) and L2 (no interference).

    A missing empty set is reported as an L1 violation with no witness.
    """
    members = F.members
    out = []
    if 0 not in members:
        out.append(Violation("L1", (), (), "empty set missing"))
    for s in F.states:
        if s and not any((s & ~(1 << x)) in members for x in bits(s)):
            out.append(Violation("L1", (s,), (), "no removable element"))
    for s in F.states:
        ext = [x for x in range(F.n) if not s >> x & 1 and (s | 1 << x) in members]
        for i, x in enumerate(ext):
            for y in ext[i + 1:]:
                if (s | 1 << x | 1 << y) not in members:
                    out.append(Violation("L2", (s,), (x, y)))
    return ValidationReport(tuple(out))


def check_union_closed(F: SetFamily) -> ValidationReport:
    members = F.members
    states = F.states
    out = []
    for i, s in enumerate(states):
        for t in states[i + 1:]:
            if (s | t) not in members:
                out.append(Violation("UNION", (s, t)))
    return ValidationReport(tuple(out))


def _hamming_bfs(F: SetFamily, start: int) -> dict[int, int]:
    members = F.members
    dist = {start: 0}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for x in range(F.n):
            t = s ^ (1 << x)
            if t in members and t not in dist:
                dist[t] = dist[s] + 1
                queue.append(t)
    return dist


def check_well_graded(F: SetFamily) -> ValidationReport:
    """Every pair of states must be joined by |S ^ T| single-element steps.

    A walk of exactly that length cannot leave the interval between S & T
    and S | T, so one unrestricted BFS per source state is enough.
    """
    out = []
    states = F.states
    for i, s in enumerate(states):
        dist = _hamming_bfs(F, s)
        for t in states[i + 1:]:
            want = popcount(s ^ t)
            got = dist.get(t)
            if got != want:
                detail = f"distance {got} != {want}" if got is not None else "disconnected"
                out.append(Violation("WG", (s, t), (), detail))
    return ValidationReport(tuple(out))


def verify_accessibility_extension(F: SetFamily) -> ValidationReport:
    """If K < L, K + q in F and q not in L, then L + q must be in F."""
    members = F.members
    states = F.states
    out = []
    for k in states:
        grow = [q for q in range(F.n) if not k >> q & 1 and (k | 1 << q) in members]
        if not grow:
            continue
        for l in states:
            if l == k or k & ~l:
                continue
            for q in grow:
                if not l >> q & 1 and (l | 1 << q) not in members:
                    out.append(Violation("ACCESS-EXT", (k, l), (q,)))
    return ValidationReport(tuple(out))


def chain_between(F: SetFamily, K: int, L: int) -> list[int]:
    """A maximal chain of states from K up to L, adding one element per step.

    At each step the smallest admissible element index is taken.
    """
    if K not in F.members or L not in F.members:
        raise ValueError("both endpoints must belong to the family")
    if K & ~L:
        raise ValueError("K is not a subset of L")
    chain = [K]
    cur = K
    while cur != L:
        for x in bits(L & ~cur):
            if (cur | 1 << x) in F.members:
                cur |= 1 << x
                break
        else:
            raise ValueError(
                f"no single-element extension of {F.universe.format(cur)} inside the family"
            )
        chain.append(cur)
    return chain


# ------------------------------------------------------------------- graph


@dataclass(frozen=True)
class LearningGraph:
    """The DAG of single-element extensions.

    Vertices are state bitmasks; each edge is ``(S, S | 1 << label, label)``.
    """

    universe: Universe
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    source: int
    sink: int

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def neighbors(self) -> dict[int, list[int]]:
        adj = {v: [] for v in self.vertices}
        for a, b, _ in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    @cached_property
    def edge_label(self) -> dict[frozenset, int]:
        return {frozenset((a, b)): x for a, b, x in self.edges}

    @property
    def family(self) -> SetFamily:
        return SetFamily(self.universe, self.vertices)


def graph_of_states(universe: Universe, states: Sequence[int]) -> LearningGraph:
    """Single-element-extension graph of ``states`` without axiom checks."""
    members = set(states)
    edges = []
    for s in states:
        for x in range(len(universe)):
            if not s >> x & 1 and (s | 1 << x) in members:
                edges.append((s, s | 1 << x, x))
    top = 0
    for s in states:
        top |= s
    return LearningGraph(universe, tuple(states), tuple(edges), 0, top)


def build_graph(F: SetFamily) -> LearningGraph:
    report = validate_family(F)
    if not report.ok:
        raise ValueError("not a learning space:\n" + report.format(F.universe))
    return graph_of_states(F.universe, F.states)


# ------------------------------------------------------------- isomorphism


def canonical_key(F: SetFamily) -> tuple[int, ...]:
    """Lexicographically least sorted state tuple over all element relabelings.

    Factorial in ``F.n``; intended for n <= 7 or so.
    """
    import itertools

    import numpy as np

    n = F.n
    if n == 0:
        return tuple(F.states)
    incidence = np.array([[s >> i & 1 for i in range(n)] for s in F.states], dtype=np.int64)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    # element i goes to position perm[i]
    weights = np.left_shift(1, perms)
    masks = incidence @ weights.T  # (|F|, n!)
    masks = np.sort(masks.T, axis=1)
    best = masks[np.lexsort(masks.T[::-1])[0]]
    return tuple(int(v) for v in best)


def families_isomorphic(F: SetFamily, G: SetFamily) -> bool:
    """True when some bijection of elements maps F onto G."""
    if F.n != G.n or len(F) != len(G):
        return False
    if sorted(map(popcount, F.states)) != sorted(map(popcount, G.states)):
        return False
    return canonical_key(F) == canonical_key(G)
