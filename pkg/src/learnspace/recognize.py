"""Recognition of st-planar learning spaces and the permutation census."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .arrangement import from_permutation, inverse, region_states
from .family import SetFamily, Universe, canonical_key, validate_family

BRUTE_FORCE_MAX = 8
CENSUS_MAX = 6


@dataclass(frozen=True)
class ImplicationPoset:
    """``leq[e, f]`` holds when every state containing f also contains e."""

    universe: Universe
    leq: np.ndarray

    def less(self, e: int, f: int) -> bool:
        return e != f and bool(self.leq[e, f])

    def comparable(self, e: int, f: int) -> bool:
        return bool(self.leq[e, f] or self.leq[f, e])

    def is_linear_extension(self, order: Sequence[int]) -> bool:
        pos = {e: i for i, e in enumerate(order)}
        n = len(self.universe)
        return all(pos[e] < pos[f] for e in range(n) for f in range(n) if self.less(e, f))


@dataclass(frozen=True)
class BoundaryOrders:
    """Element labels along the right (``x_order``) and left (``y_order``)
    exterior paths, bottom to top."""

    x_order: tuple[str, ...]
    y_order: tuple[str, ...]

    def permutation(self) -> tuple[int, ...]:
        yrank = {e: i for i, e in enumerate(self.y_order)}
        return tuple(yrank[e] for e in self.x_order)

    def arrangement(self):
        return from_permutation(self.x_order, self.permutation())


def _require_learning_space(F: SetFamily) -> None:
    report = validate_family(F)
    if not report.ok:
        raise ValueError("not a learning space:\n" + report.format(F.universe))


def _requirements(F: SetFamily) -> list[int]:
    """For each element f, the intersection of all states containing f."""
    n = F.n
    need = [-1] * n
    for s in F.states:
        for f in range(n):
            if s >> f & 1:
                need[f] &= s
    return need


def implication_poset(F: SetFamily) -> ImplicationPoset:
    _require_learning_space(F)
    n = F.n
    need = _requirements(F)
    leq = np.zeros((n, n), dtype=bool)
    for f in range(n):
        for e in range(n):
            leq[e, f] = bool(need[f] >> e & 1)
    leq.setflags(write=False)
    return ImplicationPoset(F.universe, leq)


def _forced_y_order(poset: ImplicationPoset, lx: Sequence[int]) -> Optional[list[int]]:
    """Left-path order implied by a right-path order, or None if inconsistent.

    e precedes f when e <= f, or when they are incomparable and f precedes e
    on the right path.
    """
    n = len(lx)
    xpos = {e: i for i, e in enumerate(lx)}

    def before(e, f):
        if poset.comparable(e, f):
            return poset.less(e, f)
        return xpos[f] < xpos[e]

    rank = [sum(1 for f in range(n) if f != e and before(f, e)) for e in range(n)]
    if sorted(rank) != list(range(n)):
        return None
    ly = [0] * n
    for e, r in enumerate(rank):
        ly[r] = e
    for i in range(n):
        for j in range(i + 1, n):
            if not before(ly[i], ly[j]):
                return None
    return ly


def _induced_states(lx: Sequence[int], ly: Sequence[int]) -> set[int]:
    n = len(lx)
    xr = [0] * n
    yr = [0] * n
    for i, e in enumerate(lx):
        xr[e] = i
    for i, e in enumerate(ly):
        yr[e] = i
    return set(region_states(xr, yr))


def _orders(F: SetFamily, lx, ly) -> BoundaryOrders:
    names = F.universe.elements
    return BoundaryOrders(tuple(names[e] for e in lx), tuple(names[e] for e in ly))


def _check_support(F: SetFamily) -> None:
    if F.union != F.universe.full:
        unused = F.universe.names(F.universe.full & ~F.union)
        raise ValueError(f"elements never used by any state: {', '.join(unused)}")


def recognize(F: SetFamily) -> Optional[BoundaryOrders]:
    """Find boundary orders whose quadrant arrangement reproduces ``F``.

    Depth-first search over right-path orders that extend the implication
    poset and whose every prefix is a state. Each complete order forces the
    left-path order; the candidate is accepted only if the induced region
    family equals ``F``. The lexicographically smallest accepted right-path
    order is returned; ``None`` means ``F`` is not st-planar.

    Exponential in the worst case.
    """
    _require_learning_space(F)
    _check_support(F)
    n = F.n
    if n == 0:
        return BoundaryOrders((), ())
    poset = implication_poset(F)
    need = _requirements(F)
    members = F.members
    target = set(F.states)

    lx: list[int] = []

    def search(placed: int) -> Optional[list[int]]:
        if len(lx) == n:
            ly = _forced_y_order(poset, lx)
            if ly is not None and _induced_states(lx, ly) == target:
                return ly
            return None
        for e in range(n):
            if placed >> e & 1:
                continue
            if need[e] & ~placed & ~(1 << e):
                continue
            nxt = placed | 1 << e
            if nxt not in members:
                continue
            lx.append(e)
            found = search(nxt)
            if found is not None:
                return found
            lx.pop()
        return None

    ly = search(0)
    if ly is None:
        return None
    return _orders(F, lx, ly)


@lru_cache(maxsize=None)
def _families_by_permutation(n: int) -> dict[frozenset, tuple[int, ...]]:
    """Region family of every canonical arrangement, keyed by its state set.

    Bit ``i`` stands for the element of x-rank ``i``.
    """
    table = {}
    identity = list(range(n))
    for pi in itertools.permutations(range(n)):
        key = frozenset(region_states(identity, pi))
        table.setdefault(key, pi)
    return table


def brute_force_recognize(F: SetFamily) -> Optional[BoundaryOrders]:
    """Exhaustive oracle: try every right-path order against every arrangement.

    For each ordering of the elements (lexicographic), the family is
    relabeled so that the i-th element becomes bit i and looked up among the
    region families of all n! canonical arrangements.
    """
    _require_learning_space(F)
    n = F.n
    if n > BRUTE_FORCE_MAX:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_MAX} elements, got {n}")
    if n == 0:
        return BoundaryOrders((), ()) if F.states == (0,) else None
    table = _families_by_permutation(n)
    states = F.states
    for lx in itertools.permutations(range(n)):
        pos = [0] * n
        for i, e in enumerate(lx):
            pos[e] = i
        relabeled = frozenset(sum(1 << pos[e] for e in range(n) if s >> e & 1) for s in states)
        pi = table.get(relabeled)
        if pi is not None:
            ly = [lx[j] for j in inverse(pi)]
            return _orders(F, lx, ly)
    return None


# ------------------------------------------------------------------- census


@dataclass(frozen=True)
class CensusEntry:
    permutation: tuple[int, ...]
    states: tuple[int, ...]
    labeled_key: tuple[int, ...]
    unlabeled_key: tuple[int, ...]
    inverse_matches: bool


@dataclass(frozen=True)
class CensusReport:
    n: int
    entries: tuple[CensusEntry, ...]

    @property
    def labeled_classes(self) -> int:
        return len({e.labeled_key for e in self.entries})

    @property
    def unlabeled_classes(self) -> int:
        return len({e.unlabeled_key for e in self.entries})

    @property
    def inversion_classes(self) -> int:
        return len({min(e.permutation, inverse(e.permutation)) for e in self.entries})

    @property
    def max_family_size(self) -> int:
        return max(len(e.states) for e in self.entries)

    @property
    def size_bound(self) -> int:
        return 1 + (self.n + 1) * self.n // 2

    @property
    def count_bound(self) -> int:
        return math.factorial(self.n)

    @property
    def inverse_identification(self) -> bool:
        return all(e.inverse_matches for e in self.entries)

    def family(self, pi: Sequence[int]) -> SetFamily:
        pi = tuple(pi)
        for e in self.entries:
            if e.permutation == pi:
                return SetFamily(_census_universe(self.n), e.states)
        raise KeyError(pi)

    def table(self) -> str:
        header = ("n", "labeled", "unlabeled", "max_size", "size_bound", "count_bound")
        row = (
            self.n,
            self.labeled_classes,
            self.unlabeled_classes,
            self.max_family_size,
            self.size_bound,
            self.count_bound,
        )
        widths = [max(len(h), len(str(v))) for h, v in zip(header, row)]
        lines = [
            "  ".join(h.rjust(w) for h, w in zip(header, widths)),
            "  ".join(str(v).rjust(w) for v, w in zip(row, widths)),
        ]
        return "\n".join(lines) + "\n"


def _census_universe(n: int) -> Universe:
    return Universe(tuple(f"e{i}" for i in range(n)))


def census_entry(pi: tuple[int, ...]) -> CensusEntry:
    """Everything the census needs about one permutation; independent per call.

    Elements are named by x-rank. ``labeled_key`` is the smaller of the family
    labeled along the right path and the same family labeled along the left
    path; the latter must coincide with the x-rank labeling of the inverse
    permutation's family.
    """
    n = len(pi)
    identity = list(range(n))
    states = tuple(sorted(region_states(identity, pi), key=lambda s: (bin(s).count("1"), s)))
    # relabel element of x-rank i by its y-rank pi[i]
    by_y = tuple(sorted(sum(1 << pi[i] for i in range(n) if s >> i & 1) for s in states))
    inv_states = tuple(sorted(region_states(identity, inverse(pi))))
    by_x = tuple(sorted(states))
    unlabeled = canonical_key(SetFamily(_census_universe(n), states))
    return CensusEntry(
        permutation=tuple(pi),
        states=states,
        labeled_key=min(by_x, by_y),
        unlabeled_key=unlabeled,
        inverse_matches=by_y == inv_states,
    )


def census(n: int, max_workers: int | None = None) -> CensusReport:
    if n < 0 or n > CENSUS_MAX:
        raise ValueError(f"census supports 0 <= n <= {CENSUS_MAX}, got {n}")
    perms = list(itertools.permutations(range(n)))
    if max_workers and max_workers > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            entries = list(pool.map(census_entry, perms, chunksize=32))
    else:
        entries = [census_entry(p) for p in perms]
    return CensusReport(n, tuple(entries))
