"""Arrangements of translated negative quadrants and their region families."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .family import LearningGraph, SetFamily, Universe, build_graph


def check_permutation(pi: Sequence[int]) -> tuple[int, ...]:
    pi = tuple(int(v) for v in pi)
    if sorted(pi) != list(range(len(pi))):
        raise ValueError(f"not a permutation of 0..{len(pi) - 1}: {list(pi)}")
    return pi


def inverse(pi: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(pi)
    for i, p in enumerate(pi):
        inv[p] = i
    return tuple(inv)


def inversions(pi: Sequence[int]) -> int:
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


def _ranks(values: Sequence[int]) -> tuple[int, ...]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    r = [0] * len(values)
    for k, i in enumerate(order):
        r[i] = k
    return tuple(r)


@dataclass(frozen=True)
class QuadrantArrangement:
    """Quadrants ``{(x, y) : x <= x_e, y <= y_e}``, one per element.

    ``corners[i]`` is the apex for ``universe.elements[i]``. Corner x's must
    be pairwise distinct, and so must the y's.
    """

    universe: Universe
    corners: tuple[tuple[int, int], ...]

    def __post_init__(self):
        corners = tuple((int(x), int(y)) for x, y in self.corners)
        object.__setattr__(self, "corners", corners)
        if len(corners) != len(self.universe):
            raise ValueError("need exactly one corner per element")
        xs = [c[0] for c in corners]
        ys = [c[1] for c in corners]
        if len(set(xs)) != len(xs):
            raise ValueError("corner x coordinates must be pairwise distinct")
        if len(set(ys)) != len(ys):
            raise ValueError("corner y coordinates must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.universe)

    @cached_property
    def x_ranks(self) -> tuple[int, ...]:
        return _ranks([c[0] for c in self.corners])

    @cached_property
    def y_ranks(self) -> tuple[int, ...]:
        return _ranks([c[1] for c in self.corners])

    @property
    def x_order(self) -> tuple[str, ...]:
        out = [""] * self.n
        for i, r in enumerate(self.x_ranks):
            out[r] = self.universe.elements[i]
        return tuple(out)

    @property
    def y_order(self) -> tuple[str, ...]:
        out = [""] * self.n
        for i, r in enumerate(self.y_ranks):
            out[r] = self.universe.elements[i]
        return tuple(out)

    @property
    def permutation(self) -> tuple[int, ...]:
        """``pi[i]`` is the y-rank of the element with x-rank ``i``."""
        pi = [0] * self.n
        for xr, yr in zip(self.x_ranks, self.y_ranks):
            pi[xr] = yr
        return tuple(pi)

    def canonical(self) -> "QuadrantArrangement":
        """Equivalent arrangement with elements in x-order and rank corners."""
        return from_permutation(self.x_order, self.permutation)

    def is_canonical(self) -> bool:
        return all(c == (i, p) for i, (c, p) in enumerate(zip(self.corners, self.permutation)))


def from_permutation(names: Sequence[str], pi: Sequence[int]) -> QuadrantArrangement:
    pi = check_permutation(pi)
    if len(names) != len(pi):
        raise ValueError(f"{len(names)} names but permutation of length {len(pi)}")
    return QuadrantArrangement(Universe(tuple(names)), tuple((i, p) for i, p in enumerate(pi)))


def region_states(x_ranks: Sequence[int], y_ranks: Sequence[int], resolution: int = 1) -> list[int]:
    """Distinct non-containing wedge sets over a grid of sample points.

    Element ``i`` has its corner at ``(x_ranks[i], y_ranks[i])`` and sets bit
    ``i``. Samples sit at ``c + (k + 1/2)/resolution`` for every integer
    ``c`` in ``-1..n-1`` and ``k`` in ``0..resolution-1``; everything is scaled
    by ``2 * resolution`` so the comparisons stay in integers.
    """
    n = len(x_ranks)
    if n == 0:
        return [0]
    scale = 2 * resolution
    xs = np.asarray(x_ranks, dtype=np.int64) * scale
    ys = np.asarray(y_ranks, dtype=np.int64) * scale
    samples = np.arange(-scale + 1, scale * n, 2, dtype=np.int64)
    weights = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    # outside[e, p]: wedge e misses sample coordinate p along that axis
    out_x = xs[:, None] < samples[None, :]
    out_y = ys[:, None] < samples[None, :]
    miss = out_x[:, :, None] | out_y[:, None, :]
    masks = np.tensordot(weights, miss.astype(np.uint64), axes=(0, 0))
    return sorted({int(m) for m in np.unique(masks)})


def region_family(A: QuadrantArrangement, resolution: int = 1) -> SetFamily:
    """States are the sets of wedges that miss a region entirely."""
    return SetFamily(A.universe, tuple(region_states(A.x_ranks, A.y_ranks, resolution)))


def region_graph(A: QuadrantArrangement) -> LearningGraph:
    return build_graph(region_family(A))


def count_regions(A: QuadrantArrangement) -> int:
    return 1 + A.n + inversions(A.permutation)


def reflect(A: QuadrantArrangement) -> QuadrantArrangement:
    """Mirror across the diagonal ``x = y``; maps each quadrant to a quadrant."""
    return QuadrantArrangement(A.universe, tuple((y, x) for x, y in A.corners))
