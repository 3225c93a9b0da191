import itertools
from functools import lru_cache

import pytest

from learnspace import SetFamily, Universe, from_permutation, region_family, validate_family

NAMES = "abcdefgh"


def names(n):
    return tuple(NAMES[:n])


def all_permutations(max_n=5, min_n=1):
    for n in range(min_n, max_n + 1):
        yield from itertools.permutations(range(n))


@lru_cache(maxsize=None)
def sweep_family(pi):
    return region_family(from_permutation(names(len(pi)), pi))


@lru_cache(maxsize=None)
def all_learning_spaces(n):
    """Every family over n labeled elements that satisfies L1 and L2 (brute force)."""
    u = Universe(names(n))
    full = 1 << n
    out = []
    for code in range(1 << (full - 1)):
        states = [0] + [s for s in range(1, full) if code >> (s - 1) & 1]
        F = SetFamily(u, tuple(states))
        if validate_family(F).ok:
            out.append(F)
    return tuple(out)


def family(universe, *states):
    return SetFamily.from_names(tuple(universe), [tuple(s) for s in states])


@pytest.fixture
def square():
    return family("ab", "", "a", "b", "ab")


def mutated_families(count=50, seed=2007):
    """Sweep families with one state removed or added that stay learning spaces.

    Every element must still occur in some state.
    """
    import random

    rng = random.Random(seed)
    pool = [pi for pi in all_permutations(5, min_n=2)]
    seen = set()
    out = []
    while len(out) < count:
        pi = rng.choice(pool)
        F = sweep_family(pi)
        full = F.universe.full
        if rng.random() < 0.5:
            candidates = [s for s in F.states if s not in (0, full)]
            if not candidates:
                continue
            states = tuple(s for s in F.states if s != rng.choice(candidates))
        else:
            candidates = [s for s in range(full + 1) if s not in F]
            if not candidates:
                continue
            states = F.states + (rng.choice(candidates),)
        G = SetFamily(F.universe, states)
        if G.union != full or not validate_family(G).ok:
            continue
        key = (F.n, G.states)
        if key in seen:
            continue
        seen.add(key)
        out.append(G)
    return out


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[key])
