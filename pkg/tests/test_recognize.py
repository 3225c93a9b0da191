import itertools
import math

import numpy as np
import pytest

from conftest import all_learning_spaces, all_permutations, family, mutated_families, names, sweep_family
from learnspace import (
    SetFamily,
    Universe,
    brute_force_recognize,
    census,
    chain_family,
    from_permutation,
    implication_poset,
    power_set,
    prefix_suffix_family,
    recognize,
    region_family,
)
from learnspace.arrangement import inverse


def test_poset_of_chain_is_total():
    P = implication_poset(chain_family("abc"))
    expected = np.array([[1, 1, 1], [0, 1, 1], [0, 0, 1]], dtype=bool)
    assert (P.leq == expected).all()


def test_poset_of_power_set_is_antichain():
    P = implication_poset(power_set("abc"))
    assert (P.leq == np.eye(3, dtype=bool)).all()


def test_poset_matches_corner_dominance():
    for pi in all_permutations(5):
        n = len(pi)
        P = implication_poset(sweep_family(pi))
        for e in range(n):
            for f in range(n):
                both = e <= f and pi[e] <= pi[f]
                assert bool(P.leq[e, f]) == both, (pi, e, f)


def test_poset_is_partial_order():
    for F in all_learning_spaces(4)[::5]:
        if F.union != F.universe.full:
            continue
        L = implication_poset(F).leq
        n = F.n
        assert all(L[i, i] for i in range(n))
        assert not any(L[i, j] and L[j, i] for i in range(n) for j in range(n) if i != j)
        assert all(
            L[i, k] for i in range(n) for j in range(n) for k in range(n) if L[i, j] and L[j, k]
        )


def test_recognize_examples():
    assert recognize(power_set("abc")) is None
    orders = recognize(prefix_suffix_family("abc"))
    assert orders.x_order == ("a", "b", "c")
    assert orders.y_order == ("c", "b", "a")
    assert brute_force_recognize(prefix_suffix_family("abc")) == orders
    chain = recognize(chain_family("abc"))
    assert chain.x_order == chain.y_order == ("a", "b", "c")


def test_recognize_rejects_invalid_family():
    with pytest.raises(ValueError):
        recognize(family("ab", "", "a", "b"))
    with pytest.raises(ValueError):
        brute_force_recognize(family("ab", "", "a", "b"))


def test_recognize_rejects_unused_elements():
    with pytest.raises(ValueError, match="never used"):
        recognize(family("ab", "", "a"))


def test_empty_universe():
    F = SetFamily(Universe(()), (0,))
    assert brute_force_recognize(F).x_order == ()
    assert recognize(F).y_order == ()


def test_brute_force_size_cap():
    with pytest.raises(ValueError):
        brute_force_recognize(chain_family(tuple(f"e{i}" for i in range(9))))


def _induced(F, orders):
    return region_family(orders.arrangement()).relabel(F.universe)


def test_recognize_agrees_with_oracle_on_sweep():
    for pi in all_permutations(5):
        F = sweep_family(pi)
        fast = recognize(F)
        slow = brute_force_recognize(F)
        assert fast is not None and slow is not None
        assert fast == slow
        assert _induced(F, fast) == F


def test_recognize_agrees_with_oracle_on_mutations():
    for F in mutated_families():
        fast = recognize(F)
        slow = brute_force_recognize(F)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert _induced(F, fast) == F == _induced(F, slow)


def test_recognize_agrees_on_all_small_learning_spaces():
    for n in range(1, 5):
        for F in all_learning_spaces(n):
            if F.union != F.universe.full:
                continue
            assert recognize(F) == brute_force_recognize(F), F


def test_orders_form_a_realizer():
    for pi in all_permutations(5):
        F = sweep_family(pi)
        P = implication_poset(F)
        orders = recognize(F)
        idx = F.universe.index
        lx = [idx[e] for e in orders.x_order]
        ly = [idx[e] for e in orders.y_order]
        assert P.is_linear_extension(lx) and P.is_linear_extension(ly)
        xpos = {e: i for i, e in enumerate(lx)}
        ypos = {e: i for i, e in enumerate(ly)}
        for e, f in itertools.combinations(range(F.n), 2):
            if not P.comparable(e, f):
                assert (xpos[e] < xpos[f]) != (ypos[e] < ypos[f])


def test_dimension_two_poset_is_not_enough():
    # the power set poset is an antichain, realizable by two reversed orders,
    # yet the family is not the region family of any arrangement
    F = power_set("abc")
    assert not implication_poset(F).leq[~np.eye(3, dtype=bool)].any()
    assert recognize(F) is None


@pytest.mark.parametrize("n", range(1, 9))
def test_size_bound(n):
    P = prefix_suffix_family(names(n))
    assert len(P) == 1 + (n + 1) * n // 2
    assert recognize(P) is not None


def test_recognized_families_respect_size_bound():
    for pi in all_permutations(5):
        F = sweep_family(pi)
        n = F.n
        assert len(F) <= 1 + (n + 1) * n // 2


def test_sampled_six_element_agreement():
    import random

    rng = random.Random(3)
    for _ in range(12):
        pi = tuple(rng.sample(range(6), 6))
        F = region_family(from_permutation(names(6), pi))
        assert recognize(F) == brute_force_recognize(F)


# ------------------------------------------------------------------ census


def test_census_small():
    assert census(1).labeled_classes == 1
    c2 = census(2)
    assert c2.labeled_classes == 2 <= math.factorial(2)
    assert sorted(len(e.states) for e in c2.entries) == [3, 4]


def test_census_four_matches_inversion_classes():
    c = census(4)
    classes = {min(p, inverse(p)) for p in itertools.permutations(range(4))}
    assert c.inversion_classes == len(classes) == 17
    assert c.labeled_classes == 17
    assert c.inverse_identification


def test_census_family_lookup():
    c = census(3)
    assert c.family((2, 1, 0)).states == prefix_suffix_family(["e0", "e1", "e2"]).states


@pytest.mark.parametrize("n", range(0, 7))
def test_census_bounds(n):
    c = census(n)
    assert c.labeled_classes <= math.factorial(n)
    assert c.unlabeled_classes <= c.labeled_classes
    assert c.max_family_size == 1 + (n + 1) * n // 2
    assert c.inverse_identification


def test_census_six_finds_extra_isomorphism():
    # two three-element blocks stacked: flipping one block alone gives an
    # isomorphic family that is neither pi nor its inverse
    c = census(6)
    assert c.labeled_classes == c.inversion_classes
    assert c.unlabeled_classes < c.labeled_classes


def test_census_table_format():
    text = census(3).table()
    assert text.splitlines()[0].split() == [
        "n", "labeled", "unlabeled", "max_size", "size_bound", "count_bound"
    ]
    assert text.splitlines()[1].split() == ["3", "5", "5", "7", "7", "6"]


def test_census_parallel_matches_serial():
    assert census(4, max_workers=2) == census(4)


def test_census_cap():
    with pytest.raises(ValueError):
        census(7)
