# Deciding whether a learning space comes from a quadrant arrangement.

from learnspace import (
    brute_force_recognize,
    census,
    implication_poset,
    power_set,
    prefix_suffix_family,
    recognize,
)

F = prefix_suffix_family("abcd")
orders = recognize(F)
print("x order:", orders.x_order, "y order:", orders.y_order)
print("permutation:", orders.permutation())

P = implication_poset(F)
print("implication matrix:\n", P.leq.astype(int))

# The cube on three elements satisfies every axiom and still fails.
Q = power_set("abc")
print("cube:", recognize(Q), brute_force_recognize(Q))

# How many distinct families do the n! permutations produce?
print(census(0).table().splitlines()[0])
for n in range(1, 6):
    print(census(n).table().splitlines()[-1])
