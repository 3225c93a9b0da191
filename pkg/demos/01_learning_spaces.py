# Learning spaces as bitmask families: axioms, graphs and chains.

from learnspace import (
    build_graph,
    chain_between,
    check_well_graded,
    power_set,
    prefix_suffix_family,
    validate_family,
)
from learnspace.family import SetFamily

# Three elements, states kept as sorted bitmasks.
F = prefix_suffix_family("abc")
print("states:", ["".join(s) or "{}" for s in F.as_names()])
print("learning space?", validate_family(F).ok)

# Drop {a} and the empty set can no longer grow one element at a time.
broken = SetFamily.from_names("ab", [[], ["a", "b"]])
report = validate_family(broken)
print(report.format(broken.universe))

# The graph has one edge per single-element step.
G = build_graph(F)
print(len(G.vertices), "vertices,", len(G.edges), "edges")

# Any two nested states are linked by a chain inside the family.
u = F.universe
print([u.format(s) for s in chain_between(F, 0, u.full)])

print("power set well graded?", check_well_graded(power_set("abcd")).ok)
