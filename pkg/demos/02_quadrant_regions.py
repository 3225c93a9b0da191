# Quadrant arrangements and the regions they cut out of the plane.

import random

from learnspace import count_regions, from_permutation, region_family
from learnspace.arrangement import inversions

names = tuple("abcdef")

# pi[i] is the y-rank of the corner with x-rank i.
A = from_permutation(names[:4], (2, 0, 3, 1))
F = region_family(A)
print("corners:", A.corners)
print(len(F), "regions; formula gives", 1 + 4 + inversions(A.permutation))

# Each region is the set of quadrants that miss it.
for s in F.as_names():
    print("  ", "".join(s) or "{}")

rng = random.Random(1)
for _ in range(5):
    n = rng.randint(2, 6)
    pi = tuple(rng.sample(range(n), n))
    B = from_permutation(names[:n], pi)
    print(pi, count_regions(B), len(region_family(B, resolution=2)))
