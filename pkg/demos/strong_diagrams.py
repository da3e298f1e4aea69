"""
Strong Heegaard diagrams and sign matrices
==========================================

Build a few diagrams from intersection data alone.  Decide which are strong,
read off their presentations, and run both sign-matrix obstructions.  The
last part destabilizes a scrambled sphere diagram with the leaf argument.
"""

# %%
# Lens spaces
# -----------
from lensjones.orderability import (
    check_formal_determinant,
    check_notLO,
    epsilon_matrix,
    format_sign_matrix,
    generator_count,
    homology_order,
    is_strong,
    lens_diagram,
    presentation_from_heegaard,
)

for p in (1, 2, 5):
    H = lens_diagram(p)
    G = presentation_from_heegaard(H)
    E = epsilon_matrix(G)
    print(G, "strong:", is_strong(H), "obstructed:", check_notLO(E).obstructed)

# %%
# A genus-2 diagram that is not strong
# ------------------------------------
# A cancelling pair of points on one alpha/beta pair adds generators without
# changing the homology, and the matching sign entry becomes ``*``.
from lensjones.orderability import HeegaardDiagram

H = HeegaardDiagram(2, (((0, 1), (0, 1), (0, -1), (1, 1)), ((1, 1),)))
E = epsilon_matrix(presentation_from_heegaard(H))
print("generators:", generator_count(H), "|H_1|:", homology_order(H), "strong:", is_strong(H))
print(format_sign_matrix(E))
print(check_formal_determinant(E))

# %%
# Undoing stabilizations
# ----------------------
# Each step finds a 1-valent vertex of the intersection graph and removes
# the pair of circles through it, keeping the single generator.
import random

from lensjones.orderability import reduce_to_genus_one, relabel, stabilize

rng = random.Random(7)
H = lens_diagram(1)
for _ in range(4):
    extra = [(rng.randrange(H.genus), rng.choice((1, -1))) for _ in range(2)]
    H = stabilize(H, extra, leaf_side=rng.choice("AB"), rng=rng)
perm = list(range(H.genus))
rng.shuffle(perm)
H = relabel(H, perm, perm[::-1])
for step in reduce_to_genus_one(H):
    print(step.genus, step.beta)
