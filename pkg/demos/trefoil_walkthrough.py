"""
From a fraction to a grading multiset
=====================================

Follow the right-handed trefoil ``K(3, 1)`` through every stage: diagram,
signature, Jones polynomial, the two routes to its grading multiset, and the
lens-space numbers that reproduce it.
"""

# %%
# The link and its diagram
# ------------------------
# ``normalize`` puts any fraction in the range ``0 < q < p``; a negative
# ``q`` stands for the mirror image.
from lensjones.twobridge import diagram, normalize, signature

K = normalize(3, 1)
D = diagram(K)
print(K, "crossings:", D.crossing_count, "signs:", D.signs)
print("signature:", signature(K), " mirror:", signature(K.mirrored()))

# %%
# Jones polynomial, two ways to M(K)
# ----------------------------------
# The bracket gives ``J``.  Peeling the thin decomposition off ``J`` and
# running the skein recursion must land on the same multiset.
from lensjones.jones import grading_set_from_jones, grading_set_skein, jones_bracket

J = jones_bracket(K)
print("J =", J)
print("from J     :", grading_set_from_jones(J, signature(K)).elements)
print("from skein :", grading_set_skein(K).elements)

# %%
# The same numbers from the double branched cover
# -----------------------------------------------
# ``I = 8d + rho`` on each conjugacy class of structures of ``L(3, 1)``.
# Negating and shifting by ``-3 sigma`` gives the multiset again.
from lensjones.jones import frozen_convention, verify_skeinproof
from lensjones.rho import I_table

for row in I_table(3, 1):
    print(f"i={row.index}  d={row.d}  rho={row.rho}  I={row.value}  spin={row.spin}")
report = verify_skeinproof(K, frozen_convention())
print("lens side:", sorted(report.spin_side), " knot side:", sorted(report.skein_side))
