"""
Rho invariants by counting lattice points
=========================================

``rho(a, b, n)`` is four times the gap between the area of a thin triangle
and its weighted lattice-point count.  This script checks the counting
against brute force, then tabulates the difference identity for two lens
spaces that share a triangle edge.
"""

# %%
# One triangle, counted twice
# ---------------------------
from fractions import Fraction

from lensjones.rho import rho, triangle_count, triangle_count_enumerate

for n, h in [(1, Fraction(1, 3)), (7, Fraction(22, 5)), (40, Fraction(17, 3))]:
    fast, slow = triangle_count(n, h), triangle_count_enumerate(n, h)
    print(n, h, fast.area, fast.count, fast == slow)

# %%
# The difference identity
# -----------------------
# With ``ps - qr = 1`` the two triangles of slopes ``r/p`` and ``s/q`` are
# so close that no lattice point separates them.  The rho difference is
# then pure area: ``-2 n^2 / (pq)``.
from lensjones.exactmath import solve_rep

p, q = 17, 5
r, s = solve_rep(p, q)
for n in range(1, q):
    diff = rho(p, r, n) - rho(q, s, n)
    print(f"n={n}: {diff}  expected {Fraction(-2 * n * n, p * q)}")

# %%
# Where the identity needs a correction
# -------------------------------------
# At ``n = q`` the far corner of the small triangle is a lattice point, and
# for odd ``p`` the difference picks up an extra ``+1``.
print(rho(p, r, q) - rho(q, s, q), Fraction(-2 * q, p) + 1)
