# Mod-2 cohomology of the manifold of l-step flags in R^n, presented by a
# triangular system of complete homogeneous sums, with its structural
# verification: the symmetrized-relation identity, the survival of the top
# class, the quotient dimension n!/(n-l)!, and random Euler classes of
# bounded tables.

from eulerlab.bounds import bound_stiefel
from eulerlab.cohomology import flag_ring, verify_flag_ring
from eulerlab.reps import RepE

n, l = 4, 2
pres = flag_ring(n, l)
print(f"flags of length {l} in R^{n}")
print("relations:", pres.relation_texts())
print("leading degrees:", pres.lead_degrees)
print("quotient dimension:", pres.quotient_dimension)
print("hilbert coefficients:", pres.hilbert_coefficients())
print()

print(verify_flag_ring(n, l, samples=50).to_text())
print()

# Nested dimension bounds n_1 <= ... <= n_l shrink the flag manifold and the
# relation degrees with it.
bounded = flag_ring(3, 2, bounds=[1, 3])
print("bounded variant (n_i = 1, 3):", bounded.relation_texts())
print()

# The Stiefel-manifold bound built on this ring.  The real case reports two
# values because two top-degree conventions circulate in print; the
# dimension-consistent one is certified.
P = RepE(2, {(1, 0): 1, (0, 1): 1})
Q = RepE(2, {(1, 0): 3, (0, 1): 2})  # saturates the caps n - i for n = 4
print(bound_stiefel(P, Q, 4, kind="real").to_text())
