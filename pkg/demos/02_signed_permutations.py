"""Walkthrough: signed permutations, their codes, and the transport bijection.

A signed permutation maps i to s(i) with s(-i) = -s(i); one-line notation
lists s(1)..s(n) with minus signs for barred letters.  Sorting now uses
signed transpositions (a, j), which swap places |a| and j and flip both
signs when a is barred; (-j, j) flips the sign at place j alone.
"""

from coxcodes import perm_b

s = (5, -4, -3, 1, -2)
print("signed permutation:", s)
factors = perm_b.selection_sort_factorization(s)
print("sorting factorization:", " ".join(f"({a},{j})" for a, j in factors))
print("sor_B =", perm_b.sor_b(s), " (each factor adds j - a, minus 1 when a is barred)")
print("inv_B =", perm_b.inv_b(s))

# The three codes extend their unsigned counterparts entrywise with signs.
big = (5, -7, 1, -4, 9, -2, -6, 3, 8)
print("\nelement:", big)
print("signed Lehmer code:", perm_b.lehmer_b_encode(big))
print("right-to-left minimum letters (positive, below all later in "
      "absolute value):", sorted(perm_b.rmil_b_set(big)))
print("left-to-right maximum places (positive, above all earlier):",
      sorted(perm_b.lmap_b_set(big)))

u = (3, -1, -6, -5, 4, 2)
print("\nelement:", u)
print("cycle code:", perm_b.bcode_b_encode(u))
print("sor_B =", perm_b.sor_b(u))

# Signed cycles carry a parity: balanced means an even number of bars.
w = (-6, -7, 4, -3, 5, 1, -2)
print("\nelement:", w)
for c in perm_b.signed_cycle_decomposition(w):
    kind = "balanced" if c.balanced else "unbalanced"
    print(" cycle", c.values, kind)
print("balanced cycles:", perm_b.cyc_b(w),
      " reflection length:", perm_b.reflection_length_b(w))

# psi composes the two codes and carries (inv_B, Lmap_B, Rmil_B) onto
# (sor_B, Lmap_B, Cyc_B).
v = (2, -4, 5, 1, -3)
image = perm_b.psi(v)
print("\npsi", v, "=", image)
print("inv_B =", perm_b.inv_b(v), " sor_B =", perm_b.sor_b(image))
print("Rmil_B =", sorted(perm_b.rmil_b_set(v)),
      " Cyc_B =", sorted(perm_b.cyc_b_set(image)))
