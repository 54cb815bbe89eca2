"""Walkthrough: even-signed permutations and the peel codes.

Restricting to an even number of bars loses the single sign change as a
generator; the family used instead keeps all signed transpositions with
|i| < j and adds, for each j >= 2, a composite move flipping the signs at
places 1 and j.  Factor (a, j) now weighs j - a, minus 2 when a is barred,
so the composite moves (written (-j, j)) are free.
"""

from coxcodes import perm_d

s = (-2, -4, 5, -1, -3)
print("even-signed permutation:", s)
print("inv_D =", perm_d.inv_d(s))

factors = perm_d.cosort_factorization(s)
print("co-sorting factorization:", " ".join(f"({a},{j})" for a, j in factors))
print("sor'_D =", perm_d.sor_d_prime(s))
print("sor_D  =", perm_d.sor_d(s), " (always equal, by the reweighted signed sort)")

# Both codes peel the letter of largest magnitude, one letter per rank.
# The E-code deletes it and flips the leading sign if it was barred; the
# F-code instead applies one generator per rank, in place.
print("\nE-code:", perm_d.ecode_encode(s))
print("F-code:", perm_d.fcode_encode(s))
print("fixed entries of the F-code mark untouched ranks; the rest count")
print("the word length over the extended family:",
      perm_d.reflection_length_d(s))

v = (2, -4, 5, 1, -3)
image = perm_d.rho(v)
print("\nrho", v, "=", image)
print("inv_D  =", perm_d.inv_d(v), " sor_D =", perm_d.sor_d(image))
print("nmin_D =", perm_d.nmin_d(v),
      " word length of the image =", perm_d.reflection_length_d(image))
