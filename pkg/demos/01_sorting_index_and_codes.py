"""Walkthrough: the sorting index and three codes of an ordinary permutation.

Straight selection sort moves each letter into place with one transposition
per position, working from the right.  Reading those transpositions off
gives a canonical factorization; the sorting index adds up how far each
factor reaches.
"""

from coxcodes import perm_a

s = (2, 4, 5, 1, 3)
print("permutation:", s)

factors = perm_a.sort_factorization(s)
print("sorting factorization:", " ".join(f"({i},{j})" for i, j in factors))
print("sor  =", perm_a.sor(s), " (sum of j - i over the factors)")
print("inv  =", perm_a.inv(s))

# Three codes.  The Lehmer code counts smaller letters to the left; the
# A-code is the Lehmer code of the inverse; the B-code walks each cycle
# backwards to the nearest position not exceeding the current one.
print("\nLehmer code:", perm_a.lehmer_encode(s))
print("A-code:     ", perm_a.acode_encode(s))
print("B-code:     ", perm_a.bcode_encode(s))

# The B-code entry b_i equals i exactly when i is the minimum of its cycle,
# so the fixed places of the code list the cycle minima.
print("\ncycles:", perm_a.cycles(s))
print("fixed places of the B-code:", sorted(perm_a.max_set(perm_a.bcode_encode(s))))
print("cycle minima:              ", sorted(perm_a.cyc_set(s)))

# Decoding the A-code with the B-code decoder transports statistics:
# (inv, rl-min) of the source becomes (sor, cyc) of the image, and the
# left-to-right maximum places are preserved.
t = perm_a.phi(s)
print("\nphi(s) =", t)
print("inv(s) =", perm_a.inv(s), " sor(phi(s)) =", perm_a.sor(t))
print("rl-min(s) =", perm_a.rl_min(s), " cyc(phi(s)) =", perm_a.cyc(t))
print("Lmap(s) =", sorted(perm_a.lmap_set(s)),
      " Lmap(phi(s)) =", sorted(perm_a.lmap_set(t)))
