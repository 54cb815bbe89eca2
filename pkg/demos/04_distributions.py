"""Walkthrough: joint distributions, product formulas, and whole-group checks.

Each identity is verified by brute force: enumerate the whole group in code
order, accumulate an exact bivariate polynomial, and compare against the
closed product formula.
"""

from coxcodes import harness, qpoly

# Type A: two different statistic pairs share one distribution.
n = 4
left = harness.joint_distribution("A", n, "inv", "rl-min")
right = harness.joint_distribution("A", n, "sor", "cyc")
print(f"S_{n}: sum of q^inv t^rl-min     =", left.text())
print(f"S_{n}: sum of q^sor t^cyc        =", right.text())
print(f"product formula t(t+q)...      =", qpoly.gf_type_a(n).text())
print("all equal:", left == right == qpoly.gf_type_a(n))

# Type D anchor, small enough to check by hand.
print("\nD_2 bivariate distribution:",
      harness.joint_distribution("D", 2, "inv_D", "nmin_D").text())

# Named checks package the same comparisons with budgets fit for a desk.
for name, rank in [
    ("type-b-gf", 4),
    ("type-d-mahonian", 4),
    ("oracle-reflection-length-d", 4),
    ("codes-b", 4),
]:
    report = harness.run_check(name, rank)
    word = "PASS" if report.passed else "FAIL"
    print(f"{word} {name} n={rank} (checked {report.checked})")

# Distances in the Cayley graph give an independent oracle for the closed
# word-length formulas; ranks stay small because the search is exhaustive.
d = harness.cayley_distance("D", 5, "T^D", (-2, -4, 5, -1, -3))
print("\nBFS word length of (-2, -4, 5, -1, -3) over the extended family:", d)

# Sweeps can be split across worker processes; addition of exact counts is
# order-independent, so the result is bit-identical either way.
seq = harness.joint_distribution("B", 5, "inv_B", "nmin_B", workers=1)
par = harness.joint_distribution("B", 5, "inv_B", "nmin_B", workers=4)
print("parallel sweep matches sequential:", seq == par)
