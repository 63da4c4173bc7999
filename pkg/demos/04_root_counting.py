"""Counting roots of quadratics, cubics and Bluher polynomials without search."""
from cdifflab import GF, theorems as th
from cdifflab import gf

F = GF(2, 7)
print("x^2 + 3x + 5 over GF(2^7):", gf.root_count_quadratic(F, 1, 3, 5))
print("x^3 + 6x + 9 over GF(2^7):", gf.root_count_cubic_char2(F, 6, 9))
print("  by enumeration:         ", gf.brute_force_roots(F, (9, 6, 0, 1)))

K = GF(5, 3)
print("2x^2 + x + 4 over GF(125):", gf.root_count_quadratic(K, 2, 1, 4))

print("\ncriterion vs enumeration over GF(3^4):", th.check_root_criteria(GF(3, 4)))

print("\nBluher census: how many B give x^(p^t+1) - Bx + B exactly Q+1 roots")
for p, t, n in ((2, 1, 8), (2, 2, 8), (3, 1, 6), (2, 3, 9)):
    count, formula = th.bluher_census(p, t, n)
    print(f"  p={p} t={t} n={n}: counted {count}, formula {formula}")
