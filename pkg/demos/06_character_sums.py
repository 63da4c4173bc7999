"""Gauss sums, Weil sums of x L(x) and the bounds for x^(q-2) + L(x)."""
import numpy as np

from cdifflab import GF, CharacterContext, LinearizedPoly, gauss_sum, linearized_bounds, weil_report

F = GF(3, 4)
ctx = CharacterContext(F)
g = [abs(gauss_sum(ctx, k)) for k in range(1, F.q - 1)]
print(f"|G(psi_k, chi_1)| over GF(81): min {min(g):.6f} max {max(g):.6f} (sqrt q = 9)")

L = LinearizedPoly(F, (2, 0, 1, 0))  # 2x + x^9
for alpha in (1, 2, 7):
    r = weil_report(ctx, L, alpha)
    print(f"alpha={alpha}: |S|^2 = {abs(r.S_alpha) ** 2:.3f}, q N = {F.q * r.N_alpha}")

for L in (LinearizedPoly.monomial(F, 2), LinearizedPoly.random(F, np.random.default_rng(4))):
    res = linearized_bounds(L)
    low = "n/a" if res.lower is None else f"{res.lower:.3f}"
    print(f"L={L.a}: observed {res.observed}, upper {res.upper:g}, lower {low}, N={res.N}")
