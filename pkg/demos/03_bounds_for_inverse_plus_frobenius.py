"""Observed uniformity of x^(2^n-2) + x^(2^t) against the interval
[2^gcd(n,t) + 2, 2^t + 4], for small n."""
from cdifflab import theorems as th

for n in range(4, 10):
    for t in range(1, n):
        chk = th.verify_main_thm(2, n, t)
        flag = "" if chk.verdict == th.PASS else "   <-- " + chk.verdict
        print(f"n={n} t={t}  observed {chk.observed:3d}  bounds [{chk.lower}, {chk.upper}]"
              f"  n>=3d: {chk.extra['n_ge_3d']}{flag}")

# the t = 0 and t = 1 families
for n in range(4, 9):
    print(f"n={n}", [(c.params["variant"], c.observed, c.verdict) for c in
                     (th.verify_second_thm(n, "t0"), th.verify_second_thm(n, "t1"))])
