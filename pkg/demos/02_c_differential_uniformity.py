"""c-DDTs and c-differential uniformity of x^(q-2) + x^16 over the AES field."""
import time

from cdifflab import GF, FunctionTable, cddt_table, cdu_spectrum, classify, inverse_plus_frobenius

F = GF(2, 8)
inv = FunctionTable.inverse(F)
print("inverse: DU =", cdu_spectrum(inv, [1]).per_c[1], " at c=0:", classify(inv, 0))

G = inverse_plus_frobenius(F, 4)  # x^254 + x^16
t = time.perf_counter()
rep = cdu_spectrum(G, "all")
print(f"scanned all 256 values of c in {time.perf_counter() - t:.2f}s")
print("max over c != 1:", rep.max_c_ne_1, " witness (c, a, b):", rep.argmax_witness)
print("max over c outside {0,1}:", rep.max_c_ne_01)

T = cddt_table(G, 5)
print("\nc = 5: largest entry", T.counts.max(), "and every row sums to", sorted({int(v) for v in T.counts.sum(axis=1)}))
