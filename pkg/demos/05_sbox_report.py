"""DU, cDU and cDU after adding a linearized monomial, for six cipher S-boxes."""
from cdifflab import builtin_corpus, interpolate_table, sbox_report
from cdifflab.fpoly import algebraic_degree
from cdifflab.sboxcorpus import field_for_width, report_csv

reports = []
for rec in builtin_corpus():
    r = sbox_report(rec)
    reports.append(r)
    P = interpolate_table(field_for_width(rec.n), rec.table)
    print(f"{rec.name:10s} n={rec.n}  terms={len(P.terms):3d}  alg.deg={algebraic_degree(P)}  "
          f"per i: {r.per_i}")
    print(f"{'':10s} {rec.provenance}")
print()
print(report_csv(reports))
