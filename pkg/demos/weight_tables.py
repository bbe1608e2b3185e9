"""Weights of induced modules in small rank, with root-lattice offsets and multiplicities.

Run: python3 demos/weight_tables.py
"""
from chevh1.charweights import dominant_mults, format_table, weight_support, weyl_dim
from chevh1.rootsys import build, build_label

for label, lam in [("A1", (3,)), ("A1xA1", (2, 1)), ("B2", (0, 1)), ("G2", (0, 1))]:
    rs = build_label(label)
    print(format_table(rs, lam, weight_support(rs, lam)))
    print()

e8 = build("E8")
top = e8.fundamental(1)
table = dominant_mults(e8, top)
print(f"E8 w1: {len(table.dominant_mults)} dominant weights, total dimension {table.total_dim} "
      f"(Weyl formula: {weyl_dim(e8, top)})")
