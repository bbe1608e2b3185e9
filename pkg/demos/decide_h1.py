"""Decide dim H^1(G(F_q), L(lambda)) for a handful of queries and show why.

Run: python3 demos/decide_h1.py
"""
from chevh1.fixtures import format_weight
from chevh1.h1 import Query, h1_dim
from chevh1.rootsys import RootSystemId

QUERIES = [
    ("F4", 13, 1, (0, 0, 0, 2)),
    ("C5", 5, 1, (0, 1, 0, 0, 0)),
    ("B5", 5, 1, (0, 0, 1, 0, 0)),
    ("E7", 5, 1, (0, 0, 0, 0, 0, 0, 2)),
    ("D4", 3, 1, (0, 0, 0, 1)),
    ("D4", 3, 2, (0, 0, 0, 1)),
]

for label, p, r, lam in QUERIES:
    res = h1_dim(Query(RootSystemId.parse(label), p, r, lam))
    dim = "?" if res.dim is None else res.dim
    extra = f"  needs {res.violated}" if res.violated else ""
    print(f"{label:<3} q={p}^{r:<2} lambda={format_weight(lam):<5} -> {res.status:<10} dim={dim}  "
          f"[{res.rule}]{extra}")
