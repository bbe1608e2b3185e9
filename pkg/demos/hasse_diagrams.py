"""Dominant weights below a fundamental weight, with primes at which each is linked to 0.

Writes one DOT file per diagram into the current directory.

Run: python3 demos/hasse_diagrams.py && dot -Tpdf F4_w2.dot -o F4_w2.pdf
"""
from pathlib import Path

from chevh1.cli import hasse_to_dot
from chevh1.fixtures import format_weight
from chevh1.posets import hasse
from chevh1.rootsys import build

PRIMES = [5, 7, 11, 13, 17, 19, 23, 29, 31]

for label, j in [("E6", 4), ("E7", 4), ("F4", 2), ("G2", 2)]:
    rs = build(label)
    hd = hasse(rs, rs.fundamental(j), PRIMES)
    marked = {format_weight(v): ps for v, ps in hd.annotations.items() if ps and any(v)}
    print(f"{label} w{j}: {len(hd.vertices)} vertices, {len(hd.edges)} covering edges, "
          f"linked to 0 away from 0 itself: {marked or 'none'}")
    Path(f"{label}_w{j}.dot").write_text(hasse_to_dot(hd) + "\n", encoding="utf-8")
