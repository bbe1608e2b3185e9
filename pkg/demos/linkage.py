"""Linkage under the dot action of the affine Weyl group.

Shows alcove representatives with their reflection words, and the residue
certificate that separates the E8 weight w2 from 0 at p = 5.

Run: python3 demos/linkage.py
"""
from chevh1.fixtures import format_weight
from chevh1.paperchecks import residue_profile
from chevh1.rootsys import build
from chevh1.weyl import dot_canonical_rep, linked, s0_dot, strong_linkage_down

e8 = build("E8")
for lam, p in [((0,) * 7 + (2,), 31), ((0, 1, 0, 0, 0, 0, 0, 1), 5), ((0, 1) + (0,) * 6, 5)]:
    rep, word = dot_canonical_rep(e8, p, lam)
    print(f"E8 p={p:<2} {format_weight(lam):<6} -> alcove rep {format_weight(rep):<8} "
          f"after {len(word)} reflections; linked to 0: {linked(e8, p, lam, e8.zero)}")

w2 = e8.fundamental(2)
print("residues mod 5 of (w2 + rho, beta^v):", residue_profile(e8, 5, w2))
print("residues mod 5 of (rho, beta^v):     ", residue_profile(e8, 5, e8.zero))

f4 = build("F4")
print("F4 p=13: s0 . 0 =", format_weight(s0_dot(f4, 13, f4.zero)))
print("F4 p=13: strongly linked below 2w4:",
      sorted(format_weight(w) for w in strong_linkage_down(f4, 13, (0, 0, 0, 2))))
