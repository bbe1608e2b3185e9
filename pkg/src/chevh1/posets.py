"""
Dominance order on dominant weights, lower sets, Hasse diagrams, minuscule weights.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .rootsys import RootSystem, Weight, RootCombo, weight_to_root_combo
from .weyl import is_dominant, linked


def root_diff(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> Optional[RootCombo]:
    """``lam - mu`` in the simple-root basis, or ``None`` outside the root lattice."""
    return weight_to_root_combo(rs, [a - b for a, b in zip(lam, mu)])


def leq(rs: RootSystem, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """``mu <= lam``: ``lam - mu`` is a nonnegative integral combination of simple roots."""
    d = root_diff(rs, lam, mu)
    return d is not None and all(c >= 0 for c in d)


def dominant_lower_set(rs: RootSystem, lam: Sequence[int]) -> set[Weight]:
    """All dominant ``mu <= lam``.

    Search downward from ``lam`` subtracting one positive root at a time and
    keeping only dominant weights.  This reaches everything: between two
    dominant weights ``mu < nu`` there is a saturated chain of dominant weights
    whose consecutive differences are positive roots.
    """
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError("dominant_lower_set needs a dominant weight")
    rws = rs._root_weights
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for bw in rws:
            nu = tuple(a - b for a, b in zip(mu, bw))
            if nu not in seen and all(c >= 0 for c in nu):
                seen.add(nu)
                stack.append(nu)
    return seen


def dominant_lower_set_box(rs: RootSystem, lam: Sequence[int]) -> set[Weight]:
    """Same set as :func:`dominant_lower_set`, by exhausting a box in the root basis.

    ``mu`` dominant and ``mu <= lam`` give ``w_0 lam <= w_0 mu <= mu``, so
    ``lam - mu <= lam - w_0 lam`` coefficientwise.  Exponential in the rank;
    meant as a cross-check on small systems.
    """
    from itertools import product
    from .rootsys import root_to_weight
    from .weyl import dual_weight

    lam = tuple(lam)
    w0lam = tuple(-c for c in dual_weight(rs, lam))
    bound = root_diff(rs, lam, w0lam)
    out = set()
    for c in product(*(range(b + 1) for b in bound)):
        mu = tuple(a - b for a, b in zip(lam, root_to_weight(rs, c)))
        if is_dominant(mu):
            out.add(mu)
    return out


def minimal_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """Least dominant weight in the coset ``lam + Z Phi`` (``lam`` dominant)."""
    mu = tuple(lam)
    rws = rs._root_weights
    moved = True
    while moved:
        moved = False
        for bw in rws:
            nu = tuple(a - b for a, b in zip(mu, bw))
            if all(c >= 0 for c in nu):
                mu = nu
                moved = True
                break
    return mu


def sort_weights(rs: RootSystem, weights: Iterable[Sequence[int]], top: Sequence[int]) -> list:
    """Sort by height of ``top - w`` (highest first), then by coordinates descending."""
    def key(w):
        d = root_diff(rs, top, w)
        return (sum(d) if d is not None else 0, tuple(-c for c in w))
    return sorted((tuple(w) for w in weights), key=key)


@dataclass
class HasseDiagram:
    """Covering relation of the dominant weights below ``top``.

    ``edges`` holds pairs ``(upper, lower)`` with ``lower`` covered by ``upper``;
    ``annotations`` maps each vertex to the primes (within ``primes``) for
    which it is dot-linked to 0 under ``W_p``.
    """

    system: str
    top: Weight
    vertices: list[Weight]
    edges: list[tuple[Weight, Weight]]
    primes: list[int] = field(default_factory=list)
    annotations: dict[Weight, list[int]] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "system": self.system,
            "top": list(self.top),
            "vertices": [list(v) for v in self.vertices],
            "edges": [[list(a), list(b)] for a, b in self.edges],
            "primes": list(self.primes),
            "annotations": [[list(v), list(ps)] for v, ps in self.annotations.items()],
        }

    @classmethod
    def from_json(cls, d: dict) -> "HasseDiagram":
        return cls(
            system=d["system"],
            top=tuple(d["top"]),
            vertices=[tuple(v) for v in d["vertices"]],
            edges=[(tuple(a), tuple(b)) for a, b in d["edges"]],
            primes=list(d["primes"]),
            annotations={tuple(v): list(ps) for v, ps in d["annotations"]},
        )


def covering_edges(rs: RootSystem, verts: Sequence[Weight]) -> list[tuple[Weight, Weight]]:
    """Transitive reduction of ``<`` on ``verts``."""
    verts = list(verts)
    n = len(verts)
    less = [[i != j and leq(rs, verts[i], verts[j]) for j in range(n)] for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if less[i][j] and not any(less[i][k] and less[k][j] for k in range(n)):
                edges.append((verts[j], verts[i]))
    return edges


def hasse(rs: RootSystem, lam: Sequence[int], primes: Sequence[int] = ()) -> HasseDiagram:
    """Hasse diagram of ``dominant_lower_set(lam)`` annotated by linkage to 0."""
    lam = tuple(lam)
    verts = sort_weights(rs, dominant_lower_set(rs, lam), lam)
    edges = covering_edges(rs, verts)
    zero = rs.zero
    ann = {v: [p for p in primes if linked(rs, p, v, zero)] for v in verts}
    return HasseDiagram(rs.label, lam, verts, edges, list(primes), ann)


def is_minuscule(rs: RootSystem, lam: Sequence[int]) -> bool:
    """Nonzero ``lam`` with every coroot pairing in ``{-1, 0, 1}``."""
    if not any(lam):
        return False
    for row in rs.coroots:
        c = sum(a * b for a, b in zip(lam, row))
        if c < -1 or c > 1:
            return False
    return True


def under_fundamental(rs: RootSystem, lam: Sequence[int]) -> Optional[int]:
    """Least ``j`` (1-based) with ``lam <= omega_j``, else ``None``."""
    # det * (root coordinates) of lam, then of omega_j (column j of the inverse)
    inv, det, n = rs._inv, rs._det, rs.rank
    s = [sum(r[k] * lam[k] for k in range(n) if lam[k]) for r in inv]
    for j in range(n):
        if all((r[j] - si) % det == 0 and r[j] >= si for r, si in zip(inv, s)):
            return j + 1
    return None


def weights_below_fundamentals(rs: RootSystem) -> list[Weight]:
    """All dominant ``lam`` with ``lam <= omega_j`` for some ``j``, sorted."""
    acc = set()
    for j in range(1, rs.rank + 1):
        acc |= dominant_lower_set(rs, rs.fundamental(j))
    return sorted(acc, key=lambda w: (sum(w), w))
