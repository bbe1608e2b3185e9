"""
Weight multiplicities of induced modules ``H^0(tau)`` (Freudenthal), the Weyl
dimension formula, full weight supports for small rank, and Levi weight drops.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .posets import dominant_lower_set, root_diff
from .rootsys import (RootSystem, Weight, RootCombo, _dominant_fast, inner_scaled, subsystem,
                      weyl_group_order)
from .weyl import is_dominant, orbit


class MultiplicityError(ArithmeticError):
    """Freudenthal recursion produced a non-integer (internal inconsistency)."""


class RankGuardError(ValueError):
    """Full support requested for a system above the rank guard."""


@dataclass
class WeightMultiplicityTable:
    highest: Weight
    dominant_mults: dict[Weight, int]
    total_dim: int

    def to_json(self) -> dict:
        return {
            "highest": list(self.highest),
            "dominant_mults": [[list(w), m] for w, m in self.dominant_mults.items()],
            "total_dim": self.total_dim,
        }


def weyl_dim(rs: RootSystem, tau: Sequence[int]) -> int:
    """Weyl dimension formula ``prod (tau + rho, beta^vee) / (rho, beta^vee)``."""
    num, den = 1, 1
    for row in rs.coroots:
        num *= sum((a + 1) * b for a, b in zip(tau, row))
        den *= sum(row)
    q = Fraction(num, den)
    if q.denominator != 1:
        raise MultiplicityError("Weyl dimension is not an integer")
    return int(q)


def stabilizer_order(rs: RootSystem, mu: Sequence[int]) -> int:
    J = [i for i, c in enumerate(mu) if c == 0]
    if not J:
        return 1
    return weyl_group_order(subsystem(rs, J))


def orbit_size(rs: RootSystem, mu: Sequence[int]) -> int:
    """``|W mu|`` for dominant ``mu``: ``|W| / |W_J|`` with ``J`` the zero coordinates."""
    return weyl_group_order(rs) // stabilizer_order(rs, mu)


def dominant_mults(rs: RootSystem, tau: Sequence[int]) -> WeightMultiplicityTable:
    """Freudenthal's recursion over the dominant weights below ``tau``.

    ``m(mu) ((tau+rho,tau+rho) - (mu+rho,mu+rho))
        = 2 sum_{beta>0} sum_{k>=1} m(mu + k beta) (mu + k beta, beta)``
    with ``m`` of a non-dominant weight read off its dominant conjugate.
    """
    tau = tuple(tau)
    if not is_dominant(tau):
        raise ValueError("dominant_mults needs a dominant weight")
    n = rs.rank
    if n == 0:
        return WeightMultiplicityTable(tau, {tau: 1}, 1)
    lower = dominant_lower_set(rs, tau)
    heights = {mu: sum(root_diff(rs, tau, mu)) for mu in lower}
    order = sorted(lower, key=lambda mu: (heights[mu], mu))
    tr = tuple(a + 1 for a in tau)
    top_norm = inner_scaled(rs, tr, tr)
    roots = rs.positive_roots
    rws = rs._root_weights
    mult: dict[Weight, int] = {tau: 1}
    for mu in order[1:]:
        h = heights[mu]
        num = 0
        for beta, bw in zip(roots, rws):
            hb = sum(beta)
            for k in range(1, h // hb + 1):
                nu = tuple(a + k * b for a, b in zip(mu, bw))
                m = mult.get(_dominant_fast(rs, nu), 0)
                if m:
                    num += m * inner_scaled(rs, nu, bw)
        mr = tuple(a + 1 for a in mu)
        den = top_norm - inner_scaled(rs, mr, mr)
        val, rem = divmod(2 * num, den)
        if rem:
            raise MultiplicityError(f"non-integral multiplicity at {mu}")
        if val:
            mult[mu] = val
    mult = {mu: mult[mu] for mu in order if mu in mult}
    return WeightMultiplicityTable(tau, mult, weyl_dim(rs, tau))


def dim_from_mults(rs: RootSystem, table: WeightMultiplicityTable) -> int:
    return sum(m * orbit_size(rs, mu) for mu, m in table.dominant_mults.items())


@dataclass(frozen=True)
class SupportEntry:
    nu: Weight
    theta: RootCombo
    mult: int


def weight_support(rs: RootSystem, tau: Sequence[int], force: bool = False) -> list[SupportEntry]:
    """Every weight ``nu`` of ``H^0(tau)`` with ``theta = tau - nu`` and multiplicity.

    Sorted by height of ``theta``, then ``theta`` lexicographically, matching
    the layout of the usual rank-two tables.
    """
    if rs.rank > 4 and not force:
        raise RankGuardError("full weight support is limited to rank <= 4 (pass force=True)")
    tau = tuple(tau)
    table = dominant_mults(rs, tau)
    out = []
    for mu, m in table.dominant_mults.items():
        for nu in orbit(rs, mu, guard=None if force else None):
            out.append(SupportEntry(nu, root_diff(rs, tau, nu), m))
    out.sort(key=lambda e: (sum(e.theta), e.theta))
    return out


def support_by_string_closure(rs: RootSystem, tau: Sequence[int]) -> set[Weight]:
    """Support of ``H^0(tau)`` as the set closed under root strings, starting at ``tau``.

    For every weight ``nu`` and root ``beta`` the whole string between ``nu``
    and ``s_beta nu`` belongs to the support.  Independent of Freudenthal; used
    as an oracle on small systems.
    """
    tau = tuple(tau)
    seen = {tau}
    stack = [tau]
    rws = rs._root_weights
    while stack:
        nu = stack.pop()
        for row, bw in zip(rs.coroots, rws):
            c = sum(a * b for a, b in zip(nu, row))
            step = 1 if c > 0 else -1
            for t in range(step, c + step, step) if c else ():
                x = tuple(a - t * b for a, b in zip(nu, bw))
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
    return seen


def levi_weight_drops(rs: RootSystem, lam: Sequence[int], J: Sequence[int]) -> set[RootCombo]:
    """All ``theta`` in ``N J`` with ``lam - theta`` a weight of ``H^0_J(lam)``.

    ``J`` holds 0-based simple-root indices, ``|J| <= 2``.  The Levi module is
    computed on the rank <= 2 system spanned by ``J`` with highest weight
    ``((lam, alpha^vee))_{alpha in J}`` and the drops are pulled back.
    """
    J = sorted(set(J))
    if len(J) > 2:
        raise ValueError("levi_weight_drops supports |J| <= 2")
    n = rs.rank
    if not J:
        return {(0,) * n}
    return {_pull_back(theta, J, n) for theta in _levi_drops_cached(rs, tuple(lam[j] for j in J), tuple(J))}


_LEVI_CACHE: dict = {}


def _levi_drops_cached(rs, restricted, J):
    key = (id(rs), restricted, J)
    hit = _LEVI_CACHE.get(key)
    if hit is None:
        sub = subsystem(rs, J)
        hit = frozenset(e.theta for e in weight_support(sub, restricted))
        _LEVI_CACHE[key] = hit
    return hit


def _pull_back(theta, J, n):
    out = [0] * n
    for t, j in zip(theta, J):
        out[j] = t
    return tuple(out)


def max_pairing_over_support(rs: RootSystem, tau: Sequence[int], k: int) -> int:
    """``max (nu, delta^vee)`` over the weights ``nu`` of ``H^0(tau)``.

    Equals ``(tau, delta~^vee)`` with ``delta~`` the dominant root in the
    W-orbit of ``delta``: the highest root of the same length and component.
    """
    top = _dominant_fast(rs, rs.root_weight(k))
    row = rs.coroots[rs._root_weights.index(top)]
    return sum(a * b for a, b in zip(tau, row))


def format_table(rs: RootSystem, tau: Sequence[int], entries: Sequence[SupportEntry]) -> str:
    """Aligned two-column (nu, theta) listing plus multiplicity."""
    from .fixtures import format_root, format_weight

    rows = [(format_weight(e.nu), format_root(e.theta), str(e.mult)) for e in entries]
    head = ("nu", "theta", "mult")
    w = [max(len(r[i]) for r in rows + [head]) for i in range(3)]
    lines = [f"H^0({format_weight(tau)}) in {rs.label}",
             "  ".join(h.rjust(w[i]) for i, h in enumerate(head))]
    for r in rows:
        lines.append("  ".join(c.rjust(w[i]) for i, c in enumerate(r)))
    return "\n".join(lines)


def support_to_json(entries: Sequence[SupportEntry]) -> list:
    return [{"nu": list(e.nu), "theta": list(e.theta), "mult": e.mult} for e in entries]
