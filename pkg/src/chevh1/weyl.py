"""
Finite and affine Weyl group actions on weights.

The affine group ``W_p`` acts by ``s_{beta, mp} . lam = lam - ((lam + rho,
beta^vee) - mp) beta``.  Dot-orbit representatives are taken in the closed
fundamental alcove ``0 <= (nu + rho, beta^vee) <= p``.

Reflection words are lists of steps; ``("s", i)`` is the simple reflection
``s_{alpha_{i+1}}`` and ``("a", k, m)`` is the affine reflection in positive
root ``k`` at level ``m p``.  A word is replayed left to right (first step is
applied first).
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .rootsys import RootSystem, Weight, root_to_weight

Step = tuple
ReflectionWord = list


class OrbitTooLarge(RuntimeError):
    """Raised when an orbit enumeration exceeds its guard."""


def _sub_mult(lam: Sequence[int], c: int, beta_w: Sequence[int]) -> Weight:
    return tuple(a - c * b for a, b in zip(lam, beta_w))


def reflect(rs: RootSystem, k: int, lam: Sequence[int]) -> Weight:
    """Linear reflection ``s_beta(lam)`` for positive root index ``k``."""
    row = rs.coroots[k]
    c = sum(a * b for a, b in zip(lam, row))
    return _sub_mult(lam, c, rs.root_weight(k))


def simple_reflect(rs: RootSystem, i: int, lam: Sequence[int]) -> Weight:
    c = lam[i]
    if not c:
        return tuple(lam)
    col = rs.simple_root_weight(i)
    return _sub_mult(lam, c, col)


def dot_reflect(rs: RootSystem, k: int, m: int, p: int, lam: Sequence[int]) -> Weight:
    """Affine dot reflection ``s_{beta_k, m p} . lam``; ``m = 0`` is the finite one."""
    row = rs.coroots[k]
    c = sum((a + 1) * b for a, b in zip(lam, row)) - m * p
    return _sub_mult(lam, c, rs.root_weight(k))


def simple_dot_reflect(rs: RootSystem, i: int, lam: Sequence[int]) -> Weight:
    c = lam[i] + 1
    return _sub_mult(lam, c, rs.simple_root_weight(i))


def s0_dot(rs: RootSystem, p: int, lam: Sequence[int]) -> Weight:
    """``s_0 . lam`` with ``s_0 = s_{alpha_0, p}``."""
    return dot_reflect(rs, rs.root_index(rs.alpha0), 1, p, lam)


def replay(rs: RootSystem, word: Iterable[Step], lam: Sequence[int], p: int = 0,
           dot: bool = False) -> Weight:
    """Apply a reflection word; linear action unless ``dot``."""
    x = tuple(lam)
    for step in word:
        if step[0] == "s":
            x = simple_dot_reflect(rs, step[1], x) if dot else simple_reflect(rs, step[1], x)
        else:
            _, k, m = step
            if dot:
                x = dot_reflect(rs, k, m, p, x)
            else:
                # linear affine reflection s_beta(x) + m p beta
                row = rs.coroots[k]
                c = sum(a * b for a, b in zip(x, row)) - m * p
                x = _sub_mult(x, c, rs.root_weight(k))
    return x


def make_dominant(rs: RootSystem, lam: Sequence[int]) -> tuple[Weight, ReflectionWord]:
    """Dominant element of ``W lam`` with a witnessing word.

    Always reflects at the lowest-index negative coordinate.
    """
    x = list(lam)
    word = []
    n = rs.rank
    cart = rs.cartan
    while True:
        for i in range(n):
            if x[i] < 0:
                c = x[i]
                for r in range(n):
                    x[r] -= c * cart[r][i]
                word.append(("s", i))
                break
        else:
            return tuple(x), word


def is_dominant(lam: Sequence[int]) -> bool:
    return all(c >= 0 for c in lam)


def dual_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """``lam* = -w_0 lam``."""
    return tuple(lam[rs.w0_perm[i] - 1] for i in range(rs.rank)) if is_dominant(lam) \
        else make_dominant(rs, [-c for c in lam])[0]


def _alpha0_data(rs: RootSystem):
    k0 = rs.root_index(rs.alpha0)
    return k0, rs.coroots[k0], rs.root_weight(k0)


def dot_canonical_rep(rs: RootSystem, p: int, lam: Sequence[int],
                      want_word: bool = True) -> tuple[Weight, ReflectionWord]:
    """Representative of ``W_p . lam`` in the closed fundamental alcove.

    Uses the affine simple reflections: dot-reflect in simple roots until
    ``lam + rho`` is dominant, then, if ``(lam + rho, alpha_0^vee) > p``,
    apply ``s_0`` and repeat.  Each step moves ``lam + rho`` across a wall
    separating it from the alcove interior, so its distance to a fixed
    interior point strictly drops and the loop terminates.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    k0, a0row, a0w = _alpha0_data(rs)
    x = [c + 1 for c in lam]  # work with lam + rho
    n = rs.rank
    cart = rs.cartan
    word = []
    while True:
        i = 0
        while i < n:
            if x[i] < 0:
                c = x[i]
                for r in range(n):
                    x[r] -= c * cart[r][i]
                if want_word:
                    word.append(("s", i))
                i = 0
            else:
                i += 1
        c = sum(a * b for a, b in zip(x, a0row))
        if c <= p:
            return tuple(v - 1 for v in x), word
        c -= p
        for r in range(n):
            x[r] -= c * a0w[r]
        if want_word:
            word.append(("a", k0, 1))


def in_closed_alcove(rs: RootSystem, p: int, lam: Sequence[int]) -> bool:
    for row in rs.coroots:
        c = sum((a + 1) * b for a, b in zip(lam, row))
        if c < 0 or c > p:
            return False
    return True


def linked(rs: RootSystem, p: int, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Whether ``lam`` and ``mu`` lie in the same ``W_p`` dot-orbit."""
    return (dot_canonical_rep(rs, p, lam, want_word=False)[0]
            == dot_canonical_rep(rs, p, mu, want_word=False)[0])


def orbit(rs: RootSystem, v: Sequence[int], kind: str = "weight",
          guard: int | None = None) -> set[tuple[int, ...]]:
    """Full W-orbit by breadth-first search over simple reflections.

    Parameters
    ----------
    kind : {"weight", "coroot"}
        ``"weight"``: ``v`` in the omega basis.  ``"coroot"``: ``v`` is a
        coefficient vector in the simple-coroot basis.
    guard : int, optional
        Maximum orbit size.  Defaults to unlimited for rank <= 4 and
        ``100_000`` otherwise.
    """
    if guard is None:
        guard = None if rs.rank <= 4 else 100_000
    n = rs.rank
    cart = rs.cartan
    start = tuple(v)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for i in range(n):
            if kind == "weight":
                c = x[i]
                if not c:
                    continue
                y = tuple(x[r] - c * cart[r][i] for r in range(n))
            elif kind == "coroot":
                # <alpha_i, x^vee> = sum_j x_j <alpha_i, alpha_j^vee> = sum_j x_j cart[j][i]
                c = sum(x[j] * cart[j][i] for j in range(n))
                if not c:
                    continue
                y = tuple(x[j] - c * int(j == i) for j in range(n))
            else:
                raise ValueError(f"unknown orbit kind {kind!r}")
            if y not in seen:
                seen.add(y)
                if guard is not None and len(seen) > guard:
                    raise OrbitTooLarge(f"orbit exceeds guard {guard}")
                queue.append(y)
    return seen


def strong_linkage_down(rs: RootSystem, p: int, lam: Sequence[int],
                        exhaustive: bool = False) -> set[Weight]:
    """All dominant ``sigma`` with ``sigma`` strongly linked below ``lam``.

    Follows chains ``mu -> s_{beta, mp} . mu`` that go down in the dominance
    order, for every integer ``m``.

    By default the chains are confined to weights ``mu`` with ``mu + rho`` in
    the closed dominant chamber (all coordinates ``>= -1``).  For dominant
    end points this loses nothing: restricted to dominant alcoves the order
    agrees with the Bruhat order on minimal coset representatives of
    ``W \\ W_p``, and Bruhat intervals in such a quotient are joined by
    reflection chains that stay in the quotient.  Those weights
    satisfy ``mu + rho <= lam + rho`` with ``mu + rho`` dominant, a small set.

    With ``exhaustive=True`` every weight between the least dominant weight of
    the coset and ``lam`` is allowed; exponential, kept as an oracle for small
    ranks.

    The search stops early once every dominant weight below ``lam`` that is
    linked to ``lam`` (a superset of the answer) has been reached.
    """
    from .posets import dominant_lower_set, minimal_dominant, root_diff

    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError("strong_linkage_down needs a dominant weight")
    if exhaustive:
        floor = minimal_dominant(rs, lam)
        low = -(10 ** 9)
    else:
        floor = tuple(c - 1 for c in minimal_dominant(rs, [c + 1 for c in lam]))
        low = -1
    top = root_diff(rs, lam, floor)  # lam - floor in the alpha basis
    bound = {s for s in dominant_lower_set(rs, lam) if linked(rs, p, s, lam)}
    n = rs.rank
    seen = {lam}
    queue = deque([lam])
    out = {lam}
    roots = rs.positive_roots
    rws = rs._root_weights
    while queue and len(out) < len(bound):
        mu = queue.popleft()
        d = root_diff(rs, lam, mu)
        for k, row in enumerate(rs.coroots):
            c = sum((a + 1) * b for a, b in zip(mu, row))
            beta = roots[k]
            # step t = c - mp >= 1 and d + t beta <= top componentwise
            tmax = min((top[i] - d[i]) // beta[i] for i in range(n) if beta[i])
            if tmax < 1:
                continue
            m_hi = (c - 1) // p
            m_lo = -((tmax - c) // p)  # ceil((c - tmax) / p)
            bw = rws[k]
            for m in range(m_lo, m_hi + 1):
                t = c - m * p
                nu = tuple(a - t * b for a, b in zip(mu, bw))
                if nu in seen or min(nu) < low:
                    continue
                seen.add(nu)
                queue.append(nu)
                if is_dominant(nu):
                    out.add(nu)
    return out
