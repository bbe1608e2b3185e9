"""
Exact root system data for the irreducible types A-G (Bourbaki numbering).

Weights are integer tuples in the fundamental-weight basis; root combinations
are integer tuples in the simple-root basis.  Everything is computed with
Python integers and ``fractions.Fraction``; nothing is floating point.

Short roots have squared length 2.  In ``B_n`` the simple roots
``alpha_1..alpha_{n-1}`` are long, in ``C_n`` only ``alpha_n`` is long, in
``F_4`` ``alpha_1, alpha_2`` are long, and in ``G_2`` ``alpha_1`` is short and
``alpha_2`` is long.

``D_3`` is accepted and built with its own (D-style) numbering: its Dynkin
diagram is the path ``2 - 1 - 3``, so it is ``A_3`` under the index map
``D3_TO_A3`` (D index -> A index, zero based).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence

Weight = tuple[int, ...]
RootCombo = tuple[int, ...]

D3_TO_A3 = (1, 0, 2)

FAMILIES = "ABCDEFG"


class RootSystemError(ValueError):
    """Raised for an invalid (family, rank) pair or a bad root index."""


@dataclass(frozen=True, order=True)
class RootSystemId:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in FAMILIES:
            raise RootSystemError(f"unknown family {fam!r}; expected one of {FAMILIES}")
        if not isinstance(n, int) or n < 1:
            raise RootSystemError(f"rank must be a positive integer, got {n!r}")
        if fam == "B" and n < 2:
            raise RootSystemError("type B requires rank >= 2")
        if fam == "C" and n < 2:
            raise RootSystemError("type C requires rank >= 2")
        if fam == "D" and n < 3:
            raise RootSystemError("type D requires rank >= 3")
        if fam == "E" and n not in (6, 7, 8):
            raise RootSystemError("type E requires rank in {6, 7, 8}")
        if fam == "F" and n != 4:
            raise RootSystemError("type F requires rank 4")
        if fam == "G" and n != 2:
            raise RootSystemError("type G requires rank 2")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "RootSystemId":
        text = text.strip().upper()
        return cls(text[0], int(text[1:]))


def _simple_gram(family: str, n: int) -> list[list[int]]:
    """Gram matrix ``(alpha_i, alpha_j)`` of the simple roots, short length^2 = 2."""
    g = [[0] * n for _ in range(n)]

    def link(i, j, v):
        g[i - 1][j - 1] = g[j - 1][i - 1] = v

    if family == "A":
        lengths = [2] * n
        for i in range(1, n):
            link(i, i + 1, -1)
    elif family == "B":
        lengths = [4] * (n - 1) + [2]
        for i in range(1, n):
            link(i, i + 1, -2)
    elif family == "C":
        lengths = [2] * (n - 1) + [4]
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 1, n, -2)
    elif family == "D":
        lengths = [2] * n
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 2, n, -1)
    elif family == "E":
        lengths = [2] * n
        link(1, 3, -1)
        link(2, 4, -1)
        for i in range(3, n):
            link(i, i + 1, -1)
    elif family == "F":
        lengths = [4, 4, 2, 2]
        link(1, 2, -2)
        link(2, 3, -2)
        link(3, 4, -1)
    elif family == "G":
        lengths = [2, 6]
        link(1, 2, -3)
    else:  # pragma: no cover - guarded by RootSystemId
        raise RootSystemError(family)
    for i, ln in enumerate(lengths):
        g[i][i] = ln
    return g


def _integer_inverse(a: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Return ``(N, det)`` with ``a^{-1} = N / det`` and ``det > 0``.

    Fraction-free Gauss-Jordan on integer rows; rows are kept primitive.
    """
    n = len(a)
    m = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    sign = 1
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        pc = m[c]
        pv = pc[c]
        nz = [k for k, x in enumerate(pc) if x]
        for r in range(n):
            f = m[r][c]
            if r == c or f == 0:
                continue
            row = m[r]
            row = [x * pv for x in row]
            for k in nz:
                row[k] -= f * pc[k]
            g = 0
            for x in row:
                if x:
                    g = gcd(g, x)
            m[r] = [x // g for x in row] if g > 1 else row
    # m is now diagonal on the left: row i reads d_i e_i | d_i (a^{-1})_i
    inv = [[Fraction(x, m[i][i]) for x in m[i][n:]] for i in range(n)]
    den = 1
    for row in inv:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    det = _det(a)
    if det % den:  # pragma: no cover
        raise RootSystemError("inverse denominator does not divide the determinant")
    return [[int(x * det) for x in row] for row in inv], det


def _det(a: Sequence[Sequence[int]]) -> int:
    """Absolute determinant by Bareiss elimination."""
    n = len(a)
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            sw = next((r for r in range(k + 1, n) if m[r][k]), None)
            if sw is None:
                return 0
            m[k], m[sw] = m[sw], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return abs(m[n - 1][n - 1])


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root datum for one (possibly reducible) Cartan matrix.

    ``cartan[i][j] = (alpha_j, alpha_i^vee)``, so column ``j`` holds the weight
    coordinates of ``alpha_j``.  ``coroots[k]`` is the pairing row of positive
    root ``k``: ``(lam, beta_k^vee) = sum(c_i * lam_i)``; it is also the
    coefficient vector of ``beta_k^vee`` in the simple-coroot basis.
    """

    id: Optional[RootSystemId]
    label: str
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[RootCombo, ...]
    coroots: tuple[tuple[int, ...], ...]
    alpha0: Optional[RootCombo]
    highest_long: Optional[RootCombo]
    coxeter: Optional[int]
    w0_perm: tuple[int, ...]
    _inv: tuple[tuple[int, ...], ...] = field(repr=False)
    _det: int = field(repr=False)
    _root_index: dict = field(repr=False)
    _root_weights: tuple[Weight, ...] = field(repr=False)
    _gram_num: tuple[tuple[int, ...], ...] = field(repr=False)
    _gram_den: int = field(repr=False)
    # nonzero entries of each Cartan column, as (row, value)
    _cols: tuple = field(repr=False, default=())

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def family(self) -> Optional[str]:
        return self.id.family if self.id else None

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    def fundamental(self, j: int) -> Weight:
        """``omega_j`` with 1-based ``j``."""
        if not 1 <= j <= self.rank:
            raise RootSystemError(f"fundamental weight index {j} out of range")
        return tuple(int(i == j - 1) for i in range(self.rank))

    def simple_root(self, i: int) -> RootCombo:
        """Simple root ``alpha_{i+1}`` as a root combination (0-based ``i``)."""
        return tuple(int(k == i) for k in range(self.rank))

    def simple_root_weight(self, i: int) -> Weight:
        return tuple(row[i] for row in self.cartan)

    def root_index(self, beta: RootCombo) -> int:
        """Index of a positive root given as a root combination."""
        try:
            return self._root_index[tuple(beta)]
        except KeyError:
            raise RootSystemError(f"{beta} is not a positive root") from None

    def root_weight(self, k: int) -> Weight:
        """Weight coordinates of positive root ``k``."""
        return self._root_weights[k]

    def height(self, theta: RootCombo) -> int:
        return sum(theta)

    def is_short(self, k: int) -> bool:
        beta = self.positive_roots[k]
        return _sq_len(self, beta) == 2 * min(self.symmetrizer)

    def __str__(self):
        return self.label


def _sq_len(rs: RootSystem, theta: RootCombo) -> int:
    """Squared length of ``sum theta_i alpha_i`` (short simple roots: 2)."""
    d = rs.symmetrizer
    a = rs.cartan
    n = rs.rank
    # (alpha_i, alpha_j) = d_i * a[i][j]
    return sum(theta[i] * theta[j] * d[i] * a[i][j] for i in range(n) for j in range(n))


def _positive_roots(cartan, n) -> list[RootCombo]:
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    rows = [[(j, c) for j, c in enumerate(cartan[i]) if c] for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pair = sum(beta[j] * c for j, c in rows[i])
                # r = how far the alpha_i-string extends downward from beta
                r = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        r += 1
                    else:
                        break
                if r - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=lambda b: (sum(b), b))


def from_gram(gram: Sequence[Sequence[int]], rid: Optional[RootSystemId] = None,
              label: Optional[str] = None) -> RootSystem:
    """Build a root system from the Gram matrix of its simple roots.

    Reducible inputs (e.g. ``A1 x A1``) are allowed; for those ``alpha0``,
    ``highest_long`` and ``coxeter`` are ``None``.
    """
    n = len(gram)
    for i in range(n):
        if gram[i][i] % 2:
            raise RootSystemError("simple root squared lengths must be even")
    sym = tuple(gram[i][i] // 2 for i in range(n))
    cartan = tuple(tuple(2 * gram[i][j] // gram[i][i] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            if 2 * gram[i][j] % gram[i][i]:
                raise RootSystemError("Gram matrix does not give an integral Cartan matrix")
    roots = _positive_roots(cartan, n)
    index = {b: k for k, b in enumerate(roots)}
    min_d = min(sym)
    coroots = []
    lengths = []
    gram_nz = [(i, j, gram[i][j]) for i in range(n) for j in range(n) if gram[i][j]]
    for b in roots:
        ln = sum(b[i] * b[j] * x for i, j, x in gram_nz)
        db = ln // 2
        lengths.append(ln)
        row = []
        for i in range(n):
            num = b[i] * sym[i]
            if num % db:
                raise RootSystemError("non-integral coroot")  # pragma: no cover
            row.append(num // db)
        coroots.append(tuple(row))
    cart_rows = [[(j, c) for j, c in enumerate(cartan[i]) if c] for i in range(n)]
    root_weights = tuple(
        tuple(sum(c * b[j] for j, c in cart_rows[i]) for i in range(n)) for b in roots
    )
    inv, det = _integer_inverse(cartan)
    # (lam, mu) = sum_j lam_j d_j (A^{-1} mu)_j  -> Gram in the omega basis
    gnum = tuple(tuple(sym[i] * inv[i][k] for k in range(n)) for i in range(n))
    g = 0
    for row in gnum:
        for x in row:
            g = gcd(g, x)
    g = gcd(g, det)
    gnum = tuple(tuple(x // g for x in row) for row in gnum)
    gden = det // g

    irreducible = rid is not None
    alpha0 = highest_long = coxeter = None
    if irreducible:
        short_len = 2 * min_d
        highest_long = roots[-1]
        alpha0 = max((b for b, ln in zip(roots, lengths) if ln == short_len),
                      key=lambda b: (sum(b), b))
        a0row = coroots[index[alpha0]]
        coxeter = sum(a0row) + 1
    rs = RootSystem(
        id=rid,
        label=label or (str(rid) if rid else "?"),
        cartan=cartan,
        symmetrizer=sym,
        positive_roots=tuple(roots),
        coroots=tuple(coroots),
        alpha0=alpha0,
        highest_long=highest_long,
        coxeter=coxeter,
        w0_perm=tuple(range(1, n + 1)),
        _inv=tuple(tuple(r) for r in inv),
        _det=det,
        _root_index=index,
        _root_weights=root_weights,
        _gram_num=gnum,
        _gram_den=gden,
        _cols=tuple(tuple((k, cartan[k][i]) for k in range(n) if cartan[k][i]) for i in range(n)),
    )
    perm = []
    for i in range(n):
        neg = tuple(-int(k == i) for k in range(n))
        dom = _dominant_fast(rs, neg)
        perm.append(dom.index(1) + 1)
    object.__setattr__(rs, "w0_perm", tuple(perm))
    return rs


def _dominant_fast(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """Dominant W-conjugate of ``lam`` (linear action), no witness."""
    x = list(lam)
    cols = rs._cols
    n = len(x)
    i = 0
    while i < n:
        c = x[i]
        if c < 0:
            for k, a in cols[i]:
                x[k] -= c * a
            # only neighbours of i can have turned negative
            i = min(i, min(k for k, _ in cols[i] if k != i) if len(cols[i]) > 1 else i)
            continue
        i += 1
    return tuple(x)


def build(rid: RootSystemId | str) -> RootSystem:
    """Construct the root system of an irreducible type (cached per type).

    Parameters
    ----------
    rid : RootSystemId or str
        E.g. ``RootSystemId("E", 8)`` or ``"E8"``.
    """
    if isinstance(rid, str):
        rid = RootSystemId.parse(rid)
    return _build_cached(rid)


@lru_cache(maxsize=None)
def _build_cached(rid: RootSystemId) -> RootSystem:
    return from_gram(_simple_gram(rid.family, rid.rank), rid)


def subsystem(rs: RootSystem, J: Sequence[int]) -> RootSystem:
    """Root system spanned by the simple roots with (0-based) indices ``J``."""
    J = list(J)
    gram = [[rs.symmetrizer[i] * rs.cartan[i][j] for j in J] for i in J]
    label = f"{rs.label}[{','.join(str(j + 1) for j in J)}]"
    return from_gram(gram, None, label) if J else _empty_system(label)


def _empty_system(label):
    return RootSystem(None, label, (), (), (), (), None, None, None, (), (), 1, {}, (), (), 1)


def pairing(rs: RootSystem, lam: Sequence[int], k: int) -> int:
    """``(lam, beta_k^vee)`` for positive root index ``k``."""
    if not 0 <= k < len(rs.positive_roots):
        raise RootSystemError(f"positive root index {k} out of range")
    row = rs.coroots[k]
    return sum(a * b for a, b in zip(lam, row))


def root_to_weight(rs: RootSystem, theta: Sequence[int]) -> Weight:
    """Weight coordinates of ``sum theta_i alpha_i``."""
    n = rs.rank
    cart = rs.cartan
    return tuple(sum(cart[i][j] * theta[j] for j in range(n)) for i in range(n))


def root_coords(rs: RootSystem, lam: Sequence[int]) -> tuple[Fraction, ...]:
    """Rational coordinates of ``lam`` in the simple-root basis."""
    inv, det = rs._inv, rs._det
    return tuple(Fraction(sum(r[k] * lam[k] for k in range(rs.rank)), det) for r in inv)


def weight_to_root_combo(rs: RootSystem, lam: Sequence[int]) -> Optional[RootCombo]:
    """Root-basis coordinates of ``lam`` if it lies in the root lattice, else ``None``."""
    inv, det = rs._inv, rs._det
    out = []
    for r in inv:
        s = sum(r[k] * lam[k] for k in range(rs.rank))
        if s % det:
            return None
        out.append(s // det)
    return tuple(out)


def inner(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    """W-invariant inner product of two weights (short roots: length^2 2)."""
    return Fraction(inner_scaled(rs, lam, mu), rs._gram_den)


def inner_scaled(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> int:
    """``inner(lam, mu) * rs._gram_den`` as an integer (hot-path helper)."""
    g = rs._gram_num
    n = rs.rank
    return sum(lam[i] * sum(g[i][k] * mu[k] for k in range(n)) for i in range(n) if lam[i])


def coroot_pairing_via_inner(rs: RootSystem, lam: Sequence[int], k: int) -> Fraction:
    """``2 (lam, beta) / (beta, beta)``; independent route to :func:`pairing`."""
    b = rs.root_weight(k)
    return 2 * inner(rs, lam, b) / inner(rs, b, b)


def weyl_group_order(rs: RootSystem) -> int:
    """``|W|`` via the product of ``(ht+1)/ht`` over positive roots."""
    num, den = 1, 1
    for b in rs.positive_roots:
        h = sum(b)
        num *= h + 1
        den *= h
    assert num % den == 0
    return num // den


CLASSICAL_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def all_ids(max_classical: int = 8) -> list[RootSystemId]:
    """Every irreducible type of rank ``<= max_classical`` plus E6-E8, F4, G2."""
    out = []
    for n in range(1, max_classical + 1):
        out.append(RootSystemId("A", n))
    for n in range(2, max_classical + 1):
        out.append(RootSystemId("B", n))
    for n in range(2, max_classical + 1):
        out.append(RootSystemId("C", n))
    for n in range(3, max_classical + 1):
        out.append(RootSystemId("D", n))
    out += [RootSystemId("E", 6), RootSystemId("E", 7), RootSystemId("E", 8),
            RootSystemId("F", 4), RootSystemId("G", 2)]
    return out


EXCEPTIONAL = ("E6", "E7", "E8", "F4", "G2")


def build_label(text: str) -> RootSystem:
    """Like :func:`build` but also accepts products such as ``"A1xA1"``.

    Components are placed block-diagonally in the order written.
    """
    parts = [t for t in text.strip().upper().split("X") if t]
    if len(parts) == 1:
        return build(parts[0])
    comps = [build(t) for t in parts]
    n = sum(c.rank for c in comps)
    gram = [[0] * n for _ in range(n)]
    off = 0
    for c in comps:
        for i in range(c.rank):
            for j in range(c.rank):
                gram[off + i][off + j] = c.symmetrizer[i] * c.cartan[i][j]
        off += c.rank
    return from_gram(gram, None, "x".join(str(c) for c in comps))
