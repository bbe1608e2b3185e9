"""
Decision procedure for ``dim H^1(G(F_q), L(lam))`` with ``lam`` below a
fundamental weight, and the symbolic ``U_1``-socle description.

The procedure is a fixed cascade of rules.  Each rule encodes one published
result with its hypotheses taken literally; nothing is extrapolated.  The
first rule that applies decides the query and every rule consulted is
recorded in the trace.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .posets import is_minuscule, under_fundamental
from .rootsys import RootSystem, RootSystemId, Weight, build, weight_to_root_combo
from .weyl import is_dominant, linked, strong_linkage_down

PROVED_ZERO = "ProvedZero"
PROVED_ONE = "ProvedOne"
OPEN_CASE = "OpenCase"
OUT_OF_SCOPE = "OutOfScope"

# (system, p, lambda) with H^1 = k for lambda not fundamental
NONFUNDAMENTAL_ONE = {
    ("F4", 13, (0, 0, 0, 2)),
    ("E7", 19, (2, 0, 0, 0, 0, 0, 0)),
    ("E8", 31, (0, 0, 0, 0, 0, 0, 0, 2)),
}
# (system, p, j) with H^1(L(omega_j)) = k
FUNDAMENTAL_ONE = {("E7", 7, 6)}
UNDECIDED = {
    ("E7", 5, (0, 0, 0, 0, 0, 0, 2)),
    ("E7", 7, (0, 1, 0, 0, 0, 0, 1)),
    ("E8", 7, (0, 0, 0, 0, 0, 0, 2, 0)),
    ("E8", 7, (1, 0, 0, 0, 0, 0, 1, 0)),
    ("E8", 7, (0, 1, 0, 0, 0, 0, 0, 1)),
}
TRANSLATION_ZERO = {
    ("E8", 31, (0, 0, 0, 0, 0, 0, 1, 1)),
    ("E8", 31, (0, 0, 0, 0, 0, 1, 0, 1)),
}
COMPUTED_ZERO = {("E8", 7, (0, 0, 1, 0, 0, 0, 0, 0))}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Query:
    system: RootSystemId
    p: int
    r: int
    lam: Weight

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.r < 1:
            raise ValueError("r must be a positive integer")
        if len(self.lam) != self.system.rank:
            raise ValueError(f"weight has {len(self.lam)} coordinates, rank is {self.system.rank}")
        if not is_dominant(self.lam):
            raise ValueError("weight must be dominant")

    @property
    def q(self) -> int:
        return self.p ** self.r

    def to_json(self) -> dict:
        return {"system": str(self.system), "p": self.p, "r": self.r, "lambda": list(self.lam)}


@dataclass
class RuleEvaluation:
    rule: str
    fired: bool
    note: str = ""

    def to_json(self) -> dict:
        return {"rule": self.rule, "fired": self.fired, "note": self.note}


@dataclass
class H1Result:
    status: str
    rule: str
    trace: list[RuleEvaluation] = field(default_factory=list)
    violated: Optional[str] = None

    @property
    def dim(self) -> Optional[int]:
        return {PROVED_ZERO: 0, PROVED_ONE: 1}.get(self.status)

    def to_json(self) -> dict:
        out = {"status": self.status, "dim": self.dim, "rule": self.rule,
               "trace": [t.to_json() for t in self.trace]}
        if self.violated:
            out["violated_hypothesis"] = self.violated
        return out


def ks_cn(n: int, p: int, j: int) -> int:
    """Type ``C_n`` criterion in terms of the base-``p`` digits of ``n + 1``.

    Returns 1 iff ``j = 2 b_i p^i`` for some digit ``b_i != 0`` with ``i`` below
    the leading position ``t``.
    """
    if n < 3 or p < 3:
        raise ValueError("ks_cn needs n >= 3 and an odd prime p")
    digits = []
    m = n + 1
    while m:
        digits.append(m % p)
        m //= p
    t = len(digits) - 1
    for i in range(t):
        if digits[i] and j == 2 * digits[i] * p ** i:
            return 1
    return 0


def _label(rs: RootSystem) -> str:
    return f"{rs.family}{rs.rank}"


def h1_dim(q: Query) -> H1Result:
    """Run the rule cascade on ``q``; the first rule that applies decides it."""
    rs = build(q.system)
    fam, n, p, lam = q.system.family, q.system.rank, q.p, tuple(q.lam)
    label = _label(rs)
    trace: list[RuleEvaluation] = []

    def done(status, rule, note="", violated=None):
        trace.append(RuleEvaluation(rule, True, note))
        return H1Result(status, rule, trace, violated)

    def skip(rule, note=""):
        trace.append(RuleEvaluation(rule, False, note))

    j = under_fundamental(rs, lam)
    if j is None:
        return done(OUT_OF_SCOPE, "below-fundamental", "lambda is not below any fundamental weight",
                    "lambda <= omega_j for some j")
    skip("below-fundamental", f"lambda <= omega_{j}")

    if q.q <= 3:
        return done(OUT_OF_SCOPE, "q-greater-than-3", f"q = {q.q}", "q > 3")
    skip("q-greater-than-3", f"q = {q.q}")

    if not any(lam):
        return done(PROVED_ZERO, "trivial-module", "H^1 with trivial coefficients vanishes for q > 3")
    skip("trivial-module")

    if (fam in "AD" and p > 2) or (fam == "B" and p > 3):
        return done(PROVED_ZERO, "induced-equals-simple",
                    "L(lambda) = H^0(lambda) for every lambda below a fundamental weight")
    skip("induced-equals-simple")

    if fam == "C" and p > 3:
        if n == 2:
            return done(PROVED_ZERO, "type-C-digits", "no exception in rank 2")
        fund = lam.count(0) == n - 1 and max(lam) == 1
        k = lam.index(1) + 1 if fund else None
        if fund and ks_cn(n, p, k):
            return done(PROVED_ONE, "type-C-digits", f"j = {k} matches a digit of n+1 = {n + 1} in base {p}")
        return done(PROVED_ZERO, "type-C-digits")
    skip("type-C-digits")

    if fam == "G" and p > 3:
        return done(PROVED_ZERO, "type-G2", "L(lambda) = H^0(lambda) and the U_1 weights are not q-1 divisible")
    skip("type-G2")

    if fam not in "EF":
        return done(OUT_OF_SCOPE, "prime-bound", f"p = {p} below the bound for type {fam}",
                    _prime_bound_text(fam))

    is_fund = sum(lam) == 1
    fund_bound = 5 if label == "E8" else 3
    if is_fund:
        j_exact = lam.index(1) + 1
        if p > fund_bound:
            if (label, p, j_exact) in FUNDAMENTAL_ONE:
                return done(PROVED_ONE, "fundamental-table", f"{label}, p = {p}, j = {j_exact}")
            return done(PROVED_ZERO, "fundamental-table")
        skip("fundamental-table", f"needs p > {fund_bound}")
    else:
        skip("fundamental-table", "lambda is not fundamental")

    nonfund_bound = 7 if label in ("E7", "E8") else 3
    if not is_fund and p > nonfund_bound:
        if (label, p, lam) in NONFUNDAMENTAL_ONE:
            return done(PROVED_ONE, "nonfundamental-table", f"{label}, p = {p}")
        return done(PROVED_ZERO, "nonfundamental-table")
    skip("nonfundamental-table", f"needs a non-fundamental weight and p > {nonfund_bound}")

    if (label, p, lam) in UNDECIDED:
        return done(OPEN_CASE, "open-cases", f"{label}, p = {p}")
    skip("open-cases")

    if (label, p, lam) in TRANSLATION_ZERO:
        return done(PROVED_ZERO, "translation-functor")
    skip("translation-functor")

    if p > 3 and not (label == "E8" and p <= 5):
        if not linked(rs, p, lam, rs.zero):
            return done(PROVED_ZERO, "not-linked-to-zero", f"lambda and 0 lie in different W_p dot-orbits")
        if (label, p, lam) in COMPUTED_ZERO:
            return done(PROVED_ZERO, "not-linked-to-zero", "L(lambda) = H^0(lambda)")
        skip("not-linked-to-zero", "lambda is linked to 0")
        return done(OUT_OF_SCOPE, "no-applicable-result", "linked to 0 with no result covering it",
                    "a result covering this linked weight")
    skip("not-linked-to-zero", "prime below the bound")
    return done(OUT_OF_SCOPE, "prime-bound", f"p = {p} below the bound for {label}",
                _prime_bound_text(label))


def _prime_bound_text(kind: str) -> str:
    return {
        "A": "p > 2", "D": "p > 2", "B": "p > 3", "C": "p > 3", "G": "p > 3",
        "E6": "p > 3", "F4": "p > 3", "E7": "p > 3", "E8": "p > 5",
    }.get(kind, "p above the type bound")


@dataclass
class SocleDescription:
    """``kostant``: weights ``-s_alpha . lam``; ``kl``: pairs ``(sigma, m_sigma)``.

    ``m_sigma`` is an int when known and the string ``"m_sigma"`` otherwise.
    """

    lam: Weight
    p: int
    kostant: list[tuple[int, Weight]]
    kl: list[tuple[Weight, object]]

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam), "p": self.p,
            "kostant": [{"alpha": a + 1, "weight": list(w)} for a, w in self.kostant],
            "kl": [{"sigma": list(s), "m": m} for s, m in self.kl],
        }


def socle_u1(rs: RootSystem, p: int, lam: Sequence[int], resolve_zero: bool = True) -> SocleDescription:
    """Weights in the ``B/U_1``-socle of ``Ext^1_{U_1}(L(lam), k)``.

    Parameters
    ----------
    resolve_zero : bool
        When ``lam`` sits below a fundamental weight, fill in ``m_0`` from
        :func:`h1_dim` (with ``r = 2`` so that ``q > 3``) if that query is decided.
    """
    lam = tuple(lam)
    if p < 3:
        raise ValueError("socle description needs p > 2")
    if not is_dominant(lam) or any(c >= p for c in lam):
        raise ValueError("lambda must be p-restricted")
    n = rs.rank
    kostant = []
    for i in range(n):
        if lam[i] == p - 1:
            continue
        c = lam[i] + 1
        w = tuple(-a + c * b for a, b in zip(lam, rs.simple_root_weight(i)))
        kostant.append((i, w))
    kl: list[tuple[Weight, object]] = []
    fam = rs.family
    if fam in ("A", "B", "D", "G"):
        # L(lam) = H^0(lam) for lam below a fundamental weight; all m_sigma vanish
        if under_fundamental(rs, lam) is not None:
            return SocleDescription(lam, p, kostant, kl)
    for sigma in sorted(strong_linkage_down(rs, p, lam), key=lambda s: (-sum(s), s)):
        if sigma == lam:
            continue
        m: object = "m_sigma"
        if resolve_zero and not any(sigma) and rs.id is not None and under_fundamental(rs, lam) is not None:
            res = h1_dim(Query(rs.id, p, 2, lam))
            if res.dim is not None:
                m = res.dim
        kl.append((sigma, m))
    return SocleDescription(lam, p, kostant, kl)


def minuscule_list(rs: RootSystem) -> list[Weight]:
    """Fundamental weights that are minuscule."""
    return [rs.fundamental(j) for j in range(1, rs.rank + 1) if is_minuscule(rs, rs.fundamental(j))]


def lattice_cross_check(rs: RootSystem, lam: Sequence[int], p: int) -> bool:
    """Outside the root lattice implies not linked to 0 (necessary condition)."""
    if weight_to_root_combo(rs, lam) is None:
        return not linked(rs, p, lam, rs.zero)
    return True
