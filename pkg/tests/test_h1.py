import pytest
from hypothesis import given, settings, strategies as st

from chevh1.h1 import (OPEN_CASE, OUT_OF_SCOPE, PROVED_ONE, PROVED_ZERO, Query, SocleDescription,
                       h1_dim, is_prime, ks_cn, lattice_cross_check, minuscule_list, socle_u1)
from chevh1.posets import leq, weights_below_fundamentals
from chevh1.rootsys import RootSystemId, all_ids, build, weight_to_root_combo
from chevh1.weyl import linked


def run(label, p, lam, r=1):
    rid = RootSystemId.parse(label)
    return h1_dim(Query(rid, p, r, tuple(lam)))


def test_ks_cn_examples():
    assert ks_cn(5, 5, 2) == 1
    assert [ks_cn(5, 5, j) for j in range(6)] == [0, 0, 1, 0, 0, 0]
    assert not any(ks_cn(3, 5, j) for j in range(4))
    for n in range(3, 60):
        for p in (3, 5, 7):
            for j in range(1, n + 1, 2):
                assert ks_cn(n, p, j) == 0
    with pytest.raises(ValueError):
        ks_cn(2, 5, 1)


def test_headline_examples():
    res = run("C5", 5, (0, 1, 0, 0, 0))
    assert (res.status, res.rule) == (PROVED_ONE, "type-C-digits")
    assert run("F4", 13, (0, 0, 0, 2)).status == PROVED_ONE
    assert run("F4", 13, (0, 0, 0, 2)).dim == 1
    for i in range(1, 6):
        lam = [0] * 5
        lam[i - 1] = 1
        assert run("B5", 5, lam).status == PROVED_ZERO
    assert run("E7", 5, (0, 0, 0, 0, 0, 0, 2)).status == OPEN_CASE
    res = run("D4", 3, (0, 0, 0, 1))
    assert res.status == OUT_OF_SCOPE and res.violated == "q > 3"
    assert run("D4", 3, (0, 0, 0, 1), r=2).status == PROVED_ZERO


def test_out_of_scope_cases_name_the_hypothesis():
    res = run("A2", 5, (1, 1))
    assert res.status == OUT_OF_SCOPE and res.rule == "below-fundamental" and res.violated
    res = run("E8", 5, (0, 1, 0, 0, 0, 0, 0, 1))
    assert res.status == OUT_OF_SCOPE and res.violated == "p > 5"
    res = run("C4", 3, (0, 1, 0, 0), r=2)
    assert res.status == OUT_OF_SCOPE and res.rule == "prime-bound"


def test_e8_computed_zero_and_translation_rows():
    assert run("E8", 7, (0, 0, 1, 0, 0, 0, 0, 0)).status == PROVED_ZERO
    assert run("E8", 31, (0, 0, 0, 0, 0, 0, 1, 1)).status == PROVED_ZERO
    assert run("E7", 7, (0, 0, 0, 0, 0, 1, 0)).status == PROVED_ONE


def test_query_validation():
    rid = RootSystemId("A", 2)
    with pytest.raises(ValueError):
        Query(rid, 4, 1, (1, 0))
    with pytest.raises(ValueError):
        Query(rid, 5, 0, (1, 0))
    with pytest.raises(ValueError):
        Query(rid, 5, 1, (1, 0, 0))
    with pytest.raises(ValueError):
        Query(rid, 5, 1, (-1, 0))
    q = Query(rid, 5, 2, (1, 0))
    assert q.q == 25 and q.to_json() == {"system": "A2", "p": 5, "r": 2, "lambda": [1, 0]}


primes = st.sampled_from([p for p in range(2, 40) if is_prime(p)])
systems = st.sampled_from([str(r) for r in all_ids(6)])


@settings(max_examples=300, deadline=None)
@given(systems, primes, st.integers(1, 3), st.data())
def test_h1_total_and_well_formed(label, p, r, data):
    rs = build(label)
    lam = data.draw(st.lists(st.integers(0, 3), min_size=rs.rank, max_size=rs.rank))
    res = h1_dim(Query(rs.id, p, r, tuple(lam)))
    assert res.status in (PROVED_ZERO, PROVED_ONE, OPEN_CASE, OUT_OF_SCOPE)
    assert res.trace and res.trace[-1].fired and res.trace[-1].rule == res.rule
    assert sum(t.fired for t in res.trace) == 1
    assert (res.violated is not None) == (res.status == OUT_OF_SCOPE)
    assert res.dim == {PROVED_ZERO: 0, PROVED_ONE: 1}.get(res.status)
    # r only matters through the q > 3 gate
    if p > 3:
        assert h1_dim(Query(rs.id, p, 1, tuple(lam))).status == res.status


def test_linkage_rule_is_consistent_with_lattice():
    for label in ["E6", "E7", "E8", "F4"]:
        rs = build(label)
        for p in [5, 7, 11, 13]:
            for lam in weights_below_fundamentals(rs):
                res = h1_dim(Query(rs.id, p, 1, lam))
                if res.rule == "not-linked-to-zero" and weight_to_root_combo(rs, lam) is None:
                    assert not linked(rs, p, lam, rs.zero)
                assert lattice_cross_check(rs, lam, p)


def test_proved_one_only_from_tables():
    allowed = {("F4", 13, (0, 0, 0, 2)), ("E7", 19, (2, 0, 0, 0, 0, 0, 0)),
               ("E7", 7, (0, 0, 0, 0, 0, 1, 0)), ("E8", 31, (0, 0, 0, 0, 0, 0, 0, 2))}
    for label in ["E6", "E7", "E8", "F4", "G2"]:
        rs = build(label)
        for p in [p for p in range(2, 38) if is_prime(p)]:
            for lam in weights_below_fundamentals(rs):
                if h1_dim(Query(rs.id, p, 1, lam)).status == PROVED_ONE:
                    assert (label, p, lam) in allowed


def test_minuscule_list():
    a5 = build("A5")
    assert minuscule_list(a5) == [a5.fundamental(j) for j in range(1, 6)]
    e7 = build("E7")
    assert minuscule_list(e7) == [e7.fundamental(7)]
    assert minuscule_list(build("F4")) == []
    for rid in all_ids(10):
        rs = build(rid)
        for w in minuscule_list(rs):
            assert weight_to_root_combo(rs, w) is None


def test_socle_zero_weight_gives_simple_roots():
    g2 = build("G2")
    soc = socle_u1(g2, 7, (0, 0))
    assert soc.kostant == [(0, g2.simple_root_weight(0)), (1, g2.simple_root_weight(1))]
    assert soc.kl == []


def test_socle_types_abd_have_no_kl_part():
    for label, lam in [("A3", (0, 1, 0)), ("B3", (0, 1, 0)), ("D4", (0, 1, 0, 0)), ("G2", (0, 1))]:
        rs = build(label)
        soc = socle_u1(rs, 7, lam)
        assert soc.kl == []
        assert len({w for _, w in soc.kostant}) == len(soc.kostant)


def test_socle_g2_omega2_p7():
    g2 = build("G2")
    soc = socle_u1(g2, 7, (0, 1))
    assert len(soc.kostant) == 2
    assert [w for _, w in soc.kostant] == [(2, -2), (-6, 3)]  # -omega_2 + alpha_1 and -omega_2 + 2 alpha_2


def test_socle_f4_resolves_m0():
    f4 = build("F4")
    soc = socle_u1(f4, 13, (0, 0, 0, 2))
    assert ((0, 0, 0, 0), 1) in soc.kl
    for sigma, m in soc.kl:
        assert leq(f4, sigma, (0, 0, 0, 2)) and linked(f4, 13, sigma, (0, 0, 0, 2))
    soc2 = socle_u1(f4, 13, (0, 0, 0, 2), resolve_zero=False)
    assert ((0, 0, 0, 0), "m_sigma") in soc2.kl
    assert isinstance(SocleDescription.to_json(soc), dict)


def test_socle_kostant_skips_wall_coordinates():
    c3 = build("C3")
    soc = socle_u1(c3, 5, (4, 0, 0))
    assert [i for i, _ in soc.kostant] == [1, 2]


def test_socle_preconditions():
    a2 = build("A2")
    with pytest.raises(ValueError):
        socle_u1(a2, 2, (0, 0))
    with pytest.raises(ValueError):
        socle_u1(a2, 5, (5, 0))
