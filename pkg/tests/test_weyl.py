import random

import pytest
from hypothesis import given, settings, strategies as st

from brute import apply, brute_linked, brute_linked_bounded, cartan_of, weyl_group
from chevh1.paperchecks import residue_profile
from chevh1.posets import leq
from chevh1.rootsys import build
from chevh1.weyl import (OrbitTooLarge, dot_canonical_rep, dot_reflect, dual_weight, in_closed_alcove,
                         is_dominant, linked, make_dominant, orbit, reflect, replay, s0_dot,
                         simple_dot_reflect, simple_reflect, strong_linkage_down)

TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"]
PRIMES = [2, 3, 5, 7, 11, 13]


def test_simple_dot_reflection_of_zero_is_minus_alpha():
    for label in ["A2", "G2", "E8"]:
        rs = build(label)
        for i in range(rs.rank):
            assert simple_dot_reflect(rs, i, rs.zero) == tuple(-c for c in rs.simple_root_weight(i))


def test_s0_examples():
    f4 = build("F4")
    assert s0_dot(f4, 13, f4.zero) == (0, 0, 0, 2)
    e8 = build("E8")
    # apply s_8 first, then s_0
    assert s0_dot(e8, 31, simple_dot_reflect(e8, 7, e8.zero)) == (0, 0, 0, 0, 0, 0, 1, 1)


def test_dot_reflect_m_zero_is_finite_dot_action():
    rs = build("B3")
    lam = (2, -1, 3)
    for k in range(len(rs.positive_roots)):
        lin = reflect(rs, k, [c + 1 for c in lam])
        assert dot_reflect(rs, k, 0, 7, lam) == tuple(c - 1 for c in lin)


def test_make_dominant_examples():
    a2 = build("A2")
    assert make_dominant(a2, (-1, 0))[0] == (0, 1)
    assert make_dominant(a2, (2, 3)) == ((2, 3), [])
    e6 = build("E6")
    assert dual_weight(e6, e6.fundamental(1)) == e6.fundamental(6)
    assert dual_weight(e6, e6.zero) == e6.zero
    for label in ["E7", "E8", "F4", "G2", "B4", "C3"]:
        rs = build(label)
        lam = tuple(range(1, rs.rank + 1))
        assert dual_weight(rs, lam) == lam


def test_make_dominant_against_group_enumeration():
    rng = random.Random(7)
    for label in ["A2", "B2", "G2", "B3"]:
        rs = build(label)
        W = weyl_group(cartan_of(rs))
        for _ in range(30):
            lam = tuple(rng.randint(-5, 5) for _ in range(rs.rank))
            dom, word = make_dominant(rs, lam)
            assert is_dominant(dom)
            assert dom in {apply(w, lam) for w in W}
            assert replay(rs, word, lam) == dom


def test_orbit_examples_and_guard():
    a2 = build("A2")
    assert orbit(a2, (0, 0)) == {(0, 0)}
    assert len(orbit(a2, (1, 0))) == 3
    g2 = build("G2")
    k0 = g2.root_index(g2.alpha0)
    assert orbit(g2, g2.coroots[k0], kind="coroot") == {
        (2, 3), (-2, -3), (1, 0), (-1, 0), (1, 3), (-1, -3)}
    with pytest.raises(OrbitTooLarge):
        orbit(build("E8"), (1,) * 8, guard=1000)
    with pytest.raises(ValueError):
        orbit(a2, (1, 0), kind="spinor")


def test_orbit_sizes_match_group():
    for label in ["A2", "B2", "G2", "B3", "C3"]:
        rs = build(label)
        W = weyl_group(cartan_of(rs))
        for lam in [(1,) + (0,) * (rs.rank - 1), (0,) * (rs.rank - 1) + (2,), (1,) * rs.rank]:
            assert orbit(rs, lam) == {apply(w, lam) for w in W}


def test_canonical_rep_examples():
    f4 = build("F4")
    assert dot_canonical_rep(f4, 13, (0, 0, 0, 2))[0] == f4.zero
    a2 = build("A2")
    assert dot_canonical_rep(a2, 5, (1, 1)) == ((1, 1), [])
    with pytest.raises(ValueError):
        dot_canonical_rep(a2, 1, (0, 0))


def test_linked_examples():
    e8 = build("E8")
    w2w8 = (0, 1, 0, 0, 0, 0, 0, 1)
    assert [p for p in [5, 7, 11, 13, 17, 19, 23, 29, 31] if linked(e8, p, w2w8, e8.zero)] == [5, 7]
    e6 = build("E6")
    assert not linked(e6, 7, (0, 1, 0, 0, 0, 0), e6.zero)
    # omega_1 of E6 lies outside the root lattice, so never linked to 0
    assert not any(linked(e6, p, e6.fundamental(1), e6.zero) for p in PRIMES)


# --- alcove engine properties -------------------------------------------------

def _weight(rank):
    return st.lists(st.integers(-40, 40), min_size=rank, max_size=rank).map(tuple)


@st.composite
def system_weight_prime(draw):
    label = draw(st.sampled_from(TYPES))
    rs = build(label)
    return rs, draw(_weight(rs.rank)), draw(st.sampled_from(PRIMES))


@settings(max_examples=300, deadline=None)
@given(system_weight_prime())
def test_canonical_rep_in_alcove_idempotent_and_replayable(case):
    rs, lam, p = case
    rep, word = dot_canonical_rep(rs, p, lam)
    assert in_closed_alcove(rs, p, rep)
    assert dot_canonical_rep(rs, p, rep) == (rep, [])
    assert replay(rs, word, lam, p=p, dot=True) == rep


@settings(max_examples=200, deadline=None)
@given(system_weight_prime(), st.lists(st.tuples(st.integers(0, 200), st.integers(-3, 3)), max_size=8))
def test_canonical_rep_constant_on_orbits(case, steps):
    rs, lam, p = case
    word = [("a", k % len(rs.positive_roots), m) for k, m in steps]
    moved = replay(rs, word, lam, p=p, dot=True)
    assert dot_canonical_rep(rs, p, moved)[0] == dot_canonical_rep(rs, p, lam)[0]


@settings(max_examples=200, deadline=None)
@given(system_weight_prime(), st.lists(st.tuples(st.integers(0, 200), st.integers(-3, 3)), max_size=6))
def test_residue_profile_is_orbit_invariant(case, steps):
    rs, lam, p = case
    word = [("a", k % len(rs.positive_roots), m) for k, m in steps]
    assert residue_profile(rs, p, replay(rs, word, lam, p=p, dot=True)) == residue_profile(rs, p, lam)


@settings(max_examples=100, deadline=None)
@given(system_weight_prime())
def test_linear_reflections_are_involutions(case):
    rs, lam, _ = case
    for i in range(rs.rank):
        assert simple_reflect(rs, i, simple_reflect(rs, i, lam)) == lam
        assert simple_dot_reflect(rs, i, simple_dot_reflect(rs, i, lam)) == lam


# --- linkage against brute-force enumeration -----------------------------------

def _random_linked_partner(rng, W, cartan, p, lam, box):
    n = len(lam)
    x = tuple(c + 1 for c in lam)
    alpha = [tuple(cartan[r][j] for r in range(n)) for j in range(n)]
    Wl = list(W)
    for _ in range(200):
        w = rng.choice(Wl)
        g = [rng.randint(-4, 4) for _ in range(n)]
        y = apply(w, x)
        mu = tuple(y[r] + p * sum(g[j] * alpha[j][r] for j in range(n)) - 1 for r in range(n))
        if max(abs(c) for c in mu) <= box:
            return mu
    return lam


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
@pytest.mark.parametrize("p", [3, 5])
def test_linked_matches_brute_force(label, p):
    rs = build(label)
    cartan = cartan_of(rs)
    W = weyl_group(cartan)
    rng = random.Random(f"{label}-{p}")
    box = 20
    pairs = []
    if rs.rank == 1:
        pairs = [((a,), (b,)) for a in range(-box, box + 1) for b in range(-box, box + 1)]
    else:
        for _ in range(300):
            lam = tuple(rng.randint(-box, box) for _ in range(rs.rank))
            pairs.append((lam, tuple(rng.randint(-box, box) for _ in range(rs.rank))))
            pairs.append((lam, _random_linked_partner(rng, W, cartan, p, lam, box)))
    hits = 0
    for lam, mu in pairs:
        want = brute_linked(cartan, W, p, lam, mu)
        hits += want
        assert linked(rs, p, lam, mu) == want, (lam, mu)
    assert hits > len(pairs) // 10  # the sample exercises both outcomes


def test_lattice_oracle_agrees_with_bounded_enumeration():
    rs = build("A2")
    cartan = cartan_of(rs)
    W = weyl_group(cartan)
    rng = random.Random(3)
    for _ in range(60):
        lam = tuple(rng.randint(-6, 6) for _ in range(2))
        mu = _random_linked_partner(rng, W, cartan, 3, lam, 6) if rng.random() < 0.5 else \
            tuple(rng.randint(-6, 6) for _ in range(2))
        assert brute_linked(cartan, W, 3, lam, mu) == brute_linked_bounded(cartan, W, 3, lam, mu, 8)


# --- strong linkage -------------------------------------------------------------

def test_strong_linkage_examples():
    f4 = build("F4")
    assert f4.zero in strong_linkage_down(f4, 13, (0, 0, 0, 2))
    a2 = build("A2")
    assert strong_linkage_down(a2, 101, (3, 2)) == {(3, 2)}


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "B3", "C3"])
def test_strong_linkage_restricted_search_equals_exhaustive(label):
    rs = build(label)
    rng = random.Random(label)
    for _ in range(12):
        lam = tuple(rng.randint(0, 4) for _ in range(rs.rank))
        p = rng.choice([2, 3, 5, 7])
        assert strong_linkage_down(rs, p, lam) == strong_linkage_down(rs, p, lam, exhaustive=True)


@pytest.mark.parametrize("label", ["G2", "F4", "E6", "E7"])
def test_strong_linkage_refines_dominance_within_linkage_class(label):
    rs = build(label)
    for j in range(1, rs.rank + 1):
        lam = rs.fundamental(j)
        for p in [5, 7, 13]:
            got = strong_linkage_down(rs, p, lam)
            assert lam in got
            for s in got:
                assert is_dominant(s) and leq(rs, s, lam) and linked(rs, p, s, lam)


def test_strong_linkage_rejects_non_dominant():
    with pytest.raises(ValueError):
        strong_linkage_down(build("A2"), 5, (-1, 2))
