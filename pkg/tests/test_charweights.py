import pytest

from brute import cartan_of, support_closure, weyl_group
from chevh1.charweights import (MultiplicityError, RankGuardError, dim_from_mults, dominant_mults,
                                format_table, levi_weight_drops, max_pairing_over_support,
                                orbit_size, support_by_string_closure, support_to_json,
                                weight_support, weyl_dim)
from chevh1.rootsys import all_ids, build, build_label

# dimensions of the fundamental representations (standard tables)
FUNDAMENTAL_DIMS = {
    "G2": [7, 14],
    "F4": [52, 1274, 273, 26],
    "E6": [27, 78, 351, 2925, 351, 27],
    "E7": [133, 912, 8645, 365750, 27664, 1539, 56],
    "E8": [3875, 147250, 6696000, 6899079264, 146325270, 2450240, 30380, 248],
}


@pytest.mark.parametrize("label", sorted(FUNDAMENTAL_DIMS))
def test_weyl_dim_of_fundamentals(label):
    rs = build(label)
    assert [weyl_dim(rs, rs.fundamental(j)) for j in range(1, rs.rank + 1)] == FUNDAMENTAL_DIMS[label]


def test_weyl_dim_small_cases():
    assert weyl_dim(build("E8"), (0,) * 8) == 1
    for n in range(1, 9):
        rs = build(f"A{n}")
        assert weyl_dim(rs, rs.fundamental(1)) == n + 1
    assert weyl_dim(build("G2"), (0, 1)) == 14


def test_g2_adjoint_multiplicities():
    g2 = build("G2")
    table = dominant_mults(g2, (0, 1))
    assert table.dominant_mults == {(0, 1): 1, (1, 0): 1, (0, 0): 2}
    nonzero = [e for e in weight_support(g2, (0, 1)) if any(e.nu)]
    assert len(nonzero) == 12 and all(e.mult == 1 for e in nonzero)
    # brute-force dimension count: 12 nonzero weights plus the zero weight space
    assert 12 + table.dominant_mults[(0, 0)] == 14 == weyl_dim(g2, (0, 1))


def test_b2_omega1_support():
    b2 = build("B2")
    got = {e.nu: e.mult for e in weight_support(b2, (1, 0))}
    assert got == {(1, 0): 1, (-1, 2): 1, (0, 0): 1, (1, -2): 1, (-1, 0): 1}


def test_a1_three_omega_thetas():
    got = [(e.nu, e.theta) for e in weight_support(build("A1"), (3,))]
    assert got == [((3,), (0,)), ((1,), (1,)), ((-1,), (2,)), ((-3,), (3,))]


@pytest.mark.parametrize("rid", [r for r in all_ids(8)], ids=str)
def test_freudenthal_sums_to_weyl_dimension(rid):
    rs = build(rid)
    for j in range(1, rs.rank + 1):
        t = dominant_mults(rs, rs.fundamental(j))
        assert t.dominant_mults[rs.fundamental(j)] == 1
        assert dim_from_mults(rs, t) == t.total_dim == weyl_dim(rs, rs.fundamental(j))


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2", "A1xA1"])
def test_support_matches_two_oracles(label):
    rs = build_label(label)
    W = weyl_group(cartan_of(rs))
    for tau in [(a, b)[: rs.rank] for a in range(4) for b in range(4)]:
        if rs.rank == 1 and tau[0] > 3:
            continue
        sup = {e.nu for e in weight_support(rs, tau)}
        assert sup == support_by_string_closure(rs, tau) == support_closure(cartan_of(rs), W, tau)


def test_orbit_size():
    e8 = build("E8")
    assert orbit_size(e8, e8.fundamental(8)) == 240
    assert orbit_size(e8, (1,) * 8) == 696729600
    assert orbit_size(build("G2"), (0, 0)) == 1


def test_weight_support_rank_guard():
    with pytest.raises(RankGuardError):
        weight_support(build("B5"), (1, 0, 0, 0, 0))
    assert len(weight_support(build("B5"), (1, 0, 0, 0, 0), force=True)) == 11


def test_dominant_mults_rejects_non_dominant():
    with pytest.raises(ValueError):
        dominant_mults(build("A2"), (-1, 0))
    assert issubclass(MultiplicityError, ArithmeticError)


def test_levi_weight_drops():
    a3 = build("A3")
    assert levi_weight_drops(a3, (2, 0, 0), [0]) == {(0, 0, 0), (1, 0, 0), (2, 0, 0)}
    assert levi_weight_drops(a3, (2, 0, 0), []) == {(0, 0, 0)}
    with pytest.raises(ValueError):
        levi_weight_drops(a3, (1, 0, 0), [0, 1, 2])
    # B2 Levi {alpha_2, alpha_3} of B3 with restricted weight omega_1 of B2
    b3, b2 = build("B3"), build("B2")
    want = {(0,) + e.theta for e in weight_support(b2, (1, 0))}
    assert levi_weight_drops(b3, (0, 1, 0), [1, 2]) == want


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2", "A1xA1"])
def test_max_pairing_matches_enumeration(label):
    rs = build_label(label)
    for tau in [(a, b)[: rs.rank] for a in range(4) for b in range(4)]:
        sup = weight_support(rs, tau)
        for k, row in enumerate(rs.coroots):
            brute = max(sum(a * b for a, b in zip(e.nu, row)) for e in sup)
            assert max_pairing_over_support(rs, tau, k) == brute


def test_max_pairing_bounds():
    for label in ["E6", "E7", "F4", "G2"]:
        rs = build(label)
        assert max(max_pairing_over_support(rs, rs.fundamental(j), k)
                   for j in range(1, rs.rank + 1) for k in range(rs.rank)) < 5
    e8 = build("E8")
    assert max(max_pairing_over_support(e8, e8.fundamental(j), k)
               for j in range(1, 9) for k in range(8)) == 6
    assert max_pairing_over_support(e8, e8.zero, 0) == 0


def test_table_rendering_and_json():
    a1 = build("A1")
    entries = weight_support(a1, (2,))
    text = format_table(a1, (2,), entries)
    assert text.splitlines()[0] == "H^0(2w1) in A1"
    assert "a1" in text
    assert support_to_json(entries)[1] == {"nu": [0], "theta": [1], "mult": 1}
