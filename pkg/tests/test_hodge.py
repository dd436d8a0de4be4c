from fractions import Fraction

import pytest

from rigidcalc import fixtures as F
from rigidcalc.errors import (
    Ambiguous,
    InconsistentProfile,
    MissingDelta,
    NoSolution,
    TrivialEigenvalueAtInfinity,
    WitnessRequired,
)
from rigidcalc.hodge import (
    HodgeProfile,
    IrregularHodgeTable,
    NearbyData,
    columns_table,
    compare_with_table,
    derive_counts,
    mc_profile,
    parabolic_hodge_numbers,
    parabolic_rigidity_solve,
    pullback_profile,
    selfdual_completion_solve,
    shift_between,
    stationary_phase_table,
    tables_equal_up_to_shift,
)

g = F.get
P13_PRE = F.PREIMAGES["P13"]


def half(n):
    return Fraction(n, 2)


def test_counts_of_p13():
    c = derive_counts(g("profile.P13.case_b_lt_a"))
    assert c.h == (2, 2) and c.omega == (5, 3)


def test_counts_of_squared_p13():
    w = g("case.E1")
    sq = pullback_profile(g("profile.P13.case_b_half"), 2, P13_PRE, w)
    c = derive_counts(sq)
    assert c.omega == (7, 2) and c.omega_ne_inf == (5, 2)


def test_counts_of_trivial_rank_one():
    trivial = NearbyData.of([("0", 0, 0, 1)])
    P = HodgeProfile(1, tuple((l, trivial) for l in ("0", "1", "inf")))
    c = derive_counts(P)
    assert c.h == (1,) and all(v == (0,) for v in c.omega_by_point.values())


def test_counts_reject_point_dependence():
    P = HodgeProfile(
        2,
        (("0", NearbyData.of([("0", 0, 0, 2)])), ("inf", NearbyData.of([("0", 0, 0, 1), ("0", 0, 1, 1)]))),
    )
    with pytest.raises(InconsistentProfile):
        derive_counts(P)


def test_solve_examples():
    assert parabolic_rigidity_solve((1, 1), (3, 1)) == (-1, 0)
    assert parabolic_rigidity_solve((2, 2), (5, 3)) == (-2, -1)
    assert parabolic_rigidity_solve((5,), (0,)) == (-5,)


def test_parabolic_numbers_of_twisted_square():
    assert parabolic_hodge_numbers((1, 1), (-3, -1), (7, 4))[:3] == [2, 3, 2]


def test_pullback_half_case_delta():
    sq = pullback_profile(g("profile.P13.case_b_half"), 2, P13_PRE, g("case.E1"))
    assert sq.delta == (-2, 0)


def test_pullback_b_greater_than_a_delta():
    sq = pullback_profile(g("profile.P13.case_b_gt_a"), 2, P13_PRE, g("case.E3.b_gt_a"))
    assert sq.delta == (-3, -1)


def test_pullback_identity():
    P = g("profile.P13.case_b_half")
    assert pullback_profile(P, 1, None, None) == P


def test_pullback_needs_delta_and_witness():
    with pytest.raises(MissingDelta):
        pullback_profile(g("profile.P4"), 2, F.PREIMAGES["P4"], g("case.E4"))
    with pytest.raises(WitnessRequired):
        pullback_profile(g("profile.P13.case_b_half"), 2, P13_PRE, None)


def test_mc_half_case():
    w = g("case.E1")
    sq = pullback_profile(g("profile.P13.case_b_half"), 2, P13_PRE, w)
    out = mc_profile(sq, "mu", None, w)
    one_minus = Fraction(3, 100)
    assert derive_counts(out).h == (2, 3, 2)
    assert out.local("inf").nu(one_minus, 2, 2) == 2
    assert out.local("inf").nu(one_minus, 0, 1) == 1


def test_mc_b_less_than_a():
    w = g("case.E3.b_lt_a")
    sq = pullback_profile(g("profile.P13.case_b_lt_a"), 2, P13_PRE, w)
    out = mc_profile(sq, "mu", None, w)
    inf = out.local("inf")
    mu = Fraction(97, 100)
    b = Fraction(3, 5)
    assert derive_counts(out).h == (2, 5)
    assert inf.nu(2 * b - mu, 0, 0) == 2
    assert inf.nu(2 * (1 - b) + 1 - mu - 1, 0, 1) == 2
    assert inf.nu(1 - mu, 0, 1) == 3


def test_mc_of_aggregate_twisted_square():
    out = mc_profile(g("profile.P2sq_twisted"), "1/2", None, g("case.E2"))
    assert out.h == (2, 3, 2)


def test_selfdual_e4():
    sol = selfdual_completion_solve(7, 3, blocks=[3, 2, 2], cls="1/2", fixed={(2, 2): 1})
    assert sol.h == (2, 3, 2)


def test_selfdual_rank_two():
    assert selfdual_completion_solve(2, 2).h == (1, 1)


def test_selfdual_contradiction():
    with pytest.raises(NoSolution):
        selfdual_completion_solve(7, 3, h_fixed={0: 4})


def test_selfdual_ambiguous_without_local_data():
    with pytest.raises(Ambiguous):
        selfdual_completion_solve(7, 3)


def test_phase_e2():
    w = g("case.E2")
    table = stationary_phase_table(g("profile.Pprime.E2"), w, 0)
    assert table == IrregularHodgeTable(((half(1), 2), (half(3), 3), (half(5), 2)))


def test_phase_e3_b_greater_than_a():
    w = g("case.E3.b_gt_a")
    table = stationary_phase_table(g("profile.Pprime.E3.b_gt_a"), w, Fraction(97, 100))
    b = Fraction(4, 5)
    want = [(2 * b, 1), (2 * b + 1, 1), (2 * (1 - b) + 1, 1), (2 * (1 - b) + 2, 1), (1, 1), (2, 1), (3, 1)]
    assert table == IrregularHodgeTable(tuple(want))


def test_phase_rejects_trivial_class():
    P = HodgeProfile(1, (("inf", NearbyData.of([("0", 0, 0, 1)])),))
    with pytest.raises(TrivialEigenvalueAtInfinity):
        stationary_phase_table(P, None)


def test_shift_comparison():
    A = IrregularHodgeTable(((half(1), 2), (half(3), 3), (half(5), 2)))
    B = IrregularHodgeTable(((0, 2), (1, 3), (2, 2)))
    assert tables_equal_up_to_shift(A, B) and shift_between(A, B) == half(1)
    C = IrregularHodgeTable(((0, 3), (1, 2), (2, 2)))
    assert not tables_equal_up_to_shift(A, C)


def test_columns_merge_at_three_quarters():
    table = columns_table({"2*b": [1, 1, 0], "2*(1-b)+1": [1, 1, 0]}, g("case.E3.b34_gt_a"))
    assert table == IrregularHodgeTable(((half(3), 2), (half(5), 2)))


def test_compare_reports_mismatch():
    w = g("case.E1")
    problems = compare_with_table(g("profile.P13.case_b_half"), g("table.P13.case_b_lt_a"), w)
    assert problems


def test_profile_json_round_trip():
    for fx in F.list_fixtures("profile"):
        assert HodgeProfile.from_json(fx.payload.to_json()) == fx.payload
