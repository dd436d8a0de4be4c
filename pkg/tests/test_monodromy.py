import pytest

from rigidcalc import fixtures as F
from rigidcalc.errors import MissingPreimageLabels, NotApplicable, PointSetMismatch
from rigidcalc.monodromy import (
    ExponentClass,
    JordanBlock,
    LocalType,
    MonodromyTuple,
    kummer_pullback_tuple,
    mc_local,
    mc_rank,
    parse_local_type,
    rank_one,
    rigidity_index,
    tensor_rank_one,
)

g = F.get


def test_class_reduced_mod_one():
    assert ExponentClass.of("5/4") == ExponentClass.of("-3/4")
    assert ExponentClass.of("a+1") == ExponentClass.of("a")
    assert ExponentClass.of("2").is_trivial
    assert not ExponentClass.of("a").is_trivial


def test_centralizer_dimension():
    assert parse_local_type("J2(0), 0, 0").centralizer_dimension() == 10
    assert parse_local_type("a, -a, 0, 0").centralizer_dimension() == 6
    assert parse_local_type("J3(1/2), J2(1/2), J2(1/2)").centralizer_dimension() == 3 + 2 + 2 + 2 * (2 + 2 + 2)


def test_rigidity_of_p13():
    assert rigidity_index(g("tuple.P13")) == 2


def test_rigidity_of_rank_one():
    assert rigidity_index(rank_one({"0": "a", "1": "b", "4": "-a-b"}, "0")) == 2


def test_rigidity_of_p4():
    assert rigidity_index(g("tuple.P4")) == 2


def test_tensor_step_of_katz_table():
    assert tensor_rank_one(g("tuple.katz.row2"), g("tuple.M2.E1E3")) == g("tuple.katz.row3")


def test_tensor_with_trivial():
    T = g("tuple.P13")
    assert tensor_rank_one(T, rank_one({"0": "0"}, "0")) == T


def test_tensor_preserves_determinant():
    out = tensor_rank_one(g("tuple.katz.row2"), g("tuple.M2.E1E3"))
    assert out.determinant_ok()


def test_tensor_point_mismatch():
    with pytest.raises(PointSetMismatch):
        tensor_rank_one(g("tuple.P13"), rank_one({"7": "a"}, "-a"))


def test_mc_rank_examples():
    assert mc_rank(g("tuple.M.E1E3"), "a-b") == 2
    assert mc_rank(g("tuple.katz.row3"), "b") == 4
    assert mc_rank(g("tuple.M.E4"), "1/2") == 4


def test_mc_rank_trivial_class():
    with pytest.raises(NotApplicable):
        mc_rank(g("tuple.P13"), "1")


def test_mc_first_step():
    assert mc_local(g("tuple.M.E1E3"), "a-b") == g("tuple.katz.row2")


def test_mc_gives_p13():
    assert mc_local(g("tuple.katz.row3"), "b") == g("tuple.P13")


def test_mc_gives_p4():
    out = mc_local(g("tuple.M.E4"), "1/2")
    assert out.rank == 4
    assert out.infinity == parse_local_type("J2(1/2), 1/2, 1/2")
    assert all(lt == parse_local_type("J2(0), 0, 0") for _, lt in out.finite_points)


def test_mc_inverse_on_fixtures():
    for fx in F.list_fixtures("tuple"):
        for lam in ("1/2", "mu", "b"):
            T = fx.payload
            assert mc_local(mc_local(T, lam), -ExponentClass.of(lam)) == T, (fx.id, lam)


def test_mc_output_dimensions():
    out = mc_local(g("tuple.katz.row3"), "b")
    assert all(lt.dimension == out.rank for _, lt in out.all_points())
    assert out.determinant_ok()


def test_pullback_half_class_becomes_unipotent():
    T = g("tuple.P13.b_half")
    out = kummer_pullback_tuple(T, 2, F.PREIMAGES["P13"])
    assert out.infinity == parse_local_type("J2(0), J2(0)")


def test_pullback_degree_one():
    T = g("tuple.P2")
    assert kummer_pullback_tuple(T, 1) == T


def test_pullback_of_p2_points():
    out = kummer_pullback_tuple(g("tuple.P2"), 2, F.PREIMAGES["P2"])
    assert sorted(out.labels) == sorted(["0", "1", "-1", "2", "-2"])
    assert out.rank == 2
    assert out.infinity.eigenvalue_classes() == {ExponentClass.of(0): 2}


def test_pullback_needs_labels():
    with pytest.raises(MissingPreimageLabels):
        kummer_pullback_tuple(g("tuple.P2"), 2, {"1": ["1", "-1"]})


def test_json_round_trip():
    for fx in F.list_fixtures("tuple"):
        assert MonodromyTuple.from_json(fx.payload.to_json()) == fx.payload


def test_local_type_builder():
    lt = LocalType.of(("a", 2), "0", JordanBlock(ExponentClass.of("1/2"), 1))
    assert lt.dimension == 4
    assert lt == parse_local_type("J2(a), 0, 1/2")
