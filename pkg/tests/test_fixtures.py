import dataclasses
import json
import subprocess
import sys

import pytest

from rigidcalc import fixtures as F
from rigidcalc.errors import UnknownFixture
from rigidcalc.expr import parse_theta_poly
from rigidcalc.verify import scheme_matches

PINNED_HASH = "645570bde95f011b6bc121470287dd15537227d4d2db39d1735b04a8c5176cac"


def test_every_kind_present():
    kinds = {f.kind for f in F.list_fixtures()}
    assert {"operator", "scheme", "tuple", "profile", "hodge-table", "irregular-table", "witness"} <= kinds


def test_lookup():
    L = F.get("op.L.E1E3")
    assert L.coeff(3) == parse_theta_poly("-6-4*T")
    assert sorted(L.terms) == [0, 1, 2, 3]


def test_profile_lookup():
    P = F.get("profile.P13.case_b_half")
    assert P.delta == (-2, -1)
    assert P.local("inf").nu("b", 1, 1) == 2


def test_unknown_id():
    with pytest.raises(UnknownFixture):
        F.get_fixture("nosuch")


def test_validate_all_clean():
    report = F.validate_all()
    assert report.ok, report.failures
    assert report.checked == len(F.list_fixtures())


def test_validate_flags_sign_flip():
    fixtures = F.list_fixtures()
    flipped = []
    for fx in fixtures:
        if fx.id == "op.P13":
            payload = fx.payload.map_coeffs(lambda p: p)
            terms = dict(payload.terms)
            terms[1] = -terms[1]
            fx = dataclasses.replace(fx, payload=type(payload)(terms))
        flipped.append(fx)
    report = F.validate_all(flipped)
    assert not report.ok
    assert any(msg.startswith("scheme.P13") for msg in report.failures)


def test_validate_empty_set():
    report = F.validate_all([])
    assert report.ok and report.checked == 0 and report.warnings


def test_provenance_nonempty():
    assert all(f.provenance for f in F.list_fixtures())


def test_export_is_json():
    data = json.loads(F.export_json())
    assert len(data) == len(F.list_fixtures())


def test_content_hash_pinned():
    assert F.content_hash() == PINNED_HASH


def test_content_hash_stable_across_processes():
    code = "from rigidcalc import fixtures as F; print(F.content_hash())"
    runs = {subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True).stdout.strip() for _ in range(2)}
    assert runs == {F.content_hash()}


@pytest.mark.parametrize(
    "scheme_id, witness_id",
    [(sid, wid) for sid, wids in F.SCHEME_WITNESSES.items() for wid in wids],
)
def test_scheme_fixture_matches_operator(scheme_id, witness_id):
    ok, detail, _ = scheme_matches(scheme_id, witness_id)
    assert ok, detail


def test_witnesses_satisfy_case_inequalities():
    w = F.get("case.E3.b_gt_a")
    assert w.value("a") < w.value("b")
    w = F.get("case.E3.b_lt_a")
    assert w.value("b") < w.value("a")
