"""Embedded reference data: operators, exponent tables, monodromy tuples, Hodge tables, witnesses.

Everything is built once at import time from plain text and is immutable
afterwards.  Ids are dotted strings such as ``op.L.E1E3`` or ``case.E3.b_gt_a``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Mapping

from .algebra import Constraint, ParamPoly, ParameterWitness
from .errors import RigidCalcError, UnknownFixture
from .expr import parse_param, parse_theta_poly
from .hodge import HodgeProfile, HodgeTable, NearbyData
from .monodromy import ExponentClass, LocalType, MonodromyTuple, parse_local_type
from .operators import INF, RiemannScheme, ThetaFormOperator, as_point, point_label

KINDS = (
    "operator",
    "scheme",
    "tuple",
    "local-type",
    "profile",
    "hodge-table",
    "irregular-table",
    "witness",
)


@dataclass(frozen=True)
class Fixture:
    id: str
    kind: str
    payload: Any
    provenance: str
    meta: Mapping = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "provenance": self.provenance,
            "payload": payload_to_json(self.kind, self.payload),
            "meta": _jsonable(self.meta),
        }


def _jsonable(value):
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    return str(value)


def payload_to_json(kind: str, payload) -> Any:
    if kind == "operator":
        return {str(i): str(p) for i, p in payload.terms.items()}
    if kind == "irregular-table":
        return {k: list(v) for k, v in payload.items()}
    if kind == "local-type":
        return payload.to_json()
    return payload.to_json()


# ---------------------------------------------------------------------------
# builders


def _op(parts: Mapping[int, str]) -> ThetaFormOperator:
    return ThetaFormOperator({i: parse_theta_poly(src) for i, src in parts.items()})


def _scheme(columns: Mapping[str, list]) -> RiemannScheme:
    out = {}
    for pt, exps in columns.items():
        key = INF if pt == "inf" else parse_param(pt)
        out[key] = [parse_param(e) for e in exps]
    return RiemannScheme(out)


def _tuple(points: Mapping[str, str], infinity: str) -> MonodromyTuple:
    return MonodromyTuple(
        tuple((lbl, parse_local_type(src)) for lbl, src in points.items()), parse_local_type(infinity)
    )


def _nearby(entries) -> NearbyData:
    return NearbyData.of((ExponentClass.of(c), l, p, n) for c, l, p, n in entries)


def _witness(name: str, assignment: Mapping[str, str], constraints) -> ParameterWitness:
    cons = []
    for text in constraints:
        for rel in ("<=", "!=", "==", "<", " nonint"):
            if rel in text:
                if rel == " nonint":
                    cons.append(Constraint(parse_param(text.replace(" nonint", "")), "nonint", text=text))
                else:
                    lhs, rhs = text.split(rel, 1)
                    cons.append(Constraint(parse_param(lhs), rel, parse_param(rhs), text=text))
                break
        else:
            raise ValueError(f"cannot read constraint {text!r}")
    return ParameterWitness(dict(assignment), tuple(cons), name)


# ---------------------------------------------------------------------------
# operators

L_E1E3 = {
    0: "4*T*(T-1)*(T+1)*(2*T+1-2*b)*(-2*b-1+2*T)*(2*b+1+2*T)*(2*b-1+2*T)",
    1: "-12*T*(T+1)*(2*T+1)*(2*b+1+2*T)*(2*T+1-2*b)",
    2: "(T+1)*(36*T^2+12*a^2-16*b^2+72*T-12*a+43)",
    3: "-6-4*T",
}
L_E4 = {
    0: "128*T^2*(T-2)^2*(T-1)^3",
    1: "-32*T^2*(t^2+t+1)*(2*T-1)*(T-1)^2",
    2: "8*(t^2+t+1)^2*T^3",
    3: "-t^2*(t+1)^2*(2*T+1)",
}
P_13 = {
    0: "-4096*T^2*(T-1)*(T+1)",
    1: "1024*T*(T+1)*(9*T^2+3*a^2-4*b^2+9*T-3*a+4)",
    2: "-6144*(T+1)^2*(T+1+b)*(T+1-b)",
    3: "1024*(T+1+b)*(T+1-b)*(T+2+b)*(T+2-b)",
}
P_2 = {
    0: "-4*T^2",
    1: "9*T^2+3*a^2+9*T-3*a+4",
    2: "-6*(T+1)^2",
    3: "(T+2)*(T+1)",
}
P_4 = {
    0: "-16*T^2*t^2*(t+1)^2*(T-1)*(T+1)",
    1: "4*T*(t^2+t+1)^2*(T+1)*(2*T+1)^2",
    2: "-8*(t^2+t+1)*(2*T+3)*(2*T+1)*(T+1)^2",
    3: "(2*T+5)*(2*T+1)*(2*T+3)^2",
}
PPRIME_E1E3 = {
    0: "-4*T*(T-5)*(T-1)*(T-2)*(T-3)*(T-4)*(T-mu)",
    2: "T*(T-1)*(T-2)*(T-3)*(T-mu+1)*(9*T^2-18*T*mu+12*a^2-16*b^2+9*mu^2+18*T-12*a-18*mu+16)",
    4: "-6*T*(T-1)*(T-mu+3)*(T-mu+2)*(T-mu+1)*(-mu+2+2*b+T)*(-mu+2-2*b+T)",
    6: "(T-mu+1)*(-mu+5+T)*(T-mu+3)*(-mu+2+2*b+T)*(-mu+2-2*b+T)*(-mu+4+2*b+T)*(-mu+4-2*b+T)",
}
H_E1E3 = {
    0: "-(mu-4+T)*(mu+T)*(mu-2+T)*(mu-3-2*b+T)*(mu-3+2*b+T)*(mu-1-2*b+T)*(mu-1+2*b+T)",
    2: "6*(mu-2+T)*(mu+T)*(mu-1+T)*(mu-1-2*b+T)*(mu-1+2*b+T)",
    4: "-(mu+T)*(9*T^2+18*T*mu+12*a^2-16*b^2+9*mu^2-12*a+7)",
    6: "4*(T+mu+1)",
}
PPRIME_E2 = {
    0: "256*T*(T-1)*(T-2)*(T-3)*(T-4)*(T-5)*(2*T-1)",
    2: "-16*T*(T-1)*(T-2)*(T-3)*(2*T+1)*(36*T^2+48*a^2+36*T-48*a+37)",
    4: "24*T*(2*T+5)*(T-1)*(2*T+1)*(2*T+3)^3",
    6: "-(2*T+5)*(2*T+1)*(2*T+9)*(2*T+7)^2*(2*T+3)^2",
}
H_E2 = {
    0: "(2*T-3)*(2*T+1)*(2*T-7)*(2*T-5)^2*(2*T-1)^2",
    2: "-24*(2*T-3)*(2*T+1)*(2*T-1)^3",
    4: "16*(2*T+1)*(36*T^2+48*a^2+36*T-48*a+37)",
    6: "-256*(2*T+3)",
}
PPRIME_E4 = {
    0: "-64*T*t^2*(t+1)^2*(T-1)*(T-2)*(T-3)*(T-4)*(T-5)*(2*T-5)",
    2: "16*T*(t^2+t+1)^2*(T-1)*(T-2)*(T-3)*(2*T-3)^3",
    4: "-8*T*(t^2+t+1)*(2*T-1)*(T-1)*(2*T+1)^2*(2*T-3)^2",
    6: "(2*T+5)^2*(2*T-3)^2*(2*T+1)^3",
}
H_E4 = {
    0: "-(2*T+5)^2*(2*T-3)^2*(2*T+1)^3",
    2: "8*(t^2+t+1)*(3+2*T)*(2*T+1)^2*(2*T+5)^2",
    4: "-16*(t^2+t+1)^2*(2*T+5)^3",
    6: "64*t^2*(t+1)^2*(7+2*T)",
}

# ---------------------------------------------------------------------------
# exponent tables

_INTS_0_5 = ["0", "1", "2", "3", "4", "5"]

SCHEMES = {
    "scheme.P13": {
        "0": ["-1", "0", "0", "1"],
        "1": ["0", "1", "a", "1-a"],
        "4": ["0", "1", "1", "2"],
        "inf": ["2-b", "1-b", "1+b", "2+b"],
    },
    "scheme.P2": {
        "0": ["0", "0"],
        "1": ["-a", "a-1"],
        "4": ["0", "0"],
        "inf": ["1", "2"],
    },
    "scheme.P4": {
        "0": ["-1", "0", "0", "1"],
        "1": ["0", "1", "1", "2"],
        "t^2": ["0", "1", "1", "2"],
        "(t+1)^2": ["0", "1", "1", "2"],
        "inf": ["1/2", "3/2", "3/2", "5/2"],
    },
    "scheme.Pprime.E1E3": {
        "-2": ["mu", "5", "4", "3", "2", "1", "0"],
        "-1": ["mu-a", "mu+a-1", "4", "3", "2", "1", "0"],
        "0": ["mu", "5", "4", "3", "2", "1", "0"],
        "1": ["mu-a", "mu+a-1", "4", "3", "2", "1", "0"],
        "2": ["mu", "5", "4", "3", "2", "1", "0"],
        "inf": ["2*b+4-mu", "2*b+2-mu", "5-mu", "3-mu", "1-mu", "-2*b+2-mu", "-2*b+4-mu"],
    },
    # at +-1 the printed column reads 1/2+a, -1/2-a; the indicial polynomial has a-1/2, 1/2-a
    "scheme.Pprime.E2": {
        "-2": ["1/2", "5", "4", "3", "2", "1", "0"],
        "-1": ["a-1/2", "1/2-a", "4", "3", "2", "1", "0"],
        "0": ["1/2", "5", "4", "3", "2", "1", "0"],
        "1": ["a-1/2", "1/2-a", "4", "3", "2", "1", "0"],
        "2": ["1/2", "5", "4", "3", "2", "1", "0"],
        "inf": ["9/2", "7/2", "7/2", "5/2", "3/2", "3/2", "1/2"],
    },
    "scheme.Pprime.E4": {
        **{pt: ["5", "4", "3", "5/2", "2", "1", "0"] for pt in ("t+1", "-t-1", "t", "-t", "1", "-1", "0")},
        "inf": ["5/2", "5/2", "1/2", "1/2", "1/2", "-3/2", "-3/2"],
    },
}

PRINTED_SCHEME_OVERRIDES = {
    "scheme.Pprime.E2": {"-1": ["1/2+a", "-1/2-a"], "1": ["1/2+a", "-1/2-a"]},
}

SCHEME_OPERATOR = {
    "scheme.P13": "op.P13",
    "scheme.P2": "op.P2",
    "scheme.P4": "op.P4",
    "scheme.Pprime.E1E3": "op.Pprime.E1E3",
    "scheme.Pprime.E2": "op.Pprime.E2",
    "scheme.Pprime.E4": "op.Pprime.E4",
}

SCHEME_WITNESSES = {
    "scheme.P13": ["case.E1", "case.E3.b_lt_a", "case.E3.b34_lt_a", "case.E3.b_gt_a", "case.E3.b34_gt_a"],
    "scheme.P2": ["case.E2"],
    "scheme.P4": ["case.E4"],
    "scheme.Pprime.E1E3": ["case.E1", "case.E3.b_lt_a", "case.E3.b34_lt_a", "case.E3.b_gt_a", "case.E3.b34_gt_a"],
    "scheme.Pprime.E2": ["case.E2"],
    "scheme.Pprime.E4": ["case.E4"],
}

# ---------------------------------------------------------------------------
# monodromy

_J2_11 = "J2(0), 0, 0"

TUPLES = {
    "tuple.M.E1E3": ({"0": "-a", "1": "a+b", "4": "-a"}, "a-b"),
    "tuple.M2.E1E3": ({"0": "0", "1": "-a-b", "4": "0"}, "a+b"),
    "tuple.katz.row2": ({"0": "0, -b", "1": "0, 2*a", "4": "0, -b"}, "b-a, b-a"),
    "tuple.katz.row3": ({"0": "0, -b", "1": "-a-b, a-b", "4": "0, -b"}, "2*b, 2*b"),
    "tuple.P13": ({"0": _J2_11, "1": "a, -a, 0, 0", "4": _J2_11}, "b, b, -b, -b"),
    "tuple.P13.a_half": ({"0": _J2_11, "1": "J2(1/2), 0, 0", "4": _J2_11}, "b, b, -b, -b"),
    "tuple.P13.b_half": ({"0": _J2_11, "1": "a, -a, 0, 0", "4": _J2_11}, "J2(1/2), J2(1/2)"),
    "tuple.M.P2": ({"0": "-a", "1": "a", "4": "-a"}, "a"),
    "tuple.L.P2": ({"0": "0", "1": "-a", "4": "0"}, "a"),
    "tuple.P2": ({"0": "J2(0)", "1": "a, -a", "4": "J2(0)"}, "0, 0"),
    "tuple.M.E4": ({"0": "1/2", "1": "1/2", "t^2": "1/2", "(t+1)^2": "1/2"}, "0"),
    "tuple.P4": ({"0": _J2_11, "1": _J2_11, "t^2": _J2_11, "(t+1)^2": _J2_11}, "J2(1/2), 1/2, 1/2"),
}

LOCAL_TYPES = {
    "local.Pprime.E2.inf": "J2(1/2), J2(1/2), 1/2, 1/2, 1/2",
    "local.Pprime.E4.inf": "J3(1/2), J2(1/2), J2(1/2)",
}

PREIMAGES = {
    "P13": {"1": ["1", "-1"], "4": ["2", "-2"]},
    "P2": {"1": ["1", "-1"], "4": ["2", "-2"]},
    "P4": {"1": ["1", "-1"], "t^2": ["t", "-t"], "(t+1)^2": ["t+1", "-t-1"]},
}

# ---------------------------------------------------------------------------
# Hodge data

# interior points carry one unipotent J(2) with top degree 1 and two trivial blocks
_UNIPOTENT_POINT = [("0", 1, 1, 1), ("0", 0, 0, 1), ("0", 0, 1, 1)]
_REFLECTION_POINT = [("0", 0, 0, 1), ("0", 0, 1, 1), ("1-a", 0, 0, 1), ("a", 0, 1, 1)]

P13_INF = {
    "case_b_half": [("b", 1, 1, 2)],
    "case_b_lt_a": [("b", 0, 0, 2), ("1-b", 0, 1, 2)],
    "case_b_gt_a": [("b", 0, 0, 1), ("b", 0, 1, 1), ("1-b", 0, 0, 1), ("1-b", 0, 1, 1)],
}

PROFILES = {
    **{
        f"profile.P13.{case}": dict(
            rank=4,
            points={"0": _UNIPOTENT_POINT, "1": _REFLECTION_POINT, "4": _UNIPOTENT_POINT, "inf": inf},
            delta=(-2, -1),
        )
        for case, inf in P13_INF.items()
    },
    "profile.P2": dict(
        rank=2,
        points={
            "0": [("0", 1, 1, 1)],
            "1": [("1-a", 0, 0, 1), ("a", 0, 1, 1)],
            "4": [("0", 1, 1, 1)],
            "inf": [("0", 0, 0, 1), ("0", 0, 1, 1)],
        },
        delta=(-1, 0),
    ),
    "profile.P4": dict(
        rank=4,
        points={
            "0": _UNIPOTENT_POINT,
            "1": _UNIPOTENT_POINT,
            "t^2": _UNIPOTENT_POINT,
            "(t+1)^2": _UNIPOTENT_POINT,
            "inf": [("1/2", 1, 1, 1), ("1/2", 0, 0, 1), ("1/2", 0, 1, 1)],
        },
        delta=None,
    ),
    "profile.P2sq_twisted": dict(rank=2, points={}, delta=(-3, -1), h=(1, 1), omega=(7, 4)),
}

TABLES = {
    "table.P13.case_b_half": dict(h=(2, 2), delta=(-2, -1), omega=(5, 3), nu={("b", 1): (0, 2)}),
    "table.P13.case_b_lt_a": dict(
        h=(2, 2), delta=(-2, -1), omega=(5, 3), nu={("b", 0): (2, 0), ("1-b", 0): (0, 2)}
    ),
    "table.P13.case_b_gt_a": dict(
        h=(2, 2), delta=(-2, -1), omega=(5, 3), nu={("b", 0): (1, 1), ("1-b", 0): (1, 1)}
    ),
    "table.P13sq.b_half": dict(h=(2, 2), delta=(-2, 0), omega=(7, 2), omega_ne_inf=(5, 2), nu={("0", 1): (0, 2)}),
    "table.P13sq.b_lt_a": dict(
        h=(2, 2), delta=(-2, -2), omega=(7, 4), omega_ne_inf=(5, 2),
        nu={("2*b-1", 0): (2, 0), ("2*(1-b)", 0): (0, 2)},
    ),
    "table.P13sq.b34_lt_a": dict(
        h=(2, 2), delta=(-2, -2), omega=(7, 4), omega_ne_inf=(5, 2), nu={("2*b-1", 0): (2, 2)}
    ),
    "table.P13sq.b_gt_a": dict(
        h=(2, 2), delta=(-3, -1), omega=(7, 4), omega_ne_inf=(5, 2),
        nu={("2*b-1", 0): (1, 1), ("2*(1-b)", 0): (1, 1)},
    ),
    "table.P13sq.b34_gt_a": dict(
        h=(2, 2), delta=(-3, -1), omega=(7, 4), omega_ne_inf=(5, 2), nu={("2*b-1", 0): (2, 2)}
    ),
    "table.Pprime.E1": dict(h=(2, 3, 2), nu={("1-mu", 2): (0, 0, 2), ("1-mu", 0): (0, 1, 0)}),
    "table.Pprime.E3.b_lt_a": dict(
        h=(2, 5), nu={("2*b-mu", 0): (2, 0), ("2*(1-b)+1-mu", 0): (0, 2), ("1-mu", 0): (0, 3)}
    ),
    "table.Pprime.E3.b34_lt_a": dict(h=(2, 5), nu={("2*b-mu", 0): (2, 2), ("1-mu", 0): (0, 3)}),
    "table.Pprime.E3.b_gt_a": dict(
        h=(3, 3, 1),
        nu={("2*b-mu", 0): (1, 1, 0), ("2*(1-b)+1-mu", 0): (1, 1, 0), ("1-mu", 0): (1, 1, 1)},
    ),
    "table.Pprime.E3.b34_gt_a": dict(h=(3, 3, 1), nu={("2*b-mu", 0): (2, 2, 0), ("1-mu", 0): (1, 1, 1)}),
    "table.P2": dict(h=(1, 1), delta=(-1, 0), omega=(3, 1), nu={("0", 0): (1, 1)}),
    "table.P2sq": dict(h=(1, 1), delta=(-2, 0), nu={("0", 0): (1, 1)}),
    "table.P2sq_twisted": dict(h=(1, 1), delta=(-3, -1), omega=(7, 4)),
    "table.Pprime.E2": dict(h=(2, 3, 2), nu={("1/2", 0): (1, 1, 1), ("1/2", 1): (0, 1, 1)}),
    "table.Pprime.E4": dict(h=(2, 3, 2), nu={("1/2", 1): (0, 1, 1), ("1/2", 2): (0, 0, 1)}),
}

THEOREM_TABLES = {
    "theorem.E1": {"1/2": [2, 3, 2]},
    "theorem.E2": {"1/2": [2, 3, 2]},
    "theorem.E4": {"1/2": [2, 3, 2]},
    "theorem.E3.b34_lt_a": {"2*b": [2, 2], "1": [0, 3]},
    "theorem.E3.b34_gt_a": {"2*b": [2, 2, 0], "1": [1, 1, 1]},
    "theorem.E3.b_gt_a": {"2*b": [1, 1, 0], "2*(1-b)+1": [1, 1, 0], "1": [1, 1, 1]},
    "theorem.E3.b_lt_a": {"2*b": [2, 0], "2*(1-b)+1": [0, 2], "1": [0, 3]},
}

# ---------------------------------------------------------------------------
# witnesses

_COMMON = {"mu": "97/100", "t": "2"}
_MU = ["0 < mu", "mu < 1", "mu nonint", "2*mu nonint"]
_T = ["t != 0", "t != 1", "t != -1", "t != -2", "2*t != -1"]
_AB = ["1/2 < a", "a < 1", "2*a nonint", "a-b nonint", "a+b nonint", "mu-a nonint", "mu+a nonint"]
_E3 = ["1/2 < b", "b < 1", "2*b nonint", "2*b-mu nonint", "2*b+mu nonint"]

WITNESSES = {
    "case.E1": ({"a": "2/3", "b": "1/2"}, _AB + _MU + _T + ["b == 1/2"]),
    "case.E2": ({"a": "2/3", "b": "1"}, ["1/2 < a", "a < 1", "2*a nonint", "b == 1"] + _MU + _T),
    "case.E3.b_lt_a": ({"a": "4/5", "b": "3/5"}, _AB + _E3 + _MU + _T + ["b < a", "b != 3/4"]),
    "case.E3.b34_lt_a": ({"a": "4/5", "b": "3/4"}, _AB + _E3 + _MU + _T + ["b < a", "b == 3/4"]),
    "case.E3.b_gt_a": ({"a": "3/5", "b": "4/5"}, _AB + _E3 + _MU + _T + ["a < b", "b != 3/4"]),
    "case.E3.b34_gt_a": ({"a": "7/10", "b": "3/4"}, _AB + _E3 + _MU + _T + ["a < b", "b == 3/4"]),
    "case.E4": ({}, _MU + _T),
}

# how each case is assembled from the fixtures above
CASES = {
    "E1": dict(
        witness="case.E1", profile="profile.P13.case_b_half", table="table.P13.case_b_half",
        square="table.P13sq.b_half", preimages="P13", mc="mu", output="table.Pprime.E1",
        theorem="theorem.E1", untwist="mu",
    ),
    "E3.b_lt_a": dict(
        witness="case.E3.b_lt_a", profile="profile.P13.case_b_lt_a", table="table.P13.case_b_lt_a",
        square="table.P13sq.b_lt_a", preimages="P13", mc="mu", output="table.Pprime.E3.b_lt_a",
        theorem="theorem.E3.b_lt_a", untwist="mu",
    ),
    "E3.b34_lt_a": dict(
        witness="case.E3.b34_lt_a", profile="profile.P13.case_b_lt_a", table="table.P13.case_b_lt_a",
        square="table.P13sq.b34_lt_a", preimages="P13", mc="mu", output="table.Pprime.E3.b34_lt_a",
        theorem="theorem.E3.b34_lt_a", untwist="mu",
    ),
    "E3.b_gt_a": dict(
        witness="case.E3.b_gt_a", profile="profile.P13.case_b_gt_a", table="table.P13.case_b_gt_a",
        square="table.P13sq.b_gt_a", preimages="P13", mc="mu", output="table.Pprime.E3.b_gt_a",
        theorem="theorem.E3.b_gt_a", untwist="mu",
    ),
    "E3.b34_gt_a": dict(
        witness="case.E3.b34_gt_a", profile="profile.P13.case_b_gt_a", table="table.P13.case_b_gt_a",
        square="table.P13sq.b34_gt_a", preimages="P13", mc="mu", output="table.Pprime.E3.b34_gt_a",
        theorem="theorem.E3.b34_gt_a", untwist="mu",
    ),
    "E2": dict(
        witness="case.E2", profile="profile.P2", table="table.P2", square="table.P2sq",
        preimages="P2", mc="1/2", output="table.Pprime.E2", theorem="theorem.E2", untwist="0",
    ),
    "E4": dict(
        witness="case.E4", profile="profile.P4", table=None, square=None,
        preimages="P4", mc="1/2", output="table.Pprime.E4", theorem="theorem.E4", untwist="0",
    ),
}

# ---------------------------------------------------------------------------
# registry

_PROVENANCE = {
    "op.L.E1E3": "rank-7 operator with one x-degree-3 family covering the three cases b half-integral, integral, generic",
    "op.L.E2": "op.L.E1E3 with b set to 0 (integral case)",
    "op.L.E4": "rank-7 operator for the family with parameter t",
    "op.P13": "rank-4 Fuchsian operator on {0,1,4,inf}, b not an integer",
    "op.P2": "rank-2 Fuchsian operator on {0,1,4,inf}, b an integer",
    "op.P4": "rank-4 Fuchsian operator on {0,1,t^2,(t+1)^2,inf}",
    "op.Pprime.E1E3": "rank-7 operator of the middle convolution of the squared rank-4 system, parameter mu",
    "op.Pprime.E2": "rank-7 operator of the middle convolution with -1 of the squared rank-2 system",
    "op.Pprime.E4": "rank-7 operator of the middle convolution with -1 of the squared t-family system",
    "op.H.E1E3": "quotient of the normalized Fourier transform of op.Pprime.E1E3 by T(T-1)...(T-5)",
    "op.H.E2": "quotient of the normalized Fourier transform of op.Pprime.E2 by T(T-1)...(T-5)",
    "op.H.E4": "quotient of the normalized Fourier transform of op.Pprime.E4 by T(T-1)...(T-5)",
}

_OPERATORS = {
    "op.L.E1E3": L_E1E3,
    "op.L.E4": L_E4,
    "op.P13": P_13,
    "op.P2": P_2,
    "op.P4": P_4,
    "op.Pprime.E1E3": PPRIME_E1E3,
    "op.Pprime.E2": PPRIME_E2,
    "op.Pprime.E4": PPRIME_E4,
    "op.H.E1E3": H_E1E3,
    "op.H.E2": H_E2,
    "op.H.E4": H_E4,
}


def _profile(entry: Mapping) -> HodgeProfile:
    return HodgeProfile(
        entry["rank"],
        tuple((lbl, _nearby(entries)) for lbl, entries in entry["points"].items()),
        entry.get("delta"),
        entry.get("h"),
        entry.get("omega"),
        entry.get("omega_ne_inf"),
    )


def profile_from_table(table: HodgeTable) -> HodgeProfile:
    """A profile carrying only the infinity columns of a printed table."""
    entries = []
    for (label, level), vec in table.nu:
        for p, n in enumerate(vec):
            if n:
                entries.append(((ExponentClass.of(label), level, p), n))
    data = NearbyData(tuple(entries))
    return HodgeProfile(data.rank, (("inf", data),), table.delta, table.h)


def _build() -> dict:
    out: dict = {}

    def add(fid, kind, payload, provenance, **meta):
        out[fid] = Fixture(fid, kind, payload, provenance, dict(meta))

    for fid, parts in _OPERATORS.items():
        add(fid, "operator", _op(parts), _PROVENANCE[fid])
    add("op.L.E2", "operator", _op(L_E1E3).substitute_params({"b": 0}), _PROVENANCE["op.L.E2"])
    for fid, cols in SCHEMES.items():
        meta = {"operator": SCHEME_OPERATOR[fid], "witnesses": SCHEME_WITNESSES[fid]}
        if fid in PRINTED_SCHEME_OVERRIDES:
            meta["printed_overrides"] = PRINTED_SCHEME_OVERRIDES[fid]
        add(fid, "scheme", _scheme(cols), f"exponent table of {SCHEME_OPERATOR[fid]}", **meta)
    for fid, (points, inf) in TUPLES.items():
        add(fid, "tuple", _tuple(points, inf), "local monodromy data, eigenvalues as classes mod 1")
    for fid, src in LOCAL_TYPES.items():
        add(fid, "local-type", parse_local_type(src), "expected Jordan type at infinity after the convolution")
    for fid, entry in PROFILES.items():
        add(fid, "profile", _profile(entry), "local Hodge data; interior per-degree data reconstructed")
    for fid, entry in TABLES.items():
        add(fid, "hodge-table", HodgeTable(**entry), "printed Hodge table (h, delta, omega, nu at infinity)")
        if fid.startswith("table.Pprime."):
            pid = "profile." + fid[len("table."):]
            add(pid, "profile", profile_from_table(HodgeTable(**entry)), f"infinity data of {fid}")
    for fid, cols in THEOREM_TABLES.items():
        add(fid, "irregular-table", dict(cols), "jumping indices sigma + p with irregular Hodge numbers")
    for fid, (assignment, constraints) in WITNESSES.items():
        add(fid, "witness", _witness(fid, {**_COMMON, **assignment}, constraints), "case hypotheses")
    return dict(sorted(out.items()))


@lru_cache(maxsize=1)
def _registry() -> dict:
    return _build()


def get_fixture(fid: str) -> Fixture:
    try:
        return _registry()[fid]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {fid!r}") from None


def get(fid: str):
    """Payload of a fixture."""
    return get_fixture(fid).payload


def list_fixtures(kind: str | None = None) -> list:
    return [f for f in _registry().values() if kind is None or f.kind == kind]


def export_json() -> str:
    return json.dumps([f.to_json() for f in list_fixtures()], indent=2, sort_keys=True)


def content_hash() -> str:
    return hashlib.sha256(export_json().encode()).hexdigest()


def scheme_points(scheme: RiemannScheme) -> list:
    return list(scheme.exponents)


def printed_scheme(fid: str) -> RiemannScheme:
    """The exponent table as printed, including known misprints."""
    fx = get_fixture(fid)
    overrides = fx.meta.get("printed_overrides", {})
    cols = {point_label(pt): [str(e) for e in exps] for pt, exps in fx.payload.exponents.items()}
    for pt, exps in overrides.items():
        cols[pt] = list(exps)
    return _scheme(cols)


@dataclass
class ValidationReport:
    checked: int = 0
    failures: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def validate_all(fixtures: list | None = None) -> ValidationReport:
    """Type invariants, symbolic exponent certification, profile consistency."""
    from .hodge import derive_counts
    from .operators import certify_scheme

    fixtures = list_fixtures() if fixtures is None else list(fixtures)
    report = ValidationReport()
    if not fixtures:
        report.warnings.append("no fixtures to validate")
        return report
    by_id = {f.id: f for f in fixtures}
    for fx in fixtures:
        report.checked += 1
        try:
            if not fx.provenance:
                raise RigidCalcError("empty provenance")
            if fx.kind == "operator":
                if fx.payload.is_zero():
                    raise RigidCalcError("zero operator")
            elif fx.kind == "scheme":
                op_fx = by_id.get(fx.meta["operator"]) or get_fixture(fx.meta["operator"])
                op = op_fx.payload
                for exps in fx.payload.exponents.values():
                    if len(exps) != op.coeff(0).degree:
                        raise RigidCalcError(f"exponent count {len(exps)} differs from rank")
                certify_scheme(op, fx.payload)
            elif fx.kind == "tuple":
                if not fx.payload.determinant_ok():
                    raise RigidCalcError("determinant condition fails")
            elif fx.kind == "profile":
                derive_counts(fx.payload)
            elif fx.kind == "witness":
                pass
        except (RigidCalcError, KeyError, ValueError) as exc:
            report.failures.append(f"{fx.id}: {exc}")
    return report
