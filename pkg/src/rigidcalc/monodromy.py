"""Local monodromy tuples with eigenvalues recorded as additive classes mod 1.

A class ``e`` stands for the eigenvalue ``exp(-2*pi*i*e)``; the trivial class
(eigenvalue 1) is ``0``.  Classes may depend affinely on the parameters, in
which case comparisons use generic semantics: two classes are equal only when
their parameter parts agree identically.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import SYMBOLS, ParamPoly, ParameterWitness, as_rational, format_rational
from .errors import MissingPreimageLabels, NotApplicable, PointSetMismatch, RankMismatch


@dataclass(frozen=True, order=True)
class ExponentClass:
    constant: Fraction = Fraction(0)
    coefficients: tuple = ()  # sorted ((symbol, Fraction), ...), no zeros

    def __post_init__(self):
        c = as_rational(self.constant)
        object.__setattr__(self, "constant", c - math.floor(c))
        coeffs = {}
        for name, q in self.coefficients:
            if name not in SYMBOLS:
                raise ValueError(f"unknown parameter symbol {name!r}")
            coeffs[name] = coeffs.get(name, Fraction(0)) + as_rational(q)
        object.__setattr__(
            self, "coefficients", tuple(sorted((k, v) for k, v in coeffs.items() if v != 0))
        )

    @classmethod
    def of(cls, value) -> "ExponentClass":
        """Build from a rational, an affine ParamPoly, a class, or text like ``"2*b-mu"``."""
        if isinstance(value, ExponentClass):
            return value
        if isinstance(value, str):
            from .expr import parse_param

            value = parse_param(value)
        poly = ParamPoly.coerce(value)
        if not poly.is_affine():
            raise ValueError(f"exponent class must be affine in the parameters, got {poly}")
        const, coeffs = poly.affine_parts()
        return cls(const, tuple(coeffs.items()))

    @property
    def is_trivial(self) -> bool:
        return not self.coefficients and self.constant == 0

    @property
    def is_constant(self) -> bool:
        return not self.coefficients

    def as_poly(self) -> ParamPoly:
        out = ParamPoly.const(self.constant)
        for name, q in self.coefficients:
            out = out + ParamPoly.symbol(name) * q
        return out

    def __add__(self, other):
        other = ExponentClass.of(other)
        return ExponentClass.of(self.as_poly() + other.as_poly())

    def __neg__(self):
        return ExponentClass.of(-self.as_poly())

    def __sub__(self, other):
        return self + (-ExponentClass.of(other))

    def scale(self, k: int) -> "ExponentClass":
        return ExponentClass.of(self.as_poly() * k)

    def evaluate(self, witness) -> Fraction:
        """Representative in ``[0, 1)`` under ``witness``."""
        v = self.as_poly().evaluate(witness)
        return v - math.floor(v)

    def specialize(self, witness) -> "ExponentClass":
        return ExponentClass(self.evaluate(witness))

    def substitute(self, assignment: Mapping[str, object]) -> "ExponentClass":
        return ExponentClass.of(self.as_poly().substitute(assignment))

    def __str__(self):
        if not self.coefficients:
            return format_rational(self.constant)
        return str(self.as_poly())

    def to_json(self) -> dict:
        return {
            "const": format_rational(self.constant),
            "coeffs": {k: format_rational(v) for k, v in self.coefficients},
        }

    @classmethod
    def from_json(cls, data) -> "ExponentClass":
        if isinstance(data, str):
            return cls.of(data)
        return cls(
            Fraction(data.get("const", "0")),
            tuple((k, Fraction(v)) for k, v in data.get("coeffs", {}).items()),
        )


ZERO = ExponentClass()


@dataclass(frozen=True, order=True)
class JordanBlock:
    cls: ExponentClass
    size: int = 1

    def __post_init__(self):
        object.__setattr__(self, "cls", ExponentClass.of(self.cls))
        if self.size < 1:
            raise ValueError("Jordan block size must be positive")

    def __str__(self):
        return f"{self.cls}" if self.size == 1 else f"J{self.size}({self.cls})"


@dataclass(frozen=True)
class LocalType:
    blocks: tuple = ()

    def __post_init__(self):
        blocks = tuple(sorted(JordanBlock(b.cls, b.size) if isinstance(b, JordanBlock) else JordanBlock(*b) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, *blocks) -> "LocalType":
        out = []
        for b in blocks:
            if isinstance(b, JordanBlock):
                out.append(b)
            elif isinstance(b, tuple):
                out.append(JordanBlock(ExponentClass.of(b[0]), b[1]))
            else:
                out.append(JordanBlock(ExponentClass.of(b), 1))
        return cls(tuple(out))

    @property
    def dimension(self) -> int:
        return sum(b.size for b in self.blocks)

    def classes(self) -> set:
        return {b.cls for b in self.blocks}

    def count_class(self, c: ExponentClass) -> int:
        return sum(1 for b in self.blocks if b.cls == c)

    def centralizer_dimension(self) -> int:
        total = 0
        for c in self.classes():
            sizes = [b.size for b in self.blocks if b.cls == c]
            total += sum(min(x, y) for x in sizes for y in sizes)
        return total

    def shift(self, c: ExponentClass) -> "LocalType":
        return LocalType(tuple(JordanBlock(b.cls + c, b.size) for b in self.blocks))

    def scale(self, k: int) -> "LocalType":
        return LocalType(tuple(JordanBlock(b.cls.scale(k), b.size) for b in self.blocks))

    def specialize(self, witness) -> "LocalType":
        return LocalType(tuple(JordanBlock(b.cls.specialize(witness), b.size) for b in self.blocks))

    def substitute(self, assignment) -> "LocalType":
        return LocalType(tuple(JordanBlock(b.cls.substitute(assignment), b.size) for b in self.blocks))

    def determinant_class(self) -> ParamPoly:
        out = ParamPoly.const(0)
        for b in self.blocks:
            out = out + b.cls.as_poly() * b.size
        return out

    def eigenvalue_classes(self) -> Counter:
        """Class multiset counted with algebraic multiplicity."""
        out = Counter()
        for b in self.blocks:
            out[b.cls] += b.size
        return out

    def __str__(self):
        return "(" + ", ".join(str(b) for b in self.blocks) + ")"

    def to_json(self) -> list:
        return [{"class": b.cls.to_json(), "size": b.size} for b in self.blocks]

    @classmethod
    def from_json(cls, data) -> "LocalType":
        return cls(tuple(JordanBlock(ExponentClass.from_json(d["class"]), int(d["size"])) for d in data))


@dataclass(frozen=True)
class MonodromyTuple:
    finite_points: tuple  # ((label, LocalType), ...)
    infinity: LocalType
    rank: int = 0

    def __post_init__(self):
        pts = tuple((str(lbl), lt) for lbl, lt in self.finite_points)
        object.__setattr__(self, "finite_points", pts)
        labels = [lbl for lbl, _ in pts]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate point labels")
        rank = self.rank or self.infinity.dimension
        object.__setattr__(self, "rank", rank)
        for lbl, lt in pts + (("inf", self.infinity),):
            if lt.dimension != rank:
                raise RankMismatch(f"local type at {lbl} has dimension {lt.dimension}, expected {rank}")

    @property
    def labels(self) -> list:
        return [lbl for lbl, _ in self.finite_points]

    def local(self, label: str) -> LocalType:
        if label in ("inf", "oo"):
            return self.infinity
        for lbl, lt in self.finite_points:
            if lbl == label:
                return lt
        raise KeyError(label)

    def all_points(self) -> list:
        return list(self.finite_points) + [("inf", self.infinity)]

    def determinant_ok(self) -> bool:
        """Sum of all eigenvalue classes is an integer, identically in the parameters."""
        total = ParamPoly.const(0)
        for _, lt in self.all_points():
            total = total + lt.determinant_class()
        const, coeffs = total.affine_parts()
        return not coeffs and const.denominator == 1

    def specialize(self, witness) -> "MonodromyTuple":
        return MonodromyTuple(
            tuple((l, lt.specialize(witness)) for l, lt in self.finite_points),
            self.infinity.specialize(witness),
            self.rank,
        )

    def substitute(self, assignment) -> "MonodromyTuple":
        return MonodromyTuple(
            tuple((l, lt.substitute(assignment)) for l, lt in self.finite_points),
            self.infinity.substitute(assignment),
            self.rank,
        )

    def __str__(self):
        cols = [f"{l}: {lt}" for l, lt in self.all_points()]
        return f"rank {self.rank}; " + "; ".join(cols)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "points": [{"label": l, "blocks": lt.to_json()} for l, lt in self.finite_points],
            "infinity": {"blocks": self.infinity.to_json()},
        }

    @classmethod
    def from_json(cls, data) -> "MonodromyTuple":
        return cls(
            tuple((p["label"], LocalType.from_json(p["blocks"])) for p in data["points"]),
            LocalType.from_json(data["infinity"]["blocks"]),
            int(data.get("rank", 0)),
        )


def rank_one(classes: Mapping[str, object], infinity) -> MonodromyTuple:
    return MonodromyTuple(
        tuple((lbl, LocalType.of(c)) for lbl, c in classes.items()), LocalType.of(infinity), 1
    )


def rigidity_index(T: MonodromyTuple) -> int:
    points = T.all_points()
    return (2 - len(points)) * T.rank**2 + sum(lt.centralizer_dimension() for _, lt in points)


def tensor_rank_one(T: MonodromyTuple, L: MonodromyTuple) -> MonodromyTuple:
    """Twist every block by the rank-one class at the same point; absent points are trivial."""
    if L.rank != 1:
        raise RankMismatch("second factor must have rank one")
    extra = set(L.labels) - set(T.labels)
    if extra:
        raise PointSetMismatch(f"rank-one factor has points {sorted(extra)} not in the tuple")
    shifts = {lbl: lt.blocks[0].cls for lbl, lt in L.finite_points}
    return MonodromyTuple(
        tuple((lbl, lt.shift(shifts.get(lbl, ZERO))) for lbl, lt in T.finite_points),
        T.infinity.shift(L.infinity.blocks[0].cls),
        T.rank,
    )


def mc_rank(T: MonodromyTuple, lam) -> int:
    lam = ExponentClass.of(lam)
    if lam.is_trivial:
        raise NotApplicable("middle convolution needs a nontrivial class")
    finite = sum(lt.dimension - lt.count_class(ZERO) for _, lt in T.finite_points)
    at_inf = T.infinity.dimension - T.infinity.count_class(lam)
    return finite + at_inf - T.rank


def _mc_finite(lt: LocalType, lam: ExponentClass, new_rank: int, label: str) -> LocalType:
    neg = -lam
    out = []
    for b in lt.blocks:
        if b.cls == ZERO:
            if b.size > 1:
                out.append(JordanBlock(lam, b.size - 1))
        elif b.cls == neg:
            out.append(JordanBlock(ZERO, b.size + 1))
        else:
            out.append(JordanBlock(b.cls + lam, b.size))
    fill = new_rank - sum(b.size for b in out)
    if fill < 0:
        raise RankMismatch(f"middle convolution overflows the rank at {label}")
    out.extend(JordanBlock(ZERO, 1) for _ in range(fill))
    return LocalType(tuple(out))


def _mc_infinity(lt: LocalType, lam: ExponentClass, new_rank: int) -> LocalType:
    neg = -lam
    out = []
    for b in lt.blocks:
        if b.cls == lam:
            if b.size > 1:
                out.append(JordanBlock(ZERO, b.size - 1))
        elif b.cls == ZERO:
            out.append(JordanBlock(neg, b.size + 1))
        else:
            out.append(JordanBlock(b.cls - lam, b.size))
    fill = new_rank - sum(b.size for b in out)
    if fill < 0:
        raise RankMismatch("middle convolution overflows the rank at inf")
    out.extend(JordanBlock(neg, 1) for _ in range(fill))
    return LocalType(tuple(out))


def mc_local(T: MonodromyTuple, lam) -> MonodromyTuple:
    """Local monodromy of the middle convolution ``MC_lam``."""
    lam = ExponentClass.of(lam)
    n = mc_rank(T, lam)
    if n < 1:
        raise RankMismatch(f"middle convolution has rank {n}")
    return MonodromyTuple(
        tuple((lbl, _mc_finite(lt, lam, n, lbl)) for lbl, lt in T.finite_points),
        _mc_infinity(T.infinity, lam, n),
        n,
    )


def kummer_pullback_tuple(
    T: MonodromyTuple, k: int, preimages: Mapping[str, Sequence[str]] | None = None
) -> MonodromyTuple:
    """Pullback along ``x -> x**k``; ``preimages`` names the ``k`` points above each point other than 0."""
    if k < 1:
        raise ValueError("pullback degree must be a positive integer")
    preimages = dict(preimages or {})
    if "0" not in T.labels:
        raise PointSetMismatch("pullback needs 0 among the singular points")
    if k == 1:
        return T
    pts = []
    for lbl, lt in T.finite_points:
        if lbl == "0":
            pts.append((lbl, lt.scale(k)))
            continue
        above = preimages.get(lbl)
        if not above or len(above) != k:
            raise MissingPreimageLabels(f"need {k} preimage labels for point {lbl}")
        pts.extend((str(p), lt) for p in above)
    return MonodromyTuple(tuple(pts), T.infinity.scale(k), T.rank)


def scheme_classes(exponents: Iterable, witness: ParameterWitness) -> Counter:
    """Exponents reduced mod 1 under a witness, for comparison with eigenvalue classes."""
    out = Counter()
    for e in exponents:
        v = ParamPoly.coerce(e).evaluate(witness)
        out[ExponentClass(v)] += 1
    return out


def parse_local_type(text: str) -> LocalType:
    """Parse ``"J2(0), 0, 0"`` style local types; classes use the parameter expression syntax."""
    from .expr import parse_param

    blocks = []
    depth = 0
    item = ""
    parts = []
    for ch in text.strip().strip("[]"):
        if ch == "," and depth == 0:
            parts.append(item)
            item = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        item += ch
    if item.strip():
        parts.append(item)
    for part in parts:
        part = part.strip()
        if part.startswith("J") and "(" in part:
            size = int(part[1 : part.index("(")])
            cls = ExponentClass.of(parse_param(part[part.index("(") + 1 : part.rindex(")")]))
        else:
            size, cls = 1, ExponentClass.of(parse_param(part))
        blocks.append(JordanBlock(cls, size))
    return LocalType(tuple(blocks))
