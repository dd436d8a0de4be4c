"""Integer bookkeeping of local and global Hodge data on the punctured line.

Local data at a point is a table of counts ``nu[(a, l, p)]``: the dimension of
the degree-``p`` Hodge graded piece of the ``l``-primitive part of the nearby
cycles with exponent class ``a``.  Vectors indexed by the Hodge degree ``p``
are tuples starting at ``p = 0``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import ParameterWitness, as_rational, format_rational
from .errors import (
    Ambiguous,
    InconsistentProfile,
    MissingDelta,
    MissingPreimageLabels,
    NegativeCount,
    NoSolution,
    TrivialEigenvalueAtInfinity,
    WitnessRequired,
)
from .monodromy import ZERO, ExponentClass

INFINITY = "inf"


def trim(vec: Iterable[int]) -> tuple:
    out = list(vec)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _get(vec: Sequence[int], p: int) -> int:
    return vec[p] if 0 <= p < len(vec) else 0


def _add(u: Sequence[int], v: Sequence[int]) -> tuple:
    n = max(len(u), len(v))
    return tuple(_get(u, i) + _get(v, i) for i in range(n))


def _pad(vec: Sequence[int], n: int) -> tuple:
    return tuple(_get(vec, i) for i in range(n))


@dataclass(frozen=True)
class NearbyData:
    """Counts ``nu^p_{a,l}``; stored as a sorted tuple of ``((class, level, p), count)``."""

    counts: tuple = ()

    def __post_init__(self):
        merged: Counter = Counter()
        items = self.counts.items() if isinstance(self.counts, Mapping) else self.counts
        for (cls, level, p), n in items:
            cls = ExponentClass.of(cls)
            if level < 0 or p < 0:
                raise InconsistentProfile("levels and Hodge degrees must be non-negative")
            if n < 0:
                raise InconsistentProfile("negative nearby-cycle count")
            merged[(cls, int(level), int(p))] += int(n)
        object.__setattr__(self, "counts", tuple(sorted((k, v) for k, v in merged.items() if v)))

    @classmethod
    def of(cls, entries: Iterable) -> "NearbyData":
        """Entries ``(class, level, p, count)``."""
        return cls(tuple(((c, l, p), n) for c, l, p, n in entries))

    def as_dict(self) -> dict:
        return dict(self.counts)

    def classes(self) -> list:
        return sorted({c for (c, _, _), _ in self.counts})

    @property
    def rank(self) -> int:
        return sum((l + 1) * n for (_, l, _), n in self.counts)

    def nu(self, cls, level: int, p: int) -> int:
        return self.as_dict().get((ExponentClass.of(cls), level, p), 0)

    def level_vector(self, cls, level: int) -> tuple:
        cls = ExponentClass.of(cls)
        top = max((p for (c, l, p), _ in self.counts if c == cls and l == level), default=-1)
        return tuple(self.nu(cls, level, p) for p in range(top + 1))

    def full_by_class(self) -> dict:
        """``{class: vector}`` of full graded dimensions ``sum_l sum_{k<=l} nu^{p+k}_{a,l}``."""
        out: dict = {}
        for (c, l, p), n in self.counts:
            vec = list(out.get(c, ()))
            for k in range(l + 1):
                q = p - k
                if q < 0:
                    raise InconsistentProfile(f"level {l} block at p={p} reaches negative degree")
                while len(vec) <= q:
                    vec.append(0)
                vec[q] += n
            out[c] = tuple(vec)
        return out

    def full(self) -> tuple:
        total: tuple = ()
        for vec in self.full_by_class().values():
            total = _add(total, vec)
        return trim(total)

    def primitive_zero(self) -> tuple:
        """``sum_l nu^p_{0,l}``."""
        vec: tuple = ()
        for (c, l, p), n in self.counts:
            if c == ZERO:
                vec = _add(vec, tuple(n if q == p else 0 for q in range(p + 1)))
        return vec

    def specialize(self, witness) -> "NearbyData":
        return NearbyData(tuple(((c.specialize(witness), l, p), n) for (c, l, p), n in self.counts))

    def map_classes(self, fn) -> "NearbyData":
        return NearbyData(tuple(((fn(c), l, p), n) for (c, l, p), n in self.counts))

    def to_json(self) -> list:
        return [
            {"class": str(c), "level": l, "p": p, "count": n} for (c, l, p), n in self.counts
        ]

    @classmethod
    def from_json(cls, data) -> "NearbyData":
        return cls(tuple(((ExponentClass.of(d["class"]), d["level"], d["p"]), d["count"]) for d in data))


@dataclass(frozen=True)
class HodgeProfile:
    """Local data per point plus optional global degrees and aggregate overrides.

    Aggregate-only profiles (no points) carry ``h``, ``omega`` and possibly
    ``omega_ne_inf`` directly.
    """

    rank: int
    points: tuple = ()  # ((label, NearbyData), ...)
    delta: tuple | None = None
    h: tuple | None = None
    omega: tuple | None = None
    omega_ne_inf: tuple | None = None

    def __post_init__(self):
        pts = self.points.items() if isinstance(self.points, Mapping) else self.points
        object.__setattr__(self, "points", tuple((str(l), d) for l, d in pts))
        for name in ("delta", "h", "omega", "omega_ne_inf"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, tuple(int(x) for x in v))

    @property
    def labels(self) -> list:
        return [l for l, _ in self.points]

    def local(self, label: str) -> NearbyData:
        for l, d in self.points:
            if l == label:
                return d
        raise KeyError(label)

    def has(self, label: str) -> bool:
        return label in self.labels

    def specialize(self, witness) -> "HodgeProfile":
        return HodgeProfile(
            self.rank,
            tuple((l, d.specialize(witness)) for l, d in self.points),
            self.delta,
            self.h,
            self.omega,
            self.omega_ne_inf,
        )

    def with_delta(self, delta) -> "HodgeProfile":
        return HodgeProfile(self.rank, self.points, tuple(delta), self.h, self.omega, self.omega_ne_inf)

    def to_json(self) -> dict:
        out: dict = {"rank": self.rank}
        for name in ("h", "delta", "omega", "omega_ne_inf"):
            v = getattr(self, name)
            if v is not None:
                out[name] = list(v)
        out["points"] = [{"label": l, "nu": d.to_json()} for l, d in self.points]
        return out

    @classmethod
    def from_json(cls, data) -> "HodgeProfile":
        return cls(
            int(data["rank"]),
            tuple((p["label"], NearbyData.from_json(p["nu"])) for p in data.get("points", [])),
            *(tuple(data[k]) if k in data else None for k in ("delta", "h", "omega", "omega_ne_inf")),
        )


@dataclass(frozen=True)
class Counts:
    h: tuple
    omega_by_point: dict
    omega_ne_inf: tuple
    omega: tuple

    def to_json(self) -> dict:
        return {
            "h": list(self.h),
            "omega_by_point": {k: list(v) for k, v in self.omega_by_point.items()},
            "omega_ne_inf": list(self.omega_ne_inf),
            "omega": list(self.omega),
        }


def derive_counts(P: HodgeProfile) -> Counts:
    """``h`` as the common full nearby dimension, and the ``omega`` aggregates."""
    if not P.points:
        if P.h is None or P.omega is None:
            raise InconsistentProfile("profile has neither local data nor aggregates")
        n = len(P.h)
        ne = P.omega_ne_inf if P.omega_ne_inf is not None else P.omega
        return Counts(P.h, {}, _pad(ne, n), _pad(P.omega, n))
    fulls = {l: d.full() for l, d in P.points}
    distinct = set(fulls.values())
    if len(distinct) != 1:
        detail = ", ".join(f"{l}: {list(v)}" for l, v in fulls.items())
        raise InconsistentProfile(f"full nearby dimensions differ between points ({detail})")
    h = distinct.pop()
    if sum(h) != P.rank:
        raise InconsistentProfile(f"Hodge numbers {list(h)} do not sum to the rank {P.rank}")
    for l, d in P.points:
        if d.rank != P.rank:
            raise InconsistentProfile(f"local data at {l} has rank {d.rank}, expected {P.rank}")
    n = len(h)
    omega_by_point = {}
    for l, d in P.points:
        prim = d.primitive_zero()
        omega_by_point[l] = tuple(_get(h, p) - _get(prim, p) for p in range(n))
    ne: tuple = _pad((), n)
    total: tuple = _pad((), n)
    for l, w in omega_by_point.items():
        total = _add(total, w)
        if l != INFINITY:
            ne = _add(ne, w)
    counts = Counts(h, omega_by_point, ne, total)
    for name, given in (("h", P.h), ("omega", P.omega), ("omega_ne_inf", P.omega_ne_inf)):
        if given is not None and trim(given) != trim(getattr(counts, name)):
            raise InconsistentProfile(f"stored {name} {list(given)} disagrees with local data")
    return counts


def parabolic_rigidity_solve(h: Sequence[int], omega: Sequence[int]) -> tuple:
    """Solve ``delta^(i-1) - delta^i - h^(i-1) - h^i + omega^(i-1) = 0`` from ``delta^0 = -h^0``."""
    n = max(len(h), 1)
    delta = [-_get(h, 0)]
    for i in range(1, n):
        delta.append(delta[-1] - _get(h, i - 1) - _get(h, i) + _get(omega, i - 1))
    return tuple(delta)


def rigidity_residual(h: Sequence[int], delta: Sequence[int], omega: Sequence[int]) -> int:
    """Left side of the recursion one step past the top degree (zero when consistent)."""
    n = len(delta)
    return _get(delta, n - 1) - _get(h, n - 1) + _get(omega, n - 1)


def parabolic_hodge_numbers(h: Sequence[int], delta: Sequence[int], omega: Sequence[int]) -> tuple:
    """``delta^(p-1) - delta^p - h^(p-1) - h^p + omega^(p-1)`` for every p."""
    n = max(len(h), len(delta), len(omega)) + 1
    out = []
    for p in range(n):
        out.append(
            _get(delta, p - 1) - _get(delta, p) - _get(h, p - 1) - _get(h, p) + _get(omega, p - 1)
        )
    return out


def _scale_class(c: ExponentClass, k: int) -> ExponentClass:
    return c.scale(k)


def pullback_profile(
    P: HodgeProfile,
    k: int,
    preimages: Mapping[str, Sequence[str]] | None,
    witness: ParameterWitness | None,
) -> HodgeProfile:
    """Hodge data of the pullback along ``x -> x**k``."""
    if k < 1:
        raise ValueError("pullback degree must be a positive integer")
    if k == 1:
        return P
    if P.delta is None:
        raise MissingDelta("pullback needs the global degrees delta")
    if witness is None:
        raise WitnessRequired("pullback needs a parameter witness to evaluate floor(k*b)")
    if not (P.has("0") and P.has(INFINITY)):
        raise InconsistentProfile("pullback needs local data at 0 and inf")
    P = P.specialize(witness)
    preimages = dict(preimages or {})
    counts = derive_counts(P)
    n = len(counts.h)
    delta = [k * _get(P.delta, p) for p in range(n)]
    points = []
    for label, data in P.points:
        if label in ("0", INFINITY):
            for c, vec in data.full_by_class().items():
                fl = math.floor(k * c.constant)
                for p in range(n):
                    delta[p] += fl * _get(vec, p)
            points.append((label, data.map_classes(lambda c: _scale_class(c, k))))
        else:
            above = preimages.get(label)
            if not above or len(above) != k:
                raise MissingPreimageLabels(f"need {k} preimage labels for point {label}")
            points.extend((str(q), data) for q in above)
    order = {"0": 0, INFINITY: 2}
    points.sort(key=lambda item: order.get(item[0], 1))
    return HodgeProfile(P.rank, tuple(points), tuple(delta))


def mc_profile(
    P: HodgeProfile,
    mu,
    omega_ne_inf: Sequence[int] | None,
    witness: ParameterWitness | None,
) -> HodgeProfile:
    """Local data at infinity and Hodge numbers of the middle convolution ``MC_mu``.

    Returns a profile with a single point ``inf`` and ``h`` set; ``delta`` is left unknown.
    """
    if P.delta is None:
        raise MissingDelta("middle convolution transport needs delta")
    if witness is None:
        raise WitnessRequired("middle convolution transport needs a parameter witness")
    P = P.specialize(witness)
    mu = ExponentClass.of(mu).specialize(witness)
    counts = derive_counts(P)
    if omega_ne_inf is not None:
        ne = tuple(omega_ne_inf)
    elif P.points or P.omega_ne_inf is not None:
        ne = counts.omega_ne_inf
    else:
        ne = None
    h, delta, omega = counts.h, P.delta, counts.omega
    one_minus = ExponentClass(1 - mu.constant)
    entries: Counter = Counter()
    at_inf = P.local(INFINITY).counts if P.has(INFINITY) else ()
    for (c, l, p), n in at_inf:
        if c == ZERO:
            entries[(one_minus, l + 1, p + 1)] += n
        else:
            entries[(ExponentClass(c.constant + 1 - mu.constant), l, p)] += n
    top = max(len(h), len(delta), len(omega), len(ne or ())) + 1
    for p in range(top):
        n = (
            _get(delta, p - 1) - _get(delta, p) - _get(h, p - 1) - _get(h, p) + _get(omega, p - 1)
        )
        if n < 0:
            raise NegativeCount(f"parabolic count at p={p} is {n}")
        if n:
            entries[(one_minus, 0, p)] += n
    data = NearbyData(tuple(entries.items()))
    rank = data.rank
    if ne is None:
        # aggregate input without the finite part of omega: read h off the local data
        new_h = trim(data.full())
    else:
        new_h = trim(_get(delta, p - 1) - _get(delta, p) + _get(ne, p - 1) for p in range(top))
        if any(x < 0 for x in new_h):
            raise NegativeCount(f"Hodge numbers {list(new_h)} have a negative entry")
        if sum(new_h) != rank:
            raise InconsistentProfile(f"Hodge numbers {list(new_h)} do not sum to the new rank {rank}")
        if trim(data.full()) != new_h:
            raise InconsistentProfile(
                f"local data at inf gives {list(data.full())}, formula gives {list(new_h)}"
            )
    return HodgeProfile(rank, ((INFINITY, data),), None, new_h)


@dataclass(frozen=True)
class SelfDualSolution:
    h: tuple
    nu: NearbyData | None

    def to_json(self) -> dict:
        return {"h": list(self.h), "nu": self.nu.to_json() if self.nu is not None else None}


def selfdual_completion_solve(
    rank: int,
    length: int,
    blocks: Sequence[int] | None = None,
    cls=ZERO,
    fixed: Mapping[tuple, int] | None = None,
    h_fixed: Mapping[int, int] | None = None,
) -> SelfDualSolution:
    """Find the unique palindromic Hodge vector of the given length (nonzero ends).

    With ``blocks`` (Jordan block sizes at a point carrying the single class
    ``cls``) every placement of the blocks' top degrees is tried and the
    completed nearby data is returned; ``fixed`` pins ``nu[(level, p)]`` and
    ``h_fixed`` pins entries of ``h``.
    """
    if length < 1:
        raise ValueError("length must be positive")
    fixed = dict(fixed or {})
    h_fixed = dict(h_fixed or {})
    cls = ExponentClass.of(cls)

    def admissible(h) -> bool:
        return (
            len(h) == length
            and sum(h) == rank
            and h[0] > 0
            and h[-1] > 0
            and tuple(h) == tuple(reversed(h))
            and all(_get(h, p) == v for p, v in h_fixed.items())
        )

    solutions = set()
    if blocks is None:
        if fixed:
            raise ValueError("level constraints need the Jordan block sizes")
        for h in itertools.product(range(rank + 1), repeat=length):
            if admissible(h):
                solutions.add((h, None))
    else:
        if sum(blocks) != rank:
            raise InconsistentProfile(f"blocks {list(blocks)} do not add up to rank {rank}")
        by_size = Counter(blocks)
        choices = []
        for size, mult in sorted(by_size.items()):
            level = size - 1
            tops = range(level, length)
            choices.append([(level, combo) for combo in itertools.combinations_with_replacement(tops, mult)])
        for pick in itertools.product(*choices):
            nu: Counter = Counter()
            for level, combo in pick:
                for top in combo:
                    nu[(level, top)] += 1
            if any(nu.get(key, 0) != v for key, v in fixed.items()):
                continue
            h = [0] * length
            for (level, top), n in nu.items():
                for q in range(top - level, top + 1):
                    h[q] += n
            if admissible(h):
                solutions.add((tuple(h), tuple(sorted(nu.items()))))
    if not solutions:
        raise NoSolution("no palindromic Hodge vector satisfies the constraints")
    if len(solutions) > 1:
        listing = "; ".join(str(list(h)) for h, _ in sorted(solutions, key=lambda s: s[0]))
        raise Ambiguous(f"{len(solutions)} completions: {listing}")
    h, nu = solutions.pop()
    data = None if nu is None else NearbyData(tuple(((cls, l, p), n) for (l, p), n in nu))
    return SelfDualSolution(h, data)


@dataclass(frozen=True)
class IrregularHodgeTable:
    """Multiset of ``(jump, dimension)``; equal jumps are merged."""

    entries: tuple = ()

    def __post_init__(self):
        merged: Counter = Counter()
        for j, d in self.entries:
            if d < 0:
                raise InconsistentProfile("negative irregular Hodge number")
            merged[as_rational(j)] += int(d)
        object.__setattr__(self, "entries", tuple(sorted((j, d) for j, d in merged.items() if d)))

    @property
    def rank(self) -> int:
        return sum(d for _, d in self.entries)

    def shifted(self, c) -> "IrregularHodgeTable":
        c = as_rational(c)
        return IrregularHodgeTable(tuple((j + c, d) for j, d in self.entries))

    def __str__(self):
        return "{" + ", ".join(f"({format_rational(j)}, {d})" for j, d in self.entries) + "}"

    def to_json(self) -> list:
        return [{"jump": format_rational(j), "dim": d} for j, d in self.entries]


def stationary_phase_table(P: HodgeProfile, witness: ParameterWitness | None, untwist_shift=0) -> IrregularHodgeTable:
    """Jumps ``a + p + shift`` with dimension ``sum_l sum_{k<=l} nu^{p+k}_{inf,a,l}``."""
    data = P.local(INFINITY)
    if witness is not None:
        data = data.specialize(witness)
    elif any(not c.is_constant for c in data.classes()):
        raise WitnessRequired("symbolic classes at infinity need a witness")
    shift = as_rational(untwist_shift)
    entries = []
    for c, vec in data.full_by_class().items():
        if c == ZERO:
            raise TrivialEigenvalueAtInfinity("eigenvalue 1 at infinity; twist before taking the transform")
        for p, d in enumerate(vec):
            if d:
                entries.append((c.constant + p + shift, d))
    return IrregularHodgeTable(tuple(entries))


def tables_equal_up_to_shift(A: IrregularHodgeTable, B: IrregularHodgeTable) -> bool:
    return shift_between(A, B) is not None


def shift_between(A: IrregularHodgeTable, B: IrregularHodgeTable) -> Fraction | None:
    """The ``c`` with ``A == B + c``, or ``None``."""
    if not A.entries or not B.entries:
        return Fraction(0) if A.entries == B.entries else None
    c = A.entries[0][0] - B.entries[0][0]
    return c if B.shifted(c) == A else None


def columns_table(columns: Mapping[str, Sequence[int]], witness: ParameterWitness) -> IrregularHodgeTable:
    """Table from labelled columns ``{sigma: [d^0, d^1, ...]}`` with jumps ``sigma + p``."""
    from .expr import parse_param

    entries = []
    for label, dims in columns.items():
        sigma = parse_param(str(label)).evaluate(witness)
        for p, d in enumerate(dims):
            if d:
                entries.append((sigma + p, d))
    return IrregularHodgeTable(tuple(entries))


@dataclass(frozen=True)
class HodgeTable:
    """A printed table: optional aggregate columns and ``nu`` columns at infinity.

    ``nu`` maps ``(class text, level)`` to a vector over ``p``.
    """

    h: tuple | None = None
    delta: tuple | None = None
    omega: tuple | None = None
    omega_ne_inf: tuple | None = None
    nu: tuple = ()  # (((class, level), vector), ...)

    def __post_init__(self):
        for name in ("h", "delta", "omega", "omega_ne_inf"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, tuple(int(x) for x in v))
        items = self.nu.items() if isinstance(self.nu, Mapping) else self.nu
        object.__setattr__(self, "nu", tuple(((str(c), int(l)), tuple(v)) for (c, l), v in items))

    def to_json(self) -> dict:
        out = {}
        for name in ("h", "delta", "omega", "omega_ne_inf"):
            v = getattr(self, name)
            if v is not None:
                out[name] = list(v)
        out["nu_inf"] = [{"class": c, "level": l, "by_p": list(v)} for (c, l), v in self.nu]
        return out


def compare_with_table(
    P: HodgeProfile, table: HodgeTable, witness: ParameterWitness | None, delta=None
) -> list:
    """Mismatches between a computed profile and a printed table (empty when they agree)."""
    problems = []
    counts = derive_counts(P)
    computed = {
        "h": counts.h,
        "delta": delta if delta is not None else P.delta,
        "omega": counts.omega if P.points else P.omega,
        "omega_ne_inf": counts.omega_ne_inf if P.points else P.omega_ne_inf,
    }
    for name in ("h", "delta", "omega", "omega_ne_inf"):
        want = getattr(table, name)
        if want is None:
            continue
        got = computed[name]
        if got is None or trim(got) != trim(want):
            problems.append(f"{name}: expected {list(want)}, computed {None if got is None else list(got)}")
    if table.nu:
        data = P.local(INFINITY)
        if witness is not None:
            data = data.specialize(witness)
        seen = set()
        for (label, level), want in table.nu:
            c = ExponentClass.of(label)
            if witness is not None:
                c = c.specialize(witness)
            got = data.level_vector(c, level)
            seen.add((c, level))
            if trim(got) != trim(want):
                problems.append(f"nu[{label}, l={level}]: expected {list(want)}, computed {list(got)}")
        for (c, l, p), n in data.counts:
            if (c, l) not in seen:
                problems.append(f"nu[{c}, l={l}] at p={p} is {n} but the table has no such column")
    return problems
