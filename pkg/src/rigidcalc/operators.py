"""Differential operators in the Weyl algebra Q(a,b,t,mu)[x]<d>.

The canonical representation is the theta form ``sum_i x**i * P_i(T)`` with
``T = x*d`` the Euler operator.  The normal-ordered delta form (all ``x`` to the
left of all ``d``) is kept for the raw Fourier transform and for expansions at
finite singular points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from .algebra import (
    ParamPoly,
    ParameterWitness,
    ThetaPoly,
    format_rational,
    rational_roots,
)
from .errors import (
    DivisionNotExact,
    IrrationalExponent,
    NotLeftDivisible,
    NotSingular,
    UncertifiedExponent,
    ZeroDivisor,
    ZeroOperator,
)


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def as_point(point):
    """Normalize a singular-point label: ``INF`` or a ParamPoly."""
    if point is INF or point in ("inf", "oo", "infinity"):
        return INF
    return ParamPoly.coerce(point)


def point_label(point) -> str:
    return "inf" if point is INF else str(point)


def _falling_factorial(n: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= n - j
    return out


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


class ThetaFormOperator:
    """``sum_i x**i * P_i(T)``; stored terms are nonzero."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, ThetaPoly] | None = None):
        clean = {}
        for i, p in (terms or {}).items():
            if i < 0:
                raise ValueError("negative x-degrees are not allowed in theta form")
            p = ThetaPoly._coerce(p)
            if not p.is_zero():
                clean[int(i)] = p
        self.terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def from_theta_poly(cls, p, x_degree: int = 0) -> "ThetaFormOperator":
        return cls({x_degree: ThetaPoly._coerce(p)})

    @classmethod
    def x(cls) -> "ThetaFormOperator":
        return cls({1: ThetaPoly.const(1)})

    @classmethod
    def one(cls) -> "ThetaFormOperator":
        return cls({0: ThetaPoly.const(1)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def x_degree(self) -> int:
        if not self.terms:
            raise ZeroOperator("x-degree of the zero operator")
        return max(self.terms)

    @property
    def x_valuation(self) -> int:
        if not self.terms:
            raise ZeroOperator("x-valuation of the zero operator")
        return min(self.terms)

    @property
    def order(self) -> int:
        """Differential order, i.e. the largest theta-degree among the coefficients."""
        if not self.terms:
            raise ZeroOperator("order of the zero operator")
        return max(p.degree for p in self.terms.values())

    def coeff(self, i: int) -> ThetaPoly:
        return self.terms.get(i, ThetaPoly())

    def symbols(self) -> frozenset:
        out = frozenset()
        for p in self.terms.values():
            out |= p.symbols()
        return out

    def map_coeffs(self, fn) -> "ThetaFormOperator":
        return ThetaFormOperator({i: fn(p) for i, p in self.terms.items()})

    def evaluate(self, witness) -> "ThetaFormOperator":
        return self.map_coeffs(lambda p: p.evaluate(witness))

    def substitute_params(self, assignment) -> "ThetaFormOperator":
        return self.map_coeffs(lambda p: p.substitute_params(assignment))

    def __add__(self, other):
        if not isinstance(other, ThetaFormOperator):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return ThetaFormOperator({i: self.coeff(i) + other.coeff(i) for i in keys})

    def __neg__(self):
        return self.map_coeffs(lambda p: -p)

    def __sub__(self, other):
        if not isinstance(other, ThetaFormOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "ThetaFormOperator":
        c = ParamPoly.coerce(c)
        return self.map_coeffs(lambda p: p * c)

    def __mul__(self, other):
        if isinstance(other, ThetaFormOperator):
            return op_mul(self, other)
        if isinstance(other, (int, Fraction, ParamPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, ThetaFormOperator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.terms.items()))
        return self._hash

    def __str__(self):
        return format_operator(self)

    def __repr__(self):
        return f"ThetaFormOperator({self})"


def format_operator(op: ThetaFormOperator) -> str:
    """Canonical text: x-degree ascending, theta-degree descending, re-parseable."""
    if op.is_zero():
        return "0"
    parts = []
    for i, p in op.terms.items():
        body = f"({p})"
        if i == 0:
            parts.append(body)
        elif i == 1:
            parts.append(f"x*{body}")
        else:
            parts.append(f"x^{i}*{body}")
    return " + ".join(parts)


class DeltaFormOperator:
    """Normal-ordered ``sum c[m, n] * x**m * d**n``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        clean = {}
        for (m, n), c in (terms or {}).items():
            if m < 0 or n < 0:
                raise ValueError("delta-form exponents must be non-negative")
            c = ParamPoly.coerce(c)
            if not c.is_zero():
                clean[(int(m), int(n))] = c
        self.terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def x(cls) -> "DeltaFormOperator":
        return cls({(1, 0): 1})

    @classmethod
    def d(cls) -> "DeltaFormOperator":
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c) -> "DeltaFormOperator":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def order(self) -> int:
        return max(n for _, n in self.terms) if self.terms else -1

    def leading_coefficient(self) -> dict:
        """Coefficient of the top power of ``d`` as ``{x-degree: ParamPoly}``."""
        n = self.order
        return {m: c for (m, k), c in self.terms.items() if k == n}

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = DeltaFormOperator.const(other)
        if not isinstance(other, DeltaFormOperator):
            return NotImplemented
        res = dict(self.terms)
        for key, c in other.terms.items():
            res[key] = res.get(key, ParamPoly.const(0)) + c
        return DeltaFormOperator(res)

    __radd__ = __add__

    def __neg__(self):
        return DeltaFormOperator({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            c = ParamPoly.coerce(other)
            return DeltaFormOperator({k: v * c for k, v in self.terms.items()})
        if not isinstance(other, DeltaFormOperator):
            return NotImplemented
        res: dict = {}
        for (m, n), c1 in self.terms.items():
            for (p, q), c2 in other.terms.items():
                c = c1 * c2
                # d^n x^p = sum_k C(n,k) p!/(p-k)! x^(p-k) d^(n-k)
                for k in range(min(n, p) + 1):
                    w = comb(n, k) * _falling_factorial(p, k)
                    key = (m + p - k, n - k + q)
                    res[key] = res.get(key, ParamPoly.const(0)) + c * w
        return DeltaFormOperator(res)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        out = DeltaFormOperator.const(1)
        for _ in range(n):
            out = out * self
        return out

    def left_x_power(self, e: int) -> "DeltaFormOperator":
        return DeltaFormOperator({(m + e, n): c for (m, n), c in self.terms.items()})

    def negate_generators(self) -> "DeltaFormOperator":
        """Image under the ring automorphism x -> -x, d -> -d."""
        return DeltaFormOperator({(m, n): c * (-1) ** (m + n) for (m, n), c in self.terms.items()})

    def evaluate(self, witness) -> "DeltaFormOperator":
        return DeltaFormOperator({k: ParamPoly.const(c.evaluate(witness)) for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, DeltaFormOperator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.terms.items()))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, n), c in self.terms.items():
            gens = []
            if m:
                gens.append("x" if m == 1 else f"x^{m}")
            if n:
                gens.append("d" if n == 1 else f"d^{n}")
            if not gens:
                parts.append(f"({c})")
            elif c == 1:
                parts.append("*".join(gens))
            else:
                parts.append(f"({c})*" + "*".join(gens))
        return " + ".join(parts)

    def __repr__(self):
        return f"DeltaFormOperator({self})"


@dataclass(frozen=True)
class LaurentLocalForm:
    """Local expansion ``sum_k u**k * Q_k(T_u)`` around a finite point, ``u = x - s``."""

    point: object
    terms: Mapping[int, ThetaPoly]

    @property
    def valuation(self) -> int:
        if not self.terms:
            raise ZeroOperator("empty local expansion")
        return min(self.terms)

    def lowest(self) -> ThetaPoly:
        return self.terms[self.valuation]


@dataclass(frozen=True)
class RiemannScheme:
    """Local exponents per singular point; exponents are ParamPolys (rationals under a witness)."""

    exponents: Mapping[object, tuple]
    certified: bool = field(default=False, compare=False)

    def __post_init__(self):
        norm = {}
        for pt, exps in self.exponents.items():
            norm[as_point(pt)] = tuple(sorted((ParamPoly.coerce(e) for e in exps), key=ParamPoly.sort_key))
        object.__setattr__(self, "exponents", norm)

    def points(self) -> list:
        return list(self.exponents)

    def at(self, point) -> tuple:
        return self.exponents[as_point(point)]

    def evaluate(self, witness) -> "RiemannScheme":
        return RiemannScheme(
            {
                (pt if pt is INF else ParamPoly.const(pt.evaluate(witness))): [
                    ParamPoly.const(e.evaluate(witness)) for e in exps
                ]
                for pt, exps in self.exponents.items()
            }
        )

    def to_json(self) -> dict:
        return {point_label(pt): [str(e) for e in exps] for pt, exps in self.exponents.items()}


# ---------------------------------------------------------------------------
# operations


def op_mul(lhs: ThetaFormOperator, rhs: ThetaFormOperator) -> ThetaFormOperator:
    """Product via ``x^i P(T) * x^j Q(T) = x^(i+j) P(T+j) Q(T)``."""
    res: dict = {}
    for i, p in lhs.terms.items():
        shifted: dict = {}
        for j, q in rhs.terms.items():
            if j not in shifted:
                shifted[j] = p.shift(j)
            key = i + j
            term = shifted[j] * q
            res[key] = res[key] + term if key in res else term
    return ThetaFormOperator(res)


def to_delta_form(op: ThetaFormOperator) -> DeltaFormOperator:
    """Rewrite ``T^k`` in falling factorials, using ``x^j d^j = T(T-1)...(T-j+1)``."""
    res: dict = {}
    for i, p in op.terms.items():
        for k, c in enumerate(p.coeffs):
            if c.is_zero():
                continue
            for j in range(k + 1):
                s = _stirling2(k, j)
                if s:
                    key = (i + j, j)
                    res[key] = res.get(key, ParamPoly.const(0)) + c * s
    return DeltaFormOperator(res)


def to_theta_form(op: DeltaFormOperator) -> tuple[int, ThetaFormOperator]:
    """Return ``(e, Q)`` with ``x^e * op = Q`` and ``e >= 0`` minimal."""
    e = max([0] + [n - m for (m, n) in op.terms])
    res: dict = {}
    for (m, n), c in op.terms.items():
        key = m + e - n
        term = ThetaPoly.falling(n) * c
        res[key] = res[key] + term if key in res else term
    return e, ThetaFormOperator(res)


def ft_raw(op: DeltaFormOperator) -> DeltaFormOperator:
    """Fourier transform ``x -> d, d -> -x`` followed by normal ordering."""
    res: dict = {}
    for (m, n), c in op.terms.items():
        # d^m (-x)^n
        sign = -1 if n % 2 else 1
        for k in range(min(m, n) + 1):
            w = sign * comb(m, k) * _falling_factorial(n, k)
            key = (n - k, m - k)
            res[key] = res.get(key, ParamPoly.const(0)) + c * w
    return DeltaFormOperator(res)


def ft_theta(op: ThetaFormOperator) -> ThetaFormOperator:
    """``x^d FT(P) = sum_i x^(d-i) (T-i+1)...T * P_i(-1-T)`` with ``d`` the x-degree of P."""
    if op.is_zero():
        raise ZeroOperator("Fourier transform of the zero operator")
    d = op.x_degree
    return ThetaFormOperator(
        {d - i: ThetaPoly.falling(i) * p.substitute_affine(-1, -1) for i, p in op.terms.items()}
    )


def kummer_pullback(op: ThetaFormOperator, k: int) -> ThetaFormOperator:
    """Pullback along ``x -> x^k``: ``sum_i x^(k i) P_i(T/k)``."""
    if k < 1:
        raise ValueError("pullback degree must be a positive integer")
    u = Fraction(1, k)
    return ThetaFormOperator({k * i: p.substitute_affine(u, 0) for i, p in op.terms.items()})


def inversion_normalized(op: ThetaFormOperator) -> ThetaFormOperator:
    """``x^d [1/x]^* P = sum_i x^(d-i) P_i(-T)``."""
    d = op.x_degree
    return ThetaFormOperator({d - i: p.substitute_affine(-1, 0) for i, p in op.terms.items()})


def twist_shift(op: ThetaFormOperator, s) -> ThetaFormOperator:
    """Replace every ``P_i(T)`` by ``P_i(T + s)``."""
    s = ParamPoly.coerce(s)
    if s.is_zero():
        return op
    return op.map_coeffs(lambda p: p.shift(s))


def left_multiply(q: ThetaPoly, op: ThetaFormOperator) -> ThetaFormOperator:
    """``Q(T) * H`` using ``Q(T) x^i = x^i Q(T+i)``."""
    return ThetaFormOperator({i: q.shift(i) * h for i, h in op.terms.items()})


def left_factor_divide(op: ThetaFormOperator, q: ThetaPoly) -> ThetaFormOperator:
    """Return ``H`` with ``Q(T) * H = op``; raises :class:`NotLeftDivisible`."""
    q = ThetaPoly._coerce(q)
    if q.is_zero():
        raise ZeroDivisor("left division by the zero polynomial")
    res = {}
    for i, a_i in op.terms.items():
        try:
            res[i] = a_i.exact_div(q.shift(i))
        except DivisionNotExact:
            raise NotLeftDivisible(f"Q(T+{i}) does not divide the x^{i} coefficient") from None
    return ThetaFormOperator(res)


def local_expansion(op: ThetaFormOperator, s) -> LaurentLocalForm:
    """Expand around the finite point ``s`` in ``u = x - s``, grouping by ``T_u = u d``."""
    s = ParamPoly.coerce(s)
    delta = to_delta_form(op)
    spow = [ParamPoly.const(1)]
    top = max((m for m, _ in delta.terms), default=0)
    for _ in range(top):
        spow.append(spow[-1] * s)
    res: dict = {}
    for (m, n), c in delta.terms.items():
        for j in range(m + 1):
            coeff = c * (comb(m, j) * spow[m - j]) if m - j else c * comb(m, j)
            if coeff.is_zero():
                continue
            # u^j d^n = u^(j-n) * (T_u)(T_u - 1)...(T_u - n + 1)
            term = ThetaPoly.falling(n) * coeff
            key = j - n
            res[key] = res[key] + term if key in res else term
    return LaurentLocalForm(point=s, terms={k: v for k, v in sorted(res.items()) if not v.is_zero()})


def indicial_at(op: ThetaFormOperator, point, witness: ParameterWitness | None = None) -> ThetaPoly:
    """Indicial polynomial at ``0``, ``INF`` or a finite nonzero point, optionally specialized."""
    if op.is_zero():
        raise ZeroOperator("indicial polynomial of the zero operator")
    point = as_point(point)
    if witness is not None:
        op = op.evaluate(witness)
        if point is not INF:
            point = ParamPoly.const(point.evaluate(witness))
    if point is INF:
        return op.terms[op.x_degree].substitute_affine(-1, 0)
    if point.is_zero():
        return op.terms[op.x_valuation]
    return local_expansion(op, point).lowest()


def _leading_vanishes(op: ThetaFormOperator, point: ParamPoly) -> bool:
    lead = to_delta_form(op).leading_coefficient()
    total = ParamPoly.const(0)
    for m, c in lead.items():
        total = total + c * point**m
    return total.is_zero()


def riemann_scheme(op: ThetaFormOperator, points: Sequence, witness: ParameterWitness) -> RiemannScheme:
    """Discover the exponents at each listed point under ``witness``."""
    concrete = op.evaluate(witness)
    result = {}
    for raw in points:
        pt = as_point(raw)
        if pt is not INF:
            pt = ParamPoly.const(pt.evaluate(witness))
            if not _leading_vanishes(concrete, pt):
                raise NotSingular(f"{point_label(pt)} is not a singular point")
        ind = indicial_at(concrete, pt)
        roots = rational_roots(ind)
        if len(roots) != ind.degree:
            raise IrrationalExponent(
                f"only {len(roots)} of {ind.degree} exponents at {point_label(pt)} are rational"
            )
        result[pt] = roots
    return RiemannScheme(result)


def certify_exponents(indicial: ThetaPoly, exponents: Iterable) -> ThetaPoly:
    """Divide ``indicial`` by ``(T - e)`` for each claimed exponent; return the cofactor."""
    rest = indicial
    for e in exponents:
        try:
            rest = rest.exact_div(ThetaPoly([-ParamPoly.coerce(e), 1]))
        except DivisionNotExact:
            raise UncertifiedExponent(f"{e} is not a root of {indicial}") from None
    return rest


def certify_scheme(op: ThetaFormOperator, scheme: RiemannScheme) -> RiemannScheme:
    """Symbolically check every claimed exponent and that the counts exhaust each indicial polynomial."""
    for pt, exps in scheme.exponents.items():
        ind = indicial_at(op, pt)
        rest = certify_exponents(ind, exps)
        if rest.degree != 0:
            raise UncertifiedExponent(
                f"exponents at {point_label(pt)} account for {len(exps)} of {ind.degree} roots"
            )
    return RiemannScheme(scheme.exponents, certified=True)


def newton_slopes_at_infinity(op: ThetaFormOperator) -> list[tuple[Fraction, int]]:
    """Slopes at infinity with multiplicities, from the hull of the points ``(i, deg P_i)``."""
    if op.is_zero():
        raise ZeroOperator("Newton polygon of the zero operator")
    d = op.x_degree
    # work in (k, j) = (deg P_i, d - i): the polygon starts at (deg P_d, 0)
    pts = sorted((p.degree, d - i) for i, p in op.terms.items())
    start = (op.terms[d].degree, 0)
    slopes: dict = {}
    if start[0]:
        slopes[Fraction(0)] = start[0]
    cur = start
    while True:
        ahead = [(k, j) for k, j in pts if k > cur[0]]
        if not ahead:
            break
        best = min(Fraction(j - cur[1], k - cur[0]) for k, j in ahead)
        nxt = max((k, j) for k, j in ahead if Fraction(j - cur[1], k - cur[0]) == best)
        slopes[best] = slopes.get(best, 0) + nxt[0] - cur[0]
        cur = nxt
    return sorted(slopes.items())


@dataclass(frozen=True)
class TwistMatch:
    scale: ParamPoly
    shift: ParamPoly

    def __str__(self):
        return f"c={self.scale}, s={self.shift}"


def match_up_to_twist(lhs: ThetaFormOperator, rhs: ThetaFormOperator) -> TwistMatch | None:
    """Find ``(c, s)`` with ``lhs = c * twist_shift(rhs, s)``, or ``None``."""
    if lhs.is_zero() or rhs.is_zero():
        return None
    if set(lhs.terms) != set(rhs.terms):
        return None
    if any(lhs.terms[i].degree != rhs.terms[i].degree for i in lhs.terms):
        return None
    extremes = [max(lhs.terms), min(lhs.terms)]
    try:
        top = extremes[0]
        c = lhs.terms[top].leading().exact_div(rhs.terms[top].leading())
        s = None
        for i in extremes:
            A, B = lhs.terms[i], rhs.terms[i]
            n = A.degree
            if n < 1:
                continue
            # c * (b_{n-1} + n b_n s) = a_{n-1}
            s = (A.coeff(n - 1).exact_div(c) - B.coeff(n - 1)).exact_div(B.leading() * n)
            break
    except DivisionNotExact:
        return None
    if s is None:
        s = ParamPoly.const(0)
    if twist_shift(rhs, s).scale(c) != lhs:
        return None
    return TwistMatch(c, s)


def exponent_is_negative_integer(e: ParamPoly) -> bool:
    """Generic semantics: an affine exponent is an integer only if its parameter part vanishes."""
    const, coeffs = ParamPoly.coerce(e).affine_parts()
    if coeffs:
        return False
    return const.denominator == 1 and const < 0


def exponent_is_integer(e: ParamPoly) -> bool:
    const, coeffs = ParamPoly.coerce(e).affine_parts()
    return not coeffs and const.denominator == 1


@dataclass
class MinimalityReport:
    no_negative_integer_exponents: bool
    no_integer_roots_at_zero: bool
    quotient: ThetaFormOperator
    quotient_roots_at_zero: tuple
    witness_checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.no_negative_integer_exponents
            and self.no_integer_roots_at_zero
            and all(self.witness_checks.values())
        )

    def to_json(self) -> dict:
        return {
            "no_negative_integer_exponents": self.no_negative_integer_exponents,
            "no_integer_roots_at_zero": self.no_integer_roots_at_zero,
            "quotient_roots_at_zero": [str(r) for r in self.quotient_roots_at_zero],
            "witness_checks": dict(self.witness_checks),
            "notes": list(self.notes),
        }


def fourier_quotient(op: ThetaFormOperator, factor_degree: int | None = None) -> ThetaFormOperator:
    """``H`` with ``x^d FT(op) = T(T-1)...(T-n+1) * H`` (``n`` defaults to the x-degree)."""
    n = op.x_degree if factor_degree is None else factor_degree
    return left_factor_divide(ft_theta(op), ThetaPoly.falling(n))


def minimality_certificate(
    op: ThetaFormOperator,
    scheme: RiemannScheme,
    witnesses: Sequence[ParameterWitness] = (),
    factor_degree: int | None = None,
) -> MinimalityReport:
    """Check the two decidable conditions behind the Fourier stability argument.

    (i) no finite-point exponent is a negative integer; (ii) the indicial
    polynomial at 0 of the Fourier quotient has no integer roots.  Candidate
    roots for (ii) are the exponents at infinity shifted by -1, certified by
    exact division; both claims are re-checked numerically at each witness.
    """
    certify_scheme(op, scheme)
    finite = [(pt, e) for pt, exps in scheme.exponents.items() if pt is not INF for e in exps]
    cond_i = not any(exponent_is_negative_integer(e) for _, e in finite)

    quotient = fourier_quotient(op, factor_degree)
    h0 = quotient.terms[quotient.x_valuation]
    notes = []
    candidates = [e - 1 for e in scheme.exponents.get(INF, ())]
    roots: tuple = ()
    try:
        rest = certify_exponents(h0, candidates)
        if rest.degree == 0:
            roots = tuple(candidates)
        else:
            notes.append("shifted exponents at infinity do not exhaust the quotient's indicial polynomial")
    except UncertifiedExponent as exc:
        notes.append(str(exc))
    cond_ii = bool(roots) and not any(exponent_is_integer(r) for r in roots)

    checks = {}
    for w in witnesses:
        tag = w.name or str(w.assignment)
        vals = [e.evaluate(w) for _, e in finite]
        checks[f"{tag}:exponents"] = not any(v.denominator == 1 and v < 0 for v in vals)
        num = rational_roots(h0.evaluate(w))
        checks[f"{tag}:quotient_roots"] = not any(r.denominator == 1 for r in num)
    return MinimalityReport(cond_i, cond_ii, quotient, roots, checks, notes)


def format_exponents(exps: Iterable) -> str:
    out = []
    for e in exps:
        e = ParamPoly.coerce(e)
        out.append(format_rational(e.constant_value()) if e.is_constant() else str(e))
    return ", ".join(out)
