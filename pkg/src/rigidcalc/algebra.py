"""Exact rational and polynomial arithmetic over the parameter field Q(a, b, t, mu).

Everything here is immutable and exact.  Rationals are :class:`fractions.Fraction`;
``ParamPoly`` is a sparse multivariate polynomial in the fixed symbols
``a, b, t, mu``; ``ThetaPoly`` is a univariate polynomial in the Euler operator
with ``ParamPoly`` coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import (
    DivisionNotExact,
    UnassignedSymbol,
    WitnessViolation,
    ZeroDivisor,
    ZeroPolynomial,
)

Rational = Fraction
SYMBOLS = ("a", "b", "t", "mu")
_NVARS = len(SYMBOLS)
_ZERO_EXP = (0,) * _NVARS

Number = Union[int, Fraction]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, ParamPoly):
        return value.constant_value()
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class ParamPoly:
    """Polynomial in the parameter symbols with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Number] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != _NVARS:
                    raise ValueError(f"exponent vector {mono!r} has wrong length")
                coeff = as_rational(coeff)
                if coeff:
                    clean[tuple(mono)] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "ParamPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value: Number) -> "ParamPoly":
        value = as_rational(value)
        return cls._raw({_ZERO_EXP: value} if value else {})

    @classmethod
    def symbol(cls, name: str) -> "ParamPoly":
        try:
            idx = SYMBOLS.index(name)
        except ValueError:
            raise ValueError(f"unknown parameter symbol {name!r}") from None
        exp = [0] * _NVARS
        exp[idx] = 1
        return cls._raw({tuple(exp): Fraction(1)})

    @classmethod
    def coerce(cls, value) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        return cls.const(value)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(m == _ZERO_EXP for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def symbols(self) -> frozenset:
        used = set()
        for mono in self._terms:
            for name, e in zip(SYMBOLS, mono):
                if e:
                    used.add(name)
        return frozenset(used)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_affine(self) -> bool:
        return self.total_degree() <= 1

    def affine_parts(self) -> tuple[Fraction, dict]:
        """Split an affine polynomial into ``(constant, {symbol: coefficient})``."""
        if not self.is_affine():
            raise ValueError(f"{self} is not affine in the parameters")
        coeffs = {}
        for mono, c in self._terms.items():
            if mono != _ZERO_EXP:
                coeffs[SYMBOLS[mono.index(1)]] = c
        return self.constant_term(), coeffs

    def leading_monomial(self) -> tuple:
        return max(self._terms)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ParamPoly):
            if isinstance(other, (int, Fraction)):
                other = ParamPoly.const(other)
            else:
                return NotImplemented
        res = dict(self._terms)
        for m, c in other._terms.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return ParamPoly._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (ParamPoly, int, Fraction)):
            return NotImplemented
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other):
        return ParamPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ParamPoly._raw({})
            return ParamPoly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, ParamPoly):
            return NotImplemented
        res: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                res[m] = res.get(m, 0) + c1 * c2
        return ParamPoly._raw({m: c for m, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("ParamPoly powers must be non-negative integers")
        result = ParamPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other) -> "ParamPoly":
        """Quotient ``self / other``; raises :class:`DivisionNotExact` if it is not a polynomial."""
        other = ParamPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisor("division by the zero polynomial")
        if other.is_constant():
            inv = 1 / other.constant_value()
            return ParamPoly._raw({m: c * inv for m, c in self._terms.items()})
        lm = other.leading_monomial()
        lc = other._terms[lm]
        rem = self
        quot: dict = {}
        while rem:
            m = rem.leading_monomial()
            if any(x < y for x, y in zip(m, lm)):
                raise DivisionNotExact(f"{other} does not divide {self}")
            qm = tuple(x - y for x, y in zip(m, lm))
            qc = rem._terms[m] / lc
            quot[qm] = quot.get(qm, 0) + qc
            rem = rem - ParamPoly._raw({qm: qc}) * other
        return ParamPoly._raw({m: c for m, c in quot.items() if c})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisor("division by zero")
            return self * (1 / Fraction(other))
        return self.exact_div(other)

    # -- substitution -----------------------------------------------------

    def substitute(self, assignment: Mapping[str, object]) -> "ParamPoly":
        """Substitute the given symbols (values may be rationals or ParamPolys)."""
        values = {}
        for name, v in assignment.items():
            if name not in SYMBOLS:
                raise ValueError(f"unknown parameter symbol {name!r}")
            values[SYMBOLS.index(name)] = ParamPoly.coerce(v)
        if not values:
            return self
        result = ParamPoly._raw({})
        powers: dict = {}
        for mono, c in self._terms.items():
            kept = list(mono)
            term = ParamPoly.const(c)
            for idx, val in values.items():
                e = mono[idx]
                if e:
                    key = (idx, e)
                    if key not in powers:
                        powers[key] = val ** e
                    term = term * powers[key]
                    kept[idx] = 0
            exp_only = ParamPoly._raw({tuple(kept): Fraction(1)})
            result = result + term * exp_only
        return result

    def evaluate(self, witness: "ParameterWitness | Mapping[str, Number]") -> Fraction:
        assignment = witness.assignment if isinstance(witness, ParameterWitness) else witness
        missing = self.symbols() - set(assignment)
        if missing:
            raise UnassignedSymbol(f"no value for {', '.join(sorted(missing))}")
        return self.substitute({k: v for k, v in assignment.items() if k in self.symbols()}).constant_value()

    # -- comparison / printing ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sort_key(self):
        return tuple(sorted(self._terms.items(), reverse=True))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, reverse=True):
            c = self._terms[mono]
            names = []
            for name, e in zip(SYMBOLS, mono):
                if e == 1:
                    names.append(name)
                elif e:
                    names.append(f"{name}^{e}")
            body = "*".join(names)
            mag = abs(c)
            if not body:
                text = format_rational(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{format_rational(mag)}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"ParamPoly({self})"


def symbol(name: str) -> ParamPoly:
    return ParamPoly.symbol(name)


a, b, t, mu = (ParamPoly.symbol(s) for s in SYMBOLS)


class ThetaPoly:
    """Polynomial in the Euler operator ``T`` with ``ParamPoly`` coefficients.

    ``coeffs[k]`` is the coefficient of ``T**k``; the tuple is trimmed so the
    leading coefficient is nonzero (the zero polynomial has no coefficients).
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [ParamPoly.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def const(cls, value) -> "ThetaPoly":
        return cls([value])

    @classmethod
    def theta(cls) -> "ThetaPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "ThetaPoly":
        result = cls.const(lead)
        for r in roots:
            result = result * cls([-ParamPoly.coerce(r), 1])
        return result

    @classmethod
    def falling(cls, n: int, shift=0) -> "ThetaPoly":
        """``(T+shift)(T+shift-1)...(T+shift-n+1)``."""
        return cls.from_roots([k - ParamPoly.coerce(shift) for k in range(n)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading(self) -> ParamPoly:
        if not self.coeffs:
            return ParamPoly.const(0)
        return self.coeffs[-1]

    def coeff(self, k: int) -> ParamPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ParamPoly.const(0)

    def is_rational(self) -> bool:
        return all(c.is_constant() for c in self.coeffs)

    def rational_coeffs(self) -> list[Fraction]:
        return [c.constant_value() for c in self.coeffs]

    def symbols(self) -> frozenset:
        out = frozenset()
        for c in self.coeffs:
            out |= c.symbols()
        return out

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "ThetaPoly":
        if isinstance(other, ThetaPoly):
            return other
        if isinstance(other, (int, Fraction, ParamPoly)):
            return ThetaPoly.const(other)
        raise TypeError(f"cannot use {other!r} as a ThetaPoly")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return ThetaPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return ThetaPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            return ThetaPoly(c * other for c in self.coeffs)
        if not isinstance(other, ThetaPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ThetaPoly()
        out = [ParamPoly.const(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return ThetaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = ThetaPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def divmod(self, other: "ThetaPoly") -> tuple["ThetaPoly", "ThetaPoly"]:
        """Long division; the divisor's leading coefficient must divide exactly in ParamPoly."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisor("division by the zero ThetaPoly")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading()
        quot = [ParamPoly.const(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            q = c.exact_div(lead)
            quot[k - dq] = q
            for j, oc in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - q * oc
        return ThetaPoly(quot), ThetaPoly(rem)

    def exact_div(self, other) -> "ThetaPoly":
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisor("division by the zero ThetaPoly")
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise DivisionNotExact(f"({other}) does not divide ({self})")
        return quot

    def divides(self, other: "ThetaPoly") -> bool:
        try:
            other.exact_div(self)
        except DivisionNotExact:
            return False
        return True

    # -- substitution -----------------------------------------------------

    def substitute_affine(self, u, v=0) -> "ThetaPoly":
        """Return ``self(u*T + v)``."""
        lin = ThetaPoly([ParamPoly.coerce(v), ParamPoly.coerce(u)])
        result = ThetaPoly()
        for c in reversed(self.coeffs):
            result = result * lin + ThetaPoly.const(c)
        return result

    def shift(self, s) -> "ThetaPoly":
        return self.substitute_affine(1, s)

    def __call__(self, value) -> ParamPoly:
        value = ParamPoly.coerce(value)
        result = ParamPoly.const(0)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def substitute_params(self, assignment: Mapping[str, object]) -> "ThetaPoly":
        return ThetaPoly(c.substitute(assignment) for c in self.coeffs)

    def evaluate(self, witness) -> "ThetaPoly":
        """Specialize every coefficient under ``witness``; the result has rational coefficients."""
        return ThetaPoly(ParamPoly.const(c.evaluate(witness)) for c in self.coeffs)

    def derivative(self) -> "ThetaPoly":
        return ThetaPoly(c * k for k, c in enumerate(self.coeffs) if k)

    # -- comparison / printing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = ThetaPoly.const(other)
        if not isinstance(other, ThetaPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            if c.is_constant():
                v = c.constant_value()
                sign = "-" if v < 0 else "+"
                mag = abs(v)
                if not mono:
                    text = format_rational(mag)
                elif mag == 1:
                    text = mono
                else:
                    text = f"{format_rational(mag)}*{mono}"
            else:
                sign = "+"
                text = f"({c})" + (f"*{mono}" if mono else "")
                if not mono and len(c.terms) == 1:
                    text = str(c)
                    if text.startswith("-"):
                        sign, text = "-", text[1:]
            parts.append((sign, text))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"ThetaPoly({self})"


THETA = ThetaPoly.theta()


def poly_arith(lhs: ThetaPoly, rhs: ThetaPoly, kind: str) -> ThetaPoly:
    """Exact ring operation named by ``kind`` (add, sub, mul, exact_div)."""
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    if kind == "exact_div":
        return lhs.exact_div(rhs)
    raise ValueError(f"unknown operation kind {kind!r}")


def substitute_affine(p: ThetaPoly, u, v=0) -> ThetaPoly:
    return p.substitute_affine(u, v)


def evaluate(p, witness):
    """Specialize a ParamPoly (to a rational) or a ThetaPoly (to rational coefficients)."""
    if isinstance(p, ThetaPoly):
        return p.evaluate(witness)
    return ParamPoly.coerce(p).evaluate(witness)


# ---------------------------------------------------------------------------
# parameter witnesses


_RELATIONS = ("<", "<=", "==", "!=", "nonint")


@dataclass(frozen=True)
class Constraint:
    lhs: ParamPoly
    relation: str
    rhs: ParamPoly = field(default_factory=lambda: ParamPoly.const(0))
    text: str = ""

    def holds(self, assignment: Mapping[str, Fraction]) -> bool:
        left = self.lhs.evaluate(assignment)
        right = self.rhs.evaluate(assignment)
        if self.relation == "<":
            return left < right
        if self.relation == "<=":
            return left <= right
        if self.relation == "==":
            return left == right
        if self.relation == "!=":
            return left != right
        if self.relation == "nonint":
            return left.denominator != 1
        raise ValueError(f"unknown relation {self.relation!r}")

    def __str__(self):
        if self.text:
            return self.text
        if self.relation == "nonint":
            return f"{self.lhs} not in Z"
        return f"{self.lhs} {self.relation} {self.rhs}"


@dataclass(frozen=True)
class ParameterWitness:
    """A rational point of parameter space together with the conditions it is meant to satisfy."""

    assignment: Mapping[str, Fraction]
    constraints: tuple = ()
    name: str = ""

    def __post_init__(self):
        clean = {}
        for k, v in dict(self.assignment).items():
            if k not in SYMBOLS:
                raise ValueError(f"unknown parameter symbol {k!r}")
            clean[k] = as_rational(v)
        object.__setattr__(self, "assignment", dict(sorted(clean.items())))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for c in self.constraints:
            if c.relation not in _RELATIONS:
                raise ValueError(f"unknown relation {c.relation!r}")
        bad = [str(c) for c in self.constraints if not c.holds(self.assignment)]
        if bad:
            raise WitnessViolation(f"witness {self.name or self.assignment} violates: {'; '.join(bad)}")

    def __hash__(self):
        return hash((tuple(self.assignment.items()), self.name))

    def value(self, name: str) -> Fraction:
        try:
            return self.assignment[name]
        except KeyError:
            raise UnassignedSymbol(f"witness has no value for {name}") from None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "assignment": {k: format_rational(v) for k, v in self.assignment.items()},
            "constraints": [str(c) for c in self.constraints],
        }


# ---------------------------------------------------------------------------
# rational roots


def _to_integer_coeffs(coeffs: Sequence[Fraction]) -> list[int]:
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    if ints[-1] < 0:
        ints = [-v for v in ints]
    return ints


def _value_at(ints: Sequence[int], p: int, q: int) -> int:
    """``q**n * f(p/q)`` for the integer polynomial ``ints`` (ascending)."""
    n = len(ints) - 1
    acc = 0
    qpow = 1
    for k in range(n, -1, -1):
        acc = acc * p + ints[k] * qpow
        qpow *= q
    return acc


def _divide_linear(ints: list[int], p: int, q: int) -> list[int]:
    """Divide the integer polynomial by ``(q*T - p)``; the division must be exact."""
    n = len(ints) - 1
    out = [0] * n
    rem = list(ints)
    for k in range(n, 0, -1):
        c = rem[k]
        if c % q:
            raise DivisionNotExact("non-integral quotient")
        qc = c // q
        out[k - 1] = qc
        rem[k] -= qc * q
        rem[k - 1] += qc * p
    if rem[0] != 0:
        raise DivisionNotExact("nonzero remainder")
    return out


def _divisors(n: int) -> list[int]:
    from sympy import factorint

    n = abs(n)
    divs = [1]
    for prime, exp in factorint(n).items():
        divs = [d * prime**e for d in divs for e in range(exp + 1)]
    return sorted(divs)


def _exhaustive_roots(ints: list[int]) -> list[Fraction]:
    """All rational roots of a square-free integer polynomial with nonzero constant term."""
    lead, const = ints[-1], ints[0]
    bound = 1 + max(Fraction(abs(c), abs(lead)) for c in ints[:-1])
    f1 = sum(ints)
    fm1 = sum(c * (-1) ** k for k, c in enumerate(ints))
    found = []
    pdivs = _divisors(const)
    for q in _divisors(lead):
        for pa in pdivs:
            if pa > bound * q or math.gcd(pa, q) != 1:
                continue
            for p in (pa, -pa):
                if f1 and (q - p) and f1 % (q - p):
                    continue
                if fm1 and (q + p) and fm1 % (q + p):
                    continue
                if _value_at(ints, p, q) == 0:
                    found.append(Fraction(p, q))
    return found


def _convergents(x: float, max_den: int):
    """Continued-fraction convergents of ``x`` with denominator at most ``max_den``."""
    h0, h1, k0, k1 = 0, 1, 1, 0
    rest = Fraction(x)
    for _ in range(64):
        q = math.floor(rest)
        h0, h1 = h1, q * h1 + h0
        k0, k1 = k1, q * k1 + k0
        if k1 > max_den:
            return
        yield Fraction(h1, k1)
        frac = rest - q
        if not frac:
            return
        rest = 1 / frac


def _squarefree_part(coeffs: list[Fraction]) -> list[Fraction]:
    f = ThetaPoly(coeffs)
    g = f
    h = f.derivative()
    while not h.is_zero():
        g, h = h, g.divmod(h)[1]
    if g.degree <= 0:
        return coeffs
    return f.exact_div(g).rational_coeffs()


def rational_roots(p: ThetaPoly | Sequence) -> list[Fraction]:
    """All rational roots of a rational univariate polynomial, with multiplicity, sorted.

    Candidates are guessed from floating-point root approximations and
    confirmed by exact division; whatever remains after deflation is searched
    exhaustively over divisor pairs, so the result is complete.
    """
    if isinstance(p, ThetaPoly):
        coeffs = p.rational_coeffs()
    else:
        coeffs = [as_rational(c) for c in p]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
    if not coeffs:
        raise ZeroPolynomial("rational_roots of the zero polynomial")
    roots: list[Fraction] = []
    zeros = 0
    while coeffs[zeros] == 0:
        zeros += 1
    roots.extend([Fraction(0)] * zeros)
    coeffs = coeffs[zeros:]
    if len(coeffs) == 1:
        return sorted(roots)
    full = _to_integer_coeffs(coeffs)
    sqf = _to_integer_coeffs(_squarefree_part(coeffs))
    distinct: list[Fraction] = []
    if len(sqf) > 2:
        approx = np.roots([float(c) for c in reversed(sqf)])
        lead = sqf[-1]
        for z in approx:
            if abs(z.imag) > 1e-6 * max(1.0, abs(z.real)):
                continue
            for guess in _convergents(float(z.real), abs(lead)):
                if guess in distinct or len(sqf) <= 2 or lead % guess.denominator:
                    continue
                try:
                    sqf = _divide_linear(sqf, guess.numerator, guess.denominator)
                except DivisionNotExact:
                    continue
                distinct.append(guess)
                lead = sqf[-1]
                break
    if len(sqf) == 2:
        r = Fraction(-sqf[0], sqf[1])
        distinct.append(r)
        sqf = [sqf[1]]
    elif len(sqf) > 2:
        distinct.extend(_exhaustive_roots(sqf))
    for r in distinct:
        while True:
            try:
                full = _divide_linear(full, r.numerator, r.denominator)
            except DivisionNotExact:
                break
            roots.append(r)
    return sorted(roots)
