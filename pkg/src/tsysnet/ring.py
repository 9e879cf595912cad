"""Exact multivariate Laurent polynomials over the integers.

Values of the recurrences are Laurent polynomials in the initial data, so
this is the universal value type. Rational specialisations use
:class:`fractions.Fraction`; symbolic identity checks that leave the Laurent
ring use :class:`RatFunc` (unreduced numerator/denominator pairs).

Variables are plain strings. Names built by :func:`var_name` embed lattice
coordinates, e.g. ``t(0,-1)``, so that independent constructions of "the
same" initial datum agree.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import NotDivisible, ParseError, UnboundVariable, ZeroDenominator, ZeroSubstitution

Monomial = tuple  # tuple of (var, exp) pairs sorted by var, exp != 0

_VAR_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\(([-0-9, ]*)\))?$")


def var_name(prefix: str, *coords: int) -> str:
    """Canonical variable name for an initial datum at a lattice position."""
    if not coords:
        return prefix
    return "%s(%s)" % (prefix, ",".join(str(int(c)) for c in coords))


def var_key(name: str):
    """Total order on variable names: prefix, then integer coordinates."""
    m = _VAR_RE.match(name)
    if m is None or m.group(2) is None:
        return (name, ())
    body = m.group(2).strip()
    coords = tuple(int(c) for c in body.split(",")) if body else ()
    return (m.group(1), coords)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return tuple(sorted(d.items()))


def _mono_inv(a: Monomial) -> Monomial:
    return tuple((v, -e) for v, e in a)


class LaurentPoly:
    """Immutable Laurent polynomial with unbounded integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    mono = tuple(sorted((v, e) for v, e in mono if e))
                    clean[mono] = clean.get(mono, 0) + int(c)
            clean = {m: c for m, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors ---------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({(): int(c)} if c else {})

    @classmethod
    def var(cls, name: str) -> "LaurentPoly":
        return cls._raw({((name, 1),): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff: int = 1) -> "LaurentPoly":
        return cls({tuple(exponents.items()): coeff})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            return cls.const(x.numerator)
        raise TypeError("cannot coerce %r to LaurentPoly" % (x,))

    # -- inspection -------------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self._terms.get((), 0)

    def variables(self) -> set:
        return {v for mono in self._terms for v, _ in mono}

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    # -- ring operations --------------------------------------------------------
    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return LaurentPoly._raw(d)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({m: c * other for m, c in self._terms.items()})
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        d: dict = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = _mono_mul(ma, mb)
                s = d.get(m, 0) + ca * cb
                if s:
                    d[m] = s
                else:
                    d.pop(m, None)
        return LaurentPoly._raw(d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        """Inverse in the Laurent ring; only unit monomials are invertible."""
        if len(self._terms) == 1:
            (m, c), = self._terms.items()
            if c in (1, -1):
                return LaurentPoly._raw({_mono_inv(m): c})
        raise NotDivisible("%s is not a unit of the Laurent ring" % self)

    def __truediv__(self, other):
        if isinstance(other, (int, LaurentPoly)) or (
            isinstance(other, Fraction) and other.denominator == 1
        ):
            return exact_div(self, LaurentPoly.coerce(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return exact_div(LaurentPoly.const(other), self)
        return NotImplemented

    # -- comparison -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if isinstance(other, Fraction) and other.denominator != 1:
                return False
            return self._terms == ({(): int(other)} if other else {})
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation -------------------------------------------------------------
    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        """Exact value at a rational point; every variable must be bound."""
        total = Fraction(0)
        cache = {}
        for mono, c in self._terms.items():
            term = Fraction(c)
            for v, e in mono:
                if v not in cache:
                    if v not in point:
                        raise UnboundVariable(v)
                    x = Fraction(point[v])
                    if x == 0 and any(ee < 0 for vv, ee in self._mono_exps(v)):
                        raise ZeroSubstitution(v)
                    cache[v] = x
                term *= cache[v] ** e
            total += term
        return total

    def _mono_exps(self, v):
        for mono in self._terms:
            for vv, e in mono:
                if vv == v:
                    yield vv, e

    def subs(self, values: Mapping[str, object]):
        """Substitute arbitrary ring/field values for variables.

        Unbound variables stay symbolic. The result type follows the
        substituted values (Fraction, LaurentPoly, RatFunc, ...).
        """
        total = 0
        for mono, c in self._terms.items():
            term = c
            for v, e in mono:
                x = values.get(v)
                if x is None:
                    x = LaurentPoly.var(v)
                if e > 0:
                    term = term * x ** e
                else:
                    term = field_div(term, x ** (-e))
            total = total + term
        return total

    # -- text -------------------------------------------------------------------
    def sorted_terms(self):
        def key(item):
            mono, _ = item
            return (len(mono) == 0, [(var_key(v), -e) for v, e in sorted(mono, key=lambda p: var_key(p[0]))])

        return sorted(self._terms.items(), key=key)

    def __str__(self):
        return canonical_text(self)

    def __repr__(self):
        return "LaurentPoly(%r)" % canonical_text(self)


# ---------------------------------------------------------------------------
# exact division

def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q * den == num``; raise :class:`NotDivisible` otherwise.

    Multivariate division under lex order on exponent vectors. Quotient
    monomials are confined to the per-variable exponent box implied by the
    operands, which guarantees termination on non-divisible input.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return num
    if len(den._terms) == 1:
        (dm, dc), = den._terms.items()
        inv = _mono_inv(dm)
        out = {}
        for m, c in num._terms.items():
            q, r = divmod(c, dc)
            if r:
                raise NotDivisible("coefficient %d not divisible by %d" % (c, dc))
            out[_mono_mul(m, inv)] = q
        return LaurentPoly._raw(out)

    variables = sorted(num.variables() | den.variables())
    index = {v: i for i, v in enumerate(variables)}
    n = len(variables)

    def dense(mono):
        vec = [0] * n
        for v, e in mono:
            vec[index[v]] = e
        return tuple(vec)

    def bounds(p):
        lo = [None] * n
        hi = [None] * n
        for mono in p._terms:
            vec = dense(mono)
            for i, e in enumerate(vec):
                if lo[i] is None or e < lo[i]:
                    lo[i] = e
                if hi[i] is None or e > hi[i]:
                    hi[i] = e
        return lo, hi

    nlo, nhi = bounds(num)
    dlo, dhi = bounds(den)
    qlo = [a - b for a, b in zip(nlo, dlo)]
    qhi = [a - b for a, b in zip(nhi, dhi)]
    if any(a > b for a, b in zip(qlo, qhi)):
        raise NotDivisible("exponent ranges incompatible")

    dterms = [(dense(m), c) for m, c in den._terms.items()]
    lead_vec, lead_c = max(dterms)
    rem = {dense(m): c for m, c in num._terms.items()}
    heap = [tuple(-e for e in v) for v in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        neg = heapq.heappop(heap)
        vec = tuple(-e for e in neg)
        c = rem.get(vec)
        if c is None:
            continue
        qv = tuple(a - b for a, b in zip(vec, lead_vec))
        if any(e < lo or e > hi for e, lo, hi in zip(qv, qlo, qhi)):
            raise NotDivisible("%s does not divide %s" % (den, num))
        qc, r = divmod(c, lead_c)
        if r:
            raise NotDivisible("%s does not divide %s" % (den, num))
        quot[qv] = qc
        for dv, dc in dterms:
            m = tuple(a + b for a, b in zip(qv, dv))
            s = rem.get(m, 0) - qc * dc
            if s:
                if m not in rem:
                    heapq.heappush(heap, tuple(-e for e in m))
                rem[m] = s
            else:
                rem.pop(m, None)
    out = {}
    for vec, c in quot.items():
        out[tuple((variables[i], e) for i, e in enumerate(vec) if e)] = c
    return LaurentPoly._raw(out)


# ---------------------------------------------------------------------------
# rational functions (unreduced)

class RatFunc:
    """Quotient of two Laurent polynomials, compared by cross-multiplication.

    No gcd is ever taken. Monomial denominators are folded into the
    numerator, which keeps most connection-matrix entries in the Laurent ring.
    """

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den=1):
        num = LaurentPoly.coerce(num) if not isinstance(num, LaurentPoly) else num
        den = LaurentPoly.coerce(den) if not isinstance(den, LaurentPoly) else den
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        if len(den._terms) == 1:
            (m, c), = den._terms.items()
            if m:
                num = num * LaurentPoly._raw({_mono_inv(m): 1})
                den = LaurentPoly.const(c)
            if c < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @staticmethod
    def coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Fraction):
            return RatFunc(LaurentPoly.const(x.numerator), LaurentPoly.const(x.denominator))
        return RatFunc(LaurentPoly.coerce(x))

    def is_laurent(self) -> bool:
        return self.den == 1

    def to_laurent(self) -> LaurentPoly:
        return exact_div(self.num, self.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) + (-self)

    def __mul__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc.coerce(other)
        if o.num.is_zero():
            raise ZeroDenominator("division by zero")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(1) / (self ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def evaluate(self, point) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDenominator("denominator vanishes at point")
        return self.num.evaluate(point) / d

    def __repr__(self):
        return "RatFunc(%s, %s)" % (self.num, self.den)


Value = Union[int, Fraction, LaurentPoly, RatFunc]


def field_div(a, b):
    """Division that never fails on nonzero divisors.

    Integers and Fractions divide as Fractions; Laurent polynomials divide
    exactly when possible and fall back to :class:`RatFunc`.
    """
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        return RatFunc.coerce(a) / RatFunc.coerce(b)
    if isinstance(a, LaurentPoly) or isinstance(b, LaurentPoly):
        a_lp, b_lp = _as_lp_or_none(a), _as_lp_or_none(b)
        if a_lp is None or b_lp is None:
            return RatFunc.coerce(a) / RatFunc.coerce(b)
        if b_lp.is_zero():
            raise ZeroDenominator("division by zero")
        if len(b_lp) == 1:
            try:
                return exact_div(a_lp, b_lp)
            except NotDivisible:
                pass
        return RatFunc(a_lp, b_lp)
    if b == 0:
        raise ZeroDenominator("division by zero")
    return Fraction(a) / Fraction(b)


def _as_lp_or_none(x):
    try:
        return LaurentPoly.coerce(x)
    except TypeError:
        return None


def divide(a, b):
    """Strict division: exact in the Laurent ring, field division otherwise."""
    if isinstance(a, LaurentPoly) and isinstance(b, (LaurentPoly, int)):
        return exact_div(a, LaurentPoly.coerce(b))
    if isinstance(b, LaurentPoly):
        return exact_div(LaurentPoly.coerce(a), b)
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        return RatFunc.coerce(a) / RatFunc.coerce(b)
    if b == 0:
        raise ZeroDenominator("division by zero")
    return Fraction(a) / Fraction(b)


def to_laurent(x):
    """Collapse a RatFunc result back into the Laurent ring (exactly)."""
    if isinstance(x, RatFunc):
        return x.to_laurent()
    return x


def values_equal(a, b) -> bool:
    """Equality across the value types (Fraction, LaurentPoly, RatFunc)."""
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        return RatFunc.coerce(a) == RatFunc.coerce(b)
    return a == b


def evaluate(value, point: Mapping[str, object]) -> Fraction:
    if isinstance(value, (LaurentPoly, RatFunc)):
        return value.evaluate(point)
    return Fraction(value)


# ---------------------------------------------------------------------------
# canonical text

def canonical_text(p: LaurentPoly) -> str:
    """Deterministic text form; :func:`parse_laurent` inverts it."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (mono, c) in enumerate(p.sorted_terms()):
        factors = "".join(
            "*%s^%d" % (v, e) for v, e in sorted(mono, key=lambda pe: var_key(pe[0]))
        )
        body = "%d%s" % (abs(c), factors)
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def _split_terms(text: str) -> Iterable[tuple[int, str]]:
    depth = 0
    sign = 1
    start = 0
    text = text.strip()
    if text.startswith("-"):
        sign, start = -1, 1
    elif text.startswith("+"):
        start = 1
    i = start
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and text[i - 1] != "^":
            yield sign, text[start:i]
            sign = 1 if ch == "+" else -1
            start = i + 1
        i += 1
    yield sign, text[start:]


def parse_laurent(text: str) -> LaurentPoly:
    """Parse ``coeff*var^exp*... (+|-) ...`` into a Laurent polynomial."""
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial text")
    terms: dict = {}
    for sign, body in _split_terms(text):
        body = body.strip()
        if not body:
            raise ParseError("empty term in %r" % text)
        pieces = body.split("*")
        try:
            coeff = int(pieces[0].strip())
        except ValueError:
            raise ParseError("bad coefficient %r" % pieces[0]) from None
        exps: dict = {}
        for factor in pieces[1:]:
            name, caret, exp = factor.strip().rpartition("^")
            if not caret:
                name, exp = factor.strip(), "1"
            name = name.strip()
            if _VAR_RE.match(name) is None:
                raise ParseError("bad variable %r" % name)
            try:
                exps[name] = exps.get(name, 0) + int(exp)
            except ValueError:
                raise ParseError("bad exponent %r" % exp) from None
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        terms[mono] = terms.get(mono, 0) + sign * coeff
    return LaurentPoly(terms)


# ---------------------------------------------------------------------------
# functional surface

def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % op)


def lp_exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    return exact_div(num, den)


def lp_eval(p: LaurentPoly, point: Mapping[str, object]) -> Fraction:
    return p.evaluate(point)


def lp_canonical_text(p: LaurentPoly) -> str:
    return canonical_text(p)


def var(name: str) -> LaurentPoly:
    return LaurentPoly.var(name)
