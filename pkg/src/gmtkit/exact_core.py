"""Exact rationals, sparse multivariate polynomials and truncated q-series.

Rationals are :class:`fractions.Fraction` (plain ``int`` is accepted wherever a
rational is, and is kept as ``int`` inside polynomial term maps for speed).
Monomials are exponent tuples; the fixed monomial order is graded reverse
lexicographic with ``H_0 < H_1 < ... < H_d``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .errors import (InvalidParams, NonExactDivision, NonzeroConstantTerm,
                     ZeroConstantTerm)

Monomial = tuple


def grevlex_key(m: Monomial):
    """Sort key: larger key means larger monomial in grevlex (H_0 smallest)."""
    return (sum(m), tuple(-e for e in m))


def monomials_of_degree(nvars: int, deg: int):
    """All exponent tuples of total degree ``deg``, in decreasing grevlex order."""
    if nvars == 0:
        return [()] if deg == 0 else []
    out = []

    def rec(prefix, left, remaining):
        if remaining == 1:
            out.append(prefix + (left,))
            return
        for e in range(left + 1):
            rec(prefix + (e,), left - e, remaining - 1)

    rec((), deg, nvars)
    out.sort(key=grevlex_key, reverse=True)
    return out


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_div(a, b):
    """a / b as exponent tuple, or None if b does not divide a."""
    r = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in r):
        return None
    return r


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class MultiPoly:
    """Sparse polynomial: map exponent tuple -> nonzero rational coefficient.

    Instances are treated as immutable. ``nvars`` is part of the identity and
    binary operations refuse mismatched arities.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        self.nvars = nvars
        src = terms.items() if isinstance(terms, Mapping) else terms
        t = {}
        for m, c in src:
            m = tuple(m)
            if len(m) != nvars:
                raise InvalidParams(f"monomial {m} has wrong arity for nvars={nvars}")
            if c:
                t[m] = _normalize(t.get(m, 0) + c)
                if not t[m]:
                    del t[m]
        self._terms = t

    @classmethod
    def _raw(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i, power=1):
        m = [0] * nvars
        m[i] = power
        return cls._raw(nvars, {tuple(m): 1})

    @classmethod
    def monomial(cls, m, c=1):
        return cls(len(m), {tuple(m): c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            return False
        if other.nvars != self.nvars:
            raise InvalidParams(f"nvars mismatch: {self.nvars} vs {other.nvars}")
        return True

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, Rational):
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __add__(self, other):
        if isinstance(other, Rational):
            other = MultiPoly.constant(self.nvars, other)
        if not self._check(other):
            return NotImplemented
        t = dict(self._terms)
        for m, c in other._terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = _normalize(v)
            else:
                t.pop(m, None)
        return MultiPoly._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, Rational):
            other = MultiPoly.constant(self.nvars, other)
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {m: _normalize(v * c) for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        t = {}
        get = t.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                t[m] = get(m, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {m: _normalize(c) for m, c in t.items() if c})

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidParams("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def coeff(self, m: Monomial):
        if len(m) != self.nvars:
            raise InvalidParams(f"monomial {m} has wrong arity for nvars={self.nvars}")
        return Fraction(self._terms.get(tuple(m), 0))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_component(self, deg):
        return MultiPoly._raw(self.nvars, {m: c for m, c in self._terms.items() if sum(m) == deg})

    def leading_term(self):
        m = max(self._terms, key=grevlex_key)
        return m, self._terms[m]

    def sorted_terms(self):
        """Terms in decreasing grevlex order (deterministic)."""
        return sorted(self._terms.items(), key=lambda mc: grevlex_key(mc[0]), reverse=True)

    def permute_vars(self, perm):
        """New polynomial with variable i renamed to perm[i]."""
        t = {}
        for m, c in self._terms.items():
            nm = [0] * self.nvars
            for i, e in enumerate(m):
                nm[perm[i]] = e
            t[tuple(nm)] = c
        return MultiPoly._raw(self.nvars, t)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"H{i}^{e}" if e > 1 else f"H{i}" for i, e in enumerate(m) if e)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    if p.nvars != q.nvars:
        raise InvalidParams(f"nvars mismatch: {p.nvars} vs {q.nvars}")
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    if p.nvars != q.nvars:
        raise InvalidParams(f"nvars mismatch: {p.nvars} vs {q.nvars}")
    return p * q


def poly_divide_exact(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Return r with p == q*r, else raise NonExactDivision.

    Single-divisor division in grevlex: whenever q | p exactly, lt(q) divides
    the leading term of every intermediate remainder, so the first failure
    proves a nonzero remainder.
    """
    if p.nvars != q.nvars:
        raise InvalidParams(f"nvars mismatch: {p.nvars} vs {q.nvars}")
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    lm, lc = q.leading_term()
    if len(q) == 1:
        out = {}
        for m, c in p.items():
            r = _mono_div(m, lm)
            if r is None:
                raise NonExactDivision(f"{q} does not divide {p}")
            out[r] = _normalize(Fraction(c) / lc)
        return MultiPoly._raw(p.nvars, out)
    rem = dict(p.terms)
    quot = {}
    qterms = list(q.items())
    while rem:
        m = max(rem, key=grevlex_key)
        r = _mono_div(m, lm)
        if r is None:
            raise NonExactDivision(f"{q} does not divide {p}")
        c = _normalize(Fraction(rem[m]) / lc)
        quot[r] = c
        for qm, qc in qterms:
            mm = _mono_mul(qm, r)
            v = rem.get(mm, 0) - c * qc
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    return MultiPoly._raw(p.nvars, quot)


def coeff(p: MultiPoly, m: Monomial):
    return p.coeff(m)


class QSeries:
    """Truncated series c_0 + c_1 q + ... + c_order q^order.

    Coefficients are normally rationals, but any ring elements supporting
    ``+``, ``*`` and scaling by a Fraction work (e.g. MultiPoly), which is how
    the exponential-formula checks run over polynomial coefficients.
    """

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients, order=None):
        coeffs = list(coefficients)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise InvalidParams("order must be >= 0")
        zero = coeffs[0] * 0 if coeffs else 0
        coeffs = coeffs[:order + 1] + [zero] * (order + 1 - len(coeffs))
        self.coefficients = tuple(_normalize_q(c) for c in coeffs)
        self.order = order

    def __getitem__(self, i):
        return self.coefficients[i]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return self.order == other.order and all(
                a == b for a, b in zip(self.coefficients, other.coefficients))
        return NotImplemented

    def __repr__(self):
        return f"QSeries({list(self.coefficients)!r}, order={self.order})"

    def _zero(self):
        return self.coefficients[0] * 0

    def __add__(self, other):
        n = min(self.order, other.order)
        return QSeries([a + b for a, b in zip(self.coefficients[:n + 1], other.coefficients[:n + 1])], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return QSeries([a - b for a, b in zip(self.coefficients[:n + 1], other.coefficients[:n + 1])], n)

    def scale(self, c):
        return QSeries([a * c for a in self.coefficients], self.order)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        return series_mul(self, other)

    def shift(self, s):
        """Multiply by q^s, keeping the order."""
        z = self._zero()
        return QSeries([z] * s + list(self.coefficients), self.order)


def _normalize_q(c):
    if isinstance(c, Rational) and not isinstance(c, bool):
        return Fraction(c)
    return c


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order)
    out = []
    for d in range(n + 1):
        s = a[0] * b[d]
        for i in range(1, d + 1):
            s = s + a[i] * b[d - i]
        out.append(s)
    return QSeries(out, n)


def series_recip(a: QSeries) -> QSeries:
    if a[0] == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    inv0 = Fraction(1) / a[0]
    out = [inv0]
    for d in range(1, a.order + 1):
        s = a[1] * out[d - 1]
        for i in range(2, d + 1):
            s = s + a[i] * out[d - i]
        out.append(-s * inv0)
    return QSeries(out, a.order)


def series_exp(a: QSeries) -> QSeries:
    """exp(a) for a[0] == 0, via n*b_n = sum_j j*a_j*b_{n-j}."""
    if a[0] != 0:
        raise NonzeroConstantTerm("exp needs a zero constant term")
    one = a[0] * 0 + 1
    out = [one]
    for n in range(1, a.order + 1):
        s = a[1] * out[n - 1]
        for j in range(2, n + 1):
            s = s + a[j] * out[n - j] * j
        out.append(s * Fraction(1, n))
    return QSeries(out, a.order)


def series_pow_q_exp(tmap: QSeries, d: int) -> QSeries:
    """Coefficients of exp(d * tmap); used for e^{d t(x)} = q^d exp(d tmap)."""
    return series_exp(tmap.scale(d))


def fraction_str(x) -> str:
    """Exact rendering: 'p/q', or 'p' when q == 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    """Inverse of fraction_str; rejects decimals and floats."""
    if not isinstance(s, str):
        raise ValueError(f"expected fraction string, got {type(s).__name__}")
    s = s.strip()
    if any(ch in s for ch in ".eE") or not s:
        raise ValueError(f"not an exact fraction: {s!r}")
    num, _, den = s.partition("/")
    value = Fraction(int(num), int(den) if den else 1)
    return value
