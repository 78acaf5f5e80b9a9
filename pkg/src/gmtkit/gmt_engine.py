"""Two-point Gromov-Witten invariants from quasimap numbers.

For a + b = N - 3 + (N - k) d the recursion reads

    <h^a h^b>_d = w(a, b)_d - w(N-3+(N-k)d, 0)_d
                  - sum_{g=1}^{d-1} sum_{sigma in P_g} S(sigma)
                      <h^a h^b prod_i h^{1+(k-N) g_i}>_{d-g}
                      * prod_i w(N-3+(N-k) g_i, 0)_{g_i} / k

and is run upward from d = 1. Multi-point correlators on the right are
resolved by built-in axioms first and by a user table last.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import (ConflictError, InvalidParams, NeedsCorrelator, NotApplicable,
                     ParseError)
from .exact_core import fraction_str, parse_fraction
from .partitions import enumerate_partitions, symmetry_factor
from .quasimap_w import selection_sum, vsc, w_two_point

SCHEMA = "gmt-correlators/1"


@dataclass(frozen=True, order=True)
class CorrelatorKey:
    N: int
    k: int
    d: int
    insertions: tuple

    @classmethod
    def make(cls, N, k, d, insertions):
        return cls(N, k, d, tuple(sorted(insertions)))

    def __str__(self):
        ins = " ".join(f"O_h^{c}" for c in self.insertions)
        return f"<{ins}>_{{0,{self.d}}} (N={self.N}, k={self.k})"


def zero_class(c: int, N: int) -> bool:
    """h^c vanishes on the hypersurface unless 0 <= c <= N - 2."""
    return c < 0 or c > N - 2


def expected_insertion_sum(N, k, d, n):
    """Total insertion degree allowed by the virtual dimension of M_{0,n}(X, d)."""
    return N - 5 + (N - k) * d + n


def degree_zero_correlator(a, b, extra, N, k) -> Fraction:
    """Classical value of <h^a h^b prod h^{c_i}>_{0,0}."""
    extra = list(extra)
    if len(extra) != 1:
        return Fraction(0)
    if any(zero_class(c, N) for c in (a, b, extra[0])):
        return Fraction(0)
    return Fraction(k) if a + b + extra[0] == N - 2 else Fraction(0)


def divisor_reduce(a, b, l, m):
    """Divisor axiom with l extra h insertions at degree m: returns (factor, (a, b))."""
    if m < 1:
        raise NotApplicable("divisor axiom needs degree >= 1")
    if l < 0:
        raise NotApplicable("negative insertion count")
    return Fraction(m) ** l, (a, b)


@dataclass
class CorrelatorSource:
    """Layered correlator lookup: axioms, then computed values, then user values."""

    computed: dict = field(default_factory=dict)
    user: dict = field(default_factory=dict)
    completed: set = field(default_factory=set)  # (N, k, d) with all two-point values stored

    def lookup(self, key: CorrelatorKey):
        return self.resolve(key)[0]

    def resolve(self, key: CorrelatorKey):
        """(value, rule) for ``key``; raises NeedsCorrelator when nothing applies."""
        N, k, d, ins = key.N, key.k, key.d, key.insertions
        if any(zero_class(c, N) for c in ins):
            return Fraction(0), "zero-class"
        if d < 0:
            return Fraction(0), "negative-degree"
        if sum(ins) != expected_insertion_sum(N, k, d, len(ins)):
            return Fraction(0), "grading"
        if d == 0:
            if len(ins) < 3:
                return Fraction(0), "degree-zero"
            a, b, *extra = ins
            return degree_zero_correlator(a, b, extra, N, k), "degree-zero"
        if len(ins) >= 3 and 0 in ins:
            return Fraction(0), "fundamental-class"
        if len(ins) >= 3 and 1 in ins:
            rest = list(ins)
            l = 0
            while len(rest) > 2 and 1 in rest:
                rest.remove(1)
                l += 1
            factor, _ = divisor_reduce(rest[0], rest[1] if len(rest) > 1 else None, l, d)
            inner, why = self.resolve(CorrelatorKey.make(N, k, d, rest))
            return factor * inner, f"divisor({why})"
        if key in self.computed:
            return self.computed[key], "computed"
        if key in self.user:
            return self.user[key], "user"
        raise NeedsCorrelator(key)

    def store_computed(self, key: CorrelatorKey, value):
        value = Fraction(value)
        if key in self.user and self.user[key] != value:
            raise ConflictError(f"computed {key} = {value} disagrees with user value {self.user[key]}")
        self.computed[key] = value

    def add_user(self, key: CorrelatorKey, value):
        value = Fraction(value)
        old = self.user.get(key)
        if old is not None and old != value:
            raise ConflictError(f"conflicting user values for {key}: {old} vs {value}")
        self.user[key] = value


@dataclass(frozen=True)
class CorrectionTerm:
    g: int
    parts: tuple
    symmetry: Fraction
    key: CorrelatorKey
    correlator: Fraction
    rule: str
    w_product: Fraction
    w_notes: tuple
    value: Fraction


def w_string(N, k, g):
    """w(O_{h^{N-3+(N-k)g}} O_1)_{0,g}, zero by convention for an out-of-range exponent."""
    c = N - 3 + (N - k) * g
    if zero_class(c, N):
        return Fraction(0), "zero-class"
    return w_two_point(N, k, g, c, 0), "ring"


def _pairs(N, k, d):
    s = selection_sum(N, k, d)
    return [(a, s - a) for a in range(0, N - 1) if 0 <= s - a <= N - 2]


def gmt_terms(N, k, d, a, b, source: CorrelatorSource):
    """Every partition-indexed correction term of the recursion for (a, b) at degree d."""
    terms = []
    for g in range(1, d):
        for sigma in enumerate_partitions(g):
            extra = [1 + (k - N) * gi for gi in sigma.parts]
            key = CorrelatorKey.make(N, k, d - g, [a, b] + extra)
            wprod, notes = Fraction(1), []
            for gi in sigma.parts:
                wv, why = w_string(N, k, gi)
                notes.append(why)
                wprod *= wv / k
            S = symmetry_factor(sigma)
            if any(zero_class(c, N) for c in key.insertions):
                corr, rule = Fraction(0), "zero-class"
            elif wprod == 0:
                # the product already vanishes; no need to ask for the correlator
                corr, rule = None, "skipped"
            else:
                corr, rule = source.resolve(key)
            value = Fraction(0) if corr is None else S * corr * wprod
            terms.append(CorrectionTerm(g, sigma.parts, S, key, corr, rule, wprod, tuple(notes), value))
    return terms


def _ensure_lower(N, k, d, source):
    for dd in range(1, d):
        if (N, k, dd) not in source.completed:
            gmt_two_point(N, k, dd, source)


def gmt_two_point(N: int, k: int, d: int, source: CorrelatorSource | None = None):
    """Map (a, b) -> <O_{h^a} O_{h^b}>_{0,d} for the admissible pairs."""
    if d < 1 or k < 1 or N < 2:
        raise InvalidParams(f"need N >= 2, k >= 1, d >= 1; got N={N}, k={k}, d={d}")
    source = CorrelatorSource() if source is None else source
    _ensure_lower(N, k, d, source)
    string_term, _ = w_string(N, k, d)
    out = {}
    for a, b in _pairs(N, k, d):
        if (b, a) in out:
            out[(a, b)] = out[(b, a)]
        else:
            corr = sum((t.value for t in gmt_terms(N, k, d, a, b, source)), Fraction(0))
            out[(a, b)] = w_two_point(N, k, d, a, b) - string_term - corr
        source.store_computed(CorrelatorKey.make(N, k, d, (a, b)), out[(a, b)])
    source.completed.add((N, k, d))
    return out


def general_type_d1(N: int, k: int, n: int) -> Fraction:
    """Degree-one invariant k (L_n - L_{1+k-N}) from virtual structure constants."""
    return k * (vsc(N, k, 1, n) - vsc(N, k, 1, 1 + k - N))


def verify_gmt_identity(N: int, k: int, d: int, gw_table: CorrelatorSource):
    """Residual LHS - RHS of the recursion for each admissible (a, b); all zero when consistent."""
    string_term, _ = w_string(N, k, d)
    rows = []
    for a, b in _pairs(N, k, d):
        lhs = w_two_point(N, k, d, a, b) - string_term
        rhs = gw_table.lookup(CorrelatorKey.make(N, k, d, (a, b)))
        rhs += sum((t.value for t in gmt_terms(N, k, d, a, b, gw_table)), Fraction(0))
        rows.append({"a": a, "b": b, "lhs": lhs, "rhs": rhs, "residual": lhs - rhs})
    return rows


def top_degree_terms(N, k, d, a, b):
    """The g = d partition terms, built from degree-zero correlators only.

    The l = 1 term reproduces w(O_{h^{N-3+(N-k)d}} O_1)_{0,d}; longer
    partitions vanish.
    """
    out = []
    for sigma in enumerate_partitions(d):
        extra = [1 + (k - N) * gi for gi in sigma.parts]
        corr = degree_zero_correlator(a, b, extra, N, k)
        wprod = Fraction(1)
        for gi in sigma.parts:
            wprod *= w_string(N, k, gi)[0] / k
        out.append((sigma.parts, symmetry_factor(sigma) * corr * wprod))
    return out


def instanton_numbers(d_max: int, N: int = 5, k: int = 5, source: CorrelatorSource | None = None):
    """n_d from d <h h>_d = sum_{m | d} (d/m)^3 n_{d/m} (quintic only)."""
    if (N, k) != (5, 5):
        raise InvalidParams("instanton extraction uses the quintic multiple-cover formula; needs N = k = 5")
    source = CorrelatorSource() if source is None else source
    gw = {}
    for d in range(1, d_max + 1):
        gw[d] = gmt_two_point(N, k, d, source)[(1, 1)]
    return instantons_from_gw(gw)


def instantons_from_gw(gw: dict) -> dict:
    n = {}
    for d in sorted(gw):
        rest = sum((Fraction(d // m) ** 3 * n[d // m] for m in range(2, d + 1) if d % m == 0), Fraction(0))
        n[d] = (d * gw[d] - rest) / Fraction(d) ** 3
    return n


# -- correlator cache files --------------------------------------------------

def _entry_positions(text):
    """Character offsets of the elements of the top-level "entries" array."""
    dec = json.JSONDecoder()
    try:
        obj, _ = dec.raw_decode(text.lstrip())
    except json.JSONDecodeError:
        return []
    start = text.find('"entries"')
    if start < 0:
        return []
    i = text.find("[", start)
    pos = []
    i += 1
    n = len(text)
    while i < n:
        while i < n and text[i] in " \t\r\n,":
            i += 1
        if i >= n or text[i] == "]":
            break
        pos.append(i)
        try:
            _, i = dec.raw_decode(text, i)
        except json.JSONDecodeError:
            break
    return pos


def _line_col(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1)
    return line, col


def parse_correlators(text: str):
    """Parse a correlator file into a list of (key, value); validates every entry."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise ParseError(f"expected an object with schema {SCHEMA!r}", 1, 0)
    entries = doc.get("entries")
    if not isinstance(entries, list):
        raise ParseError("'entries' must be a list", 1, 0)
    positions = _entry_positions(text)
    out = []
    for idx, e in enumerate(entries):
        where = _line_col(text, positions[idx]) if idx < len(positions) else (None, None)
        try:
            out.append(_parse_entry(e))
        except (ValueError, TypeError, KeyError) as exc:
            raise ParseError(f"entry {idx}: {exc}", *where) from None
    return out


def _parse_entry(e):
    if not isinstance(e, dict):
        raise ValueError("entry must be an object")
    for name in ("N", "k", "d"):
        if type(e.get(name)) is not int:
            raise ValueError(f"field {name!r} must be an integer")
    N, k, d = e["N"], e["k"], e["d"]
    if N < 2 or k < 1 or d < 0:
        raise ValueError(f"bad parameters N={N}, k={k}, d={d}")
    ins = e.get("insertions")
    if not isinstance(ins, list) or len(ins) < 2 or any(type(c) is not int for c in ins):
        raise ValueError("'insertions' must be a list of at least two integers")
    if ins != sorted(ins):
        raise ValueError("'insertions' must be sorted ascending")
    if any(zero_class(c, N) for c in ins):
        raise ValueError(f"insertion exponents must lie in 0..{N - 2}")
    return CorrelatorKey(N, k, d, tuple(ins)), parse_fraction(e.get("value"))


def correlator_cache_load(path, source: CorrelatorSource | None = None) -> CorrelatorSource:
    source = CorrelatorSource() if source is None else source
    for key, value in parse_correlators(Path(path).read_text()):
        source.add_user(key, value)
    return source


def correlators_to_json(table: dict) -> str:
    lines = []
    for key in sorted(table):
        entry = {"N": key.N, "k": key.k, "d": key.d, "insertions": list(key.insertions),
                 "value": fraction_str(table[key])}
        lines.append("    " + json.dumps(entry, sort_keys=True))
    body = ",\n".join(lines)
    return '{\n  "schema": "%s",\n  "entries": [\n%s\n  ]\n}\n' % (SCHEMA, body)


def correlator_cache_store(path, source: CorrelatorSource, include_computed=False):
    table = dict(source.user)
    if include_computed:
        for key, value in source.computed.items():
            table.setdefault(key, value)
    Path(path).write_text(correlators_to_json(table))
