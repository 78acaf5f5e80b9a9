"""Artinian presentation of the Chow ring of the two-pointed quasimap space.

The ring is Q[H_0..H_d] modulo the complete intersection

    f_0 = H_0^N,   f_i = H_i^N (2 H_i - H_{i-1} - H_{i+1})  (0 < i < d),   f_d = H_d^N,

and integration is the Grothendieck residue with respect to (f_0, ..., f_d)
with unit normalization, evaluated through the transformation law
``H_i^{M_i} = sum_j A_ij f_j``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .errors import CertificateNotFound, InvalidParams
from .exact_core import MultiPoly, monomials_of_degree
from .linalg import Echelon


@dataclass(eq=False)
class QuasimapRing:
    N: int
    d: int
    relations: tuple
    socle_degree: int
    _lock: threading.RLock = field(default_factory=threading.RLock, repr=False)
    _certs: dict = field(default_factory=dict, repr=False)
    _macaulay: dict = field(default_factory=dict, repr=False)
    _det: object = field(default=None, repr=False)

    @property
    def nvars(self):
        return self.d + 1

    @property
    def relation_degrees(self):
        return tuple(f.degree() for f in self.relations)


def _relations(N, d):
    n = d + 1
    H = [MultiPoly.var(n, i) for i in range(n)]
    rels = [H[0] ** N]
    for i in range(1, d):
        rels.append(H[i] ** N * (H[i] * 2 - H[i - 1] - H[i + 1]))
    rels.append(H[d] ** N)
    return tuple(rels)


@lru_cache(maxsize=None)
def build_ring(N: int, d: int) -> QuasimapRing:
    """Cached per (N, d); the ring does not depend on the hypersurface degree."""
    if not isinstance(N, int) or not isinstance(d, int) or N < 2 or d < 1:
        raise InvalidParams(f"need N >= 2 and d >= 1, got N={N}, d={d}")
    return QuasimapRing(N=N, d=d, relations=_relations(N, d), socle_degree=N * (d + 1) - 2)


def hilbert_coefficient(degrees, nvars, m):
    """Coefficient of t^m in prod(1 - t^e) / (1 - t)^nvars."""
    # expand the numerator, then convolve with binomial(m' + nvars - 1, nvars - 1)
    num = {0: 1}
    for e in degrees:
        nxt = dict(num)
        for k, c in num.items():
            nxt[k + e] = nxt.get(k + e, 0) - c
        num = nxt
    return sum(c * comb(m - k + nvars - 1, nvars - 1) for k, c in num.items() if k <= m)


def _multipliers(nvars, deg, bound=None):
    """Monomials of degree ``deg``; with ``bound`` only those with e_0, e_last < bound."""
    if deg < 0:
        return []
    mons = monomials_of_degree(nvars, deg)
    if bound is not None:
        mons = [m for m in mons if m[0] < bound and m[-1] < bound]
    return mons


def _macaulay_echelon(ring: QuasimapRing, m: int):
    """Echelon form of all degree-m multiples of the relations (cached)."""
    with ring._lock:
        hit = ring._macaulay.get(m)
        if hit is not None:
            return hit
        cols = monomials_of_degree(ring.nvars, m)
        index = {mono: i for i, mono in enumerate(cols)}
        ech = Echelon()
        for f in ring.relations:
            fd = f.degree()
            for u in _multipliers(ring.nvars, m - fd):
                row = {}
                for mono, c in f.items():
                    row[index[tuple(a + b for a, b in zip(mono, u))]] = int(c)
                ech.add_row(row)
        ring._macaulay[m] = (cols, index, ech)
        return ring._macaulay[m]


def graded_dim(ring: QuasimapRing, m: int) -> int:
    """dim of the degree-m piece: #monomials minus rank of the Macaulay matrix."""
    if m < 0:
        raise InvalidParams("degree must be >= 0")
    cols, _, ech = _macaulay_echelon(ring, m)
    return len(cols) - ech.rank


def _membership(ring: QuasimapRing, i: int, M: int):
    """Try to write H_i^M in the ideal; returns cofactor list or None.

    Works modulo the monomial relations H_0^N and H_d^N (monomials with such
    factors are dropped), so only the interior relations enter the linear
    system; the end-point cofactors are recovered from the dropped terms.
    """
    N, d, n = ring.N, ring.d, ring.nvars

    def live(mono):
        return mono[0] < N and mono[-1] < N

    cols = [c for c in monomials_of_degree(n, M) if live(c)]
    index = {mono: k for k, mono in enumerate(cols)}
    ech = Echelon(track=True)
    for j in range(1, d):
        f = ring.relations[j]
        for u in _multipliers(n, M - f.degree(), bound=N):
            row = {}
            for mono, c in f.items():
                mm = tuple(a + b for a, b in zip(mono, u))
                if live(mm):
                    row[index[mm]] = int(c)
            if row:
                ech.add_row(row, tag=(j, u))
    target = [0] * n
    target[i] = M
    target = tuple(target)
    if not live(target):
        return None
    scale, rem, tags = ech.reduce({index[target]: 1})
    if rem:
        return None
    # scale * H_i^M = sum tags * (u f_j restricted); lift back to full polynomials
    cof = [MultiPoly.zero(n) for _ in range(n)]
    for (j, u), c in tags.items():
        cof[j] = cof[j] + MultiPoly.monomial(u, Fraction(c, scale))
    residual = MultiPoly.var(n, i, M)
    for j in range(1, d):
        residual = residual - cof[j] * ring.relations[j]
    low, high = {}, {}
    for mono, c in residual.items():
        if mono[0] >= N:
            low[(mono[0] - N,) + mono[1:]] = c
        elif mono[-1] >= N:
            high[mono[:-1] + (mono[-1] - N,)] = c
        else:
            raise AssertionError("residual outside the monomial ideal")
    cof[0] = cof[0] + MultiPoly(n, low)
    cof[d] = cof[d] + MultiPoly(n, high)
    return cof


def residue_certificate(ring: QuasimapRing, i: int):
    """(M_i, cofactors) with H_i^{M_i} = sum_j cofactors[j] * f_j exactly."""
    if not 0 <= i <= ring.d:
        raise InvalidParams(f"variable index {i} out of range")
    with ring._lock:
        if i in ring._certs:
            return ring._certs[i]
        n, N = ring.nvars, ring.N
        if i == 0 or i == ring.d:
            cof = [MultiPoly.zero(n) for _ in range(n)]
            cof[i] = MultiPoly.constant(n, 1)
            cert = (N, tuple(cof))
        else:
            cert = None
            for M in range(N, N * (ring.d + 1) + 1):
                cof = _membership(ring, i, M)
                if cof is not None:
                    cert = (M, tuple(cof))
                    break
            if cert is None:
                raise CertificateNotFound(f"no certificate for H_{i} up to degree {N * (ring.d + 1)}")
        ring._certs[i] = cert
        return cert


def _truncated_mul(p, q, bound):
    """p*q keeping only monomials with every exponent <= bound[i]."""
    out = {}
    for m1, c1 in p.items():
        if any(e > b for e, b in zip(m1, bound)):
            continue
        for m2, c2 in q.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            if any(e > b for e, b in zip(m, bound)):
                continue
            out[m] = out.get(m, 0) + c1 * c2
    return MultiPoly(p.nvars, out)


def _det(matrix, bound):
    """Determinant of a small square MultiPoly matrix, modulo monomials beyond ``bound``.

    Terms with an exponent above ``bound`` lie in (H_i^{M_i}) and have zero
    residue, so the truncation is exact for integration.
    """
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    nv = matrix[0][0].nvars
    total = MultiPoly.zero(nv)
    for c in range(size):
        entry = matrix[0][c]
        if not entry:
            continue
        minor = [row[:c] + row[c + 1:] for row in matrix[1:]]
        term = _truncated_mul(entry, _det(minor, bound), bound)
        total = total + term if c % 2 == 0 else total - term
    return total


def transformation_data(ring: QuasimapRing):
    """(exponents M_i - 1, det A truncated to those exponents), cached."""
    with ring._lock:
        if ring._det is None:
            certs = [residue_certificate(ring, i) for i in range(ring.nvars)]
            A = [list(cof) for _, cof in certs]
            target = tuple(M - 1 for M, _ in certs)
            ring._det = (target, _det(A, target))
        return ring._det


def integrate(ring: QuasimapRing, p: MultiPoly) -> Fraction:
    """Grothendieck residue of p: coefficient of prod H_i^{M_i-1} in p * det(A)."""
    if p.nvars != ring.nvars:
        raise InvalidParams(f"polynomial has {p.nvars} variables, ring has {ring.nvars}")
    if not p:
        return Fraction(0)
    target, det = transformation_data(ring)
    terms = p.terms
    total = Fraction(0)
    for mono, c in det.items():
        comp = tuple(t - e for t, e in zip(target, mono))
        if min(comp) < 0:
            continue
        v = terms.get(comp)
        if v:
            total += c * v
    return total


def socle_normal_form(ring: QuasimapRing, p: MultiPoly):
    """Reduce the top-degree part of p to ``c * socle_monomial``; returns (c, monomial)."""
    s = ring.socle_degree
    cols, index, ech = _macaulay_echelon(ring, s)
    free = [k for k in range(len(cols)) if k not in ech.pivots]
    if len(free) != 1:
        raise AssertionError(f"socle has dimension {len(free)}, expected 1")
    socle = cols[free[0]]
    top = p.homogeneous_component(s)
    if not top:
        return Fraction(0), socle
    # clear denominators so elimination stays integral
    den = 1
    for _, c in top.items():
        q = Fraction(c).denominator
        den = den * q // gcd(den, q)
    vec = {index[m]: int(c * den) for m, c in top.items()}
    scale, rem, _ = ech.reduce(vec)
    value = Fraction(rem.get(free[0], 0), scale * den)
    return value, socle


def integrate_via_socle(ring: QuasimapRing, p: MultiPoly) -> Fraction:
    """Second route: Macaulay reduction to the socle, then the residue of its basis monomial."""
    c, socle = socle_normal_form(ring, p)
    if not c:
        return Fraction(0)
    return c * integrate(ring, MultiPoly.monomial(socle))
