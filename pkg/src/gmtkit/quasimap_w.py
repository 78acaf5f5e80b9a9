"""Two-point quasimap intersection numbers w(O_{h^a} O_{h^b})_{0,d}.

The integrand on the quasimap space is

    H_0^a * prod_{j=1..d} e^k(H_{j-1}, H_j) / prod_{j=1..d-1} (k H_j) * H_d^b

with e^k(x, y) = prod_{j=0..k} (j x + (k - j) y).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chow_ring import build_ring, integrate
from .errors import InvalidParams
from .exact_core import MultiPoly, poly_divide_exact


@dataclass(frozen=True)
class WKey:
    N: int
    k: int
    d: int
    a: int
    b: int

    @property
    def on_selection_line(self):
        return self.a + self.b == selection_sum(self.N, self.k, self.d)


def selection_sum(N, k, d):
    """a + b on the only possibly nonzero sector."""
    return N - 3 + (N - k) * d


def _linear_factors(k, nvars, i, j):
    """The k+1 linear forms (t H_i + (k-t) H_j) making up e^k(H_i, H_j)."""
    out = []
    for t in range(k + 1):
        terms = {}
        if t:
            m = [0] * nvars
            m[i] = 1
            terms[tuple(m)] = t
        if k - t:
            m = [0] * nvars
            m[j] = 1
            terms[tuple(m)] = k - t
        out.append(MultiPoly(nvars, terms))
    return out


@lru_cache(maxsize=None)
def ek_poly(k: int) -> MultiPoly:
    """e^k(x, y) in two variables (x, y)."""
    if k < 1:
        raise InvalidParams(f"k must be >= 1, got {k}")
    p = MultiPoly.constant(2, 1)
    for f in _linear_factors(k, 2, 0, 1):
        p = p * f
    return p


@lru_cache(maxsize=None)
def _chain_product(k, d):
    n = d + 1
    p = MultiPoly.constant(n, 1)
    for j in range(1, d + 1):
        for f in _linear_factors(k, n, j - 1, j):
            p = p * f
    if d > 1:
        denom = MultiPoly.constant(n, k ** (d - 1))
        for j in range(1, d):
            denom = denom * MultiPoly.var(n, j)
        p = poly_divide_exact(p, denom)
    return p


def w_integrand(N: int, k: int, d: int, a: int, b: int) -> MultiPoly:
    if d < 1 or k < 1 or a < 0 or b < 0:
        raise InvalidParams(f"bad integrand parameters N={N} k={k} d={d} a={a} b={b}")
    n = d + 1
    ends = [0] * n
    ends[0] += a
    ends[d] += b
    return _chain_product(k, d) * MultiPoly.monomial(ends)


@lru_cache(maxsize=None)
def w_two_point(N: int, k: int, d: int, a: int, b: int) -> Fraction:
    """w(O_{h^a} O_{h^b})_{0,d}; zero off the selection line or for negative exponents."""
    if k < 1:
        raise InvalidParams(f"k must be >= 1, got {k}")
    ring = build_ring(N, d)
    if a < 0 or b < 0 or a + b != selection_sum(N, k, d):
        return Fraction(0)
    return integrate(ring, w_integrand(N, k, d, a, b))


def w_d1_closed(N: int, k: int, a: int, b: int) -> Fraction:
    """d = 1 shortcut: coefficient of x^{N-1-a} y^{N-1-b} in e^k(x, y)."""
    ex, ey = N - 1 - a, N - 1 - b
    if a < 0 or b < 0 or ex < 0 or ey < 0:
        return Fraction(0)
    return ek_poly(k).coeff((ex, ey))


def vsc(N: int, k: int, d: int, n: int) -> Fraction:
    """Virtual structure constant (d/k) * w(O_{h^{N-2-n}} O_{h^{n-1+(N-k)d}})_{0,d}."""
    a, b = N - 2 - n, n - 1 + (N - k) * d
    if a < 0 or b < 0:
        return Fraction(0)
    return Fraction(d, k) * w_two_point(N, k, d, a, b)
