"""Hypergeometric series w_0, w_1, the mirror map, and the CY series route.

Everything is a truncated series in q = e^x. The generating functions carry
a linear term (k x, resp. k t(x)) that is matched symbolically on both sides
and never stored in a QSeries.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import InvalidParams, MismatchReport
from .exact_core import QSeries, series_exp, series_mul, series_recip
from .quasimap_w import w_two_point


@dataclass(frozen=True)
class MirrorData:
    k: int
    order: int
    w0: QSeries
    w1: QSeries
    tmap: QSeries  # coefficients of t(x) - x = w1 / w0


def _check(k, order):
    if k < 1 or order < 0:
        raise InvalidParams(f"need k >= 1 and order >= 0, got k={k}, order={order}")


def _hyper(k, d):
    return Fraction(factorial(k * d), factorial(d) ** k)


def w0_series(k: int, order: int) -> QSeries:
    _check(k, order)
    return QSeries([_hyper(k, d) for d in range(order + 1)], order)


def w1_series(k: int, order: int) -> QSeries:
    _check(k, order)
    coeffs = [Fraction(0)]
    inner = Fraction(0)
    for d in range(1, order + 1):
        inner += sum(Fraction(l, d * (k * d - l)) for l in range(1, k))
        coeffs.append(_hyper(k, d) * inner)
    return QSeries(coeffs, order)


def mirror_map_series(k: int, order: int) -> MirrorData:
    w0, w1 = w0_series(k, order), w1_series(k, order)
    return MirrorData(k, order, w0, w1, series_mul(w1, series_recip(w0)))


def check_w_mirror_identity(N: int, d_max: int, k: int | None = None, raise_on_fail=True):
    """Compare w(O_{h^{N-3}} O_1)_{0,d} with k * [q^d](w1/w0) for 1 <= d <= d_max."""
    k = N if k is None else k
    if k != N:
        raise InvalidParams("the mirror-map identity is stated for the Calabi-Yau case k = N")
    tmap = mirror_map_series(k, d_max).tmap
    rows = []
    for d in range(1, d_max + 1):
        lhs = w_two_point(N, k, d, N - 3, 0)
        rhs = k * tmap[d]
        rows.append({"d": d, "w": lhs, "k_t": rhs, "ok": lhs == rhs})
    if raise_on_fail and not all(r["ok"] for r in rows):
        raise MismatchReport(rows)
    return rows


def cy_series_route(k: int, w_pairs: dict, d_max: int) -> dict:
    """Solve k t + sum_d G_d e^{d t} = k x + sum_d w_d e^{d x} for G_1..G_dmax.

    With q = e^x, e^{d t} = q^d exp(d * tmap); the q^n equation is linear in
    G_n with unit coefficient, so back-substitution degree by degree works.
    """
    tmap = mirror_map_series(k, d_max).tmap
    exps = {d: series_exp(tmap.scale(d)) for d in range(1, d_max + 1)}
    gw = {}
    for n in range(1, d_max + 1):
        rhs = Fraction(w_pairs.get(n, 0)) - k * tmap[n]
        for d in range(1, n):
            rhs -= gw[d] * exps[d][n - d]
        gw[n] = rhs
    return gw
