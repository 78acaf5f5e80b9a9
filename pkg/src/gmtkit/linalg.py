"""Sparse fraction-free row echelon over the integers.

Rows are dicts ``column -> int``. Column indices follow the monomial order
(index 0 is the largest monomial), so the pivot of a row is its smallest
column index: the first nonzero entry under the fixed order. Each row may
carry a ``tags`` dict recording which original generators it combines, with
the invariant ``row == sum(tags[t] * original[t])`` held exactly.
"""
from __future__ import annotations

import heapq
from math import gcd


def _axpy(u, a, v, b):
    """a*u - b*v, dropping zeros."""
    out = {k: a * x for k, x in u.items()} if a != 1 else dict(u)
    for k, y in v.items():
        z = out.get(k, 0) - b * y
        if z:
            out[k] = z
        else:
            out.pop(k, None)
    return out


def _content(*dicts):
    g = 0
    for dct in dicts:
        for x in dct.values():
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


class Echelon:
    def __init__(self, track=False):
        self.track = track
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def _eliminate(self, vec, tags, scale, col):
        pv, pt = self.pivots[col]
        a, b = pv[col], vec[col]
        g = gcd(a, b)
        a //= g
        b //= g
        if a < 0:
            a, b = -a, -b
        vec = _axpy(vec, a, pv, b)
        if tags is not None:
            tags = _axpy(tags, a, pt, b)
        scale *= a
        g = _content(vec, tags or {})
        g = gcd(g, scale)
        if g > 1:
            vec = {k: x // g for k, x in vec.items()}
            if tags is not None:
                tags = {k: x // g for k, x in tags.items()}
            scale //= g
        return vec, tags, scale

    def add_row(self, vec, tag=None):
        """Insert a row; returns True if it raised the rank."""
        tags = {tag: 1} if self.track else None
        scale = 1
        while vec:
            col = min(vec)
            if col not in self.pivots:
                g = _content(vec, tags or {})
                if g > 1:
                    vec = {k: x // g for k, x in vec.items()}
                    if tags is not None:
                        tags = {k: x // g for k, x in tags.items()}
                self.pivots[col] = (vec, tags)
                return True
            vec, tags, scale = self._eliminate(vec, tags, scale, col)
        return False

    def reduce(self, vec):
        """Fully reduce ``vec`` against the pivots.

        Returns ``(scale, remainder, tags)`` with
        ``scale * vec == remainder + sum(tags[t] * original[t])``; ``tags`` is
        None when tracking is off.
        """
        tags = {} if self.track else None
        scale = 1
        vec = dict(vec)
        heap = [c for c in vec if c in self.pivots]
        heapq.heapify(heap)
        while heap:
            col = heapq.heappop(heap)
            if col not in vec:
                continue
            pv = self.pivots[col][0]
            vec, tags, scale = self._eliminate(vec, tags, scale, col)
            for c in pv:
                if c in vec and c in self.pivots and c > col:
                    heapq.heappush(heap, c)
        # _eliminate returns a*vec - b*pivot, so tags here carry the negated
        # pivot combination; flip the sign to express scale*vec = rem + combo.
        if tags is not None:
            tags = {k: -x for k, x in tags.items()}
        return scale, vec, tags
