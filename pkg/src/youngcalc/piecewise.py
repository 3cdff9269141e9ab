"""Exact piecewise polynomials in one variable over the rationals.

Polynomials are coefficient lists ``[c0, c1, ...]`` in the absolute
variable.  A :class:`Piecewise` is a sequence of closed intervals with a
polynomial on each; values at shared endpoints are taken from the right
piece (measure zero for every use here).
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import Sequence

Poly = list  # list[Fraction]


def padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def pscale(p: Poly, c) -> Poly:
    return [a * c for a in p]


def peval(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * x + a
    return acc


def pantiderivative(p: Poly) -> Poly:
    return [Fraction(0)] + [Fraction(a) / (i + 1) for i, a in enumerate(p)]


def pcompose_affine(p: Poly, a, b) -> Poly:
    """``p(a + b x)``."""
    out: Poly = []
    for c in reversed(p):
        out = padd(pmul(out, [Fraction(a), Fraction(b)]), [c])
    return out


class Piecewise:
    __slots__ = ("breaks", "polys")

    def __init__(self, breaks: Sequence, polys: Sequence[Poly]):
        assert len(breaks) == len(polys) + 1
        self.breaks = [Fraction(x) for x in breaks]
        self.polys = [[Fraction(c) for c in p] for p in polys]

    @classmethod
    def constant(cls, lo, hi, value) -> "Piecewise":
        return cls([lo, hi], [[Fraction(value)]])

    @property
    def domain(self):
        return self.breaks[0], self.breaks[-1]

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        lo, hi = self.domain
        if x < lo or x > hi:
            raise ValueError(f"{x} outside domain [{lo}, {hi}]")
        if len(self.polys) == 0:
            return Fraction(0)
        i = min(bisect_right(self.breaks, x) - 1, len(self.polys) - 1)
        return peval(self.polys[i], x)

    def _piece_at(self, x) -> Poly:
        i = min(max(bisect_right(self.breaks, x) - 1, 0), len(self.polys) - 1)
        return self.polys[i]

    def __mul__(self, other: "Piecewise") -> "Piecewise":
        lo = max(self.breaks[0], other.breaks[0])
        hi = min(self.breaks[-1], other.breaks[-1])
        pts = sorted({x for x in self.breaks + other.breaks if lo <= x <= hi} | {lo, hi})
        polys = []
        for a, b in zip(pts, pts[1:]):
            mid = (a + b) / 2
            polys.append(pmul(self._piece_at(mid), other._piece_at(mid)))
        return Piecewise(pts, polys)

    def cumulative(self) -> "Piecewise":
        """``u -> integral from the left end to u``."""
        acc = Fraction(0)
        polys = []
        for (a, b), p in zip(zip(self.breaks, self.breaks[1:]), self.polys):
            q = pantiderivative(p)
            q = padd(q, [acc - peval(q, a)])
            polys.append(q)
            acc = peval(q, b)
        return Piecewise(self.breaks, polys)

    def integral(self) -> Fraction:
        total = Fraction(0)
        for (a, b), p in zip(zip(self.breaks, self.breaks[1:]), self.polys):
            q = pantiderivative(p)
            total += peval(q, b) - peval(q, a)
        return total

    def compose(self, inner: "PiecewiseLinear") -> "Piecewise":
        """``x -> self(inner(x))``; ``inner`` must map into the domain of ``self``."""
        breaks: list[Fraction] = []
        polys: list[Poly] = []
        for (x0, x1, a, b) in inner.pieces:
            cuts = {x0, x1}
            if b != 0:
                for t in self.breaks:
                    x = (t - a) / b
                    if x0 < x < x1:
                        cuts.add(x)
            cuts = sorted(cuts)
            for u, v in zip(cuts, cuts[1:]):
                mid = a + b * (u + v) / 2
                piece = self._piece_at(mid)
                if not breaks:
                    breaks.append(u)
                elif breaks[-1] != u:
                    # gap in the inner function's domain; fill with zero
                    polys.append([])
                    breaks.append(u)
                polys.append(pcompose_affine(piece, a, b))
                breaks.append(v)
        return Piecewise(breaks, polys)


class PiecewiseLinear:
    """Pieces ``(x0, x1, a, b)`` meaning ``a + b x`` on ``[x0, x1]``."""

    __slots__ = ("pieces",)

    def __init__(self, pieces):
        self.pieces = [tuple(Fraction(v) for v in p) for p in pieces]

    @classmethod
    def through(cls, points) -> "PiecewiseLinear":
        """Interpolate points sorted by first coordinate; vertical jumps are skipped."""
        pieces = []
        for (x0, y0), (x1, y1) in zip(points, points[1:]):
            if x1 == x0:
                continue
            b = (y1 - y0) / (x1 - x0)
            pieces.append((x0, x1, y0 - b * x0, b))
        return cls(pieces)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        for x0, x1, a, b in reversed(self.pieces):
            if x0 <= x <= x1:
                return a + b * x
        raise ValueError(f"{x} outside domain")
