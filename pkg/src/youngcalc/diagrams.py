"""Partitions and piecewise-affine Young diagram profiles.

Profiles are stored in the Russian convention: a list of breakpoints
``(z, omega(z))`` with ``omega(z) = |z|`` outside the breakpoint range.
All coordinates are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .rationals import format_rational, parse_rational


class DiagramError(ValueError):
    """Raised on malformed partitions or profiles."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for p in parts:
            if p < 1:
                raise DiagramError(f"parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DiagramError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,3,1"``; ``""`` and ``"0"`` give the empty partition."""
        text = text.strip()
        if text in ("", "0"):
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise DiagramError(f"bad partition text {text!r}") from exc
        return cls(tuple(parts))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p > i)
                               for i in range(self.parts[0])))

    def boxes(self) -> Iterator["Box"]:
        for row, length in enumerate(self.parts, start=1):
            for col in range(1, length + 1):
                yield Box(col, row)

    def contents(self) -> list[int]:
        return [b.content for b in self.boxes()]

    def __contains__(self, box) -> bool:
        col, row = box
        return 1 <= row <= len(self.parts) and 1 <= col <= self.parts[row - 1]


@dataclass(frozen=True)
class Box:
    column: int
    row: int

    @property
    def content(self) -> int:
        return self.column - self.row

    def __iter__(self):
        return iter((self.column, self.row))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest, bound):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


def anisotropic_scale(lam: Partition, alpha: int) -> Partition:
    """Multiply every row length by ``alpha``."""
    if alpha < 1:
        raise DiagramError("alpha must be a positive integer")
    return Partition(tuple(alpha * p for p in lam.parts))


def integer_dilation(lam: Partition, t: int) -> Partition:
    """The partition whose diagram is ``lam`` scaled by ``t`` in both directions."""
    if t < 1:
        raise DiagramError("t must be a positive integer")
    return Partition(tuple(t * p for p in lam.parts for _ in range(t)))


def _abs(z: Fraction) -> Fraction:
    return z if z >= 0 else -z


def _collinear(p, q, r) -> bool:
    return (q[1] - p[1]) * (r[0] - q[0]) == (r[1] - q[1]) * (q[0] - p[0])


class Profile:
    """A generalized Young diagram ``omega`` in Russian coordinates.

    Breakpoints are normalized on construction (collinear points merged,
    redundant end points dropped), so two profiles describing the same
    function compare equal.  The empty diagram has the single breakpoint
    ``(0, 0)``.
    """

    __slots__ = ("breakpoints",)

    def __init__(self, breakpoints: Iterable[tuple]):
        pts = [(Fraction(z), Fraction(w)) for z, w in breakpoints]
        if not pts:
            pts = [(Fraction(0), Fraction(0))]
        for (z0, _), (z1, _) in zip(pts, pts[1:]):
            if z1 <= z0:
                raise DiagramError("breakpoints must be strictly increasing in z")
        for (z0, w0), (z1, w1) in zip(pts, pts[1:]):
            if abs(w1 - w0) > z1 - z0:
                raise DiagramError("profile slope outside [-1, 1]")
        if pts[0][1] != _abs(pts[0][0]) or pts[-1][1] != _abs(pts[-1][0]):
            raise DiagramError("profile must agree with |z| at both ends")
        for z, w in pts:
            if w < _abs(z):
                raise DiagramError("profile dips below |z|")
        # pad with points on the arms of |z| so the end kinks are explicit
        lo, hi = min(pts[0][0], 0) - 1, max(pts[-1][0], 0) + 1
        full = [(lo, -lo)]
        if pts[0][0] > 0:
            full.append((Fraction(0), Fraction(0)))
        full.extend(pts)
        if pts[-1][0] < 0:
            full.append((Fraction(0), Fraction(0)))
        full.append((hi, hi))
        out = [full[0]]
        for p in full[1:]:
            while len(out) >= 2 and _collinear(out[-2], out[-1], p):
                out.pop()
            out.append(p)
        object.__setattr__(self, "breakpoints", tuple(out[1:-1]))

    def __setattr__(self, name, value):
        raise AttributeError("Profile is immutable")

    def __eq__(self, other):
        return isinstance(other, Profile) and self.breakpoints == other.breakpoints

    def __hash__(self):
        return hash(self.breakpoints)

    def __repr__(self):
        pts = ", ".join(f"({z}, {w})" for z, w in self.breakpoints)
        return f"Profile([{pts}])"

    @property
    def is_empty(self) -> bool:
        return self.breakpoints == ((0, 0),)

    @property
    def support(self) -> tuple[Fraction, Fraction] | None:
        if self.is_empty:
            return None
        return self.breakpoints[0][0], self.breakpoints[-1][0]

    def __call__(self, z) -> Fraction:
        z = Fraction(z)
        bp = self.breakpoints
        if z <= bp[0][0] or z >= bp[-1][0]:
            return _abs(z)
        i = bisect_right([p[0] for p in bp], z) - 1
        (z0, w0), (z1, w1) = bp[i], bp[i + 1]
        return w0 + (w1 - w0) * (z - z0) / (z1 - z0)

    def segments(self) -> list[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
        """Consecutive breakpoint pairs (the affine pieces of the support)."""
        bp = self.breakpoints
        return list(zip(bp, bp[1:]))

    def slope(self, z) -> Fraction:
        """Right derivative of omega at ``z``."""
        z = Fraction(z)
        for (z0, w0), (z1, w1) in self.segments():
            if z0 <= z < z1:
                return (w1 - w0) / (z1 - z0)
        return Fraction(1) if z >= 0 else Fraction(-1)

    @property
    def is_strict(self) -> bool:
        """True if every slope inside the support lies strictly in (-1, 1)."""
        if self.is_empty:
            return False
        return all(abs(w1 - w0) < z1 - z0 for (z0, w0), (z1, w1) in self.segments())

    def area(self) -> Fraction:
        """French-convention area, i.e. half the integral of omega - |z|."""
        from .functionals import s_k_profile
        return s_k_profile(self, 2)

    def french_boundary(self) -> list[tuple[Fraction, Fraction]]:
        """Boundary polyline in French coordinates from (0, y_max) to (x_max, 0)."""
        return [((w + z) / 2, (w - z) / 2) for z, w in self.breakpoints]

    def to_json(self) -> dict:
        return {"breakpoints": [[format_rational(z), format_rational(w)]
                                for z, w in self.breakpoints]}

    @classmethod
    def from_json(cls, data) -> "Profile":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            pts = [(parse_rational(z), parse_rational(w)) for z, w in data["breakpoints"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise DiagramError(f"bad profile JSON: {exc}") from exc
        return cls(pts)


def profile_of_partition(lam: Partition) -> Profile:
    """Staircase profile of ``lam`` (Russian convention)."""
    if not lam.parts:
        return Profile([])
    corners = []
    for j, length in enumerate(lam.parts):
        corners.append((length, j))
        corners.append((length, j + 1))
    corners.append((0, len(lam.parts)))
    pts = sorted({(Fraction(x - y), Fraction(x + y)) for x, y in corners})
    return Profile(pts)


def dilate(omega: Profile, t) -> Profile:
    """Profile of the diagram scaled by ``t``: s -> t * omega(s / t)."""
    t = Fraction(t)
    if t <= 0:
        raise DiagramError("dilation factor must be positive")
    return Profile([(t * z, t * w) for z, w in omega.breakpoints])


def triangle_profile(p, q) -> Profile:
    """Strict profile of the French triangle x/p + y/q <= 1.

    With ``p == q`` this is ``omega = p`` on ``[-p, p]``.
    """
    p, q = Fraction(p), Fraction(q)
    # hypotenuse endpoints (0, q) and (p, 0) in French coordinates
    return Profile([(-q, q), (p, p)])


def is_partition_sequence(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))
