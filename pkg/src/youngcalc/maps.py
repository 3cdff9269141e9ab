"""Bipartite maps from polygon gluings and the character formulas.

A face type ``mu`` gives polygons with ``2*mu_i`` edges whose corners are
alternately white and black.  Each pair-partition of the ``2n`` edges glues
the polygons into a surface (white corner to white corner), producing a
bipartite map.  Summing ``N_M`` over these maps with sign weights gives the
normalized characters (``alpha = 1``, oriented gluings only) and the zonal
characters (``alpha = 2``, all maps).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterator

from .bigraphs import BipartiteGraph, FormalSum, ResourceBoundError
from .diagrams import Partition, anisotropic_scale, partitions_of
from .embeddings import count_embeddings_sum


class CalibrationError(RuntimeError):
    pass


DEFAULT_MAX_EDGES = 6


def pair_partitions(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    """All perfect matchings of ``items``, lexicographic in the pairs."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        for tail in pair_partitions(rest[:i] + rest[i + 1:]):
            yield [(first, partner)] + tail


def double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, v):
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


@dataclass(frozen=True)
class _Polygons:
    """Edge/corner bookkeeping for the polygons of one face type.

    Edge ``e`` and corner ``e`` share an index; edge ``e`` runs from corner
    ``e`` to the next corner of the same polygon.  Even positions in a
    polygon hold white corners.
    """
    face_type: Partition
    polygon: tuple[int, ...]      # polygon of each edge
    position: tuple[int, ...]     # position of each edge inside its polygon
    next_corner: tuple[int, ...]

    @classmethod
    def build(cls, mu: Partition) -> "_Polygons":
        polygon, position, nxt = [], [], []
        offset = 0
        for p, m in enumerate(mu.parts):
            for j in range(2 * m):
                polygon.append(p)
                position.append(j)
                nxt.append(offset + (j + 1) % (2 * m))
            offset += 2 * m
        return cls(mu, tuple(polygon), tuple(position), tuple(nxt))

    def white_corner(self, e: int) -> int:
        return e if self.position[e] % 2 == 0 else self.next_corner[e]

    def black_corner(self, e: int) -> int:
        return self.next_corner[e] if self.position[e] % 2 == 0 else e

    def direction(self, e: int) -> int:
        """+1 if the edge runs white -> black in the polygon's own orientation."""
        return 1 if self.position[e] % 2 == 0 else -1


@dataclass(frozen=True)
class GluedMap:
    face_type: Partition
    pairing: tuple[tuple[int, int], ...]   # 0-based edge labels
    white_vertices: tuple[tuple[int, ...], ...]
    black_vertices: tuple[tuple[int, ...], ...]
    orientable: bool
    oriented: bool
    underlying: BipartiteGraph = field(compare=False)

    @property
    def n_edges(self) -> int:
        return self.face_type.size

    @property
    def n_faces(self) -> int:
        return self.face_type.length

    @property
    def euler_characteristic(self) -> int:
        return len(self.white_vertices) + len(self.black_vertices) - self.n_edges + self.n_faces

    @property
    def num_white(self) -> int:
        return len(self.white_vertices)

    @property
    def num_black(self) -> int:
        return len(self.black_vertices)

    def to_json(self) -> dict:
        return {
            "pairing": [[a + 1, b + 1] for a, b in self.pairing],
            "V_w": self.num_white,
            "V_b": self.num_black,
            "euler_characteristic": self.euler_characteristic,
            "orientable": self.orientable,
            "oriented": self.oriented,
            "graph": self.underlying.to_json(),
        }


def _orientable(poly: _Polygons, pairing) -> bool:
    """Propagate relative orientations of the polygons through the gluings.

    Gluing edges ``a`` and ``b`` is orientation-compatible iff the two edges
    are traversed in opposite directions, i.e.
    ``s[p(a)] * s[p(b)] == -dir(a) * dir(b)``.
    """
    n = poly.face_type.length
    parent = list(range(n))
    parity = [0] * n   # orientation of node relative to its parent (0 same, 1 flipped)

    def find(v):
        if parent[v] == v:
            return v, 0
        root, par = find(parent[v])
        parent[v] = root
        parity[v] ^= par
        return root, parity[v]

    for a, b in pairing:
        need = 0 if -poly.direction(a) * poly.direction(b) == 1 else 1
        ra, pa = find(poly.polygon[a])
        rb, pb = find(poly.polygon[b])
        if ra == rb:
            if pa ^ pb != need:
                return False
        else:
            parent[ra] = rb
            parity[ra] = pa ^ pb ^ need
    return True


def glue(mu: Partition, pairing) -> GluedMap:
    poly = _Polygons.build(mu)
    ncorners = len(poly.polygon)
    dsu = _DSU(ncorners)
    for a, b in pairing:
        dsu.union(poly.white_corner(a), poly.white_corner(b))
        dsu.union(poly.black_corner(a), poly.black_corner(b))
    classes: dict[int, list[int]] = {}
    for c in range(ncorners):
        classes.setdefault(dsu.find(c), []).append(c)
    whites = sorted(tuple(v) for v in classes.values() if poly.position[v[0]] % 2 == 0)
    blacks = sorted(tuple(v) for v in classes.values() if poly.position[v[0]] % 2 == 1)
    windex = {c: i for i, cls in enumerate(whites) for c in cls}
    bindex = {c: i for i, cls in enumerate(blacks) for c in cls}
    edges = frozenset((windex[poly.white_corner(e)], bindex[poly.black_corner(e)])
                      for e in range(ncorners))
    graph = BipartiteGraph(len(whites), len(blacks), edges)
    oriented = all(poly.direction(a) != poly.direction(b) for a, b in pairing)
    return GluedMap(mu, tuple(tuple(p) for p in pairing), tuple(whites), tuple(blacks),
                    _orientable(poly, pairing), oriented, graph)


@lru_cache(maxsize=None)
def _gluings(mu: Partition) -> tuple[GluedMap, ...]:
    return tuple(glue(mu, p) for p in pair_partitions(list(range(2 * mu.size))))


def enumerate_gluings(mu: Partition, max_edges: int = DEFAULT_MAX_EDGES) -> list[GluedMap]:
    """All ``(2n-1)!!`` maps of face type ``mu``, one per pair-partition."""
    if mu.size > max_edges:
        raise ResourceBoundError(
            f"|mu| = {mu.size} exceeds the enumeration bound {max_edges} "
            f"({double_factorial(2 * mu.size - 1)} gluings)")
    return list(_gluings(mu))


def orientability(m: GluedMap) -> bool:
    """Whether the glued surface admits any orientation."""
    return m.orientable


MAP_CLASSES = ("all", "orientable", "oriented")


@lru_cache(maxsize=None)
def map_sum(mu: Partition, weight: int, which: str = "all",
            max_edges: int = DEFAULT_MAX_EDGES) -> FormalSum:
    """``sum_M weight^{|V_b(M)|} * (underlying graph of M)`` as a formal sum.

    ``which`` restricts the maps: ``"oriented"`` keeps gluings compatible
    with the polygons' own orientations (every glued pair joins a
    white-to-black edge with a black-to-white one), ``"orientable"`` keeps
    every gluing whose surface is orientable, ``"all"`` keeps everything.
    """
    if which not in MAP_CLASSES:
        raise ValueError(f"unknown map class {which!r}")
    maps = enumerate_gluings(mu, max_edges)
    keep = {"all": lambda m: True, "orientable": lambda m: m.orientable,
            "oriented": lambda m: m.oriented}[which]
    return FormalSum([(m.underlying, Fraction(weight) ** m.num_black)
                      for m in maps if keep(m)])


def raw_map_sum(mu: Partition, lam: Partition, alpha: int,
                max_edges: int = DEFAULT_MAX_EDGES) -> Fraction:
    if alpha == 1:
        s = map_sum(mu, -1, "oriented", max_edges)
    elif alpha == 2:
        s = map_sum(mu, -2, "all", max_edges)
    else:
        raise ValueError("alpha must be 1 or 2")
    return count_embeddings_sum(s, lam)


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama oracle
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], rest: tuple[int, ...]) -> int:
    if not rest:
        return 1
    r, tail = rest[0], rest[1:]
    occupied = set(beta)
    total = 0
    for bead in beta:
        target = bead - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < bead)
        moved = tuple(sorted((occupied - {bead}) | {target}, reverse=True))
        total += (-1) ** height * _mn(moved, tail)
    return total


def mn_character(lam: Partition, pi: Partition) -> int:
    """Irreducible character ``chi^lam`` at cycle type ``pi`` by rim-hook removal."""
    if lam.size != pi.size:
        raise ValueError(f"size mismatch: |lam| = {lam.size}, |pi| = {pi.size}")
    ell = len(lam)
    beta = tuple(p + ell - 1 - i for i, p in enumerate(lam.parts))
    return _mn(beta, pi.parts)


def normalized_sigma(mu: Partition, lam: Partition) -> Fraction:
    """Normalized character: falling factorial times the character ratio."""
    k, n = mu.size, lam.size
    if k > n:
        return Fraction(0)
    falling = prod(range(n - k + 1, n + 1))
    padded = Partition(mu.parts + (1,) * (n - k))
    dim = mn_character(lam, Partition((1,) * n))
    return Fraction(falling * mn_character(lam, padded), dim)


# ---------------------------------------------------------------------------
# sign calibration
# ---------------------------------------------------------------------------

_CALIBRATION_SHAPES = {1: (Partition((1,)), Partition((2,))),
                       0: (Partition((1, 1)), Partition((2, 1)))}


def empirical_sign(mu: Partition, lam_size: int | None = None) -> int:
    """The global sign relating the orientable map sum to the oracle for ``mu``.

    Compares on every ``lam`` with ``|mu| <= |lam| <= lam_size``; raises if the
    ratio is not one constant in ``{+1, -1}``.
    """
    if lam_size is None:
        lam_size = mu.size + 2
    sign = None
    for n in range(mu.size, lam_size + 1):
        for lam in partitions_of(n):
            raw = raw_map_sum(mu, lam, 1)
            ref = normalized_sigma(mu, lam)
            if raw == ref == 0:
                continue
            if raw == ref:
                s = 1
            elif raw == -ref:
                s = -1
            else:
                raise CalibrationError(f"mu={mu}, lam={lam}: raw {raw} vs oracle {ref}")
            if sign is not None and s != sign:
                raise CalibrationError(f"sign for mu={mu} is not constant in lam")
            sign = s
    if sign is None:
        raise CalibrationError(f"no nonzero value to calibrate mu={mu}")
    return sign


@lru_cache(maxsize=None)
def sign_calibration(length_parity: int) -> int:
    """Sign for all face types with ``len(mu) % 2 == length_parity``.

    Fixed once from two reference shapes per parity class; they must agree.
    """
    signs = {empirical_sign(mu) for mu in _CALIBRATION_SHAPES[length_parity]}
    if len(signs) != 1:
        raise CalibrationError(f"reference shapes disagree for parity {length_parity}")
    return signs.pop()


@dataclass
class CharacterResult:
    value: Fraction
    raw_sum: Fraction
    calibration: int
    maps_enumerated: int
    alpha: int

    def to_json(self) -> dict:
        from .rationals import format_rational
        return {
            "value": format_rational(self.value),
            "raw_sum": format_rational(self.raw_sum),
            "calibration": "+1" if self.calibration > 0 else "-1",
            "maps_enumerated": self.maps_enumerated,
            "alpha": self.alpha,
            "labeling": "each pair-partition counted once",
        }


def character_maps(mu: Partition, lam: Partition, alpha: int = 1,
                   max_edges: int = DEFAULT_MAX_EDGES) -> CharacterResult:
    """Character value from the map expansion, with the calibrated sign."""
    raw = raw_map_sum(mu, lam, alpha, max_edges)
    sigma = sign_calibration(len(mu) % 2)
    return CharacterResult(sigma * raw, raw, sigma,
                           double_factorial(2 * mu.size - 1), alpha)


def stretch(lam: Partition, direction: str) -> Partition:
    """Double ``lam`` in one direction.

    ``"rows"`` doubles every row length (the anisotropic diagram ``2 lam``,
    scaling white/column coordinates); ``"columns"`` doubles every column
    length (each row repeated, scaling black/row coordinates).
    """
    if direction == "rows":
        return anisotropic_scale(lam, 2)
    if direction == "columns":
        return anisotropic_scale(lam.conjugate(), 2).conjugate()
    raise ValueError(f"unknown direction {direction!r}")


def zonal_identity(mu: Partition, lam: Partition, direction: str = "rows",
                   max_edges: int = DEFAULT_MAX_EDGES) -> tuple[Fraction, Fraction]:
    """Both sides of ``sum (-2)^{V_b} N_M(lam) = sum (-1)^{V_b} N_M(2 lam)`` over all maps."""
    lhs = count_embeddings_sum(map_sum(mu, -2, "all", max_edges), lam)
    rhs = count_embeddings_sum(map_sum(mu, -1, "all", max_edges), stretch(lam, direction))
    return lhs, rhs
