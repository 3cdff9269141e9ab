"""Numbers of embeddings ``N_G`` of bipartite graphs into Young diagrams.

On a partition, ``N_G(lam)`` counts colourings sending white vertices to
columns and black vertices to rows so that every edge lands on a box.  On a
generalized diagram it is the volume of the set of compatible real
colourings.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .bigraphs import BipartiteGraph, DecoratedGraph, FormalSum, GraphError
from .diagrams import Partition, Profile
from .piecewise import Piecewise, PiecewiseLinear


def _require_no_isolated(g: BipartiteGraph) -> None:
    # the constructor already forbids them; keep the check for duck-typed input
    if {w for w, _ in g.edges} != set(range(g.white)) or \
            {b for _, b in g.edges} != set(range(g.black)):
        raise GraphError("graph has isolated vertices")


@lru_cache(maxsize=200_000)
def _count(g: BipartiteGraph, parts: tuple[int, ...]) -> int:
    if not parts:
        return 0
    # rows of equal length are interchangeable: sum over distinct lengths
    lengths = sorted(set(parts), reverse=True)
    mult = [parts.count(v) for v in lengths]
    white_nbrs = [g.white_neighbors(w) for w in range(g.white)]
    total = 0
    for choice in product(range(len(lengths)), repeat=g.black):
        weight = 1
        for b in choice:
            weight *= mult[b]
        for nb in white_nbrs:
            weight *= min(lengths[choice[b]] for b in nb)
        total += weight
    return total


def count_embeddings(g: BipartiteGraph, lam: Partition) -> int:
    """Exact ``N_G(lam)``.

    Sums, over assignments of rows to black vertices, the product over white
    vertices of the number of admissible columns (the shortest adjacent row).
    Evaluated on whichever of ``G`` / its transpose has fewer black vertices,
    using ``N_G(lam) = N_{G^T}(lam')``.
    """
    _require_no_isolated(g)
    if g.white < g.black:
        return _count(g.transpose(), lam.conjugate().parts)
    return _count(g, lam.parts)


def count_embeddings_bruteforce(g: BipartiteGraph, lam: Partition) -> int:
    """Reference count straight from the definition."""
    _require_no_isolated(g)
    if not lam.parts:
        return 0
    cols = range(1, lam.parts[0] + 1)
    rows = range(1, len(lam) + 1)
    total = 0
    for hw in product(cols, repeat=g.white):
        for hb in product(rows, repeat=g.black):
            if all((hw[w], hb[b]) in lam for w, b in g.edges):
                total += 1
    return total


def count_embeddings_sum(s: FormalSum, lam: Partition) -> Fraction:
    return sum((c * count_embeddings(g, lam) for g, c in s.terms.items()), Fraction(0))


# ---------------------------------------------------------------------------
# exact volumes for forests
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Extents:
    """Row extent ``X(y)`` and column extent ``Y(x)`` of a diagram region."""
    x_max: Fraction
    y_max: Fraction
    col: PiecewiseLinear   # Y as a function of x on [0, x_max]
    row: PiecewiseLinear   # X as a function of y on [0, y_max]


def _extents(omega: Profile) -> _Extents:
    pts = omega.french_boundary()   # x increasing, y decreasing
    x_max = pts[-1][0]
    y_max = pts[0][1]
    col = PiecewiseLinear.through(pts)
    row = PiecewiseLinear.through([(y, x) for x, y in reversed(pts)])
    return _Extents(x_max, y_max, col, row)


def _adjacency(g: BipartiteGraph):
    # vertex ids: whites 0..W-1, blacks W..W+B-1
    adj = [[] for _ in range(g.num_vertices)]
    for w, b in g.edges:
        adj[w].append(g.white + b)
        adj[g.white + b].append(w)
    return adj


def _subtree_factor(v, parent, adj, g, ext: _Extents) -> Piecewise:
    """Volume contributed by the subtree hanging from ``v``, as a function of ``v``'s coordinate."""
    white = v < g.white
    lo, hi = Fraction(0), (ext.x_max if white else ext.y_max)
    acc = Piecewise.constant(lo, hi, 1)
    inner = ext.col if white else ext.row
    for u in adj[v]:
        if u == parent:
            continue
        child = _subtree_factor(u, v, adj, g, ext).cumulative()
        acc = acc * child.compose(inner)
    return acc


def _components(g: BipartiteGraph, adj):
    seen = set()
    comps = []
    for v in range(g.num_vertices):
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for x in adj[u]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        comps.append(sorted(comp))
    return comps


def _check_forest(g: BipartiteGraph):
    if not g.is_forest():
        raise GraphError("exact volumes are implemented for forests only; use mc_volume")


def embedding_volume(g: BipartiteGraph, omega: Profile) -> Fraction:
    """Exact volume of compatible real colourings for a forest.

    Leaves are integrated out one at a time: each subtree contributes a
    piecewise polynomial in its root's coordinate.
    """
    _check_forest(g)
    _require_no_isolated(g)
    if omega.is_empty:
        return Fraction(0)
    ext = _extents(omega)
    adj = _adjacency(g)
    total = Fraction(1)
    for comp in _components(g, adj):
        total *= _subtree_factor(comp[0], None, adj, g, ext).integral()
    return total


def pinned_coordinates(omega: Profile, z) -> tuple[Fraction, Fraction]:
    """French coordinates ``((omega(z)+z)/2, (omega(z)-z)/2)`` of the profile point at content z."""
    z = Fraction(z)
    w = omega(z)
    return (w + z) / 2, (w - z) / 2


def decorated_value(d: DecoratedGraph, omega: Profile, z) -> Fraction:
    """Volume over the undecorated vertices with the decorated edge pinned
    to the profile point of content ``z``."""
    if not omega.is_strict:
        raise ValueError("decorated values need a profile with all slopes in (-1, 1)")
    lo, hi = omega.support
    z = Fraction(z)
    if not lo <= z <= hi:
        raise ValueError(f"z={z} outside the support [{lo}, {hi}]")
    g = d.graph
    _check_forest(g)
    ext = _extents(omega)
    adj = _adjacency(g)
    w0, b0 = d.decorated[0], g.white + d.decorated[1]
    x, y = pinned_coordinates(omega, z)
    value = _subtree_factor(w0, b0, adj, g, ext)(x) * _subtree_factor(b0, w0, adj, g, ext)(y)
    for comp in _components(g, adj):
        if w0 not in comp:
            value *= _subtree_factor(comp[0], None, adj, g, ext).integral()
    return value


def decorated_sum_value(ds: FormalSum, omega: Profile, z) -> Fraction:
    return sum((c * decorated_value(d, omega, z) for d, c in ds.terms.items()), Fraction(0))


# ---------------------------------------------------------------------------
# Monte Carlo
# ---------------------------------------------------------------------------

@dataclass
class MCResult:
    estimate: float
    stderr: float
    samples: int
    seed: int

    def to_json(self) -> dict:
        return {"estimate": self.estimate, "stderr": self.stderr,
                "samples": self.samples, "seed": self.seed}


_CHUNK = 1 << 16


def _omega_numpy(omega: Profile):
    zs = np.array([float(z) for z, _ in omega.breakpoints])
    ws = np.array([float(w) for _, w in omega.breakpoints])

    def f(z):
        inside = (z >= zs[0]) & (z <= zs[-1])
        return np.where(inside, np.interp(z, zs, ws), np.abs(z))
    return f


def mc_volume(g: BipartiteGraph, omega: Profile, samples: int = 1_000_000,
              seed: int = 0, threads: int = 1) -> MCResult:
    """Hit-or-miss volume estimate in the bounding box of the region.

    The sample range is split into fixed chunks, each with its own child
    seed, so the result does not depend on ``threads``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    _require_no_isolated(g)
    if omega.is_empty:
        return MCResult(0.0, 0.0, samples, seed)
    x_max = float(max(omega.breakpoints[-1][0], 0))
    y_max = float(max(-omega.breakpoints[0][0], 0))
    om = _omega_numpy(omega)
    edges = np.array(sorted(g.edges))
    sizes = [min(_CHUNK, samples - i) for i in range(0, samples, _CHUNK)]
    seqs = np.random.SeedSequence(seed).spawn(len(sizes))

    def run(args):
        n, ss = args
        rng = np.random.Generator(np.random.PCG64(ss))
        xs = rng.random((n, g.white)) * x_max
        ys = rng.random((n, g.black)) * y_max
        ex = xs[:, edges[:, 0]]
        ey = ys[:, edges[:, 1]]
        ok = (ex + ey <= om(ex - ey)).all(axis=1)
        return int(ok.sum())

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            hits = sum(pool.map(run, zip(sizes, seqs)))
    else:
        hits = sum(map(run, zip(sizes, seqs)))
    box = x_max ** g.white * y_max ** g.black
    p = hits / samples
    return MCResult(box * p, box * math.sqrt(p * (1 - p) / samples), samples, seed)
