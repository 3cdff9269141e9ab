"""Bipartite graphs, formal sums of their isomorphism classes and the
derivations ``del_z``, ``del_x``, ``del_y``.

White vertices index columns and black vertices index rows.  Graphs are
always simple and have no isolated vertices.
"""

from __future__ import annotations

import json
import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial
from typing import Generic, Iterable, Iterator, TypeVar

from .rationals import format_rational, nullspace, parse_rational


class GraphError(ValueError):
    pass


class ResourceBoundError(RuntimeError):
    """A computation was refused because it exceeds a configured bound."""


Edge = tuple[int, int]


@dataclass(frozen=True)
class BipartiteGraph:
    white: int
    black: int
    edges: frozenset[Edge]

    def __post_init__(self):
        edges = frozenset((int(w), int(b)) for w, b in self.edges)
        object.__setattr__(self, "edges", edges)
        for w, b in edges:
            if not (0 <= w < self.white and 0 <= b < self.black):
                raise GraphError(f"edge {(w, b)} out of range")
        if {w for w, _ in edges} != set(range(self.white)) or \
                {b for _, b in edges} != set(range(self.black)):
            raise GraphError("isolated vertices are not allowed")

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "BipartiteGraph":
        """Build from an edge list, relabelling vertices to 0..n-1 in order of appearance."""
        edges = list(edges)
        wmap: dict[int, int] = {}
        bmap: dict[int, int] = {}
        for w, b in edges:
            wmap.setdefault(w, len(wmap))
            bmap.setdefault(b, len(bmap))
        return cls(len(wmap), len(bmap), frozenset((wmap[w], bmap[b]) for w, b in edges))

    def __repr__(self):
        return f"BipartiteGraph({self.white}, {self.black}, {sorted(self.edges)})"

    @property
    def num_vertices(self) -> int:
        return self.white + self.black

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def white_neighbors(self, w: int) -> list[int]:
        return sorted(b for ww, b in self.edges if ww == w)

    def black_neighbors(self, b: int) -> list[int]:
        return sorted(w for w, bb in self.edges if bb == b)

    def is_forest(self) -> bool:
        parent = list(range(self.num_vertices))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for w, b in self.edges:
            a, c = find(w), find(self.white + b)
            if a == c:
                return False
            parent[a] = c
        return True

    def relabel(self, wperm, bperm) -> "BipartiteGraph":
        return BipartiteGraph(self.white, self.black,
                              frozenset((wperm[w], bperm[b]) for w, b in self.edges))

    def transpose(self) -> "BipartiteGraph":
        """Swap the colours."""
        return BipartiteGraph(self.black, self.white,
                              frozenset((b, w) for w, b in self.edges))

    def disjoint_union(self, other: "BipartiteGraph") -> "BipartiteGraph":
        edges = set(self.edges)
        edges |= {(w + self.white, b + self.black) for w, b in other.edges}
        return BipartiteGraph(self.white + other.white, self.black + other.black,
                              frozenset(edges))

    def to_json(self) -> dict:
        return {"white": self.white, "black": self.black,
                "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data) -> "BipartiteGraph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["white"]), int(data["black"]),
                       frozenset(tuple(e) for e in data["edges"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"bad graph JSON: {exc}") from exc


@dataclass(frozen=True)
class DecoratedGraph:
    graph: BipartiteGraph
    decorated: Edge

    def __post_init__(self):
        object.__setattr__(self, "decorated", tuple(self.decorated))
        if self.decorated not in self.graph.edges:
            raise GraphError(f"decorated edge {self.decorated} is not an edge")

    def __repr__(self):
        return f"DecoratedGraph({self.graph!r}, z={self.decorated})"

    @property
    def num_vertices(self) -> int:
        return self.graph.num_vertices

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges

    def is_forest(self) -> bool:
        return self.graph.is_forest()


# named small graphs used throughout
SINGLE_EDGE = BipartiteGraph(1, 1, frozenset({(0, 0)}))
BLACK_STAR_2 = BipartiteGraph(2, 1, frozenset({(0, 0), (1, 0)}))
WHITE_STAR_2 = BipartiteGraph(1, 2, frozenset({(0, 0), (0, 1)}))
TWO_EDGES = BipartiteGraph(2, 2, frozenset({(0, 0), (1, 1)}))


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def _refine(graph: BipartiteGraph, marked: Edge | None):
    """Colour refinement; returns an isomorphism-invariant colour per vertex.

    Vertices ``0..white-1`` are white and ``white..`` are black.
    """
    n = graph.num_vertices
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for w, b in graph.edges:
        nbrs[w].append(graph.white + b)
        nbrs[graph.white + b].append(w)
    ends = set()
    if marked is not None:
        ends = {marked[0], graph.white + marked[1]}
    sig = [(0 if v < graph.white else 1, 1 if v in ends else 0) for v in range(n)]
    palette = {s: i for i, s in enumerate(sorted(set(sig)))}
    colour = [palette[s] for s in sig]
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in nbrs[v]))) for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if len(palette) == len(set(colour)):
            return new
        colour = new


def _cells(vertices: list[int], colour: list[int]) -> list[list[int]]:
    groups: dict[int, list[int]] = defaultdict(list)
    for v in vertices:
        groups[colour[v]].append(v)
    return [groups[c] for c in sorted(groups)]


def _canonical_key(graph: BipartiteGraph, marked: Edge | None):
    colour = _refine(graph, marked)
    whites = list(range(graph.white))
    blacks = [graph.white + b for b in range(graph.black)]
    wcells = _cells(whites, colour)
    bcells = _cells(blacks, colour)
    wcost = 1
    for c in wcells:
        wcost *= factorial(len(c))
    bcost = 1
    for c in bcells:
        bcost *= factorial(len(c))
    # enumerate orderings of one side; the other side is then ordered by
    # (colour, labelled neighbourhood), which is forced up to twins
    swap = bcost < wcost
    if swap:
        g = graph.transpose()
        mk = None if marked is None else (marked[1], marked[0])
        colour = colour[graph.white:] + colour[:graph.white]
        cells = [[v - graph.white for v in c] for c in bcells]
    else:
        g, mk, cells = graph, marked, wcells
    adj: list[list[int]] = [[] for _ in range(g.black)]
    for w, b in g.edges:
        adj[b].append(w)
    best = None
    for choice in product(*(permutations(c) for c in cells)):
        wlabel = {}
        for cell in choice:
            for v in cell:
                wlabel[v] = len(wlabel)
        bkeys = sorted((colour[g.white + b], tuple(sorted(wlabel[w] for w in adj[b])), b)
                       for b in range(g.black))
        blabel = {b: i for i, (_, _, b) in enumerate(bkeys)}
        edges = tuple(sorted((wlabel[w], blabel[b]) for w, b in g.edges))
        dec = None if mk is None else (wlabel[mk[0]], blabel[mk[1]])
        key = (dec, edges)
        if best is None or key < best:
            best = key
    dec, edges = best
    if swap:
        edges = tuple(sorted((b, w) for w, b in edges))
        dec = None if dec is None else (dec[1], dec[0])
    return swap, dec, edges


def canonicalize(g):
    """Canonical representative of the isomorphism class of ``g``.

    Accepts :class:`BipartiteGraph` or :class:`DecoratedGraph`; for the latter
    isomorphisms must map the decorated edge to itself.
    """
    if isinstance(g, DecoratedGraph):
        _, dec, edges = _canonical_key(g.graph, g.decorated)
        return DecoratedGraph(BipartiteGraph(g.graph.white, g.graph.black, frozenset(edges)), dec)
    _, _, edges = _canonical_key(g, None)
    return BipartiteGraph(g.white, g.black, frozenset(edges))


def are_isomorphic_bruteforce(g1: BipartiteGraph, g2: BipartiteGraph) -> bool:
    """Reference isomorphism test trying every colour-preserving bijection."""
    if (g1.white, g1.black, g1.num_edges) != (g2.white, g2.black, g2.num_edges):
        return False
    for wp in permutations(range(g1.white)):
        for bp in permutations(range(g1.black)):
            if g1.relabel(wp, bp).edges == g2.edges:
                return True
    return False


def random_relabel(g, rng: random.Random):
    graph = g.graph if isinstance(g, DecoratedGraph) else g
    wp = list(range(graph.white))
    bp = list(range(graph.black))
    rng.shuffle(wp)
    rng.shuffle(bp)
    relabelled = graph.relabel(wp, bp)
    if isinstance(g, DecoratedGraph):
        w, b = g.decorated
        return DecoratedGraph(relabelled, (wp[w], bp[b]))
    return relabelled


# ---------------------------------------------------------------------------
# formal sums
# ---------------------------------------------------------------------------

G = TypeVar("G", BipartiteGraph, DecoratedGraph)


class FormalSum(Generic[G]):
    """Rational linear combination of isomorphism classes of graphs."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc: dict = defaultdict(Fraction)
        items = terms.items() if isinstance(terms, dict) else (terms or [])
        for g, c in items:
            acc[canonicalize(g)] += Fraction(c)
        self.terms: dict = {g: c for g, c in acc.items() if c != 0}

    @classmethod
    def of(cls, g, coeff=1) -> "FormalSum":
        return cls([(g, coeff)])

    def __repr__(self):
        if not self.terms:
            return "FormalSum(0)"
        return "FormalSum(" + " + ".join(f"{c}*{g!r}" for g, c in self.items()) + ")"

    def items(self):
        return sorted(self.terms.items(), key=lambda t: _sort_key(t[0]))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = FormalSum.__new__(FormalSum)
        acc = dict(self.terms)
        for g, c in other.terms.items():
            acc[g] = acc.get(g, 0) + c
        out.terms = {g: c for g, c in acc.items() if c != 0}
        return out

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar) -> "FormalSum":
        scalar = Fraction(scalar)
        out = FormalSum.__new__(FormalSum)
        out.terms = {g: c * scalar for g, c in self.terms.items() if c * scalar != 0}
        return out

    __rmul__ = __mul__

    def max_edges(self) -> int:
        return max((g.num_edges for g in self.terms), default=0)

    def vertex_counts(self) -> set[int]:
        return {g.num_vertices for g in self.terms}

    def to_json(self) -> dict:
        out = []
        for g, c in self.items():
            if isinstance(g, DecoratedGraph):
                out.append({"coeff": format_rational(c), "graph": g.graph.to_json(),
                            "decorated": list(g.decorated)})
            else:
                out.append({"coeff": format_rational(c), "graph": g.to_json()})
        return {"terms": out}

    @classmethod
    def from_json(cls, data) -> "FormalSum":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            items = []
            for term in data["terms"]:
                g = BipartiteGraph.from_json(term["graph"])
                if "decorated" in term:
                    g = DecoratedGraph(g, tuple(term["decorated"]))
                items.append((g, parse_rational(term["coeff"])))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"bad formal sum JSON: {exc}") from exc
        return cls(items)


def _sort_key(g):
    if isinstance(g, DecoratedGraph):
        return (g.graph.num_edges, g.graph.white, g.graph.black,
                tuple(sorted(g.graph.edges)), g.decorated)
    return (g.num_edges, g.white, g.black, tuple(sorted(g.edges)), ())


# ---------------------------------------------------------------------------
# derivations
# ---------------------------------------------------------------------------

def del_z(s: FormalSum) -> FormalSum:
    """Sum over all ways of decorating one edge."""
    acc = []
    for g, c in s.terms.items():
        for e in sorted(g.edges):
            acc.append((DecoratedGraph(g, e), c))
    return FormalSum(acc)


def glue(d: DecoratedGraph, f: Edge) -> DecoratedGraph:
    """Glue edge ``f`` onto the decorated edge; ``f`` must share one endpoint with it."""
    g = d.graph
    w0, b0 = d.decorated
    w1, b1 = f
    if b1 == b0 and w1 != w0:
        wmap = {w: (w0 if w == w1 else w) for w in range(g.white)}
        keep = [w for w in range(g.white) if w != w1]
        renum = {w: i for i, w in enumerate(keep)}
        edges = frozenset((renum[wmap[w]], b) for w, b in g.edges)
        return DecoratedGraph(BipartiteGraph(g.white - 1, g.black, edges), (renum[w0], b0))
    if w1 == w0 and b1 != b0:
        bmap = {b: (b0 if b == b1 else b) for b in range(g.black)}
        keep = [b for b in range(g.black) if b != b1]
        renum = {b: i for i, b in enumerate(keep)}
        edges = frozenset((w, renum[bmap[b]]) for w, b in g.edges)
        return DecoratedGraph(BipartiteGraph(g.white, g.black - 1, edges), (w0, renum[b0]))
    raise GraphError(f"edge {f} does not share exactly one endpoint with {d.decorated}")


def del_x(s: FormalSum) -> FormalSum:
    """Glue each edge sharing the decorated edge's black vertex (white ends merge)."""
    acc = []
    for d, c in s.terms.items():
        w0, b0 = d.decorated
        for f in sorted(d.graph.edges):
            if f[1] == b0 and f[0] != w0:
                acc.append((glue(d, f), c))
    return FormalSum(acc)


def del_y(s: FormalSum) -> FormalSum:
    """Glue each edge sharing the decorated edge's white vertex (black ends merge)."""
    acc = []
    for d, c in s.terms.items():
        w0, b0 = d.decorated
        for f in sorted(d.graph.edges):
            if f[0] == w0 and f[1] != b0:
                acc.append((glue(d, f), c))
    return FormalSum(acc)


def _power(op, s: FormalSum, k: int) -> FormalSum:
    for _ in range(k):
        s = op(s)
    return s


def criterion_residual(ds: FormalSum, k: int) -> FormalSum:
    """``(del_x^k - (-del_y)^k)`` applied to an already decorated sum."""
    sign = -1 if k % 2 else 1
    return _power(del_x, ds, k) - _power(del_y, ds, k) * sign


@dataclass
class CriterionReport:
    passed: bool
    residuals: dict[int, FormalSum]
    k_max: int
    note: str

    def to_json(self) -> dict:
        return {
            "verdict": "pass" if self.passed else "fail",
            "residuals": {str(k): r.to_json() for k, r in sorted(self.residuals.items()) if r},
            "k_checked": list(range(1, self.k_max + 1)),
            "note": self.note,
        }


def criterion_check(s: FormalSum) -> CriterionReport:
    """Check ``(del_x^k - (-del_y)^k) del_z s = 0`` for all ``k >= 1``.

    Every gluing removes at least one edge and needs two edges to act, so
    both powers vanish once ``k`` reaches the largest edge count; only
    ``k = 1 .. max_edges - 1`` are computed.
    """
    ds = del_z(s)
    k_max = max(s.max_edges() - 1, 0)
    residuals = {}
    px, py = ds, ds
    for k in range(1, k_max + 1):
        px, py = del_x(px), del_y(py)
        residuals[k] = px - py * (-1 if k % 2 else 1)
    note = (f"k > {k_max} vanish identically: each gluing removes at least one edge "
            f"and terms have at most {s.max_edges()} edges")
    return CriterionReport(all(not r for r in residuals.values()), residuals, k_max, note)


# ---------------------------------------------------------------------------
# enumeration and the conjecture scan
# ---------------------------------------------------------------------------

def enumerate_graphs(max_edges: int, max_vertices: int | None = None) -> list[BipartiteGraph]:
    """Isomorphism classes of graphs with 1..max_edges edges, no isolated vertices."""
    seen = set()
    out = []
    for e in range(1, max_edges + 1):
        for w in range(1, e + 1):
            for b in range(1, e + 1):
                if max_vertices is not None and w + b > max_vertices:
                    continue
                if max(w, b) > e:
                    continue
                cells = [(i, j) for i in range(w) for j in range(b)]
                for edges in combinations(cells, e):
                    if len({i for i, _ in edges}) < w or len({j for _, j in edges}) < b:
                        continue
                    g = canonicalize(BipartiteGraph(w, b, frozenset(edges)))
                    if g not in seen:
                        seen.add(g)
                        out.append(g)
    out.sort(key=_sort_key)
    return out


@dataclass
class ScanReport:
    mode: str
    max_edges: int
    graphs: int
    base_kernel_dim: int
    trials: int
    seed: int | None
    counterexamples: list[dict]

    def to_json(self) -> dict:
        return {"mode": self.mode, "max_edges": self.max_edges, "graphs": self.graphs,
                "base_kernel_dim": self.base_kernel_dim, "trials": self.trials,
                "seed": self.seed, "counterexamples": self.counterexamples}


def _operator_matrix(basis: list[BipartiteGraph], op) -> tuple[list[list[Fraction]], list]:
    """Matrix of a linear map from span(basis) to decorated sums (rows = targets)."""
    images = [op(FormalSum.of(g)) for g in basis]
    targets = sorted({d for im in images for d in im.terms}, key=_sort_key)
    index = {d: i for i, d in enumerate(targets)}
    rows = [[Fraction(0)] * len(basis) for _ in targets]
    for j, im in enumerate(images):
        for d, c in im.terms.items():
            rows[index[d]][j] = c
    return rows, targets


def _apply(rows, vec):
    return [sum((r[j] * vec[j] for j in range(len(vec)) if vec[j]), Fraction(0)) for r in rows]


def conjecture_scan(max_edges: int = 3, mode: str = "exhaustive", trials: int = 10_000,
                    seed: int = 0, bound: int = 4) -> ScanReport:
    """Look for sums with ``(del_x + del_y) del_z G = 0`` but a nonzero
    ``(del_x^k - (-del_y)^k) del_z G`` for some ``k >= 2``.

    The base condition is linear, so its solutions over graphs with at most
    ``max_edges`` edges form the null space of one exact matrix.  Exhaustive
    mode checks a basis of that space (which settles every sum in it);
    random mode draws ``trials`` random subsets of graph classes and random
    integer combinations from the solution space of each subset.
    """
    if mode not in ("exhaustive", "random"):
        raise ValueError(f"unknown mode {mode!r}")
    if max_edges > bound:
        raise ResourceBoundError(f"max_edges={max_edges} exceeds bound {bound}")
    graphs = enumerate_graphs(max_edges)
    base_rows, _ = _operator_matrix(graphs, lambda s: criterion_residual(del_z(s), 1))
    higher = {k: _operator_matrix(graphs, lambda s, k=k: criterion_residual(del_z(s), k))[0]
              for k in range(2, max_edges)}
    kernel = nullspace(base_rows, len(graphs))
    counterexamples = []

    def check(vec, label):
        for k, rows in higher.items():
            if any(_apply(rows, vec)):
                s = FormalSum([(g, c) for g, c in zip(graphs, vec) if c])
                counterexamples.append({"witness": label, "k": k, "sum": s.to_json()})
                return

    if mode == "exhaustive":
        for i, vec in enumerate(kernel):
            check(vec, f"basis[{i}]")
        return ScanReport(mode, max_edges, len(graphs), len(kernel), len(kernel), None,
                          counterexamples)

    rng = random.Random(seed)
    for t in range(trials):
        size = rng.randint(1, min(len(graphs), 6))
        subset = sorted(rng.sample(range(len(graphs)), size))
        sub_rows = [[r[j] for j in subset] for r in base_rows]
        sub_kernel = nullspace([r for r in sub_rows if any(r)], size)
        if not sub_kernel:
            continue
        vec = [Fraction(0)] * len(graphs)
        for basis_vec in sub_kernel:
            c = rng.randint(-3, 3)
            for j, v in zip(subset, basis_vec):
                vec[j] += c * v
        if any(vec):
            check(vec, f"trial {t}")
    return ScanReport(mode, max_edges, len(graphs), len(kernel), trials, seed, counterexamples)
