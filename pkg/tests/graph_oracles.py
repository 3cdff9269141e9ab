"""Brute-force isomorphism classes by explicit orbits under relabelling."""

from itertools import permutations

from youngcalc.bigraphs import BipartiteGraph, DecoratedGraph, canonicalize


def labelled_graphs(w: int, b: int):
    cells = [(i, j) for i in range(w) for j in range(b)]
    for mask in range(1, 1 << len(cells)):
        edges = frozenset(c for k, c in enumerate(cells) if mask >> k & 1)
        if len({i for i, _ in edges}) == w and len({j for _, j in edges}) == b:
            yield BipartiteGraph(w, b, edges)


def orbit(g: BipartiteGraph, decorated=None) -> set:
    out = set()
    for wp in permutations(range(g.white)):
        for bp in permutations(range(g.black)):
            edges = frozenset((wp[x], bp[y]) for x, y in g.edges)
            if decorated is None:
                out.add(edges)
            else:
                out.add((edges, (wp[decorated[0]], bp[decorated[1]])))
    return out


def check_canonical_forms(max_vertices: int, decorated: bool = False) -> int:
    """Compare canonical forms with explicit orbits for every labelled graph
    (optionally with every decorated edge).  Returns one representative per class."""
    reps = []
    for w in range(1, max_vertices):
        for b in range(1, max_vertices - w + 1):
            seen = set()
            forms = {}
            for g in labelled_graphs(w, b):
                for e in (sorted(g.edges) if decorated else [None]):
                    key = g.edges if e is None else (g.edges, e)
                    if key in seen:
                        continue
                    members = orbit(g, e)
                    seen |= members
                    canon = set()
                    for m in members:
                        if e is None:
                            canon.add(canonicalize(BipartiteGraph(w, b, m)))
                        else:
                            canon.add(canonicalize(DecoratedGraph(BipartiteGraph(w, b, m[0]), m[1])))
                    assert len(canon) == 1, f"one class, several forms: {g} {e}"
                    form = canon.pop()
                    assert form not in forms, f"two classes share a form: {g} / {forms[form]}"
                    forms[form] = (g, e)
                    reps.append(g if e is None else DecoratedGraph(g, e))
    return reps
