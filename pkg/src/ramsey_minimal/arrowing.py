"""Exact arrowing F -> (G, H) for finite graphs.

The decider walks red/blue colorings of F edge by edge (fixed sorted edge
order, red tried first). Monochromatic containment is monotone in the set
of colored edges, so a color is ruled out the moment the newly colored edge
completes a red G or blue H; a branch dies when both colors are ruled out
and any completed leaf is a good coloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional

from .graph import (
    Edge,
    FiniteGraph,
    PointedGraph,
    canonical_form,
    delete_edge,
    embeds,
    find_embedding,
    find_pointed_embedding,
    iter_embeddings,
    norm_edge,
)

RED = "red"
BLUE = "blue"

Coloring = dict  # Edge -> "red" | "blue"


@dataclass
class Certificate:
    """Dead end of the search: both colors of ``edge`` complete a monochromatic copy."""

    prefix: dict
    edge: Edge
    red_witness: list[Edge]
    blue_witness: list[Edge]

    def as_json(self) -> dict:
        return {
            "prefix": [[list(e), c] for e, c in sorted(self.prefix.items())],
            "edge": list(self.edge),
            "red_witness": [list(e) for e in self.red_witness],
            "blue_witness": [list(e) for e in self.blue_witness],
        }


@dataclass
class ArrowingVerdict:
    arrows: bool
    witness: Optional[Coloring] = None
    certificates: Optional[list[Certificate]] = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.arrows


def _check_total(f: FiniteGraph, c: Mapping) -> dict:
    c = {norm_edge(*e): col for e, col in c.items()}
    if set(c) != set(f.edges):
        missing = sorted(set(f.edges) - set(c))
        extra = sorted(set(c) - set(f.edges))
        raise ValueError(f"coloring is not total on the edge set (missing {missing}, extra {extra})")
    bad = {col for col in c.values()} - {RED, BLUE}
    if bad:
        raise ValueError(f"unknown colors {sorted(bad)}")
    return c


def color_class(f: FiniteGraph, c: Mapping, color: str) -> FiniteGraph:
    """Spanning subgraph of ``f`` formed by the edges of one color."""
    c = _check_total(f, c)
    return FiniteGraph.from_edges(
        (e for e in f.edges if c[e] == color), f.vertices, allow_isolated=True
    )


def verify_good_coloring(f: FiniteGraph, c: Mapping, g: FiniteGraph, h: FiniteGraph) -> bool:
    """True iff ``c`` has no red copy of ``g`` and no blue copy of ``h``."""
    return not embeds(g, color_class(f, c, RED)) and not embeds(h, color_class(f, c, BLUE))


def verify_good_pointed_coloring(
    f: PointedGraph, c: Mapping, g: PointedGraph, h: FiniteGraph
) -> bool:
    red = PointedGraph(color_class(f.graph, c, RED), f.basepoint)
    return find_pointed_embedding(g, red) is None and not embeds(h, color_class(f.graph, c, BLUE))


class _Side:
    """Containment test for one color, anchored at the edge just colored."""

    def __init__(self, pattern: FiniteGraph, pattern_base=None, host_base=None):
        self.adj = pattern.adjacency
        self.edges = pattern.edge_list
        self.pbase = pattern_base
        self.hbase = host_base

    def _fixed(self, x: int, y: int, u: int, v: int) -> Optional[dict]:
        fixed = {x: u, y: v}
        if self.pbase is None:
            return fixed
        if self.pbase in fixed:
            return fixed if fixed[self.pbase] == self.hbase else None
        if self.hbase in (u, v):
            return None
        fixed[self.pbase] = self.hbase
        return fixed

    def through(self, host_adj: Mapping, u: int, v: int) -> Optional[dict]:
        for a, b in self.edges:
            for x, y in ((a, b), (b, a)):
                fixed = self._fixed(x, y, u, v)
                if fixed is None:
                    continue
                for emb in iter_embeddings(self.adj, host_adj, fixed):
                    return emb
        return None

    def anywhere(self, host_adj: Mapping) -> Optional[dict]:
        fixed = {} if self.pbase is None else {self.pbase: self.hbase}
        for emb in iter_embeddings(self.adj, host_adj, fixed):
            return emb
        return None

    def image_edges(self, emb: dict) -> list[Edge]:
        return sorted(norm_edge(emb[a], emb[b]) for a, b in self.edges)


def _search(f: FiniteGraph, red: _Side, blue: _Side, certify: bool) -> ArrowingVerdict:
    empty = {v: set() for v in f.vertices}
    if red.anywhere(empty) is not None or blue.anywhere(empty) is not None:
        return ArrowingVerdict(True, certificates=[] if certify else None)

    edges = f.edge_list
    m = len(edges)
    adj = {RED: {v: set() for v in f.vertices}, BLUE: {v: set() for v in f.vertices}}
    sides = {RED: red, BLUE: blue}
    chosen: list[str] = []
    certs: list[Certificate] = []
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if i == m:
            return True
        u, v = edges[i]
        witnesses = {}
        for color in (RED, BLUE):
            a = adj[color]
            a[u].add(v)
            a[v].add(u)
            w = sides[color].through(a, u, v)
            if w is None:
                chosen.append(color)
                if rec(i + 1):
                    return True
                chosen.pop()
            else:
                witnesses[color] = w
            a[u].discard(v)
            a[v].discard(u)
        if certify and len(witnesses) == 2:
            certs.append(
                Certificate(
                    dict(zip(edges[:i], chosen)),
                    edges[i],
                    red.image_edges(witnesses[RED]),
                    blue.image_edges(witnesses[BLUE]),
                )
            )
        return False

    if rec(0):
        return ArrowingVerdict(False, witness=dict(zip(edges, chosen)), nodes=nodes)
    return ArrowingVerdict(True, certificates=certs if certify else None, nodes=nodes)


def arrows(f: FiniteGraph, g: FiniteGraph, h: FiniteGraph, certify: bool = False) -> ArrowingVerdict:
    """Decide F -> (G, H); a negative verdict carries a (G, H)-good coloring."""
    return _search(f, _Side(g), _Side(h), certify)


def arrows_pointed(
    f: PointedGraph, g: PointedGraph, h: FiniteGraph, certify: bool = False
) -> ArrowingVerdict:
    """Every coloring has a red basepoint-preserving ``g`` or a blue ``h``."""
    return _search(f.graph, _Side(g.graph, g.basepoint, f.basepoint), _Side(h), certify)


def is_minimal(f: FiniteGraph, g: FiniteGraph, h: FiniteGraph) -> bool:
    if not arrows(f, g, h):
        return False
    return all(not arrows(delete_edge(f, e), g, h) for e in f.edge_list)


# ---------------------------------------------------------------------------
# enumeration


def _consecutive(g: FiniteGraph) -> FiniteGraph:
    rank = {v: i for i, v in enumerate(g.vertices)}
    return g.relabel(rank)


def _extensions(g: FiniteGraph, max_vertices: int) -> Iterator[FiniteGraph]:
    n = g.order()
    base = list(g.edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in g.edges:
                yield FiniteGraph.from_edges(base + [(u, v)])
    if n + 1 <= max_vertices:
        for u in range(n):
            yield FiniteGraph.from_edges(base + [(u, n)])
    if n + 2 <= max_vertices:
        yield FiniteGraph.from_edges(base + [(n, n + 1)])


def _deletion_forms(g: FiniteGraph) -> set[str]:
    return {canonical_form(delete_edge(g, e)) for e in g.edge_list}


def _levels(max_vertices: int, max_edges: int, stop=None) -> Iterator[dict[str, FiniteGraph]]:
    """Yield, per edge count, canonical form -> representative.

    ``stop(form, graph)`` marks graphs that are kept but not extended.
    """
    if max_vertices < 2 or max_edges < 1:
        return
    k2 = FiniteGraph.from_edges([(0, 1)])
    level = {canonical_form(k2): k2}
    k = 1
    while True:
        yield level
        if k == max_edges:
            return
        nxt: dict[str, FiniteGraph] = {}
        for form in sorted(level):
            if stop is not None and stop(form, level[form]):
                continue
            for child in _extensions(level[form], max_vertices):
                cf = canonical_form(child)
                if cf not in nxt:
                    nxt[cf] = child
        level = nxt
        k += 1
        if not level:
            return


def _sort_key(g: FiniteGraph) -> tuple:
    return (g.size(), g.order(), canonical_form(g))


def generate_graphs(max_vertices: int, max_edges: int) -> list[FiniteGraph]:
    """All graphs without isolated vertices within the bounds, one per isomorphism class."""
    out = [g for level in _levels(max_vertices, max_edges) for g in level.values()]
    return sorted(out, key=_sort_key)


def enumerate_minimal(
    g: FiniteGraph, h: FiniteGraph, max_vertices: int, max_edges: int
) -> list[FiniteGraph]:
    """All (g, h)-minimal graphs within the bounds, up to isomorphism.

    Arrowing graphs are never extended: anything grown from one properly
    contains an arrowing graph. A one-edge deletion that was never generated
    therefore arrows, which is what makes the dictionary lookup below exact.
    """
    if max_vertices < 1 or max_edges < 1:
        raise ValueError("bounds must be >= 1")
    arrowing: dict[str, bool] = {}
    previous: dict[str, FiniteGraph] = {}
    found = []

    def stop(form: str, graph: FiniteGraph) -> bool:
        return arrowing[form]

    for level in _levels(max_vertices, max_edges, stop):
        for form in sorted(level):
            graph = level[form]
            if graph.size() == 1:
                dels_arrow = False
            else:
                dels_arrow = any(d not in previous or arrowing[d] for d in _deletion_forms(graph))
            if dels_arrow:
                arrowing[form] = True
                continue
            arrowing[form] = arrows(graph, g, h).arrows
            if arrowing[form]:
                found.append(graph)
        previous = level
    return sorted((_consecutive(x) for x in found), key=_sort_key)


@dataclass
class FamilyReport:
    condition1: bool
    arrowing_members: list[bool]
    condition2: bool
    condition2_scope: str
    condition2_counterexamples: list[FiniteGraph] = field(default_factory=list)
    condition3: bool = True
    containing_pairs: list[tuple[int, int]] = field(default_factory=list)

    def as_json(self) -> dict:
        from .io import graph_to_obj

        return {
            "condition1": self.condition1,
            "arrowing_members": self.arrowing_members,
            "condition2": self.condition2,
            "condition2_scope": self.condition2_scope,
            "condition2_counterexamples": [graph_to_obj(x) for x in self.condition2_counterexamples],
            "condition3": self.condition3,
            "containing_pairs": [list(p) for p in self.containing_pairs],
        }


def check_family_conditions(
    family: Iterable[FiniteGraph],
    g: FiniteGraph,
    h: FiniteGraph,
    max_vertices: int,
    max_edges: int,
) -> FamilyReport:
    """Check the three family conditions for a finite candidate family.

    (1) every member arrows (g, h): exact.
    (2) every arrowing graph contains a member: only graphs within the
        bounds are examined. It is enough to test the minimal ones there,
        since each arrowing graph in range contains a minimal graph in range.
    (3) no member contains another: exact.
    """
    family = list(family)
    if not family:
        raise ValueError("family must be nonempty")
    member_arrows = [arrows(f, g, h).arrows for f in family]
    minimal = enumerate_minimal(g, h, max_vertices, max_edges)
    missing = [m for m in minimal if not any(embeds(f, m) for f in family)]
    pairs = [
        (i, j)
        for i, a in enumerate(family)
        for j, b in enumerate(family)
        if i != j and embeds(a, b)
    ]
    return FamilyReport(
        condition1=all(member_arrows),
        arrowing_members=member_arrows,
        condition2=not missing,
        condition2_scope=(
            f"bounded evidence: arrowing graphs with <= {max_vertices} vertices "
            f"and <= {max_edges} edges"
        ),
        condition2_counterexamples=missing,
        condition3=not pairs,
        containing_pairs=pairs,
    )


def witness_edges(f: FiniteGraph, pattern: FiniteGraph, c: Mapping, color: str) -> Optional[list[Edge]]:
    emb = find_embedding(pattern, color_class(f, c, color))
    if emb is None:
        return None
    return sorted(norm_edge(emb(a), emb(b)) for a, b in pattern.edges)
