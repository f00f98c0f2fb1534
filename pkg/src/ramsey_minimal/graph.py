"""Finite simple graphs, pointed graphs and the subgraph embedding engine.

Containment is always non-induced: a pattern embeds into a host when some
injective vertex map sends every pattern edge onto a host edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Optional

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class FiniteGraph:
    """Simple undirected graph on integer vertex ids.

    Vertices are kept sorted and edges normalized to ``(min, max)``. A vertex
    without incident edges is rejected unless ``allow_isolated`` is set.
    """

    vertices: tuple[int, ...]
    edges: frozenset[Edge]
    allow_isolated: bool = False

    def __post_init__(self) -> None:
        edges = frozenset(norm_edge(int(u), int(v)) for u, v in self.edges)
        vertices = tuple(sorted({int(v) for v in self.vertices}))
        vset = set(vertices)
        for u, v in edges:
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
        if not self.allow_isolated:
            touched = {x for e in edges for x in e}
            isolated = vset - touched
            if isolated:
                raise ValueError(f"isolated vertices {sorted(isolated)} (pass allow_isolated=True)")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Iterable[int]],
        vertices: Optional[Iterable[int]] = None,
        allow_isolated: bool = False,
    ) -> FiniteGraph:
        edge_set = frozenset(norm_edge(*e) for e in edges)
        if vertices is None:
            vertices = {x for e in edge_set for x in e}
        return cls(tuple(vertices), edge_set, allow_isolated)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @cached_property
    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def order(self) -> int:
        return len(self.vertices)

    def size(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, ())

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def components(self) -> list[FiniteGraph]:
        seen: set[int] = set()
        out = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                for w in self.adjacency[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            edges = [e for e in self.edges if e[0] in comp]
            out.append(FiniteGraph.from_edges(edges, comp, allow_isolated=True))
        return out

    def relabel(self, mapping: Mapping[int, int]) -> FiniteGraph:
        return FiniteGraph.from_edges(
            ((mapping[u], mapping[v]) for u, v in self.edges),
            (mapping[v] for v in self.vertices),
            self.allow_isolated,
        )

    def __repr__(self) -> str:
        edges = ",".join(f"{u}-{v}" for u, v in self.edge_list)
        return f"FiniteGraph(n={len(self.vertices)}, edges=[{edges}])"


@dataclass(frozen=True)
class PointedGraph:
    graph: FiniteGraph
    basepoint: int

    def __post_init__(self) -> None:
        if self.basepoint not in self.graph.adjacency:
            raise ValueError(f"basepoint {self.basepoint} is not a vertex")


@dataclass(frozen=True)
class EmbeddingMap:
    assignment: dict[int, int] = field(hash=False)
    pointed: bool = False

    def __call__(self, v: int) -> int:
        return self.assignment[v]

    def image(self) -> set[int]:
        return set(self.assignment.values())

    def compose(self, other: EmbeddingMap) -> EmbeddingMap:
        """``other`` after ``self``."""
        return EmbeddingMap(
            {v: other.assignment[w] for v, w in self.assignment.items()},
            self.pointed and other.pointed,
        )

    def as_json(self) -> dict:
        return {"pointed": self.pointed, "map": [[v, w] for v, w in sorted(self.assignment.items())]}


def is_valid_embedding(
    emb: EmbeddingMap,
    pattern: FiniteGraph | PointedGraph,
    host: FiniteGraph | PointedGraph,
) -> bool:
    """Independent check of injectivity, edge preservation and basepoints."""
    pbase = hbase = None
    if isinstance(pattern, PointedGraph):
        pattern, pbase = pattern.graph, pattern.basepoint
    if isinstance(host, PointedGraph):
        host, hbase = host.graph, host.basepoint
    a = emb.assignment
    if set(a) != set(pattern.vertices):
        return False
    if len(set(a.values())) != len(a):
        return False
    if any(w not in host.adjacency for w in a.values()):
        return False
    if any(not host.has_edge(a[u], a[v]) for u, v in pattern.edges):
        return False
    if emb.pointed and (pbase is None or hbase is None or a[pbase] != hbase):
        return False
    return True


# ---------------------------------------------------------------------------
# embedding search


def _search_order(pattern_adj: Mapping[int, Iterable[int]], fixed: Iterable[int]) -> list[int]:
    order = list(fixed)
    placed = set(order)
    remaining = set(pattern_adj) - placed
    while remaining:
        # most already-placed neighbours first, then degree, then lowest id
        v = min(
            remaining,
            key=lambda x: (-sum(1 for w in pattern_adj[x] if w in placed), -len(pattern_adj[x]), x),
        )
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order


def iter_embeddings(
    pattern_adj: Mapping[int, Iterable[int]],
    host_adj: Mapping[int, Iterable[int]],
    fixed: Optional[Mapping[int, int]] = None,
) -> Iterator[dict[int, int]]:
    """Yield every injective edge-preserving map extending ``fixed``.

    Maps come out in a deterministic order: pattern vertices are placed
    connectivity-first and host candidates are tried lowest id first.
    """
    fixed = dict(fixed or {})
    if len(set(fixed.values())) != len(fixed):
        return
    for v, w in fixed.items():
        if w not in host_adj or len(host_adj[w]) < len(pattern_adj[v]):
            return
    for u in fixed:
        for v in pattern_adj[u]:
            if v in fixed and fixed[v] not in host_adj[fixed[u]]:
                return
    if len(pattern_adj) > len(host_adj):
        return
    order = _search_order(pattern_adj, fixed)
    start = len(fixed)
    host_sorted = sorted(host_adj)
    pdeg = {v: len(pattern_adj[v]) for v in pattern_adj}
    assign = dict(fixed)
    used = set(fixed.values())

    def candidates(v: int) -> Iterable[int]:
        mapped = [assign[w] for w in pattern_adj[v] if w in assign]
        if not mapped:
            pool: Iterable[int] = host_sorted
        else:
            first = min(mapped, key=lambda x: len(host_adj[x]))
            pool = sorted(w for w in host_adj[first] if all(w in host_adj[m] for m in mapped))
        need = pdeg[v]
        return [w for w in pool if w not in used and len(host_adj[w]) >= need]

    def rec(i: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(assign)
            return
        v = order[i]
        for w in candidates(v):
            assign[v] = w
            used.add(w)
            yield from rec(i + 1)
            used.discard(w)
            del assign[v]

    yield from rec(start)


def find_embedding(pattern: FiniteGraph, host: FiniteGraph) -> Optional[EmbeddingMap]:
    for a in iter_embeddings(pattern.adjacency, host.adjacency):
        return EmbeddingMap(a)
    return None


def find_pointed_embedding(pattern: PointedGraph, host: PointedGraph) -> Optional[EmbeddingMap]:
    fixed = {pattern.basepoint: host.basepoint}
    for a in iter_embeddings(pattern.graph.adjacency, host.graph.adjacency, fixed):
        return EmbeddingMap(a, pointed=True)
    return None


def embeds(pattern: FiniteGraph, host: FiniteGraph) -> bool:
    return find_embedding(pattern, host) is not None


# ---------------------------------------------------------------------------
# deletions and unions


def _drop_isolated(vertices: Iterable[int], edges: Iterable[Edge]) -> FiniteGraph:
    edges = list(edges)
    touched = {x for e in edges for x in e}
    return FiniteGraph.from_edges(edges, [v for v in vertices if v in touched])


def delete_edge(g: FiniteGraph, e: Iterable[int]) -> FiniteGraph:
    """Remove one edge; endpoints left without edges are dropped."""
    e = norm_edge(*e)
    if e not in g.edges:
        raise KeyError(f"edge {e} not in graph")
    return _drop_isolated(g.vertices, g.edges - {e})


def delete_edges(g: FiniteGraph, es: Iterable[Iterable[int]]) -> FiniteGraph:
    es = {norm_edge(*e) for e in es}
    missing = es - g.edges
    if missing:
        raise KeyError(f"edges {sorted(missing)} not in graph")
    return _drop_isolated(g.vertices, g.edges - es)


def delete_vertices(g: FiniteGraph, vs: Iterable[int]) -> FiniteGraph:
    vs = set(vs)
    unknown = vs - set(g.vertices)
    if unknown:
        raise KeyError(f"unknown vertices {sorted(unknown)}")
    return _drop_isolated(
        (v for v in g.vertices if v not in vs),
        (e for e in g.edges if e[0] not in vs and e[1] not in vs),
    )


def disjoint_union(gs: Iterable[FiniteGraph]) -> FiniteGraph:
    """Union with vertices relabeled consecutively, component by component."""
    vertices: list[int] = []
    edges: list[Edge] = []
    offset = 0
    allow = False
    for g in gs:
        rank = {v: offset + i for i, v in enumerate(g.vertices)}
        vertices.extend(rank.values())
        edges.extend((rank[u], rank[v]) for u, v in g.edges)
        offset += len(g.vertices)
        allow = allow or g.allow_isolated
    return FiniteGraph.from_edges(edges, vertices, allow_isolated=allow)


def copies(g: FiniteGraph, n: int) -> FiniteGraph:
    return disjoint_union([g] * n)


# ---------------------------------------------------------------------------
# canonical labeling


def _refine(adj: Mapping[int, frozenset[int]], cells: list[list[int]]) -> list[list[int]]:
    while True:
        index = {v: i for i, cell in enumerate(cells) for v in cell}
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[index[w]] += 1
                sig[v] = tuple(counts)
            for key in sorted(set(sig.values())):
                new.append(sorted(v for v in cell if sig[v] == key))
        if len(new) == len(cells):
            return new
        cells = new


def _certificate(adj: Mapping[int, frozenset[int]], order: list[int]) -> str:
    n = len(order)
    return "".join(
        "1" if order[j] in adj[order[i]] else "0" for i in range(n) for j in range(i + 1, n)
    )


def _canon_connected(adj: Mapping[int, frozenset[int]], cells: list[list[int]]) -> str:
    best: Optional[str] = None

    def rec(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            cert = _certificate(adj, [c[0] for c in cells])
            if best is None or cert < best:
                best = cert
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            # twins in one cell are swapped by an automorphism fixing the partition
            if any(adj[v] - {u} == adj[u] - {v} for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            rec(cells[:target] + [[v], rest] + cells[target + 1 :])

    rec(cells)
    return f"{len(adj)}:{best}"


def canonical_form(g: FiniteGraph | PointedGraph) -> str:
    """Exact isomorphism-invariant label.

    Disconnected graphs are labeled by the sorted multiset of component
    labels. Each component is labeled by individualization-refinement,
    keeping the lexicographically least adjacency string over all leaves.
    A pointed graph's basepoint is kept in its own leading cell.
    """
    base = None
    if isinstance(g, PointedGraph):
        g, base = g.graph, g.basepoint
    parts = []
    for comp in g.components():
        adj = {v: g.adjacency[v] for v in comp.vertices}
        if base is not None and base in adj:
            cells = [[base], sorted(v for v in adj if v != base)]
            cells = [c for c in cells if c]
            parts.append("*" + _canon_connected(adj, cells))
        else:
            parts.append(_canon_connected(adj, [sorted(adj)]))
    return "+".join(sorted(parts))


def is_isomorphic(a: FiniteGraph, b: FiniteGraph) -> bool:
    return canonical_form(a) == canonical_form(b)


# ---------------------------------------------------------------------------
# small named graphs (P_n has n vertices)


def path(n: int) -> FiniteGraph:
    if n < 1:
        raise ValueError("path order must be >= 1")
    return FiniteGraph.from_edges(((i, i + 1) for i in range(n - 1)), range(n), allow_isolated=n == 1)


def cycle(n: int) -> FiniteGraph:
    if n < 3:
        raise ValueError("cycle length must be >= 3")
    return FiniteGraph.from_edges((i, (i + 1) % n) for i in range(n))


def complete(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(
        ((i, j) for i in range(n) for j in range(i + 1, n)), range(n), allow_isolated=n == 1
    )


def star(k: int) -> FiniteGraph:
    """K_{1,k} with center 0."""
    return FiniteGraph.from_edges((0, i) for i in range(1, k + 1))


def matching(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges((2 * i, 2 * i + 1) for i in range(n))


def single_vertex() -> FiniteGraph:
    return FiniteGraph((0,), frozenset(), allow_isolated=True)


def empty_graph() -> FiniteGraph:
    return FiniteGraph((), frozenset())
