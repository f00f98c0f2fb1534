"""Hub graphs: n infinite-degree hubs, every edge meeting a hub.

A hub graph is stored by signature classes. A leaf's signature is its
adjacency bit vector against hubs 1..n, and each class has a finite count
or ``INF``. Counts use ``math.inf`` for the infinite case, so ``INF + k``
stays ``INF`` exactly.

Truncation ids: hubs are 1..n; the i-th leaf (i >= 1) of the c-th class in
sorted signature order is ``n + 1 + pair(c, i - 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .arrowing import BLUE, RED, Coloring
from .families import pair
from .graph import (
    Edge,
    EmbeddingMap,
    FiniteGraph,
    copies,
    delete_edge,
    is_valid_embedding,
    norm_edge,
)

INF = math.inf
Count = Union[int, float]
Signature = tuple[int, ...]


def _check_count(c) -> Count:
    if c == INF:
        return INF
    if isinstance(c, bool) or not isinstance(c, int) or c < 0:
        raise ValueError(f"class count must be a nonnegative int or INF, got {c!r}")
    return c


@dataclass(frozen=True)
class HubGraph:
    n: int
    hub_edges: frozenset[Edge]
    classes: tuple[tuple[Signature, Count], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a hub graph needs n >= 1")
        edges = frozenset(norm_edge(*e) for e in self.hub_edges)
        for u, v in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"hub edge ({u}, {v}) must join hubs 1..{self.n}")
        merged: dict[Signature, Count] = {}
        for sig, count in dict(self.classes).items():
            sig = tuple(int(b) for b in sig)
            if len(sig) != self.n or any(b not in (0, 1) for b in sig):
                raise ValueError(f"signature {list(sig)} must be a 0/1 vector of length {self.n}")
            if not any(sig):
                raise ValueError("a zero signature would be an isolated vertex")
            merged[sig] = _check_count(count)
        object.__setattr__(self, "hub_edges", edges)
        object.__setattr__(self, "classes", tuple(sorted(merged.items())))

    @classmethod
    def build(
        cls, n: int, classes: Mapping[Iterable[int], Count], hub_edges: Iterable[Iterable[int]] = ()
    ) -> HubGraph:
        return cls(n, frozenset(tuple(e) for e in hub_edges), tuple((tuple(s), c) for s, c in classes.items()))

    def hub_degree(self, i: int) -> Count:
        deg: Count = sum(1 for e in self.hub_edges if i in e)
        for sig, count in self.classes:
            if sig[i - 1]:
                deg = deg + count
        return deg


def is_family_member(g: HubGraph) -> bool:
    """Every hub sits in some infinite signature class."""
    return all(g.hub_degree(i) == INF for i in range(1, g.n + 1))


def leaf_id(g: HubGraph, class_index: int, i: int) -> int:
    return g.n + 1 + pair(class_index, i - 1)


def hub_truncate(g: HubGraph, d: int) -> FiniteGraph:
    if d < 1:
        raise ValueError("truncation depth must be >= 1")
    edges = list(g.hub_edges)
    vertices = list(range(1, g.n + 1))
    for c, (sig, count) in enumerate(g.classes):
        k = d if count == INF else count
        for i in range(1, k + 1):
            u = leaf_id(g, c, i)
            vertices.append(u)
            edges.extend((u, h) for h in range(1, g.n + 1) if sig[h - 1])
    return FiniteGraph.from_edges(edges, vertices, allow_isolated=True)


def infinite_class(g: HubGraph) -> Optional[int]:
    """Index of the lexicographically least infinite class."""
    for c, (_, count) in enumerate(g.classes):
        if count == INF:
            return c
    return None


def construct_self_embedding(g: HubGraph, depth: int) -> EmbeddingMap:
    """Shift one infinite class by one place, fixing everything else.

    Maps hub_truncate(g, depth) into hub_truncate(g, depth + 1); the first
    leaf of the chosen class is left out of the image.
    """
    if not is_family_member(g):
        raise ValueError("not a member of the hub family: some hub has finite degree")
    c = infinite_class(g)
    assert c is not None
    src = hub_truncate(g, depth)
    shift = {leaf_id(g, c, i): leaf_id(g, c, i + 1) for i in range(1, depth + 1)}
    emb = EmbeddingMap({v: shift.get(v, v) for v in src.vertices})
    if not is_valid_embedding(emb, src, hub_truncate(g, depth + 1)):
        raise AssertionError("hub shift failed validation")
    return emb


def good_coloring_few_hubs(f: FiniteGraph, hubs: Iterable[int], n: int) -> Coloring:
    """Blue on every edge touching ``hubs``, red elsewhere (needs |hubs| < n)."""
    hubs = set(hubs)
    if len(hubs) >= n:
        raise ValueError(f"need fewer than {n} hubs, got {len(hubs)}")
    unknown = hubs - set(f.vertices)
    if unknown:
        raise KeyError(f"unknown vertices {sorted(unknown)}")
    return {e: BLUE if (e[0] in hubs or e[1] in hubs) else RED for e in f.edges}


class BlueMatchingFound(Exception):
    """The greedy loop found n pairwise disjoint blue edges."""

    def __init__(self, matching: list[Edge]):
        self.matching = matching
        super().__init__(f"blue matching of size {len(matching)}: {matching}")


def blue_matching_vertex_set(f: FiniteGraph, c: Mapping, n: int) -> tuple[set[int], int]:
    """Collect endpoints of blue edges until no blue edge avoids them.

    Picks the least remaining blue edge each round. Returns ``(V, rounds)``
    with f - V free of blue edges, or raises BlueMatchingFound once an n-th
    disjoint blue edge is chosen.
    """
    c = {norm_edge(*e): col for e, col in c.items()}
    if set(c) != set(f.edges):
        raise ValueError("coloring is not total on the edge set")
    if n < 1:
        raise ValueError("n must be >= 1")
    blue = sorted(e for e in f.edges if c[e] == BLUE)
    removed: set[int] = set()
    chosen: list[Edge] = []
    while True:
        e = next((e for e in blue if e[0] not in removed and e[1] not in removed), None)
        if e is None:
            return removed, len(chosen)
        chosen.append(e)
        if len(chosen) == n:
            raise BlueMatchingFound(chosen)
        removed.update(e)


def good_coloring_nG_minus_e(
    g: FiniteGraph, n: int, e_component: int, e: Iterable[int]
) -> tuple[FiniteGraph, Coloring]:
    """nG - e with one blue edge in each of the other n - 1 copies.

    Copy ``i`` of g is relabeled by rank with offset i |V(g)|; ``e`` is given
    in g's own labels.
    """
    if not g.is_connected() or not g.edges:
        raise ValueError("g must be connected with at least one edge")
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 0 <= e_component < n:
        raise ValueError(f"component index must be in [0, {n})")
    e = norm_edge(*e)
    if e not in g.edges:
        raise KeyError(f"edge {e} not in g")
    size = g.order()
    rank = {v: i for i, v in enumerate(g.vertices)}
    big = copies(g, n)
    off = e_component * size
    removed = norm_edge(rank[e[0]] + off, rank[e[1]] + off)
    graph = delete_edge(big, removed)
    coloring = {x: RED for x in graph.edges}
    least = min(norm_edge(rank[a], rank[b]) for a, b in g.edges)
    for i in range(n):
        if i != e_component:
            coloring[(least[0] + i * size, least[1] + i * size)] = BLUE
    blue = [x for x, col in coloring.items() if col == BLUE]
    if len(blue) != n - 1 or len({v for x in blue for v in x}) != 2 * (n - 1):
        raise AssertionError("blue edges do not form (n-1)K2")
    return graph, coloring


# ---------------------------------------------------------------------------
# JSON: {"n": 2, "hub_edges": [[1, 2]], "classes": [{"sig": [1, 0], "count": "inf"}, ...]}


def hub_from_obj(obj: dict) -> HubGraph:
    classes = {}
    for item in obj.get("classes", []):
        count = item["count"]
        if isinstance(count, str):
            if count.lower() not in ("inf", "infinity", "∞"):
                raise ValueError(f"bad count {count!r}")
            count = INF
        sig = tuple(item["sig"])
        if sig in classes:
            raise ValueError(f"signature {list(sig)} listed twice")
        classes[sig] = count
    return HubGraph.build(int(obj["n"]), classes, obj.get("hub_edges", []))


def hub_to_obj(g: HubGraph) -> dict:
    return {
        "n": g.n,
        "hub_edges": [list(e) for e in sorted(g.hub_edges)],
        "classes": [
            {"sig": list(sig), "count": "inf" if count == INF else count} for sig, count in g.classes
        ],
    }
