"""Compactness made finite: level sets of pointed embeddings and truncation search.

Level k of a :class:`LevelSets` holds every pointed embedding of the
pattern's first k + 1 vertices (breadth-first order from the basepoint)
into the host. Each level-(k+1) map links to its restriction at level k,
which is the tree a Koenig-style argument walks to stitch a full embedding.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Union

from .arrowing import ArrowingVerdict, arrows, arrows_pointed
from .families import root, truncate
from .graph import (
    EmbeddingMap,
    FiniteGraph,
    PointedGraph,
    canonical_form,
    embeds,
    path,
    star,
)


def bfs_enumeration(g: PointedGraph) -> list[int]:
    """Vertices by distance from the basepoint, ascending id within a distance."""
    adj = g.graph.adjacency
    dist = {g.basepoint: 0}
    queue = deque([g.basepoint])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    if len(dist) != len(adj):
        raise ValueError("pointed graph is not connected")
    return sorted(dist, key=lambda v: (dist[v], v))


@dataclass
class LevelSets:
    order: list[int]
    levels: list[list[tuple[int, ...]]]
    parents: list[list[int]] = field(default_factory=list)
    pattern: Optional[PointedGraph] = None
    host: Optional[PointedGraph] = None

    def sizes(self) -> list[int]:
        return [len(level) for level in self.levels]

    def as_map(self, level: int, index: int) -> EmbeddingMap:
        images = self.levels[level][index]
        return EmbeddingMap(dict(zip(self.order, images)), pointed=True)

    def chain(self, level: int, index: int) -> list[int]:
        """Indices of the restrictions of one map down to level 0."""
        out = [index]
        for k in range(level, 0, -1):
            index = self.parents[k][index]
            out.append(index)
        return out[::-1]

    def as_json(self) -> dict:
        return {
            "order": self.order,
            "sizes": self.sizes(),
            "levels": [[list(m) for m in level] for level in self.levels],
        }


def build_level_sets(pattern: PointedGraph, host: PointedGraph, max_level: Optional[int] = None) -> LevelSets:
    order = bfs_enumeration(pattern)
    if max_level is None:
        max_level = len(order) - 1
    if not 0 <= max_level <= len(order) - 1:
        raise ValueError(f"max_level must be in [0, {len(order) - 1}]")
    padj = pattern.graph.adjacency
    hadj = host.graph.adjacency
    position = {v: i for i, v in enumerate(order)}
    levels = [[(host.basepoint,)]]
    parents = [[-1]]
    for k in range(1, max_level + 1):
        v = order[k]
        back = [position[w] for w in padj[v] if position[w] < k]
        nxt: list[tuple[tuple[int, ...], int]] = []
        for pi, images in enumerate(levels[-1]):
            used = set(images)
            anchor = images[back[0]]
            for w in sorted(hadj[anchor]):
                if w in used:
                    continue
                if all(w in hadj[images[b]] for b in back[1:]):
                    nxt.append((images + (w,), pi))
        nxt.sort()
        levels.append([m for m, _ in nxt])
        parents.append([p for _, p in nxt])
    return LevelSets(order, levels, parents, pattern, host)


def stitch_embedding(levels: LevelSets) -> Optional[EmbeddingMap]:
    """Least map on the top level, if the levels reach the whole pattern."""
    if levels.pattern is not None and len(levels.levels) != len(levels.order):
        raise ValueError("levels do not cover the whole pattern")
    top = levels.levels[-1]
    if not top:
        return None
    return levels.as_map(len(levels.levels) - 1, 0)


def pointed_path(order: int) -> PointedGraph:
    """P_order pointed at endpoint 0."""
    return PointedGraph(path(order), 0)


def ray_prefix_search(host, prefix_len: int, depth: int) -> Optional[EmbeddingMap]:
    """Pointed embedding of a path with ``prefix_len`` edges into truncate(host, depth)."""
    target = PointedGraph(truncate(host, depth), root(host))
    return stitch_embedding(build_level_sets(pointed_path(prefix_len + 1), target))


@dataclass
class ArrowingTruncation:
    depth: int
    graph: FiniteGraph
    verdict: ArrowingVerdict


def finite_arrowing_subgraph(f, g: FiniteGraph, h: FiniteGraph, depth_cap: int) -> Optional[ArrowingTruncation]:
    """Least-depth truncation of ``f`` that arrows (g, h); None is inconclusive."""
    for d in range(1, depth_cap + 1):
        t = truncate(f, d)
        verdict = arrows(t, g, h)
        if verdict.arrows:
            return ArrowingTruncation(d, t, verdict)
    return None


def connected_pointed_subgraphs(g: PointedGraph, cap: int = 200) -> tuple[list[PointedGraph], bool]:
    """Connected subgraphs through the basepoint, one per pointed isomorphism type.

    Grown edge by edge from the bare basepoint; returned in order of edge
    count, then canonical form. The flag reports whether ``cap`` cut the list.
    """
    adj = g.graph.adjacency
    base = g.basepoint
    seen: dict[str, PointedGraph] = {}
    level: dict[frozenset, None] = {frozenset(): None}
    out: list[PointedGraph] = []
    truncated = False
    while level:
        batch: dict[str, PointedGraph] = {}
        for es in level:
            if es:
                sub = FiniteGraph.from_edges(es)
            else:
                sub = FiniteGraph((base,), frozenset(), allow_isolated=True)
            p = PointedGraph(sub, base)
            form = canonical_form(p)
            if form not in seen and form not in batch:
                batch[form] = p
        for form in sorted(batch):
            if len(out) >= cap:
                truncated = True
                break
            seen[form] = batch[form]
            out.append(batch[form])
        if truncated:
            break
        nxt: dict[frozenset, None] = {}
        for es in level:
            verts = {base} | {x for e in es for x in e}
            for v in sorted(verts):
                for w in adj[v]:
                    e = (min(v, w), max(v, w))
                    if e not in es:
                        nxt[es | {e}] = None
        level = nxt
    return out, truncated


@dataclass
class TransferReport:
    depth: int
    slack: int
    cap: int
    capped: bool
    results: list[tuple[PointedGraph, bool]]
    conclusion: bool
    warning: Optional[str] = None

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok in self.results)

    def as_json(self) -> dict:
        from .io import pointed_to_obj

        return {
            "depth": self.depth,
            "slack": self.slack,
            "cap": self.cap,
            "capped": self.capped,
            "subgraphs": [{"graph": pointed_to_obj(p), "passes": ok} for p, ok in self.results],
            "all_pass": self.all_pass,
            "conclusion": self.conclusion,
            "warning": self.warning,
        }


def _pointed_truncation(g, depth: int) -> PointedGraph:
    if isinstance(g, PointedGraph):
        return g
    return PointedGraph(truncate(g, depth), root(g))


def bounded_pointed_arrowing_transfer(
    f,
    g: Union[PointedGraph, object],
    h: FiniteGraph,
    depth: int,
    slack: int = 0,
    cap: int = 200,
) -> TransferReport:
    """Finite evidence for passing pointed arrowing from finite pieces to the whole.

    Every connected pointed piece of truncate(g, depth) is tested against
    truncate(f, depth + slack); the report then tests truncate(g, depth)
    itself. Finite pointed graphs are accepted for ``f`` and ``g`` as they are.
    """
    host = _pointed_truncation(f, depth + slack)
    whole = _pointed_truncation(g, depth)
    pieces, capped = connected_pointed_subgraphs(whole, cap)
    results = [(p, arrows_pointed(host, p, h).arrows) for p in pieces]
    conclusion = arrows_pointed(host, whole, h).arrows
    warning = None
    deg = host.graph.degree(host.basepoint)
    if h.edges and not embeds(h, star(deg)):
        warning = f"h is not contained in K_1,{deg} (basepoint degree of the host truncation)"

    return TransferReport(depth, slack, cap, capped, results, conclusion, warning)


def star_collapse_demo(d: int, k: int) -> list[int]:
    """Level sizes for a pointed path of order k in K_{1,d} pointed at its center.

    Paths of every finite order embed somewhere in a large enough star family
    only up to order 2 from the center; the level sets empty out at level 2.
    """
    return build_level_sets(pointed_path(k), PointedGraph(star(d), 0)).sizes()


