"""Reading and writing graphs, pointed graphs and colorings."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .graph import EmbeddingMap, FiniteGraph, PointedGraph, norm_edge

PathLike = Union[str, Path]


def parse_edge_list(text: str) -> FiniteGraph:
    """Parse the terse ``"1-2,2-3,3-1"`` form."""
    edges = []
    for token in text.replace("\n", ",").split(","):
        token = token.strip()
        if not token:
            continue
        try:
            u, v = token.split("-")
            edges.append((int(u), int(v)))
        except ValueError as exc:
            raise ValueError(f"bad edge token {token!r}") from exc
    return FiniteGraph.from_edges(edges)


def graph_from_obj(obj: Any) -> FiniteGraph:
    if isinstance(obj, str):
        return parse_edge_list(obj)
    if not isinstance(obj, dict) or "edges" not in obj:
        raise ValueError("graph JSON needs an 'edges' list")
    edges = [tuple(e) for e in obj["edges"]]
    for e in edges:
        if len(e) != 2:
            raise ValueError(f"edge {list(e)} must have two endpoints")
    vertices = obj.get("vertices")
    allow = bool(obj.get("allow_isolated", False))
    if vertices is not None and not edges and len(vertices) == 1:
        allow = True
    return FiniteGraph.from_edges(edges, vertices, allow_isolated=allow)


def graph_to_obj(g: FiniteGraph) -> dict:
    obj = {"vertices": list(g.vertices), "edges": [list(e) for e in g.edge_list]}
    if g.allow_isolated:
        obj["allow_isolated"] = True
    return obj


def pointed_from_obj(obj: Any) -> PointedGraph:
    if not isinstance(obj, dict) or "basepoint" not in obj:
        raise ValueError("pointed graph JSON needs a 'basepoint'")
    g = graph_from_obj(obj)
    return PointedGraph(g, int(obj["basepoint"]))


def pointed_to_obj(p: PointedGraph) -> dict:
    return {**graph_to_obj(p.graph), "basepoint": p.basepoint}


def coloring_from_obj(obj: Any) -> dict:
    """``{"red": [[u, v], ...], "blue": [...]}`` to an edge -> color dict."""
    if not isinstance(obj, dict):
        raise ValueError("coloring JSON must be an object with 'red' and 'blue'")
    out = {}
    for color in ("red", "blue"):
        for e in obj.get(color, []):
            edge = norm_edge(*e)
            if edge in out:
                raise ValueError(f"edge {list(edge)} colored twice")
            out[edge] = color
    return out


def coloring_to_obj(coloring: dict) -> dict:
    return {
        "red": [list(e) for e in sorted(e for e, c in coloring.items() if c == "red")],
        "blue": [list(e) for e in sorted(e for e, c in coloring.items() if c == "blue")],
    }


def embedding_to_obj(emb: EmbeddingMap) -> dict:
    return emb.as_json()


def to_dot(g: FiniteGraph, coloring: dict | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    touched = {x for e in g.edges for x in e}
    for v in g.vertices:
        if v not in touched:
            lines.append(f"  {v};")
    for u, v in g.edge_list:
        attr = ""
        if coloring is not None:
            attr = f' [color="{coloring[(u, v)]}"]'
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_json(path: PathLike) -> Any:
    text = Path(path).read_text()
    stripped = text.strip()
    if stripped and stripped[0] not in "{[\"":
        # terse edge-list file
        return stripped
    return json.loads(text)


def load_graph(path: PathLike) -> FiniteGraph:
    return graph_from_obj(load_json(path))


def load_pointed(path: PathLike) -> PointedGraph:
    return pointed_from_obj(load_json(path))


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
