"""Symbolic infinite graphs and their depth-d truncations.

Truncation depth is the edge radius from the natural root: the ray
endpoint, the double-ray vertex x0, the k-ray center, the star center or
the comb spine start. Comb teeth are finite and always kept whole.

Vertex ids are chosen so that ``truncate(g, d)`` is a labeled subgraph of
``truncate(g, d + 1)``:

* Ray: x_i -> i.
* DoubleRay: x_i -> 2i for i >= 0 and -2i - 1 for i < 0.
* KRay(k): center 0; position t >= 1 on ray j -> 1 + j + (t - 1) k.
* Star: center 0, leaves 1..d.  CompleteInfinite: 0..d-1.
* Comb: spine x_n -> pair(n, 0); j-th tooth vertex at x_n -> pair(n, j),
  with ``pair`` the Cantor pairing.
* UnionCopies(n, g): vertex v of copy c -> v n + c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Optional, Union

from .graph import FiniteGraph, copies


@dataclass(frozen=True)
class Periodic:
    cycle: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cycle", tuple(int(x) for x in self.cycle))
        if not self.cycle:
            raise ValueError("periodic tail needs a nonempty cycle")
        if any(x < 1 for x in self.cycle):
            raise ValueError("tooth orders must be positive")


@dataclass(frozen=True)
class Arithmetic:
    start: int
    step: int

    def __post_init__(self) -> None:
        if self.start < 1 or self.step < 0:
            raise ValueError("arithmetic tail needs start >= 1 and step >= 0")


Tail = Union[Periodic, Arithmetic]


@dataclass(frozen=True)
class ToothFn:
    """An eventually periodic or eventually arithmetic map N -> N.

    ``prefix`` holds l(1..m); past m the tail takes over. A zero-step
    arithmetic tail is stored as a one-element periodic cycle.
    """

    prefix: tuple[int, ...] = ()
    tail: Tail = field(default_factory=lambda: Periodic((1,)))

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(int(x) for x in self.prefix))
        if any(x < 1 for x in self.prefix):
            raise ValueError("tooth orders must be positive")
        if isinstance(self.tail, Arithmetic) and self.tail.step == 0:
            object.__setattr__(self, "tail", Periodic((self.tail.start,)))

    def __call__(self, n: int) -> int:
        return eval_tooth(self, n)

    @property
    def m(self) -> int:
        return len(self.prefix)

    def simplified(self) -> ToothFn:
        """Same function with the shortest prefix and primitive cycle."""
        prefix = list(self.prefix)
        tail = self.tail
        if isinstance(tail, Periodic):
            cyc = list(tail.cycle)
            for q in range(1, len(cyc) + 1):
                if len(cyc) % q == 0 and cyc == cyc[:q] * (len(cyc) // q):
                    cyc = cyc[:q]
                    break
            while prefix and prefix[-1] == cyc[-1]:
                prefix.pop()
                cyc = [cyc[-1]] + cyc[:-1]
            tail = Periodic(tuple(cyc))
        else:
            start = tail.start
            while prefix and start - tail.step >= 1 and prefix[-1] == start - tail.step:
                prefix.pop()
                start -= tail.step
            tail = Arithmetic(start, tail.step)
        return ToothFn(tuple(prefix), tail)

    def values(self, upto: int) -> list[int]:
        return [eval_tooth(self, n) for n in range(1, upto + 1)]


def eval_tooth(tooth: ToothFn, n: int) -> int:
    if n < 1:
        raise ValueError(f"tooth index must be >= 1, got {n}")
    m = len(tooth.prefix)
    if n <= m:
        return tooth.prefix[n - 1]
    k = n - m - 1
    tail = tooth.tail
    if isinstance(tail, Periodic):
        return tail.cycle[k % len(tail.cycle)]
    return tail.start + k * tail.step


def spine_degree_first_branch(tooth: ToothFn) -> Optional[int]:
    """Least n with l(n) > 1, or None when the comb is just a ray."""
    for i, x in enumerate(tooth.prefix, start=1):
        if x > 1:
            return i
    m = len(tooth.prefix)
    tail = tooth.tail
    if isinstance(tail, Periodic):
        for i, x in enumerate(tail.cycle):
            if x > 1:
                return m + 1 + i
        return None
    if tail.start > 1:
        return m + 1
    return m + 2 if tail.step > 0 else None


# ---------------------------------------------------------------------------
# symbolic graphs


@dataclass(frozen=True)
class Ray:
    pass


@dataclass(frozen=True)
class DoubleRay:
    pass


@dataclass(frozen=True)
class KRay:
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k-ray needs k >= 1")


@dataclass(frozen=True)
class Star:
    pass


@dataclass(frozen=True)
class CompleteInfinite:
    pass


@dataclass(frozen=True)
class Comb:
    tooth: ToothFn


@dataclass(frozen=True)
class Matching:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("matching needs n >= 1")


@dataclass(frozen=True)
class UnionCopies:
    n: int
    of: Any

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("union needs n >= 1")


SymbolicGraph = Any  # one of the variant classes above, or hubgraph.HubGraph


def pair(n: int, j: int) -> int:
    return (n + j) * (n + j + 1) // 2 + j


def unpair(z: int) -> tuple[int, int]:
    w = (math.isqrt(8 * z + 1) - 1) // 2
    j = z - w * (w + 1) // 2
    return w - j, j


def comb_spine(n: int) -> int:
    return pair(n, 0)


def comb_tooth(n: int, j: int) -> int:
    """Id of the j-th vertex (j >= 1) of the tooth hanging at x_n."""
    return pair(n, j)


def double_ray_id(i: int) -> int:
    return 2 * i if i >= 0 else -2 * i - 1


def kray_id(j: int, t: int, k: int) -> int:
    return 0 if t == 0 else 1 + j + (t - 1) * k


def truncate(g: SymbolicGraph, depth: int) -> FiniteGraph:
    if depth < 1:
        raise ValueError("truncation depth must be >= 1")
    if isinstance(g, Ray):
        return FiniteGraph.from_edges((i, i + 1) for i in range(depth))
    if isinstance(g, DoubleRay):
        return FiniteGraph.from_edges(
            (double_ray_id(i), double_ray_id(i + 1)) for i in range(-depth, depth)
        )
    if isinstance(g, KRay):
        return FiniteGraph.from_edges(
            (kray_id(j, t, g.k), kray_id(j, t + 1, g.k)) for j in range(g.k) for t in range(depth)
        )
    if isinstance(g, Star):
        return FiniteGraph.from_edges((0, i) for i in range(1, depth + 1))
    if isinstance(g, CompleteInfinite):
        return FiniteGraph.from_edges(
            ((i, j) for i in range(depth) for j in range(i + 1, depth)),
            range(depth),
            allow_isolated=depth == 1,
        )
    if isinstance(g, Comb):
        edges = [(comb_spine(i), comb_spine(i + 1)) for i in range(depth)]
        for n in range(1, depth + 1):
            prev = comb_spine(n)
            for j in range(1, eval_tooth(g.tooth, n)):
                edges.append((prev, comb_tooth(n, j)))
                prev = comb_tooth(n, j)
        return FiniteGraph.from_edges(edges)
    if isinstance(g, Matching):
        return copies(FiniteGraph.from_edges([(0, 1)]), g.n)
    if isinstance(g, UnionCopies):
        inner = truncate(g.of, depth)
        n = g.n
        return FiniteGraph.from_edges(
            ((u * n + c, v * n + c) for c in range(n) for u, v in inner.edges),
            (v * n + c for c in range(n) for v in inner.vertices),
            allow_isolated=inner.allow_isolated,
        )
    if type(g).__name__ == "HubGraph":
        raise TypeError("hub graphs are truncated with hubgraph.hub_truncate")
    raise TypeError(f"not a symbolic graph: {g!r}")


def root(g: SymbolicGraph) -> int:
    """Id of the natural root in every truncation."""
    return 0


# ---------------------------------------------------------------------------
# JSON


def tooth_from_obj(obj: dict) -> ToothFn:
    prefix = tuple(obj.get("prefix", ()))
    t = obj.get("tail", {"kind": "periodic", "cycle": [1]})
    kind = t.get("kind")
    if kind == "periodic":
        tail: Tail = Periodic(tuple(t["cycle"]))
    elif kind == "arithmetic":
        tail = Arithmetic(int(t["start"]), int(t["step"]))
    else:
        raise ValueError(f"unknown tail kind {kind!r}")
    return ToothFn(prefix, tail)


def tooth_to_obj(tooth: ToothFn) -> dict:
    if isinstance(tooth.tail, Periodic):
        tail = {"kind": "periodic", "cycle": list(tooth.tail.cycle)}
    else:
        tail = {"kind": "arithmetic", "start": tooth.tail.start, "step": tooth.tail.step}
    return {"prefix": list(tooth.prefix), "tail": tail}


def symbolic_from_obj(obj: dict) -> SymbolicGraph:
    if not isinstance(obj, dict) or "family" not in obj:
        raise ValueError("symbolic graph JSON needs a 'family' field")
    fam = obj["family"]
    if fam == "ray":
        return Ray()
    if fam in ("doubleray", "double_ray"):
        return DoubleRay()
    if fam == "kray":
        return KRay(int(obj["k"]))
    if fam == "star":
        return Star()
    if fam in ("complete", "complete_infinite"):
        return CompleteInfinite()
    if fam == "comb":
        return Comb(tooth_from_obj(obj))
    if fam == "matching":
        return Matching(int(obj["n"]))
    if fam == "union":
        return UnionCopies(int(obj["n"]), symbolic_from_obj(obj["of"]))
    if fam == "hub":
        from .hubgraph import hub_from_obj

        return hub_from_obj(obj)
    raise ValueError(f"unknown family {fam!r}")


def symbolic_to_obj(g: SymbolicGraph) -> dict:
    if isinstance(g, Ray):
        return {"family": "ray"}
    if isinstance(g, DoubleRay):
        return {"family": "doubleray"}
    if isinstance(g, KRay):
        return {"family": "kray", "k": g.k}
    if isinstance(g, Star):
        return {"family": "star"}
    if isinstance(g, CompleteInfinite):
        return {"family": "complete"}
    if isinstance(g, Comb):
        return {"family": "comb", **tooth_to_obj(g.tooth)}
    if isinstance(g, Matching):
        return {"family": "matching", "n": g.n}
    if isinstance(g, UnionCopies):
        return {"family": "union", "n": g.n, "of": symbolic_to_obj(g.of)}
    from .hubgraph import HubGraph, hub_to_obj

    if isinstance(g, HubGraph):
        return {"family": "hub", **hub_to_obj(g)}
    raise TypeError(f"not a symbolic graph: {g!r}")
