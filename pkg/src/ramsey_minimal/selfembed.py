"""Self-embeddability of combs and deletion-avoiding embeddings.

A comb that is not a ray, with first branch index s satisfying
s >= l(s) - 1, is self-embeddable exactly when some shift p >= 1 has
l(n) <= l(n + p) for every n. Combs violating s >= l(s) - 1 are first
rewritten by swapping the initial spine segment x_0..x_s with the tooth at
x_s, which yields an isomorphic comb that does satisfy it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .families import (
    Arithmetic,
    Comb,
    CompleteInfinite,
    Periodic,
    Ray,
    ToothFn,
    comb_spine,
    comb_tooth,
    eval_tooth,
    spine_degree_first_branch,
    truncate,
    unpair,
)
from .graph import (
    EmbeddingMap,
    FiniteGraph,
    delete_edges,
    delete_vertices,
    is_valid_embedding,
    norm_edge,
)


class RayCombError(ValueError):
    """Raised when a tooth function is identically 1, i.e. the comb is a ray."""


class ShiftViolation(ValueError):
    def __init__(self, n: int, p: int, tooth: ToothFn):
        self.n = n
        self.p = p
        super().__init__(
            f"l({n}) = {eval_tooth(tooth, n)} > l({n + p}) = {eval_tooth(tooth, n + p)} for shift {p}"
        )


@dataclass
class CombVerdict:
    self_embeddable: bool
    shift: Optional[int]
    normalized: bool
    s_value: int
    tooth: ToothFn
    violations: dict[int, int] = field(default_factory=dict)

    def as_json(self) -> dict:
        from .families import tooth_to_obj

        return {
            "self_embeddable": self.self_embeddable,
            "shift": self.shift,
            "normalized": self.normalized,
            "s": self.s_value,
            "tooth": tooth_to_obj(self.tooth),
            "violations": {str(p): n for p, n in sorted(self.violations.items())},
        }


def _first_branch(tooth: ToothFn) -> int:
    s = spine_degree_first_branch(tooth)
    if s is None:
        raise RayCombError("tooth function is identically 1: the comb is a ray")
    return s


def normalize_comb(tooth: ToothFn) -> ToothFn:
    """Return an isomorphic comb's tooth function with s >= l(s) - 1.

    With L = l(s) and D = L - s - 1 > 0 the result is 1 on [1, L - 1),
    s + 1 at L - 1 and l(n - D) from L on.
    """
    s = _first_branch(tooth)
    big = eval_tooth(tooth, s)
    if s >= big - 1:
        return tooth
    delta = big - s - 1
    top = max(tooth.m, s)
    new_m = top + delta
    prefix = [1] * (big - 2) + [s + 1] + [eval_tooth(tooth, n - delta) for n in range(big, new_m + 1)]
    offset = top - tooth.m
    tail = tooth.tail
    if isinstance(tail, Periodic):
        q = len(tail.cycle)
        r = offset % q
        new_tail = Periodic(tail.cycle[r:] + tail.cycle[:r])
    else:
        new_tail = Arithmetic(tail.start + offset * tail.step, tail.step)
    return ToothFn(tuple(prefix), new_tail).simplified()


def normalization_offset(tooth: ToothFn) -> int:
    """Index shift l(s) - s - 1 applied by normalization (0 if none)."""
    s = _first_branch(tooth)
    return max(0, eval_tooth(tooth, s) - s - 1)


def shift_bounds(tooth: ToothFn) -> tuple[int, int]:
    """(largest shift, largest index) that must be examined to decide the shift condition."""
    m = tooth.m
    tail = tooth.tail
    if isinstance(tail, Periodic):
        q = len(tail.cycle)
        return m + q, m + q
    top = max(tooth.prefix, default=tail.start)
    p_max = m + max(0, math.ceil((top - tail.start) / tail.step)) + 1
    return p_max, m


def first_violation(tooth: ToothFn, p: int, n_max: int) -> Optional[int]:
    for n in range(1, n_max + 1):
        if eval_tooth(tooth, n) > eval_tooth(tooth, n + p):
            return n
    return None


def comb_self_embeddable(tooth: ToothFn) -> CombVerdict:
    """Decide self-embeddability; the reported shift is the least one."""
    work = normalize_comb(tooth)
    normalized = work != tooth
    s = _first_branch(work)
    p_max, n_max = shift_bounds(work)
    violations = {}
    for p in range(1, p_max + 1):
        n = first_violation(work, p, n_max)
        if n is None:
            return CombVerdict(True, p, normalized, s, work, violations)
        violations[p] = n
    return CombVerdict(False, None, normalized, s, work, violations)


def _translation(tooth: ToothFn, shift: int, depth: int) -> dict[int, int]:
    a = {}
    for n in range(depth + 1):
        a[comb_spine(n)] = comb_spine(n + shift)
        if n >= 1:
            for j in range(1, eval_tooth(tooth, n)):
                a[comb_tooth(n, j)] = comb_tooth(n + shift, j)
    return a


def comb_translation_embedding(tooth: ToothFn, p: int, depth: int) -> EmbeddingMap:
    """Translate the depth-truncated comb by p along its spine."""
    _first_branch(tooth)
    if p < 1:
        raise ValueError("shift must be >= 1")
    n = first_violation(tooth, p, depth)
    if n is not None:
        raise ShiftViolation(n, p, tooth)
    emb = EmbeddingMap(_translation(tooth, p, depth))
    if not is_valid_embedding(emb, truncate(Comb(tooth), depth), truncate(Comb(tooth), depth + p)):
        raise AssertionError("translation failed validation")
    return emb


def comb_vertex_index(v: int) -> int:
    """Spine index k of the vertex: x_k itself or a tooth vertex hanging at x_k."""
    k, _ = unpair(v)
    return k


def comb_avoid_vertex_embedding(
    tooth: ToothFn, v: int, p: int, depth: int
) -> tuple[EmbeddingMap, FiniteGraph, int]:
    """Embed truncate(C, depth) into truncate(C, depth + a p) minus v.

    ``a`` is the least multiplier with a p beyond the spine index of v.
    Returns the map, the host it lives in and the translation a p.
    """
    _first_branch(tooth)
    if p < 1:
        raise ValueError("shift must be >= 1")
    k = comb_vertex_index(v)
    a = k // p + 1
    shift = a * p
    n = first_violation(tooth, shift, depth)
    if n is not None:
        raise ShiftViolation(n, shift, tooth)
    full = truncate(Comb(tooth), depth + shift)
    if v not in full.adjacency:
        raise KeyError(f"vertex {v} is not in the truncation at depth {depth + shift}")
    host = delete_vertices(full, [v])
    emb = EmbeddingMap(_translation(tooth, shift, depth))
    if not is_valid_embedding(emb, truncate(Comb(tooth), depth), host):
        raise AssertionError("translation failed validation")
    return emb, host, shift


def verify_deletion_containment(
    g,
    depth: int,
    vertices: Iterable[int] = (),
    edges: Iterable[Iterable[int]] = (),
) -> bool:
    """Build an embedding of truncate(g, depth) that avoids a finite deletion.

    Supported: Ray (shift past the deletion), CompleteInfinite (fill the
    first unused ids) and combs whose tooth function admits a shift.
    """
    vertices = set(vertices)
    edges = [norm_edge(*e) for e in edges]
    touched = vertices | {x for e in edges for x in e}
    pattern = truncate(g, depth)
    if isinstance(g, Ray):
        margin = max(touched, default=-1) + 1
        emb = {i: i + margin for i in pattern.vertices}
    elif isinstance(g, CompleteInfinite):
        margin = len(touched)
        free = [i for i in range(depth + margin) if i not in touched]
        emb = dict(zip(pattern.vertices, free))
    elif isinstance(g, Comb):
        verdict = _raw_shift(g.tooth)
        if verdict is None:
            raise ValueError("comb admits no shift in its given indexing; normalize it first")
        k = max((comb_vertex_index(x) for x in touched), default=-1)
        margin = (k // verdict + 1) * verdict
        emb = _translation(g.tooth, margin, depth)
    else:
        raise TypeError(f"no strong self-embedding construction for {g!r}")
    full = truncate(g, depth + margin)
    missing = (vertices - set(full.vertices)) | (set(edges) - full.edges)
    if missing:
        raise KeyError(f"deleted items {sorted(missing, key=str)} are not in the truncation")
    host = full
    if edges:
        host = delete_edges(host, edges)
    if vertices:
        host = delete_vertices(host, vertices & set(host.vertices))
    return is_valid_embedding(EmbeddingMap(emb), pattern, host)


def _raw_shift(tooth: ToothFn) -> Optional[int]:
    _first_branch(tooth)
    p_max, n_max = shift_bounds(tooth)
    for p in range(1, p_max + 1):
        if first_violation(tooth, p, n_max) is None:
            return p
    return None
