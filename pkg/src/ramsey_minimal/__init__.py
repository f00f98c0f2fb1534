"""Ramsey arrowing and minimality for finite graphs, with symbolic infinite families."""

from .arrowing import (
    ArrowingVerdict,
    arrows,
    arrows_pointed,
    check_family_conditions,
    enumerate_minimal,
    generate_graphs,
    is_minimal,
    verify_good_coloring,
)
from .families import (
    Arithmetic,
    Comb,
    CompleteInfinite,
    DoubleRay,
    KRay,
    Matching,
    Periodic,
    Ray,
    Star,
    ToothFn,
    UnionCopies,
    eval_tooth,
    spine_degree_first_branch,
    truncate,
)
from .graph import (
    EmbeddingMap,
    FiniteGraph,
    PointedGraph,
    canonical_form,
    delete_edge,
    delete_vertices,
    disjoint_union,
    find_embedding,
    find_pointed_embedding,
)
from .hubgraph import INF, HubGraph, construct_self_embedding, hub_truncate, is_family_member
from .selfembed import comb_self_embeddable, normalize_comb

__version__ = "0.1.0"

__all__ = [
    "Arithmetic",
    "ArrowingVerdict",
    "arrows",
    "arrows_pointed",
    "canonical_form",
    "check_family_conditions",
    "Comb",
    "comb_self_embeddable",
    "CompleteInfinite",
    "construct_self_embedding",
    "delete_edge",
    "delete_vertices",
    "disjoint_union",
    "DoubleRay",
    "EmbeddingMap",
    "enumerate_minimal",
    "eval_tooth",
    "find_embedding",
    "find_pointed_embedding",
    "FiniteGraph",
    "generate_graphs",
    "hub_truncate",
    "HubGraph",
    "INF",
    "is_family_member",
    "is_minimal",
    "KRay",
    "Matching",
    "normalize_comb",
    "Periodic",
    "PointedGraph",
    "Ray",
    "spine_degree_first_branch",
    "Star",
    "ToothFn",
    "truncate",
    "UnionCopies",
    "verify_good_coloring",
]
