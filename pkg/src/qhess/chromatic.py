"""Brute-force chromatic quasi-symmetric functions of weighted graphs.

This is the ground-truth side of the verification suite: a generalized
Hessenberg function h determines a weighted graph, and the coefficient of
each monomial symmetric function in csf_q is obtained by exhaustively
enumerating proper set-colorings with a fixed color content, weighted by
q^(number of ascending color pairs across edges).

The point of this module is independence and obviousness, not speed: no
generating functions, no transfer matrices, no sharing with the Poincare
engine beyond the QPoly/SymFunc value types.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Tuple

from .hessfn import GenHessFn
from .qpoly import QPoly, q_factorial
from .symfunc import Partition, SymFunc, partitions

DEFAULT_ORACLE_BOUND = 7


class OracleBoundError(ValueError):
    """Total weight above the configured enumeration bound."""


@dataclass(frozen=True)
class WeightedGraph:
    """Vertices in increasing label order, positive weights, edges (i, j) i < j."""

    vertices: Tuple[int, ...]
    weights: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def weight_of(self, v: int) -> int:
        return self.weights[self.vertices.index(v)]


def graph_of(h: GenHessFn) -> WeightedGraph:
    """The weighted graph on I u {n}: edge (i, j) iff i < j <= h(i), weights
    the block lengths."""
    pts = h.points
    edges = tuple(
        (i, j) for i in pts for j in pts if i < j <= h.value_at(i)
    )
    return WeightedGraph(pts, h.gaps(), edges)


def _coloring_qsum(graph: WeightedGraph, content: Tuple[int, ...]) -> QPoly:
    """Sum of q^asc over proper colorings with the exact color content.

    Color c (1-based) must be used on exactly content[c-1] vertices; a vertex
    of weight w receives a w-subset of colors; endpoint color sets of every
    edge are disjoint.  Vertices are processed in increasing label order and
    per-vertex subsets in lexicographic order.
    """
    nv = len(graph.vertices)
    index = {v: i for i, v in enumerate(graph.vertices)}
    earlier = [[] for _ in range(nv)]
    for a, b in graph.edges:
        earlier[index[b]].append(index[a])
    ncolors = len(content)
    remaining = list(content)
    assigned: list = [()] * nv
    acc: Dict[int, int] = {}

    def place(vi: int, asc: int):
        if vi == nv:
            acc[asc] = acc.get(asc, 0) + 1
            return
        w = graph.weights[vi]
        blocked = set()
        for u in earlier[vi]:
            blocked.update(assigned[u])
        avail = [
            c for c in range(1, ncolors + 1) if remaining[c - 1] > 0 and c not in blocked
        ]
        for chosen in combinations(avail, w):
            gained = 0
            for u in earlier[vi]:
                for a in assigned[u]:
                    for b in chosen:
                        if a < b:
                            gained += 1
            assigned[vi] = chosen
            for c in chosen:
                remaining[c - 1] -= 1
            place(vi + 1, asc + gained)
            for c in chosen:
                remaining[c - 1] += 1
        assigned[vi] = ()

    place(0, 0)
    if not acc:
        return QPoly()
    out = [0] * (max(acc) + 1)
    for asc, count in acc.items():
        out[asc] = count
    return QPoly(out)


def monomial_coefficient(graph: WeightedGraph, exponents: Tuple[int, ...]) -> QPoly:
    """Coefficient of x1^e1 x2^e2 ... in csf_q of the graph."""
    return _coloring_qsum(graph, tuple(exponents))


def csf(h: GenHessFn, bound: int = DEFAULT_ORACLE_BOUND) -> SymFunc:
    """csf_q(h) in the monomial basis, by exhaustive proper-coloring search.

    The coefficient of m_mu is read off the monomial x1^mu1 x2^mu2 ...,
    which is valid because csf_q is symmetric.
    """
    if h.n > bound:
        raise OracleBoundError(f"total weight {h.n} above oracle bound {bound}")
    graph = graph_of(h)
    terms: Dict[Partition, QPoly] = {}
    for mu in partitions(h.n):
        coeff = _coloring_qsum(graph, mu)
        if not coeff.is_zero():
            terms[mu] = coeff
    return SymFunc(h.n, "m", terms)


def chromatic_count(h: GenHessFn, colors: int) -> int:
    """Number of proper [colors]-colorings of the weighted graph of h."""
    graph = graph_of(h)
    nv = len(graph.vertices)
    index = {v: i for i, v in enumerate(graph.vertices)}
    earlier = [[] for _ in range(nv)]
    for a, b in graph.edges:
        earlier[index[b]].append(index[a])
    assigned: list = [()] * nv

    def place(vi: int) -> int:
        if vi == nv:
            return 1
        blocked = set()
        for u in earlier[vi]:
            blocked.update(assigned[u])
        avail = [c for c in range(1, colors + 1) if c not in blocked]
        total = 0
        for chosen in combinations(avail, graph.weights[vi]):
            assigned[vi] = chosen
            total += place(vi + 1)
        assigned[vi] = ()
        return total

    return place(0)


def refine_block(h: GenHessFn, k: int) -> GenHessFn:
    """Split the k-th block (1 <= k <= r+1) into unit steps.

    Points i_(k-1)+1 .. i_k - 1 join the domain, all taking the value h(i_k);
    csf_q of the refinement equals the block-length q-factorial times csf_q(h).
    """
    pts = (0,) + h.points
    if not 1 <= k <= len(h.points):
        raise ValueError(f"block index {k} out of range 1..{len(h.points)}")
    lo, hi = pts[k - 1], pts[k]
    block_value = h.value_at(hi)
    new_domain = tuple(sorted(set(h.domain) | set(range(lo + 1, hi))))
    new_values = tuple(
        h.value_at(p) if p in h.points else block_value
        for p in new_domain + (h.n,)
    )
    return GenHessFn(h.n, new_domain, new_values)


def block_refinement_check(h: GenHessFn, k: int, bound: int = DEFAULT_ORACLE_BOUND) -> bool:
    """True iff csf(refine_block(h, k)) = [block length]_q! * csf(h) exactly."""
    pts = (0,) + h.points
    gap = pts[k] - pts[k - 1]
    refined = refine_block(h, k)
    return csf(refined, bound) == csf(h, bound).scale(q_factorial(gap))
