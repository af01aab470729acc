"""Labeled simple graphs and the intersection primitives built on them.

Labels are unsigned 32-bit integers compared numerically. A graph is a
strictly increasing node tuple plus a frozenset of canonical ``(lo, hi)``
edge pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import ContractError, EnumerationCapError

LABEL_LIMIT = 2**32
ENUMERATION_CAP = 5

Edge = tuple[int, int]


def _check_increasing(seq: Sequence, what: str) -> None:
    for prev, cur in zip(seq, seq[1:]):
        if not prev < cur:
            raise ContractError(f"{what} is not strictly increasing at {prev!r}, {cur!r}")


def canonical_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ContractError(f"self-loop on {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    nodes: tuple[int, ...]
    edges: frozenset[Edge]

    def __post_init__(self):
        nodes = tuple(self.nodes)
        edges = frozenset(self.edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)
        for label in nodes:
            if not isinstance(label, int) or isinstance(label, bool) or not 0 <= label < LABEL_LIMIT:
                raise ContractError(f"label {label!r} is not an unsigned 32-bit integer")
        _check_increasing(nodes, "node list")
        present = set(nodes)
        for edge in edges:
            lo, hi = edge
            if not lo < hi:
                raise ContractError(f"edge {edge} is not canonical (lo < hi)")
            if lo not in present or hi not in present:
                raise ContractError(f"edge {edge} has an endpoint outside the node list")

    @classmethod
    def from_edges(cls, nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> Graph:
        """Build from unsorted nodes and edges given in either orientation."""
        return cls(tuple(sorted(set(nodes))), frozenset(canonical_edge(u, v) for u, v in edges))

    @classmethod
    def _trusted(cls, nodes: tuple[int, ...], edges: frozenset[Edge]) -> Graph:
        # Skips validation; only for hot paths whose output is valid by construction.
        obj = object.__new__(cls)
        object.__setattr__(obj, "nodes", nodes)
        object.__setattr__(obj, "edges", edges)
        return obj

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def without_edge(self, u: int, v: int) -> Graph:
        return Graph._trusted(self.nodes, self.edges - {canonical_edge(u, v)})

    def __len__(self) -> int:
        return len(self.nodes)


def node_intersection(a: Sequence, b: Sequence) -> list:
    """Common elements of two strictly increasing sequences, by a single merge pass."""
    _check_increasing(a, "first sequence")
    _check_increasing(b, "second sequence")
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        x, y = a[i], b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return out


def edge_intersection(g1: Graph, g2: Graph, nodes: Sequence[int]) -> frozenset[Edge]:
    """Edges among ``nodes`` present in both graphs.

    Only the C(len(nodes), 2) candidate pairs are examined, so the cost does
    not depend on how many edges the two graphs carry elsewhere.
    """
    _check_increasing(nodes, "node list")
    n1, n2 = set(g1.nodes), set(g2.nodes)
    for label in nodes:
        if label not in n1 or label not in n2:
            raise ContractError(f"label {label} is not a node of both graphs")
    return frozenset(
        pair for pair in combinations(nodes, 2) if pair in g1.edges and pair in g2.edges
    )


def complete_graph(labels: Sequence[int]) -> Graph:
    if len(set(labels)) != len(labels):
        raise ContractError("duplicate labels")
    nodes = tuple(sorted(labels))
    return Graph(nodes, frozenset(combinations(nodes, 2)))


def contains_clique(g: Graph, labels: Iterable[int]) -> bool:
    labels = sorted(set(labels))
    present = set(g.nodes)
    missing = [label for label in labels if label not in present]
    if missing:
        raise ContractError(f"labels {missing} are not nodes of the graph")
    return all(pair in g.edges for pair in combinations(labels, 2))


def edge_order(c: int) -> list[tuple[int, int]]:
    """Position pairs (0,1), (0,2), ..., (c-2, c-1); bit t of an edge mask is entry t."""
    return list(combinations(range(c), 2))


def mask_to_graph(mask: int, alphabet: Sequence[int]) -> Graph:
    alphabet = tuple(alphabet)
    order = edge_order(len(alphabet))
    if mask >> len(order):
        raise ContractError(f"mask {mask} has bits beyond the {len(order)} available edges")
    edges = frozenset(
        (alphabet[i], alphabet[j]) for t, (i, j) in enumerate(order) if mask >> t & 1
    )
    return Graph(alphabet, edges)


def graph_to_mask(g: Graph) -> int:
    """Edge mask of ``g`` in canonical order over its own sorted node list."""
    index = {label: pos for pos, label in enumerate(g.nodes)}
    c = len(g.nodes)
    mask = 0
    for lo, hi in g.edges:
        i, j = index[lo], index[hi]
        # position of (i, j) in the canonical order
        t = i * (2 * c - i - 1) // 2 + (j - i - 1)
        mask |= 1 << t
    return mask


def enumerate_graphs(alphabet: Sequence[int], cap: int = ENUMERATION_CAP) -> Iterator[Graph]:
    """Yield every labeled graph on ``alphabet``, in increasing edge-mask order."""
    alphabet = tuple(alphabet)
    _check_increasing(alphabet, "alphabet")
    if len(alphabet) > cap:
        raise EnumerationCapError(
            f"refusing to enumerate 2**{comb(len(alphabet), 2)} graphs on "
            f"{len(alphabet)} nodes (cap {cap})"
        )
    order = edge_order(len(alphabet))
    pairs = [(alphabet[i], alphabet[j]) for i, j in order]
    for mask in range(1 << len(order)):
        edges = frozenset(pairs[t] for t in range(len(pairs)) if mask >> t & 1)
        yield Graph._trusted(alphabet, edges)
