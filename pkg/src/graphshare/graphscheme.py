"""Two-out-of-n sharing of a labeled graph by graph intersection.

Dealing pads the secret with ``b`` junk nodes, wires them at random, copies
the padded graph ``n`` times under fresh junk labels (secret nodes keep one
common, order-preserving label vector), adds per-share decoy edges between
secret nodes that no other share receives, and plants a complete graph on
``c`` nodes in every share. Any two shares intersect back to the secret.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Optional

import numpy as np

from .errors import (
    ContractError,
    ExhaustionError,
    InsecureParamsError,
    PlantingError,
    ReconstructionError,
)
from .graph import LABEL_LIMIT, Edge, Graph, edge_intersection, node_intersection


def _check_name(name: str) -> None:
    if not name or any(ch in name for ch in ",\n\r") or name != name.strip():
        raise ContractError(f"invalid alphabet name {name!r}")


@dataclass(frozen=True)
class GraphSecret:
    """A graph on positions 0..c-1 with public names for those positions."""

    alphabet: tuple[str, ...]
    graph: Graph

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        c = len(self.alphabet)
        if c < 1:
            raise ContractError("secret needs at least one node")
        for name in self.alphabet:
            _check_name(name)
        for prev, cur in zip(self.alphabet, self.alphabet[1:]):
            if not prev < cur:
                raise ContractError(f"alphabet not strictly increasing at {prev!r}, {cur!r}")
        if self.graph.nodes != tuple(range(c)):
            raise ContractError(f"secret graph must be on positions 0..{c - 1}")

    @property
    def c(self) -> int:
        return len(self.alphabet)

    def named_edges(self) -> list[tuple[str, str]]:
        return [(self.alphabet[i], self.alphabet[j]) for i, j in self.graph.sorted_edges()]


@lru_cache(maxsize=256)
def min_padding_target(c: int, target: int) -> int:
    """Smallest b with C(b + c, c) >= target."""
    if c < 1 or target < 1:
        raise ContractError("need c >= 1 and target >= 1")
    # C(b + c, c) grows without bound in b, so this terminates
    b = 0
    while comb(b + c, c) < target:
        b += 1
    return b


def min_padding(c: int) -> int:
    """Smallest padding making node-subset guessing at least as costly as guessing the graph."""
    return min_padding_target(c, 2 ** comb(c, 2))


def reconstruction_cost(c: int, b: int) -> int:
    """Basic steps to recombine two shares: a merge over b + c nodes plus C(c, 2) edge checks."""
    if c < 1 or b < 0:
        raise ContractError("need c >= 1 and b >= 0")
    return (b + c) + comb(c, 2)


@dataclass(frozen=True)
class DealParams:
    n: int
    b: int
    edge_fill_prob: float = 0.5
    augment_prob: float = 0.5
    max_plant_retries: int = 1000
    insecure: bool = False
    # size of the brute-force space the padding must beat; 2**C(c, 2) if None
    search_space: Optional[int] = None

    def __post_init__(self):
        if self.n < 2:
            raise ContractError(f"need n >= 2 shares, got {self.n}")
        if self.b < 0:
            raise ContractError(f"padding b must be >= 0, got {self.b}")
        for name in ("edge_fill_prob", "augment_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ContractError(f"{name}={p} outside [0, 1]")
        if self.max_plant_retries < 0:
            raise ContractError("max_plant_retries must be >= 0")

    def floor(self, c: int) -> int:
        if self.search_space is None:
            return min_padding(c)
        return min_padding_target(c, self.search_space)

    def check(self, c: int) -> None:
        need = self.floor(c)
        if self.b < need and not self.insecure:
            raise InsecureParamsError(
                f"b={self.b} is below the padding floor {need} for c={c}; "
                "pass insecure=True to override"
            )


@dataclass(frozen=True)
class GraphShare:
    index: int
    n: int
    c: int
    b: int
    alphabet: tuple[str, ...]
    graph: Graph
    # dealer-side audit data, never serialized
    secret_labels: Optional[tuple[int, ...]] = field(default=None, compare=False, repr=False)
    planted: Optional[tuple[int, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        if not 1 <= self.index <= self.n:
            raise ContractError(f"share index {self.index} outside 1..{self.n}")
        if len(self.alphabet) != self.c:
            raise ContractError(f"alphabet has {len(self.alphabet)} names, c={self.c}")
        if len(self.graph.nodes) != self.b + self.c:
            raise ContractError(
                f"share graph has {len(self.graph.nodes)} nodes, expected b + c = {self.b + self.c}"
            )


def _padded_base(c: int, b: int, p: float, rng) -> tuple[np.ndarray, np.ndarray]:
    """Random junk wiring of the padded graph, as position arrays (lo, hi).

    Every pair with at least one junk endpoint is an edge with probability p.
    Secret-secret pairs are left to the caller.
    """
    total = b + c
    lo, hi = np.triu_indices(total, 1)
    junk_pair = hi >= c
    gen = np.random.default_rng(rng.getrandbits(64))
    keep = junk_pair & (gen.random(lo.size) < p)
    return lo[keep], hi[keep]


def _augment(ledger: set[Edge], pairs: list[Edge], rng) -> list[Edge]:
    free = [pair for pair in pairs if pair not in ledger]
    if not free:
        return []
    chosen = [pair for pair in free if rng.random() < 0.5]
    return chosen or [rng.choice(free)]


def _plant_ok(pick, c: int, secret_edges: frozenset[Edge]) -> bool:
    inside = [pos for pos in pick if pos < c]
    return all(pair in secret_edges for pair in combinations(inside, 2))


def _plant(c: int, total: int, secret_edges: frozenset[Edge], retries: int, rng) -> tuple[int, ...]:
    for _ in range(retries):
        pick = tuple(sorted(rng.sample(range(total), c)))
        if _plant_ok(pick, c, secret_edges):
            return pick
    for pick in combinations(range(total), c):
        if _plant_ok(pick, c, secret_edges):
            return pick
    raise PlantingError(
        f"no {c}-node pick out of {total} avoids adding a non-secret edge between secret nodes"
    )


def graph_deal(secret: GraphSecret, params: DealParams, rng) -> list[GraphShare]:
    """Split ``secret`` into ``params.n`` shares, any two of which recover it.

    ``rng`` is a :class:`random.Random`-like source (``random``, ``sample``,
    ``choice``, ``getrandbits``); the same seed gives the same shares.
    """
    c, b, n = secret.c, params.b, params.n
    params.check(c)
    total = b + c
    if c + n * b > LABEL_LIMIT:
        raise ExhaustionError(f"label space cannot hold {c + n * b} distinct labels")
    secret_edges = secret.graph.edges

    base_lo, base_hi = _padded_base(c, b, params.edge_fill_prob, rng)
    drawn = rng.sample(range(LABEL_LIMIT), c + n * b)
    secret_labels = tuple(sorted(drawn[:c]))

    pairs = list(combinations(range(c), 2))
    ledger = set(secret_edges)
    shares = []
    for s in range(n):
        label_list = list(secret_labels) + drawn[c + s * b : c + (s + 1) * b]
        label_of = np.array(label_list, dtype=np.int64)
        own = set(secret_edges)
        if rng.random() < params.augment_prob:
            extra = _augment(ledger, pairs, rng)
            own.update(extra)
            ledger.update(extra)
        pick = _plant(c, total, secret_edges, params.max_plant_retries, rng)
        own.update(combinations(pick, 2))

        a, z = label_of[base_lo], label_of[base_hi]
        edges = set(zip(np.minimum(a, z).tolist(), np.maximum(a, z).tolist()))
        for i, j in own:
            x, y = label_list[i], label_list[j]
            edges.add((x, y) if x < y else (y, x))
        nodes = tuple(sorted(label_list))
        planted = tuple(sorted(label_list[p] for p in pick))
        shares.append(
            GraphShare(
                index=s + 1,
                n=n,
                c=c,
                b=b,
                alphabet=secret.alphabet,
                graph=Graph._trusted(nodes, frozenset(edges)),
                secret_labels=secret_labels,
                planted=planted,
            )
        )
    return shares


def graph_reconstruct(share_a: GraphShare, share_b: GraphShare) -> GraphSecret:
    """Recover the secret from two distinct shares of one deal."""
    meta_a = (share_a.n, share_a.c, share_a.b, share_a.alphabet)
    meta_b = (share_b.n, share_b.c, share_b.b, share_b.alphabet)
    if meta_a != meta_b:
        raise ReconstructionError(
            f"share {share_a.index} and share {share_b.index} come from different deals "
            "(n, c, b or alphabet differ)"
        )
    if share_a.index == share_b.index:
        raise ReconstructionError(f"both shares have index {share_a.index}; need two distinct shares")
    common = node_intersection(share_a.graph.nodes, share_b.graph.nodes)
    if len(common) != share_a.c:
        raise ReconstructionError(
            f"shares have {len(common)} common nodes, expected c = {share_a.c}; "
            "a share is corrupted or tampered with"
        )
    position = {label: i for i, label in enumerate(common)}
    edges = edge_intersection(share_a.graph, share_b.graph, common)
    graph = Graph(tuple(range(share_a.c)), frozenset((position[x], position[y]) for x, y in edges))
    return GraphSecret(share_a.alphabet, graph)
