"""Brute-force secrecy checks for small parameters.

The graph scheme is checked at the feasibility level: given one share, every
candidate secret on c positions must still be embeddable in some c-subset of
the share's nodes (order-preserving, containment rather than equality). The
set scheme is shown to fail the analogous check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import ContractError, EnumerationCapError
from .graph import ENUMERATION_CAP, Graph, edge_order, enumerate_graphs, graph_to_mask
from .graphscheme import GraphShare
from .setscheme import SetShare


def _unwrap(share: Union[GraphShare, Graph]) -> Graph:
    return share.graph if isinstance(share, GraphShare) else share


def candidate_feasible(
    share: Union[GraphShare, Graph], candidate: Graph
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Whether ``candidate`` (on positions 0..c-1) fits inside some c-subset of ``share``.

    Returns the flag and the first witness subset in lexicographic order.
    """
    g = _unwrap(share)
    c = len(candidate.nodes)
    if candidate.nodes != tuple(range(c)):
        raise ContractError("candidate must be on positions 0..c-1")
    wanted = candidate.sorted_edges()
    for subset in combinations(g.nodes, c):
        if all((subset[i], subset[j]) in g.edges for i, j in wanted):
            return True, subset
    return False, None


@dataclass
class FeasibilityReport:
    c: int
    candidates: int
    feasible_count: int
    per_candidate: dict[int, bool]
    witness: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def all_feasible(self) -> bool:
        return self.feasible_count == self.candidates

    def verdict(self) -> str:
        if self.all_feasible:
            return (f"{self.feasible_count}/{self.candidates} candidates feasible: "
                    "the share rules out no secret")
        ruled_out = self.candidates - self.feasible_count
        return (f"{self.feasible_count}/{self.candidates} candidates feasible: "
                f"the share rules out {ruled_out} secret(s)")


def posterior_feasibility(
    share: Union[GraphShare, Graph], c: Optional[int] = None, *, cap: int = ENUMERATION_CAP
) -> FeasibilityReport:
    """Run the feasibility check for all 2**C(c, 2) candidates.

    ``c`` is taken from the share when a :class:`GraphShare` is given.
    Induced edge masks of every c-subset are computed once; a candidate mask
    is feasible iff it is a sub-mask of one of them.
    """
    if c is None:
        if not isinstance(share, GraphShare):
            raise ContractError("c is required when analysing a bare graph")
        c = share.c
    if c > cap:
        raise EnumerationCapError(f"c={c} exceeds the enumeration cap {cap}")
    g = _unwrap(share)
    order = edge_order(c)
    induced = []
    for subset in combinations(g.nodes, c):
        mask = 0
        for t, (i, j) in enumerate(order):
            if (subset[i], subset[j]) in g.edges:
                mask |= 1 << t
        induced.append((mask, subset))

    per_candidate: dict[int, bool] = {}
    witness: dict[int, tuple[int, ...]] = {}
    for cand in enumerate_graphs(range(c), cap=cap):
        m = graph_to_mask(cand)
        hit = next((subset for mask, subset in induced if m & ~mask == 0), None)
        per_candidate[m] = hit is not None
        if hit is not None:
            witness[m] = hit
    return FeasibilityReport(
        c=c,
        candidates=len(per_candidate),
        feasible_count=sum(per_candidate.values()),
        per_candidate=per_candidate,
        witness=witness,
    )


class SearchSpace(NamedTuple):
    picks: int
    brute: int

    @property
    def exceeds_brute(self) -> bool:
        return self.picks >= self.brute


def search_space(c: int, b: int) -> SearchSpace:
    """(C(b + c, c), 2**C(c, 2)): node picks an attacker faces vs. candidate graphs."""
    if c < 1 or b < 0:
        raise ContractError("need c >= 1 and b >= 0")
    return SearchSpace(comb(b + c, c), 2 ** comb(c, 2))


def set_scheme_leak_check(share: SetShare, candidate: Iterable[bytes]) -> bool:
    """False when a single share already proves ``candidate`` is not the secret."""
    candidate = frozenset(candidate)
    if len(candidate) != share.u:
        raise ContractError(f"candidate has {len(candidate)} elements, secret size is {share.u}")
    return candidate <= share.elements


def ruled_out_candidate(share: SetShare, domain: Sequence[bytes]) -> Optional[frozenset[bytes]]:
    """A size-u candidate drawn from ``domain`` that ``share`` excludes, if one exists."""
    outside = next((tok for tok in domain if tok not in share.elements), None)
    if outside is None:
        return None
    rest = [tok for tok in domain if tok != outside][: share.u - 1]
    if len(rest) < share.u - 1:
        return None
    return frozenset([outside, *rest])
