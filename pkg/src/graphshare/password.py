"""Eight-character alphanumeric passwords as 11-node graphs.

A password is read as a big-endian base-62 number (digits, then upper case,
then lower case). The rank fills bits 0..47 of the 55-bit canonical edge mask
of an 11-node graph; bits 48..54 stay zero.
"""

from __future__ import annotations

import string

from .errors import ContractError, NotAPasswordGraph
from .graph import Graph, edge_order, graph_to_mask, mask_to_graph
from .graphscheme import GraphSecret

SYMBOLS = string.digits + string.ascii_uppercase + string.ascii_lowercase
LENGTH = 8
NODES = 11
RANK_BITS = 48
PASSWORD_SPACE = len(SYMBOLS) ** LENGTH
# public names for the 11 positions, in lexicographic order
NODE_NAMES = tuple(f"{i:02d}" for i in range(NODES))

_VALUE = {ch: i for i, ch in enumerate(SYMBOLS)}


def password_to_rank(password: str) -> int:
    if len(password) != LENGTH:
        raise ContractError(f"password must be exactly {LENGTH} characters, got {len(password)}")
    rank = 0
    for pos, ch in enumerate(password):
        if ch not in _VALUE:
            raise ContractError(f"character {ch!r} at position {pos} is not alphanumeric ASCII")
        rank = rank * len(SYMBOLS) + _VALUE[ch]
    return rank


def rank_to_password(rank: int) -> str:
    if not 0 <= rank < PASSWORD_SPACE:
        raise ContractError(f"rank {rank} outside [0, 62**8)")
    chars = []
    for _ in range(LENGTH):
        rank, digit = divmod(rank, len(SYMBOLS))
        chars.append(SYMBOLS[digit])
    return "".join(reversed(chars))


def rank_to_graph(rank: int) -> Graph:
    if not 0 <= rank < PASSWORD_SPACE:
        raise ContractError(f"rank {rank} outside [0, 62**8)")
    return mask_to_graph(rank, range(NODES))


def graph_to_password(g: Graph) -> str:
    if g.nodes != tuple(range(NODES)):
        raise NotAPasswordGraph(f"not a password graph: nodes must be 0..{NODES - 1}")
    mask = graph_to_mask(g)
    if mask >> RANK_BITS:
        high = [t for t in range(RANK_BITS, len(edge_order(NODES))) if mask >> t & 1]
        raise NotAPasswordGraph(f"not a password graph: reserved edge bits {high} are set")
    if mask >= PASSWORD_SPACE:
        raise NotAPasswordGraph(f"not a password graph: rank {mask} >= 62**8")
    return rank_to_password(mask)


def password_secret(password: str) -> GraphSecret:
    """The password as a dealable secret on the fixed 11 public node names."""
    return GraphSecret(NODE_NAMES, rank_to_graph(password_to_rank(password)))


def secret_password(secret: GraphSecret) -> str:
    if secret.alphabet != NODE_NAMES:
        raise NotAPasswordGraph("secret alphabet is not the password node alphabet")
    return graph_to_password(secret.graph)
