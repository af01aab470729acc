"""Threshold secret sharing by set and graph intersection."""

from .analysis import (
    FeasibilityReport,
    candidate_feasible,
    posterior_feasibility,
    ruled_out_candidate,
    search_space,
    set_scheme_leak_check,
)
from .errors import SharingError
from .graph import (
    Graph,
    complete_graph,
    contains_clique,
    edge_intersection,
    enumerate_graphs,
    node_intersection,
)
from .graphscheme import (
    DealParams,
    GraphSecret,
    GraphShare,
    graph_deal,
    graph_reconstruct,
    min_padding,
    min_padding_target,
    reconstruction_cost,
)
from .password import graph_to_password, password_to_rank, rank_to_graph
from .setscheme import SetSecret, SetShare, set_deal, set_deal_general, set_reconstruct
from .shamir import ShamirParams, ShamirShare, shamir_cost, shamir_deal, shamir_reconstruct

__version__ = "0.1.0"
