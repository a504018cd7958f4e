"""Cosecure domination: exact oracle, certificates, chain graphs, reduction gadgets."""
from .chain import (
    ChainPartition, NotChainGraph, analyze_chain, chain_from_sizes, chain_partition, chain_witness,
    csdn_cb, csdn_chain, csdn_sizes, optimal_counts, partition_chain, recognize_chain, strip_recursion,
)
from .classcheck import is_chordal_bipartite_small, is_comb, is_star, is_tree_convex, verify_dpeo
from .domsets import (
    CosecureCertificate, FailureWitness, certify_cosecure, check_certificate, is_cosecure, is_dominating,
    pendant_supports,
)
from .gadgets import (
    ReductionArtifact, comb_convex, gy4_construct, gy4_csdn, pendant_path, set_cover_gadget, star_convex,
)
from .graph import Bipartition, Graph, GraphError, NotBipartite, bipartition_of, components, from_edge_list, to_edge_list
from .oracle import (
    GuardExceeded, IsolatedVertexError, OracleResult, SetCoverInstance, min_cosecure, min_dominating, min_set_cover,
)
from .xcheck import EquivalenceReport, xcheck

__version__ = "0.1.0"
