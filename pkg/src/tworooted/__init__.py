"""Avoidability of two-rooted graphs: copies, extensions, pendant extensions, confinement."""

from .graph import Graph, closed_neighborhood, compose, girth, induced_subgraph
from .iso import automorphism_orbits, find_isomorphism, is_isomorphic
from .rooted import (
    ConfinementReport,
    CopyEmbedding,
    Extension,
    TwoRootedGraph,
    confines,
    enumerate_copies,
    enumerate_extensions,
    equivalent,
    is_avoidable,
    is_closable,
    is_simplicial,
    is_subcubic_two_rooted_tree,
    parse_rooted,
)
from .pe import FinitelyExtendable, PEInherentUpToBudget, StageTrace, classify, enumerate_minimal_pes, hst_extension, stage_sequence, verify_pe_sequence

__version__ = "0.1.0"
