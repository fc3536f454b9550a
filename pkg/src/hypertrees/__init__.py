"""Chain-based k-uniform hypertrees: constructions, decision procedures, audits."""

from .core import (
    Hypergraph,
    complete,
    is_chain_sequence,
    is_semicycle_sequence,
    new_hypergraph,
    parse,
    serialize,
    star,
    tight_path,
)
from .errors import HypertreeError, NotAHypertree, ResourceCap

__all__ = [
    "Hypergraph",
    "HypertreeError",
    "NotAHypertree",
    "ResourceCap",
    "complete",
    "is_chain_sequence",
    "is_semicycle_sequence",
    "new_hypergraph",
    "parse",
    "serialize",
    "star",
    "tight_path",
]

__version__ = "0.1.0"
