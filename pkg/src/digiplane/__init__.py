"""Digital planes: Z^2 under 4/8-adjacency, the Khalimsky plane K^2, and the slant map linking them."""
from .grid import Adjacency, Classification, Kind, classify_path, complement_components, is_k_connected
from .jordan import (
    DecompositionError, HypothesisError, JordanDecomposition, Regime, bracket, decompose, j_m, s_j,
    verify_rosenfeld_jordan,
)
from .khalimsky import adjacency, classify_k, complement_components_k, is_connected, is_mixed, is_pure
from .regions import ComponentPartition
from .slant import gamma, gamma_inv, gamma_inv_set, gamma_set, gamma_star

__version__ = "0.1.0"

__all__ = [
    "Adjacency", "Classification", "ComponentPartition", "DecompositionError", "HypothesisError",
    "JordanDecomposition", "Kind", "Regime", "adjacency", "bracket", "classify_k", "classify_path",
    "complement_components", "complement_components_k", "decompose", "gamma", "gamma_inv", "gamma_inv_set",
    "gamma_set", "gamma_star", "is_connected", "is_k_connected", "is_mixed", "is_pure", "j_m", "s_j",
    "verify_rosenfeld_jordan",
]
