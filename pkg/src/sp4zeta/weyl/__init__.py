"""Root system C_n, Weyl group, symbolic period sums and their residues."""

from .period import (
    HigherOrderPoleError, NormalizedZeta, assemble_period, build_period_term, closed_form_symbolic,
    eval_symbolic, normalize_to_zeta, search_functional_equation, take_residue,
)
from .roots import RootSystem, WeylElement, enumerate_weyl, root_system_c, weyl_action
from .symbolic import LinearForm, SymbolicSum, SymbolicTerm, make_term

__all__ = [
    "HigherOrderPoleError", "LinearForm", "NormalizedZeta", "RootSystem", "SymbolicSum",
    "SymbolicTerm", "WeylElement", "assemble_period", "build_period_term", "enumerate_weyl",
    "closed_form_symbolic", "eval_symbolic", "make_term", "normalize_to_zeta", "root_system_c",
    "search_functional_equation", "take_residue", "weyl_action",
]
