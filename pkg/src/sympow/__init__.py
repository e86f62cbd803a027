"""Exact computations with symbolic powers of square-free monomial ideals.

The package computes symbolic powers, tests them against ordinary powers,
decides Koenig and packing properties of the associated clutter, analyzes
edge ideals of graphs through their odd girth, translates between
square-free ideals and simplicial complexes, and evaluates asymptotic
invariants (initial degree, Waldschmidt constant, resurgence bounds) in
exact rational arithmetic.
"""

from .asymptotics import (
    ResurgenceBounds,
    alpha,
    resurgence_report,
    waldschmidt_exact,
    waldschmidt_lp,
    waldschmidt_sequence,
)
from .complexes import (
    MatroidResult,
    SimplicialComplex,
    fano_complex,
    fano_ideal,
    fano_matroid,
    is_matroid,
    stanley_reisner_complex,
    stanley_reisner_ideal,
)
from .covers import Clutter, big_height, height, minimal_primes, minimal_transversals, to_clutter
from .errors import InputError, SizeGuardExceeded
from .graphs import (
    Graph,
    edge_ideal,
    equality_threshold,
    is_bipartite,
    odd_cycle_witness,
    odd_girth,
    shortest_odd_cycle,
    verify_threshold,
)
from .hunt import HuntConfig, random_squarefree_ideal, run_hunt
from .monomials import Monomial, MonomialIdeal, minimalize, power_membership
from .packing import (
    MinorAssignment,
    PackingResult,
    has_packing_property,
    is_k_koenig,
    is_k_packed,
    is_koenig,
    max_regular_sequence,
    minor,
)
from .symbolic import (
    EqualityResult,
    containment,
    differential_membership,
    equals_ordinary,
    symbolic_membership,
    symbolic_power,
    symbolic_power_via_primes,
)

__version__ = "0.1.0"

__all__ = [
    "Clutter",
    "EqualityResult",
    "Graph",
    "HuntConfig",
    "InputError",
    "MatroidResult",
    "MinorAssignment",
    "Monomial",
    "MonomialIdeal",
    "PackingResult",
    "ResurgenceBounds",
    "SimplicialComplex",
    "SizeGuardExceeded",
    "alpha",
    "big_height",
    "containment",
    "differential_membership",
    "edge_ideal",
    "equality_threshold",
    "equals_ordinary",
    "fano_complex",
    "fano_ideal",
    "fano_matroid",
    "has_packing_property",
    "height",
    "is_bipartite",
    "is_k_koenig",
    "is_k_packed",
    "is_koenig",
    "is_matroid",
    "max_regular_sequence",
    "minimal_primes",
    "minimal_transversals",
    "minimalize",
    "minor",
    "odd_cycle_witness",
    "odd_girth",
    "power_membership",
    "random_squarefree_ideal",
    "resurgence_report",
    "run_hunt",
    "shortest_odd_cycle",
    "stanley_reisner_complex",
    "stanley_reisner_ideal",
    "symbolic_membership",
    "symbolic_power",
    "symbolic_power_via_primes",
    "to_clutter",
    "verify_threshold",
    "waldschmidt_exact",
    "waldschmidt_lp",
    "waldschmidt_sequence",
]
