"""Workbench for quiver Grassmannians, F-polynomials and cluster characters
of type A cluster categories."""

from .arquiver import ARQuiver, IndecObject, cluster_indecomposables, knit, sigma
from .charcat import CCTable, CTObject, cc, cc_table, ct_enumerate, ct_mutate, index_vector, iota
from .clusteralg import Seed, enumerate_seeds, initial_seed, mutate_seed
from .fpoly import FPolynomial, check_ar_identity, check_product, f_polynomial
from .grassmann import count_subreps, count_subspaces, euler_char, grass_table
from .laurent import LaurentPoly, UniPoly, exact_div, interpolate, parse_laurent
from .quivers import Quiver, b_matrix, kronecker, linear_an, mutate_quiver, validate_mutable
from .reps import (
    Relation,
    Representation,
    check_relations,
    dim_hom,
    direct_sum,
    injective_copresentation,
    interval_module,
    socle,
    specialize_mod_p,
    standard_module,
)

__version__ = "0.1.0"
