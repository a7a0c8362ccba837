"""Combinatorics of the global nilpotent cone of an elliptic curve.

HN strata and their closure order, irreducible components, dimension
formulas, Kostka-based characteristic-cycle blocks and the small-rank
dictionary with Jordan types.
"""

from .ccmap import CCBlock, TruncatedCCMatrix, cc_block, cc_truncated, invert_known_part
from .components import (
    ComponentLabel,
    XiFunction,
    component_leq,
    dim_hn_stratum,
    dim_nilcone_fiber,
    dim_nilcone_stratum,
    dim_ss_stratum,
    enumerate_components,
    nilpotent_codim_in_end,
)
from .errors import NilconeError
from .hn import (
    ClassVector,
    HNType,
    UnimodularMatrix,
    codim_one_stratum,
    enumerate_hn,
    euler_form,
    path_below,
    sl2_transport,
    slope,
    stratum_codim,
    stratum_leq,
)
from .jordan import JordanType, generic_torsion_part, hn_to_jordan, jordan_to_hn, jordan_validate, torsion_jordan
from .matrix import IntegerMatrix, invert_unitriangular
from .partitions import Partition, dominance_leq, endo_dim, kostka, kostka_matrix, partitions_of

__version__ = "0.1.0"
