"""Hecke eigenvalues of non-self-dual GL(2) forms in sectors.

Exact representation-ring and pole-order bookkeeping for the moments
sum_v Re(e^{i phi} a_v)^k Nv^{-s}, the moment-method boundary system that turns
them into a density statement, and empirical checks on eigenvalue data.
"""

from .density import (
    DEFAULT_CAP,
    argument_lines,
    ks_bound,
    ks_bound_general,
    low_order_sector_check,
    min_guaranteed_sector,
    min_Q_for_cap,
    sector_half_angle,
    solve_boundary,
    theorem_pipeline,
    threshold_scan,
)
from .empirical import (
    compare_report,
    load_dataset,
    sector_density,
    synth_dataset,
    truncated_moment,
)
from .moments import moment_bounds, moment_poly, q6_upper, q8_upper, q8_uniform
from .poles import Hypotheses, PoleInterval, a_table, pole_order_factor, pole_order_product, reconcile
from .repring import (
    SymDet,
    VirtualCharacter,
    char_of_symdet,
    decompose_to_symdet,
    dual,
    tensor,
    tensor_power,
    verify_factorization,
)

__version__ = "0.1.0"
