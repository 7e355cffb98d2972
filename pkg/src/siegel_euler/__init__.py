"""Exact Euler characteristics of automorphic local systems on A_n.

Computes e_c and e_IH of the local systems attached to GSp_2n highest
weights on the moduli stack of principally polarized abelian varieties in
level one, as virtual motives (Tate classes plus symbolic cusp-form
classes), and specializes them to point counts |A_n(F_q)| and Frobenius
traces.  Everything is exact integer / rational arithmetic.
"""

from .errors import (
    DomainError,
    IncompleteDataError,
    IngestionError,
    InternalConsistencyError,
    NoClosedFormError,
    SiegelEulerError,
    SizeLimitError,
    UnknownDimensionError,
    UnknownHeckeError,
)
from .euler import (
    EulerResult,
    a_series,
    bfg_genus3,
    e2_extr,
    e_c,
    e_ih,
    e_ih_from_ec,
    point_count,
    point_count_polynomial,
    siegel_bracket,
)
from .forms import (
    CuspidalClass,
    FormsTable,
    builtin_table,
    dim_cusp_elliptic,
    frobenius_power_trace,
    load_forms_table,
    tau_coefficient,
)
from .gl_euler import GLEulerQuery, f_periodic, trivial_multiplicity
from .motives import (
    CuspSymbol,
    VirtualMotive,
    as_point_count_polynomial,
    elliptic_symbol,
    lefschetz,
    motive_dumps,
    motive_from_json,
    motive_to_json,
    rank,
    siegel_symbol,
    sym2_elliptic_symbol,
    trace_frobenius,
)
from .parameters import (
    ArthurParameter,
    Factor,
    SlotPartition,
    dim_siegel_cusp,
    enumerate_parameters,
    epsilon_pair,
    epsilon_psi,
    global_sign,
    multiplicity,
    siegel_contributes,
    siegel_spin_sum,
    slot_partition,
    spectral_trace,
    spin_contribution,
    u_sign,
    u_vector,
)
from .weyl import (
    DominantWeight,
    GLWeight,
    SignedPermutation,
    dot_action,
    enumerate_signed_perms,
    kostant_gl,
    sign,
    split_lin_her,
    weyl_set,
    weyl_set_cardinality,
)

__version__ = "0.1.0"
