"""Exact rank bounds for Mumford-Tate and l-adic monodromy groups."""
from .bounds import (
    BoundKind,
    BoundReport,
    HodgeSplit,
    char_count_bound,
    commutative_rank_bound,
    count_distinct_characters,
    dim_bound,
    division_field_exponent,
    general_rank_bound,
    hodge_split,
    product_rank_bound,
    triple_commutative_check,
    triple_noncommutative_check,
    triple_rank_bound,
)
from .landau import (
    AlphaValue,
    LandauTable,
    alpha,
    alpha_envelope,
    landau_g,
    landau_g1,
    landau_table,
    massias_check,
    sandwich_check,
)
from .lattice import (
    InfiniteQuotientError,
    IntMatrix,
    QuotientInvariants,
    quotient_exponent,
    smith_normal_form,
)
from .rootsys import (
    AdmissibilityError,
    MinusculeRep,
    ReductiveShape,
    SimpleType,
    cartan_matrix,
    fundamental_group_exponent,
    fundamental_group_invariants,
    fundamental_weight,
    minuscule_catalog,
    u_upper_bound,
    verify_u_vs_g1,
    weyl_orbit,
)
from .sharpness import (
    ExampleReport,
    cm_example,
    large_multiplicity_example,
    sl2_product_example,
    spin_example,
)

__version__ = "0.1.0"
