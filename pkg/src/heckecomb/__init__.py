"""Exact combinatorics of Newton points, Kottwitz sets and modifications for split GL_n."""

from .dvr_linear import (
    DvrMatrix,
    ModuleShape,
    glg_check,
    levi_projection,
    matrix_type,
    quotient_length_bound,
    valuation,
    verify_quotient_lemma,
)
from .errors import HeckeCombError
from .isocrystal import (
    FFBundle,
    LeviNewtonPoint,
    NewtonPoint,
    basic_class,
    bundle_invariants,
    bundle_of,
    levi_embed,
    make_newton,
    newton_invariants,
)
from .kottwitz import (
    dimension_NUb,
    enumerate_bmu,
    graded_slopes,
    hn_reducible,
    i_set,
    ic_shift,
    induction_numerology,
    membership,
)
from .modifications import (
    classify_rank2,
    induced_subbundle_check,
    lubin_tate_target,
    modified_degree,
    stratum_nonempty_rank2,
)
from .root_data import (
    LeviDatum,
    dominance_leq,
    galois_average,
    half_sums,
    l_dominant,
    mu_natural,
    pairing,
    pi1_levi_class,
    weyl_conjugate,
)

__version__ = "0.1.0"
