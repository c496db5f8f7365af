"""Exact real root counting by Sturm sequences and by Sturm-matrix inertia."""

from .chain import (
    RefinedChain,
    SturmChain,
    build_chain,
    canonical_chain,
    refine,
    sign_variation,
    variation_at,
)
from .inertia import (
    InertiaTriple,
    MinorSequence,
    NormalSequenceNotFound,
    SymMatrix,
    bordered_q_update,
    find_normal_sequence,
    inertia_congruence,
    is_normal,
    q_from_normal_sequence,
    rank,
)
from .matrix import (
    EvaluatedSturmMatrix,
    SturmMatrix,
    build_matrix,
    eval_matrix,
    trailing_minor_polys,
)
from .parsing import ParseError, parse_poly, parse_rational
from .poly import NotDivisibleError, Polynomial, X, cauchy_bound, exact_div, poly_gcd, sign
from .roots import (
    Interval,
    MultipleRootError,
    RootCountReport,
    count_all_roots,
    count_roots,
    count_roots_inertia,
    count_roots_variation,
    isolate_roots,
    q_at,
    structure_check,
)

__version__ = "0.1.0"
