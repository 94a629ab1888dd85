"""Exact prime-characteristic singularity invariants on F_p[x_1,...,x_n].

Cartier (p^{-e}-linear) operators, monomial valuations and their log
discrepancies, F-purity and F-regularity tests, splitting primes,
F-pure thresholds, and monomial log canonical thresholds / multiplier
ideals, all in exact rational arithmetic.
"""

from .cartier import CartierMap, parse_cartier
from .errors import (
    ConservationUndefined,
    ContextMismatchError,
    DegreeCapError,
    FrobdiscError,
    IterationCapError,
    PolyParseError,
    UncertifiedResultError,
    UndefinedExtendedOperation,
)
from .ideals import (
    Ideal,
    fedder_fpure_hypersurface,
    is_compatible,
    parse_ideal,
    splitting_prime,
    strongly_fregular_search,
)
from .logdisc import (
    LogDiscReport,
    Trichotomy,
    excess,
    logdisc_monomial,
    logdisc_oracle,
    logdisc_trivial,
    logdisc_twisted,
    mld_origin,
)
from .poly import MonoFrac, MultiPoly, PolyContext, parse_poly
from .rational import NEG_INF, POS_INF, ExtRational, ext
from .ratlp import LinearProgram, LPResult, lp_solve
from .thresholds import (
    MultiplierIdealReport,
    ThresholdReport,
    asymptotic_multiplier_ideal,
    fpt_approx,
    jumping_numbers,
    lct_graded,
    lct_monomial,
    multiplier_ideal_monomial,
    nu,
    nu_monomial_ideal,
)
from .valuations import (
    GradedSeq,
    MonomialValuation,
    f_graded_value,
    graded_value,
    parse_graded_seq,
    parse_valuation,
    retract,
)

__version__ = "0.1.0"
