"""Groebner bases for two-sided ideals over exact coefficient rings.

The engine works in a free associative algebra (or its commutative
monomial sibling) over Z, Z/n or Q.  Generating sets with unit leading
coefficients admit a division algorithm whose remainders span the
quotient by normal words; the Buchberger criterion decides when the set
is a Groebner basis, and the enveloping-algebra construction turns Lie
structure constants into such a set with non-decreasing normal words.
A separate linear-algebra membership oracle cross-checks the reduction
engine at bounded degree.
"""

from .division import (
    FIRST_MATCH,
    DivisionStep,
    DivisionTrace,
    FirstMatch,
    GenSet,
    Seeded,
    divide,
    normal_form,
    parse_strategy,
    try_divide_step,
)
from .errors import (
    BasisViolation,
    BoundTooSmall,
    BudgetExceeded,
    CompletionFailure,
    EmptyWord,
    InvalidLie,
    NonUnitalRemainder,
    NotAGroebnerBasis,
    NotAUnit,
    NotUnital,
    OracleMismatch,
    ParseError,
    PreconditionViolated,
    RingMismatch,
    RoundsExceeded,
    UGBError,
    UnsupportedRing,
    ZeroPolynomial,
)
from .membership import (
    MembershipResult,
    TruncatedModule,
    build_truncation,
    expand_witness,
    is_member,
)
from .pbw import (
    LieAlgebra,
    LieReport,
    PBWReport,
    PBWSystem,
    build_pbw,
    pbw_generators,
    validate_lie,
    verify_pbw,
)
from .poly import (
    COMMUTATIVE,
    FREE,
    Algebra,
    CommutativeMerge,
    FreeConcat,
    Poly,
    oracle_from_name,
)
from .quotient import QuotientBasis, decompose, enumerate_basis, is_normal
from .rings import QQ, ZZ, ModularRing, Ring, Zmod, ring_from_name
from .spolys import (
    GBReport,
    GBVerdict,
    SPoly,
    check_groebner,
    complete,
    s_polynomials,
    telescope,
)
from .textio import Problem, load_problem, parse_poly, parse_problem
from .words import DEGLEX, EMPTY, Alphabet, DegLex, Overlap, factorizations, overlaps

__version__ = "0.1.0"
