"""Symbolic kernel for coded dilators, ordinal functors, and collapse orders."""

from .analysis import (
    TypeClass,
    classify,
    components,
    decompose,
    important_index,
    ll_relation,
    otp_symbolic,
    sep,
    sep_signed,
    sep_signed_iter,
    shift,
)
from .errors import (
    BudgetExceeded,
    DepthExceeded,
    DilcalcError,
    EnumerationShortfall,
    GuardViolation,
    MalformedElement,
    NoUniqueIndex,
    NotConnected,
    NotTypeOmega,
    OutOfNotation,
    ParseError,
    UnsupportedClassification,
    UnsupportedDecomposition,
    UnsupportedLimit,
    UnsupportedOtp,
    UnsupportedSeparation,
)
from .expr import Dil, parse_dil, parse_expr, to_str
from .jfunctor import JResult, j_eval, j_guard_report, jplus_eval, jprime_eval
from .ordinal import (
    LimitPattern,
    Ord,
    detect_limit_pattern,
    ord_add,
    ord_cmp,
    ord_is_principal,
    ord_mul_nat,
    ord_mul_omega,
    ord_omega_pow,
    ord_str,
    ord_sup_of_sequence,
    ord_sup_solve,
    parse_ord,
)
from .psi import (
    PsiOrder,
    chain_search,
    embed_check,
    psi_clause_otp,
    psi_cmp,
    psi_enum,
    psi_term_valid,
)
from .semantics import (
    EnumBudget,
    compare_elements,
    enum_elements,
    prefix_elements,
    stream_elements,
    support_of,
)
from .suites import CHECKS, run_check

__all__ = [name for name in dir() if not name.startswith("_")]
