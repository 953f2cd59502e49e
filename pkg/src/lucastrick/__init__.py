"""lucastrick: exact Lucas/n-nacci sequence sums, divisibility, and tricks.

The library answers three kinds of questions with exact integer arithmetic:

* evaluation -- terms, partial sums, modular periods, and symbolic
  coefficient forms of linear recurrences (:mod:`lucastrick.core`);
* structure -- which products of Fibonacci and Lucas numbers coincide, and
  which rounding inequalities force partial-sum quotients to be Lucas
  numbers (:mod:`lucastrick.identities`);
* the trick -- the largest term dividing a partial sum, per-family closed
  forms with confidence tags, and certificates that a sum trick works for
  every sequence sharing a recurrence (:mod:`lucastrick.divisibility`,
  :mod:`lucastrick.tricks`).

A command-line interface wraps all of it (:mod:`lucastrick.cli`).
"""

from .core import (
    FIBONACCI,
    FIB_BISECTION,
    JACOBSTHAL,
    LUCAS,
    NAMED_FAMILIES,
    PELL,
    SIGNED_FIBONACCI,
    TRIBONACCI,
    LinearForm,
    PartialSumRecord,
    PeriodInfo,
    RecurrenceSpec,
    SequenceDef,
    fibonacci,
    first_kind,
    lucas,
    nnacci,
    partial_sum,
    period_mod,
    second_kind,
    sequence_values,
    sum_form,
    term,
    term_fast,
    term_form,
)
from .divisibility import (
    FOUND,
    NONE_FOUND,
    OEIS_IDS,
    UNBOUNDED,
    CycleTable,
    DivisibilityResult,
    PatternRow,
    UnsupportedCaseError,
    lucas_index_of,
    lucas_odd_cycle,
    max_div_index_bruteforce,
    max_div_index_closed,
    oeis_sequence,
    pattern_table,
    triangular,
)
from .identities import (
    CaseLabel,
    IdentityCheck,
    IdentitySuiteReport,
    ProductDecomposition,
    RoundingScanReport,
    UniquenessReport,
    check_identity_suite,
    check_rounding_lemma,
    classify_fl_quadruple,
    classify_ll_quadruple,
    decomposition_index_bound,
    fl_decompose,
    ll_decompose,
    rounding_corollary_scan,
    verify_fl_uniqueness,
    verify_ll_uniqueness,
)
from .tricks import (
    NoTrickError,
    TrickCertificate,
    TrickResult,
    common_trick_range,
    find_common_trick,
    nnacci_trick_scan,
    perform_trick,
    verify_nnacci_theorem,
)

__version__ = "1.0.0"
