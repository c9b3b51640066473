"""Slow sequences of linear recurrences: three constructions and a codec.

A slow sequence starts at 1 and increases by 0 or 1 at each step.  Given a
linear recurrence with nonnegative coefficients and a shift s, this package
builds the attached slow sequence three independent ways (nested-recurrence
evaluation, leaf counting in labeled trees, digit-string frequencies),
provides the generalized Zeckendorf codec behind the third route, and
computes dominant-root asymptotics.
"""

from .asymptotics import (
    CharPoly,
    char_poly,
    dominant_root,
    empirical_ratio,
    growth_constant_estimate,
    limit_ratio,
)
from .errors import (
    BudgetExceededError,
    CapacityError,
    IllFormedEvaluationError,
    InvalidDigitsError,
    InvalidRecurrenceError,
    SlowSeqError,
)
from .nested import (
    SlowSequence,
    TheoremReport,
    build_recurrence,
    eval_slow,
    initial_horizon,
    render,
    render_expr,
    verify_theorem,
)
from .recurrence import (
    LinearRecurrence,
    SequenceCache,
    make_recurrence,
    parse_recurrence,
)
from .trees import (
    LabeledTree,
    Tree,
    build_finite_tree,
    build_skeleton,
    label_skeleton,
    leaf_count_oracle,
    leaf_count_prefix,
    prune,
    render_tree,
    skeleton_height_for,
    strip_leaves,
    subtree_leaf_count,
)
from .zeckendorf import (
    AppendZerosReport,
    PlaceValueResult,
    append_zeros_check,
    count_valid_with_at_most,
    decode_fast,
    decode_naive,
    digits_to_text,
    encode_fast,
    encode_naive,
    enumerate_valid,
    frequencies_to_slow,
    frequency,
    is_place_value_system,
    is_valid,
    iter_valid,
    slow_value_at,
    text_to_digits,
    trailing_zeros,
)

__version__ = "1.0.0"

__all__ = [
    "AppendZerosReport",
    "BudgetExceededError",
    "CapacityError",
    "CharPoly",
    "IllFormedEvaluationError",
    "InvalidDigitsError",
    "InvalidRecurrenceError",
    "LabeledTree",
    "LinearRecurrence",
    "PlaceValueResult",
    "SequenceCache",
    "SlowSeqError",
    "SlowSequence",
    "TheoremReport",
    "Tree",
    "append_zeros_check",
    "build_finite_tree",
    "build_recurrence",
    "build_skeleton",
    "char_poly",
    "count_valid_with_at_most",
    "decode_fast",
    "decode_naive",
    "digits_to_text",
    "dominant_root",
    "empirical_ratio",
    "encode_fast",
    "encode_naive",
    "enumerate_valid",
    "eval_slow",
    "frequencies_to_slow",
    "frequency",
    "growth_constant_estimate",
    "initial_horizon",
    "is_place_value_system",
    "is_valid",
    "iter_valid",
    "label_skeleton",
    "leaf_count_oracle",
    "leaf_count_prefix",
    "limit_ratio",
    "make_recurrence",
    "parse_recurrence",
    "prune",
    "render",
    "render_expr",
    "render_tree",
    "skeleton_height_for",
    "slow_value_at",
    "strip_leaves",
    "subtree_leaf_count",
    "text_to_digits",
    "trailing_zeros",
    "verify_theorem",
]
