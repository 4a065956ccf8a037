"""Binary words with a prescribed critical exponent.

Construction of arbitrarily long prefixes of infinite binary words whose
largest repetition exponent is exactly a chosen rational alpha > 2, an exact
repetition-analysis engine, and an empirical verification harness.
"""

from .errors import FormatError, SizeError
from .words import (
    EMPTY,
    MAX_LETTERS,
    MorphismTable,
    THUE_MORSE,
    Word,
    complement,
    delete_prefix,
    in_language_L,
    mu,
    mu_pow,
    occurrences_00,
    zeros,
)
from .repetitions import (
    NAIVE_LENGTH_BOUND,
    Rational,
    Run,
    find_power_in_runs,
    find_power_with_period,
    find_violation,
    has_period,
    is_power_free,
    matching_positions,
    max_exponent,
    maximal_repetitions,
    naive_max_exponent,
    naive_runs,
)
from .construction import (
    DEFAULT_MAX_LETTERS,
    ObtainableParams,
    PredictedWitness,
    Schedule,
    build_schedule,
    build_word,
    find_obtainable,
    phi,
    predicted_length,
    word_prefix,
)
from .checks import (
    CheckReport,
    check_lemma1,
    check_lemma4,
    check_lemma5,
    check_theorem2,
    check_theorem3,
    sample_anchored_factors,
    verify_construction,
)

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "DEFAULT_MAX_LETTERS",
    "EMPTY",
    "FormatError",
    "MAX_LETTERS",
    "MorphismTable",
    "NAIVE_LENGTH_BOUND",
    "ObtainableParams",
    "PredictedWitness",
    "Rational",
    "Run",
    "Schedule",
    "SizeError",
    "THUE_MORSE",
    "Word",
    "build_schedule",
    "build_word",
    "check_lemma1",
    "check_lemma4",
    "check_lemma5",
    "check_theorem2",
    "check_theorem3",
    "complement",
    "delete_prefix",
    "find_obtainable",
    "find_power_in_runs",
    "find_power_with_period",
    "find_violation",
    "has_period",
    "in_language_L",
    "is_power_free",
    "matching_positions",
    "max_exponent",
    "maximal_repetitions",
    "mu",
    "mu_pow",
    "naive_max_exponent",
    "naive_runs",
    "occurrences_00",
    "phi",
    "predicted_length",
    "sample_anchored_factors",
    "verify_construction",
    "word_prefix",
    "zeros",
]
