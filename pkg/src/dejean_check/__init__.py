"""Machine checks for kernel repetitions in the fixed point of 1->121, 2->123, 3->141, 4->142."""

from .index import BoundsError, Window, WordIndex, build_index
from .powers import exponent, is_r_power, smallest_period
from .reduction import (
    AlignedText,
    AlignmentError,
    Decomposition,
    decompose,
    kernel_preimage_check,
    phase_rigidity_check,
    predecessor_sets,
)
from .verifier import (
    VerificationReport,
    VerifierConfig,
    Violation,
    build_test_word,
    is_kernel_repetition,
    lemma_bound,
    preimage_depth,
    scan,
    search_length_bound,
)
from .words import (
    F,
    U0,
    U1,
    ConstructionError,
    DomainError,
    Morphism,
    Word,
    apply,
    fixed_point_prefix,
    format_word,
    frequency_matrix,
    inverse_mod,
    parse_word,
)

__version__ = "0.1.0"
