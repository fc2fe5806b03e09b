"""Parikh, factor, and sequence matrices for words over ordered alphabets,
exact gapped-subsequence counting, special minors with witness-word
reduction, and generalized subword histories."""

from .counting import (
    count_factor,
    count_gapped,
    count_piece,
    count_subword,
    factor_starts,
)
from .gsh import (
    EPSILON,
    Expr,
    LinearForm,
    equivalent,
    equivalent_bounded,
    evaluate,
    ground_shuffle,
    is_interleaved,
    linearize,
    linearize_product,
    linearize_product_literal,
    mono,
    parse_expr,
    red,
)
from .intmat import IntMatrix
from .minors import (
    MinorSweep,
    check_minor_nonneg,
    minor_index_set,
    special_minor,
    special_minor_from_matrix,
    verify_witness,
    witness_parikh_matrix,
    witness_text,
    witness_word,
)
from .parikh import ParikhContext, ParikhFold, letter_matrix, parikh_matrix
from .seqmat import (
    EntryLayout,
    SeqFold,
    SeqMatrix,
    entry_spec,
    factor_matrix,
    seq_matrix,
    seq_matrix_direct,
    seq_matrix_letter,
)
from .words import (
    Alphabet,
    GapPattern,
    PatternError,
    Piece,
    parse_pattern,
    parse_word,
)

__all__ = [
    "Alphabet",
    "EPSILON",
    "EntryLayout",
    "Expr",
    "GapPattern",
    "IntMatrix",
    "LinearForm",
    "MinorSweep",
    "ParikhContext",
    "ParikhFold",
    "PatternError",
    "Piece",
    "SeqFold",
    "SeqMatrix",
    "check_minor_nonneg",
    "count_factor",
    "count_gapped",
    "count_piece",
    "count_subword",
    "entry_spec",
    "equivalent",
    "equivalent_bounded",
    "evaluate",
    "factor_matrix",
    "factor_starts",
    "ground_shuffle",
    "is_interleaved",
    "letter_matrix",
    "linearize",
    "linearize_product",
    "linearize_product_literal",
    "minor_index_set",
    "mono",
    "parikh_matrix",
    "parse_expr",
    "parse_pattern",
    "parse_word",
    "red",
    "seq_matrix",
    "seq_matrix_direct",
    "seq_matrix_letter",
    "special_minor",
    "special_minor_from_matrix",
    "verify_witness",
    "witness_parikh_matrix",
    "witness_text",
    "witness_word",
]
