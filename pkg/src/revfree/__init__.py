"""Words avoiding reversed subwords: construction, checking, and search."""

__version__ = "0.1.0"

from .avoidance import (
    AvoidanceQuery,
    ConflictWitness,
    SquareWitness,
    find_avoiding_word,
    find_conflict,
    has_reversal_conflict,
    is_valid,
    reduction_equivalence,
    verify_unavoidable,
)
from .morphisms import (
    MarkerReport,
    Morphism,
    SquarefreeMorphismResult,
    all_words_universe,
    apply,
    format_morphism,
    image_factor_set,
    marker_sync_check,
    parse_morphism,
    periodicity_transport_check,
    squarefree_morphism_test,
    squarefree_words_universe,
)
from .search import (
    CharacterizationReport,
    ExceedsCap,
    Finite,
    SearchOutcome,
    STANDARD_PREAMBLES,
    characterization_facts,
    enumerate_valid,
    forced_extension_check,
    match_ultimately_periodic,
    max_valid_length,
    rotation_family,
)
from .words import (
    Builtin,
    FactorSet,
    MorphicImage,
    Periodic,
    StreamSpec,
    Word,
    complement,
    cyclic_shifts,
    factors,
    is_squarefree,
    periodic_factors,
    reverse,
    stream_prefix,
    stream_symbols,
)

__all__ = [
    "AvoidanceQuery",
    "Builtin",
    "CharacterizationReport",
    "ConflictWitness",
    "ExceedsCap",
    "FactorSet",
    "Finite",
    "MarkerReport",
    "MorphicImage",
    "Morphism",
    "Periodic",
    "STANDARD_PREAMBLES",
    "SearchOutcome",
    "SquareWitness",
    "SquarefreeMorphismResult",
    "StreamSpec",
    "Word",
    "all_words_universe",
    "apply",
    "characterization_facts",
    "complement",
    "cyclic_shifts",
    "enumerate_valid",
    "factors",
    "find_avoiding_word",
    "find_conflict",
    "forced_extension_check",
    "format_morphism",
    "has_reversal_conflict",
    "image_factor_set",
    "is_squarefree",
    "is_valid",
    "marker_sync_check",
    "match_ultimately_periodic",
    "max_valid_length",
    "parse_morphism",
    "periodic_factors",
    "periodicity_transport_check",
    "reduction_equivalence",
    "reverse",
    "rotation_family",
    "squarefree_morphism_test",
    "squarefree_words_universe",
    "stream_prefix",
    "stream_symbols",
    "verify_unavoidable",
]
