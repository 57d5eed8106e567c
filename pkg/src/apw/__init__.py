"""Anti-power words toolbox.

Repetition exponents and power detection for finite words, checkers and
enumeration for k-anti-power words, morphism parsing and fixed points, and
decision procedures for square-free and 3-anti-power morphisms.  The same
functionality is exposed on the command line as ``apw``.
"""

from .words import (
    Alphabet,
    FractionalPowerOccurrence,
    as_alphabet,
    factor,
    find_power_geq,
    find_square,
    is_k_power_free,
    is_primitive,
    max_exponent,
    primitive_root,
    validate_word,
)
from .antipower import (
    AntiPowerViolation,
    check_k_anti_power,
    check_k_anti_power_naive,
    count_anti_power_sequences,
    enumerate_k_anti_power,
    is_anti_power_sequence,
)
from .morphisms import (
    Morphism,
    MorphismParseError,
    MorphismProfile,
    apply,
    fixed_point_prefix,
    iterate,
    load_morphism,
    parse_morphism,
    profile,
    serialize_morphism,
)
from .decide import (
    Decision,
    MorphismWitness,
    SeamEmbedding,
    anti_power_up_to,
    decide_3_anti_power,
    find_seam_embedding,
    square_free_bound,
    test_square_free_morphism,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AntiPowerViolation",
    "Decision",
    "FractionalPowerOccurrence",
    "Morphism",
    "MorphismParseError",
    "MorphismProfile",
    "MorphismWitness",
    "SeamEmbedding",
    "anti_power_up_to",
    "apply",
    "as_alphabet",
    "check_k_anti_power",
    "check_k_anti_power_naive",
    "count_anti_power_sequences",
    "decide_3_anti_power",
    "enumerate_k_anti_power",
    "factor",
    "find_power_geq",
    "find_seam_embedding",
    "find_square",
    "fixed_point_prefix",
    "is_anti_power_sequence",
    "is_k_power_free",
    "is_primitive",
    "iterate",
    "load_morphism",
    "max_exponent",
    "parse_morphism",
    "primitive_root",
    "profile",
    "serialize_morphism",
    "square_free_bound",
    "test_square_free_morphism",
    "validate_word",
]
