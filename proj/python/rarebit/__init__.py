"""Automatic sequences, polynomial rarefaction, and unpredictability measures."""

from ._core import (
    __version__,
    bound_certificate,
    correlation2,
    count_pattern,
    digit_sum,
    eval_poly,
    expansion_complexity,
    generate,
    moc,
    moc_profile,
    pattern_annihilator,
    pattern_value,
    pattern_witness,
    subword_complexity,
    thue_morse,
    thue_morse_annihilator,
    tm_witness,
    to_digits,
    verify_annihilator,
    CertificateRefused,
    SearchExhausted,
)

__all__ = [
    "__version__",
    "bound_certificate",
    "correlation2",
    "count_pattern",
    "digit_sum",
    "eval_poly",
    "expansion_complexity",
    "generate",
    "moc",
    "moc_profile",
    "pattern_annihilator",
    "pattern_value",
    "pattern_witness",
    "subword_complexity",
    "thue_morse",
    "thue_morse_annihilator",
    "tm_witness",
    "to_digits",
    "verify_annihilator",
    "CertificateRefused",
    "SearchExhausted",
]
