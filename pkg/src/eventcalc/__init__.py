"""Reasoning about how long things happened and how much of something was
involved, over sorted attribute-value descriptions of events."""

from .avm import Avm, Clash, Var, alpha_equal, avm, get_path, measure, rename_fresh, subsumes, unify
from .avmtext import canonical_text, parse_text
from .calculus import (
    Entailment, Kb, RateFact, duration_weaken, entails, existential_weaken, path_measure_equiv,
    quantity_derive,
)
from .checker import Diagnostic, adverbial_compatibility, check
from .grammar import ParseError, RealizeError, SortalError, paraphrases, parse_sentence, realize
from .lexicon import Lexicon
from .sorts import delimited_counterpart, is_continuum, sort_leq, sort_meet
from .units import Measure, convert, measure_leq

__all__ = [
    "Avm", "Clash", "Diagnostic", "Entailment", "Kb", "Lexicon", "Measure", "ParseError",
    "RateFact", "RealizeError", "SortalError", "Var", "adverbial_compatibility", "alpha_equal",
    "avm", "canonical_text", "check", "convert", "delimited_counterpart", "duration_weaken",
    "entails", "existential_weaken", "get_path", "is_continuum", "measure", "measure_leq",
    "paraphrases", "parse_sentence", "parse_text", "path_measure_equiv", "quantity_derive",
    "realize", "rename_fresh", "sort_leq", "sort_meet", "subsumes", "unify",
]
