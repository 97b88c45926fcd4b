"""Interpretations of words over finite word sets, the reduction calculus
built on them, and desk-scale checks on S-adic subshifts."""

__version__ = "0.1.0"

from .words import Alphabet, Word, WordError, WordSet
from .morphism import Morphism
from .sadic import DirectiveSequence, LanguageTable, level_language
from .interp import (
    DoubleInterpretation, Interpretation, enumerate_interpretations, extract_simple, is_simple,
)
from .reduction import build_B, classify, max_irreducible_subset
from .asymptotics import count_asymptotic_classes, verify_covering
from .automorphisms import enumerate_automorphism_candidates, quotient_census
