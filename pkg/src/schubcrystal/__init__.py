"""
Exact combinatorics for Schubert polynomials, Demazure characters and their
crystal structures on tableaux and reduced factorizations.
"""

from .crystals import (
    CrystalGraph, DemazureSubset, build_crystal, character, decompose_rfc,
    demazure_truncate, key_crystal, rf_crystal, rfc_crystal, ssyt_crystal,
    verify_demazure_isomorphism,
)
from .edelman_greene import (
    demazure_expansion_schubert, drop, eg_correspondence, eg_insert,
    eg_record_factorization, lift, schur_expansion_stanley, weak_eg,
)
from .factorizations import ReducedFactorization, enumerate_rf, enumerate_rfc
from .key_tableaux import KeyTableau, column_sort, column_sort_inverse, enumerate_sskt
from .permutations import (
    apply_word, canonical_reduced_word, inverse, reduced_words, sort_composition,
)
from .polynomials import (
    SparsePolynomial, demazure_character, schubert_bgg, schubert_via_rfc,
    schur_via_ssyt, stanley_polynomial,
)
from .ssyt import Ssyt, enumerate_ssyt

__version__ = "0.1.0"
