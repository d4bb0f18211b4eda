"""Monodromic complexes over the diagrammatic Hecke category."""

from .complexes import (
    ComplexError,
    FMComplex,
    LMComplex,
    character_class,
    cone,
    d_uhom,
    find_homotopy,
    fm_check,
    forget_fm_to_lm,
    forget_kb_to_lm,
    forget_lm_to_kb,
    homotopy_space,
    is_chain_map,
    lemma_split_check,
    lm_check,
    monodromy_mu,
    polynomial_forcing_check,
    right_mult_uhom,
)
from .conventions import FLAGS, FROZEN, SignConvention, current, single_flips, using
from .uhom import HSeq, UHomElt, theta

__all__ = [
    "FLAGS", "FROZEN", "ComplexError", "FMComplex", "HSeq", "LMComplex", "SignConvention", "UHomElt",
    "character_class", "cone", "current", "d_uhom", "find_homotopy", "fm_check", "forget_fm_to_lm",
    "forget_kb_to_lm", "forget_lm_to_kb", "homotopy_space", "is_chain_map", "lemma_split_check", "lm_check",
    "monodromy_mu", "polynomial_forcing_check", "right_mult_uhom", "single_flips", "theta", "using",
]
