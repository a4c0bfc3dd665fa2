"""Skein resolutions and the normalized genus and width of link diagrams."""

from floerwidth.skein.normalized import (
    CircleCounts,
    NormalizedInvariants,
    SkeinCheck,
    SkeinWidthEvaluator,
    deviating_crossing,
    normalized_genus,
    normalized_width,
    skein_check,
    width_via_skein,
)
from floerwidth.skein.resolution import SkeinQuadruple, resolve, splice_crossing, splicing_for

__all__ = [
    "CircleCounts",
    "NormalizedInvariants",
    "SkeinCheck",
    "SkeinQuadruple",
    "SkeinWidthEvaluator",
    "deviating_crossing",
    "normalized_genus",
    "normalized_width",
    "resolve",
    "skein_check",
    "splice_crossing",
    "splicing_for",
    "width_via_skein",
]
