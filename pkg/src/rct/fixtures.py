"""Built-in demo fixtures: the English-vowel codebook and dyadic sources."""

from __future__ import annotations

import numpy as np

from .coding import Codebook
from .dist import Distribution

#: six-vowel demo alphabet, in codebook order
VOWEL_LABELS = ("a", "e", "i", "o", "u", "y")

#: historical prefix-free assignment for the vowels (lengths 2,2,2,3,4,4)
VOWEL_CODEWORDS = ("11", "00", "01", "100", "1010", "1011")


def vowel_codebook() -> Codebook:
    return Codebook(VOWEL_LABELS, VOWEL_CODEWORDS)


def vowel_distribution() -> Distribution:
    """The dyadic source matched to the vowel codebook's lengths."""
    return Distribution(
        VOWEL_LABELS,
        np.array([0.25, 0.25, 0.25, 0.125, 0.0625, 0.0625]),
    )


def dyadic_distribution() -> Distribution:
    """Four-symbol dyadic source with entropy exactly 1.75 bits."""
    return Distribution(("a", "b", "c", "d"), np.array([0.5, 0.25, 0.125, 0.125]))
