"""rct: idealized coding and order-q information measures over finite alphabets.

The library side of the toolkit: finite distributions (``dist``), idealized
and concrete binary codes (``coding``), Shannon/Renyi/Tsallis measures
(``measures``), and seeded verification suites (``harness``). The ``rct``
command line wraps all of it.
"""

from .dist import (
    Distribution,
    JointDistribution,
    diagonal_joint,
    escort,
    make_distribution,
    marginals,
    product,
    uniform,
)
from .coding import (
    Codebook,
    LengthFunction,
    adapted_code,
    block_code_rate,
    canonical_codebook,
    compress,
    decode,
    dist_of_code,
    encode,
    expected_length,
    format_codebook,
    is_compact,
    kraft_sum,
    mix_codes,
    parse_codebook,
    shannon_integer_code,
)
from .measures import (
    entropy_from_divergence,
    kl_divergence,
    mutual_information,
    renyi_divergence,
    renyi_entropy,
    renyi_mutual_information,
    shannon_entropy,
    tsallis_entropy,
)
from .harness import PropertyReport, report_to_json

__version__ = "0.1.0"

__all__ = [
    "Distribution",
    "JointDistribution",
    "diagonal_joint",
    "escort",
    "make_distribution",
    "marginals",
    "product",
    "uniform",
    "Codebook",
    "LengthFunction",
    "adapted_code",
    "block_code_rate",
    "canonical_codebook",
    "compress",
    "decode",
    "dist_of_code",
    "encode",
    "expected_length",
    "format_codebook",
    "is_compact",
    "kraft_sum",
    "mix_codes",
    "parse_codebook",
    "shannon_integer_code",
    "entropy_from_divergence",
    "kl_divergence",
    "mutual_information",
    "renyi_divergence",
    "renyi_entropy",
    "renyi_mutual_information",
    "shannon_entropy",
    "tsallis_entropy",
    "PropertyReport",
    "report_to_json",
    "__version__",
]
