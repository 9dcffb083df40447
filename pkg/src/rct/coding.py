"""Idealized binary codes, compact codes, code mixing, and prefix-free codebooks.

An idealized code is just a length function: nonnegative real codeword
lengths whose Kraft sum Z = sum 2^(-l) is at most 1. Compact codes (Z = 1)
correspond one-to-one with probability distributions through l = -log2 p,
and ``compress`` moves any code onto that compact surface by the uniform
shift l + log2 Z.

``mix_codes`` implements the compression of a probabilistic mixture of two
compact codes: for q in [0, 1] the pointwise mix (1-q)k1 + qk2 compresses
by exactly q times the order-(1-q) divergence between the matched
distributions, and the shifted code is compact again.

Concrete codebooks here are binary and prefix-free; the canonical
constructor realizes any Kraft-feasible integer length profile
deterministically so outputs are golden-testable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .dist import Distribution, _check_labels, _freeze
from . import measures

KRAFT_TOL = 1e-9

#: lengths this far below zero are float dust from exact-arithmetic shifts
_LENGTH_DUST = 1e-12


@dataclass(frozen=True, eq=False)
class LengthFunction:
    """Real-valued codeword lengths (bits) satisfying Kraft's inequality."""

    labels: tuple[str, ...]
    lengths: np.ndarray

    def __post_init__(self):
        labels = _check_labels(self.labels, "symbol")
        lengths = np.asarray(self.lengths, dtype=np.float64)
        if lengths.ndim != 1 or lengths.size != len(labels):
            raise ValueError(
                f"got {len(labels)} labels but {lengths.size} lengths"
            )
        if lengths.size == 0:
            raise ValueError("empty alphabet")
        if not np.all(np.isfinite(lengths)) or np.any(lengths < 0):
            raise ValueError("lengths must be finite and >= 0")
        z = _kernels.kraft_sum(lengths)
        if z > 1.0 + KRAFT_TOL:
            raise ValueError(
                f"Kraft sum {z!r} exceeds 1 by more than {KRAFT_TOL}"
            )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "lengths", _freeze(lengths))

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True, eq=False)
class Codebook:
    """Concrete binary codewords, one per symbol, prefix-free."""

    labels: tuple[str, ...]
    codewords: tuple[str, ...]

    def __post_init__(self):
        labels = _check_labels(self.labels, "symbol")
        words = tuple(str(w) for w in self.codewords)
        if len(words) != len(labels):
            raise ValueError(
                f"got {len(labels)} labels but {len(words)} codewords"
            )
        for w in words:
            if not w or set(w) - {"0", "1"}:
                raise ValueError(f"codeword {w!r} is not a nonempty binary string")
        for i, w in enumerate(words):
            for j, v in enumerate(words):
                if i != j and v.startswith(w):
                    raise ValueError(
                        f"codeword {w!r} is a prefix of {v!r}; book is not prefix-free"
                    )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "codewords", words)

    def __len__(self) -> int:
        return len(self.labels)

    def length_function(self) -> LengthFunction:
        return LengthFunction(self.labels, [float(len(w)) for w in self.codewords])


# -- idealized-code operations ---------------------------------------------------

def kraft_sum(code: LengthFunction) -> float:
    """Partition sum Z = sum 2^(-l); in (0, 1] for every valid code."""
    return _kernels.kraft_sum(code.lengths)


def is_compact(code: LengthFunction, tol: float = KRAFT_TOL) -> bool:
    """Whether the Kraft sum equals 1 within tol."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return abs(kraft_sum(code) - 1.0) <= tol


def _clip_length_dust(lengths: np.ndarray) -> np.ndarray:
    return np.where((lengths < 0) & (lengths > -_LENGTH_DUST), 0.0, lengths)


def compress(code: LengthFunction) -> LengthFunction:
    """Uniformly shift to l + log2 Z: the compact version of the code.

    Never lengthens any codeword, and leaves compact codes fixed.
    """
    shift = math.log2(kraft_sum(code))
    return LengthFunction(code.labels, _clip_length_dust(code.lengths + shift))


def adapted_code(p: Distribution) -> LengthFunction:
    """The compact code l = -log2 p matched to a full-support distribution."""
    if not p.full_support:
        raise ValueError("cannot adapt a code to zero-probability symbols")
    return LengthFunction(p.labels, -np.log2(p.probs))


def dist_of_code(code: LengthFunction) -> Distribution:
    """The distribution p = 2^(-l) matched to a compact code."""
    if not is_compact(code):
        raise ValueError(
            f"code is not compact: Kraft sum {kraft_sum(code)!r}"
        )
    probs = np.exp2(-code.lengths)
    return Distribution(code.labels, probs / probs.sum())


def mix_codes(
    k1: LengthFunction, k2: LengthFunction, q: float
) -> tuple[LengthFunction, float]:
    """Compress the q-mixture of two compact codes.

    Returns the compact code (1-q)k1 + qk2 - gain together with the
    compression gain, which equals q times the order-(1-q) divergence
    between the codes' matched distributions. At the endpoints q = 0 and
    q = 1 the input code is returned unchanged with zero gain.
    """
    if k1.labels != k2.labels:
        raise ValueError("codes are over different alphabets")
    q = float(q)
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {q}")
    for code in (k1, k2):
        if not is_compact(code):
            raise ValueError(
                f"code is not compact: Kraft sum {kraft_sum(code)!r}"
            )
    if q == 0.0:
        return k1, 0.0
    if q == 1.0:
        return k2, 0.0
    p1 = dist_of_code(k1)
    p2 = dist_of_code(k2)
    divergence = measures.renyi_divergence(p1, p2, 1.0 - q)
    if not math.isfinite(divergence):
        raise ValueError("mixture gain is infinite (mutually singular codes)")
    gain = q * divergence
    mixed = (1.0 - q) * k1.lengths + q * k2.lengths - gain
    return LengthFunction(k1.labels, _clip_length_dust(mixed)), gain


def expected_length(p: Distribution, code: LengthFunction) -> float:
    """Average codeword length sum p_a l_a in bits."""
    if p.labels != code.labels:
        raise ValueError("distribution and code are over different alphabets")
    return float(p.probs @ code.lengths)


def shannon_integer_code(p: Distribution) -> LengthFunction:
    """Integer lengths ceil(-log2 p); average length within 1 bit of H(P)."""
    if not p.full_support:
        raise ValueError("cannot build integer code over zero-probability symbols")
    return LengthFunction(p.labels, np.ceil(-np.log2(p.probs)))


BLOCK_OUTCOME_CAP = 10 ** 6


def block_code_rate(p: Distribution, n: int, cap: int = BLOCK_OUTCOME_CAP) -> float:
    """Per-letter integer-code rate on the n-fold product source.

    Averages ceil(-log2 .) lengths over all |alphabet|^n blocks; the gap
    above H(P) is in [0, 1/n), reaching 0 exactly for dyadic sources.
    """
    if n < 1:
        raise ValueError("block size must be >= 1")
    if not p.full_support:
        raise ValueError("block coding requires full support")
    outcomes = len(p) ** n
    if outcomes > cap:
        raise ValueError(
            f"product alphabet has {outcomes} outcomes, above the cap {cap}"
        )
    return _kernels.block_integer_length_bits(p.probs, n) / n


# -- concrete codebooks ----------------------------------------------------------

def canonical_codebook(lengths: Sequence[int], labels: Sequence[str]) -> Codebook:
    """Deterministic prefix-free codebook realizing an integer length profile.

    Symbols are stable-sorted by (length, input position) and codewords
    assigned as the length-l binary expansion of the running total of
    2^(-l) over previously assigned words. Any Kraft-feasible profile of
    lengths >= 1 is accepted.
    """
    lens = [int(l) for l in lengths]
    if len(lens) != len(labels):
        raise ValueError(f"got {len(labels)} labels but {len(lens)} lengths")
    if not lens:
        raise ValueError("empty length profile")
    if any(l != orig for l, orig in zip(lens, lengths)) or min(lens) < 1:
        raise ValueError("codeword lengths must be integers >= 1")
    lmax = max(lens)
    # exact integer Kraft check: sum 2^(lmax - l) against 2^lmax
    if sum(1 << (lmax - l) for l in lens) > (1 << lmax):
        z = sum(2.0 ** (-l) for l in lens)
        raise ValueError(f"lengths violate Kraft's inequality (sum {z!r} > 1)")
    order = sorted(range(len(lens)), key=lambda i: (lens[i], i))
    words: list[str] = [""] * len(lens)
    code = 0
    prev_len = None
    for i in order:
        l = lens[i]
        if prev_len is not None:
            code = (code + 1) << (l - prev_len)
        words[i] = format(code, "b").zfill(l)
        prev_len = l
    return Codebook(tuple(labels), tuple(words))


def encode(book: Codebook, message: Sequence[str]) -> str:
    """Concatenate the codewords of a message."""
    table = dict(zip(book.labels, book.codewords))
    out = []
    for symbol in message:
        try:
            out.append(table[symbol])
        except KeyError:
            raise ValueError(f"symbol {symbol!r} is not in the codebook") from None
    return "".join(out)


def decode(book: Codebook, bits: str) -> list[str]:
    """Parse a bit string back into symbols (greedy parse, unique by prefix-freeness)."""
    if set(bits) - {"0", "1"}:
        raise ValueError("input is not a binary string")
    table = {w: a for a, w in zip(book.labels, book.codewords)}
    longest = max(len(w) for w in book.codewords)
    message: list[str] = []
    buf = ""
    for ch in bits:
        buf += ch
        if buf in table:
            message.append(table[buf])
            buf = ""
        elif len(buf) >= longest:
            raise ValueError(f"bits {buf!r} match no codeword")
    if buf:
        raise ValueError(f"dangling bits {buf!r} at end of input")
    return message


# -- codebook text format ----------------------------------------------------------

def format_codebook(book: Codebook) -> str:
    """Render a codebook as tab-separated label/codeword/length records."""
    lines = ["# label\tcodeword\tlength"]
    for label, word in zip(book.labels, book.codewords):
        lines.append(f"{label}\t{word}\t{len(word)}")
    return "\n".join(lines) + "\n"


def parse_codebook(text: str) -> Codebook:
    """Parse the tab-separated codebook format; '#' lines are comments."""
    labels: list[str] = []
    words: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ValueError(
                f"line {lineno}: expected 3 tab-separated fields, got {len(fields)}"
            )
        label, word, length = fields
        try:
            declared = int(length)
        except ValueError:
            raise ValueError(f"line {lineno}: length {length!r} is not an integer") from None
        if declared != len(word):
            raise ValueError(
                f"line {lineno}: declared length {declared} != |{word}| = {len(word)}"
            )
        labels.append(label)
        words.append(word)
    if not labels:
        raise ValueError("no codebook records found")
    return Codebook(tuple(labels), tuple(words))
