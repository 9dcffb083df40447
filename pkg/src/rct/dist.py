"""Finite probability distributions and joint distributions.

Values are immutable after construction (frozen dataclasses over read-only
numpy arrays) and every operation is a pure function, so everything here
is safe for unrestricted concurrent use.

Conventions:
  - symbols are opaque string labels; zero-probability symbols stay in the
    alphabet (support is computed on demand, which order-0 quantities need);
  - pair symbols produced by ``product`` join the factor labels with "⊗";
  - total mass must be within MASS_TOL of 1 unless renormalization is asked
    for explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

MASS_TOL = 1e-9

PAIR_SEP = "⊗"  # the circled-times pair-label separator


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.float64)
    arr.flags.writeable = False
    return arr


def _check_labels(labels: Sequence[str], what: str) -> tuple[str, ...]:
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise ValueError(f"duplicate {what} labels")
    return labels


@dataclass(frozen=True, eq=False)
class Distribution:
    """Probability mass function over a finite ordered alphabet."""

    labels: tuple[str, ...]
    probs: np.ndarray

    def __post_init__(self):
        labels = _check_labels(self.labels, "symbol")
        probs = np.asarray(self.probs, dtype=np.float64)
        if probs.ndim != 1 or len(labels) != probs.size:
            raise ValueError(
                f"got {len(labels)} labels but {probs.size} probabilities"
            )
        if probs.size == 0:
            raise ValueError("empty alphabet")
        if np.any(probs < 0) or not np.all(np.isfinite(probs)):
            raise ValueError("probabilities must be finite and >= 0")
        total = float(probs.sum())
        if abs(total - 1.0) > MASS_TOL:
            raise ValueError(
                f"total mass {total!r} differs from 1 by more than {MASS_TOL}"
            )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "probs", _freeze(probs))

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def support_mask(self) -> np.ndarray:
        return self.probs > 0.0

    @property
    def support_size(self) -> int:
        return int(np.count_nonzero(self.probs))

    @property
    def full_support(self) -> bool:
        return bool(np.all(self.probs > 0.0))

    def prob(self, label: str) -> float:
        return float(self.probs[self.labels.index(label)])

    def __repr__(self) -> str:
        pairs = ", ".join(f"{a}:{p:.6g}" for a, p in zip(self.labels, self.probs))
        return f"Distribution({pairs})"


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """Joint pmf of a pair of random variables over a product alphabet."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    matrix: np.ndarray

    def __post_init__(self):
        rows = _check_labels(self.row_labels, "row")
        cols = _check_labels(self.col_labels, "column")
        matrix = np.asarray(self.matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape != (len(rows), len(cols)):
            raise ValueError(
                f"matrix shape {matrix.shape} does not match "
                f"{len(rows)} rows x {len(cols)} columns"
            )
        if np.any(matrix < 0) or not np.all(np.isfinite(matrix)):
            raise ValueError("joint probabilities must be finite and >= 0")
        total = float(matrix.sum())
        if abs(total - 1.0) > MASS_TOL:
            raise ValueError(
                f"total mass {total!r} differs from 1 by more than {MASS_TOL}"
            )
        object.__setattr__(self, "row_labels", rows)
        object.__setattr__(self, "col_labels", cols)
        object.__setattr__(self, "matrix", _freeze(matrix))

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def flattened(self) -> Distribution:
        """The same pmf viewed as a distribution over pair symbols."""
        labels = tuple(
            f"{r}{PAIR_SEP}{c}" for r in self.row_labels for c in self.col_labels
        )
        return Distribution(labels, self.matrix.ravel())


def validate_order(q: float) -> float:
    """Validate an entropy/divergence order: a finite real >= 0."""
    q = float(q)
    if not np.isfinite(q):
        raise ValueError("order must be finite (infinite orders unsupported)")
    if q < 0:
        raise ValueError(f"order must be >= 0, got {q}")
    return q


def make_distribution(
    labels: Sequence[str],
    probs: Sequence[float],
    renormalize: bool = False,
) -> Distribution:
    """Build a validated Distribution, optionally dividing out the total mass.

    Without ``renormalize`` the masses must already sum to 1 within
    MASS_TOL; with it, any positive total is accepted and divided out.
    """
    arr = np.asarray(probs, dtype=np.float64)
    if arr.ndim != 1 or len(labels) != arr.size:
        raise ValueError(f"got {len(labels)} labels but {arr.size} probabilities")
    if arr.size and (np.any(arr < 0) or not np.all(np.isfinite(arr))):
        raise ValueError("probabilities must be finite and >= 0")
    if renormalize:
        total = float(arr.sum())
        if total <= 0.0:
            raise ValueError("cannot renormalize zero total mass")
        arr = arr / total
    return Distribution(tuple(labels), arr)


def uniform(n: int, prefix: str = "s") -> Distribution:
    """Uniform distribution on n symbols named prefix0..prefix{n-1}."""
    if n < 1:
        raise ValueError("alphabet size must be >= 1")
    labels = tuple(f"{prefix}{i}" for i in range(n))
    return Distribution(labels, np.full(n, 1.0 / n))


def product(p: Distribution, q: Distribution) -> Distribution:
    """Independent product: prob(a,b) = p_a * q_b over pair symbols."""
    labels = tuple(
        f"{a}{PAIR_SEP}{b}" for a in p.labels for b in q.labels
    )
    return Distribution(labels, np.multiply.outer(p.probs, q.probs).ravel())


def marginals(j: JointDistribution) -> tuple[Distribution, Distribution]:
    """Row-sum and column-sum marginal distributions of a joint pmf."""
    row = Distribution(j.row_labels, j.matrix.sum(axis=1))
    col = Distribution(j.col_labels, j.matrix.sum(axis=0))
    return row, col


def diagonal_joint(p: Distribution) -> JointDistribution:
    """Joint law of (X, X): p on the diagonal, zero elsewhere."""
    return JointDistribution(p.labels, p.labels, np.diag(p.probs))


def escort(p: Distribution, q: float) -> Distribution:
    """Escort reweighting p_a^q / sum_b p_b^q; zero-mass symbols stay zero.

    Computed in the log domain so that escort(escort(P, q), r) matches
    escort(P, q*r) to near machine precision even for large orders.
    """
    q = validate_order(q)
    if q == 0.0 and not p.full_support:
        raise ValueError("order-0 escort is undefined for zero-mass symbols")
    mask = p.support_mask
    logs = q * np.log(p.probs[mask])
    m = logs.max()
    weights = np.exp(logs - m)
    out = np.zeros(len(p))
    out[mask] = weights / weights.sum()
    return Distribution(p.labels, out)
