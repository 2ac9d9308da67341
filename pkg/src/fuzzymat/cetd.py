"""Time-dependent data pipeline: raw counts -> averages -> refined {-1,0,1} -> combined.

The stages are exposed separately (``atd``, ``column_stats``, ``rtd``,
``cetd``) and chained by ``cetd_pipeline``.  ``CetdTransformer`` wraps the
chain in the scikit-learn transformer API.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .algebra import Matrix, as_matrix, margins
from .errors import DimensionError, DomainError

__all__ = [
    "SD_MODES",
    "RawDataTable",
    "ColumnStats",
    "CetdReport",
    "atd",
    "column_stats",
    "rtd",
    "cetd",
    "cetd_pipeline",
    "CetdTransformer",
]

SD_MODES = ("sample_n_minus_1", "abs_deviation")


@dataclass(frozen=True)
class RawDataTable:
    """Counts per (group, attribute) with the length of each group's interval."""

    counts: Matrix
    interval_lengths: tuple
    group_labels: tuple | None = None
    attribute_labels: tuple | None = None

    def __post_init__(self):
        counts = as_matrix(self.counts)
        lengths = tuple(float(x) for x in np.asarray(self.interval_lengths, dtype=float).ravel())
        if len(lengths) != counts.rows:
            raise DimensionError(f"{len(lengths)} interval lengths for {counts.rows} groups")
        if any(x <= 0 for x in lengths):
            raise DomainError("interval lengths must be positive")
        if np.any(counts.values < 0):
            raise DomainError("counts must be non-negative")
        groups = self.group_labels if self.group_labels is not None else counts.row_labels
        attrs = self.attribute_labels if self.attribute_labels is not None else counts.col_labels
        counts = Matrix(counts.values, groups, attrs)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "interval_lengths", lengths)
        object.__setattr__(self, "group_labels", counts.row_labels)
        object.__setattr__(self, "attribute_labels", counts.col_labels)


@dataclass(frozen=True)
class ColumnStats:
    """Per-column mean and spread.

    ``decimals`` switches on hand-calculation emulation: means, spreads and
    the band edges built from them are rounded to that many places.
    """

    means: np.ndarray
    sds: np.ndarray
    sd_mode: str = "sample_n_minus_1"
    decimals: int | None = None

    def __post_init__(self):
        means = np.asarray(self.means, dtype=float).ravel()
        sds = np.asarray(self.sds, dtype=float).ravel()
        if means.shape != sds.shape:
            raise DimensionError("means and sds differ in length")
        if np.any(sds < 0):
            raise DomainError("standard deviations must be non-negative")
        if self.sd_mode not in SD_MODES:
            raise DomainError(f"unknown sd_mode {self.sd_mode!r}")
        object.__setattr__(self, "means", means)
        object.__setattr__(self, "sds", sds)


@dataclass(frozen=True)
class CetdReport:
    atd: Matrix
    stats: ColumnStats
    rtds: list          # (alpha, Matrix, row_sums) per alpha, ascending alpha
    cetd: Matrix
    cetd_row_sums: np.ndarray


def atd(raw: RawDataTable) -> Matrix:
    """Divide each group's counts by its interval length."""
    lengths = np.asarray(raw.interval_lengths, dtype=float)
    return Matrix(raw.counts.values / lengths[:, None], raw.counts.row_labels, raw.counts.col_labels)


def column_stats(m, sd_mode: str = "sample_n_minus_1", decimals: int | None = None) -> ColumnStats:
    """Column means and spreads.

    sample_n_minus_1: sqrt(sum (x - mu)^2 / (n - 1)).
    abs_deviation: with d = |x - mu|, sqrt(mean(d^2) - mean(d)^2).
    """
    v = as_matrix(m).values
    n = v.shape[0]
    mu = v.mean(axis=0)
    if sd_mode == "sample_n_minus_1":
        if n < 2:
            raise DomainError("sample standard deviation needs at least two rows")
        sd = v.std(axis=0, ddof=1)
    elif sd_mode == "abs_deviation":
        d = np.abs(v - mu)
        sd = np.sqrt(np.clip((d ** 2).mean(axis=0) - d.mean(axis=0) ** 2, 0.0, None))
    else:
        raise DomainError(f"unknown sd_mode {sd_mode!r}; expected one of {SD_MODES}")
    if decimals is not None:
        mu, sd = np.round(mu, decimals), np.round(sd, decimals)
    return ColumnStats(mu, sd, sd_mode, decimals)


def band_edges(stats: ColumnStats, alpha: float):
    """Lower and upper band edges mu -+ alpha*sd (rounded in hand-calculation mode)."""
    lo = stats.means - alpha * stats.sds
    hi = stats.means + alpha * stats.sds
    if stats.decimals is not None:
        lo, hi = np.round(lo, stats.decimals), np.round(hi, stats.decimals)
    return lo, hi


def rtd(atd_m, stats: ColumnStats, alpha: float) -> Matrix:
    """Map each average to -1 / 0 / +1 against the band mu -+ alpha*sd.

    The -1 test runs first, so a zero-width band sends ties to -1.
    """
    if not 0 <= alpha <= 1:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    a = as_matrix(atd_m)
    if a.cols != stats.means.size:
        raise DimensionError(f"stats cover {stats.means.size} columns, matrix has {a.cols}")
    lo, hi = band_edges(stats, alpha)
    v = a.values
    e = np.where(v <= lo, -1.0, np.where(v >= hi, 1.0, 0.0))
    return Matrix(e, a.row_labels, a.col_labels)


def cetd(rtds: Sequence) -> tuple[Matrix, np.ndarray]:
    """Entrywise sum of refined matrices, with its row sums."""
    mats = [as_matrix(r) for r in rtds]
    if not mats:
        raise DomainError("cetd needs at least one refined matrix")
    shape = mats[0].shape
    for m in mats[1:]:
        if m.shape != shape:
            raise DimensionError(f"refined matrices differ in shape: {shape} vs {m.shape}")
    total = Matrix(np.sum([m.values for m in mats], axis=0), mats[0].row_labels, mats[0].col_labels)
    return total, margins(total, "row")


def cetd_pipeline(raw: RawDataTable, alphas: Sequence[float], sd_mode: str = "sample_n_minus_1",
                  decimals: int | None = None) -> CetdReport:
    """Run every stage and keep the intermediates."""
    alphas = sorted(float(a) for a in alphas)
    if not alphas:
        raise DomainError("at least one alpha is required")
    averages = atd(raw)
    stats = column_stats(averages, sd_mode, decimals)
    refined = []
    for al in alphas:
        r = rtd(averages, stats, al)
        refined.append((al, r, margins(r, "row")))
    total, sums = cetd([r for _, r, _ in refined])
    return CetdReport(averages, stats, refined, total, sums)


class CetdTransformer(BaseEstimator, TransformerMixin):
    """Counts matrix -> combined {-1,0,1} effect matrix.

    fit learns column statistics from the interval-averaged counts; transform
    refines new counts (same groups) against them for every alpha and sums.
    """

    def __init__(self, interval_lengths=None, alphas=(0.15, 0.35, 0.45, 0.75),
                 sd_mode="sample_n_minus_1", decimals=None):
        self.interval_lengths = interval_lengths
        self.alphas = alphas
        self.sd_mode = sd_mode
        self.decimals = decimals

    def _averages(self, X):
        X = np.asarray(X, dtype=float)
        if X.ndim != 2:
            raise DimensionError("expected a 2-D counts matrix")
        lengths = np.ones(X.shape[0]) if self.interval_lengths is None else self.interval_lengths
        return atd(RawDataTable(X, lengths))

    def fit(self, X, y=None):
        averages = self._averages(X)
        self.stats_ = column_stats(averages, self.sd_mode, self.decimals)
        self.n_features_in_ = averages.cols
        return self

    def transform(self, X):
        check_is_fitted(self, "stats_")
        averages = self._averages(X)
        total, _ = cetd([rtd(averages, self.stats_, a) for a in sorted(self.alphas)])
        return total.values.copy()
