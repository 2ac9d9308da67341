"""Fuzzy relational maps over disjoint domain and range node sets.

Inference bounces a binary state between the two spaces through the
relational matrix and its transpose.  The second half of the module turns a
real-valued relational matrix into graded memberships with a linear ramp
around each column mean.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .algebra import Matrix, StateVector, as_matrix, margins, threshold
from .cetd import ColumnStats, band_edges, column_stats
from .errors import DimensionError, DomainError, NonTerminationError
from .fcm import detect_recurrence

__all__ = [
    "Frm",
    "HiddenPatternPair",
    "frm_hidden_pattern",
    "frm_combine",
    "average_matrix",
    "frm_fuzzify",
    "frm_membership_grades",
    "frm_combined_fuzzy",
    "FuzzifyTransformer",
]


@dataclass(frozen=True)
class Frm:
    relation: Matrix          # domain rows x range columns
    domain_labels: tuple | None = None
    range_labels: tuple | None = None
    theta: float = 1.0

    def __post_init__(self):
        rel = as_matrix(self.relation)
        dl = self.domain_labels if self.domain_labels is not None else rel.row_labels
        rl = self.range_labels if self.range_labels is not None else rel.col_labels
        rel = Matrix(rel.values, dl, rl)
        object.__setattr__(self, "relation", rel)
        object.__setattr__(self, "domain_labels", rel.row_labels)
        object.__setattr__(self, "range_labels", rel.col_labels)
        object.__setattr__(self, "theta", float(self.theta))

    @property
    def shape(self):
        return self.relation.shape


@dataclass(frozen=True)
class HiddenPatternPair:
    """Outcome of a bidirectional run.

    ``pairs`` holds the (domain, range) state after every one-way exchange,
    starting with the input and its first image.  ``cycle`` is the recurrent
    segment; for a fixed pair it is the single settled pair.
    """

    kind: str                 # "fixed_pair" or "limit_cycle"
    pairs: list
    cycle: list
    steps: int
    start_space: str

    @property
    def final(self):
        return self.pairs[-1]


def frm_hidden_pattern(f: Frm, initial, start_space: str = "domain",
                       max_steps: int | None = None) -> HiddenPatternPair:
    """Alternate s.E and s.E^T with thresholding until a pair repeats.

    Only the starting space is clamped.  A repeat of the immediately
    preceding pair is a fixed pair, except when that pair is the opening one:
    then the input reproduced itself through the other space, which is the
    loop A1 -> B1 -> A1 and is reported as a limit cycle.
    """
    E = f.relation.values
    if start_space == "domain":
        fwd, back = E, E.T
    elif start_space == "range":
        fwd, back = E.T, E
    else:
        raise DomainError(f"start_space must be 'domain' or 'range', got {start_space!r}")
    s = initial if isinstance(initial, StateVector) else StateVector.clamped(initial)
    if len(s) != fwd.shape[0]:
        raise DimensionError(f"initial length {len(s)} does not match the {start_space} space ({fwd.shape[0]})")
    n_pairs = fwd.shape[0] + fwd.shape[1]
    if max_steps is None:
        max_steps = 2 ** min(n_pairs, 60) + 1

    def orient(a, b):
        return (a, b) if start_space == "domain" else (b, a)

    def clamp(raw):
        bits = np.array(threshold(raw, f.theta).bits)
        for i in s.clamp:
            bits[i] = 1
        return StateVector(tuple(bits), s.clamp)

    cur_s = s
    cur_o = threshold(cur_s.as_array() @ fwd, f.theta)
    pairs = [orient(cur_s, cur_o)]
    key = lambda p: (p[0].bits, p[1].bits)
    for step in range(1, max_steps + 1):
        if step % 2 == 1:
            cur_s = clamp(cur_o.as_array() @ back)
        else:
            cur_o = threshold(cur_s.as_array() @ fwd, f.theta)
        pairs.append(orient(cur_s, cur_o))
        j = detect_recurrence(pairs, key)
        if j is None:
            continue
        if j == len(pairs) - 2 and j > 0:
            return HiddenPatternPair("fixed_pair", pairs, [pairs[-1]], step, start_space)
        return HiddenPatternPair("limit_cycle", pairs, pairs[j:-1], step, start_space)
    raise NonTerminationError(f"no recurrent pair within {max_steps} exchanges")


def frm_combine(maps: Sequence[Frm], theta: float = 1.0) -> Frm:
    maps = list(maps)
    if not maps:
        raise DomainError("nothing to combine")
    first = maps[0]
    for m in maps[1:]:
        if m.shape != first.shape:
            raise DimensionError(f"relational matrices differ in shape: {first.shape} vs {m.shape}")
        if first.domain_labels and m.domain_labels and m.domain_labels != first.domain_labels:
            raise DimensionError("domain node orderings differ")
        if first.range_labels and m.range_labels and m.range_labels != first.range_labels:
            raise DimensionError("range node orderings differ")
    total = np.sum([m.relation.values for m in maps], axis=0)
    return Frm(Matrix(total), first.domain_labels, first.range_labels, theta)


def average_matrix(m, divisor: float = 2.0) -> Matrix:
    """Scalar-divide preprocessing applied before fuzzification."""
    if divisor == 0:
        raise DomainError("divisor must be non-zero")
    m = as_matrix(m)
    return Matrix(m.values / divisor, m.row_labels, m.col_labels)


def frm_fuzzify(avg, stats: ColumnStats, alpha: float) -> Matrix:
    """0 below mu - alpha*sd, 1 above mu + alpha*sd, linear in between.

    With a zero-width band the 0 branch wins ties.
    """
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    a = as_matrix(avg)
    if a.cols != stats.means.size:
        raise DimensionError(f"stats cover {stats.means.size} columns, matrix has {a.cols}")
    lo, hi = band_edges(stats, alpha)
    v = a.values
    width = hi - lo
    ramp = (v - lo) / np.where(width > 0, width, 1.0)
    b = np.where(v <= lo, 0.0, np.where(v >= hi, 1.0, ramp))
    return Matrix(np.clip(b, 0.0, 1.0), a.row_labels, a.col_labels)


def frm_membership_grades(row_sums) -> np.ndarray:
    """Min-max rescale row sums onto [0, 1]."""
    r = np.asarray(row_sums, dtype=float).ravel()
    if r.size < 2:
        raise DomainError("need at least two row sums")
    lo, hi = r.min(), r.max()
    if hi == lo:
        raise DomainError("all row sums are equal; grades are undefined")
    return np.clip((r - lo) / (hi - lo), 0.0, 1.0)


def frm_combined_fuzzy(avg, stats: ColumnStats, alpha_grid: Sequence[float]):
    """Sum of fuzzified matrices over the grid, its row sums and grades."""
    grid = list(alpha_grid)
    if not grid:
        raise DomainError("alpha grid is empty")
    a = as_matrix(avg)
    total = np.sum([frm_fuzzify(a, stats, al).values for al in grid], axis=0)
    combined = Matrix(total, a.row_labels, a.col_labels)
    sums = margins(combined, "row")
    return combined, sums, frm_membership_grades(sums)


class FuzzifyTransformer(BaseEstimator, TransformerMixin):
    """Relational matrix -> combined graded matrix summed over ``alphas``."""

    def __init__(self, alphas=(0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0),
                 divisor=1.0, sd_mode="abs_deviation"):
        self.alphas = alphas
        self.divisor = divisor
        self.sd_mode = sd_mode

    def fit(self, X, y=None):
        avg = average_matrix(np.asarray(X, dtype=float), self.divisor)
        self.stats_ = column_stats(avg, self.sd_mode)
        self.n_features_in_ = avg.cols
        return self

    def transform(self, X):
        check_is_fitted(self, "stats_")
        avg = average_matrix(np.asarray(X, dtype=float), self.divisor)
        combined, _, _ = frm_combined_fuzzy(avg, self.stats_, self.alphas)
        return combined.values.copy()
