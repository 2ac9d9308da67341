"""Fuzzy associative memory recall by max-min composition."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import Matrix, as_matrix, is_fuzzy
from .errors import DimensionError, DomainError

__all__ = ["FamModel", "fam_backward", "fam_forward", "fam_rank"]


@dataclass(frozen=True)
class FamModel:
    """Rows are effect-side concepts, columns cause-side concepts."""

    matrix: Matrix
    row_labels: tuple | None = None
    col_labels: tuple | None = None

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if not is_fuzzy(m):
            raise DomainError("memory matrix entries must lie in [0, 1]")
        rl = self.row_labels if self.row_labels is not None else m.row_labels
        cl = self.col_labels if self.col_labels is not None else m.col_labels
        m = Matrix(m.values, rl, cl)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "row_labels", m.row_labels)
        object.__setattr__(self, "col_labels", m.col_labels)


def _fuzzy_vector(v, n: int, what: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float).ravel()
    if arr.size != n:
        raise DimensionError(f"{what}: expected length {n}, got {arr.size}")
    if np.any((arr < 0) | (arr > 1)):
        raise DomainError(f"{what}: entries must lie in [0, 1]")
    return arr


def fam_backward(model: FamModel, b) -> np.ndarray:
    """a_i = max_j min(m_ij, b_j)."""
    M = model.matrix.values
    b = _fuzzy_vector(b, M.shape[1], "fit vector over columns")
    return np.minimum(M, b[None, :]).max(axis=1)


def fam_forward(model: FamModel, a) -> np.ndarray:
    """b_j = max_i min(a_i, m_ij)."""
    M = model.matrix.values
    a = _fuzzy_vector(a, M.shape[0], "fit vector over rows")
    return np.minimum(a[:, None], M).max(axis=0)


def fam_rank(v, labels: Sequence[str] | None = None) -> list:
    """(label, value) pairs by decreasing value; ties keep index order."""
    v = np.asarray(v, dtype=float).ravel()
    if labels is None:
        labels = [str(i) for i in range(v.size)]
    if len(labels) != v.size:
        raise DimensionError(f"{len(labels)} labels for {v.size} values")
    order = sorted(range(v.size), key=lambda i: -v[i])   # sorted() is stable
    return [(labels[i], float(v[i])) for i in order]
