"""Matrix carrier and the max/min composition primitives.

Everything here is a pure function over immutable values.  Matrices wrap a
read-only float64 array plus optional row/column labels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, DomainError

__all__ = [
    "Matrix",
    "StateVector",
    "as_matrix",
    "elementwise_max",
    "elementwise_min",
    "compose_max_min",
    "compose_min_max",
    "compose_max_product",
    "transpose",
    "margins",
    "threshold",
    "is_fuzzy",
]


def _check_labels(labels, n, what):
    if labels is None:
        return None
    labels = tuple(str(x) for x in labels)
    if len(labels) != n:
        raise DimensionError(f"{what} labels: expected {n}, got {len(labels)}")
    return labels


class Matrix:
    """Immutable rectangular array of reals with optional labels.

    A 1-D input is read as a single row.  The wrapped array is never
    writeable, so a Matrix can be shared freely.
    """

    __slots__ = ("_values", "_row_labels", "_col_labels")

    def __init__(self, values, row_labels=None, col_labels=None):
        if isinstance(values, Matrix):
            row_labels = values.row_labels if row_labels is None else row_labels
            col_labels = values.col_labels if col_labels is None else col_labels
            values = values.values
        arr = np.array(values, dtype=float)
        if arr.ndim == 1:
            arr = arr[None, :]
        if arr.ndim != 2:
            raise DimensionError(f"matrix must be 2-D, got {arr.ndim}-D")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DimensionError(f"matrix must be non-empty, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise DomainError("matrix entries must be finite")
        arr.setflags(write=False)
        self._values = arr
        self._row_labels = _check_labels(row_labels, arr.shape[0], "row")
        self._col_labels = _check_labels(col_labels, arr.shape[1], "column")

    # construction helpers
    @classmethod
    def column(cls, v, labels=None) -> "Matrix":
        return cls(np.asarray(v, dtype=float).reshape(-1, 1), row_labels=labels)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(np.zeros((rows, cols)))

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def row_labels(self):
        return self._row_labels

    @property
    def col_labels(self):
        return self._col_labels

    @property
    def shape(self) -> tuple[int, int]:
        return self._values.shape

    @property
    def rows(self) -> int:
        return self._values.shape[0]

    @property
    def cols(self) -> int:
        return self._values.shape[1]

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def with_labels(self, row_labels=None, col_labels=None) -> "Matrix":
        return Matrix(self._values, row_labels, col_labels)

    def flatten(self) -> np.ndarray:
        return self._values.ravel().copy()

    def tolist(self) -> list:
        return self._values.tolist()

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._values
        return self._values.astype(dtype)

    def __getitem__(self, idx):
        return self._values[idx]

    def __len__(self):
        return self.rows

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and bool(np.array_equal(self._values, other._values))
            and self._row_labels == other._row_labels
            and self._col_labels == other._col_labels
        )

    __hash__ = None

    def allclose(self, other, atol: float = 1e-9) -> bool:
        other = np.asarray(as_matrix(other))
        return other.shape == self.shape and bool(np.allclose(self._values, other, rtol=0, atol=atol))

    def __repr__(self):
        body = np.array2string(self._values, precision=6, suppress_small=True)
        return f"Matrix({body})"


def as_matrix(x) -> Matrix:
    return x if isinstance(x, Matrix) else Matrix(x)


def is_fuzzy(a) -> bool:
    """True when every entry lies in [0, 1]."""
    v = as_matrix(a).values
    return bool(np.all((v >= 0) & (v <= 1)))


@dataclass(frozen=True)
class StateVector:
    """Binary on/off vector plus the set of positions held at 1."""

    bits: tuple
    clamp: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        bits = tuple(int(b) for b in np.asarray(self.bits).ravel())
        if any(b not in (0, 1) for b in bits):
            raise DomainError("state bits must be 0 or 1")
        clamp = frozenset(int(i) for i in self.clamp)
        for i in clamp:
            if not 0 <= i < len(bits):
                raise DomainError(f"clamp index {i} out of range for length {len(bits)}")
            if bits[i] != 1:
                raise DomainError(f"clamped position {i} must carry bit 1")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "clamp", clamp)

    @classmethod
    def from_on(cls, n: int, on: Iterable[int], clamp: Iterable[int] | None = None) -> "StateVector":
        """Vector of length n with the given indices on; clamps those indices by default."""
        on = list(on)
        bits = np.zeros(n, dtype=int)
        for i in on:
            if not 0 <= i < n:
                raise DomainError(f"index {i} out of range for length {n}")
            bits[i] = 1
        return cls(tuple(bits), frozenset(on if clamp is None else clamp))

    @classmethod
    def clamped(cls, bits) -> "StateVector":
        """Clamp every position that is on."""
        bits = tuple(int(b) for b in np.asarray(bits).ravel())
        return cls(bits, frozenset(i for i, b in enumerate(bits) if b == 1))

    @property
    def on(self) -> tuple:
        return tuple(i for i, b in enumerate(self.bits) if b)

    def as_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=float)

    def __len__(self):
        return len(self.bits)


def _same_shape(a: Matrix, b: Matrix, op: str):
    if a.shape != b.shape:
        raise DimensionError(f"{op}: shape mismatch {a.shape} vs {b.shape}")


def _inner(a: Matrix, b: Matrix, op: str):
    if a.cols != b.rows:
        raise DimensionError(f"{op}: inner dimensions differ, {a.shape} and {b.shape}")


def elementwise_max(a, b) -> Matrix:
    a, b = as_matrix(a), as_matrix(b)
    _same_shape(a, b, "elementwise_max")
    return Matrix(np.maximum(a.values, b.values), a.row_labels or b.row_labels, a.col_labels or b.col_labels)


def elementwise_min(a, b) -> Matrix:
    a, b = as_matrix(a), as_matrix(b)
    _same_shape(a, b, "elementwise_min")
    return Matrix(np.minimum(a.values, b.values), a.row_labels or b.row_labels, a.col_labels or b.col_labels)


def compose_max_min(a, b) -> Matrix:
    """result[i, k] = max_j min(a[i, j], b[j, k])."""
    a, b = as_matrix(a), as_matrix(b)
    _inner(a, b, "compose_max_min")
    cube = np.minimum(a.values[:, :, None], b.values[None, :, :])
    return Matrix(cube.max(axis=1), a.row_labels, b.col_labels)


def compose_min_max(a, b) -> Matrix:
    """result[i, k] = min_j max(a[i, j], b[j, k])."""
    a, b = as_matrix(a), as_matrix(b)
    _inner(a, b, "compose_min_max")
    cube = np.maximum(a.values[:, :, None], b.values[None, :, :])
    return Matrix(cube.min(axis=1), a.row_labels, b.col_labels)


def compose_max_product(a, b) -> Matrix:
    """result[i, k] = max_j a[i, j] * b[j, k]."""
    a, b = as_matrix(a), as_matrix(b)
    _inner(a, b, "compose_max_product")
    cube = a.values[:, :, None] * b.values[None, :, :]
    return Matrix(cube.max(axis=1), a.row_labels, b.col_labels)


def transpose(a) -> Matrix:
    a = as_matrix(a)
    return Matrix(a.values.T, a.col_labels, a.row_labels)


def margins(a, axis: str = "row") -> np.ndarray:
    """Ordinary sums along rows (one per row) or columns (one per column)."""
    v = as_matrix(a).values
    if axis == "row":
        return v.sum(axis=1)
    if axis in ("column", "col"):
        return v.sum(axis=0)
    raise DomainError(f"axis must be 'row' or 'column', got {axis!r}")


def threshold(v: Sequence[float], theta: float = 1.0) -> StateVector:
    """Bit i is on iff v[i] >= theta (inclusive)."""
    arr = np.asarray(v, dtype=float).ravel()
    return StateVector(tuple((arr >= theta).astype(int)))
