"""Discrete bidirectional associative memory.

Two neuron fields X (n) and Y (p) share a synaptic matrix M.  Signals are
binary thresholds that keep their previous value on an exact tie.  Updates
alternate X -> Y through M and Y -> X through M^T until the signal pair
stops changing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import Matrix, StateVector, as_matrix
from .errors import DimensionError, DomainError, NonTerminationError

__all__ = ["BamModel", "BamTrace", "bam_signal", "bam_run", "bam_indirect", "bam_indirect_bound"]


def _vec(v, n, what):
    if v is None:
        return np.zeros(n)
    arr = np.asarray(v, dtype=float).ravel()
    if arr.size == 1 and n != 1:
        arr = np.full(n, float(arr[0]))
    if arr.size != n:
        raise DimensionError(f"{what}: expected length {n}, got {arr.size}")
    return arr


@dataclass(frozen=True)
class BamModel:
    synaptic: Matrix
    thresholds_U: np.ndarray | None = None   # X-field thresholds
    thresholds_V: np.ndarray | None = None   # Y-field thresholds
    inputs_I: np.ndarray | None = None       # external input to X
    inputs_J: np.ndarray | None = None       # external input to Y
    scale: float | None = None

    def __post_init__(self):
        m = as_matrix(self.synaptic)
        n, p = m.shape
        scale = float(np.abs(m.values).max()) if self.scale is None else float(self.scale)
        if scale <= 0 and np.any(m.values != 0):
            raise DomainError("scale must be positive")
        if np.any(np.abs(m.values) > scale):
            raise DomainError(f"synaptic entries exceed the scale [-{scale:g}, {scale:g}]")
        object.__setattr__(self, "synaptic", m)
        object.__setattr__(self, "thresholds_U", _vec(self.thresholds_U, n, "thresholds_U"))
        object.__setattr__(self, "thresholds_V", _vec(self.thresholds_V, p, "thresholds_V"))
        object.__setattr__(self, "inputs_I", _vec(self.inputs_I, n, "inputs_I"))
        object.__setattr__(self, "inputs_J", _vec(self.inputs_J, p, "inputs_J"))
        object.__setattr__(self, "scale", scale)

    @property
    def shape(self):
        return self.synaptic.shape

    def transposed(self) -> "BamModel":
        """Same memory seen from the Y side (fields swapped)."""
        return BamModel(self.synaptic.T, self.thresholds_V, self.thresholds_U,
                        self.inputs_J, self.inputs_I, self.scale)


@dataclass(frozen=True)
class BamTrace:
    """Signal pairs after each one-way exchange (index 0 is the input signal)."""

    kind: str               # "fixed_pair" or "limit_cycle"
    pairs: list             # (x_signal, y_signal)
    activations: list       # raw activation vector produced by each exchange
    fixed_pair: tuple | None
    settle_step: int | None
    steps: int
    start_side: str


def bam_signal(x, thresholds, prev) -> StateVector:
    """1 above threshold, 0 below, previous bit on an exact tie."""
    x = np.asarray(x, dtype=float).ravel()
    u = _vec(thresholds, x.size, "thresholds")
    prev_bits = np.asarray(prev.bits if isinstance(prev, StateVector) else prev, dtype=int).ravel()
    if prev_bits.size != x.size:
        raise DimensionError(f"previous signal has length {prev_bits.size}, activation {x.size}")
    bits = np.where(x > u, 1, np.where(x < u, 0, prev_bits))
    return StateVector(tuple(bits))


def _exchange(model: BamModel, side: str, sig: StateVector, prev: StateVector):
    """Drive the opposite field of ``side`` from its signal."""
    M = model.synaptic.values
    if side == "X":
        raw = sig.as_array() @ M + model.inputs_J
        return raw, bam_signal(raw, model.thresholds_V, prev)
    raw = sig.as_array() @ M.T + model.inputs_I
    return raw, bam_signal(raw, model.thresholds_U, prev)


def bam_run(model: BamModel, initial: Sequence[float], start_side: str = "X",
            max_steps: int | None = None) -> BamTrace:
    """Synchronous bidirectional recall from a raw activation on one side.

    Stops once an exchange leaves the pair unchanged (fixed pair) or a
    (pair, direction) state recurs (limit cycle).
    """
    if start_side not in ("X", "Y"):
        raise DomainError(f"start_side must be 'X' or 'Y', got {start_side!r}")
    n, p = model.shape
    init = np.asarray(initial, dtype=float).ravel()
    if init.size != (n if start_side == "X" else p):
        raise DimensionError(f"initial activation length {init.size} does not match field {start_side}")
    if max_steps is None:
        max_steps = 2 ** min(n + p, 60) + 2

    zeros_x, zeros_y = StateVector((0,) * n), StateVector((0,) * p)
    if start_side == "X":
        x = bam_signal(init, model.thresholds_U, zeros_x)
        y = zeros_y
    else:
        y = bam_signal(init, model.thresholds_V, zeros_y)
        x = zeros_x
    pairs = [(x, y)]
    activations = []
    seen = {}
    side = start_side
    key = lambda pr: (pr[0].bits, pr[1].bits)
    for step in range(1, max_steps + 1):
        if side == "X":
            raw, y = _exchange(model, "X", x, y)
            side = "Y"
        else:
            raw, x = _exchange(model, "Y", y, x)
            side = "X"
        activations.append(raw)
        pairs.append((x, y))
        if len(pairs) >= 3 and key(pairs[-1]) == key(pairs[-2]):
            final = pairs[-1]
            settle = next(i for i, pr in enumerate(pairs) if key(pr) == key(final))
            _verify_fixed(model, final)
            return BamTrace("fixed_pair", pairs, activations, final, settle, step, start_side)
        state = (key(pairs[-1]), side)
        if state in seen:
            return BamTrace("limit_cycle", pairs, activations, None, None, step, start_side)
        seen[state] = step
    raise NonTerminationError(f"no recurrent pair within {max_steps} exchanges")


def _verify_fixed(model: BamModel, pair):
    x, y = pair
    _, y2 = _exchange(model, "X", x, y)
    _, x2 = _exchange(model, "Y", y2, x)
    if y2.bits != y.bits or x2.bits != x.bits:
        raise AssertionError("reported fixed pair is not reproduced by a full exchange")


def _synaptic(m):
    return m.synaptic if isinstance(m, BamModel) else as_matrix(m)


def bam_indirect(model_a, model_b) -> Matrix:
    """Indirect relation of two chained memories: (A x B)^T."""
    a, b = _synaptic(model_a), _synaptic(model_b)
    if a.cols != b.rows:
        raise DimensionError(f"bam_indirect: inner dimensions differ, {a.shape} and {b.shape}")
    return Matrix((a.values @ b.values).T, b.col_labels, a.row_labels)


def bam_indirect_bound(model_a, model_b) -> float:
    """Largest magnitude the indirect relation can reach: c1 * c2 * inner size."""
    sa = model_a.scale if isinstance(model_a, BamModel) else float(np.abs(as_matrix(model_a).values).max())
    sb = model_b.scale if isinstance(model_b, BamModel) else float(np.abs(as_matrix(model_b).values).max())
    return sa * sb * _synaptic(model_a).cols
