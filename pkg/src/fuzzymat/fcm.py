"""Fuzzy cognitive maps: clamped threshold iteration to a hidden pattern.

A map is a square weight matrix with zero diagonal.  One step multiplies the
state by the matrix, thresholds the result and forces the clamped nodes back
on.  Iteration stops at the first repeated state.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import Matrix, StateVector, as_matrix, threshold
from .errors import DimensionError, DomainError, NonTerminationError

__all__ = [
    "Fcm",
    "HiddenPattern",
    "fcm_step",
    "fcm_hidden_pattern",
    "fcm_combine",
    "fcm_assemble_blocks",
    "detect_recurrence",
]


@dataclass(frozen=True)
class Fcm:
    adjacency: Matrix
    node_labels: tuple | None = None
    theta: float = 1.0

    def __post_init__(self):
        adj = as_matrix(self.adjacency)
        if adj.rows != adj.cols:
            raise DimensionError(f"adjacency must be square, got {adj.shape}")
        if np.any(np.diag(adj.values) != 0):
            raise DomainError("adjacency diagonal must be zero")
        labels = self.node_labels if self.node_labels is not None else (adj.row_labels or adj.col_labels)
        adj = Matrix(adj.values, labels, labels)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "node_labels", adj.row_labels)
        object.__setattr__(self, "theta", float(self.theta))

    @property
    def n(self) -> int:
        return self.adjacency.rows


@dataclass(frozen=True)
class HiddenPattern:
    kind: str                 # "fixed_point" or "limit_cycle"
    terminal_states: list     # one state, or the cycle in first-visit order
    trace: list               # every visited state, initial first, repeat last
    steps: int

    @property
    def is_fixed_point(self) -> bool:
        return self.kind == "fixed_point"


def detect_recurrence(trace: list, key=lambda s: s) -> int | None:
    """Index of the earlier occurrence of the last element, if any."""
    last = key(trace[-1])
    for i, s in enumerate(trace[:-1]):
        if key(s) == last:
            return i
    return None


def _as_initial(initial, n: int) -> StateVector:
    if isinstance(initial, StateVector):
        s = initial
    else:
        s = StateVector.clamped(initial)
    if len(s) != n:
        raise DimensionError(f"state length {len(s)} does not match {n} nodes")
    return s


def fcm_step(f: Fcm, s: StateVector) -> StateVector:
    if len(s) != f.n:
        raise DimensionError(f"state length {len(s)} does not match {f.n} nodes")
    raw = s.as_array() @ f.adjacency.values
    bits = np.array(threshold(raw, f.theta).bits)
    for i in s.clamp:
        bits[i] = 1
    return StateVector(tuple(bits), s.clamp)


def fcm_hidden_pattern(f: Fcm, initial, max_steps: int | None = None) -> HiddenPattern:
    """Iterate until a state repeats.

    ``initial`` may be a StateVector (its clamp is used as given) or a plain
    bit sequence, in which case every on-bit is clamped.
    """
    s = _as_initial(initial, f.n)
    if max_steps is None:
        max_steps = 2 ** min(f.n, 60) + 1
    trace = [s]
    for step in range(1, max_steps + 1):
        trace.append(fcm_step(f, trace[-1]))
        j = detect_recurrence(trace, key=lambda v: v.bits)
        if j is None:
            continue
        if j == len(trace) - 2:
            return HiddenPattern("fixed_point", [trace[-1]], trace, step)
        return HiddenPattern("limit_cycle", trace[j:-1], trace, step)
    raise NonTerminationError(f"no recurrence within {max_steps} steps")


def fcm_combine(maps: Sequence[Fcm], theta: float = 1.0) -> Fcm:
    """Entrywise sum of maps over the same node set."""
    maps = list(maps)
    if not maps:
        raise DomainError("nothing to combine")
    n, labels = maps[0].n, maps[0].node_labels
    for m in maps[1:]:
        if m.n != n or (labels is not None and m.node_labels is not None and m.node_labels != labels):
            raise DimensionError("maps must share the same node ordering")
    total = np.sum([m.adjacency.values for m in maps], axis=0)
    return Fcm(Matrix(total), labels, theta)


def fcm_assemble_blocks(n: int, blocks, node_labels=None, theta: float = 1.0) -> Fcm:
    """Accumulate square blocks into an n x n map.

    ``blocks`` is a sequence of (index_list, matrix).  block[r][c] is added to
    cell (index_list[r], index_list[c]); overlapping blocks therefore sum.
    """
    total = np.zeros((n, n))
    for idx, block in blocks:
        idx = [int(i) for i in idx]
        b = as_matrix(block).values
        if b.shape != (len(idx), len(idx)):
            raise DimensionError(f"block of shape {b.shape} for {len(idx)} indices")
        if len(set(idx)) != len(idx):
            raise DomainError("block index list repeats an index")
        for i in idx:
            if not 0 <= i < n:
                raise DomainError(f"block index {i} out of range for {n} nodes")
        total[np.ix_(idx, idx)] += b
    return Fcm(Matrix(total), node_labels, theta)
