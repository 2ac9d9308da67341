"""Fuzzy relational equations p o Q = r.

Max-min: the greatest solution comes from the sigma-min formula and is
checked by composing it back.  Max-product: a closed-form uniform-row fit
and a partitioned variant that reports one peak per block.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import Matrix, as_matrix, compose_max_min, compose_max_product
from .errors import DimensionError, DomainError, InfeasibleFitError

__all__ = [
    "SOLVABLE_TOL",
    "FreSolution",
    "PartitionPeak",
    "linear_activation",
    "fre_necessary_check",
    "fre_max_solution",
    "fre_max_solution_rows",
    "fre_verify",
    "fre_fit_max_product",
    "equal_chunks",
    "fre_partition_peaks",
]

SOLVABLE_TOL = 1e-12


@dataclass(frozen=True)
class FreSolution:
    p_hat: np.ndarray
    solvable: bool
    residual: float


@dataclass(frozen=True)
class PartitionPeak:
    indices: tuple
    weights: Matrix
    peak_index: int
    peak_value: float


def linear_activation(a):
    """Clip to [0, 1]: 0 below, identity inside, 1 above."""
    return np.clip(np.asarray(a, dtype=float), 0.0, 1.0)


def _qr(Q, r):
    Q = as_matrix(Q).values
    r = np.asarray(r, dtype=float).ravel()
    if Q.shape[1] != r.size:
        raise DimensionError(f"Q has {Q.shape[1]} columns but r has {r.size} entries")
    return Q, r


def fre_necessary_check(Q, r) -> bool:
    """False when some r_k exceeds every q_jk (no solution can exist)."""
    Q, r = _qr(Q, r)
    return bool(np.all(Q.max(axis=0) >= r))


def fre_max_solution(Q, r) -> FreSolution:
    """Greatest candidate p_j = min_k sigma(q_jk, r_k), sigma = r_k if q_jk > r_k else 1."""
    Q, r = _qr(Q, r)
    sigma = np.where(Q > r[None, :], r[None, :], 1.0)
    p_hat = sigma.min(axis=1)
    back = np.minimum(p_hat[:, None], Q).max(axis=0)
    residual = float(np.abs(back - r).max())
    return FreSolution(p_hat, residual <= SOLVABLE_TOL, residual)


def fre_max_solution_rows(Q, R) -> list:
    """Solve P o Q = R one row of R at a time."""
    R = as_matrix(R).values
    return [fre_max_solution(Q, row) for row in R]


def fre_verify(P, Q, R, composition: str = "max_min") -> float:
    """Largest absolute cell difference between P o Q and R."""
    if composition == "max_min":
        got = compose_max_min(P, Q)
    elif composition == "max_product":
        got = compose_max_product(P, Q)
    else:
        raise DomainError(f"unknown composition {composition!r}")
    R = as_matrix(R).values
    if R.shape != got.shape:
        if R.size == got.values.size and 1 in R.shape:
            R = R.reshape(got.shape)
        else:
            raise DimensionError(f"composition has shape {got.shape}, R has {R.shape}")
    return float(np.abs(got.values - R).max())


def fre_fit_max_product(q, r) -> Matrix:
    """Weights P with max_j p_ij q_j = r_i exactly.

    Every entry of row i is r_i / q*, where q* is the first largest input.
    """
    q = np.asarray(q, dtype=float).ravel()
    r = np.asarray(r, dtype=float).ravel()
    if q.size == 0 or np.any(q <= 0):
        raise InfeasibleFitError("all inputs must be positive")
    q_star = q[int(np.argmax(q))]
    for i, ri in enumerate(r):
        if ri < 0 or ri / q_star > 1:
            raise InfeasibleFitError(f"row {i}: output {ri:g} is unreachable with weights in [0, 1]")
    return Matrix(np.repeat((r / q_star)[:, None], q.size, axis=1))


def equal_chunks(size: int, start: int, stop: int) -> list:
    """Consecutive index blocks of ``size`` covering [start, stop); the last may be short."""
    if size < 1:
        raise DomainError("chunk size must be at least 1")
    if stop <= start:
        raise DomainError("empty index range")
    return [list(range(i, min(i + size, stop))) for i in range(start, stop, size)]


def fre_partition_peaks(q_full, r_full, partitions: Sequence[Sequence[int]]) -> list:
    """Fit each disjoint block of (q, r) and report the block's largest output.

    Ties go to the smallest index.
    """
    q_full = np.asarray(q_full, dtype=float).ravel()
    r_full = np.asarray(r_full, dtype=float).ravel()
    if q_full.size != r_full.size:
        raise DimensionError(f"{q_full.size} inputs but {r_full.size} outputs")
    used = set()
    out = []
    for block in partitions:
        idx = [int(i) for i in block]
        if not idx:
            raise DomainError("empty partition")
        for i in idx:
            if not 0 <= i < q_full.size:
                raise DomainError(f"index {i} out of range")
            if i in used:
                raise DomainError(f"index {i} appears in more than one partition")
            used.add(i)
        weights = fre_fit_max_product(q_full[idx], r_full[idx])
        best = max(r_full[idx])
        peak = min(i for i in idx if r_full[i] == best)
        out.append(PartitionPeak(tuple(idx), weights, peak, float(r_full[peak])))
    return out
