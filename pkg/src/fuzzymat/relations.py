"""Binary fuzzy relation utilities: summaries, joins, alpha-cuts and predicates."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Matrix, as_matrix
from .errors import DimensionError, DomainError

__all__ = [
    "RelationSummary",
    "RelationProperties",
    "relation_summary",
    "relational_join",
    "alpha_cut",
    "relation_properties",
    "is_reflexive",
    "is_anti_reflexive",
    "is_symmetric",
    "is_max_min_transitive",
]


@dataclass(frozen=True)
class RelationSummary:
    dom: np.ndarray     # row maxima
    ran: np.ndarray     # column maxima
    height: float


@dataclass(frozen=True)
class RelationProperties:
    reflexive: bool
    anti_reflexive: bool
    symmetric: bool
    max_min_transitive: bool
    compatibility: bool
    similarity: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def relation_summary(r) -> RelationSummary:
    v = as_matrix(r).values
    return RelationSummary(v.max(axis=1), v.max(axis=0), float(v.max()))


def relational_join(p, q) -> np.ndarray:
    """Ternary tensor t[x, y, z] = min(p[x, y], q[y, z])."""
    p, q = as_matrix(p), as_matrix(q)
    if p.cols != q.rows:
        raise DimensionError(f"relational_join: inner dimensions differ, {p.shape} and {q.shape}")
    return np.minimum(p.values[:, :, None], q.values[None, :, :])


def alpha_cut(r, alpha: float) -> Matrix:
    """Crisp relation with a 1 wherever the membership is at least alpha."""
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    r = as_matrix(r)
    return Matrix((r.values >= alpha).astype(float), r.row_labels, r.col_labels)


def _square(r) -> np.ndarray:
    v = as_matrix(r).values
    if v.shape[0] != v.shape[1]:
        raise DimensionError(f"relation must be square, got {v.shape}")
    return v


def is_reflexive(r, eps: float = 1.0) -> bool:
    """Every diagonal grade is at least eps (eps=1 is plain reflexivity)."""
    return bool(np.all(np.diag(_square(r)) >= eps))


def is_anti_reflexive(r) -> bool:
    return bool(np.all(np.diag(_square(r)) == 0))


def is_symmetric(r) -> bool:
    v = _square(r)
    return bool(np.array_equal(v, v.T))


def is_max_min_transitive(r) -> bool:
    """R(x, z) >= max_y min(R(x, y), R(y, z)) for every x, z (exhaustive triple loop)."""
    v = _square(r)
    n = v.shape[0]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if v[x, z] < min(v[x, y], v[y, z]):
                    return False
    return True


def relation_properties(r, eps: float = 1.0) -> RelationProperties:
    refl = is_reflexive(r, eps)
    sym = is_symmetric(r)
    trans = is_max_min_transitive(r)
    return RelationProperties(
        reflexive=refl,
        anti_reflexive=is_anti_reflexive(r),
        symmetric=sym,
        max_min_transitive=trans,
        compatibility=refl and sym,
        similarity=refl and sym and trans,
    )
