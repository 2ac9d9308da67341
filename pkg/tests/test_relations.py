import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import worked_examples as wx
from fuzzymat import (DimensionError, DomainError, alpha_cut, compose_max_min, is_anti_reflexive,
                      is_max_min_transitive, is_reflexive, is_symmetric, relation_properties, relation_summary,
                      relational_join)


def test_summary_of_seven_by_five_relation():
    s = relation_summary(wx.REL_7x5)
    r = np.array(wx.REL_7x5)
    assert s.dom.tolist() == [max(row) for row in r.tolist()]
    assert s.ran.tolist() == [max(col) for col in r.T.tolist()]
    assert s.height == 1.0


def test_join_projects_back_to_composition():
    p = np.array(wx.REL_7x5)
    q = np.array(wx.REL_7x5).T
    t = relational_join(p, q)
    assert t.shape == (7, 5, 7)
    assert np.array_equal(t.max(axis=1), compose_max_min(p, q).values)
    with pytest.raises(DimensionError):
        relational_join(p, p)


def test_compatibility_matrix_is_compatible_but_not_similarity():
    props = relation_properties(wx.COMPAT_8)
    assert props.reflexive and props.symmetric and props.compatibility
    assert not props.max_min_transitive and not props.similarity


def test_alpha_cut_rules():
    cut = alpha_cut(wx.COMPAT_8, 0.7)
    expected = [[1.0 if x >= 0.7 else 0.0 for x in row] for row in wx.COMPAT_8]
    assert cut.tolist() == expected
    with pytest.raises(DomainError):
        alpha_cut(wx.COMPAT_8, 0)


def test_predicates():
    assert is_anti_reflexive([[0, 1], [0.3, 0]])
    assert not is_reflexive([[1, 0], [0, 0.9]])
    assert is_reflexive([[1, 0], [0, 0.9]], eps=0.9)
    assert is_max_min_transitive(np.eye(3))
    with pytest.raises(DimensionError):
        is_symmetric([[1, 0]])


def brute_transitive(v):
    n = len(v)
    return all(v[x][z] >= min(v[x][y], v[y][z]) for x in range(n) for y in range(n) for z in range(n))


@settings(max_examples=80, deadline=None)
@given(arrays(float, (4, 4), elements=st.integers(0, 4).map(lambda k: k / 4)))
def test_transitivity_matches_composition_criterion(r):
    comp = compose_max_min(r, r).values
    assert is_max_min_transitive(r) == bool(np.all(comp <= r)) == brute_transitive(r.tolist())


@settings(max_examples=80, deadline=None)
@given(arrays(float, (4, 4), elements=st.integers(0, 20).map(lambda k: k / 20)),
       st.integers(1, 20), st.integers(1, 20))
def test_cuts_are_nested(r, a, b):
    lo, hi = sorted((a / 20, b / 20))
    assert np.all(alpha_cut(r, hi).values <= alpha_cut(r, lo).values)
