import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import worked_examples as wx
from fuzzymat import (DimensionError, DomainError, Fcm, StateVector, detect_recurrence, fcm_assemble_blocks,
                      fcm_combine, fcm_hidden_pattern, fcm_step)


def test_single_steps_of_socio_economic_map():
    f = Fcm(wx.SOCIO)
    assert fcm_step(f, StateVector.from_on(5, [0])).bits == (1, 0, 0, 0, 1)
    s = StateVector((1, 1, 0, 0, 1), frozenset({0}))
    assert fcm_step(f, s).bits == (1, 0, 0, 0, 1)


def test_zero_map_keeps_only_clamped_bits():
    f = Fcm(np.zeros((3, 3)))
    assert fcm_step(f, StateVector((1, 1, 0), frozenset({1}))).bits == (0, 1, 0)


def test_socio_economic_limit_cycle_trace():
    hp = fcm_hidden_pattern(Fcm(wx.SOCIO), [1, 0, 0, 0, 0])
    assert hp.kind == "limit_cycle" and not hp.is_fixed_point
    assert [s.bits for s in hp.trace[1:]] == wx.SOCIO_CYCLE + [wx.SOCIO_CYCLE[0]]


def test_disjoint_blocks_reproduce_reference_matrix_and_run():
    f = fcm_assemble_blocks(12, wx.DISJOINT_BLOCKS, wx.DISJOINT_ORDER)
    assert np.array_equal(f.adjacency.values, wx.drop_spurious(wx.DISJOINT_REFERENCE_ROWS, wx.DISJOINT_SPURIOUS))
    assert f.node_labels == wx.DISJOINT_ORDER
    hp = fcm_hidden_pattern(f, StateVector.from_on(12, [0]))
    assert hp.kind == "fixed_point"
    assert [s.bits[:4] for s in hp.trace] == [(1, 0, 0, 0), (1, 1, 1, 0), (1, 1, 1, 1), (1, 1, 1, 1)]


def test_disjoint_second_run_from_two_nodes():
    # A3 and A8 on (positions 5 and 9 in block order); all of blocks 2 and 3 light up
    f = fcm_assemble_blocks(12, wx.DISJOINT_BLOCKS)
    hp = fcm_hidden_pattern(f, StateVector.from_on(12, [5, 9]))
    assert hp.kind == "fixed_point"
    assert hp.terminal_states[0].bits == (0, 0, 0, 0) + (1,) * 8


def test_overlap_blocks_accumulate_and_reference_slip_is_isolated():
    f = fcm_assemble_blocks(12, wx.OVERLAP_BLOCKS)
    w = f.adjacency.values
    assert np.array_equal(w, wx.OVERLAP_W)
    reference = wx.drop_spurious(wx.OVERLAP_REFERENCE_ROWS, wx.OVERLAP_SPURIOUS)
    row, mine, theirs = wx.OVERLAP_REFERENCE_SLIP
    assert [tuple(x) for x in np.argwhere(w != reference)] == [(row, mine), (row, theirs)]
    hp = fcm_hidden_pattern(f, StateVector.from_on(12, [0]))
    assert hp.kind == "fixed_point" and hp.terminal_states[0].bits == wx.OVERLAP_FIXED
    assert hp.trace[1].bits == (1, 1, 1, 1) + (0,) * 7 + (1,)


def test_single_block_covering_everything_is_identity_embedding():
    m = [[0, 1, -1], [1, 0, 0], [0, 1, 0]]
    assert fcm_assemble_blocks(3, [([0, 1, 2], m)]).adjacency.tolist() == m


def test_block_errors():
    with pytest.raises(DomainError):
        fcm_assemble_blocks(3, [([0, 5], [[0, 1], [1, 0]])])
    with pytest.raises(DimensionError):
        fcm_assemble_blocks(3, [([0, 1], [[0]])])


def test_combine_sums_and_cancels():
    a = Fcm([[0, 1], [-1, 0]])
    b = Fcm([[0, -1], [1, 0]])
    assert fcm_combine([a, b]).adjacency.tolist() == [[0, 0], [0, 0]]
    assert fcm_combine([a, Fcm(np.zeros((2, 2)))]).adjacency == a.adjacency
    with pytest.raises(DimensionError):
        fcm_combine([a, Fcm(np.zeros((3, 3)))])


def test_model_validation():
    with pytest.raises(DimensionError):
        Fcm([[0, 1]])
    with pytest.raises(DomainError):
        Fcm([[1, 0], [0, 0]])
    with pytest.raises(DimensionError):
        fcm_hidden_pattern(Fcm(wx.SOCIO), [1, 0])


def test_detect_recurrence():
    assert detect_recurrence([1, 2, 3]) is None
    assert detect_recurrence([1, 2, 1]) == 0


adjacencies = arrays(int, st.tuples(st.integers(2, 7), st.just(7)), elements=st.integers(-2, 2)).map(
    lambda a: a[:, :a.shape[0]].copy())


def _zero_diag(a):
    a = a.copy()
    np.fill_diagonal(a, 0)
    return a


@settings(max_examples=80, deadline=None)
@given(adjacencies, st.data())
def test_runs_terminate_with_verified_pattern_and_clamp(adj, data):
    adj = _zero_diag(adj)
    n = adj.shape[0]
    on = data.draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=n, unique=True))
    f = Fcm(adj)
    hp = fcm_hidden_pattern(f, StateVector.from_on(n, on))
    assert hp.steps <= 2 ** n + 1
    for s in hp.trace[1:]:
        assert all(s.bits[i] == 1 for i in on)
    if hp.kind == "fixed_point":
        assert hp.trace[-1].bits == hp.trace[-2].bits
        assert fcm_step(f, hp.terminal_states[0]).bits == hp.terminal_states[0].bits
    else:
        assert hp.trace[-1].bits != hp.trace[-2].bits
        assert hp.trace[-1].bits == hp.terminal_states[0].bits


@settings(max_examples=60, deadline=None)
@given(arrays(int, (5, 5), elements=st.integers(-1, 1)), st.integers(1, 4), st.integers(0, 4))
def test_scaling_simple_map_preserves_every_step(adj, k, node):
    adj = _zero_diag(adj)
    s = StateVector.from_on(5, [node])
    assert fcm_step(Fcm(adj), s).bits == fcm_step(Fcm(adj * k), s).bits
