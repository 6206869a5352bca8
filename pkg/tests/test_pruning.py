import numpy as np
import pytest

from sparsenet.bcsr import BlockConfig
from sparsenet.errors import ShapeError
from sparsenet.pruning import (
    MOBILENET_SCHEDULE, PruneSchedule, apply_schedule_trace, magnitude_mask, target_sparsity,
)
from sparsenet.tensor import DenseMatrix


def test_schedule_endpoints():
    s = MOBILENET_SCHEDULE
    assert target_sparsity(s, 0) == 0.0
    assert target_sparsity(s, s.t_start) == 0.0
    assert target_sparsity(s, s.t_end) == 0.9
    assert target_sparsity(s, 10**7) == 0.9


def test_schedule_holds_between_steps():
    s = MOBILENET_SCHEDULE
    assert target_sparsity(s, 30_000) == target_sparsity(s, 31_999)
    assert target_sparsity(s, 32_000) > target_sparsity(s, 31_999)


def test_schedule_midpoint():
    # (112000 - 70000) / 84000 = 0.5, so 0.9 * (1 - 0.125)
    assert abs(target_sparsity(MOBILENET_SCHEDULE, 70_000) - 0.7875) <= 1e-12


@pytest.mark.parametrize("args", [(0.5, 0.4, 0, 10, 1), (0, 1.0, 0, 10, 1), (0, 0.5, 10, 10, 1), (0, 0.5, 0, 10, 3)])
def test_schedule_validation(args):
    with pytest.raises(ValueError):
        PruneSchedule(*args)


def test_magnitude_mask_prunes_smallest():
    w = DenseMatrix.from_array(np.array([[1, -5], [0.5, 3]], np.float32))
    assert magnitude_mask(w, 0.5).bits.tolist() == [[False, True], [False, True]]


def test_magnitude_mask_block_scores():
    w = np.array([[1, 9], [1, 0], [5, 0], [5, 1]], np.float32)
    m = magnitude_mask(DenseMatrix.from_array(w), 0.5, BlockConfig(2))
    # block (rows 0-1, col 0) has L1 2, the smallest, then (rows 2-3, col 1) with 1
    assert m.bits.tolist() == [[False, True], [False, True], [True, False], [True, False]]


def test_magnitude_mask_ties_are_deterministic():
    w = DenseMatrix.from_array(np.ones((4, 4)))
    a = magnitude_mask(w, 0.5)
    assert a == magnitude_mask(w, 0.5)
    assert a.bits.reshape(-1).tolist() == [False] * 8 + [True] * 8


@pytest.mark.parametrize("sparsity,kept", [(0.0, 16), (0.7, 4), (0.75, 4), (0.76, 3)])
def test_magnitude_mask_reaches_target(rng, sparsity, kept):
    w = DenseMatrix.from_array(rng.standard_normal((4, 4)))
    assert magnitude_mask(w, sparsity).nonzeros == kept


def test_schedule_trace(rng):
    s = PruneSchedule(0.0, 0.75, 0, 4, 2)
    snaps = [DenseMatrix.from_array(rng.standard_normal((4, 4))) for _ in s.steps]
    masks = apply_schedule_trace(snaps, s)
    assert [m.nonzeros for m in masks] == [16, 5, 4]
    with pytest.raises(ShapeError):
        apply_schedule_trace(snaps[:2], s)
