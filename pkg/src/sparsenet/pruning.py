"""Gradual magnitude pruning: the cubic sparsity ramp and magnitude masks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from .bcsr import BlockConfig, SparsityMask, block_view, expand_blocks
from .errors import ShapeError
from .tensor import DenseMatrix


@dataclass(frozen=True)
class PruneSchedule:
    s_initial: float
    s_final: float
    t_start: int
    t_end: int
    frequency: int

    def __post_init__(self):
        if not 0.0 <= self.s_initial <= self.s_final < 1.0:
            raise ValueError("need 0 <= s_initial <= s_final < 1")
        if self.t_start >= self.t_end:
            raise ValueError("t_start must precede t_end")
        if self.frequency <= 0 or (self.t_end - self.t_start) % self.frequency:
            raise ValueError("frequency must be positive and divide t_end - t_start")

    @property
    def steps(self) -> List[int]:
        """Iterations at which the mask is recomputed."""
        return list(range(self.t_start, self.t_end + 1, self.frequency))


# MobileNet schedule: training stretched 4x, pruning every 2,000 iterations.
MOBILENET_SCHEDULE = PruneSchedule(0.0, 0.9, 28_000, 112_000, 2_000)


def target_sparsity(sched: PruneSchedule, t: int) -> float:
    """Sparsity in force at iteration ``t``; zero before pruning begins."""
    if t < sched.t_start:
        return 0.0
    if t >= sched.t_end:
        return sched.s_final
    last = sched.t_start + (t - sched.t_start) // sched.frequency * sched.frequency
    remaining = 1.0 - (last - sched.t_start) / (sched.t_end - sched.t_start)
    return sched.s_final + (sched.s_initial - sched.s_final) * remaining**3


def block_scores(w: np.ndarray, block: BlockConfig) -> np.ndarray:
    """L1 norm of every block, flattened row-major over the block grid."""
    rows, cols = w.shape
    gr, gc = block_view(rows, cols, block)
    grid = np.abs(w.astype(np.float64)).reshape(gr, block.out_block, gc, block.in_block)
    return grid.sum(axis=(1, 3)).reshape(-1)


def blocks_to_prune(nblocks: int, sparsity: float) -> int:
    """Fewest blocks whose removal reaches ``sparsity``."""
    # The slack absorbs products like 0.7 * 10 = 7.000000000000001.
    return min(nblocks, math.ceil(sparsity * nblocks - 1e-9))


def magnitude_mask(w: DenseMatrix, sparsity: float, block: BlockConfig = BlockConfig()) -> SparsityMask:
    """Zero the lowest-L1 blocks until at least ``sparsity`` of the entries are gone.

    Ties go to the lower flat block index first, so the result is deterministic.
    """
    block.check(w.rows, w.cols)
    if not 0.0 <= sparsity < 1.0:
        raise ValueError(f"sparsity must be in [0, 1), got {sparsity}")
    scores = block_scores(w.array(), block)
    n_prune = blocks_to_prune(scores.size, sparsity)
    order = np.argsort(scores, kind="stable")
    keep = np.ones(scores.size, dtype=bool)
    keep[order[:n_prune]] = False
    grid = block_view(w.rows, w.cols, block)
    return SparsityMask(w.rows, w.cols, expand_blocks(keep.reshape(grid), block))


def apply_schedule_trace(
    w_sequence: Sequence[DenseMatrix], sched: PruneSchedule, block: BlockConfig = BlockConfig()
) -> List[SparsityMask]:
    """Masks for weight snapshots taken at each pruning step of ``sched``."""
    steps = sched.steps
    if len(w_sequence) != len(steps):
        raise ShapeError(f"schedule has {len(steps)} pruning steps but {len(w_sequence)} snapshots were given")
    return [magnitude_mask(w, target_sparsity(sched, t), block) for w, t in zip(w_sequence, steps)]
