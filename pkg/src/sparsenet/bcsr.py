"""Block-compressed sparse row weights and sparsity masks.

A stored block is ``block_h`` consecutive output channels (rows) at a single
input channel (column). Block values are kept contiguous, output-channel
minor, so a kernel can read all ``block_h`` weights of a block with one load.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import FormatError, ShapeError
from .tensor import DenseMatrix

BLOCK_SIZES = (1, 2, 4)


@dataclass(frozen=True, eq=False)
class BcsrMatrix:
    rows: int
    cols: int
    block_h: int
    block_row_ptr: np.ndarray
    col_indices: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "block_row_ptr", np.ascontiguousarray(self.block_row_ptr, np.uint32))
        object.__setattr__(self, "col_indices", np.ascontiguousarray(self.col_indices, np.uint32))
        object.__setattr__(self, "values", np.ascontiguousarray(self.values, np.float32))
        self.validate()

    def validate(self) -> None:
        if self.block_h not in BLOCK_SIZES:
            raise FormatError(f"block_h must be one of {BLOCK_SIZES}, got {self.block_h}")
        if self.rows < 1 or self.cols < 1:
            raise FormatError("matrix dimensions must be >= 1")
        if self.rows % self.block_h:
            raise FormatError(f"rows={self.rows} not divisible by block_h={self.block_h}")
        ptr, idx = self.block_row_ptr, self.col_indices
        if ptr.ndim != 1 or ptr.size != self.rows // self.block_h + 1:
            raise FormatError("block_row_ptr has the wrong length")
        if ptr[0] != 0:
            raise FormatError("block_row_ptr must start at 0")
        if np.any(ptr[1:] < ptr[:-1]):
            raise FormatError("block_row_ptr must be nondecreasing")
        nnzb = int(ptr[-1])
        if idx.ndim != 1 or idx.size != nnzb:
            raise FormatError(f"expected {nnzb} column indices, got {idx.size}")
        if self.values.ndim != 1 or self.values.size != nnzb * self.block_h:
            raise FormatError(f"expected {nnzb * self.block_h} values, got {self.values.size}")
        if nnzb and int(idx.max()) >= self.cols:
            raise FormatError("column index out of range")
        # Strictly increasing within each block row: only allowed drops are at row starts.
        if nnzb > 1:
            steps = idx[1:].astype(np.int64) - idx[:-1].astype(np.int64)
            row_start = np.zeros(nnzb, dtype=bool)
            starts = ptr[:-1][ptr[:-1] < nnzb].astype(np.int64)
            row_start[starts] = True
            if np.any((steps <= 0) & ~row_start[1:]):
                raise FormatError("column indices must be strictly increasing within a block row")

    @property
    def nnz_blocks(self) -> int:
        return int(self.block_row_ptr[-1])

    @property
    def nnz(self) -> int:
        """Stored values, counting explicit zeros inside kept blocks."""
        return int(self.values.size)

    @property
    def block_rows(self) -> int:
        return self.rows // self.block_h

    def block_values(self) -> np.ndarray:
        return self.values.reshape(-1, self.block_h)


def encode_bcsr(w: DenseMatrix, block_h: int) -> BcsrMatrix:
    if block_h not in BLOCK_SIZES:
        raise ShapeError(f"block_h must be one of {BLOCK_SIZES}, got {block_h}")
    if w.rows % block_h:
        raise ShapeError(f"rows={w.rows} not divisible by block_h={block_h}")
    dense = w.array()
    # (block_rows, block_h, cols) -> (block_rows, cols, block_h)
    blocks = dense.reshape(w.rows // block_h, block_h, w.cols).transpose(0, 2, 1)
    keep = np.any(blocks != 0, axis=2)
    counts = keep.sum(axis=1)
    ptr = np.zeros(w.rows // block_h + 1, np.uint32)
    np.cumsum(counts, out=ptr[1:])
    br, cols = np.nonzero(keep)  # row-major, so columns ascend within each block row
    values = blocks[br, cols].reshape(-1)
    return BcsrMatrix(w.rows, w.cols, block_h, ptr, cols.astype(np.uint32), values)


def decode_bcsr(m: BcsrMatrix) -> DenseMatrix:
    m.validate()
    dense = np.zeros((m.block_rows, m.cols, m.block_h), np.float32)
    counts = np.diff(m.block_row_ptr.astype(np.int64))
    br = np.repeat(np.arange(m.block_rows), counts)
    dense[br, m.col_indices.astype(np.int64)] = m.block_values()
    return DenseMatrix(m.rows, m.cols, dense.transpose(0, 2, 1).reshape(-1))


@dataclass(frozen=True)
class BlockConfig:
    out_block: int = 1
    in_block: int = 1

    def __post_init__(self):
        if self.out_block not in BLOCK_SIZES or self.in_block not in BLOCK_SIZES:
            raise ShapeError(f"block sizes must be in {BLOCK_SIZES}")

    @property
    def size(self) -> int:
        return self.out_block * self.in_block

    def check(self, rows: int, cols: int) -> None:
        if rows % self.out_block or cols % self.in_block:
            raise ShapeError(
                f"{rows}x{cols} matrix not divisible into {self.out_block}x{self.in_block} blocks"
            )


@dataclass(frozen=True, eq=False)
class SparsityMask:
    """Boolean keep-mask; ``True`` marks a retained (nonzero) weight."""

    rows: int
    cols: int
    bits: np.ndarray

    def __post_init__(self):
        bits = np.ascontiguousarray(self.bits, dtype=bool)
        if bits.size != self.rows * self.cols:
            raise FormatError(f"mask has {bits.size} bits, expected {self.rows * self.cols}")
        object.__setattr__(self, "bits", bits.reshape(self.rows, self.cols))

    def __eq__(self, other):
        if not isinstance(other, SparsityMask):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and np.array_equal(self.bits, other.bits)

    @property
    def nonzeros(self) -> int:
        return int(np.count_nonzero(self.bits))

    def apply(self, w: DenseMatrix) -> DenseMatrix:
        if (w.rows, w.cols) != (self.rows, self.cols):
            raise ShapeError("mask and matrix shapes differ")
        return DenseMatrix.from_array(np.where(self.bits, w.array(), np.float32(0)))

    def to_bytes(self) -> bytes:
        return np.packbits(self.bits.reshape(-1)).tobytes()


def block_view(rows: int, cols: int, block: BlockConfig):
    """Shape of the block grid; blocks are flattened row-major over it."""
    return rows // block.out_block, cols // block.in_block


def expand_blocks(keep_blocks: np.ndarray, block: BlockConfig) -> np.ndarray:
    """Broadcast a block-grid keep array to element resolution."""
    return np.repeat(np.repeat(keep_blocks, block.out_block, axis=0), block.in_block, axis=1)


def generate_mask(
    rows: int, cols: int, target_sparsity: float, block: BlockConfig = BlockConfig(), seed: int = 0
) -> SparsityMask:
    """Seeded uniformly random block mask with sparsity as close to target as blocks allow."""
    block.check(rows, cols)
    if not 0.0 <= target_sparsity < 1.0:
        raise ValueError(f"target sparsity must be in [0, 1), got {target_sparsity}")
    grid = block_view(rows, cols, block)
    nblocks = grid[0] * grid[1]
    n_zero = int(math.floor(target_sparsity * nblocks + 0.5))
    rng = np.random.default_rng(seed)
    keep = np.ones(nblocks, dtype=bool)
    keep[rng.choice(nblocks, size=n_zero, replace=False)] = False
    return SparsityMask(rows, cols, expand_blocks(keep.reshape(grid), block))


def sparsity_of(mask: SparsityMask) -> float:
    return 1.0 - mask.nonzeros / (mask.rows * mask.cols)


def bitmask_overhead_params(rows: int, cols: int) -> int:
    """Parameters charged for a nonzero-location bitmask: one per 32 bits."""
    return -(-(rows * cols) // 32)
