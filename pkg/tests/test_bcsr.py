import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sparsenet.bcsr import (
    BcsrMatrix, BlockConfig, bitmask_overhead_params, decode_bcsr, encode_bcsr, generate_mask, sparsity_of,
)
from sparsenet.errors import FormatError, ShapeError
from sparsenet.tensor import DenseMatrix


def test_known_encoding():
    w = np.array([[1, 0, 2, 0], [3, 0, 0, 0], [0, 0, 0, 0], [0, 4, 0, 0]], np.float32)
    m = encode_bcsr(DenseMatrix.from_array(w), 2)
    assert m.block_row_ptr.tolist() == [0, 2, 3]
    assert m.col_indices.tolist() == [0, 2, 1]
    # output-channel-minor within a block; the kept block at (0, 2) stores an explicit zero
    assert m.values.tolist() == [1, 3, 2, 0, 0, 4]
    assert m.nnz_blocks == 3 and m.nnz == 6


@settings(max_examples=60, deadline=None)
@given(
    block_h=st.sampled_from([1, 2, 4]),
    block_rows=st.integers(1, 6),
    cols=st.integers(1, 12),
    density=st.floats(0.0, 1.0),
    seed=st.integers(0, 2**31 - 1),
)
def test_round_trip_is_exact(block_h, block_rows, cols, density, seed):
    rng = np.random.default_rng(seed)
    rows = block_rows * block_h
    w = rng.standard_normal((rows, cols)).astype(np.float32)
    w[rng.random((rows, cols)) > density] = 0
    m = encode_bcsr(DenseMatrix.from_array(w), block_h)
    assert np.array_equal(decode_bcsr(m).array(), w)
    assert m.block_row_ptr.dtype == np.uint32 and m.col_indices.dtype == np.uint32


def test_zero_matrix_has_no_blocks():
    m = encode_bcsr(DenseMatrix.from_array(np.zeros((4, 5))), 4)
    assert m.nnz_blocks == 0 and m.block_row_ptr.tolist() == [0, 0]
    assert not decode_bcsr(m).array().any()


def test_indivisible_rows_rejected():
    with pytest.raises(ShapeError):
        encode_bcsr(DenseMatrix.from_array(np.ones((6, 3))), 4)


@pytest.mark.parametrize(
    "ptr,idx,vals,msg",
    [
        ([0, 2], [1, 1], [1, 1], "increasing"),
        ([0, 2], [1, 0], [1, 1], "increasing"),
        ([0, 1], [5], [1], "range"),
        ([1, 1], [], [], "start at 0"),
        ([0, 2], [0], [1], "column indices"),
        ([0, 1], [0], [1, 2], "values"),
    ],
)
def test_invariant_violations(ptr, idx, vals, msg):
    with pytest.raises(FormatError, match=msg):
        BcsrMatrix(1, 4, 1, ptr, idx, vals)


def test_decreasing_row_pointer_rejected():
    with pytest.raises(FormatError):
        BcsrMatrix(2, 4, 1, [0, 2, 1], [0, 1], [1, 1])


def test_columns_may_restart_at_new_block_row():
    m = BcsrMatrix(2, 4, 1, [0, 2, 3], [1, 3, 0], [1, 2, 3])
    assert decode_bcsr(m).array().tolist() == [[0, 1, 0, 2], [3, 0, 0, 0]]


def test_generate_mask_is_seeded_and_blocked():
    a = generate_mask(16, 8, 0.75, BlockConfig(4), seed=3)
    b = generate_mask(16, 8, 0.75, BlockConfig(4), seed=3)
    assert a == b
    assert sparsity_of(a) == 0.75
    # every 4-row block column is uniform
    blocks = a.bits.reshape(4, 4, 8)
    assert np.all(blocks.all(axis=1) | ~blocks.any(axis=1))


def test_generate_mask_nearest_block_count():
    # 10 blocks at 0.85 -> 8.5 rounds to 9 zero blocks
    m = generate_mask(10, 1, 0.85, seed=0)
    assert m.nonzeros == 1


def test_bitmask_overhead():
    assert bitmask_overhead_params(32, 1) == 1
    assert bitmask_overhead_params(33, 1) == 2
    assert bitmask_overhead_params(64, 64) == 128
