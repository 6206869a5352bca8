import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from sparsenet import kernels
from sparsenet.bcsr import BlockConfig, encode_bcsr, generate_mask
from sparsenet.errors import LayoutError, ShapeError
from sparsenet.kernels import (
    ALL_VARIANTS, RELU6, MicrokernelConfig, dense_gemm_baseline, depthwise_conv_chw, entry_conv_hwc_to_chw,
    global_avg_pool_chw, spmm,
)
from sparsenet.tensor import CHW, HWC, DenseMatrix, Tensor, chw_to_hwc, conv2d_reference, matmul_reference

ROOT = Path(__file__).resolve().parents[1]


def _case(rng, rows, cols, spatial, sparsity, block_h):
    w = rng.uniform(-1, 1, (rows, cols)).astype(np.float32)
    mask = generate_mask(rows, cols, sparsity, BlockConfig(block_h), seed=int(rng.integers(1000)))
    dense = mask.apply(DenseMatrix.from_array(w))
    act = Tensor.from_array(rng.uniform(-1, 1, (cols, 1, spatial)))
    return dense, encode_bcsr(dense, block_h), act


@pytest.mark.parametrize("tier", kernels.TIERS)
@pytest.mark.parametrize("cfg", ALL_VARIANTS, ids=lambda c: c.name)
def test_spmm_64x64_all_variants(rng, cfg, tier):
    dense, sparse, act = _case(rng, 64, 64, 196, 0.9, cfg.out_block)
    bias = rng.uniform(-1, 1, 64).astype(np.float32)
    ref = matmul_reference(dense, act, bias)
    got = spmm(sparse, act, bias, cfg=cfg, tier=tier)
    assert np.max(np.abs(got.data - ref.data)) <= 1e-5


@pytest.mark.parametrize("spatial", [1, 3, 7, 15, 17, 31, 33])
def test_spmm_strip_tails(rng, spatial):
    dense, sparse, act = _case(rng, 8, 12, spatial, 0.5, 2)
    ref = matmul_reference(dense, act)
    for strip in kernels.STRIP_WIDTHS:
        got = spmm(sparse, act, cfg=MicrokernelConfig(strip, 2), tier="scalar")
        assert np.array_equal(got.data, ref.data)


def test_spmm_scalar_is_bit_exact(rng):
    dense, sparse, act = _case(rng, 96, 200, 49, 0.7, 4)
    ref = matmul_reference(dense, act, clamp=RELU6)
    got = spmm(sparse, act, fused=RELU6, cfg=MicrokernelConfig(16, 4), tier="scalar")
    assert np.array_equal(got.data, ref.data)


def test_prefetch_does_not_change_results(rng):
    dense, sparse, act = _case(rng, 16, 32, 70, 0.8, 1)
    plain = spmm(sparse, act, cfg=MicrokernelConfig(8, 1))
    for distance in (1, 2, 9):
        pf = spmm(sparse, act, cfg=MicrokernelConfig(8, 1, prefetch=True, prefetch_distance=distance))
        assert np.array_equal(pf.data, plain.data)


def test_variants_agree(rng):
    dense, _, act = _case(rng, 32, 40, 50, 0.8, 4)
    outs = [spmm(encode_bcsr(dense, c.out_block), act, cfg=c).data for c in ALL_VARIANTS]
    for o in outs[1:]:
        assert np.max(np.abs(o - outs[0])) <= 1e-5


def test_fully_dense_bcsr_matches_gemm(rng):
    w = DenseMatrix.from_array(rng.uniform(-1, 1, (24, 16)))
    act = Tensor.from_array(rng.uniform(-1, 1, (16, 5, 5)))
    sp = spmm(encode_bcsr(w, 4), act, cfg=MicrokernelConfig(16, 4))
    dn = dense_gemm_baseline(w, act)
    assert np.max(np.abs(sp.data - dn.data)) <= 1e-5


@pytest.mark.parametrize("rows", [4, 6, 7])
@pytest.mark.parametrize("tier", kernels.TIERS)
def test_dense_gemm_baseline(rng, rows, tier):
    w = DenseMatrix.from_array(rng.uniform(-1, 1, (rows, 33)))
    act = Tensor.from_array(rng.uniform(-1, 1, (33, 3, 9)))
    bias = rng.uniform(-1, 1, rows)
    ref = matmul_reference(w, act, bias, RELU6)
    got = dense_gemm_baseline(w, act, bias, RELU6, tier=tier)
    assert np.max(np.abs(got.data - ref.data)) <= 1e-5


def test_all_zero_rows_give_bias(rng):
    w = np.zeros((8, 5), np.float32)
    w[0, 1] = 2.0
    sparse = encode_bcsr(DenseMatrix.from_array(w), 1)
    act = Tensor.from_array(rng.uniform(-1, 1, (5, 2, 2)))
    bias = np.arange(8, dtype=np.float32)
    out = spmm(sparse, act, bias).matrix()
    np.testing.assert_array_equal(out[1:], np.broadcast_to(bias[1:, None], (7, 4)))


def test_spmm_preallocated_output(rng):
    dense, sparse, act = _case(rng, 8, 8, 20, 0.5, 1)
    buf = np.full((8, 20), np.nan, np.float32)
    out = spmm(sparse, act, out=buf)
    assert np.shares_memory(out.data, buf)
    with pytest.raises(ShapeError):
        spmm(sparse, act, out=np.empty((8, 19), np.float32))


def test_spmm_preconditions(rng):
    dense, sparse, act = _case(rng, 8, 8, 4, 0.5, 2)
    with pytest.raises(LayoutError):
        spmm(sparse, chw_to_hwc(act))
    with pytest.raises(ShapeError):
        spmm(sparse, Tensor.zeros(9, 1, 4))
    with pytest.raises(ShapeError):
        spmm(sparse, act, cfg=MicrokernelConfig(8, 4))


def test_variant_names():
    assert MicrokernelConfig.parse("16x2") == MicrokernelConfig(16, 2)
    assert MicrokernelConfig(4, 4).name == "4x4"
    assert len(ALL_VARIANTS) == 9
    for bad in ("12x1", "8x3"):
        with pytest.raises(ShapeError):
            MicrokernelConfig.parse(bad)
    with pytest.raises(ValueError):
        MicrokernelConfig.parse("wide")


def test_tier_selection(monkeypatch):
    monkeypatch.delenv("SPARSENET_TIER", raising=False)
    assert kernels.get_tier() == "vector"
    assert kernels.default_config().strip_width == 16
    monkeypatch.setenv("SPARSENET_TIER", "scalar")
    assert kernels.get_tier() == "scalar"
    assert kernels.default_config(2).name == "8x2"
    kernels.set_tier("vector")
    try:
        assert kernels.get_tier() == "vector"
    finally:
        kernels.set_tier(None)
    with pytest.raises(ValueError):
        kernels.get_tier("neon")


@pytest.mark.parametrize("tier", kernels.TIERS)
@pytest.mark.parametrize("stride,size", [(1, (7, 9)), (2, (7, 9)), (2, (8, 8)), (1, (1, 1))])
def test_depthwise_matches_reference(rng, tier, stride, size):
    x = Tensor.from_array(rng.uniform(-1, 1, (5, *size)))
    w = rng.uniform(-1, 1, (5, 3, 3)).astype(np.float32)
    b = rng.uniform(-1, 1, 5).astype(np.float32)
    ref = conv2d_reference(x, w[:, None], stride, b, RELU6, groups=5)
    got = depthwise_conv_chw(x, w, b, stride, RELU6, tier)
    assert np.max(np.abs(got.data - ref.data)) <= 1e-5


@pytest.mark.parametrize("tier", kernels.TIERS)
def test_entry_conv_matches_reference(rng, tier):
    img = Tensor.from_array(rng.uniform(-1, 1, (15, 14, 3)), HWC)
    w = rng.uniform(-1, 1, (8, 3, 3, 3)).astype(np.float32)
    ref = conv2d_reference(img, w.transpose(0, 3, 1, 2), 2)
    got = entry_conv_hwc_to_chw(img, w, tier=tier)
    assert got.layout == CHW and (got.height, got.width) == (8, 7)
    assert np.max(np.abs(got.data - ref.data)) <= 1e-5


def test_entry_conv_requires_hwc(rng):
    with pytest.raises(LayoutError):
        entry_conv_hwc_to_chw(Tensor.zeros(3, 4, 4, CHW), np.zeros((2, 3, 3, 3)))


def test_global_avg_pool(rng):
    x = Tensor.from_array(rng.uniform(-1, 1, (4, 3, 5)))
    np.testing.assert_allclose(global_avg_pool_chw(x), x.array().mean(axis=(1, 2)), atol=1e-7)


def test_generated_microkernels_up_to_date():
    gen = ROOT / "tools" / "gen_microkernels.py"
    assert subprocess.run([sys.executable, str(gen), "--check"]).returncode == 0
