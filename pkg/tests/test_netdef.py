import numpy as np
import pytest

from sparsenet.bcsr import BcsrMatrix
from sparsenet.errors import ShapeError
from sparsenet.netdef import (
    DENSE, LayerKind, LayerSpec, LayerWeights, NetworkSpec, SparsityPlan, build_cache_aware_mbv2,
    build_mbv1, build_mbv2, build_network, check_weights, count_flops, count_params, depthwise_flop_share,
    expanded_channels, instantiate_weights, layer_counts, random_image, round_channels, run_network,
    run_network_reference, sparse_layers, published_plan,
)
from sparsenet.kernels import RELU6
from sparsenet.tensor import HWC, Tensor

SMALL = (32, 32, 3)


@pytest.mark.parametrize("value,expected", [(32 * 0.5, 16), (44.8, 48), (89.6, 88), (20, 24), (3, 8), (12, 16)])
def test_round_channels(value, expected):
    assert round_channels(value) == expected


def test_mbv1_structure():
    net = build_mbv1()
    kinds = [l.kind for l in net.layers]
    assert kinds.count(LayerKind.POINTWISE) == 13 and kinds.count(LayerKind.DEPTHWISE) == 13
    assert kinds[0] == LayerKind.ENTRY and kinds[-2:] == [LayerKind.POOL, LayerKind.FC]
    assert net.layers[-1].cin == 1024 and net.num_classes == 1000


def test_mbv2_structure():
    net = build_mbv2()
    pw = [l for l in net.layers if l.kind == LayerKind.POINTWISE]
    # 17 bottlenecks, 16 of them with an expansion layer, plus the 1280 head
    assert len(pw) == 16 * 2 + 1 + 1
    assert pw[-1].cout == 1280
    assert sum(l.residual for l in net.layers) == 10


def test_mbv2_head_grows_only_above_unit_width():
    assert build_mbv2(0.5).layers[-3].cout == 1280
    assert build_mbv2(1.4).layers[-3].cout == 1792


def test_mbv1_dense_counts():
    flops, _ = count_flops(build_mbv1())
    params, _ = count_params(build_mbv1())
    assert flops == 1_120_144_896
    assert params == 4_221_032


def test_sparse_counts_scale_pointwise_only():
    dense = build_mbv1()
    sparse = build_mbv1(plan=SparsityPlan(0.9))
    for d, s in zip(layer_counts(dense), layer_counts(sparse)):
        if s.layer.kind == LayerKind.POINTWISE:
            assert s.sparse_flops == pytest.approx(0.1 * d.dense_flops)
        else:
            assert s.sparse_flops == d.dense_flops


def test_block_plan_follows_units():
    net = build_mbv1(1.4, published_plan("mbv1"))
    blocks = {l.unit: l.block_h for l in net.layers if l.kind == LayerKind.POINTWISE}
    assert [u for u, b in blocks.items() if b == 4] == [12, 13]
    assert set(blocks[u] for u in range(1, 12)) == {1}
    assert len(sparse_layers(net)) == 13


def test_fc_is_not_pruned():
    net = build_mbv2(plan=SparsityPlan(0.85))
    assert not net.layers[-1].sparse


def test_cache_aware_ignores_block_start():
    net = build_cache_aware_mbv2(SparsityPlan(0.85, 3, 4))
    assert all(l.block_h == 1 for l in net.layers)
    assert max(expanded_channels(net)) <= 512


def test_depthwise_share_mbv1():
    assert depthwise_flop_share(build_mbv1()) < 0.02


def test_validation_catches_channel_mismatch():
    layers = [
        LayerSpec(LayerKind.ENTRY, 3, 8, stride=2),
        LayerSpec(LayerKind.POINTWISE, 16, 8),
        LayerSpec(LayerKind.POOL, 8, 8),
        LayerSpec(LayerKind.FC, 8, 10),
    ]
    with pytest.raises(ShapeError):
        NetworkSpec("bad", 1.0, layers)


def test_unknown_arch():
    with pytest.raises(ValueError):
        build_network("resnet")


def test_instantiate_weights_honours_plan():
    net = build_mbv2(0.5, SparsityPlan(0.8, 5, 2), num_classes=10, input_size=SMALL)
    ws = instantiate_weights(net, 3)
    check_weights(net, ws)
    for layer, lw in zip(net.layers, ws.layers):
        if layer.sparse:
            assert isinstance(lw.kernel, BcsrMatrix) and lw.kernel.block_h == layer.block_h
            kept = lw.kernel.nnz / (layer.rows * layer.cin)
            assert kept == pytest.approx(0.2, abs=0.02)


def test_check_weights_rejects_wrong_kernel():
    net = build_mbv1(0.25, num_classes=10, input_size=SMALL)
    ws = instantiate_weights(net, 0)
    ws.layers[1] = LayerWeights(np.zeros((3, 3, 3), np.float32), ws.layers[1].bias)
    with pytest.raises(ShapeError):
        check_weights(net, ws)


@pytest.mark.parametrize("arch", ["mbv1", "mbv2", "ca-mbv2"])
@pytest.mark.parametrize("plan", [DENSE, SparsityPlan(0.8, 2, 4)], ids=["dense", "sparse"])
def test_executor_matches_reference_small(arch, plan):
    net = build_network(arch, 0.5, plan, num_classes=10, input_size=SMALL)
    ws = instantiate_weights(net, 1)
    img = random_image(net, 2)
    got = run_network(net, ws, img)
    ref = run_network_reference(net, ws, img)
    assert got.shape == (10,)
    assert np.max(np.abs(got - ref)) <= 1e-4


def test_residual_uses_block_input():
    # Entry -> unit 1: dw -> pw (residual); with zero pw weights and bias the block is the identity.
    layers = [
        LayerSpec(LayerKind.ENTRY, 3, 8, stride=1, act=RELU6),
        LayerSpec(LayerKind.DEPTHWISE, 8, 8, act=RELU6, unit=1),
        LayerSpec(LayerKind.POINTWISE, 8, 8, unit=1, residual=True),
        LayerSpec(LayerKind.POOL, 8, 8, unit=2),
        LayerSpec(LayerKind.FC, 8, 4, unit=2),
    ]
    net = NetworkSpec("toy", 1.0, layers, input_size=(4, 4, 3))
    ws = instantiate_weights(net, 0)
    from sparsenet.tensor import DenseMatrix
    ws.layers[2] = LayerWeights(DenseMatrix.from_array(np.zeros((8, 8))), np.zeros(8, np.float32))
    ws.layers[4] = LayerWeights(DenseMatrix.from_array(np.eye(4, 8)), np.zeros(4, np.float32))
    img = random_image(net, 0)
    profile = []
    out = run_network(net, ws, img, profile=lambda i, l, t: profile.append(i))
    # the FC picks out the pooled entry activations of channels 0..3
    from sparsenet.kernels import entry_conv_hwc_to_chw, global_avg_pool_chw
    entry = entry_conv_hwc_to_chw(img, ws[0].kernel, ws[0].bias, 1, RELU6)
    np.testing.assert_allclose(out, global_avg_pool_chw(entry)[:4], atol=1e-6)
    assert profile == [0, 1, 2, 3, 4]


def test_executor_rejects_wrong_input():
    net = build_mbv1(0.25, num_classes=10, input_size=SMALL)
    ws = instantiate_weights(net, 0)
    with pytest.raises(ShapeError):
        run_network(net, ws, Tensor.zeros(3, 16, 16, HWC))
