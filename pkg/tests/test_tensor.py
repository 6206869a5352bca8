import numpy as np
import pytest

from sparsenet.errors import LayoutError, ShapeError
from sparsenet.tensor import (
    CHW, HWC, DenseMatrix, Tensor, chw_to_hwc, conv2d_reference, hwc_to_chw, matmul_reference,
    same_padding,
)


def test_layout_indexing(rng):
    arr = rng.standard_normal((3, 4, 5)).astype(np.float32)
    chw = Tensor.from_array(arr, CHW)
    hwc = chw_to_hwc(chw)
    for c, h, w in [(0, 0, 0), (2, 3, 4), (1, 2, 0)]:
        assert chw.data[chw.index(c, h, w)] == arr[c, h, w]
        assert hwc.data[hwc.index(c, h, w)] == arr[c, h, w]


def test_layout_round_trip_is_exact(rng):
    t = Tensor.from_array(rng.standard_normal((7, 5, 3)), HWC)
    assert chw_to_hwc(hwc_to_chw(t)).equals(t)


def test_single_channel_conversion_is_a_copy():
    t = Tensor.from_array(np.arange(12, dtype=np.float32).reshape(3, 4, 1), HWC)
    out = hwc_to_chw(t)
    assert np.array_equal(out.data, t.data)


def test_wrong_layout_rejected():
    t = Tensor.zeros(2, 2, 2, CHW)
    with pytest.raises(LayoutError):
        chw_to_hwc(hwc_to_chw(t))
    with pytest.raises(LayoutError):
        Tensor.zeros(2, 2, 2, HWC).matrix()


def test_bad_shapes_rejected():
    with pytest.raises(ShapeError):
        Tensor(2, 2, 2, CHW, np.zeros(7))
    with pytest.raises(LayoutError):
        Tensor(2, 2, 2, "NCHW", np.zeros(8))


def test_matmul_reference_against_numpy(rng):
    w = rng.standard_normal((6, 5)).astype(np.float32)
    act = Tensor.from_array(rng.standard_normal((5, 3, 4)))
    bias = rng.standard_normal(6).astype(np.float32)
    out = matmul_reference(DenseMatrix.from_array(w), act, bias, (0.0, 6.0))
    expected = np.clip(w.astype(np.float64) @ act.matrix() + bias[:, None], 0, 6)
    assert out.layout == CHW and (out.height, out.width) == (3, 4)
    np.testing.assert_allclose(out.matrix(), expected, atol=1e-5)


def test_matmul_reference_shape_mismatch():
    with pytest.raises(ShapeError):
        matmul_reference(DenseMatrix.from_array(np.zeros((2, 3))), Tensor.zeros(4, 1, 1))


@pytest.mark.parametrize("size,stride,expected", [(224, 2, (112, 0)), (7, 1, (7, 1)), (7, 2, (4, 1)), (8, 2, (4, 0))])
def test_same_padding(size, stride, expected):
    assert same_padding(size, 3, stride) == expected


def _conv_naive(x, w, stride, bias):
    # Direct SAME convolution in float64 on CHW input.
    cout, cin, k, _ = w.shape
    c, h, wd = x.shape
    oh, pt = same_padding(h, k, stride)
    ow, pl = same_padding(wd, k, stride)
    xp = np.zeros((c, h + 2 * k, wd + 2 * k))
    xp[:, k : k + h, k : k + wd] = x
    out = np.zeros((cout, oh, ow))
    for co in range(cout):
        for oy in range(oh):
            for ox in range(ow):
                y0, x0 = oy * stride - pt + k, ox * stride - pl + k
                out[co, oy, ox] = bias[co] + np.sum(w[co] * xp[:, y0 : y0 + k, x0 : x0 + k])
    return out


@pytest.mark.parametrize("stride", [1, 2])
@pytest.mark.parametrize("kernel", [1, 3])
def test_conv2d_reference(rng, stride, kernel):
    x = rng.standard_normal((3, 9, 8))
    w = rng.standard_normal((4, 3, kernel, kernel))
    b = rng.standard_normal(4)
    got = conv2d_reference(Tensor.from_array(x), w, stride, b)
    np.testing.assert_allclose(got.array(), _conv_naive(x, w, stride, b), atol=1e-4)
    # HWC input gives the same CHW output
    got_hwc = conv2d_reference(Tensor.from_array(x.transpose(1, 2, 0), HWC), w, stride, b)
    assert got_hwc.equals(got)


def test_conv2d_grouped_is_depthwise(rng):
    x = rng.standard_normal((4, 6, 6))
    w = rng.standard_normal((4, 1, 3, 3))
    got = conv2d_reference(Tensor.from_array(x), w, 1, groups=4).array()
    for c in range(4):
        one = conv2d_reference(Tensor.from_array(x[c : c + 1]), w[c : c + 1], 1).array()
        np.testing.assert_array_equal(got[c], one[0])
