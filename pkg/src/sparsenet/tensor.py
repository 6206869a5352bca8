"""Dense tensors with explicit layout, plus slow reference operators.

The reference operators fix their accumulation order (bias first, then the
reduction index ascending) so they are deterministic and serve as oracles for
the optimized kernels in :mod:`sparsenet.kernels`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numba
import numpy as np

from .errors import LayoutError, ShapeError

CHW = "CHW"
HWC = "HWC"
LAYOUTS = (CHW, HWC)

Clamp = Optional[Tuple[float, float]]


@dataclass(frozen=True, eq=False)
class Tensor:
    """A batch-1 activation tensor stored as a flat float32 buffer."""

    channels: int
    height: int
    width: int
    layout: str
    data: np.ndarray

    def __post_init__(self):
        if self.layout not in LAYOUTS:
            raise LayoutError(f"unknown layout {self.layout!r}")
        if min(self.channels, self.height, self.width) < 1:
            raise ShapeError("tensor dimensions must be >= 1")
        data = np.ascontiguousarray(self.data, dtype=np.float32).reshape(-1)
        if data.size != self.channels * self.height * self.width:
            raise ShapeError(
                f"data has {data.size} elements, expected "
                f"{self.channels}x{self.height}x{self.width}"
            )
        object.__setattr__(self, "data", data)

    @classmethod
    def from_array(cls, arr: np.ndarray, layout: str = CHW) -> "Tensor":
        """Wrap a 3-D array whose axis order matches ``layout``."""
        arr = np.asarray(arr, dtype=np.float32)
        if arr.ndim != 3:
            raise ShapeError(f"expected a 3-D array, got shape {arr.shape}")
        if layout == CHW:
            c, h, w = arr.shape
        elif layout == HWC:
            h, w, c = arr.shape
        else:
            raise LayoutError(f"unknown layout {layout!r}")
        return cls(c, h, w, layout, arr.reshape(-1))

    @classmethod
    def zeros(cls, channels: int, height: int, width: int, layout: str = CHW) -> "Tensor":
        return cls(channels, height, width, layout, np.zeros(channels * height * width, np.float32))

    @property
    def spatial(self) -> int:
        return self.height * self.width

    def array(self) -> np.ndarray:
        """3-D view in the tensor's own axis order."""
        if self.layout == CHW:
            return self.data.reshape(self.channels, self.height, self.width)
        return self.data.reshape(self.height, self.width, self.channels)

    def matrix(self) -> np.ndarray:
        """CHW tensor viewed as a (channels, height*width) matrix."""
        if self.layout != CHW:
            raise LayoutError("matrix view requires CHW layout")
        return self.data.reshape(self.channels, self.spatial)

    def index(self, c: int, h: int, w: int) -> int:
        if self.layout == CHW:
            return c * (self.height * self.width) + h * self.width + w
        return (h * self.width + w) * self.channels + c

    def equals(self, other: "Tensor") -> bool:
        return (
            self.layout == other.layout
            and (self.channels, self.height, self.width)
            == (other.channels, other.height, other.width)
            and np.array_equal(self.data, other.data)
        )


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    rows: int
    cols: int
    data: np.ndarray

    def __post_init__(self):
        data = np.ascontiguousarray(self.data, dtype=np.float32).reshape(-1)
        if data.size != self.rows * self.cols:
            raise ShapeError(f"data has {data.size} elements, expected {self.rows}x{self.cols}")
        object.__setattr__(self, "data", data)

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "DenseMatrix":
        arr = np.asarray(arr, dtype=np.float32)
        if arr.ndim != 2:
            raise ShapeError(f"expected a 2-D array, got shape {arr.shape}")
        return cls(arr.shape[0], arr.shape[1], arr.reshape(-1))

    def array(self) -> np.ndarray:
        return self.data.reshape(self.rows, self.cols)


def hwc_to_chw(t: Tensor) -> Tensor:
    if t.layout != HWC:
        raise LayoutError(f"hwc_to_chw expects HWC input, got {t.layout}")
    chw = np.ascontiguousarray(t.array().transpose(2, 0, 1))
    return Tensor(t.channels, t.height, t.width, CHW, chw.reshape(-1))


def chw_to_hwc(t: Tensor) -> Tensor:
    if t.layout != CHW:
        raise LayoutError(f"chw_to_hwc expects CHW input, got {t.layout}")
    hwc = np.ascontiguousarray(t.array().transpose(1, 2, 0))
    return Tensor(t.channels, t.height, t.width, HWC, hwc.reshape(-1))


def clamp_bounds(clamp: Clamp) -> Tuple[float, float]:
    if clamp is None:
        return -math.inf, math.inf
    lo, hi = clamp
    if not lo < hi:
        raise ValueError(f"clamp requires lo < hi, got ({lo}, {hi})")
    return float(lo), float(hi)


def _bias_or_zeros(bias, n: int) -> np.ndarray:
    if bias is None:
        return np.zeros(n, np.float32)
    bias = np.ascontiguousarray(bias, dtype=np.float32).reshape(-1)
    if bias.size != n:
        raise ShapeError(f"bias has {bias.size} entries, expected {n}")
    return bias


@numba.njit(cache=True)
def _matmul_ref(w, act, bias, lo, hi, out):
    cout, cin = w.shape
    s = act.shape[1]
    for c in range(cout):
        row = out[c]
        for j in range(s):
            row[j] = bias[c]
        # Row-wise accumulation keeps each element's order k = 0, 1, 2, ...
        for k in range(cin):
            wk = w[c, k]
            for j in range(s):
                row[j] += wk * act[k, j]
        for j in range(s):
            row[j] = min(max(row[j], lo), hi)


def matmul_reference(w: DenseMatrix, act: Tensor, bias=None, clamp: Clamp = None) -> Tensor:
    """Naive ``clamp(bias + W @ act)`` over a CHW tensor viewed as Cin x (H*W)."""
    if act.layout != CHW:
        raise LayoutError("matmul_reference expects CHW activations")
    if w.cols != act.channels:
        raise ShapeError(f"weight has {w.cols} columns but activation has {act.channels} channels")
    lo, hi = clamp_bounds(clamp)
    out = np.empty((w.rows, act.spatial), np.float32)
    _matmul_ref(w.array(), act.matrix(), _bias_or_zeros(bias, w.rows), lo, hi, out)
    return Tensor(w.rows, act.height, act.width, CHW, out.reshape(-1))


def same_padding(size: int, kernel: int, stride: int) -> Tuple[int, int]:
    """Output size and leading pad for SAME padding with excess on the bottom/right."""
    out = -(-size // stride)
    total = max((out - 1) * stride + kernel - size, 0)
    return out, total // 2


@numba.njit(cache=True)
def _conv_ref(x, w, bias, stride, pad_t, pad_l, groups, lo, hi, out):
    cin, h, wd = x.shape
    cout, cpg, kh, kw = w.shape
    _, oh, ow = out.shape
    opg = cout // groups
    for co in range(cout):
        g = co // opg
        for oy in range(oh):
            for ox in range(ow):
                acc = bias[co]
                for ci in range(cpg):
                    for ky in range(kh):
                        iy = oy * stride - pad_t + ky
                        if iy < 0 or iy >= h:
                            continue
                        for kx in range(kw):
                            ix = ox * stride - pad_l + kx
                            if ix < 0 or ix >= wd:
                                continue
                            acc += w[co, ci, ky, kx] * x[g * cpg + ci, iy, ix]
                out[co, oy, ox] = min(max(acc, lo), hi)


def conv2d_reference(
    inp: Tensor,
    weights: np.ndarray,
    stride: int = 1,
    bias=None,
    clamp: Clamp = None,
    groups: int = 1,
) -> Tensor:
    """Direct zero-padded convolution with weights shaped [Cout][Cin/groups][kh][kw].

    Accepts either layout and always returns CHW. ``groups == Cin`` gives a
    depthwise convolution without materializing block-diagonal weights.
    """
    weights = np.ascontiguousarray(weights, dtype=np.float32)
    if weights.ndim != 4:
        raise ShapeError(f"weights must be 4-D, got shape {weights.shape}")
    cout, cpg, kh, kw = weights.shape
    if kh not in (1, 3) or kw not in (1, 3):
        raise ShapeError(f"unsupported kernel {kh}x{kw}")
    if stride not in (1, 2):
        raise ShapeError(f"unsupported stride {stride}")
    x = hwc_to_chw(inp) if inp.layout == HWC else inp
    if groups < 1 or x.channels % groups or cout % groups or x.channels // groups != cpg:
        raise ShapeError(
            f"weights {weights.shape} incompatible with {x.channels} input channels, groups={groups}"
        )
    oh, pad_t = same_padding(x.height, kh, stride)
    ow, pad_l = same_padding(x.width, kw, stride)
    lo, hi = clamp_bounds(clamp)
    out = np.empty((cout, oh, ow), np.float32)
    _conv_ref(x.array(), weights, _bias_or_zeros(bias, cout), stride, pad_t, pad_l, groups, lo, hi, out)
    return Tensor(cout, oh, ow, CHW, out.reshape(-1))
