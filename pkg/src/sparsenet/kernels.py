"""CHW inference kernels: sparse 1x1 convolution (SpMM) and its supporting ops.

Every kernel is compiled for two tiers from the same source:

``scalar``
    strict IEEE evaluation with an 8-wide default strip.
``vector``
    a 16-wide default strip, compiled with the fast-math flags that do not
    change rounding (no contraction, no reassociation) so LLVM is free to
    pack each strip into SIMD lanes.

Neither tier reorders a sum, so both match the reference operators
bit-for-bit wherever the accumulation order agrees. The SpMM and GEMM strip
bodies live in the generated ``_microkernels`` module.

The tier is chosen per call, or globally through :func:`set_tier` or the
``SPARSENET_TIER`` environment variable (``scalar``, ``vector`` or ``auto``).
"""

from __future__ import annotations

import os
import re
import types
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numba
import numpy as np

from . import _microkernels
from .bcsr import BLOCK_SIZES, BcsrMatrix
from .errors import LayoutError, ShapeError
from .tensor import CHW, HWC, DenseMatrix, Tensor, _bias_or_zeros, clamp_bounds, same_padding

TIERS = ("scalar", "vector")
STRIP_WIDTHS = (4, 8, 16)
DEFAULT_STRIP = {"scalar": 8, "vector": 16}
VECTOR_FASTMATH = {"nnan", "ninf", "nsz", "arcp", "afn"}


class FusedActivation(NamedTuple):
    """Output clamp fused into a kernel's store; ``None`` means no fusion."""

    lo: float
    hi: float


RELU6 = FusedActivation(0.0, 6.0)


@dataclass(frozen=True)
class MicrokernelConfig:
    """SpMM variant: ``strip_width`` pixels by ``out_block`` output channels."""

    strip_width: int = 8
    out_block: int = 1
    prefetch: bool = False
    prefetch_distance: int = 1

    def __post_init__(self):
        if self.strip_width not in STRIP_WIDTHS:
            raise ShapeError(f"strip width must be one of {STRIP_WIDTHS}, got {self.strip_width}")
        if self.out_block not in BLOCK_SIZES:
            raise ShapeError(f"output block must be one of {BLOCK_SIZES}, got {self.out_block}")
        if self.prefetch_distance < 1:
            raise ValueError("prefetch distance must be >= 1 strip")

    @property
    def name(self) -> str:
        return f"{self.strip_width}x{self.out_block}"

    @classmethod
    def parse(cls, name: str, prefetch: bool = False) -> "MicrokernelConfig":
        m = re.fullmatch(r"(\d+)x(\d+)", name.strip())
        if not m:
            raise ValueError(f"unknown kernel variant {name!r}; expected MxN such as 16x2")
        return cls(int(m.group(1)), int(m.group(2)), prefetch)


ALL_VARIANTS = tuple(MicrokernelConfig(m, n) for m in STRIP_WIDTHS for n in BLOCK_SIZES)

_tier_override: Optional[str] = None


def set_tier(tier: Optional[str]) -> None:
    """Force a tier for subsequent calls; ``None`` or ``"auto"`` restores the default."""
    global _tier_override
    if tier in (None, "auto"):
        _tier_override = None
        return
    if tier not in TIERS:
        raise ValueError(f"unknown tier {tier!r}")
    _tier_override = tier


def get_tier(tier: Optional[str] = None) -> str:
    if tier is None or tier == "auto":
        tier = _tier_override or os.environ.get("SPARSENET_TIER", "auto")
    if tier == "auto":
        return "vector"
    if tier not in TIERS:
        raise ValueError(f"unknown tier {tier!r}")
    return tier


def default_config(out_block: int = 1, tier: Optional[str] = None) -> MicrokernelConfig:
    return MicrokernelConfig(DEFAULT_STRIP[get_tier(tier)], out_block)


def _compile_tiers(fn):
    compiled = {}
    for tier in TIERS:
        # A distinct qualname per tier keeps numba's on-disk caches apart.
        clone = types.FunctionType(
            fn.__code__, fn.__globals__, f"{fn.__name__}_{tier}", fn.__defaults__, fn.__closure__
        )
        clone.__qualname__ = f"{fn.__qualname__}_{tier}"
        compiled[tier] = numba.njit(cache=True, nogil=True, fastmath=VECTOR_FASTMATH if tier == "vector" else False)(clone)
    return compiled


def _depthwise_impl(x, w, bias, stride, pad_t, pad_l, lo, hi, out):
    c_total, h, wd = x.shape
    _, oh, ow = out.shape
    acc = np.empty(ow, np.float32)
    for c in range(c_total):
        for oy in range(oh):
            b = bias[c]
            for ox in range(ow):
                acc[ox] = b
            for ky in range(3):
                iy = oy * stride - pad_t + ky
                if iy < 0 or iy >= h:
                    continue
                for kx in range(3):
                    wv = w[c, ky, kx]
                    # Output columns whose input column falls inside the row.
                    first = max(0, -((kx - pad_l) // stride))
                    last = min(ow - 1, (wd - 1 + pad_l - kx) // stride)
                    for ox in range(first, last + 1):
                        acc[ox] += wv * x[c, iy, ox * stride - pad_l + kx]
            for ox in range(ow):
                out[c, oy, ox] = min(max(acc[ox], lo), hi)


def _entry_impl(img, w, bias, stride, pad_t, pad_l, lo, hi, out):
    h, wd, cin = img.shape
    cout = w.shape[0]
    _, oh, ow = out.shape
    for oy in range(oh):
        for ox in range(ow):
            for co in range(cout):
                acc = bias[co]
                for ky in range(3):
                    iy = oy * stride - pad_t + ky
                    if iy < 0 or iy >= h:
                        continue
                    for kx in range(3):
                        ix = ox * stride - pad_l + kx
                        if ix < 0 or ix >= wd:
                            continue
                        for ci in range(cin):
                            acc += w[co, ky, kx, ci] * img[iy, ix, ci]
                out[co, oy, ox] = min(max(acc, lo), hi)


_DEPTHWISE = _compile_tiers(_depthwise_impl)
_ENTRY = _compile_tiers(_entry_impl)


def _output_buffer(out, rows: int, spatial: int) -> np.ndarray:
    if out is None:
        return np.empty((rows, spatial), np.float32)
    if out.shape != (rows, spatial) or out.dtype != np.float32 or not out.flags.c_contiguous:
        raise ShapeError(f"output buffer must be a contiguous float32 array of shape {(rows, spatial)}")
    return out


def spmm(
    w: BcsrMatrix,
    act: Tensor,
    bias=None,
    fused: Optional[FusedActivation] = None,
    cfg: Optional[MicrokernelConfig] = None,
    tier: Optional[str] = None,
    out: Optional[np.ndarray] = None,
) -> Tensor:
    """Sparse weights times dense CHW activations, with bias and optional clamp.

    ``out`` may supply a preallocated (rows, H*W) float32 buffer.
    """
    tier = get_tier(tier)
    if cfg is None:
        cfg = default_config(w.block_h, tier)
    if act.layout != CHW:
        raise LayoutError("spmm expects CHW activations")
    if w.cols != act.channels:
        raise ShapeError(f"weight has {w.cols} columns but activation has {act.channels} channels")
    if w.block_h != cfg.out_block:
        raise ShapeError(f"matrix block_h={w.block_h} does not match kernel variant {cfg.name}")
    lo, hi = clamp_bounds(fused)
    buf = _output_buffer(out, w.rows, act.spatial)
    # Strip order follows the cache schedule: for each strip of strip_width
    # pixels every block row consumes it before the next strip is loaded.
    _microkernels.SPMM[tier, w.block_h](
        w.block_row_ptr, w.col_indices, w.values, act.matrix(),
        _bias_or_zeros(bias, w.rows), lo, hi, cfg.strip_width, cfg.prefetch,
        cfg.prefetch_distance, buf,
    )
    return Tensor(w.rows, act.height, act.width, CHW, buf.reshape(-1))


def spconv_1x1(w, act, bias=None, fused=None, cfg=None, tier=None, out=None) -> Tensor:
    """Sparse 1x1 convolution; identical to :func:`spmm` with S = H*W."""
    return spmm(w, act, bias, fused, cfg, tier, out)


def _row_block(rows: int) -> int:
    return next(n for n in (4, 2, 1) if rows % n == 0)


def dense_gemm_baseline(
    w: DenseMatrix,
    act: Tensor,
    bias=None,
    fused: Optional[FusedActivation] = None,
    cfg: Optional[MicrokernelConfig] = None,
    tier: Optional[str] = None,
    out: Optional[np.ndarray] = None,
) -> Tensor:
    """Dense 1x1 convolution using the same strip schedule as :func:`spmm`."""
    tier = get_tier(tier)
    if cfg is None:
        cfg = MicrokernelConfig(DEFAULT_STRIP[tier], _row_block(w.rows))
    elif w.rows % cfg.out_block:
        raise ShapeError(f"{w.rows} rows not divisible by row block {cfg.out_block}")
    if act.layout != CHW:
        raise LayoutError("dense_gemm_baseline expects CHW activations")
    if w.cols != act.channels:
        raise ShapeError(f"weight has {w.cols} columns but activation has {act.channels} channels")
    lo, hi = clamp_bounds(fused)
    buf = _output_buffer(out, w.rows, act.spatial)
    _microkernels.GEMM[tier, cfg.out_block](
        w.array(), act.matrix(), _bias_or_zeros(bias, w.rows), lo, hi, cfg.strip_width, buf
    )
    return Tensor(w.rows, act.height, act.width, CHW, buf.reshape(-1))


def depthwise_conv_chw(
    act: Tensor, weights: np.ndarray, bias=None, stride: int = 1,
    fused: Optional[FusedActivation] = None, tier: Optional[str] = None,
) -> Tensor:
    """3x3 depthwise convolution over CHW, SAME padding, weights shaped [C][3][3]."""
    if act.layout != CHW:
        raise LayoutError("depthwise_conv_chw expects CHW activations")
    weights = np.ascontiguousarray(weights, dtype=np.float32)
    if weights.shape != (act.channels, 3, 3):
        raise ShapeError(f"depthwise weights must be {(act.channels, 3, 3)}, got {weights.shape}")
    if stride not in (1, 2):
        raise ShapeError(f"unsupported stride {stride}")
    oh, pad_t = same_padding(act.height, 3, stride)
    ow, pad_l = same_padding(act.width, 3, stride)
    lo, hi = clamp_bounds(fused)
    out = np.empty((act.channels, oh, ow), np.float32)
    _DEPTHWISE[get_tier(tier)](
        act.array(), weights, _bias_or_zeros(bias, act.channels), stride, pad_t, pad_l, lo, hi, out
    )
    return Tensor(act.channels, oh, ow, CHW, out.reshape(-1))


def entry_conv_hwc_to_chw(
    img: Tensor, weights: np.ndarray, bias=None, stride: int = 2,
    fused: Optional[FusedActivation] = None, tier: Optional[str] = None,
) -> Tensor:
    """Dense 3x3 convolution reading HWC and writing CHW; weights [Cout][3][3][Cin]."""
    if img.layout != HWC:
        raise LayoutError("entry convolution expects an HWC image")
    weights = np.ascontiguousarray(weights, dtype=np.float32)
    if weights.ndim != 4 or weights.shape[1:] != (3, 3, img.channels):
        raise ShapeError(f"entry weights must be [Cout][3][3][{img.channels}], got {weights.shape}")
    if stride not in (1, 2):
        raise ShapeError(f"unsupported stride {stride}")
    cout = weights.shape[0]
    oh, pad_t = same_padding(img.height, 3, stride)
    ow, pad_l = same_padding(img.width, 3, stride)
    lo, hi = clamp_bounds(fused)
    out = np.empty((cout, oh, ow), np.float32)
    _ENTRY[get_tier(tier)](
        img.array(), weights, _bias_or_zeros(bias, cout), stride, pad_t, pad_l, lo, hi, out
    )
    return Tensor(cout, oh, ow, CHW, out.reshape(-1))


def global_avg_pool_chw(act: Tensor) -> np.ndarray:
    if act.layout != CHW:
        raise LayoutError("global_avg_pool_chw expects CHW activations")
    return act.matrix().mean(axis=1, dtype=np.float64).astype(np.float32)
