"""MobileNet-family network descriptions, FLOP/parameter counters and executors.

Layers are grouped into *units*: unit 0 is the entry convolution, units
1..N are the depthwise-separable pairs (MBv1) or inverted-residual
bottlenecks (MBv2 and the cache-aware variant), followed by the head. A
:class:`SparsityPlan` switches to output-channel blocks from a given unit
onward.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator, List, Optional, Tuple, Union

import numpy as np

from . import kernels
from .bcsr import BcsrMatrix, BlockConfig, bitmask_overhead_params, decode_bcsr, encode_bcsr, generate_mask
from .errors import ShapeError
from .kernels import RELU6, FusedActivation
from .tensor import CHW, HWC, DenseMatrix, Tensor, conv2d_reference, matmul_reference, same_padding

# The published MobileNet FLOP totals are matched only when a depthwise
# multiply-accumulate counts as one FLOP; every other layer counts two.
DEPTHWISE_FLOPS_PER_MAC = 1

MBV1_CHANNELS = (64, 128, 128, 256, 256, 512, 512, 512, 512, 512, 512, 1024, 1024)
MBV1_STRIDES = (1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 1, 2, 1)
# (expansion, channels, repeats, first stride)
MBV2_STAGES = ((1, 16, 1, 1), (6, 24, 2, 2), (6, 32, 3, 2), (6, 64, 4, 2), (6, 96, 3, 1), (6, 160, 3, 2), (6, 320, 1, 1))
CA_MBV2_STAGES = ((1, 16, 1, 1), (8, 24, 2, 2), (8, 32, 4, 2), (4, 64, 6, 2), (3, 96, 6, 1), (2, 160, 6, 2), (2, 320, 1, 1))
ARCHITECTURES = ("mbv1", "mbv2", "ca-mbv2")


class LayerKind(str, enum.Enum):
    ENTRY = "entry"
    POINTWISE = "pointwise"
    DEPTHWISE = "depthwise"
    POOL = "pool"
    FC = "fc"


@dataclass(frozen=True)
class LayerSpec:
    kind: LayerKind
    cin: int
    cout: int
    stride: int = 1
    sparse: bool = False
    sparsity: float = 0.0
    block_h: int = 1
    act: Optional[FusedActivation] = None
    unit: int = 0
    # Add the activation that entered this layer's unit after this layer.
    residual: bool = False

    @property
    def rows(self) -> int:
        """Output rows as stored, padded up to a whole number of blocks."""
        return -(-self.cout // self.block_h) * self.block_h

    @property
    def is_matmul(self) -> bool:
        return self.kind in (LayerKind.POINTWISE, LayerKind.FC)


@dataclass(frozen=True)
class SparsityPlan:
    """Uniform sparsity over pruned 1x1 layers, blocked from ``block_start_layer`` on.

    ``block_start_layer=None`` keeps every layer unstructured (block size 1).
    """

    sparsity: float = 0.0
    block_start_layer: Optional[int] = None
    block_h_after: int = 4

    def __post_init__(self):
        if not 0.0 <= self.sparsity < 1.0:
            raise ValueError(f"sparsity must be in [0, 1), got {self.sparsity}")
        if self.block_h_after not in (1, 2, 4):
            raise ValueError(f"block size must be 1, 2 or 4, got {self.block_h_after}")

    def block_for(self, unit: int) -> int:
        if self.sparsity == 0.0 or self.block_start_layer is None or unit < self.block_start_layer:
            return 1
        return self.block_h_after


DENSE = SparsityPlan()
# Published sparse configurations: (sparsity, first blocked unit, block size).
PUBLISHED_MBV1 = SparsityPlan(0.90, 12, 4)
PUBLISHED_MBV2 = SparsityPlan(0.85, 11, 2)
PUBLISHED_CA_MBV2 = SparsityPlan(0.85, None, 1)


@dataclass(frozen=True)
class NetworkSpec:
    name: str
    width: float
    layers: Tuple[LayerSpec, ...]
    plan: SparsityPlan = DENSE
    input_size: Tuple[int, int, int] = (224, 224, 3)

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        validate_network(self)

    @property
    def num_classes(self) -> int:
        return self.layers[-1].cout


def validate_network(net: NetworkSpec) -> None:
    layers = net.layers
    if len(layers) < 3:
        raise ShapeError("a network needs at least entry, pool and FC layers")
    if layers[0].kind != LayerKind.ENTRY:
        raise ShapeError("first layer must be the entry convolution")
    if layers[-1].kind != LayerKind.FC or layers[-2].kind != LayerKind.POOL:
        raise ShapeError("network must end with global pooling followed by a fully connected layer")
    h, w, c = net.input_size
    if min(h, w, c) < 1:
        raise ShapeError("input dimensions must be >= 1")
    if layers[0].cin != c:
        raise ShapeError(f"entry convolution expects {layers[0].cin} channels, input has {c}")
    for i, layer in enumerate(layers):
        if min(layer.cin, layer.cout) < 1:
            raise ShapeError(f"layer {i}: channel counts must be >= 1")
        if i and layer.cin != layers[i - 1].cout:
            raise ShapeError(f"layer {i}: cin={layer.cin} but previous layer emits {layers[i - 1].cout}")
        if layer.kind in (LayerKind.DEPTHWISE, LayerKind.POOL) and layer.cin != layer.cout:
            raise ShapeError(f"layer {i}: {layer.kind.value} must preserve channel count")
        if layer.stride not in (1, 2) or (layer.stride != 1 and layer.kind not in (LayerKind.ENTRY, LayerKind.DEPTHWISE)):
            raise ShapeError(f"layer {i}: invalid stride {layer.stride}")
        if layer.sparse:
            if not layer.is_matmul:
                raise ShapeError(f"layer {i}: only 1x1 and FC layers can be sparse")
            if not 0.0 < layer.sparsity < 1.0:
                raise ShapeError(f"layer {i}: sparse layers need 0 < sparsity < 1")
        elif layer.sparsity != 0.0 or layer.block_h != 1:
            raise ShapeError(f"layer {i}: dense layers have sparsity 0 and block size 1")
        if layer.block_h not in (1, 2, 4):
            raise ShapeError(f"layer {i}: invalid block size {layer.block_h}")
    # Residual adds need the unit's input shape to match its output.
    for i, layer in enumerate(layers):
        if layer.residual:
            first = next(j for j, l in enumerate(layers) if l.unit == layer.unit)
            if layers[first].cin != layer.cout or any(l.stride != 1 for l in layers[first : i + 1]):
                raise ShapeError(f"layer {i}: residual add across a shape change")


def round_channels(channels: float, divisor: int = 8) -> int:
    """Nearest multiple of ``divisor`` (halves round up), at least ``divisor``."""
    return max(divisor, int(channels / divisor + 0.5) * divisor)


def _pointwise(cin, cout, plan, unit, act, residual=False) -> LayerSpec:
    sparse = plan.sparsity > 0.0
    return LayerSpec(
        LayerKind.POINTWISE, cin, cout, sparse=sparse, sparsity=plan.sparsity,
        block_h=plan.block_for(unit) if sparse else 1, act=act, unit=unit, residual=residual,
    )


def _head(cin, unit, num_classes) -> List[LayerSpec]:
    return [
        LayerSpec(LayerKind.POOL, cin, cin, unit=unit),
        LayerSpec(LayerKind.FC, cin, num_classes, unit=unit),
    ]


def build_mbv1(width: float = 1.0, plan: SparsityPlan = DENSE, num_classes: int = 1000,
               input_size: Tuple[int, int, int] = (224, 224, 3)) -> NetworkSpec:
    cin = round_channels(32 * width)
    layers = [LayerSpec(LayerKind.ENTRY, input_size[2], cin, stride=2, act=RELU6)]
    for unit, (c, s) in enumerate(zip(MBV1_CHANNELS, MBV1_STRIDES), start=1):
        cout = round_channels(c * width)
        layers.append(LayerSpec(LayerKind.DEPTHWISE, cin, cin, stride=s, act=RELU6, unit=unit))
        layers.append(_pointwise(cin, cout, plan, unit, RELU6))
        cin = cout
    layers += _head(cin, len(MBV1_CHANNELS) + 1, num_classes)
    return NetworkSpec("mbv1", width, layers, plan, input_size)


def _bottlenecks(layers, cin, stages, width, plan, unit) -> Tuple[int, int]:
    for expand, c, repeats, first_stride in stages:
        cout = round_channels(c * width)
        for i in range(repeats):
            stride = first_stride if i == 0 else 1
            hidden = cin * expand
            if expand != 1:
                layers.append(_pointwise(cin, hidden, plan, unit, RELU6))
            layers.append(LayerSpec(LayerKind.DEPTHWISE, hidden, hidden, stride=stride, act=RELU6, unit=unit))
            layers.append(_pointwise(hidden, cout, plan, unit, None, residual=(stride == 1 and cin == cout)))
            cin = cout
            unit += 1
    return cin, unit


def build_mbv2(width: float = 1.0, plan: SparsityPlan = DENSE, num_classes: int = 1000,
               input_size: Tuple[int, int, int] = (224, 224, 3)) -> NetworkSpec:
    cin = round_channels(32 * width)
    layers = [LayerSpec(LayerKind.ENTRY, input_size[2], cin, stride=2, act=RELU6)]
    cin, unit = _bottlenecks(layers, cin, MBV2_STAGES, width, plan, 1)
    last = round_channels(1280 * max(1.0, width))
    layers.append(_pointwise(cin, last, plan, unit, RELU6))
    layers += _head(last, unit + 1, num_classes)
    return NetworkSpec("mbv2", width, layers, plan, input_size)


def build_cache_aware_mbv2(plan: SparsityPlan = DENSE, num_classes: int = 1000,
                           input_size: Tuple[int, int, int] = (224, 224, 3)) -> NetworkSpec:
    """Cache-aware MBv2: expansion shrinks with depth so expanded strips stay small."""
    plan = replace(plan, block_start_layer=None)
    layers = [LayerSpec(LayerKind.ENTRY, input_size[2], 16, stride=2, act=RELU6)]
    cin, unit = _bottlenecks(layers, 16, CA_MBV2_STAGES, 1.0, plan, 1)
    layers.append(_pointwise(cin, 1280, plan, unit, RELU6))
    layers += _head(1280, unit + 1, num_classes)
    return NetworkSpec("ca-mbv2", 1.0, layers, plan, input_size)


def build_network(arch: str, width: float = 1.0, plan: SparsityPlan = DENSE, num_classes: int = 1000,
                  input_size: Tuple[int, int, int] = (224, 224, 3)) -> NetworkSpec:
    if arch == "mbv1":
        return build_mbv1(width, plan, num_classes, input_size)
    if arch == "mbv2":
        return build_mbv2(width, plan, num_classes, input_size)
    if arch == "ca-mbv2":
        return build_cache_aware_mbv2(plan, num_classes, input_size)
    raise ValueError(f"unknown architecture {arch!r}; expected one of {ARCHITECTURES}")


def expanded_channels(net: NetworkSpec) -> List[int]:
    """Channel counts entering each bottleneck's depthwise layer after expansion."""
    return [
        l.cout for i, l in enumerate(net.layers)
        if l.kind == LayerKind.POINTWISE and i + 1 < len(net.layers)
        and net.layers[i + 1].kind == LayerKind.DEPTHWISE
    ]


def layer_shapes(net: NetworkSpec) -> Iterator[Tuple[LayerSpec, Tuple[int, int], Tuple[int, int]]]:
    """Yield (layer, (h_in, w_in), (h_out, w_out)) along the network."""
    h, w, _ = net.input_size
    for layer in net.layers:
        if layer.kind in (LayerKind.ENTRY, LayerKind.DEPTHWISE):
            oh, _ = same_padding(h, 3, layer.stride)
            ow, _ = same_padding(w, 3, layer.stride)
        elif layer.kind == LayerKind.POOL:
            oh = ow = 1
        else:
            oh, ow = h, w
        yield layer, (h, w), (oh, ow)
        h, w = oh, ow


@dataclass(frozen=True)
class LayerCount:
    layer: LayerSpec
    dense_flops: int
    sparse_flops: float
    dense_params: int
    sparse_params: int


def layer_counts(net: NetworkSpec) -> List[LayerCount]:
    counts = []
    for layer, (h, w), (oh, ow) in layer_shapes(net):
        keep = 1.0 - layer.sparsity
        if layer.kind == LayerKind.ENTRY:
            weights = 9 * layer.cin * layer.cout
            flops = 2 * weights * oh * ow
        elif layer.kind == LayerKind.DEPTHWISE:
            weights = 9 * layer.cin
            flops = DEPTHWISE_FLOPS_PER_MAC * weights * oh * ow
        elif layer.kind == LayerKind.POOL:
            weights = 0
            flops = layer.cin * h * w
        else:
            weights = layer.cin * layer.cout
            flops = 2 * weights * oh * ow
        bias = 0 if layer.kind == LayerKind.POOL else layer.cout
        if layer.sparse:
            sparse_flops = flops * keep
            nonzeros = int(math.floor(weights * keep + 0.5))
            sparse_params = nonzeros + bitmask_overhead_params(layer.cout, layer.cin) + bias
        else:
            sparse_flops = float(flops)
            sparse_params = weights + bias
        counts.append(LayerCount(layer, flops, sparse_flops, weights + bias, sparse_params))
    return counts


def count_flops(net: NetworkSpec) -> Tuple[int, float]:
    """(dense, sparse) FLOPs; a multiply-accumulate is two FLOPs except in depthwise layers."""
    counts = layer_counts(net)
    return sum(c.dense_flops for c in counts), sum(c.sparse_flops for c in counts)


def count_params(net: NetworkSpec) -> Tuple[int, int]:
    """(dense, sparse) parameters; sparse layers pay one parameter per 32 bitmask bits."""
    counts = layer_counts(net)
    return sum(c.dense_params for c in counts), sum(c.sparse_params for c in counts)


Kernel = Union[np.ndarray, DenseMatrix, BcsrMatrix, None]


@dataclass(frozen=True, eq=False)
class LayerWeights:
    """Kernel and bias for one layer.

    Kernel shapes: entry ``[Cout][3][3][Cin]``, depthwise ``[C][3][3]``, 1x1 and FC
    layers a :class:`DenseMatrix` or (sparse layers) a :class:`BcsrMatrix` whose
    rows may be zero-padded to a whole block. Pool layers carry nothing.
    """

    kernel: Kernel = None
    bias: Optional[np.ndarray] = None


@dataclass(eq=False)
class WeightSet:
    layers: List[LayerWeights] = field(default_factory=list)

    def __len__(self):
        return len(self.layers)

    def __getitem__(self, i) -> LayerWeights:
        return self.layers[i]


def check_weights(net: NetworkSpec, weights: WeightSet) -> None:
    """Raise :class:`ShapeError` unless ``weights`` fits ``net`` layer by layer."""
    if len(weights) != len(net.layers):
        raise ShapeError(f"network has {len(net.layers)} layers but weight set has {len(weights)}")
    for i, (layer, lw) in enumerate(zip(net.layers, weights.layers)):
        if layer.kind == LayerKind.POOL:
            if lw.kernel is not None or lw.bias is not None:
                raise ShapeError(f"layer {i}: pooling has no weights")
            continue
        if lw.bias is None or np.shape(lw.bias) != (layer.cout,):
            raise ShapeError(f"layer {i}: bias must have shape ({layer.cout},)")
        k = lw.kernel
        if layer.kind == LayerKind.ENTRY:
            ok = isinstance(k, np.ndarray) and k.shape == (layer.cout, 3, 3, layer.cin)
        elif layer.kind == LayerKind.DEPTHWISE:
            ok = isinstance(k, np.ndarray) and k.shape == (layer.cin, 3, 3)
        elif layer.sparse:
            ok = (isinstance(k, BcsrMatrix) and k.block_h == layer.block_h
                  and (k.rows, k.cols) == (layer.rows, layer.cin))
        else:
            ok = isinstance(k, DenseMatrix) and (k.rows, k.cols) == (layer.cout, layer.cin)
        if not ok:
            raise ShapeError(f"layer {i}: kernel does not match {layer.kind.value} {layer.cin}->{layer.cout}")


def instantiate_weights(net: NetworkSpec, seed: int = 0) -> WeightSet:
    """Seeded random weights scaled to keep activations O(1); sparse layers masked and encoded."""
    rng = np.random.default_rng(seed)
    out = []
    for layer in net.layers:
        if layer.kind == LayerKind.POOL:
            out.append(LayerWeights())
            continue
        bias = rng.uniform(-0.1, 0.1, layer.cout).astype(np.float32)
        if layer.kind == LayerKind.ENTRY:
            bound = math.sqrt(6.0 / (9 * layer.cin))
            kernel = rng.uniform(-bound, bound, (layer.cout, 3, 3, layer.cin)).astype(np.float32)
        elif layer.kind == LayerKind.DEPTHWISE:
            kernel = rng.uniform(-math.sqrt(6.0 / 9), math.sqrt(6.0 / 9), (layer.cin, 3, 3)).astype(np.float32)
        else:
            fan_in = max(1.0, layer.cin * (1.0 - layer.sparsity))
            gain = 3.0 if layer.kind == LayerKind.FC or layer.act is None else 6.0
            bound = math.sqrt(gain / fan_in)
            dense = rng.uniform(-bound, bound, (layer.rows, layer.cin)).astype(np.float32)
            if layer.sparse:
                mask = generate_mask(layer.rows, layer.cin, layer.sparsity, BlockConfig(layer.block_h),
                                     seed=int(rng.integers(2**32)))
                dense = np.where(mask.bits, dense, np.float32(0))
                dense[layer.cout:] = 0.0
                kernel = encode_bcsr(DenseMatrix.from_array(dense), layer.block_h)
            else:
                kernel = DenseMatrix.from_array(dense)
        out.append(LayerWeights(kernel, bias))
    return WeightSet(out)


def _padded_bias(bias: np.ndarray, rows: int) -> np.ndarray:
    if bias.size == rows:
        return bias
    return np.concatenate([bias, np.zeros(rows - bias.size, np.float32)])


def _check_input(net: NetworkSpec, image: Tensor) -> None:
    if image.layout != HWC:
        raise ShapeError("network input must be an HWC image")
    if (image.height, image.width, image.channels) != tuple(net.input_size):
        raise ShapeError(f"input is {image.height}x{image.width}x{image.channels}, network expects "
                         f"{'x'.join(map(str, net.input_size))}")


def _trim(t: Tensor, channels: int) -> Tensor:
    if t.channels == channels:
        return t
    return Tensor(channels, t.height, t.width, CHW, t.data[: channels * t.spatial])


ProfileHook = Callable[[int, LayerSpec, float], None]


def run_network(net: NetworkSpec, weights: WeightSet, image: Tensor, tier: Optional[str] = None,
                profile: Optional[ProfileHook] = None) -> np.ndarray:
    """Execute with the optimized CHW kernels; returns float32 logits.

    ``profile(index, layer, seconds)`` is called after every layer when given.
    """
    _check_input(net, image)
    check_weights(net, weights)
    tier = kernels.get_tier(tier)
    x = image
    unit, unit_input = None, None
    for i, (layer, lw) in enumerate(zip(net.layers, weights.layers)):
        start = time.perf_counter() if profile else 0.0
        if layer.unit != unit:
            unit, unit_input = layer.unit, x
        if layer.kind == LayerKind.ENTRY:
            x = kernels.entry_conv_hwc_to_chw(x, lw.kernel, lw.bias, layer.stride, layer.act, tier)
        elif layer.kind == LayerKind.DEPTHWISE:
            x = kernels.depthwise_conv_chw(x, lw.kernel, lw.bias, layer.stride, layer.act, tier)
        elif layer.kind == LayerKind.POOL:
            x = Tensor(layer.cout, 1, 1, CHW, kernels.global_avg_pool_chw(x))
        elif layer.sparse:
            cfg = kernels.default_config(layer.block_h, tier)
            y = kernels.spmm(lw.kernel, x, _padded_bias(lw.bias, layer.rows), layer.act, cfg, tier)
            x = _trim(y, layer.cout)
        else:
            x = kernels.dense_gemm_baseline(lw.kernel, x, lw.bias, layer.act, tier=tier)
        if layer.residual:
            x = Tensor(x.channels, x.height, x.width, CHW, x.data + unit_input.data)
        if profile:
            profile(i, layer, time.perf_counter() - start)
    return x.data.copy()


def run_network_reference(net: NetworkSpec, weights: WeightSet, image: Tensor) -> np.ndarray:
    """Oracle executor: every layer through the naive reference operators on dense weights."""
    _check_input(net, image)
    check_weights(net, weights)
    x = image
    unit, unit_input = None, None
    for layer, lw in zip(net.layers, weights.layers):
        if layer.unit != unit:
            unit, unit_input = layer.unit, x
        if layer.kind == LayerKind.ENTRY:
            x = conv2d_reference(x, lw.kernel.transpose(0, 3, 1, 2), layer.stride, lw.bias, layer.act)
        elif layer.kind == LayerKind.DEPTHWISE:
            x = conv2d_reference(x, lw.kernel[:, None], layer.stride, lw.bias, layer.act, groups=layer.cin)
        elif layer.kind == LayerKind.POOL:
            pooled = x.matrix().astype(np.float64).sum(axis=1) / x.spatial
            x = Tensor(layer.cout, 1, 1, CHW, pooled.astype(np.float32))
        else:
            dense = decode_bcsr(lw.kernel) if layer.sparse else lw.kernel
            dense = DenseMatrix.from_array(dense.array()[: layer.cout])
            x = matmul_reference(dense, x, lw.bias, layer.act)
        if layer.residual:
            x = Tensor(x.channels, x.height, x.width, CHW, x.data + unit_input.data)
    return x.data.copy()


def random_image(net: NetworkSpec, seed: int = 0) -> Tensor:
    h, w, c = net.input_size
    data = np.random.default_rng(seed).uniform(-1.0, 1.0, (h, w, c)).astype(np.float32)
    return Tensor.from_array(data, HWC)


def sparse_layers(net: NetworkSpec) -> List[int]:
    return [i for i, l in enumerate(net.layers) if l.sparse and l.kind == LayerKind.POINTWISE]


def network_config(arch: str, width: float, sparsity: float, block_start: Optional[int], block: int,
                   num_classes: int = 1000, input_size: int = 224) -> NetworkSpec:
    """Build from the flat options used by the CLI and config files."""
    plan = SparsityPlan(sparsity, block_start if block > 1 else None, block)
    return build_network(arch, width, plan, num_classes, (input_size, input_size, 3))


def published_plan(arch: str) -> SparsityPlan:
    return {"mbv1": PUBLISHED_MBV1, "mbv2": PUBLISHED_MBV2, "ca-mbv2": PUBLISHED_CA_MBV2}[arch]


def depthwise_flop_share(net: NetworkSpec) -> float:
    counts = layer_counts(net)
    dw = sum(c.dense_flops for c in counts if c.layer.kind == LayerKind.DEPTHWISE)
    return dw / sum(c.dense_flops for c in counts)
