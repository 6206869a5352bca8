"""Benchmark and verification harness behind the command-line tool.

Timings are medians of an odd number of runs taken after a few warmups, on
one thread, with output buffers allocated before the clock starts.
"""

from __future__ import annotations

import configparser
import csv
import io
import json
import statistics
import time
from dataclasses import asdict, dataclass, field, fields, replace
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .bcsr import BcsrMatrix, BlockConfig, decode_bcsr, encode_bcsr, generate_mask
from .errors import SelfCheckError
from .kernels import ALL_VARIANTS, MicrokernelConfig
from .netdef import (
    DENSE, LayerKind, NetworkSpec, WeightSet, build_network, instantiate_weights, layer_shapes,
    random_image, run_network, run_network_reference, published_plan,
)
from .tensor import CHW, DenseMatrix, Tensor, matmul_reference

SPMM_TOLERANCE = 1e-5
NETWORK_TOLERANCE = 1e-4


@dataclass(frozen=True)
class BenchRecord:
    layer_index: int
    kind: str
    cout: int
    cin: int
    spatial: int
    sparsity: float
    block_h: int
    variant: str
    median_ns: int
    achieved_gflops: float
    effective_gflops: float


COLUMNS = tuple(f.name for f in fields(BenchRecord))


def make_record(layer_index: int, kind: str, cout: int, cin: int, spatial: int, nnz: int,
                block_h: int, variant: str, median_ns: int) -> BenchRecord:
    """Fill in the rate columns; ``sparsity`` is the fraction of the dense work skipped."""
    return BenchRecord(
        layer_index, kind, cout, cin, spatial, 1.0 - nnz / (cout * cin), block_h, variant, median_ns,
        2.0 * nnz * spatial / median_ns, 2.0 * cout * cin * spatial / median_ns,
    )


def median_ns(fn: Callable[[], object], runs: int = 9, warmups: int = 3) -> int:
    if runs < 3 or runs % 2 == 0:
        raise ValueError(f"runs must be odd and at least 3, got {runs}")
    if warmups < 0:
        raise ValueError("warmups must be non-negative")
    for _ in range(warmups):
        fn()
    times = []
    for _ in range(runs):
        start = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - start)
    return int(statistics.median(times))


def parse_variants(text: Optional[str]) -> List[str]:
    """Split a comma list of ``MxN`` names or bare strip widths ``M``.

    A bare width runs each layer at its own block height. ``all`` expands to
    every variant.
    """
    if text is None:
        return []
    items = [t.strip() for t in text.split(",") if t.strip()]
    out = []
    for item in items:
        if item == "all":
            out += [v.name for v in ALL_VARIANTS]
        elif item.isdigit():
            MicrokernelConfig(int(item), 1)
            out.append(item)
        else:
            out.append(MicrokernelConfig.parse(item).name)
    return out


def _resolve_variant(name: str, block_h: int) -> MicrokernelConfig:
    if name.isdigit():
        return MicrokernelConfig(int(name), block_h)
    return MicrokernelConfig.parse(name)


def _reblock(w: BcsrMatrix, block_h: int) -> BcsrMatrix:
    """Re-encode ``w`` at another block height, padding rows with zeros as needed."""
    if w.block_h == block_h:
        return w
    dense = decode_bcsr(w).array()
    rows = -(-dense.shape[0] // block_h) * block_h
    padded = np.zeros((rows, dense.shape[1]), np.float32)
    padded[: dense.shape[0]] = dense
    return encode_bcsr(DenseMatrix.from_array(padded), block_h)


def _random_activation(cin: int, h: int, w: int, rng) -> Tensor:
    return Tensor.from_array(rng.uniform(-1.0, 1.0, (cin, h, w)).astype(np.float32), CHW)


# ---------------------------------------------------------------- self check


def spmm_case(cout: int, cin: int, spatial: int, sparsity: float, block_h: int, seed: int):
    """Random block-sparse weights, activations and bias for one oracle case."""
    rng = np.random.default_rng(seed)
    w = rng.uniform(-1.0, 1.0, (cout, cin)).astype(np.float32)
    mask = generate_mask(cout, cin, sparsity, BlockConfig(block_h), seed)
    dense = DenseMatrix.from_array(np.where(mask.bits, w, np.float32(0)))
    act = _random_activation(cin, 1, spatial, rng)
    bias = rng.uniform(-1.0, 1.0, cout).astype(np.float32)
    return dense, encode_bcsr(dense, block_h), act, bias


def spmm_deviation(dense: DenseMatrix, sparse: BcsrMatrix, act: Tensor, bias, cfg: MicrokernelConfig,
                   tier: Optional[str] = None, expected: Optional[np.ndarray] = None) -> float:
    if expected is None:
        expected = matmul_reference(dense, act, bias).data
    got = kernels.spmm(sparse, act, bias, cfg=cfg, tier=tier).data
    return float(np.max(np.abs(got - expected)))


def self_check(seed: int = 0, tier: Optional[str] = None) -> List[float]:
    """Three small random oracle cases; raises :class:`SelfCheckError` on any miss."""
    rng = np.random.default_rng(seed)
    deviations = []
    for block_h in (1, 2, 4):
        cfg = MicrokernelConfig(int(rng.choice(kernels.STRIP_WIDTHS)), block_h)
        dense, sparse, act, bias = spmm_case(32, 48, 53, 0.8, block_h, int(rng.integers(2**31)))
        dev = spmm_deviation(dense, sparse, act, bias, cfg, tier)
        if not dev <= SPMM_TOLERANCE:
            raise SelfCheckError(f"spmm {cfg.name} deviates by {dev:.3g} from the reference")
        deviations.append(dev)
    return deviations


# ------------------------------------------------------------- layer bench


@dataclass
class LayerBench:
    records: List[BenchRecord]
    baseline: List[BenchRecord]


def bench_layers(net: NetworkSpec, weights: WeightSet, variants: Sequence[str] = (), runs: int = 9,
                 warmups: int = 3, tier: Optional[str] = None, seed: int = 0,
                 check: bool = True) -> LayerBench:
    """Time every sparse 1x1 layer under each variant, plus the dense baseline.

    An empty ``variants`` runs the tier's default strip width.
    """
    tier = kernels.get_tier(tier)
    if check:
        self_check(seed, tier)
    variants = list(variants) or [str(kernels.DEFAULT_STRIP[tier])]
    rng = np.random.default_rng(seed)
    records, baseline = [], []
    for i, (layer, (h, w), _) in enumerate(layer_shapes(net)):
        if not (layer.sparse and layer.kind == LayerKind.POINTWISE):
            continue
        act = _random_activation(layer.cin, h, w, rng)
        spatial = h * w
        bias = rng.uniform(-0.1, 0.1, layer.rows).astype(np.float32)
        stored = weights[i].kernel
        for name in variants:
            cfg = _resolve_variant(name, layer.block_h)
            mat = _reblock(stored, cfg.out_block)
            b = np.zeros(mat.rows, np.float32)
            b[: min(mat.rows, bias.size)] = bias[: mat.rows]
            out = np.empty((mat.rows, spatial), np.float32)
            t = median_ns(lambda: kernels.spmm(mat, act, b, layer.act, cfg, tier, out), runs, warmups)
            records.append(make_record(i, layer.kind.value, layer.cout, layer.cin, spatial, mat.nnz,
                                       cfg.out_block, cfg.name, t))
        dense = DenseMatrix.from_array(decode_bcsr(stored).array()[: layer.cout])
        dcfg = MicrokernelConfig(kernels.DEFAULT_STRIP[tier], kernels._row_block(layer.cout))
        out = np.empty((layer.cout, spatial), np.float32)
        t = median_ns(
            lambda: kernels.dense_gemm_baseline(dense, act, bias[: layer.cout], layer.act, dcfg, tier, out),
            runs, warmups,
        )
        baseline.append(make_record(i, layer.kind.value, layer.cout, layer.cin, spatial,
                                    layer.cout * layer.cin, 1, "dense", t))
    return LayerBench(records, baseline)


# ------------------------------------------------------------- model bench


@dataclass
class ModelReport:
    total_ns: int
    layer_ns: List[Tuple[int, str, int]]
    dense_total_ns: int
    dense_layer_ns: List[Tuple[int, str, int]] = field(default_factory=list)

    @property
    def speedup(self) -> float:
        """Dense time over sparse time; above 1 means the sparse model is faster."""
        return self.dense_total_ns / self.total_ns

    def as_dict(self) -> dict:
        d = asdict(self)
        d["speedup"] = self.speedup
        return d


def densify(net: NetworkSpec) -> NetworkSpec:
    """The same architecture with every layer dense."""
    layers = [replace(l, sparse=False, sparsity=0.0, block_h=1) for l in net.layers]
    return NetworkSpec(net.name, net.width, layers, DENSE, net.input_size)


def time_network(net: NetworkSpec, weights: WeightSet, runs: int = 9, warmups: int = 3,
                 tier: Optional[str] = None, seed: int = 0) -> Tuple[int, List[Tuple[int, str, int]]]:
    """Median end-to-end time and the median time of every layer, from the same runs."""
    image = random_image(net, seed)
    per_layer: Dict[int, List[float]] = {i: [] for i in range(len(net.layers))}

    def hook(i, layer, seconds):
        per_layer[i].append(seconds)

    for _ in range(warmups):
        run_network(net, weights, image, tier)
    totals = []
    for _ in range(runs):
        start = time.perf_counter_ns()
        run_network(net, weights, image, tier, profile=hook)
        totals.append(time.perf_counter_ns() - start)
    layers = [
        (i, layer.kind.value, int(statistics.median(per_layer[i]) * 1e9))
        for i, layer in enumerate(net.layers)
    ]
    return int(statistics.median(totals)), layers


def bench_model(net: NetworkSpec, weights: WeightSet, runs: int = 9, warmups: int = 3,
                tier: Optional[str] = None, seed: int = 0, dense: Optional[Tuple[NetworkSpec, WeightSet]] = None,
                check: bool = True) -> ModelReport:
    """End-to-end timing against a dense build of the same architecture."""
    tier = kernels.get_tier(tier)
    if check:
        self_check(seed, tier)
    if runs < 3 or runs % 2 == 0:
        raise ValueError(f"runs must be odd and at least 3, got {runs}")
    if dense is None:
        dnet = densify(net)
        dense = (dnet, instantiate_weights(dnet, seed))
    total, layers = time_network(net, weights, runs, warmups, tier, seed)
    dtotal, dlayers = time_network(*dense, runs, warmups, tier, seed)
    return ModelReport(total, layers, dtotal, dlayers)


# ------------------------------------------------------------------ export


def records_to_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in records:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in (getattr(r, c) for c in COLUMNS)])
    return buf.getvalue()


def records_to_json(records: Sequence[BenchRecord]) -> str:
    return json.dumps([{c: getattr(r, c) for c in COLUMNS} for r in records], indent=1) + "\n"


def _coerce(row: dict) -> BenchRecord:
    types = {f.name: f.type for f in fields(BenchRecord)}
    if set(row) != set(COLUMNS):
        raise ValueError(f"record fields {sorted(row)} do not match {list(COLUMNS)}")
    conv = {"int": int, "float": float, "str": str}
    return BenchRecord(**{k: conv[types[k]](row[k]) for k in COLUMNS})


def records_from_csv(text: str) -> List[BenchRecord]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != COLUMNS:
        raise ValueError(f"CSV header must be {','.join(COLUMNS)}")
    return [_coerce(row) for row in reader]


def records_from_json(text: str) -> List[BenchRecord]:
    return [_coerce(row) for row in json.loads(text)]


FORMATS = ("csv", "json")


def export_records(records: Sequence[BenchRecord], fmt: str, path) -> None:
    if not records:
        raise ValueError("no records to export")
    if fmt not in FORMATS:
        raise ValueError(f"unknown export format {fmt!r}")
    text = records_to_csv(records) if fmt == "csv" else records_to_json(records)
    with open(path, "w", newline="") as f:
        f.write(text)


def load_records(path) -> List[BenchRecord]:
    with open(path, newline="") as f:
        text = f.read()
    if text.lstrip().startswith("["):
        return records_from_json(text)
    return records_from_csv(text)


# ------------------------------------------------------------------ verify


def _floats(text: str) -> List[float]:
    return [float(t) for t in text.split(",") if t.strip()]


def _words(text: str) -> List[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


@dataclass
class VerifyConfig:
    variants: Tuple[str, ...] = tuple(v.name for v in ALL_VARIANTS)
    sparsities: Tuple[float, ...] = (0.7, 0.8, 0.9, 0.95)
    shapes: int = 20
    spmm_seed: int = 0
    tiers: Tuple[str, ...] = kernels.TIERS
    archs: Tuple[str, ...] = ("mbv1", "mbv2", "ca-mbv2")
    widths: Tuple[float, ...] = (0.5, 1.0, 1.4)
    seeds: Tuple[int, ...] = (0,)
    input_size: int = 224
    network_sparsity: float = 0.9
    spmm_tolerance: float = SPMM_TOLERANCE
    network_tolerance: float = NETWORK_TOLERANCE
    # Test hook: perturb one stored weight before the kernel runs.
    inject_fault: bool = False


class ConfigError(ValueError):
    """The verification config is empty or malformed."""


def read_verify_config(text: str) -> VerifyConfig:
    """Parse an INI config with optional ``[spmm]``, ``[network]`` and ``[verify]`` sections."""
    cp = configparser.ConfigParser()
    try:
        cp.read_string(text)
    except configparser.Error as e:
        raise ConfigError(str(e)) from None
    if not cp.sections():
        raise ConfigError("config is empty")
    unknown = set(cp.sections()) - {"spmm", "network", "verify"}
    if unknown:
        raise ConfigError(f"unknown config sections {sorted(unknown)}")
    cfg = VerifyConfig()
    try:
        if cp.has_section("spmm"):
            s = cp["spmm"]
            cfg.variants = tuple(parse_variants(s.get("variants", "all")))
            cfg.sparsities = tuple(_floats(s.get("sparsities", "0.7,0.8,0.9,0.95")))
            cfg.shapes = s.getint("shapes", cfg.shapes)
            cfg.spmm_seed = s.getint("seed", cfg.spmm_seed)
            cfg.tiers = tuple(_words(s.get("tiers", ",".join(kernels.TIERS))))
            cfg.spmm_tolerance = s.getfloat("tolerance", cfg.spmm_tolerance)
        if cp.has_section("network"):
            n = cp["network"]
            cfg.archs = tuple(_words(n.get("archs", ",".join(cfg.archs))))
            cfg.widths = tuple(_floats(n.get("widths", "0.5,1.0,1.4")))
            cfg.seeds = tuple(int(x) for x in _floats(n.get("seeds", "0")))
            cfg.input_size = n.getint("input_size", cfg.input_size)
            cfg.network_sparsity = n.getfloat("sparsity", cfg.network_sparsity)
            cfg.network_tolerance = n.getfloat("tolerance", cfg.network_tolerance)
        if cp.has_section("verify"):
            cfg.inject_fault = cp["verify"].getboolean("inject_fault", False)
    except ValueError as e:
        raise ConfigError(str(e)) from None
    for tier in cfg.tiers:
        if tier not in kernels.TIERS:
            raise ConfigError(f"unknown tier {tier!r}")
    return cfg


def pointwise_shape_pool(widths: Iterable[float] = (0.5, 1.0, 1.4)) -> List[Tuple[int, int, Tuple[int, int]]]:
    """Distinct (Cout, Cin, (H, W)) of the 1x1 layers in MBv1 and MBv2 at ``widths``."""
    seen = set()
    for arch in ("mbv1", "mbv2"):
        for width in widths:
            for layer, (h, w), _ in layer_shapes(build_network(arch, width)):
                if layer.kind == LayerKind.POINTWISE:
                    seen.add((layer.cout, layer.cin, (h, w)))
    return sorted(seen)


def draw_shapes(count: int, seed: int = 0) -> List[Tuple[int, int, Tuple[int, int]]]:
    pool = pointwise_shape_pool()
    pick = np.random.default_rng(seed).choice(len(pool), size=min(count, len(pool)), replace=False)
    return [pool[i] for i in sorted(pick)]


@dataclass(frozen=True)
class CaseResult:
    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance


def _corrupt(m: BcsrMatrix) -> BcsrMatrix:
    values = m.values.copy()
    values[0] += np.float32(1.0)
    return BcsrMatrix(m.rows, m.cols, m.block_h, m.block_row_ptr, m.col_indices, values)


def verify_spmm(cfg: VerifyConfig) -> List[CaseResult]:
    """Every variant, sparsity and drawn shape on every tier, one result per case."""
    results = []
    rng = np.random.default_rng(cfg.spmm_seed)
    variants = [_resolve_variant(v, 1) for v in cfg.variants]
    for cout, cin, (h, w) in draw_shapes(cfg.shapes, cfg.spmm_seed):
        spatial = h * w
        for sparsity in cfg.sparsities:
            for block_h in sorted({v.out_block for v in variants}):
                dense, sparse, act, bias = spmm_case(cout, cin, spatial, sparsity, block_h,
                                                     int(rng.integers(2**31)))
                if cfg.inject_fault:
                    sparse = _corrupt(sparse)
                expected = matmul_reference(dense, act, bias).data
                for v in variants:
                    if v.out_block != block_h:
                        continue
                    for tier in cfg.tiers:
                        dev = spmm_deviation(dense, sparse, act, bias, v, tier, expected)
                        name = f"spmm {v.name} {tier} s={sparsity:g} {cout}x{cin}x{spatial}"
                        results.append(CaseResult(name, dev, cfg.spmm_tolerance))
    return results


def verify_networks(cfg: VerifyConfig) -> List[CaseResult]:
    results = []
    size = (cfg.input_size, cfg.input_size, 3)
    for arch in cfg.archs:
        widths = (1.0,) if arch == "ca-mbv2" else cfg.widths
        for width in widths:
            plan = replace(published_plan(arch), sparsity=cfg.network_sparsity) if cfg.network_sparsity else DENSE
            net = build_network(arch, width, plan, input_size=size)
            for seed in cfg.seeds:
                weights = instantiate_weights(net, seed)
                image = random_image(net, seed)
                ref = run_network_reference(net, weights, image)
                for tier in cfg.tiers:
                    dev = float(np.max(np.abs(run_network(net, weights, image, tier) - ref)))
                    name = f"network {arch}-{width:g} {tier} seed={seed}"
                    results.append(CaseResult(name, dev, cfg.network_tolerance))
    return results


def verify(cfg: VerifyConfig = VerifyConfig()) -> List[CaseResult]:
    return verify_spmm(cfg) + verify_networks(cfg)
