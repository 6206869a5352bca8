
import pytest

from sparsenet import bench
from sparsenet.bench import make_record
from sparsenet.errors import SelfCheckError
from sparsenet.kernels import RELU6
from sparsenet.netdef import (
    LayerKind, LayerSpec, NetworkSpec, SparsityPlan, build_network, instantiate_weights,
)

SMALL = (32, 32, 3)


def _net(arch="mbv1", width=0.5, plan=SparsityPlan(0.9)):
    net = build_network(arch, width, plan, num_classes=10, input_size=SMALL)
    return net, instantiate_weights(net, 0)


def test_median_requires_odd_runs():
    for runs in (1, 2, 4):
        with pytest.raises(ValueError):
            bench.median_ns(lambda: None, runs)
    calls = []
    bench.median_ns(lambda: calls.append(1), 5, 2)
    assert len(calls) == 7


def test_record_rate_identity():
    r = make_record(0, "pointwise", 100, 50, 49, 500, 1, "8x1", 1000)
    assert r.sparsity == pytest.approx(0.9)
    assert r.effective_gflops / r.achieved_gflops == pytest.approx(10.0)
    assert r.achieved_gflops == 2 * 500 * 49 / 1000


def test_bench_layers_record_count():
    net, ws = _net()
    result = bench.bench_layers(net, ws, ["4", "8x1", "16x4"], runs=3, warmups=0)
    assert len(result.records) == 13 * 3
    assert len(result.baseline) == 13
    assert {r.variant for r in result.records} == {"4x1", "8x1", "16x4"}
    for r in result.records:
        dense_work, sparse_work = r.cout * r.cin, r.cout * r.cin * (1 - r.sparsity)
        assert r.effective_gflops / r.achieved_gflops == pytest.approx(dense_work / sparse_work)


def test_bench_layers_exact_nnz_ratio():
    net, ws = _net(width=1.4)
    result = bench.bench_layers(net, ws, runs=3, warmups=0)
    exact = [r for r in result.records if (r.cout * r.cin) % 10 == 0]
    assert exact
    for r in exact:
        assert r.effective_gflops / r.achieved_gflops == pytest.approx(10.0, rel=1e-12)


def test_bench_layers_rejects_unknown_variant():
    with pytest.raises(ValueError):
        bench.parse_variants("16x3")
    with pytest.raises(ValueError):
        bench.parse_variants("fast")
    assert bench.parse_variants("all")[:2] == ["4x1", "4x2"]


def test_self_check_gate(monkeypatch):
    assert len(bench.self_check()) == 3
    monkeypatch.setattr(bench, "SPMM_TOLERANCE", -1.0)
    net, ws = _net()
    with pytest.raises(SelfCheckError):
        bench.bench_layers(net, ws, runs=3)


def test_bench_model_parts_sum_to_total():
    layers = [
        LayerSpec(LayerKind.ENTRY, 3, 64, stride=1, act=RELU6),
        LayerSpec(LayerKind.POINTWISE, 64, 64, sparse=True, sparsity=0.5, act=RELU6, unit=1),
        LayerSpec(LayerKind.POOL, 64, 64, unit=2),
        LayerSpec(LayerKind.FC, 64, 8, unit=2),
    ]
    net = NetworkSpec("toy", 1.0, layers, SparsityPlan(0.5), input_size=(48, 48, 3))
    rep = bench.bench_model(net, instantiate_weights(net, 0), runs=21, warmups=3)
    parts = sum(t for _, _, t in rep.layer_ns)
    assert len(rep.layer_ns) == 4
    assert abs(parts - rep.total_ns) / rep.total_ns < 0.10
    assert rep.speedup > 0


def test_densify():
    net, _ = _net()
    dense = bench.densify(net)
    assert not any(l.sparse for l in dense.layers)
    assert [l.cout for l in dense.layers] == [l.cout for l in net.layers]


RECORDS = [
    make_record(2, "pointwise", 88, 48, 12544, 422, 1, "16x1", 123457),
    make_record(27, "pointwise", 1432, 1432, 49, 205064, 4, "8x4", 987654321),
]


@pytest.mark.parametrize("fmt", bench.FORMATS)
def test_export_round_trip(tmp_path, fmt):
    path = tmp_path / f"r.{fmt}"
    bench.export_records(RECORDS, fmt, path)
    assert bench.load_records(path) == RECORDS


def test_csv_layout(tmp_path):
    path = tmp_path / "r.csv"
    bench.export_records(RECORDS[:1], "csv", path)
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    assert lines[0] == ("layer_index,kind,cout,cin,spatial,sparsity,block_h,variant,median_ns,"
                        "achieved_gflops,effective_gflops")


def test_json_csv_field_parity(tmp_path):
    import json
    bench.export_records(RECORDS, "json", tmp_path / "r.json")
    bench.export_records(RECORDS, "csv", tmp_path / "r.csv")
    keys = json.loads((tmp_path / "r.json").read_text())[0].keys()
    assert tuple(keys) == tuple((tmp_path / "r.csv").read_text().splitlines()[0].split(","))


def test_export_empty_is_error(tmp_path):
    with pytest.raises(ValueError):
        bench.export_records([], "csv", tmp_path / "x.csv")


def test_verify_config_parsing():
    cfg = bench.read_verify_config("[spmm]\nvariants = 16x2, 8\nsparsities = 0.9\nshapes = 2\n"
                                   "tiers = scalar\n[verify]\ninject_fault = yes\n")
    assert cfg.variants == ("16x2", "8") and cfg.sparsities == (0.9,) and cfg.shapes == 2
    assert cfg.tiers == ("scalar",) and cfg.inject_fault
    for bad in ("", "# nothing\n", "[other]\nx=1\n", "[spmm]\nshapes = many\n", "[spmm]\ntiers = gpu\n"):
        with pytest.raises(bench.ConfigError):
            bench.read_verify_config(bad)


def test_verify_small_passes_and_fault_is_named():
    cfg = bench.read_verify_config("[spmm]\nshapes = 2\nsparsities = 0.9\n[network]\narchs = mbv2\n"
                                   "widths = 0.5\ninput_size = 32\n")
    results = bench.verify(cfg)
    assert results and all(r.passed for r in results)
    cfg.inject_fault = True
    failed = [r for r in bench.verify_spmm(cfg) if not r.passed]
    assert failed and failed[0].name.startswith("spmm ")


def test_shape_pool_is_mobilenet():
    pool = bench.pointwise_shape_pool()
    assert (64, 32, (112, 112)) in pool
    assert (1280, 320, (7, 7)) in pool
    assert len(bench.draw_shapes(20, 0)) == 20
