import io
import json
import subprocess
import sys

import pytest

from sparsenet import bench, kernels
from sparsenet.cli import main
from sparsenet.modelio import load_model, write_dense_dump
from sparsenet.netdef import DENSE, build_network, instantiate_weights

TINY = ["--arch", "mbv1", "--width", "0.25", "--input-size", "32", "--num-classes", "10", "--runs", "3",
        "--warmups", "0"]


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_count_json():
    code, text = run("count", "--arch", "mbv1", "--json")
    assert code == 0
    row = json.loads(text)
    assert round(row["dense_mflops"]) == 1120


def test_count_table():
    code, text = run("count", "--arch", "ca-mbv2", "--sparsity", "0.85")
    assert code == 0 and "sparse_mflops" in text


def test_unknown_arch_is_usage_error():
    with pytest.raises(SystemExit) as e:
        main(["count", "--arch", "vgg"])
    assert e.value.code == 2


def test_bench_layers_json():
    code, text = run("--tier", "scalar", "bench-layers", *TINY, "--variants", "8,16x2", "--json")
    assert code == 0
    rows = json.loads(text)
    assert len([r for r in rows if r["variant"] != "dense"]) == 13 * 2
    assert kernels.get_tier() == "vector"


def test_bench_layers_bad_args():
    assert run("bench-layers", *TINY, "--variants", "12x1")[0] == 2
    assert run("bench-layers", *TINY[:-4], "--runs", "4")[0] == 2
    assert run("bench-layers", *TINY, "--sparsity", "0")[0] == 2


def test_bench_model_text():
    code, text = run("bench-model", *TINY, "--block", "4", "--block-start", "10")
    assert code == 0 and "speedup" in text


def test_export_and_convert_records(tmp_path):
    csv_path, json_path = tmp_path / "r.csv", tmp_path / "r.json"
    assert run("export", "--format", "csv", "--out", str(csv_path), *TINY)[0] == 0
    assert run("export", "--format", "json", "--out", str(json_path), "--records", str(csv_path))[0] == 0
    assert bench.load_records(json_path) == bench.load_records(csv_path)
    assert len(csv_path.read_text().splitlines()) == 14


def test_verify_config(tmp_path):
    empty = tmp_path / "empty.ini"
    empty.write_text("")
    assert run("verify", "--config", str(empty))[0] == 2
    cfg = tmp_path / "small.ini"
    cfg.write_text("[spmm]\nshapes = 1\nsparsities = 0.8\n[network]\narchs = mbv1\nwidths = 0.5\n"
                   "input_size = 32\n")
    code, text = run("verify", "--config", str(cfg))
    assert code == 0 and "cases passed" in text
    code, text = run("verify", "--config", str(cfg), "--inject-fault")
    assert code == 1 and "FAIL spmm" in text


def test_convert(tmp_path):
    net = build_network("mbv1", 0.25, DENSE, 10, (32, 32, 3))
    dump, manifest, out = tmp_path / "w.bin", tmp_path / "w.txt", tmp_path / "m.spcv"
    write_dense_dump(net, instantiate_weights(net, 0), dump, manifest)
    code, _ = run("convert", "--dump", str(dump), "--manifest", str(manifest), "--out", str(out),
                  "--prune", "0.8", "--arch", "mbv1", "--width", "0.25", "--input-size", "32",
                  "--num-classes", "10")
    assert code == 0
    net2, _ = load_model(out)
    assert net2.plan.sparsity == 0.8
    code, _ = run("bench-model", "--model", str(out), "--runs", "3", "--warmups", "0")
    assert code == 0


def test_corrupt_model_file_reports_typed_error(tmp_path):
    bad = tmp_path / "bad.spcv"
    bad.write_bytes(b"SPCV\x01")
    assert run("bench-model", "--model", str(bad), "--runs", "3")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sparsenet", "count", "--arch", "mbv2", "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["arch"] == "mbv2"
