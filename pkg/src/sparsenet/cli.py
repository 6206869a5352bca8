"""Command-line entry point: ``sparsenet <command> ...`` or ``python -m sparsenet``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import bench, kernels
from .errors import ConversionError, ModelFileError, SelfCheckError, ShapeError
from .modelio import MODES, convert_dense_dump, load_model, save_model
from .netdef import (
    ARCHITECTURES, SparsityPlan, build_network, count_flops, count_params, depthwise_flop_share,
    instantiate_weights,
)

USAGE_ERROR = 2


def _model_args(p: argparse.ArgumentParser, sparsity: float = 0.9) -> None:
    g = p.add_argument_group("model")
    g.add_argument("--arch", choices=ARCHITECTURES, default="mbv1")
    g.add_argument("--width", type=float, default=1.0, help="width multiplier (ignored by ca-mbv2)")
    g.add_argument("--sparsity", type=float, default=sparsity, help="sparsity of the pruned 1x1 layers")
    g.add_argument("--block-start", type=int, default=0, help="first unit that uses --block")
    g.add_argument("--block", type=int, choices=(1, 2, 4), default=1, help="output-channel block size")
    g.add_argument("--input-size", type=int, default=224)
    g.add_argument("--num-classes", type=int, default=1000)
    g.add_argument("--seed", type=int, default=0)


def _bench_args(p: argparse.ArgumentParser) -> None:
    _model_args(p)
    p.add_argument("--model", help="load a saved model file instead of building one")
    p.add_argument("--runs", type=int, default=9, help="timed runs, odd and >= 3")
    p.add_argument("--warmups", type=int, default=3)
    p.add_argument("--json", action="store_true", help="print machine-readable output")


def _network(args):
    plan = SparsityPlan(args.sparsity, args.block_start if args.block > 1 else None, args.block)
    return build_network(args.arch, args.width, plan, args.num_classes, (args.input_size, args.input_size, 3))


def _model(args):
    if getattr(args, "model", None):
        return load_model(args.model)
    net = _network(args)
    return net, instantiate_weights(net, args.seed)


def _check_runs(args) -> None:
    if args.runs < 3 or args.runs % 2 == 0:
        raise _Usage(f"--runs must be odd and at least 3, got {args.runs}")


class _Usage(Exception):
    pass


def _layer_records(args):
    net, weights = _model(args)
    try:
        variants = bench.parse_variants(getattr(args, "variants", None))
    except (ValueError, ShapeError) as e:
        raise _Usage(str(e)) from None
    result = bench.bench_layers(net, weights, variants, args.runs, args.warmups, seed=args.seed)
    if not result.records:
        raise _Usage(f"{net.name} has no sparse 1x1 layers at sparsity {net.plan.sparsity:g}")
    return result


def _print_records(records: Sequence[bench.BenchRecord], out) -> None:
    print(f"{'layer':>5} {'kind':<9} {'cout':>5} {'cin':>5} {'S':>6} {'sparsity':>8} {'N':>2} "
          f"{'variant':<7} {'median_us':>10} {'achieved':>9} {'effective':>9}", file=out)
    for r in records:
        print(f"{r.layer_index:>5} {r.kind:<9} {r.cout:>5} {r.cin:>5} {r.spatial:>6} {r.sparsity:>8.4f} "
              f"{r.block_h:>2} {r.variant:<7} {r.median_ns / 1e3:>10.1f} {r.achieved_gflops:>9.2f} "
              f"{r.effective_gflops:>9.2f}", file=out)


def cmd_bench_layers(args, out) -> int:
    _check_runs(args)
    result = _layer_records(args)
    if args.json:
        print(bench.records_to_json(result.records + result.baseline), end="", file=out)
        return 0
    _print_records(result.records, out)
    print("\ndense baseline, same shapes", file=out)
    _print_records(result.baseline, out)
    return 0


def cmd_bench_model(args, out) -> int:
    _check_runs(args)
    net, weights = _model(args)
    report = bench.bench_model(net, weights, args.runs, args.warmups, seed=args.seed)
    if args.json:
        print(json.dumps(report.as_dict(), indent=1), file=out)
        return 0
    dense = dict((i, t) for i, _, t in report.dense_layer_ns)
    print(f"{'layer':>5} {'kind':<9} {'sparse_us':>10} {'dense_us':>10}", file=out)
    for i, kind, t in report.layer_ns:
        print(f"{i:>5} {kind:<9} {t / 1e3:>10.1f} {dense[i] / 1e3:>10.1f}", file=out)
    print(f"\n{net.name}-{net.width:g} end to end: sparse {report.total_ns / 1e6:.2f} ms, "
          f"dense {report.dense_total_ns / 1e6:.2f} ms, speedup {report.speedup:.2f}x", file=out)
    return 0


def cmd_count(args, out) -> int:
    net = _network(args)
    dense_flops, sparse_flops = count_flops(net)
    dense_params, sparse_params = count_params(net)
    row = {
        "arch": net.name, "width": net.width, "sparsity": net.plan.sparsity,
        "dense_mflops": dense_flops / 1e6, "sparse_mflops": sparse_flops / 1e6,
        "dense_mparams": dense_params / 1e6, "sparse_mparams": sparse_params / 1e6,
        "depthwise_flop_share": depthwise_flop_share(net),
    }
    if args.json:
        print(json.dumps(row, indent=1), file=out)
    else:
        for k, v in row.items():
            print(f"{k:<22}{v:.4f}" if isinstance(v, float) else f"{k:<22}{v}", file=out)
    return 0


def cmd_export(args, out) -> int:
    if args.records:
        try:
            records = bench.load_records(args.records)
        except (OSError, ValueError) as e:
            raise _Usage(f"cannot read records: {e}") from None
    else:
        _check_runs(args)
        records = _layer_records(args).records
    if not records:
        raise _Usage("no records to export")
    bench.export_records(records, args.format, args.out)
    print(f"wrote {len(records)} records to {args.out}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    if args.config is None:
        cfg = bench.VerifyConfig()
    else:
        try:
            with open(args.config) as f:
                cfg = bench.read_verify_config(f.read())
        except (OSError, bench.ConfigError) as e:
            raise _Usage(f"bad config {args.config}: {e}") from None
    if args.inject_fault:
        cfg.inject_fault = True
    results = bench.verify(cfg)
    failed = [r for r in results if not r.passed]
    for r in results:
        if args.verbose or not r.passed:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name} max_dev={r.max_deviation:.3g} "
                  f"tol={r.tolerance:g}", file=out)
    worst = {}
    for r in results:
        key = r.name.split()[0]
        worst[key] = max(worst.get(key, 0.0), r.max_deviation)
    for key, dev in worst.items():
        print(f"{key}: max deviation {dev:.3g}", file=out)
    print(f"{len(results) - len(failed)}/{len(results)} cases passed", file=out)
    return 1 if failed else 0


def cmd_convert(args, out) -> int:
    if args.prune is not None:
        args.sparsity = args.prune
    net = _network(args)
    mode = MODES[1] if args.prune is not None else MODES[0]
    net, weights = convert_dense_dump(args.dump, args.manifest, net, mode)
    save_model(net, weights, args.out)
    print(f"wrote {net.name}-{net.width:g} ({mode}) to {args.out}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sparsenet", description="Sparse CHW inference: verify, benchmark, count.")
    ap.add_argument("--tier", choices=("scalar", "vector", "auto"), default=None,
                    help="kernel tier; overrides SPARSENET_TIER")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the oracle suite")
    p.add_argument("--config", help="INI file with [spmm], [network] and [verify] sections")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("-v", "--verbose", action="store_true", help="list passing cases too")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench-layers", help="time each sparse 1x1 layer")
    _bench_args(p)
    p.add_argument("--variants", help="comma list of MxN variants, strip widths, or 'all'")
    p.set_defaults(func=cmd_bench_layers)

    p = sub.add_parser("bench-model", help="time the whole network against its dense build")
    _bench_args(p)
    p.set_defaults(func=cmd_bench_model)

    p = sub.add_parser("count", help="FLOPs and parameters")
    _model_args(p, sparsity=0.0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("export", help="write per-layer bench records as CSV or JSON")
    p.add_argument("--format", choices=bench.FORMATS, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--records", help="convert an existing CSV or JSON record file instead of benchmarking")
    _bench_args(p)
    p.add_argument("--variants")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("convert", help="build a sparse model file from a dense weight dump")
    p.add_argument("--dump", required=True)
    p.add_argument("--manifest", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--prune", type=float, help="magnitude-prune 1x1 layers to this sparsity")
    _model_args(p)
    p.set_defaults(func=cmd_convert)
    return ap


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.tier is not None:
        kernels.set_tier(args.tier)
    try:
        return args.func(args, out)
    except _Usage as e:
        print(f"sparsenet {args.command}: error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except SelfCheckError as e:
        print(f"sparsenet: kernel self-check failed, refusing to benchmark: {e}", file=sys.stderr)
        return 1
    except (ModelFileError, ConversionError, ValueError, OSError) as e:
        print(f"sparsenet {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    finally:
        if args.tier is not None:
            kernels.set_tier(None)


if __name__ == "__main__":
    sys.exit(main())
