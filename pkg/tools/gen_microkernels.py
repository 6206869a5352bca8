#!/usr/bin/env python3
"""Generate src/sparsenet/_microkernels.py.

Each strip body keeps its WIDTH x BLOCK accumulators in scalar locals so the
compiler can hold them in registers. Run from the repository root:

    python tools/gen_microkernels.py
"""

import argparse
import pathlib
import sys

WIDTHS = (16, 8, 4, 2, 1)
BLOCKS = (1, 2, 4)
# The vector tier relaxes IEEE corner cases but never contracts or reorders
# sums, so both tiers round exactly like the reference operators.
TIERS = {"scalar": "False", "vector": '{"nnan", "ninf", "nsz", "arcp", "afn"}'}

HEADER = '''\
# Generated by tools/gen_microkernels.py; do not edit by hand.
"""Register-blocked strip bodies and strip drivers for SpMM and dense GEMM."""

import numpy as np
from numba import njit

'''


def _acc(j, m):
    return f"a{j}_{m}"


def spmm_strip(tier, fast, width, block):
    lines = [
        f"@njit(cache=True, nogil=True, fastmath={fast})",
        f"def _spmm_{tier}_w{width}_n{block}(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):",
        "    sink = np.float32(0.0)",
        "    for br in range(ptr.size - 1):",
        f"        r0 = br * {block}",
    ]
    for j in range(block):
        lines.append(f"        b{j} = bias[r0 + {j}]")
        lines += [f"        {_acc(j, m)} = b{j}" for m in range(width)]
    lines += [
        "        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):",
        "            col = np.int64(idx[p])",
        "            if touch:",
        "                sink += act[col, ahead]",
        "            row = act[col]",
    ]
    lines += [f"            x{m} = row[s0 + {m}]" for m in range(width)]
    lines.append(f"            base = p * {block}")
    for j in range(block):
        lines.append(f"            v{j} = vals[base + {j}]")
        lines += [f"            {_acc(j, m)} += v{j} * x{m}" for m in range(width)]
    for j in range(block):
        lines.append(f"        o = out[r0 + {j}]")
        lines += [f"        o[s0 + {m}] = min(max({_acc(j, m)}, lo), hi)" for m in range(width)]
    lines.append("    return sink")
    return "\n".join(lines) + "\n\n\n"


def gemm_strip(tier, fast, width, block):
    lines = [
        f"@njit(cache=True, nogil=True, fastmath={fast})",
        f"def _gemm_{tier}_w{width}_n{block}(w, act, bias, lo, hi, s0, out):",
        "    cin = w.shape[1]",
        f"    for r0 in range(0, w.shape[0], {block}):",
    ]
    for j in range(block):
        lines.append(f"        b{j} = bias[r0 + {j}]")
        lines += [f"        {_acc(j, m)} = b{j}" for m in range(width)]
    for j in range(block):
        lines.append(f"        w{j} = w[r0 + {j}]")
    lines += [
        "        for k in range(cin):",
        "            row = act[k]",
    ]
    lines += [f"            x{m} = row[s0 + {m}]" for m in range(width)]
    for j in range(block):
        lines.append(f"            v{j} = w{j}[k]")
        lines += [f"            {_acc(j, m)} += v{j} * x{m}" for m in range(width)]
    for j in range(block):
        lines.append(f"        o = out[r0 + {j}]")
        lines += [f"        o[s0 + {m}] = min(max({_acc(j, m)}, lo), hi)" for m in range(width)]
    return "\n".join(lines) + "\n\n\n"


def dispatch(prefix, tier, block, call_args):
    lines = []
    for i, width in enumerate(WIDTHS):
        kw = "if" if i == 0 else "elif"
        lines.append(f"            {kw} width == {width}:")
        lines.append(f"                {prefix}_{tier}_w{width}_n{block}({call_args})")
    return lines


def spmm_driver(tier, fast, block):
    lines = [
        f"@njit(cache=True, nogil=True, fastmath={fast})",
        f"def spmm_{tier}_n{block}(ptr, idx, vals, act, bias, lo, hi, strip, prefetch, distance, out):",
        "    s_total = act.shape[1]",
        "    sink = np.float32(0.0)",
        "    s0 = 0",
        "    width = strip",
        "    while width > 0:",
        "        while s0 + width <= s_total:",
        "            ahead = s0 + distance * width",
        "            touch = prefetch and ahead < s_total",
    ]
    for i, width in enumerate(WIDTHS):
        kw = "if" if i == 0 else "elif"
        lines.append(f"            {kw} width == {width}:")
        lines.append(
            f"                sink += _spmm_{tier}_w{width}_n{block}"
            "(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)"
        )
    lines += [
        "            s0 += width",
        "        width //= 2",
        "    return sink",
    ]
    return "\n".join(lines) + "\n\n\n"


def gemm_driver(tier, fast, block):
    lines = [
        f"@njit(cache=True, nogil=True, fastmath={fast})",
        f"def gemm_{tier}_n{block}(w, act, bias, lo, hi, strip, out):",
        "    s_total = act.shape[1]",
        "    s0 = 0",
        "    width = strip",
        "    while width > 0:",
        "        while s0 + width <= s_total:",
    ]
    lines += dispatch("_gemm", tier, block, "w, act, bias, lo, hi, s0, out")
    lines += [
        "            s0 += width",
        "        width //= 2",
    ]
    return "\n".join(lines) + "\n\n\n"


def generate():
    parts = [HEADER]
    for tier, fast in TIERS.items():
        for block in BLOCKS:
            for width in WIDTHS:
                parts.append(spmm_strip(tier, fast, width, block))
                parts.append(gemm_strip(tier, fast, width, block))
            parts.append(spmm_driver(tier, fast, block))
            parts.append(gemm_driver(tier, fast, block))
    for name in ("spmm", "gemm"):
        entries = ", ".join(
            f'("{tier}", {block}): {name}_{tier}_n{block}' for tier in TIERS for block in BLOCKS
        )
        parts.append(f"{name.upper()} = {{{entries}}}\n")
    return "".join(parts)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    root = pathlib.Path(__file__).resolve().parents[1]
    ap.add_argument("--out", type=pathlib.Path, default=root / "src" / "sparsenet" / "_microkernels.py")
    ap.add_argument("--check", action="store_true", help="exit 1 if the file is out of date")
    args = ap.parse_args(argv)
    text = generate()
    if args.check:
        return 0 if args.out.exists() and args.out.read_text() == text else 1
    args.out.write_text(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
