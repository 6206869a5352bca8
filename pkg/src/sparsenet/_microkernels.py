# Generated by tools/gen_microkernels.py; do not edit by hand.
"""Register-blocked strip bodies and strip drivers for SpMM and dense GEMM."""

import numpy as np
from numba import njit

@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w16_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 1
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            base = p * 1
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w16_n1(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 1):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        w0 = w[r0 + 0]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w8_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 1
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            base = p * 1
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w8_n1(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 1):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        w0 = w[r0 + 0]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w4_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 1
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            base = p * 1
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w4_n1(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 1):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        w0 = w[r0 + 0]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w2_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 1
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            base = p * 1
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w2_n1(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 1):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        w0 = w[r0 + 0]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w1_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 1
        b0 = bias[r0 + 0]
        a0_0 = b0
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            base = p * 1
            v0 = vals[base + 0]
            a0_0 += v0 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w1_n1(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 1):
        b0 = bias[r0 + 0]
        a0_0 = b0
        w0 = w[r0 + 0]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            v0 = w0[k]
            a0_0 += v0 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def spmm_scalar_n1(ptr, idx, vals, act, bias, lo, hi, strip, prefetch, distance, out):
    s_total = act.shape[1]
    sink = np.float32(0.0)
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            ahead = s0 + distance * width
            touch = prefetch and ahead < s_total
            if width == 16:
                sink += _spmm_scalar_w16_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 8:
                sink += _spmm_scalar_w8_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 4:
                sink += _spmm_scalar_w4_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 2:
                sink += _spmm_scalar_w2_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 1:
                sink += _spmm_scalar_w1_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            s0 += width
        width //= 2
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def gemm_scalar_n1(w, act, bias, lo, hi, strip, out):
    s_total = act.shape[1]
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            if width == 16:
                _gemm_scalar_w16_n1(w, act, bias, lo, hi, s0, out)
            elif width == 8:
                _gemm_scalar_w8_n1(w, act, bias, lo, hi, s0, out)
            elif width == 4:
                _gemm_scalar_w4_n1(w, act, bias, lo, hi, s0, out)
            elif width == 2:
                _gemm_scalar_w2_n1(w, act, bias, lo, hi, s0, out)
            elif width == 1:
                _gemm_scalar_w1_n1(w, act, bias, lo, hi, s0, out)
            s0 += width
        width //= 2


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w16_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 2
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        a1_8 = b1
        a1_9 = b1
        a1_10 = b1
        a1_11 = b1
        a1_12 = b1
        a1_13 = b1
        a1_14 = b1
        a1_15 = b1
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            base = p * 2
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            a1_8 += v1 * x8
            a1_9 += v1 * x9
            a1_10 += v1 * x10
            a1_11 += v1 * x11
            a1_12 += v1 * x12
            a1_13 += v1 * x13
            a1_14 += v1 * x14
            a1_15 += v1 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o[s0 + 8] = min(max(a1_8, lo), hi)
        o[s0 + 9] = min(max(a1_9, lo), hi)
        o[s0 + 10] = min(max(a1_10, lo), hi)
        o[s0 + 11] = min(max(a1_11, lo), hi)
        o[s0 + 12] = min(max(a1_12, lo), hi)
        o[s0 + 13] = min(max(a1_13, lo), hi)
        o[s0 + 14] = min(max(a1_14, lo), hi)
        o[s0 + 15] = min(max(a1_15, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w16_n2(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 2):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        a1_8 = b1
        a1_9 = b1
        a1_10 = b1
        a1_11 = b1
        a1_12 = b1
        a1_13 = b1
        a1_14 = b1
        a1_15 = b1
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            a1_8 += v1 * x8
            a1_9 += v1 * x9
            a1_10 += v1 * x10
            a1_11 += v1 * x11
            a1_12 += v1 * x12
            a1_13 += v1 * x13
            a1_14 += v1 * x14
            a1_15 += v1 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o[s0 + 8] = min(max(a1_8, lo), hi)
        o[s0 + 9] = min(max(a1_9, lo), hi)
        o[s0 + 10] = min(max(a1_10, lo), hi)
        o[s0 + 11] = min(max(a1_11, lo), hi)
        o[s0 + 12] = min(max(a1_12, lo), hi)
        o[s0 + 13] = min(max(a1_13, lo), hi)
        o[s0 + 14] = min(max(a1_14, lo), hi)
        o[s0 + 15] = min(max(a1_15, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w8_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 2
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            base = p * 2
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w8_n2(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 2):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w4_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 2
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            base = p * 2
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w4_n2(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 2):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w2_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 2
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            base = p * 2
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w2_n2(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 2):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w1_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 2
        b0 = bias[r0 + 0]
        a0_0 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            base = p * 2
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            v1 = vals[base + 1]
            a1_0 += v1 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w1_n2(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 2):
        b0 = bias[r0 + 0]
        a0_0 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            v0 = w0[k]
            a0_0 += v0 * x0
            v1 = w1[k]
            a1_0 += v1 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def spmm_scalar_n2(ptr, idx, vals, act, bias, lo, hi, strip, prefetch, distance, out):
    s_total = act.shape[1]
    sink = np.float32(0.0)
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            ahead = s0 + distance * width
            touch = prefetch and ahead < s_total
            if width == 16:
                sink += _spmm_scalar_w16_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 8:
                sink += _spmm_scalar_w8_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 4:
                sink += _spmm_scalar_w4_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 2:
                sink += _spmm_scalar_w2_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 1:
                sink += _spmm_scalar_w1_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            s0 += width
        width //= 2
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def gemm_scalar_n2(w, act, bias, lo, hi, strip, out):
    s_total = act.shape[1]
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            if width == 16:
                _gemm_scalar_w16_n2(w, act, bias, lo, hi, s0, out)
            elif width == 8:
                _gemm_scalar_w8_n2(w, act, bias, lo, hi, s0, out)
            elif width == 4:
                _gemm_scalar_w4_n2(w, act, bias, lo, hi, s0, out)
            elif width == 2:
                _gemm_scalar_w2_n2(w, act, bias, lo, hi, s0, out)
            elif width == 1:
                _gemm_scalar_w1_n2(w, act, bias, lo, hi, s0, out)
            s0 += width
        width //= 2


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w16_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 4
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        a1_8 = b1
        a1_9 = b1
        a1_10 = b1
        a1_11 = b1
        a1_12 = b1
        a1_13 = b1
        a1_14 = b1
        a1_15 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        a2_4 = b2
        a2_5 = b2
        a2_6 = b2
        a2_7 = b2
        a2_8 = b2
        a2_9 = b2
        a2_10 = b2
        a2_11 = b2
        a2_12 = b2
        a2_13 = b2
        a2_14 = b2
        a2_15 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        a3_4 = b3
        a3_5 = b3
        a3_6 = b3
        a3_7 = b3
        a3_8 = b3
        a3_9 = b3
        a3_10 = b3
        a3_11 = b3
        a3_12 = b3
        a3_13 = b3
        a3_14 = b3
        a3_15 = b3
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            base = p * 4
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            a1_8 += v1 * x8
            a1_9 += v1 * x9
            a1_10 += v1 * x10
            a1_11 += v1 * x11
            a1_12 += v1 * x12
            a1_13 += v1 * x13
            a1_14 += v1 * x14
            a1_15 += v1 * x15
            v2 = vals[base + 2]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            a2_4 += v2 * x4
            a2_5 += v2 * x5
            a2_6 += v2 * x6
            a2_7 += v2 * x7
            a2_8 += v2 * x8
            a2_9 += v2 * x9
            a2_10 += v2 * x10
            a2_11 += v2 * x11
            a2_12 += v2 * x12
            a2_13 += v2 * x13
            a2_14 += v2 * x14
            a2_15 += v2 * x15
            v3 = vals[base + 3]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
            a3_4 += v3 * x4
            a3_5 += v3 * x5
            a3_6 += v3 * x6
            a3_7 += v3 * x7
            a3_8 += v3 * x8
            a3_9 += v3 * x9
            a3_10 += v3 * x10
            a3_11 += v3 * x11
            a3_12 += v3 * x12
            a3_13 += v3 * x13
            a3_14 += v3 * x14
            a3_15 += v3 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o[s0 + 8] = min(max(a1_8, lo), hi)
        o[s0 + 9] = min(max(a1_9, lo), hi)
        o[s0 + 10] = min(max(a1_10, lo), hi)
        o[s0 + 11] = min(max(a1_11, lo), hi)
        o[s0 + 12] = min(max(a1_12, lo), hi)
        o[s0 + 13] = min(max(a1_13, lo), hi)
        o[s0 + 14] = min(max(a1_14, lo), hi)
        o[s0 + 15] = min(max(a1_15, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o[s0 + 4] = min(max(a2_4, lo), hi)
        o[s0 + 5] = min(max(a2_5, lo), hi)
        o[s0 + 6] = min(max(a2_6, lo), hi)
        o[s0 + 7] = min(max(a2_7, lo), hi)
        o[s0 + 8] = min(max(a2_8, lo), hi)
        o[s0 + 9] = min(max(a2_9, lo), hi)
        o[s0 + 10] = min(max(a2_10, lo), hi)
        o[s0 + 11] = min(max(a2_11, lo), hi)
        o[s0 + 12] = min(max(a2_12, lo), hi)
        o[s0 + 13] = min(max(a2_13, lo), hi)
        o[s0 + 14] = min(max(a2_14, lo), hi)
        o[s0 + 15] = min(max(a2_15, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)
        o[s0 + 4] = min(max(a3_4, lo), hi)
        o[s0 + 5] = min(max(a3_5, lo), hi)
        o[s0 + 6] = min(max(a3_6, lo), hi)
        o[s0 + 7] = min(max(a3_7, lo), hi)
        o[s0 + 8] = min(max(a3_8, lo), hi)
        o[s0 + 9] = min(max(a3_9, lo), hi)
        o[s0 + 10] = min(max(a3_10, lo), hi)
        o[s0 + 11] = min(max(a3_11, lo), hi)
        o[s0 + 12] = min(max(a3_12, lo), hi)
        o[s0 + 13] = min(max(a3_13, lo), hi)
        o[s0 + 14] = min(max(a3_14, lo), hi)
        o[s0 + 15] = min(max(a3_15, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w16_n4(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 4):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        a1_8 = b1
        a1_9 = b1
        a1_10 = b1
        a1_11 = b1
        a1_12 = b1
        a1_13 = b1
        a1_14 = b1
        a1_15 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        a2_4 = b2
        a2_5 = b2
        a2_6 = b2
        a2_7 = b2
        a2_8 = b2
        a2_9 = b2
        a2_10 = b2
        a2_11 = b2
        a2_12 = b2
        a2_13 = b2
        a2_14 = b2
        a2_15 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        a3_4 = b3
        a3_5 = b3
        a3_6 = b3
        a3_7 = b3
        a3_8 = b3
        a3_9 = b3
        a3_10 = b3
        a3_11 = b3
        a3_12 = b3
        a3_13 = b3
        a3_14 = b3
        a3_15 = b3
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        w2 = w[r0 + 2]
        w3 = w[r0 + 3]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            a1_8 += v1 * x8
            a1_9 += v1 * x9
            a1_10 += v1 * x10
            a1_11 += v1 * x11
            a1_12 += v1 * x12
            a1_13 += v1 * x13
            a1_14 += v1 * x14
            a1_15 += v1 * x15
            v2 = w2[k]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            a2_4 += v2 * x4
            a2_5 += v2 * x5
            a2_6 += v2 * x6
            a2_7 += v2 * x7
            a2_8 += v2 * x8
            a2_9 += v2 * x9
            a2_10 += v2 * x10
            a2_11 += v2 * x11
            a2_12 += v2 * x12
            a2_13 += v2 * x13
            a2_14 += v2 * x14
            a2_15 += v2 * x15
            v3 = w3[k]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
            a3_4 += v3 * x4
            a3_5 += v3 * x5
            a3_6 += v3 * x6
            a3_7 += v3 * x7
            a3_8 += v3 * x8
            a3_9 += v3 * x9
            a3_10 += v3 * x10
            a3_11 += v3 * x11
            a3_12 += v3 * x12
            a3_13 += v3 * x13
            a3_14 += v3 * x14
            a3_15 += v3 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o[s0 + 8] = min(max(a1_8, lo), hi)
        o[s0 + 9] = min(max(a1_9, lo), hi)
        o[s0 + 10] = min(max(a1_10, lo), hi)
        o[s0 + 11] = min(max(a1_11, lo), hi)
        o[s0 + 12] = min(max(a1_12, lo), hi)
        o[s0 + 13] = min(max(a1_13, lo), hi)
        o[s0 + 14] = min(max(a1_14, lo), hi)
        o[s0 + 15] = min(max(a1_15, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o[s0 + 4] = min(max(a2_4, lo), hi)
        o[s0 + 5] = min(max(a2_5, lo), hi)
        o[s0 + 6] = min(max(a2_6, lo), hi)
        o[s0 + 7] = min(max(a2_7, lo), hi)
        o[s0 + 8] = min(max(a2_8, lo), hi)
        o[s0 + 9] = min(max(a2_9, lo), hi)
        o[s0 + 10] = min(max(a2_10, lo), hi)
        o[s0 + 11] = min(max(a2_11, lo), hi)
        o[s0 + 12] = min(max(a2_12, lo), hi)
        o[s0 + 13] = min(max(a2_13, lo), hi)
        o[s0 + 14] = min(max(a2_14, lo), hi)
        o[s0 + 15] = min(max(a2_15, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)
        o[s0 + 4] = min(max(a3_4, lo), hi)
        o[s0 + 5] = min(max(a3_5, lo), hi)
        o[s0 + 6] = min(max(a3_6, lo), hi)
        o[s0 + 7] = min(max(a3_7, lo), hi)
        o[s0 + 8] = min(max(a3_8, lo), hi)
        o[s0 + 9] = min(max(a3_9, lo), hi)
        o[s0 + 10] = min(max(a3_10, lo), hi)
        o[s0 + 11] = min(max(a3_11, lo), hi)
        o[s0 + 12] = min(max(a3_12, lo), hi)
        o[s0 + 13] = min(max(a3_13, lo), hi)
        o[s0 + 14] = min(max(a3_14, lo), hi)
        o[s0 + 15] = min(max(a3_15, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w8_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 4
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        a2_4 = b2
        a2_5 = b2
        a2_6 = b2
        a2_7 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        a3_4 = b3
        a3_5 = b3
        a3_6 = b3
        a3_7 = b3
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            base = p * 4
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            v2 = vals[base + 2]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            a2_4 += v2 * x4
            a2_5 += v2 * x5
            a2_6 += v2 * x6
            a2_7 += v2 * x7
            v3 = vals[base + 3]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
            a3_4 += v3 * x4
            a3_5 += v3 * x5
            a3_6 += v3 * x6
            a3_7 += v3 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o[s0 + 4] = min(max(a2_4, lo), hi)
        o[s0 + 5] = min(max(a2_5, lo), hi)
        o[s0 + 6] = min(max(a2_6, lo), hi)
        o[s0 + 7] = min(max(a2_7, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)
        o[s0 + 4] = min(max(a3_4, lo), hi)
        o[s0 + 5] = min(max(a3_5, lo), hi)
        o[s0 + 6] = min(max(a3_6, lo), hi)
        o[s0 + 7] = min(max(a3_7, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w8_n4(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 4):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        a2_4 = b2
        a2_5 = b2
        a2_6 = b2
        a2_7 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        a3_4 = b3
        a3_5 = b3
        a3_6 = b3
        a3_7 = b3
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        w2 = w[r0 + 2]
        w3 = w[r0 + 3]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            v2 = w2[k]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            a2_4 += v2 * x4
            a2_5 += v2 * x5
            a2_6 += v2 * x6
            a2_7 += v2 * x7
            v3 = w3[k]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
            a3_4 += v3 * x4
            a3_5 += v3 * x5
            a3_6 += v3 * x6
            a3_7 += v3 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o[s0 + 4] = min(max(a2_4, lo), hi)
        o[s0 + 5] = min(max(a2_5, lo), hi)
        o[s0 + 6] = min(max(a2_6, lo), hi)
        o[s0 + 7] = min(max(a2_7, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)
        o[s0 + 4] = min(max(a3_4, lo), hi)
        o[s0 + 5] = min(max(a3_5, lo), hi)
        o[s0 + 6] = min(max(a3_6, lo), hi)
        o[s0 + 7] = min(max(a3_7, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w4_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 4
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            base = p * 4
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            v2 = vals[base + 2]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            v3 = vals[base + 3]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w4_n4(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 4):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        w2 = w[r0 + 2]
        w3 = w[r0 + 3]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            v2 = w2[k]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            v3 = w3[k]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w2_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 4
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            base = p * 4
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            v2 = vals[base + 2]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            v3 = vals[base + 3]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w2_n4(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 4):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        w2 = w[r0 + 2]
        w3 = w[r0 + 3]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            v2 = w2[k]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            v3 = w3[k]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def _spmm_scalar_w1_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 4
        b0 = bias[r0 + 0]
        a0_0 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            base = p * 4
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            v2 = vals[base + 2]
            a2_0 += v2 * x0
            v3 = vals[base + 3]
            a3_0 += v3 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def _gemm_scalar_w1_n4(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 4):
        b0 = bias[r0 + 0]
        a0_0 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        w2 = w[r0 + 2]
        w3 = w[r0 + 3]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            v0 = w0[k]
            a0_0 += v0 * x0
            v1 = w1[k]
            a1_0 += v1 * x0
            v2 = w2[k]
            a2_0 += v2 * x0
            v3 = w3[k]
            a3_0 += v3 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)


@njit(cache=True, nogil=True, fastmath=False)
def spmm_scalar_n4(ptr, idx, vals, act, bias, lo, hi, strip, prefetch, distance, out):
    s_total = act.shape[1]
    sink = np.float32(0.0)
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            ahead = s0 + distance * width
            touch = prefetch and ahead < s_total
            if width == 16:
                sink += _spmm_scalar_w16_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 8:
                sink += _spmm_scalar_w8_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 4:
                sink += _spmm_scalar_w4_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 2:
                sink += _spmm_scalar_w2_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 1:
                sink += _spmm_scalar_w1_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            s0 += width
        width //= 2
    return sink


@njit(cache=True, nogil=True, fastmath=False)
def gemm_scalar_n4(w, act, bias, lo, hi, strip, out):
    s_total = act.shape[1]
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            if width == 16:
                _gemm_scalar_w16_n4(w, act, bias, lo, hi, s0, out)
            elif width == 8:
                _gemm_scalar_w8_n4(w, act, bias, lo, hi, s0, out)
            elif width == 4:
                _gemm_scalar_w4_n4(w, act, bias, lo, hi, s0, out)
            elif width == 2:
                _gemm_scalar_w2_n4(w, act, bias, lo, hi, s0, out)
            elif width == 1:
                _gemm_scalar_w1_n4(w, act, bias, lo, hi, s0, out)
            s0 += width
        width //= 2


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w16_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 1
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            base = p * 1
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w16_n1(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 1):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        w0 = w[r0 + 0]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w8_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 1
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            base = p * 1
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w8_n1(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 1):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        w0 = w[r0 + 0]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w4_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 1
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            base = p * 1
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w4_n1(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 1):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        w0 = w[r0 + 0]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w2_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 1
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            base = p * 1
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w2_n1(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 1):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        w0 = w[r0 + 0]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w1_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 1
        b0 = bias[r0 + 0]
        a0_0 = b0
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            base = p * 1
            v0 = vals[base + 0]
            a0_0 += v0 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w1_n1(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 1):
        b0 = bias[r0 + 0]
        a0_0 = b0
        w0 = w[r0 + 0]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            v0 = w0[k]
            a0_0 += v0 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def spmm_vector_n1(ptr, idx, vals, act, bias, lo, hi, strip, prefetch, distance, out):
    s_total = act.shape[1]
    sink = np.float32(0.0)
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            ahead = s0 + distance * width
            touch = prefetch and ahead < s_total
            if width == 16:
                sink += _spmm_vector_w16_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 8:
                sink += _spmm_vector_w8_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 4:
                sink += _spmm_vector_w4_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 2:
                sink += _spmm_vector_w2_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 1:
                sink += _spmm_vector_w1_n1(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            s0 += width
        width //= 2
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def gemm_vector_n1(w, act, bias, lo, hi, strip, out):
    s_total = act.shape[1]
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            if width == 16:
                _gemm_vector_w16_n1(w, act, bias, lo, hi, s0, out)
            elif width == 8:
                _gemm_vector_w8_n1(w, act, bias, lo, hi, s0, out)
            elif width == 4:
                _gemm_vector_w4_n1(w, act, bias, lo, hi, s0, out)
            elif width == 2:
                _gemm_vector_w2_n1(w, act, bias, lo, hi, s0, out)
            elif width == 1:
                _gemm_vector_w1_n1(w, act, bias, lo, hi, s0, out)
            s0 += width
        width //= 2


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w16_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 2
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        a1_8 = b1
        a1_9 = b1
        a1_10 = b1
        a1_11 = b1
        a1_12 = b1
        a1_13 = b1
        a1_14 = b1
        a1_15 = b1
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            base = p * 2
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            a1_8 += v1 * x8
            a1_9 += v1 * x9
            a1_10 += v1 * x10
            a1_11 += v1 * x11
            a1_12 += v1 * x12
            a1_13 += v1 * x13
            a1_14 += v1 * x14
            a1_15 += v1 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o[s0 + 8] = min(max(a1_8, lo), hi)
        o[s0 + 9] = min(max(a1_9, lo), hi)
        o[s0 + 10] = min(max(a1_10, lo), hi)
        o[s0 + 11] = min(max(a1_11, lo), hi)
        o[s0 + 12] = min(max(a1_12, lo), hi)
        o[s0 + 13] = min(max(a1_13, lo), hi)
        o[s0 + 14] = min(max(a1_14, lo), hi)
        o[s0 + 15] = min(max(a1_15, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w16_n2(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 2):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        a1_8 = b1
        a1_9 = b1
        a1_10 = b1
        a1_11 = b1
        a1_12 = b1
        a1_13 = b1
        a1_14 = b1
        a1_15 = b1
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            a1_8 += v1 * x8
            a1_9 += v1 * x9
            a1_10 += v1 * x10
            a1_11 += v1 * x11
            a1_12 += v1 * x12
            a1_13 += v1 * x13
            a1_14 += v1 * x14
            a1_15 += v1 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o[s0 + 8] = min(max(a1_8, lo), hi)
        o[s0 + 9] = min(max(a1_9, lo), hi)
        o[s0 + 10] = min(max(a1_10, lo), hi)
        o[s0 + 11] = min(max(a1_11, lo), hi)
        o[s0 + 12] = min(max(a1_12, lo), hi)
        o[s0 + 13] = min(max(a1_13, lo), hi)
        o[s0 + 14] = min(max(a1_14, lo), hi)
        o[s0 + 15] = min(max(a1_15, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w8_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 2
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            base = p * 2
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w8_n2(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 2):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w4_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 2
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            base = p * 2
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w4_n2(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 2):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w2_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 2
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            base = p * 2
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w2_n2(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 2):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w1_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 2
        b0 = bias[r0 + 0]
        a0_0 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            base = p * 2
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            v1 = vals[base + 1]
            a1_0 += v1 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w1_n2(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 2):
        b0 = bias[r0 + 0]
        a0_0 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            v0 = w0[k]
            a0_0 += v0 * x0
            v1 = w1[k]
            a1_0 += v1 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def spmm_vector_n2(ptr, idx, vals, act, bias, lo, hi, strip, prefetch, distance, out):
    s_total = act.shape[1]
    sink = np.float32(0.0)
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            ahead = s0 + distance * width
            touch = prefetch and ahead < s_total
            if width == 16:
                sink += _spmm_vector_w16_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 8:
                sink += _spmm_vector_w8_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 4:
                sink += _spmm_vector_w4_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 2:
                sink += _spmm_vector_w2_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 1:
                sink += _spmm_vector_w1_n2(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            s0 += width
        width //= 2
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def gemm_vector_n2(w, act, bias, lo, hi, strip, out):
    s_total = act.shape[1]
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            if width == 16:
                _gemm_vector_w16_n2(w, act, bias, lo, hi, s0, out)
            elif width == 8:
                _gemm_vector_w8_n2(w, act, bias, lo, hi, s0, out)
            elif width == 4:
                _gemm_vector_w4_n2(w, act, bias, lo, hi, s0, out)
            elif width == 2:
                _gemm_vector_w2_n2(w, act, bias, lo, hi, s0, out)
            elif width == 1:
                _gemm_vector_w1_n2(w, act, bias, lo, hi, s0, out)
            s0 += width
        width //= 2


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w16_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 4
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        a1_8 = b1
        a1_9 = b1
        a1_10 = b1
        a1_11 = b1
        a1_12 = b1
        a1_13 = b1
        a1_14 = b1
        a1_15 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        a2_4 = b2
        a2_5 = b2
        a2_6 = b2
        a2_7 = b2
        a2_8 = b2
        a2_9 = b2
        a2_10 = b2
        a2_11 = b2
        a2_12 = b2
        a2_13 = b2
        a2_14 = b2
        a2_15 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        a3_4 = b3
        a3_5 = b3
        a3_6 = b3
        a3_7 = b3
        a3_8 = b3
        a3_9 = b3
        a3_10 = b3
        a3_11 = b3
        a3_12 = b3
        a3_13 = b3
        a3_14 = b3
        a3_15 = b3
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            base = p * 4
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            a1_8 += v1 * x8
            a1_9 += v1 * x9
            a1_10 += v1 * x10
            a1_11 += v1 * x11
            a1_12 += v1 * x12
            a1_13 += v1 * x13
            a1_14 += v1 * x14
            a1_15 += v1 * x15
            v2 = vals[base + 2]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            a2_4 += v2 * x4
            a2_5 += v2 * x5
            a2_6 += v2 * x6
            a2_7 += v2 * x7
            a2_8 += v2 * x8
            a2_9 += v2 * x9
            a2_10 += v2 * x10
            a2_11 += v2 * x11
            a2_12 += v2 * x12
            a2_13 += v2 * x13
            a2_14 += v2 * x14
            a2_15 += v2 * x15
            v3 = vals[base + 3]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
            a3_4 += v3 * x4
            a3_5 += v3 * x5
            a3_6 += v3 * x6
            a3_7 += v3 * x7
            a3_8 += v3 * x8
            a3_9 += v3 * x9
            a3_10 += v3 * x10
            a3_11 += v3 * x11
            a3_12 += v3 * x12
            a3_13 += v3 * x13
            a3_14 += v3 * x14
            a3_15 += v3 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o[s0 + 8] = min(max(a1_8, lo), hi)
        o[s0 + 9] = min(max(a1_9, lo), hi)
        o[s0 + 10] = min(max(a1_10, lo), hi)
        o[s0 + 11] = min(max(a1_11, lo), hi)
        o[s0 + 12] = min(max(a1_12, lo), hi)
        o[s0 + 13] = min(max(a1_13, lo), hi)
        o[s0 + 14] = min(max(a1_14, lo), hi)
        o[s0 + 15] = min(max(a1_15, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o[s0 + 4] = min(max(a2_4, lo), hi)
        o[s0 + 5] = min(max(a2_5, lo), hi)
        o[s0 + 6] = min(max(a2_6, lo), hi)
        o[s0 + 7] = min(max(a2_7, lo), hi)
        o[s0 + 8] = min(max(a2_8, lo), hi)
        o[s0 + 9] = min(max(a2_9, lo), hi)
        o[s0 + 10] = min(max(a2_10, lo), hi)
        o[s0 + 11] = min(max(a2_11, lo), hi)
        o[s0 + 12] = min(max(a2_12, lo), hi)
        o[s0 + 13] = min(max(a2_13, lo), hi)
        o[s0 + 14] = min(max(a2_14, lo), hi)
        o[s0 + 15] = min(max(a2_15, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)
        o[s0 + 4] = min(max(a3_4, lo), hi)
        o[s0 + 5] = min(max(a3_5, lo), hi)
        o[s0 + 6] = min(max(a3_6, lo), hi)
        o[s0 + 7] = min(max(a3_7, lo), hi)
        o[s0 + 8] = min(max(a3_8, lo), hi)
        o[s0 + 9] = min(max(a3_9, lo), hi)
        o[s0 + 10] = min(max(a3_10, lo), hi)
        o[s0 + 11] = min(max(a3_11, lo), hi)
        o[s0 + 12] = min(max(a3_12, lo), hi)
        o[s0 + 13] = min(max(a3_13, lo), hi)
        o[s0 + 14] = min(max(a3_14, lo), hi)
        o[s0 + 15] = min(max(a3_15, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w16_n4(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 4):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        a0_8 = b0
        a0_9 = b0
        a0_10 = b0
        a0_11 = b0
        a0_12 = b0
        a0_13 = b0
        a0_14 = b0
        a0_15 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        a1_8 = b1
        a1_9 = b1
        a1_10 = b1
        a1_11 = b1
        a1_12 = b1
        a1_13 = b1
        a1_14 = b1
        a1_15 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        a2_4 = b2
        a2_5 = b2
        a2_6 = b2
        a2_7 = b2
        a2_8 = b2
        a2_9 = b2
        a2_10 = b2
        a2_11 = b2
        a2_12 = b2
        a2_13 = b2
        a2_14 = b2
        a2_15 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        a3_4 = b3
        a3_5 = b3
        a3_6 = b3
        a3_7 = b3
        a3_8 = b3
        a3_9 = b3
        a3_10 = b3
        a3_11 = b3
        a3_12 = b3
        a3_13 = b3
        a3_14 = b3
        a3_15 = b3
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        w2 = w[r0 + 2]
        w3 = w[r0 + 3]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            x8 = row[s0 + 8]
            x9 = row[s0 + 9]
            x10 = row[s0 + 10]
            x11 = row[s0 + 11]
            x12 = row[s0 + 12]
            x13 = row[s0 + 13]
            x14 = row[s0 + 14]
            x15 = row[s0 + 15]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            a0_8 += v0 * x8
            a0_9 += v0 * x9
            a0_10 += v0 * x10
            a0_11 += v0 * x11
            a0_12 += v0 * x12
            a0_13 += v0 * x13
            a0_14 += v0 * x14
            a0_15 += v0 * x15
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            a1_8 += v1 * x8
            a1_9 += v1 * x9
            a1_10 += v1 * x10
            a1_11 += v1 * x11
            a1_12 += v1 * x12
            a1_13 += v1 * x13
            a1_14 += v1 * x14
            a1_15 += v1 * x15
            v2 = w2[k]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            a2_4 += v2 * x4
            a2_5 += v2 * x5
            a2_6 += v2 * x6
            a2_7 += v2 * x7
            a2_8 += v2 * x8
            a2_9 += v2 * x9
            a2_10 += v2 * x10
            a2_11 += v2 * x11
            a2_12 += v2 * x12
            a2_13 += v2 * x13
            a2_14 += v2 * x14
            a2_15 += v2 * x15
            v3 = w3[k]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
            a3_4 += v3 * x4
            a3_5 += v3 * x5
            a3_6 += v3 * x6
            a3_7 += v3 * x7
            a3_8 += v3 * x8
            a3_9 += v3 * x9
            a3_10 += v3 * x10
            a3_11 += v3 * x11
            a3_12 += v3 * x12
            a3_13 += v3 * x13
            a3_14 += v3 * x14
            a3_15 += v3 * x15
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o[s0 + 8] = min(max(a0_8, lo), hi)
        o[s0 + 9] = min(max(a0_9, lo), hi)
        o[s0 + 10] = min(max(a0_10, lo), hi)
        o[s0 + 11] = min(max(a0_11, lo), hi)
        o[s0 + 12] = min(max(a0_12, lo), hi)
        o[s0 + 13] = min(max(a0_13, lo), hi)
        o[s0 + 14] = min(max(a0_14, lo), hi)
        o[s0 + 15] = min(max(a0_15, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o[s0 + 8] = min(max(a1_8, lo), hi)
        o[s0 + 9] = min(max(a1_9, lo), hi)
        o[s0 + 10] = min(max(a1_10, lo), hi)
        o[s0 + 11] = min(max(a1_11, lo), hi)
        o[s0 + 12] = min(max(a1_12, lo), hi)
        o[s0 + 13] = min(max(a1_13, lo), hi)
        o[s0 + 14] = min(max(a1_14, lo), hi)
        o[s0 + 15] = min(max(a1_15, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o[s0 + 4] = min(max(a2_4, lo), hi)
        o[s0 + 5] = min(max(a2_5, lo), hi)
        o[s0 + 6] = min(max(a2_6, lo), hi)
        o[s0 + 7] = min(max(a2_7, lo), hi)
        o[s0 + 8] = min(max(a2_8, lo), hi)
        o[s0 + 9] = min(max(a2_9, lo), hi)
        o[s0 + 10] = min(max(a2_10, lo), hi)
        o[s0 + 11] = min(max(a2_11, lo), hi)
        o[s0 + 12] = min(max(a2_12, lo), hi)
        o[s0 + 13] = min(max(a2_13, lo), hi)
        o[s0 + 14] = min(max(a2_14, lo), hi)
        o[s0 + 15] = min(max(a2_15, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)
        o[s0 + 4] = min(max(a3_4, lo), hi)
        o[s0 + 5] = min(max(a3_5, lo), hi)
        o[s0 + 6] = min(max(a3_6, lo), hi)
        o[s0 + 7] = min(max(a3_7, lo), hi)
        o[s0 + 8] = min(max(a3_8, lo), hi)
        o[s0 + 9] = min(max(a3_9, lo), hi)
        o[s0 + 10] = min(max(a3_10, lo), hi)
        o[s0 + 11] = min(max(a3_11, lo), hi)
        o[s0 + 12] = min(max(a3_12, lo), hi)
        o[s0 + 13] = min(max(a3_13, lo), hi)
        o[s0 + 14] = min(max(a3_14, lo), hi)
        o[s0 + 15] = min(max(a3_15, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w8_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 4
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        a2_4 = b2
        a2_5 = b2
        a2_6 = b2
        a2_7 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        a3_4 = b3
        a3_5 = b3
        a3_6 = b3
        a3_7 = b3
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            base = p * 4
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            v2 = vals[base + 2]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            a2_4 += v2 * x4
            a2_5 += v2 * x5
            a2_6 += v2 * x6
            a2_7 += v2 * x7
            v3 = vals[base + 3]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
            a3_4 += v3 * x4
            a3_5 += v3 * x5
            a3_6 += v3 * x6
            a3_7 += v3 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o[s0 + 4] = min(max(a2_4, lo), hi)
        o[s0 + 5] = min(max(a2_5, lo), hi)
        o[s0 + 6] = min(max(a2_6, lo), hi)
        o[s0 + 7] = min(max(a2_7, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)
        o[s0 + 4] = min(max(a3_4, lo), hi)
        o[s0 + 5] = min(max(a3_5, lo), hi)
        o[s0 + 6] = min(max(a3_6, lo), hi)
        o[s0 + 7] = min(max(a3_7, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w8_n4(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 4):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        a0_4 = b0
        a0_5 = b0
        a0_6 = b0
        a0_7 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        a1_4 = b1
        a1_5 = b1
        a1_6 = b1
        a1_7 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        a2_4 = b2
        a2_5 = b2
        a2_6 = b2
        a2_7 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        a3_4 = b3
        a3_5 = b3
        a3_6 = b3
        a3_7 = b3
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        w2 = w[r0 + 2]
        w3 = w[r0 + 3]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            x4 = row[s0 + 4]
            x5 = row[s0 + 5]
            x6 = row[s0 + 6]
            x7 = row[s0 + 7]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            a0_4 += v0 * x4
            a0_5 += v0 * x5
            a0_6 += v0 * x6
            a0_7 += v0 * x7
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            a1_4 += v1 * x4
            a1_5 += v1 * x5
            a1_6 += v1 * x6
            a1_7 += v1 * x7
            v2 = w2[k]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            a2_4 += v2 * x4
            a2_5 += v2 * x5
            a2_6 += v2 * x6
            a2_7 += v2 * x7
            v3 = w3[k]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
            a3_4 += v3 * x4
            a3_5 += v3 * x5
            a3_6 += v3 * x6
            a3_7 += v3 * x7
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o[s0 + 4] = min(max(a0_4, lo), hi)
        o[s0 + 5] = min(max(a0_5, lo), hi)
        o[s0 + 6] = min(max(a0_6, lo), hi)
        o[s0 + 7] = min(max(a0_7, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o[s0 + 4] = min(max(a1_4, lo), hi)
        o[s0 + 5] = min(max(a1_5, lo), hi)
        o[s0 + 6] = min(max(a1_6, lo), hi)
        o[s0 + 7] = min(max(a1_7, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o[s0 + 4] = min(max(a2_4, lo), hi)
        o[s0 + 5] = min(max(a2_5, lo), hi)
        o[s0 + 6] = min(max(a2_6, lo), hi)
        o[s0 + 7] = min(max(a2_7, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)
        o[s0 + 4] = min(max(a3_4, lo), hi)
        o[s0 + 5] = min(max(a3_5, lo), hi)
        o[s0 + 6] = min(max(a3_6, lo), hi)
        o[s0 + 7] = min(max(a3_7, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w4_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 4
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            base = p * 4
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            v2 = vals[base + 2]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            v3 = vals[base + 3]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w4_n4(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 4):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        a0_2 = b0
        a0_3 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        a1_2 = b1
        a1_3 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        a2_2 = b2
        a2_3 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        a3_2 = b3
        a3_3 = b3
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        w2 = w[r0 + 2]
        w3 = w[r0 + 3]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            x2 = row[s0 + 2]
            x3 = row[s0 + 3]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            a0_2 += v0 * x2
            a0_3 += v0 * x3
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            a1_2 += v1 * x2
            a1_3 += v1 * x3
            v2 = w2[k]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            a2_2 += v2 * x2
            a2_3 += v2 * x3
            v3 = w3[k]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
            a3_2 += v3 * x2
            a3_3 += v3 * x3
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o[s0 + 2] = min(max(a0_2, lo), hi)
        o[s0 + 3] = min(max(a0_3, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o[s0 + 2] = min(max(a1_2, lo), hi)
        o[s0 + 3] = min(max(a1_3, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o[s0 + 2] = min(max(a2_2, lo), hi)
        o[s0 + 3] = min(max(a2_3, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
        o[s0 + 2] = min(max(a3_2, lo), hi)
        o[s0 + 3] = min(max(a3_3, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w2_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 4
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            base = p * 4
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            v2 = vals[base + 2]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            v3 = vals[base + 3]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w2_n4(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 4):
        b0 = bias[r0 + 0]
        a0_0 = b0
        a0_1 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        a1_1 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        a2_1 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        a3_1 = b3
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        w2 = w[r0 + 2]
        w3 = w[r0 + 3]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            x1 = row[s0 + 1]
            v0 = w0[k]
            a0_0 += v0 * x0
            a0_1 += v0 * x1
            v1 = w1[k]
            a1_0 += v1 * x0
            a1_1 += v1 * x1
            v2 = w2[k]
            a2_0 += v2 * x0
            a2_1 += v2 * x1
            v3 = w3[k]
            a3_0 += v3 * x0
            a3_1 += v3 * x1
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o[s0 + 1] = min(max(a0_1, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o[s0 + 1] = min(max(a1_1, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o[s0 + 1] = min(max(a2_1, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
        o[s0 + 1] = min(max(a3_1, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _spmm_vector_w1_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out):
    sink = np.float32(0.0)
    for br in range(ptr.size - 1):
        r0 = br * 4
        b0 = bias[r0 + 0]
        a0_0 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        for p in range(np.int64(ptr[br]), np.int64(ptr[br + 1])):
            col = np.int64(idx[p])
            if touch:
                sink += act[col, ahead]
            row = act[col]
            x0 = row[s0 + 0]
            base = p * 4
            v0 = vals[base + 0]
            a0_0 += v0 * x0
            v1 = vals[base + 1]
            a1_0 += v1 * x0
            v2 = vals[base + 2]
            a2_0 += v2 * x0
            v3 = vals[base + 3]
            a3_0 += v3 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def _gemm_vector_w1_n4(w, act, bias, lo, hi, s0, out):
    cin = w.shape[1]
    for r0 in range(0, w.shape[0], 4):
        b0 = bias[r0 + 0]
        a0_0 = b0
        b1 = bias[r0 + 1]
        a1_0 = b1
        b2 = bias[r0 + 2]
        a2_0 = b2
        b3 = bias[r0 + 3]
        a3_0 = b3
        w0 = w[r0 + 0]
        w1 = w[r0 + 1]
        w2 = w[r0 + 2]
        w3 = w[r0 + 3]
        for k in range(cin):
            row = act[k]
            x0 = row[s0 + 0]
            v0 = w0[k]
            a0_0 += v0 * x0
            v1 = w1[k]
            a1_0 += v1 * x0
            v2 = w2[k]
            a2_0 += v2 * x0
            v3 = w3[k]
            a3_0 += v3 * x0
        o = out[r0 + 0]
        o[s0 + 0] = min(max(a0_0, lo), hi)
        o = out[r0 + 1]
        o[s0 + 0] = min(max(a1_0, lo), hi)
        o = out[r0 + 2]
        o[s0 + 0] = min(max(a2_0, lo), hi)
        o = out[r0 + 3]
        o[s0 + 0] = min(max(a3_0, lo), hi)


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def spmm_vector_n4(ptr, idx, vals, act, bias, lo, hi, strip, prefetch, distance, out):
    s_total = act.shape[1]
    sink = np.float32(0.0)
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            ahead = s0 + distance * width
            touch = prefetch and ahead < s_total
            if width == 16:
                sink += _spmm_vector_w16_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 8:
                sink += _spmm_vector_w8_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 4:
                sink += _spmm_vector_w4_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 2:
                sink += _spmm_vector_w2_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            elif width == 1:
                sink += _spmm_vector_w1_n4(ptr, idx, vals, act, bias, lo, hi, s0, ahead, touch, out)
            s0 += width
        width //= 2
    return sink


@njit(cache=True, nogil=True, fastmath={"nnan", "ninf", "nsz", "arcp", "afn"})
def gemm_vector_n4(w, act, bias, lo, hi, strip, out):
    s_total = act.shape[1]
    s0 = 0
    width = strip
    while width > 0:
        while s0 + width <= s_total:
            if width == 16:
                _gemm_vector_w16_n4(w, act, bias, lo, hi, s0, out)
            elif width == 8:
                _gemm_vector_w8_n4(w, act, bias, lo, hi, s0, out)
            elif width == 4:
                _gemm_vector_w4_n4(w, act, bias, lo, hi, s0, out)
            elif width == 2:
                _gemm_vector_w2_n4(w, act, bias, lo, hi, s0, out)
            elif width == 1:
                _gemm_vector_w1_n4(w, act, bias, lo, hi, s0, out)
            s0 += width
        width //= 2


SPMM = {("scalar", 1): spmm_scalar_n1, ("scalar", 2): spmm_scalar_n2, ("scalar", 4): spmm_scalar_n4, ("vector", 1): spmm_vector_n1, ("vector", 2): spmm_vector_n2, ("vector", 4): spmm_vector_n4}
GEMM = {("scalar", 1): gemm_scalar_n1, ("scalar", 2): gemm_scalar_n2, ("scalar", 4): gemm_scalar_n4, ("vector", 1): gemm_vector_n1, ("vector", 2): gemm_vector_n2, ("vector", 4): gemm_vector_n4}
