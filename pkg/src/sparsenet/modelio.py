"""Binary model files and conversion from dense weight dumps.

File layout (all integers little-endian)::

    magic        4s   b"SPCV"
    version      u16
    file_size    u64  total bytes, CRC trailer included
    arch name    u16 length + UTF-8 bytes
    width        u32  width multiplier x 1000
    sparsity     f64  plan sparsity
    block_start  i32  first blocked unit, -1 for none
    block_after  u8   block size from block_start on
    input        3 x u32 (height, width, channels)
    layer_count  u32
    layers       layer_count records, see below
    crc32        u32  CRC-32 of every preceding byte

Layer record::

    kind u8, cin u32, cout u32, stride u8, sparse u8, sparsity f64,
    block_h u8, act u8 (0 none, 1 clamp), lo f64, hi f64, unit u32,
    residual u8, bias (u32 count + f32 values), storage u8

    storage 0: no kernel
    storage 1: dense, u8 ndim, ndim x u32 dims, u32 count + f32 values
    storage 2: BCSR, u32 rows, u32 cols, u8 block_h,
               u32 count + u32 block_row_ptr, u32 count + u32 col_indices,
               u32 count + f32 values

A dense dump is the raw little-endian float32 concatenation of tensors
listed in a manifest, one ``name dim0 dim1 ...`` line per tensor.
"""

from __future__ import annotations

import os
import struct
import zlib
from typing import Dict, List, Tuple

import numpy as np

from .bcsr import BcsrMatrix, BlockConfig, decode_bcsr, encode_bcsr
from .errors import (
    BadMagicError, ChecksumError, ConversionError, FormatError, InvariantError, ShapeError,
    TruncatedError, UnsupportedVersionError,
)
from .kernels import FusedActivation
from .netdef import LayerKind, LayerSpec, LayerWeights, NetworkSpec, SparsityPlan, WeightSet, check_weights
from .pruning import magnitude_mask
from .tensor import DenseMatrix

MAGIC = b"SPCV"
FORMAT_VERSION = 1
_PREAMBLE = struct.Struct("<4sHQ")
_KINDS = list(LayerKind)
MAX_DIMS = 4


def _array(buf: bytearray, arr: np.ndarray, dtype: str) -> None:
    arr = np.ascontiguousarray(arr, dtype=dtype).reshape(-1)
    buf += struct.pack("<I", arr.size)
    buf += arr.tobytes()


def _encode(net: NetworkSpec, weights: WeightSet) -> bytes:
    body = bytearray()
    name = net.name.encode("utf-8")
    plan = net.plan
    body += struct.pack("<H", len(name)) + name
    body += struct.pack(
        "<Idib3I", round(net.width * 1000), plan.sparsity,
        -1 if plan.block_start_layer is None else plan.block_start_layer,
        plan.block_h_after, *net.input_size,
    )
    body += struct.pack("<I", len(net.layers))
    for layer, lw in zip(net.layers, weights.layers):
        lo, hi = layer.act if layer.act is not None else (0.0, 0.0)
        body += struct.pack(
            "<BIIBBdBBddIB", _KINDS.index(layer.kind), layer.cin, layer.cout, layer.stride,
            layer.sparse, layer.sparsity, layer.block_h, layer.act is not None, lo, hi,
            layer.unit, layer.residual,
        )
        _array(body, lw.bias if lw.bias is not None else np.zeros(0), "<f4")
        k = lw.kernel
        if k is None:
            body += b"\x00"
        elif isinstance(k, BcsrMatrix):
            body += struct.pack("<BIIB", 2, k.rows, k.cols, k.block_h)
            _array(body, k.block_row_ptr, "<u4")
            _array(body, k.col_indices, "<u4")
            _array(body, k.values, "<f4")
        else:
            arr = k.array() if isinstance(k, DenseMatrix) else np.asarray(k)
            body += struct.pack("<BB", 1, arr.ndim) + struct.pack(f"<{arr.ndim}I", *arr.shape)
            _array(body, arr, "<f4")
    size = _PREAMBLE.size + len(body) + 4
    head = _PREAMBLE.pack(MAGIC, FORMAT_VERSION, size)
    crc = zlib.crc32(body, zlib.crc32(head))
    return head + bytes(body) + struct.pack("<I", crc)


def model_bytes(net: NetworkSpec, weights: WeightSet) -> bytes:
    if not net.layers:
        raise ShapeError("cannot save a network without layers")
    check_weights(net, weights)
    return _encode(net, weights)


def save_model(net: NetworkSpec, weights: WeightSet, path) -> None:
    data = model_bytes(net, weights)
    with open(path, "wb") as f:
        f.write(data)


class _Reader:
    def __init__(self, data: bytes, pos: int, end: int):
        self.data, self.pos, self.end = data, pos, end

    def take(self, n: int) -> bytes:
        if n < 0 or self.pos + n > self.end:
            raise InvariantError(f"record at offset {self.pos} overruns the payload")
        chunk = self.data[self.pos : self.pos + n]
        self.pos += n
        return chunk

    def unpack(self, fmt: str):
        s = struct.calcsize("<" + fmt)
        return struct.unpack("<" + fmt, self.take(s))

    def array(self, dtype: str) -> np.ndarray:
        (count,) = self.unpack("I")
        item = np.dtype(dtype).itemsize
        if count * item > self.end - self.pos:
            raise InvariantError(f"array of {count} elements at offset {self.pos} overruns the payload")
        return np.frombuffer(self.take(count * item), dtype=dtype).astype(dtype[1:], copy=True)


def _flag(value: int, what: str) -> bool:
    if value not in (0, 1):
        raise InvariantError(f"{what} flag must be 0 or 1, got {value}")
    return bool(value)


def _read_layer(r: _Reader) -> Tuple[LayerSpec, LayerWeights]:
    kind, cin, cout, stride, sparse, sparsity, block_h, has_act, lo, hi, unit, residual = r.unpack("BIIBBdBBddIB")
    if kind >= len(_KINDS):
        raise InvariantError(f"unknown layer kind tag {kind}")
    act = FusedActivation(lo, hi) if _flag(has_act, "activation") else None
    if act is not None and not lo < hi:
        raise InvariantError(f"activation clamp needs lo < hi, got ({lo}, {hi})")
    layer = LayerSpec(_KINDS[kind], cin, cout, stride, _flag(sparse, "sparse"), sparsity, block_h,
                      act, unit, _flag(residual, "residual"))
    bias = r.array("<f4")
    (storage,) = r.unpack("B")
    if storage == 0:
        kernel = None
    elif storage == 1:
        (ndim,) = r.unpack("B")
        if not 1 <= ndim <= MAX_DIMS:
            raise InvariantError(f"dense kernel rank {ndim} unsupported")
        dims = r.unpack(f"{ndim}I")
        values = r.array("<f4")
        if values.size != int(np.prod(dims, dtype=np.int64)):
            raise InvariantError(f"dense kernel holds {values.size} values for shape {dims}")
        values = values.reshape(dims)
        kernel = DenseMatrix.from_array(values) if ndim == 2 else values
    elif storage == 2:
        rows, cols, bh = r.unpack("IIB")
        ptr, idx, values = r.array("<u4"), r.array("<u4"), r.array("<f4")
        try:
            kernel = BcsrMatrix(rows, cols, bh, ptr, idx, values)
        except FormatError as e:
            raise InvariantError(f"invalid sparse kernel: {e}") from e
    else:
        raise InvariantError(f"unknown storage tag {storage}")
    if layer.kind == LayerKind.POOL and bias.size == 0:
        bias = None
    return layer, LayerWeights(kernel, bias)


def decode_model(data: bytes) -> Tuple[NetworkSpec, WeightSet]:
    """Parse and fully validate a model image; every failure is a typed error."""
    data = bytes(data)
    if len(data) < len(MAGIC):
        if MAGIC.startswith(data):
            raise TruncatedError(f"file ends after {len(data)} bytes")
        raise BadMagicError("not a model file")
    if data[:4] != MAGIC:
        raise BadMagicError(f"bad magic {data[:4]!r}")
    if len(data) < _PREAMBLE.size:
        raise TruncatedError(f"file ends inside the header ({len(data)} bytes)")
    _, version, size = _PREAMBLE.unpack_from(data)
    if version != FORMAT_VERSION:
        raise UnsupportedVersionError(f"format version {version} unsupported (expected {FORMAT_VERSION})")
    if len(data) < size:
        raise TruncatedError(f"file holds {len(data)} of {size} declared bytes")
    if len(data) > size:
        raise InvariantError(f"{len(data) - size} trailing bytes after the declared end")
    if size < _PREAMBLE.size + 4:
        raise InvariantError(f"declared size {size} is smaller than the header")
    (crc,) = struct.unpack_from("<I", data, size - 4)
    if zlib.crc32(data[: size - 4]) != crc:
        raise ChecksumError("CRC-32 mismatch")

    r = _Reader(data, _PREAMBLE.size, size - 4)
    try:
        (name_len,) = r.unpack("H")
        name = r.take(name_len).decode("utf-8")
        width_milli, sparsity, block_start, block_after, h, w, c = r.unpack("Idib3I")
        (count,) = r.unpack("I")
        records = [_read_layer(r) for _ in range(count)]
        if r.pos != r.end:
            raise InvariantError(f"{r.end - r.pos} unparsed bytes before the checksum")
        plan = SparsityPlan(sparsity, None if block_start == -1 else block_start, block_after)
        net = NetworkSpec(name, width_milli / 1000, tuple(l for l, _ in records), plan, (h, w, c))
        weights = WeightSet([lw for _, lw in records])
        check_weights(net, weights)
    except InvariantError:
        raise
    except (ValueError, ArithmeticError, IndexError, struct.error) as e:
        # ShapeError/FormatError are ValueErrors raised by the model constructors.
        raise InvariantError(str(e)) from e
    return net, weights


def load_model(path) -> Tuple[NetworkSpec, WeightSet]:
    with open(path, "rb") as f:
        return decode_model(f.read())


# Dense dumps ---------------------------------------------------------------

def _dump_tensors(net: NetworkSpec, weights: WeightSet) -> List[Tuple[str, np.ndarray]]:
    out = []
    for i, (layer, lw) in enumerate(zip(net.layers, weights.layers)):
        if lw.kernel is None:
            continue
        k = lw.kernel
        if isinstance(k, BcsrMatrix):
            k = decode_bcsr(k).array()[: layer.cout]
        elif isinstance(k, DenseMatrix):
            k = k.array()
        out.append((f"layer{i}.weight", np.asarray(k, np.float32)))
        out.append((f"layer{i}.bias", np.asarray(lw.bias, np.float32)))
    return out


def write_dense_dump(net: NetworkSpec, weights: WeightSet, dump_path, manifest_path) -> None:
    """Write every kernel and bias densely, in layer order, with its manifest."""
    check_weights(net, weights)
    tensors = _dump_tensors(net, weights)
    with open(dump_path, "wb") as f:
        for _, arr in tensors:
            f.write(arr.astype("<f4").tobytes())
    with open(manifest_path, "w") as f:
        for name, arr in tensors:
            f.write(" ".join([name, *map(str, arr.shape)]) + "\n")


def read_dense_dump(dump_path, manifest_path) -> Dict[str, np.ndarray]:
    entries = []
    with open(manifest_path) as f:
        for lineno, line in enumerate(f, 1):
            parts = line.split()
            if not parts:
                continue
            try:
                dims = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise ConversionError(f"manifest line {lineno}: dimensions must be integers") from None
            if not dims or min(dims) < 1:
                raise ConversionError(f"manifest line {lineno}: tensor {parts[0]} needs positive dimensions")
            entries.append((parts[0], dims))
    raw = np.fromfile(dump_path, dtype="<f4")
    expected = sum(int(np.prod(d)) for _, d in entries)
    if raw.size != expected or os.path.getsize(dump_path) != 4 * expected:
        raise ConversionError(f"dump holds {os.path.getsize(dump_path)} bytes, manifest describes {4 * expected}")
    tensors, pos = {}, 0
    for name, dims in entries:
        n = int(np.prod(dims))
        if name in tensors:
            raise ConversionError(f"tensor {name} listed twice")
        tensors[name] = raw[pos : pos + n].astype(np.float32).reshape(dims)
        pos += n
    return tensors


def _expected_shape(layer: LayerSpec) -> Tuple[int, ...]:
    if layer.kind == LayerKind.ENTRY:
        return (layer.cout, 3, 3, layer.cin)
    if layer.kind == LayerKind.DEPTHWISE:
        return (layer.cin, 3, 3)
    return (layer.cout, layer.cin)


def inconsistent_blocks(dense: np.ndarray, block_h: int) -> List[Tuple[int, int]]:
    """(row, col) of every block that mixes zero and nonzero entries."""
    rows, cols = dense.shape
    nz = (dense != 0).reshape(rows // block_h, block_h, cols)
    mixed = nz.any(axis=1) & ~nz.all(axis=1)
    return [(int(br) * block_h, int(c)) for br, c in zip(*np.nonzero(mixed))]


MODES = ("mask_from_values", "magnitude_prune")


def convert_dense_dump(dump_path, manifest_path, net: NetworkSpec, mode: str = "mask_from_values",
                       out_path=None) -> Tuple[NetworkSpec, WeightSet]:
    """Build a sparse model from a dense dump of ``net``'s weights.

    ``mask_from_values`` keeps the dump's exact zeros; ``magnitude_prune``
    prunes each sparse layer to its planned sparsity by block magnitude.
    """
    if mode not in MODES:
        raise ValueError(f"unknown conversion mode {mode!r}")
    tensors = read_dense_dump(dump_path, manifest_path)
    layers = []
    for i, layer in enumerate(net.layers):
        if layer.kind == LayerKind.POOL:
            layers.append(LayerWeights())
            continue
        try:
            kernel, bias = tensors[f"layer{i}.weight"], tensors[f"layer{i}.bias"]
        except KeyError as e:
            raise ConversionError(f"dump is missing tensor {e.args[0]}") from None
        if kernel.shape != _expected_shape(layer) or bias.shape != (layer.cout,):
            raise ConversionError(
                f"layer {i}: dump shapes {kernel.shape}/{bias.shape} do not match "
                f"{layer.kind.value} expecting {_expected_shape(layer)}/({layer.cout},)"
            )
        if layer.is_matmul:
            if layer.sparse:
                padded = np.zeros((layer.rows, layer.cin), np.float32)
                padded[: layer.cout] = kernel
                if mode == "magnitude_prune":
                    mask = magnitude_mask(DenseMatrix.from_array(padded), layer.sparsity, BlockConfig(layer.block_h))
                    padded = np.where(mask.bits, padded, np.float32(0))
                elif layer.block_h > 1:
                    bad = inconsistent_blocks(padded, layer.block_h)
                    if bad:
                        shown = ", ".join(f"({r},{c})" for r, c in bad[:8])
                        raise ConversionError(
                            f"layer {i}: {len(bad)} blocks of height {layer.block_h} mix zeros and "
                            f"nonzeros, first at row,col {shown}"
                        )
                kernel = encode_bcsr(DenseMatrix.from_array(padded), layer.block_h)
            else:
                kernel = DenseMatrix.from_array(kernel)
        layers.append(LayerWeights(kernel, bias))
    weights = WeightSet(layers)
    check_weights(net, weights)
    if out_path is not None:
        save_model(net, weights, out_path)
    return net, weights
