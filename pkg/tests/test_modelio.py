import struct
import zlib

import numpy as np
import pytest

from sparsenet.errors import (
    BadMagicError, ChecksumError, ConversionError, InvariantError, ModelFileError, TruncatedError,
    UnsupportedVersionError,
)
from sparsenet.modelio import (
    convert_dense_dump, decode_model, load_model, model_bytes, read_dense_dump, save_model, write_dense_dump,
)
from sparsenet.netdef import (
    DENSE, SparsityPlan, build_network, instantiate_weights, random_image, run_network,
)

SMALL = (32, 32, 3)


def _small(arch="mbv2", plan=SparsityPlan(0.8, 3, 2)):
    net = build_network(arch, 0.5, plan, num_classes=10, input_size=SMALL)
    return net, instantiate_weights(net, 4)


def _recrc(data: bytearray) -> bytes:
    body = bytes(data[:-4])
    return body + struct.pack("<I", zlib.crc32(body))


@pytest.mark.parametrize("arch", ["mbv1", "mbv2", "ca-mbv2"])
def test_round_trip(tmp_path, arch):
    net, ws = _small(arch)
    path = tmp_path / "m.spcv"
    save_model(net, ws, path)
    net2, ws2 = load_model(path)
    assert net2 == net
    assert model_bytes(net2, ws2) == path.read_bytes()
    img = random_image(net, 0)
    assert np.array_equal(run_network(net, ws, img), run_network(net2, ws2, img))


def test_bad_magic():
    data = bytearray(model_bytes(*_small()))
    data[0:4] = b"ZZZZ"
    with pytest.raises(BadMagicError):
        decode_model(bytes(data))


def test_unsupported_version():
    data = bytearray(model_bytes(*_small()))
    data[4:6] = struct.pack("<H", 9)
    with pytest.raises(UnsupportedVersionError):
        decode_model(_recrc(data))


def test_checksum_mismatch():
    data = bytearray(model_bytes(*_small()))
    data[len(data) // 2] ^= 0x40
    with pytest.raises(ChecksumError):
        decode_model(bytes(data))


@pytest.mark.parametrize("keep", [0, 3, 10, 100, -1])
def test_truncation(keep):
    data = model_bytes(*_small())
    with pytest.raises(TruncatedError):
        decode_model(data[:keep])


def test_trailing_bytes_rejected():
    data = model_bytes(*_small())
    with pytest.raises(ModelFileError):
        decode_model(data + b"\0")


def test_structural_corruption_with_valid_crc():
    net, ws = _small()
    data = bytearray(model_bytes(net, ws))
    # layer_count lives right after the fixed header fields
    name_len = len(net.name.encode())
    pos = 14 + 2 + name_len + struct.calcsize("<Idib3I")
    data[pos : pos + 4] = struct.pack("<I", 10**6)
    with pytest.raises(InvariantError):
        decode_model(_recrc(data))


def test_fuzz_only_typed_errors():
    data = model_bytes(*_small("mbv1"))
    rng = np.random.default_rng(0)
    for i in range(300):
        d = bytearray(data)
        for _ in range(int(rng.integers(1, 4))):
            d[int(rng.integers(len(d)))] ^= int(rng.integers(1, 256))
        d = _recrc(d) if i % 2 else bytes(d)
        try:
            decode_model(d)
        except ModelFileError:
            pass


def _dump(tmp_path, net, ws):
    dump, manifest = tmp_path / "w.bin", tmp_path / "w.txt"
    write_dense_dump(net, ws, dump, manifest)
    return dump, manifest


def test_dense_dump_round_trip(tmp_path):
    net, ws = _small()
    dump, manifest = _dump(tmp_path, net, ws)
    tensors = read_dense_dump(dump, manifest)
    assert np.array_equal(tensors["layer0.weight"], ws[0].kernel)


def test_convert_mask_from_values(tmp_path):
    net, ws = _small()
    dump, manifest = _dump(tmp_path, net, ws)
    net2, ws2 = convert_dense_dump(dump, manifest, net, "mask_from_values", tmp_path / "out.spcv")
    img = random_image(net, 1)
    assert np.array_equal(run_network(net, ws, img), run_network(net2, ws2, img))
    assert (tmp_path / "out.spcv").exists()


def test_convert_magnitude_prune(tmp_path):
    dense_net, dense_ws = _small("mbv1", DENSE)
    dump, manifest = _dump(tmp_path, dense_net, dense_ws)
    sparse_net = build_network("mbv1", 0.5, SparsityPlan(0.75), num_classes=10, input_size=SMALL)
    net, ws = convert_dense_dump(dump, manifest, sparse_net, "magnitude_prune")
    for layer, lw in zip(net.layers, ws.layers):
        if layer.sparse:
            assert 1 - lw.kernel.nnz / (layer.cout * layer.cin) == pytest.approx(0.75, abs=0.01)


def test_convert_rejects_inconsistent_blocks(tmp_path):
    dense_net, dense_ws = _small("mbv1", DENSE)
    dump, manifest = _dump(tmp_path, dense_net, dense_ws)
    blocked = build_network("mbv1", 0.5, SparsityPlan(0.5, 0, 4), num_classes=10, input_size=SMALL)
    # dense weights with a lone zero inside a block of four rows
    t = read_dense_dump(dump, manifest)
    t["layer2.weight"][1, 0] = 0.0
    with pytest.raises(ConversionError, match="mix zeros"):
        names = list(t)
        dump.write_bytes(b"".join(t[n].astype("<f4").tobytes() for n in names))
        convert_dense_dump(dump, manifest, blocked, "mask_from_values")


def test_convert_missing_tensor(tmp_path):
    net, ws = _small()
    dump, manifest = _dump(tmp_path, net, ws)
    lines = manifest.read_text().splitlines()
    manifest.write_text("\n".join(l for l in lines if not l.startswith("layer2.bias")) + "\n")
    with pytest.raises(ConversionError):
        convert_dense_dump(dump, manifest, net)
