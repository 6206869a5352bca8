"""Sparse convolutional inference on CHW activations with block-sparse 1x1 layers."""

from .bcsr import BcsrMatrix, BlockConfig, SparsityMask, decode_bcsr, encode_bcsr, generate_mask
from .errors import (
    BadMagicError, ChecksumError, ConversionError, FormatError, InvariantError, LayoutError,
    ModelFileError, SelfCheckError, ShapeError, SparseNetError, TruncatedError, UnsupportedVersionError,
)
from .kernels import (
    FusedActivation, MicrokernelConfig, dense_gemm_baseline, depthwise_conv_chw, entry_conv_hwc_to_chw,
    global_avg_pool_chw, set_tier, spconv_1x1, spmm,
)
from .modelio import convert_dense_dump, load_model, save_model
from .netdef import (
    NetworkSpec, SparsityPlan, build_cache_aware_mbv2, build_mbv1, build_mbv2, build_network, count_flops,
    count_params, instantiate_weights, run_network, run_network_reference,
)
from .pruning import PruneSchedule, magnitude_mask, target_sparsity
from .tensor import CHW, HWC, DenseMatrix, Tensor, chw_to_hwc, conv2d_reference, hwc_to_chw, matmul_reference

__version__ = "0.1.0"
