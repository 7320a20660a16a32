"""Pure-numpy convolution core: im2col views contracted through BLAS."""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


def forward(xp: np.ndarray, w: np.ndarray, out_len: int) -> np.ndarray:
    """Cross-correlate padded input (B, Ci, L+K-1) with kernels (Co, Ci, K)."""
    n_tap = w.shape[2]
    cols = sliding_window_view(xp, n_tap, axis=2)  # (B, Ci, L, K)
    return np.einsum("bilk,oik->bol", cols, w, optimize=True)


def grad_w(xp: np.ndarray, dy: np.ndarray, n_tap: int) -> np.ndarray:
    """Kernel gradient: correlate padded input with the output gradient."""
    cols = sliding_window_view(xp, n_tap, axis=2)
    return np.einsum("bilk,bol->oik", cols, dy, optimize=True)
