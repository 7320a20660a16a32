# Compiled 1-D convolution core. Operates on zero-padded, C-contiguous
# float64 arrays; padding, bias, and the input-gradient reduction to a
# forward call live in dssl.kernels so both backends share them.

import numpy as np

cimport cython


def forward(double[:, :, ::1] xp, double[:, :, ::1] w, Py_ssize_t out_len):
    """Cross-correlate padded input (B, Ci, L+K-1) with kernels (Co, Ci, K)."""
    cdef Py_ssize_t n_batch = xp.shape[0]
    cdef Py_ssize_t n_out = w.shape[0]
    cdef Py_ssize_t n_in = w.shape[1]
    cdef Py_ssize_t n_tap = w.shape[2]
    cdef Py_ssize_t b, o, i, k, t
    cdef double wv
    y = np.zeros((n_batch, n_out, out_len), dtype=np.float64)
    cdef double[:, :, ::1] yv = y
    with nogil:
        for b in range(n_batch):
            for o in range(n_out):
                for i in range(n_in):
                    for k in range(n_tap):
                        wv = w[o, i, k]
                        for t in range(out_len):
                            yv[b, o, t] += wv * xp[b, i, t + k]
    return y


def grad_w(double[:, :, ::1] xp, double[:, :, ::1] dy, Py_ssize_t n_tap):
    """Kernel gradient: correlate padded input with the output gradient."""
    cdef Py_ssize_t n_batch = xp.shape[0]
    cdef Py_ssize_t n_in = xp.shape[1]
    cdef Py_ssize_t n_out = dy.shape[1]
    cdef Py_ssize_t out_len = dy.shape[2]
    cdef Py_ssize_t b, o, i, k, t
    cdef double acc
    dw = np.zeros((n_out, n_in, n_tap), dtype=np.float64)
    cdef double[:, :, ::1] dwv = dw
    with nogil:
        for o in range(n_out):
            for i in range(n_in):
                for k in range(n_tap):
                    acc = 0.0
                    for b in range(n_batch):
                        for t in range(out_len):
                            acc += dy[b, o, t] * xp[b, i, t + k]
                    dwv[o, i, k] = acc
    return dw
