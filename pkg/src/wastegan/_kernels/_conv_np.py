"""Pure-numpy convolution kernels: im2col gather + BLAS matmul.

Layout is NCHW for activations and (out_ch, in_ch, kh, kw) for weights.
Zero padding is fixed at kh//2 (same-size output for stride 1, halving
for stride 2 on even inputs). These three functions are the only hot
kernels in the package; the compiled backend in ``_conv_cy`` implements
the same contract.
"""

import numpy as np

BACKEND_NAME = "numpy"


def _out_size(h: int, k: int, stride: int) -> int:
    pad = k // 2
    return (h + 2 * pad - k) // stride + 1


def _im2col(xp, kh, kw, stride, oh, ow):
    n, c, _, _ = xp.shape
    sn, sc, sh, sw = xp.strides
    patches = np.lib.stride_tricks.as_strided(
        xp,
        shape=(n, c, kh, kw, oh, ow),
        strides=(sn, sc, sh, sw, sh * stride, sw * stride),
    )
    # reshape forces the gather into a contiguous (n, c*kh*kw, oh*ow) buffer
    return patches.reshape(n, c * kh * kw, oh * ow)


def conv2d_forward(x, w, stride=1):
    n, c, h, wid = x.shape
    oc, _, kh, kw = w.shape
    pad = kh // 2
    oh, ow = _out_size(h, kh, stride), _out_size(wid, kw, stride)
    xp = np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))
    cols = _im2col(xp, kh, kw, stride, oh, ow)
    out = np.matmul(w.reshape(oc, -1), cols)
    return out.reshape(n, oc, oh, ow)


def conv2d_grad_weight(x, grad, w_shape, stride=1):
    oc, _, kh, kw = w_shape
    n = x.shape[0]
    pad = kh // 2
    oh, ow = grad.shape[2], grad.shape[3]
    xp = np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))
    cols = _im2col(xp, kh, kw, stride, oh, ow)
    gm = grad.reshape(n, oc, oh * ow)
    dw = np.tensordot(gm, cols, axes=([0, 2], [0, 2]))
    return np.ascontiguousarray(dw.reshape(w_shape))


def conv2d_grad_input(w, grad, x_shape, stride=1):
    n, c, h, wid = x_shape
    oc, _, kh, kw = w.shape
    pad = kh // 2
    oh, ow = grad.shape[2], grad.shape[3]
    gm = grad.reshape(n, oc, oh * ow)
    dcols = np.matmul(w.reshape(oc, -1).T, gm)  # (n, c*kh*kw, oh*ow)
    dcols = dcols.reshape(n, c, kh, kw, oh, ow)
    dxp = np.zeros((n, c, h + 2 * pad, wid + 2 * pad), dtype=grad.dtype)
    for i in range(kh):
        for j in range(kw):
            dxp[:, :, i : i + oh * stride : stride, j : j + ow * stride : stride] += dcols[
                :, :, i, j
            ]
    if pad == 0:
        return dxp
    return np.ascontiguousarray(dxp[:, :, pad : h + pad, pad : wid + pad])
