"""Vectorized numeric kernels with a numba fast path and a numpy fallback.

All kernels work on ``uint64`` arrays regardless of the cipher width: values
are kept masked to w bits and every operation is a ring operation, so doing
the arithmetic mod 2**64 and masking afterwards is exact for every supported
width (and at w=64 the masking is the native wraparound itself).

Backend selection: set ``NSABC_BACKEND=numpy`` or ``NSABC_BACKEND=numba`` in
the environment; by default numba is used when importable and the pure-numpy
path otherwise.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def decorator(func):
            return func

        return decorator


_ENV_FLAG = "NSABC_BACKEND"
BACKENDS = ("numba", "numpy")


def available_backends() -> tuple[str, ...]:
    return BACKENDS if HAS_NUMBA else ("numpy",)


def resolve_backend(name: str | None = None) -> str:
    """Pick the kernel backend: explicit argument, else env flag, else best."""
    if name is None:
        name = os.environ.get(_ENV_FLAG)
    if name is None:
        return "numba" if HAS_NUMBA else "numpy"
    name = name.lower()
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}, expected one of {BACKENDS}")
    if name == "numba" and not HAS_NUMBA:
        raise ValueError("numba backend requested but numba is not importable")
    return name


def _u64(values) -> np.ndarray:
    return np.asarray(values, dtype=np.uint64)


def _wrapping():
    # Wraparound mod 2**64 is the intended semantics of every kernel, but
    # numpy warns when it occurs on 0-d (scalar-like) operands; silence that.
    return np.errstate(over="ignore")


def v_mask(w: int) -> np.uint64:
    return np.uint64((1 << w) - 1)


# ---------------------------------------------------------------------------
# vectorized word algebra (numpy; used by analysis and the exhaustive sweeps)

_ONE = np.uint64(1)
_TWO = np.uint64(2)


def v_swap_halves(x, w: int):
    half = np.uint64(w >> 1)
    msk = v_mask(w)
    x = _u64(x) & msk
    return ((x << half) | (x >> half)) & msk


def v_odot(x, y, w: int):
    x, y = _u64(x), _u64(y)
    with _wrapping():
        return (_TWO * x * y + x + y) & v_mask(w)


def v_boxdot(x, y, w: int):
    x, y = _u64(x), _u64(y)
    with _wrapping():
        return (_TWO * x * y + x - y) & v_mask(w)


def v_odot_e(x, y, e, w: int):
    x, y, e = _u64(x), _u64(y), _u64(e)
    with _wrapping():
        return (_TWO * x * y + (_ONE - _TWO * e) * (x + y - e)) & v_mask(w)


def v_boxdot_e(x, y, e, w: int):
    x, y, e = _u64(x), _u64(y), _u64(e)
    with _wrapping():
        return (_TWO * x * y + (_ONE - _TWO * e) * (x - y + e)) & v_mask(w)


def v_mod_inverse(x, w: int):
    """Newton-Hensel inverse of odd x; callers guarantee oddness."""
    msk = v_mask(w)
    x = _u64(x)
    with _wrapping():
        y = (_TWO - x) & msk
        for _ in range((w - 1).bit_length() - 1):
            y = (y * (_TWO - x * y)) & msk
    return y


def v_odot_inverse(x, w: int):
    x = _u64(x)
    msk = v_mask(w)
    with _wrapping():
        return (-x * v_mod_inverse((_TWO * x + _ONE) & msk, w)) & msk


def v_inv_e(x, e, w: int):
    x, e = _u64(x), _u64(e)
    msk = v_mask(w)
    with _wrapping():
        return (v_odot_inverse((x - e) & msk, w) + e) & msk


def v_gbox(x, k0, k1, l0, l1, c0, w: int):
    """G-box over an array of text words with broadcastable parameters."""
    x = v_swap_halves(v_boxdot_e(x, k0, l0, w), w)
    x = x ^ _u64(c0)
    return v_swap_halves(v_boxdot_e(x, k1, l1, w), w)


def v_affine_gbox(x, t, m0, m1, n0, n1, w: int):
    """Affine form of the G-box: each half-round is one multiply and one add."""
    msk = v_mask(w)
    with _wrapping():
        x = (_u64(x) * _u64(m0) + _u64(n0)) & msk
        x = v_swap_halves(x, w) ^ _u64(t)
        x = (x * _u64(m1) + _u64(n1)) & msk
    return v_swap_halves(x, w)


# ---------------------------------------------------------------------------
# batch block transform
#
# x: (nblocks, 4) uint64, t: (nblocks, 4) uint64, m/n: (64,) uint64.
# xterm_masks/gterm_masks give, per round, which plaintext words and which
# earlier G outputs XOR together into that round's G input; yterm_masks give
# the G outputs assembled into each ciphertext word.  Rounds only ever depend
# on lower-numbered rounds, so evaluating k = 0..31 in order is a valid
# topological order of the dependency graph.


def _crypt_batch_numpy(x, t, m, n, xterm_masks, gterm_masks, yterm_masks, w: int):
    nblocks = x.shape[0]
    half = np.uint64(w >> 1)
    msk = v_mask(w)
    g = np.empty((32, nblocks), dtype=np.uint64)
    acc = np.empty(nblocks, dtype=np.uint64)
    for k in range(32):
        acc[:] = 0
        xm = int(xterm_masks[k])
        for i in range(4):
            if (xm >> i) & 1:
                acc ^= x[:, i]
        gm = int(gterm_masks[k])
        for j in range(k):
            if (gm >> j) & 1:
                acc ^= g[j]
        v = (acc * m[2 * k] + n[2 * k]) & msk
        v = ((v << half) | (v >> half)) & msk
        v ^= t[:, k & 3]
        v = (v * m[2 * k + 1] + n[2 * k + 1]) & msk
        g[k] = ((v << half) | (v >> half)) & msk
    y = np.zeros((nblocks, 4), dtype=np.uint64)
    for i in range(4):
        ym = int(yterm_masks[i])
        for j in range(32):
            if (ym >> j) & 1:
                y[:, i] ^= g[j]
    return y


@njit(cache=True)
def _crypt_batch_numba(x, t, m, n, xterm_masks, gterm_masks, yterm_masks, w):  # pragma: no cover - jitted
    nblocks = x.shape[0]
    half = np.uint64(w >> 1)
    msk = np.uint64(0xFFFFFFFFFFFFFFFF) >> np.uint64(64 - w)
    one = np.uint64(1)
    y = np.empty((nblocks, 4), dtype=np.uint64)
    g = np.empty(32, dtype=np.uint64)
    for b in range(nblocks):
        for k in range(32):
            acc = np.uint64(0)
            xm = xterm_masks[k]
            for i in range(4):
                if (xm >> np.uint64(i)) & one:
                    acc ^= x[b, i]
            gm = gterm_masks[k]
            for j in range(k):
                if (gm >> np.uint64(j)) & one:
                    acc ^= g[j]
            v = (acc * m[2 * k] + n[2 * k]) & msk
            v = ((v << half) | (v >> half)) & msk
            v ^= t[b, k & 3]
            v = (v * m[2 * k + 1] + n[2 * k + 1]) & msk
            g[k] = ((v << half) | (v >> half)) & msk
        for i in range(4):
            acc = np.uint64(0)
            ym = yterm_masks[i]
            for j in range(32):
                if (ym >> np.uint64(j)) & one:
                    acc ^= g[j]
            y[b, i] = acc
    return y


def crypt_batch(x, t, m, n, xterm_masks, gterm_masks, yterm_masks, w: int, backend: str | None = None):
    """Run the 32-round transform over a batch of blocks; returns (nblocks, 4)."""
    x = np.ascontiguousarray(x, dtype=np.uint64)
    t = np.ascontiguousarray(t, dtype=np.uint64)
    m = np.ascontiguousarray(m, dtype=np.uint64)
    n = np.ascontiguousarray(n, dtype=np.uint64)
    if resolve_backend(backend) == "numba":
        return _crypt_batch_numba(x, t, m, n, xterm_masks, gterm_masks, yterm_masks, w)
    return _crypt_batch_numpy(x, t, m, n, xterm_masks, gterm_masks, yterm_masks, w)
