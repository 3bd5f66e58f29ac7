"""Optimized encryption path: precomputed affine schedules and the unrolled
round dependency graph.

For a fixed key word z and unit word e, the half-round ``x bd[e] z`` is the
affine map ``m*x + n`` with ``m = 2(z-e)+1`` (always odd) and
``n = (2e-1)(z-e)``.  Expanding the key and unit schedules once into the 64
(m, n) pairs turns every G-box evaluation into two multiply-adds plus the
swaps and the tweak XOR.

Because each round's G input is an XOR of plaintext words and earlier G
outputs, the 32 rounds form a dependency graph that can be evaluated in 20
steps, half of them running two or three independent G evaluations.  The
graph is kept here as data - per round the contributing plaintext words and
earlier rounds, plus the step grouping and the XOR combinations assembling
the ciphertext words - so all widths share a single definition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .cipher import check_block, reverse_words, swap_all_halves
from .schedules import check_key, check_tweak, check_unit_key, key_expand, unit_expand
from .words import check_cipher_width, mod_inverse, swap_halves

# Per round k: indices of plaintext words, then indices of earlier rounds,
# whose G outputs XOR together into round k's G input.
ROUND_TEXT_TERMS = (
    (0,), (1,), (2,), (3,),
    (), (), (), (),
    (), (), (), (),
    (), (), (), (),
    (), (), (), (),
    (), (), (), (),
    (), (), (), (),
    (), (), (), (),
)

ROUND_G_TERMS = (
    (), (0,), (1,), (2,),
    (0, 3), (1, 4), (2, 5), (3, 6),
    (4, 7), (5,), (6,), (4,),
    (5, 8), (6, 9), (4, 10), (5, 8, 11),
    (6, 9, 12), (4, 10, 13, 16), (5, 8, 11, 14, 17), (15, 18),
    (16, 19), (17, 20), (18, 21), (19, 22),
    (20, 23), (21,), (22,), (20,),
    (21, 24), (22, 25), (20, 26), (21, 24, 27),
)

# Rounds grouped into the 20 evaluation steps; every round in a step depends
# only on rounds from earlier steps, so the members of a step are independent.
PARALLEL_STEPS = (
    (0,), (1,), (2,), (3,), (4,),
    (5, 11), (6, 9), (7, 10, 13), (8, 14), (12, 15),
    (16,), (17,), (18,), (19,), (20,),
    (21, 27), (22, 25), (23, 26, 29), (24, 30), (28, 31),
)

# Ciphertext word i is the XOR of these rounds' G outputs.
OUTPUT_G_TERMS = ((22, 25, 28), (20, 26, 29), (21, 24, 27, 30), (31,))


def _terms_to_masks():
    xmasks = np.zeros(32, dtype=np.uint64)
    gmasks = np.zeros(32, dtype=np.uint64)
    ymasks = np.zeros(4, dtype=np.uint64)
    for k in range(32):
        for i in ROUND_TEXT_TERMS[k]:
            xmasks[k] |= np.uint64(1 << i)
        for j in ROUND_G_TERMS[k]:
            gmasks[k] |= np.uint64(1 << j)
    for i in range(4):
        for j in OUTPUT_G_TERMS[i]:
            ymasks[i] |= np.uint64(1 << j)
    return xmasks, gmasks, ymasks


_XTERM_MASKS, _GTERM_MASKS, _YTERM_MASKS = _terms_to_masks()


@dataclass(frozen=True)
class AffineSchedule:
    """Precomputed (m, n) pairs for the 64 half-rounds; every m is odd."""

    width: int
    m: tuple[int, ...]
    n: tuple[int, ...]

    def __post_init__(self):
        check_cipher_width(self.width)
        if len(self.m) != 64 or len(self.n) != 64:
            raise ValueError("affine schedule needs exactly 64 (m, n) pairs")
        if any(not mi & 1 for mi in self.m):
            raise ValueError("every affine multiplier must be odd")

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return (np.array(self.m, dtype=np.uint64), np.array(self.n, dtype=np.uint64))


def affine_expand(key, unit_key, w: int) -> AffineSchedule:
    """Expand key material straight into the affine half-round constants."""
    z = check_key(key, w)
    u = check_unit_key(unit_key, w)
    mask = (1 << w) - 1
    ks = key_expand(z, w)
    ls = unit_expand(u, w)
    m = tuple((2 * (k - e) + 1) & mask for k, e in zip(ks, ls))
    n = tuple(((2 * e - 1) * (k - e)) & mask for k, e in zip(ks, ls))
    return AffineSchedule(w, m, n)


def affine_gbox(x: int, t: int, m0: int, m1: int, n0: int, n1: int, w: int) -> int:
    """G-box in affine form; equals gbox under the (m, n) correspondence."""
    mask = (1 << w) - 1
    x = swap_halves((x * m0 + n0) & mask, w) ^ t
    return swap_halves((x * m1 + n1) & mask, w)


def _fast_g_values(block, tweak, schedule: AffineSchedule) -> list[int]:
    """Evaluate all 32 G outputs following the 20-step grouping."""
    w = schedule.width
    m, n = schedule.m, schedule.n
    g = [0] * 32
    for step in PARALLEL_STEPS:
        # members of one step are mutually independent G evaluations
        for k in step:
            acc = 0
            for i in ROUND_TEXT_TERMS[k]:
                acc ^= block[i]
            for j in ROUND_G_TERMS[k]:
                acc ^= g[j]
            g[k] = affine_gbox(acc, tweak[k & 3], m[2 * k], m[2 * k + 1], n[2 * k], n[2 * k + 1], w)
    return g


def _assemble_output(g) -> tuple[int, int, int, int]:
    y = []
    for terms in OUTPUT_G_TERMS:
        acc = 0
        for j in terms:
            acc ^= g[j]
        y.append(acc)
    return tuple(y)


def crypt_fast(block, tweak, schedule: AffineSchedule):
    """Optimized-path equivalent of the reference 32-round transform."""
    w = schedule.width
    x = check_block(block, w)
    t = check_tweak(tweak, w)
    return _assemble_output(_fast_g_values(x, t, schedule))


def crypt_fast_pair(block_a, block_b, tweak_a, tweak_b, schedule_a: AffineSchedule,
                    schedule_b: AffineSchedule):
    """Encrypt two independent blocks with their step sequences interleaved.

    The two instances may use different tweaks and keys but must share one
    width.  The contract is correctness (identical results to two separate
    calls); the interleaving mirrors how the step schedule admits running a
    second instance a few steps behind the first.
    """
    if schedule_a.width != schedule_b.width:
        raise ValueError("paired blocks must use one word width")
    w = schedule_a.width
    xa, xb = check_block(block_a, w), check_block(block_b, w)
    ta, tb = check_tweak(tweak_a, w), check_tweak(tweak_b, w)
    ga = [0] * 32
    gb = [0] * 32
    for step in PARALLEL_STEPS:
        for g, x, t, s in ((ga, xa, ta, schedule_a), (gb, xb, tb, schedule_b)):
            for k in step:
                acc = 0
                for i in ROUND_TEXT_TERMS[k]:
                    acc ^= x[i]
                for j in ROUND_G_TERMS[k]:
                    acc ^= g[j]
                g[k] = affine_gbox(acc, t[k & 3], s.m[2 * k], s.m[2 * k + 1],
                                   s.n[2 * k], s.n[2 * k + 1], w)
    return _assemble_output(ga), _assemble_output(gb)


def invert_affine(schedule: AffineSchedule) -> AffineSchedule:
    """Affine schedule of the inverse transform.

    The inverse of x -> m*x + n is x -> m'*x + n' with m' = m**-1 and
    n' = -n * m**-1; decryption consumes the half-rounds in reverse order,
    so entry k inverts entry 63-k.  A fresh schedule is returned, which makes
    the in-place aliasing hazard of overlapping inputs impossible.
    """
    w = schedule.width
    mask = (1 << w) - 1
    im = tuple(mod_inverse(schedule.m[63 - k], w) for k in range(64))
    inn = tuple((-schedule.n[63 - k] * im[k]) & mask for k in range(64))
    return AffineSchedule(w, im, inn)


def icrypt_fast(block, tweak, inverse_schedule: AffineSchedule):
    """Decrypt via the forward fast path on reordered inputs.

    ``inverse_schedule`` must come from ``invert_affine`` of the schedule the
    block was encrypted under.
    """
    w = inverse_schedule.width
    y = check_block(block, w)
    t = check_tweak(tweak, w)
    y_rs = swap_all_halves(reverse_words(y), w)
    t_rs = swap_all_halves(reverse_words(t), w)
    x_rs = crypt_fast(y_rs, t_rs, inverse_schedule)
    return swap_all_halves(reverse_words(x_rs), w)


# ---------------------------------------------------------------------------
# batch entry points (hot path; numba kernel with numpy fallback)


def _as_block_array(blocks) -> np.ndarray:
    arr = np.asarray(blocks, dtype=np.uint64)
    if arr.ndim == 1 and arr.shape == (4,):
        arr = arr.reshape(1, 4)
    if arr.ndim != 2 or arr.shape[1] != 4:
        raise ValueError(f"expected an (nblocks, 4) array of words, got shape {arr.shape}")
    return arr


def _tweak_rows(tweaks, nblocks: int) -> np.ndarray:
    arr = np.asarray(tweaks, dtype=np.uint64)
    if arr.ndim == 1 and arr.shape == (4,):
        arr = np.broadcast_to(arr, (nblocks, 4))
    if arr.shape != (nblocks, 4):
        raise ValueError(f"expected tweak rows of shape ({nblocks}, 4), got {arr.shape}")
    return arr


def crypt_fast_batch(blocks, tweaks, schedule: AffineSchedule, backend: str | None = None) -> np.ndarray:
    """Encrypt many blocks under one schedule; tweaks may vary per block.

    ``blocks`` is an (nblocks, 4) array of words (or anything convertible),
    ``tweaks`` either one 4-word tweak or an (nblocks, 4) array.  Returns the
    ciphertext words as an (nblocks, 4) uint64 array.
    """
    x = _as_block_array(blocks)
    t = _tweak_rows(tweaks, x.shape[0])
    m, n = schedule.as_arrays()
    return _kernels.crypt_batch(x, t, m, n, _XTERM_MASKS, _GTERM_MASKS, _YTERM_MASKS,
                                schedule.width, backend)


def icrypt_fast_batch(blocks, tweaks, inverse_schedule: AffineSchedule,
                      backend: str | None = None) -> np.ndarray:
    """Decrypt many blocks; the batch counterpart of ``icrypt_fast``."""
    w = inverse_schedule.width
    y = _as_block_array(blocks)
    t = _tweak_rows(tweaks, y.shape[0])
    half = np.uint64(w >> 1)
    msk = np.uint64((1 << w) - 1)

    def rs(a):
        rev = a[:, ::-1]
        return (((rev << half) | (rev >> half)) & msk)

    x_rs = _kernels.crypt_batch(np.ascontiguousarray(rs(y)), np.ascontiguousarray(rs(t)),
                                *inverse_schedule.as_arrays(),
                                _XTERM_MASKS, _GTERM_MASKS, _YTERM_MASKS, w, backend)
    return np.ascontiguousarray(rs(x_rs))
