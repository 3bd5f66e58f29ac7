"""Tweak derivation and multi-block encryption."""

import numpy as np
import pytest

from conftest import random_tuple, random_words
from nsabc.cipher import decrypt, encrypt
from nsabc.tweakstream import (
    decrypt_blocks,
    encrypt_blocks,
    tweak_at,
    tweak_next,
    wide_from_words,
    wide_mask,
    wide_to_words,
)

T0_16 = 0x0001002203334444


def test_wide_word_packing():
    words = wide_to_words(T0_16, 16)
    assert words == (0x4444, 0x0333, 0x0022, 0x0001)
    assert wide_from_words(words, 16) == T0_16


def test_tweak_at_index_zero_is_the_tweak_key():
    assert tweak_at(T0_16, 0, 16) == wide_to_words(T0_16, 16)


def test_tweak_at_zero_key_yields_index():
    for j in (0, 1, 7, 12345, 1 << 63):
        assert tweak_at(0, j, 16) == wide_to_words(j, 16)


def test_tweak_next_examples():
    # zero key degenerates to a counter
    assert tweak_next(41, 0, 16) == 42
    # one step from the start equals 3*T0 + 1
    assert tweak_next(T0_16, T0_16, 16) == (3 * T0_16 + 1) % (1 << 64)


@pytest.mark.parametrize("w", [16, 32, 64])
def test_closed_form_equals_recurrence(w, rng):
    t0 = rng.randrange(1 << (4 * w))
    value = t0
    for j in range(2000):
        assert tweak_at(t0, j, w) == wide_to_words(value, w)
        value = tweak_next(value, t0, w)


def test_tweak_injective_prefix(rng):
    w = 16
    t0 = rng.randrange(1 << (4 * w))
    seen = {tweak_at(t0, j, w) for j in range(10_000)}
    assert len(seen) == 10_000


def test_wraparound_is_modular():
    w = 16
    top = wide_mask(w)  # 2**64 - 1
    assert tweak_at(1, top, w) == wide_to_words((2 * top + 1 + top) & top, w)


# ---------------------------------------------------------------------------
# block sequences


def test_single_block_matches_reference(rng):
    for w in (16, 32, 64):
        x, z, _, u = random_tuple(rng, w)
        t0 = rng.randrange(1 << (4 * w))
        ct = encrypt_blocks([x], z, t0, u, w)
        assert ct[0] == encrypt(x, z, wide_to_words(t0, w), u, w)


def test_roundtrip_and_per_block_tweaks(rng):
    w = 32
    _, z, _, u = random_tuple(rng, w)
    t0 = rng.randrange(1 << (4 * w))
    blocks = [random_words(rng, 4, w) for _ in range(25)]
    ct = encrypt_blocks(blocks, z, t0, u, w)
    assert decrypt_blocks(ct, z, t0, u, w) == blocks
    # each block agrees with the reference path under its own derived tweak
    for j in (0, 1, 13, 24):
        assert ct[j] == encrypt(blocks[j], z, tweak_at(t0, j, w), u, w)
        assert decrypt(ct[j], z, tweak_at(t0, j, w), u, w) == blocks[j]


def test_random_access_decryption(rng):
    w = 16
    _, z, _, u = random_tuple(rng, w)
    t0 = rng.randrange(1 << (4 * w))
    blocks = [random_words(rng, 4, w) for _ in range(12)]
    ct = encrypt_blocks(blocks, z, t0, u, w)
    # decrypting any slice out of order gives the in-order result
    assert decrypt_blocks(ct[7:9], z, t0, u, w, first_index=7) == blocks[7:9]
    assert decrypt_blocks([ct[3]], z, t0, u, w, first_index=3) == [blocks[3]]


def test_per_block_independence(rng):
    w = 16
    _, z, _, u = random_tuple(rng, w)
    t0 = rng.randrange(1 << (4 * w))
    blocks = [random_words(rng, 4, w) for _ in range(10)]
    ct = encrypt_blocks(blocks, z, t0, u, w)
    corrupted = list(ct)
    corrupted[4] = tuple(wv ^ 1 for wv in corrupted[4])
    out = decrypt_blocks(corrupted, z, t0, u, w)
    assert [i for i in range(10) if out[i] != blocks[i]] == [4]


def test_disabled_tweaking_uses_constant_tweak(rng):
    w = 16
    _, z, _, u = random_tuple(rng, w)
    t0 = rng.randrange(1 << (4 * w))
    blocks = [random_words(rng, 4, w) for _ in range(6)]
    ct = encrypt_blocks(blocks, z, t0, u, w, tweaking=False)
    tw = wide_to_words(t0, w)
    assert all(ct[j] == encrypt(blocks[j], z, tw, u, w) for j in range(6))
    assert decrypt_blocks(ct, z, t0, u, w, tweaking=False) == blocks


def test_array_in_array_out(rng):
    w = 64
    _, z, _, u = random_tuple(rng, w)
    t0 = rng.randrange(1 << (4 * w))
    xs = np.array([random_words(rng, 4, w) for _ in range(8)], dtype=np.uint64)
    ct = encrypt_blocks(xs, z, t0, u, w)
    assert isinstance(ct, np.ndarray)
    back = decrypt_blocks(ct, z, t0, u, w)
    assert np.array_equal(back, xs)


def test_empty_sequence(rng):
    _, z, _, u = random_tuple(rng, 16)
    assert encrypt_blocks([], z, 5, u, 16) == []
