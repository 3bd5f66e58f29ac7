"""Key, unit and tweak schedule generation.

A primary key Z is five words (z0 least significant), a tweak T four words,
a unit key U one word.  The three expansion routines run tiny register
machines:

  * key schedule   K[0..63]: tap z3, rotate the 5-word register down one word
  * tweak schedule C[0..31]: tap t0, rotate the 4-word register down one word
  * unit schedule  L[0..63]: tap u, then u += 2U + 1  (so L[k] = U odot k)

Each is available as an infinite generator holding nothing but its registers
(``iter_*``) and as a materialized tuple of the exact schedule length
(``*_expand``).  The materialized forms are defined as prefixes of the
generators, so the two can never drift apart.
"""

from __future__ import annotations

from itertools import islice
from typing import Iterator

from .words import check_cipher_width, check_word

KEY_WORDS = 5
TWEAK_WORDS = 4
KEY_SCHEDULE_LEN = 64
UNIT_SCHEDULE_LEN = 64
TWEAK_SCHEDULE_LEN = 32


def check_key(z: tuple[int, ...] | list[int], w: int) -> tuple[int, ...]:
    """Validate a 5-word primary key (z0 least significant)."""
    check_cipher_width(w)
    z = tuple(z)
    if len(z) != KEY_WORDS:
        raise ValueError(f"key must be exactly {KEY_WORDS} words, got {len(z)}")
    for i, word in enumerate(z):
        check_word(word, w, f"key word z{i}")
    return z


def check_tweak(t: tuple[int, ...] | list[int], w: int) -> tuple[int, ...]:
    """Validate a 4-word tweak (t0 least significant)."""
    check_cipher_width(w)
    t = tuple(t)
    if len(t) != TWEAK_WORDS:
        raise ValueError(f"tweak must be exactly {TWEAK_WORDS} words, got {len(t)}")
    for i, word in enumerate(t):
        check_word(word, w, f"tweak word t{i}")
    return t


def check_unit_key(u: int, w: int) -> int:
    check_cipher_width(w)
    return check_word(u, w, "unit key")


def iter_key_words(z: tuple[int, ...], w: int) -> Iterator[int]:
    """Yield key words from the rotating 5-word register, indefinitely."""
    z0, z1, z2, z3, z4 = check_key(z, w)
    while True:
        yield z3
        z0, z1, z2, z3, z4 = z1, z2, z3, z4, z0


def iter_tweak_words(t: tuple[int, ...], w: int) -> Iterator[int]:
    """Yield tweak words from the rotating 4-word register, indefinitely."""
    t0, t1, t2, t3 = check_tweak(t, w)
    while True:
        yield t0
        t0, t1, t2, t3 = t1, t2, t3, t0


def iter_unit_words(u: int, w: int) -> Iterator[int]:
    """Yield unit words u, 3U+1, 5U+2, ... from one accumulator register."""
    u = check_unit_key(u, w)
    mask = (1 << w) - 1
    step = (2 * u + 1) & mask
    acc = u
    while True:
        yield acc
        acc = (acc + step) & mask


def key_expand(z: tuple[int, ...], w: int) -> tuple[int, ...]:
    """64-word key schedule; equals (Z3, Z4, Z0, Z1, Z2) repeated."""
    return tuple(islice(iter_key_words(z, w), KEY_SCHEDULE_LEN))


def tweak_expand(t: tuple[int, ...], w: int) -> tuple[int, ...]:
    """32-word tweak schedule; C[k] = T[k mod 4]."""
    return tuple(islice(iter_tweak_words(t, w), TWEAK_SCHEDULE_LEN))


def unit_expand(u: int, w: int) -> tuple[int, ...]:
    """64-word unit schedule; L[k] = U odot k = (2k+1)U + k mod 2**w."""
    return tuple(islice(iter_unit_words(u, w), UNIT_SCHEDULE_LEN))
