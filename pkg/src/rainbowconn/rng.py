"""Seed derivation for reproducible, independently seeded operation streams.

Every randomized operation in this package draws from its own stream, keyed by
``(seed, tag, index)``.  The key is hashed (BLAKE2b, 8 bytes) into a 64-bit
integer, which seeds either a ``random.Random`` (Mersenne Twister) for
element-wise draws or a numpy PCG64 generator for bulk draws.  Identical keys
give bit-identical streams on every platform; distinct tags never collide in
practice, so operations can run in any order (or concurrently) without
perturbing each other.
"""

from __future__ import annotations

import hashlib
import random

import numpy as np

__all__ = ["derive_seed", "stream", "np_stream"]


def derive_seed(seed: int, tag: str, index: int = 0) -> int:
    """64-bit sub-seed for the stream named ``tag``/``index`` under ``seed``."""
    key = f"{seed}:{tag}:{index}".encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "big")


def stream(seed: int, tag: str, index: int = 0) -> random.Random:
    """Element-wise RNG stream (Mersenne Twister) for one operation."""
    return random.Random(derive_seed(seed, tag, index))


def np_stream(seed: int, tag: str, index: int = 0) -> np.random.Generator:
    """Bulk-draw RNG stream (PCG64) for one operation."""
    return np.random.default_rng(derive_seed(seed, tag, index))
