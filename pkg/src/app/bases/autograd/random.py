"""
Seeded random streams.

Every stochastic operation draws from its own numpy `Generator` backed by the counter-based
Philox bit generator. The 64-bit Philox key is derived from `(seed, purpose tag)` with blake2b,
so streams are independent of each other, of draw order elsewhere, and of the platform.
"""

import hashlib

import numpy as np


def derive_key(seed: int, tag: str) -> int:
    digest = hashlib.blake2b(f"{int(seed)}:{tag}".encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def rng_stream(seed: int, tag: str) -> np.random.Generator:
    """
    :param seed: `int`
        Run seed

    :param tag: `str`
        Purpose of the stream (e.g. `"dropout"`, `"init:layer0.head1.W_n"`)

    :return: `np.random.Generator`
        Generator reproducing the same sequence for the same `(seed, tag)`
    """

    return np.random.Generator(np.random.Philox(key=derive_key(seed, tag)))
