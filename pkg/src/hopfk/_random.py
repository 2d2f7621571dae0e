"""Seeded random streams.

Every randomized kernel takes a ``seed`` and a label; the label is mixed into
the seed so that independent call sites draw from independent streams while a
whole run stays reproducible from the one global seed.
"""

import zlib

import numpy as np


def stream(seed, label):
    return np.random.default_rng([int(seed) & 0xFFFFFFFFFFFFFFFF, zlib.crc32(label.encode())])
