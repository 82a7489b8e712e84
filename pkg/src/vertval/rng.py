"""Counter-based random streams.

Every stochastic operation in the library draws from a Philox stream keyed
by (seed, index), so the draw for one sample never depends on how many
other samples exist or in which order they were produced.
"""

import hashlib

import numpy as np

_MASK64 = (1 << 64) - 1


def index_stream(seed: int, index: int) -> np.random.Generator:
    """Independent generator for sample `index` under `seed`."""
    key = np.array([seed & _MASK64, index & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def index_uniform(seed: int, index: int) -> float:
    """Single uniform draw in [0, 1) from the (seed, index) stream."""
    return float(index_stream(seed, index).random())


def derive_seed(seed: int, *parts) -> int:
    """Stable sub-seed from a base seed and a label path (ints or strings)."""
    h = hashlib.sha256()
    h.update(str(int(seed)).encode())
    for part in parts:
        h.update(b"/")
        h.update(str(part).encode())
    return int.from_bytes(h.digest()[:8], "big") >> 1
