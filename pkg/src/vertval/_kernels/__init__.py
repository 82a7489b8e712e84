"""Kernel backend selection.

The compiled Cython kernels cover graphs with up to 64 nodes; anything
larger (and any install without a working compiler) falls back to the
pure-Python implementations. Set ``VERTVAL_PURE_KERNELS=1`` to force the
fallback, e.g. for benchmarking.
"""

import os

from . import _pure

if os.environ.get("VERTVAL_PURE_KERNELS"):
    _compiled = None
else:
    try:
        from . import _ckern as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure"

_COMPILED_MAX_NODES = 64


def _dispatch(name):
    pure_fn = getattr(_pure, name)
    if _compiled is None:
        return pure_fn
    fast_fn = getattr(_compiled, name)

    def kernel(num_nodes, edges):
        if num_nodes <= _COMPILED_MAX_NODES:
            return fast_fn(num_nodes, edges)
        return pure_fn(num_nodes, edges)

    kernel.__name__ = name
    kernel.__doc__ = pure_fn.__doc__
    return kernel


triangle_count = _dispatch("triangle_count")
clustering_sum = _dispatch("clustering_sum")
path_length_stats = _dispatch("path_length_stats")
maximal_clique_count = _dispatch("maximal_clique_count")

__all__ = [
    "BACKEND",
    "triangle_count",
    "clustering_sum",
    "path_length_stats",
    "maximal_clique_count",
]
