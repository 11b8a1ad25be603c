"""Kernel backend selection.

The compiled numba kernels are used by default. Set ``FACEIDEAL_DISABLE_NUMBA=1``
to force the pure-numpy path (also used automatically if numba cannot be
imported). Both backends expose identical functions; ``numpy_backend`` and
``numba_backend`` are importable directly for comparisons and benchmarks.
"""

import logging
import os

import numpy as np

from . import _numpy as numpy_backend

log = logging.getLogger(__name__)

numba_backend = None
if os.environ.get("FACEIDEAL_DISABLE_NUMBA", "0") not in ("1", "true", "yes"):
    try:
        from . import _numba as numba_backend
    except ImportError:  # pragma: no cover - numba is a declared dependency
        log.warning("numba unavailable, using numpy kernels")

backend = numba_backend if numba_backend is not None else numpy_backend
BACKEND_NAME = "numba" if backend is numba_backend else "numpy"

# exhaustive 2^n scans refuse beyond this many bits
SCAN_LIMIT = 26


def as_masks(values):
    return np.fromiter((int(v) for v in values), dtype=np.int64)


def _check_scan(nbits):
    if nbits > SCAN_LIMIT:
        raise ValueError(f"exhaustive scan over {nbits} bits exceeds limit {SCAN_LIMIT}")


def independent_sets(edges, nbits):
    """All masks over ``nbits`` bits containing no edge mask."""
    _check_scan(nbits)
    return [int(x) for x in backend.independent_sets(as_masks(edges), int(nbits))]


def minimal_transversals_scan(edges, nbits):
    """Inclusion-minimal hitting sets by scanning every subset."""
    _check_scan(nbits)
    return [int(x) for x in backend.minimal_transversals_scan(as_masks(edges), int(nbits))]


def colon_minimal(prefix, u):
    return [int(x) for x in backend.colon_minimal(as_masks(prefix), np.int64(u))]


def shelling_violation(facets):
    i, j = backend.shelling_violation(as_masks(facets))
    return int(i), int(j)


def collection_violation(masks):
    code, a, b = backend.collection_violation(as_masks(masks))
    return int(code), int(a), int(b)


def clique_sets(adj, n):
    _check_scan(n)
    return [int(x) for x in backend.clique_sets(as_masks(adj), int(n))]


def closed_sets(down, n):
    _check_scan(n)
    return [int(x) for x in backend.closed_sets(as_masks(down), int(n))]


def reduced_betti(faces, strategy=0):
    """Returns (betti list, ok); ``ok`` is False on int64 overflow."""
    out, ok = backend.reduced_betti(as_masks(faces), int(strategy))
    return [int(x) for x in out], bool(ok)


def canonical_flags(masks, tables):
    return backend.canonical_flags(np.asarray(masks, dtype=np.uint64), tables)
