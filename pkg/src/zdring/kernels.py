"""Backend selection for the hot kernels.

ZDRING_BACKEND picks the implementation at import time:

  numba   jitted loops (default when numba imports cleanly)
  numpy   vectorized scans + python-int bitset searches
  auto    same as unset: numba if available, else numpy

Both backends expose identical functions; `get_kernels` hands out a
specific one so benchmarks can time them side by side regardless of the
process-wide default.

Product scans multiply vertex labels in int64, which is exact only while
n * n fits; INT64_SAFE_N is that ceiling and the dispatch functions
enforce it. Callers that need bigger n (witness checks near 2**63) go
through python-int paths in their own modules instead.
"""

import os
from types import ModuleType

import numpy as np

from .errors import DomainError

INT64_SAFE_N = 3_037_000_499  # isqrt(2**63 - 1)

_ENV_FLAG = "ZDRING_BACKEND"


def _load(name: str) -> ModuleType:
    if name == "numba":
        from . import _kernels_numba

        return _kernels_numba
    if name == "numpy":
        from . import _kernels_numpy

        return _kernels_numpy
    raise ValueError(f"unknown kernel backend {name!r} (use 'numba' or 'numpy')")


def _select() -> tuple[str, ModuleType]:
    requested = os.environ.get(_ENV_FLAG, "auto").strip().lower()
    if requested in ("", "auto"):
        try:
            return "numba", _load("numba")
        except ImportError:
            return "numpy", _load("numpy")
    if requested in ("python", "fallback"):
        requested = "numpy"
    return requested, _load(requested)


_BACKEND_NAME, _IMPL = _select()


def backend_name() -> str:
    return _BACKEND_NAME


def get_kernels(name: str | None = None) -> ModuleType:
    """The active kernel module, or a specific backend by name."""
    if name is None:
        return _IMPL
    return _load(name)


def _check_product_scale(n: int) -> None:
    if n > INT64_SAFE_N:
        raise DomainError(
            f"pairwise product scan needs n <= {INT64_SAFE_N}, got {n}"
        )


def product_adjacency(n: int, verts) -> np.ndarray:
    _check_product_scale(n)
    return _IMPL.product_adjacency(n, verts)


def pair_soundness_mismatch(n: int, cls_idx, adj):
    _check_product_scale(n)
    return _IMPL.pair_soundness_mismatch(n, cls_idx, adj)


def exhaustive_degrees(n: int) -> np.ndarray:
    _check_product_scale(n)
    return _IMPL.exhaustive_degrees(n)


def first_failing_pair(n: int, elems):
    _check_product_scale(n)
    return _IMPL.first_failing_pair(n, elems)


def class_adjacency(vecs, alphas) -> np.ndarray:
    return _IMPL.class_adjacency(vecs, alphas)


def max_clique(adj) -> tuple[int, list[int]]:
    return _IMPL.max_clique(adj)


def max_weight_clique(adj, weights, conflict_masks=None) -> tuple[int, list[int]]:
    return _IMPL.max_weight_clique(adj, weights, conflict_masks)


def warmup() -> None:
    _IMPL.warmup()
