"""Kernel selection for the automorphism backtracking search.

The search is the one hot fixed-width loop in the package (degree <= 45, so
point sets and block sets fit in uint64 masks).  Two implementations ship:
a numba @njit kernel and a pure numpy fallback.  Selection is by the
environment variable DESIGNFORGE_KERNEL:

    auto    use numba when importable, else numpy (default)
    numba   require the numba kernel
    python  force the numpy fallback

Both return the same automorphism list in the same order.
"""

import os

from .autsearch_py import search_automorphisms_py

__all__ = ["get_search_kernel", "kernel_name", "search_automorphisms_py"]


def _load_numba_kernel():
    from .autsearch_nb import search_automorphisms_nb

    return search_automorphisms_nb


def kernel_name() -> str:
    mode = os.environ.get("DESIGNFORGE_KERNEL", "auto").lower()
    if mode not in ("auto", "numba", "python"):
        raise ValueError(f"DESIGNFORGE_KERNEL must be auto|numba|python, got {mode!r}")
    if mode == "python":
        return "python"
    if mode == "numba":
        _load_numba_kernel()
        return "numba"
    try:
        _load_numba_kernel()
        return "numba"
    except ImportError:
        return "python"


def get_search_kernel():
    if kernel_name() == "numba":
        return _load_numba_kernel()
    return search_automorphisms_py
